//! Rational expressions `g/h` in lowest terms.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Embedding, Fel, Field};
use crate::poly::Poly;

/// A point of the projective line. `Infinity` sorts before every finite point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    Infinity,
    Finite(Fel),
}

impl ProjPoint {
    pub fn embed(self, emb: &Embedding) -> ProjPoint {
        match self {
            ProjPoint::Infinity => ProjPoint::Infinity,
            ProjPoint::Finite(a) => ProjPoint::Finite(emb.apply(a)),
        }
    }

    pub fn descend(self, emb: &Embedding) -> Option<ProjPoint> {
        match self {
            ProjPoint::Infinity => Some(ProjPoint::Infinity),
            ProjPoint::Finite(a) => emb.preimage(a).map(ProjPoint::Finite),
        }
    }

    pub fn finite(self) -> Option<Fel> {
        match self {
            ProjPoint::Infinity => None,
            ProjPoint::Finite(a) => Some(a),
        }
    }

    /// `P^q` coordinatewise; `Infinity` is fixed.
    pub fn frobenius(self, f: &Field, base: u64) -> Result<ProjPoint> {
        Ok(match self {
            ProjPoint::Infinity => ProjPoint::Infinity,
            ProjPoint::Finite(a) => ProjPoint::Finite(f.frobenius(a, base, 1)?),
        })
    }

    pub fn format(self, f: &Field) -> String {
        match self {
            ProjPoint::Infinity => "inf".to_string(),
            ProjPoint::Finite(a) => f.format_elem(a),
        }
    }

    /// All points of the projective line over `f`, `Infinity` first.
    pub fn all(f: &Field) -> impl Iterator<Item = ProjPoint> + '_ {
        std::iter::once(ProjPoint::Infinity).chain(f.elements().map(ProjPoint::Finite))
    }
}

/// `num/den` with `gcd = 1` and `den` monic. The representation is unique
/// per function; the numerator is never rescaled.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatExpr {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatExpr {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "RatExpr({:?} / {:?})", self.num.coeffs(), self.den.coeffs())
    }
}

impl RatExpr {
    pub fn new(f: &Field, num: Poly, den: Poly) -> Result<RatExpr> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatExpr { num, den: Poly::constant(Fel::ONE) });
        }
        let g = Poly::gcd_monic(f, &num, &den)?;
        let (num, den) = if g.is_one() { (num, den) } else { (num.divmod(f, &g)?.0, den.divmod(f, &g)?.0) };
        Ok(RatExpr::scaled(f, num, den))
    }

    /// Normalizes the scalar only; the caller knows `num` and `den` are coprime.
    pub(crate) fn scaled(f: &Field, num: Poly, den: Poly) -> RatExpr {
        let l = den.lead().expect("nonzero denominator");
        if l == Fel::ONE {
            return RatExpr { num, den };
        }
        let s = f.inv(l).expect("nonzero lead");
        RatExpr { num: num.scale(f, s), den: den.scale(f, s) }
    }

    pub fn from_poly(p: Poly) -> RatExpr {
        RatExpr { num: p, den: Poly::constant(Fel::ONE) }
    }

    pub fn x() -> RatExpr {
        RatExpr::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.degree_or_zero().max(self.den.degree_or_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn eval(&self, f: &Field, p: ProjPoint) -> ProjPoint {
        match p {
            ProjPoint::Finite(a) => {
                let d = self.den.eval(f, a);
                if d.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(f.div(self.num.eval(f, a), d).expect("nonzero"))
                }
            }
            ProjPoint::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.degree_or_zero();
                match dn {
                    None => ProjPoint::Finite(Fel::ZERO),
                    Some(n) if n > dd => ProjPoint::Infinity,
                    Some(n) if n < dd => ProjPoint::Finite(Fel::ZERO),
                    Some(_) => {
                        ProjPoint::Finite(f.div(self.num.lead().unwrap(), self.den.lead().unwrap()).expect("nonzero"))
                    }
                }
            }
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, f: &Field, inner: &RatExpr) -> Result<RatExpr> {
        if self.is_constant() || inner.is_constant() {
            return Err(Error::ConstantExpression);
        }
        let (num, den) = self.homogeneous_substitute(f, &inner.num, &inner.den);
        RatExpr::new(f, num, den)
    }

    /// `(Σ g_i u^i v^(r-i), Σ h_i u^i v^(r-i))` with `r = deg self`.
    pub(crate) fn homogeneous_substitute(&self, f: &Field, u: &Poly, v: &Poly) -> (Poly, Poly) {
        let r = self.degree();
        let mut upow = vec![Poly::constant(Fel::ONE)];
        let mut vpow = vec![Poly::constant(Fel::ONE)];
        for i in 1..=r {
            upow.push(upow[i - 1].mul(f, u));
            vpow.push(vpow[i - 1].mul(f, v));
        }
        let sub = |p: &Poly| {
            p.coeffs().iter().enumerate().fold(Poly::zero(), |acc, (i, &c)| {
                if c.is_zero() {
                    acc
                } else {
                    acc.add(f, &upow[i].mul(f, &vpow[r - i]).scale(f, c))
                }
            })
        };
        (sub(&self.num), sub(&self.den))
    }

    pub fn embed(&self, emb: &Embedding) -> RatExpr {
        RatExpr { num: self.num.embed(emb), den: self.den.embed(emb) }
    }

    /// The expression over the subfield, when all coefficients lie in it.
    pub fn descend(&self, emb: &Embedding) -> Option<RatExpr> {
        let down = |p: &Poly| -> Option<Poly> {
            p.coeffs().iter().map(|&c| emb.preimage(c)).collect::<Option<Vec<_>>>().map(Poly::from_coeffs)
        };
        Some(RatExpr { num: down(&self.num)?, den: down(&self.den)? })
    }

    /// Numerator of the derivative, `g'h - gh'`.
    pub fn derivative_numerator(&self, f: &Field) -> Poly {
        self.num.derivative(f).mul(f, &self.den).sub(f, &self.num.mul(f, &self.den.derivative(f)))
    }

    pub fn is_separable(&self, f: &Field) -> bool {
        !self.derivative_numerator(f).is_zero()
    }

    /// Canonical text: `x^3 + 4*x`, `(x^3 + 1)/x`.
    pub fn format(&self, f: &Field) -> String {
        let num = self.num.format(f, "x");
        if self.den.is_one() {
            return num;
        }
        let wrap = |s: String, p: &Poly| {
            let single = p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
            if single && !s.contains('*') && !s.contains('(') {
                s
            } else {
                format!("({s})")
            }
        };
        let den = wrap(self.den.format(f, "x"), &self.den);
        let num = if self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 { format!("({num})") } else { num };
        format!("{num}/{den}")
    }
}
