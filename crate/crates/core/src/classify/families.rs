//! Parametric families and the cross-ratio formulas attached to them.

use crate::error::{Error, Result};
use crate::field::{Fel, Field};
use crate::poly::Poly;
use crate::ratexpr::{ProjPoint, RatExpr};

/// `x^r`, or with `twist` the binomial-sum form whose two ramification
/// points are the square roots of the canonical nonsquare.
pub fn canonical_two_point(f: &Field, r: usize, twist: bool) -> Result<RatExpr> {
    let p = f.p() as usize;
    if p == 2 {
        return Err(Error::Characteristic("odd characteristic"));
    }
    if r == 0 || r.is_multiple_of(p) {
        return Err(Error::InvalidParameter(format!("characteristic {p} divides degree {r}")));
    }
    if !twist {
        return Ok(RatExpr::from_poly(Poly::monomial(Fel::ONE, r)));
    }
    let sigma = f.canonical_sigma();
    // binomial row r in the field
    let mut row = vec![Fel::ONE];
    for _ in 0..r {
        let mut next = vec![Fel::ONE; row.len() + 1];
        for i in 1..row.len() {
            next[i] = f.add(row[i - 1], row[i]);
        }
        row = next;
    }
    let mut num = vec![Fel::ZERO; r + 1];
    let mut den = vec![Fel::ZERO; r];
    for (k, &binom) in row.iter().enumerate() {
        let s = f.pow(sigma, (k / 2) as u64);
        if k % 2 == 0 {
            num[r - k] = f.mul(binom, s);
        } else {
            den[r - k] = f.mul(binom, s);
        }
    }
    RatExpr::new(f, Poly::from_coeffs(num), Poly::from_coeffs(den))
}

/// The one-parameter family with four ramification points, in the form
/// suited to the characteristic.
pub fn family_rc(f: &Field, c: Fel) -> Result<RatExpr> {
    let one = Fel::ONE;
    let (num, den) = match f.p() {
        2 => {
            if f.in_prime_field(c) {
                return Err(Error::InvalidParameter("c must lie outside F_2".into()));
            }
            (vec![Fel::ZERO, Fel::ZERO, c, one], vec![one, one])
        }
        3 => {
            if f.in_prime_field(c) {
                return Err(Error::InvalidParameter("c must lie outside F_3".into()));
            }
            let c1 = f.add(c, one);
            (vec![Fel::ZERO, Fel::ZERO, c1, one], vec![f.neg(c), f.neg(c1)])
        }
        _ => {
            if c.is_zero() || c == one {
                return Err(Error::InvalidParameter("c must differ from 0 and 1".into()));
            }
            let two = f.from_int(2);
            (vec![Fel::ZERO, Fel::ZERO, f.sub(c, two), one], vec![f.neg(c), f.sub(f.mul(two, c), one)])
        }
    };
    RatExpr::new(f, Poly::from_coeffs(num), Poly::from_coeffs(den))
}

fn require_large_char(f: &Field) -> Result<()> {
    if f.p() < 5 {
        return Err(Error::Characteristic("characteristic at least 5"));
    }
    Ok(())
}

/// Cross-ratios `(λ, μ)` of the ramification and branch points of
/// `family_rc(c)`, ordered as `∞, 0, 1, λ`.
pub fn lambda_mu_of_c(f: &Field, c: Fel) -> Result<(ProjPoint, ProjPoint)> {
    require_large_char(f)?;
    if c.is_zero() || c == Fel::ONE {
        return Err(Error::InvalidParameter("c must differ from 0 and 1".into()));
    }
    let two = f.from_int(2);
    let cm2 = f.sub(c, two);
    let d = f.sub(f.mul(two, c), Fel::ONE);
    if d.is_zero() {
        return Ok((ProjPoint::Infinity, ProjPoint::Infinity));
    }
    let lambda = f.neg(f.div(f.mul(c, cm2), d)?);
    let mu = f.neg(f.div(f.mul(c, f.pow(cm2, 3)), f.pow(d, 3))?);
    Ok((ProjPoint::Finite(lambda), ProjPoint::Finite(mu)))
}

/// `μ² - 2λμ(2λ² - 3λ + 2) + λ⁴ = 0`.
pub fn lambda_mu_relation(f: &Field, lambda: ProjPoint, mu: ProjPoint) -> Result<bool> {
    require_large_char(f)?;
    let (l, m) = match (lambda, mu) {
        (ProjPoint::Finite(l), ProjPoint::Finite(m)) if !l.is_zero() && l != Fel::ONE => (l, m),
        _ => return Err(Error::InvalidParameter("lambda must avoid 0, 1 and infinity".into())),
    };
    Ok(f.add(f.sub(f.square(m), f.mul(m, mu_sum_half(f, l))), f.pow(l, 4)).is_zero())
}

/// `2λ(2λ² - 3λ + 2)`, the sum of the two roots in `μ`.
pub(crate) fn mu_sum_half(f: &Field, l: Fel) -> Fel {
    let poly = f.add(f.sub(f.mul(f.from_int(2), f.square(l)), f.mul(f.from_int(3), l)), f.from_int(2));
    f.mul(f.mul(f.from_int(2), l), poly)
}
