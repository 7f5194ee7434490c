//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored in ascending degree order and the vector never
//! ends in a zero, so the zero polynomial is the empty vector and has no
//! degree (`None`). Operations take the field explicitly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config;
use crate::error::{Error, Result};
use crate::field::{prime_factors, Embedding, Fel, Field};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Fel>,
}

/// How roots in a target field are located.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootStrategy {
    /// Scan when the target is small enough, split otherwise.
    Auto,
    Scan,
    Split {
        seed: u64,
    },
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fel) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    pub fn x() -> Poly {
        Poly { coeffs: vec![Fel::ZERO, Fel::ONE] }
    }

    /// `c * x^k`
    pub fn monomial(c: Fel, k: usize) -> Poly {
        let mut coeffs = vec![Fel::ZERO; k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Fel>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Fel] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fel {
        self.coeffs.get(i).copied().unwrap_or(Fel::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as 0; only for size bounds.
    pub(crate) fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Fel::ONE]
    }

    pub fn lead(&self) -> Option<Fel> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn scale(&self, f: &Field, c: Fel) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect() }
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fel::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, f: &Field, e: usize) -> Poly {
        (0..e).fold(Poly::constant(Fel::ONE), |acc, _| acc.mul(f, self))
    }

    /// Quotient and remainder, `deg r < deg divisor`.
    pub fn divmod(&self, f: &Field, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Fel::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul(rem[k], inv_lead);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] = f.sub(rem[k - dd + i], f.mul(c, d));
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, f: &Field, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(f, divisor)?.1)
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn div_exact(&self, f: &Field, divisor: &Poly) -> Poly {
        let (q, r) = self.divmod(f, divisor).expect("nonzero divisor");
        debug_assert!(r.is_zero());
        q
    }

    pub fn monic(&self, f: &Field) -> Poly {
        match self.lead() {
            Some(l) if l != Fel::ONE => self.scale(f, f.inv(l).expect("nonzero lead")),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd_monic(f: &Field, a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPolynomial("gcd"));
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.rem(f, &y)?;
            x = y;
            y = r;
        }
        Ok(x.monic(f))
    }

    pub fn derivative(&self, f: &Field) -> Poly {
        Poly::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| f.mul(f.from_int(i as i64), c)).collect(),
        )
    }

    pub fn eval(&self, f: &Field, x: Fel) -> Fel {
        self.coeffs.iter().rev().fold(Fel::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn embed(&self, emb: &Embedding) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| emb.apply(c)).collect() }
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, f: &Field, mut e: u64, m: &Poly) -> Result<Poly> {
        let mut base = self.rem(f, m)?;
        let mut acc = Poly::constant(Fel::ONE).rem(f, m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m)?;
            }
            base = base.mul(f, &base).rem(f, m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Rabin's test over `f`.
    pub fn is_irreducible(&self, f: &Field) -> bool {
        let n = match self.degree() {
            Some(0) | None => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let q = f.order() as u64;
        let m = self.monic(f);
        let x = Poly::x();
        let frob_power =
            |k: usize| -> Poly { (0..k).fold(x.clone(), |acc, _| acc.pow_mod(f, q, &m).expect("nonzero modulus")) };
        if frob_power(n) != x.rem(f, &m).expect("nonzero modulus") {
            return false;
        }
        prime_factors(n as u64).into_iter().all(|l| {
            let h = frob_power(n / l as usize).sub(f, &x);
            Poly::gcd_monic(f, &h, &m).map(|g| g.is_one()).unwrap_or(false)
        })
    }

    fn pth_root(&self, f: &Field) -> Poly {
        let p = f.p() as usize;
        let e = f.order() as u64 / f.p() as u64;
        Poly::from_coeffs(self.coeffs.iter().step_by(p).map(|&c| f.pow(c, e)).collect())
    }

    /// Square-free pieces `(g, m)` with `self = lead * prod g^m`, valid in
    /// every characteristic.
    pub fn squarefree_decomposition(&self, f: &Field) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("square-free decomposition"));
        }
        let a = self.monic(f);
        let mut out = Vec::new();
        if a.degree() == Some(0) {
            return Ok(out);
        }
        let p = f.p() as usize;
        let d = a.derivative(f);
        if d.is_zero() {
            for (g, m) in a.pth_root(f).squarefree_decomposition(f)? {
                out.push((g, m * p));
            }
            return Ok(out);
        }
        let mut c = Poly::gcd_monic(f, &a, &d)?;
        let mut w = a.div_exact(f, &c);
        let mut i = 1;
        while w.degree_or_zero() > 0 {
            let y = Poly::gcd_monic(f, &w, &c)?;
            let z = w.div_exact(f, &y);
            if z.degree_or_zero() > 0 {
                out.push((z, i));
            }
            i += 1;
            c = c.div_exact(f, &y);
            w = y;
        }
        if c.degree_or_zero() > 0 {
            for (g, m) in c.pth_root(f).squarefree_decomposition(f)? {
                out.push((g, m * p));
            }
        }
        Ok(out)
    }

    /// Distinct-degree split of a monic square-free polynomial: pairs
    /// `(d, product of all irreducible factors of degree d)`.
    fn distinct_degree(&self, f: &Field) -> Result<Vec<(usize, Poly)>> {
        let q = f.order() as u64;
        let x = Poly::x();
        let mut rest = self.clone();
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut d = 1;
        while rest.degree_or_zero() >= 2 * d {
            h = h.pow_mod(f, q, &rest)?;
            let g = Poly::gcd_monic(f, &h.sub(f, &x), &rest)?;
            if !g.is_one() {
                rest = rest.div_exact(f, &g);
                h = h.rem(f, &rest)?;
                out.push((d, g));
            }
            d += 1;
        }
        if rest.degree_or_zero() > 0 {
            out.push((rest.degree_or_zero(), rest));
        }
        Ok(out)
    }

    /// Degrees of the monic irreducible factors, counted with multiplicity,
    /// as sorted `(degree, count)` pairs.
    pub fn factor_degree_pattern(&self, f: &Field) -> Result<Vec<(usize, usize)>> {
        let mut counts = std::collections::BTreeMap::new();
        for (g, m) in self.squarefree_decomposition(f)? {
            for (d, prod) in g.distinct_degree(f)? {
                *counts.entry(d).or_insert(0) += m * prod.degree_or_zero() / d;
            }
        }
        Ok(counts.into_iter().collect())
    }

    /// Multiplicity of `root` by repeated exact division.
    pub fn multiplicity(&self, f: &Field, root: Fel) -> usize {
        let lin = Poly::from_coeffs(vec![f.neg(root), Fel::ONE]);
        let mut cur = self.clone();
        let mut m = 0;
        while !cur.is_zero() {
            let (q, r) = cur.divmod(f, &lin).expect("linear divisor");
            if !r.is_zero() {
                break;
            }
            cur = q;
            m += 1;
        }
        m
    }

    /// Sorted distinct roots lying in `f` (the polynomial is over `f`).
    pub fn distinct_roots(&self, f: &Field) -> Result<Vec<Fel>> {
        self.distinct_roots_with(f, RootStrategy::Auto)
    }

    pub fn distinct_roots_with(&self, f: &Field, strategy: RootStrategy) -> Result<Vec<Fel>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("roots"));
        }
        let strategy = match strategy {
            RootStrategy::Auto if f.order() as u64 <= config::SCAN_LIMIT => RootStrategy::Scan,
            RootStrategy::Auto => RootStrategy::Split { seed: config::split_seed() },
            s => s,
        };
        let mut roots = match strategy {
            RootStrategy::Scan => f.elements().filter(|&a| self.eval(f, a).is_zero()).collect(),
            RootStrategy::Split { seed } => {
                let m = self.monic(f);
                let q = f.order() as u64;
                let linear_part = Poly::x().pow_mod(f, q, &m)?.sub(f, &Poly::x());
                let g = Poly::gcd_monic(f, &linear_part, &m)?;
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut out = Vec::new();
                split_linear(f, &g, &mut rng, &mut out)?;
                out
            }
            RootStrategy::Auto => unreachable!(),
        };
        roots.sort();
        Ok(roots)
    }

    /// Roots of the image of `self` in `emb.target()`, with multiplicities.
    pub fn roots_in(&self, emb: &Embedding) -> Result<Vec<(Fel, usize)>> {
        self.roots_in_with(emb, RootStrategy::Auto)
    }

    pub fn roots_in_with(&self, emb: &Embedding, strategy: RootStrategy) -> Result<Vec<(Fel, usize)>> {
        let target = emb.target();
        let image = self.embed(emb);
        Ok(image
            .distinct_roots_with(target, strategy)?
            .into_iter()
            .map(|r| (r, image.multiplicity(target, r)))
            .collect())
    }
}

impl Poly {
    /// Text form in `var`, highest degree first: `x^3 + 2*x + 1`.
    /// Coefficients with more than one term are parenthesized.
    pub fn format(&self, f: &Field, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| {
                let mut lit = f.format_elem(c);
                if i == 0 {
                    return if lit.contains('+') { format!("({lit})") } else { lit };
                }
                let power = if i == 1 { var.to_string() } else { format!("{var}^{i}") };
                if c == Fel::ONE {
                    return power;
                }
                if lit.contains('+') {
                    lit = format!("({lit})");
                }
                format!("{lit}*{power}")
            })
            .collect();
        terms.join(" + ")
    }
}

/// Equal-degree splitting of a monic product of distinct linear factors.
fn split_linear(f: &Field, g: &Poly, rng: &mut ChaCha8Rng, out: &mut Vec<Fel>) -> Result<()> {
    match g.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            out.push(f.neg(f.div(g.coeff(0), g.coeff(1))?));
            return Ok(());
        }
        _ => {}
    }
    let q = f.order() as u64;
    let bits = 63 - q.leading_zeros();
    loop {
        let gamma = f.elem(rng.gen_range(1..f.order()))?;
        let delta = f.elem(rng.gen_range(0..f.order()))?;
        let r = Poly::from_coeffs(vec![delta, gamma]);
        let h = if f.p() == 2 {
            // absolute trace of r modulo g
            let mut t = r.rem(f, g)?;
            let mut acc = t.clone();
            for _ in 1..bits {
                t = t.mul(f, &t).rem(f, g)?;
                acc = acc.add(f, &t);
            }
            acc
        } else {
            r.pow_mod(f, (q - 1) / 2, g)?.sub(f, &Poly::constant(Fel::ONE))
        };
        if h.is_zero() {
            continue;
        }
        let d = Poly::gcd_monic(f, &h, g)?;
        if d.degree_or_zero() > 0 && d.degree() < g.degree() {
            let rest = g.div_exact(f, &d);
            split_linear(f, &d, rng, out)?;
            return split_linear(f, &rest, rng, out);
        }
    }
}
