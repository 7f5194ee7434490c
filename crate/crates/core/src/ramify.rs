//! Ramification points, indices and branch points over a splitting extension.

use crate::error::{Error, Result};
use crate::field::{Embedding, Fel, Field};
use crate::moebius::Moebius;
use crate::ratexpr::{ProjPoint, RatExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RamPoint {
    /// Over the extension field of the enclosing [`Ramification`].
    pub point: ProjPoint,
    pub index: usize,
    pub branch: ProjPoint,
    /// Degree over the base field of the smallest field containing `point`.
    pub defining_degree: u32,
}

/// Ramification data realized inside `field`, an extension of the base.
#[derive(Clone, Debug)]
pub struct Ramification {
    pub field: Field,
    pub embedding: Embedding,
    /// Sorted by `(defining_degree, point)`.
    pub points: Vec<RamPoint>,
}

impl Ramification {
    /// Indices in decreasing order.
    pub fn indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.points.iter().map(|p| p.index).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Defining degrees of the points, increasing.
    pub fn pattern(&self) -> Vec<u32> {
        self.points.iter().map(|p| p.defining_degree).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.points.iter().all(|p| p.defining_degree == 1)
    }
}

#[derive(Clone, Debug)]
pub enum RamProfile {
    /// `R` is a function of `x^p`; every point is ramified.
    Inseparable {
        degree: usize,
    },
    Separable(Ramification),
}

impl RamProfile {
    pub fn separable(&self) -> Option<&Ramification> {
        match self {
            RamProfile::Separable(r) => Some(r),
            RamProfile::Inseparable { .. } => None,
        }
    }
}

/// Moves `p` to 0: `x ↦ x + p`, or `x ↦ 1/x` for infinity.
fn to_zero_source(f: &Field, p: ProjPoint) -> Moebius {
    match p {
        ProjPoint::Infinity => Moebius::new(f, Fel::ZERO, Fel::ONE, Fel::ONE, Fel::ZERO),
        ProjPoint::Finite(a) => Moebius::new(f, Fel::ONE, a, Fel::ZERO, Fel::ONE),
    }
    .expect("invertible")
}

/// Moves `q` to 0: `y ↦ y - q`, or `y ↦ 1/y` for infinity.
fn to_zero_target(f: &Field, q: ProjPoint) -> Moebius {
    match q {
        ProjPoint::Infinity => Moebius::new(f, Fel::ZERO, Fel::ONE, Fel::ONE, Fel::ZERO),
        ProjPoint::Finite(a) => Moebius::new(f, Fel::ONE, f.neg(a), Fel::ZERO, Fel::ONE),
    }
    .expect("invertible")
}

/// Ramification index of `r` at `p`: the vanishing order at 0 of the
/// numerator after moving `p` and `r(p)` to 0.
pub fn index_at(f: &Field, r: &RatExpr, p: ProjPoint) -> usize {
    let moved = to_zero_target(f, r.eval(f, p)).compose_left(f, &to_zero_source(f, p).compose_right(f, r));
    moved.num().coeffs().iter().take_while(|c| c.is_zero()).count()
}

/// Ramification index as a root multiplicity of `g - R(P) h` (or of `h`),
/// with infinity read off from degrees.
pub fn index_by_multiplicity(f: &Field, r: &RatExpr, p: ProjPoint) -> usize {
    let d = r.degree();
    let branch = r.eval(f, p);
    let fiber = match branch {
        ProjPoint::Infinity => r.den().clone(),
        ProjPoint::Finite(v) => r.num().sub(f, &r.den().scale(f, v)),
    };
    match p {
        ProjPoint::Finite(a) => fiber.multiplicity(f, a),
        ProjPoint::Infinity => d - fiber.degree_or_zero(),
    }
}

pub fn is_separable(f: &Field, r: &RatExpr) -> bool {
    r.is_separable(f)
}

/// Ramification of a quadratic or cubic expression over the algebraic
/// closure, realized in the smallest extension splitting `g'h - gh'`.
pub fn ramification_profile(f: &Field, r: &RatExpr) -> Result<RamProfile> {
    let deg = r.degree();
    if !(2..=3).contains(&deg) {
        return Err(Error::UnsupportedDegree(deg));
    }
    profile_any_degree(f, r)
}

pub(crate) fn profile_any_degree(f: &Field, r: &RatExpr) -> Result<RamProfile> {
    let deg = r.degree();
    let w = r.derivative_numerator(f);
    if w.is_zero() {
        return Ok(RamProfile::Inseparable { degree: deg });
    }
    let ext_degree = w.factor_degree_pattern(f)?.iter().fold(1u32, |acc, &(d, _)| lcm(acc, d as u32));
    let (field, embedding) = f.extend(ext_degree)?;
    let big = r.embed(&embedding);
    let mut candidates: Vec<ProjPoint> =
        w.embed(&embedding).distinct_roots(&field)?.into_iter().map(ProjPoint::Finite).collect();
    candidates.push(ProjPoint::Infinity);
    let mut points: Vec<RamPoint> = candidates
        .into_iter()
        .filter_map(|p| {
            let index = index_at(&field, &big, p);
            (index >= 2).then(|| RamPoint {
                point: p,
                index,
                branch: big.eval(&field, p),
                defining_degree: match p {
                    ProjPoint::Infinity => 1,
                    ProjPoint::Finite(a) => field.degree_over(a, f),
                },
            })
        })
        .collect();
    points.sort_by_key(|p| (p.defining_degree, p.point));
    Ok(RamProfile::Separable(Ramification { field, embedding, points }))
}

fn lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// Points of `r^{-1}(v)` lying over `f`, with multiplicities.
pub fn fiber(f: &Field, r: &RatExpr, v: ProjPoint) -> Vec<(ProjPoint, usize)> {
    ProjPoint::all(f).filter(|&p| r.eval(f, p) == v).map(|p| (p, index_at(f, r, p))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HurwitzVerdict {
    Equality,
    Strict,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzReport {
    pub verdict: HurwitzVerdict,
    /// `2 deg R - 2`
    pub lhs: usize,
    /// `Σ (e - 1)`
    pub rhs: usize,
    /// No index divisible by the characteristic.
    pub tame: bool,
    /// Whether `tame` agrees with the equality verdict.
    pub consistent: bool,
}

pub fn hurwitz_check(f: &Field, r: &RatExpr) -> Result<HurwitzReport> {
    let ram = match profile_any_degree(f, r)? {
        RamProfile::Inseparable { .. } => return Err(Error::Inseparable),
        RamProfile::Separable(ram) => ram,
    };
    let lhs = 2 * r.degree() - 2;
    let rhs: usize = ram.points.iter().map(|p| p.index - 1).sum();
    let verdict = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Equal => HurwitzVerdict::Equality,
        std::cmp::Ordering::Greater => HurwitzVerdict::Strict,
        std::cmp::Ordering::Less => HurwitzVerdict::Violated,
    };
    let p = f.p() as usize;
    let tame = ram.points.iter().all(|pt| pt.index % p != 0);
    let consistent = tame == (verdict == HurwitzVerdict::Equality);
    Ok(HurwitzReport { verdict, lhs, rhs, tame, consistent })
}
