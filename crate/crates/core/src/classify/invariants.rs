//! Cross-ratio invariants of cubics with four ramification points.

use crate::error::{Error, Result};
use crate::field::{Fel, Field};
use crate::moebius::cross_ratio;
use crate::ramify::Ramification;
use crate::ratexpr::ProjPoint;

use super::families::mu_sum_half;

/// `λ` is the least value in its orbit under reordering; `μ` is the least
/// branch cross-ratio among the orderings that realize that `λ`. Both live in
/// `F_{q^ext_degree}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourPointInvariants {
    pub ext_degree: u32,
    pub lambda: Fel,
    pub mu: Fel,
    /// The other root of the quadratic relating `λ` and `μ` (characteristic ≥ 5).
    pub mu_alt: Option<Fel>,
    /// Defining degrees of the four ramification points, increasing.
    pub pattern: Vec<u32>,
}

/// The cross-ratios of ramification and branch points in the profile's
/// own point order.
pub fn ordered_cross_ratios(ram: &Ramification) -> Result<(Fel, Fel)> {
    let pts = four_points(ram)?;
    let lam = cross_ratio(&ram.field, pts.map(|p| p.0))?;
    let mu = cross_ratio(&ram.field, pts.map(|p| p.1))?;
    Ok((finite(lam)?, finite(mu)?))
}

fn finite(p: ProjPoint) -> Result<Fel> {
    p.finite().ok_or_else(|| Error::Internal("infinite cross-ratio of distinct points".into()))
}

fn four_points(ram: &Ramification) -> Result<[(ProjPoint, ProjPoint); 4]> {
    if ram.points.len() != 4 || ram.points.iter().any(|p| p.index != 2) {
        return Err(Error::InvalidParameter("expected four ramification points of index 2".into()));
    }
    let p = &ram.points;
    Ok([0, 1, 2, 3].map(|i| (p[i].point, p[i].branch)))
}

const PERMUTATIONS: [[usize; 4]; 24] = {
    let mut out = [[0; 4]; 24];
    let mut n = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && a != c && b != c && a + b + c <= 6 {
                    let d = 6 - a - b - c;
                    if d != a && d != b && d != c {
                        out[n] = [a, b, c, d];
                        n += 1;
                    }
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

pub fn four_point_invariants(f: &Field, ram: &Ramification) -> Result<FourPointInvariants> {
    let pts = four_points(ram)?;
    let field = &ram.field;
    let mut best: Option<(Fel, Fel)> = None;
    for perm in PERMUTATIONS {
        let ordered = perm.map(|i| pts[i]);
        let lam = finite(cross_ratio(field, ordered.map(|p| p.0))?)?;
        let mu = finite(cross_ratio(field, ordered.map(|p| p.1))?)?;
        if best.is_none_or(|b| (lam, mu) < b) {
            best = Some((lam, mu));
        }
    }
    let (lambda, mu) = best.expect("24 orderings");
    let mu_alt = (f.p() >= 5).then(|| field.sub(mu_sum_half(field, lambda), mu));
    Ok(FourPointInvariants { ext_degree: field.n() / f.n(), lambda, mu, mu_alt, pattern: ram.pattern() })
}
