//! Equivalence classes of quadratic and cubic expressions under
//! `R ↦ B∘R∘A⁻¹`, with canonical representatives and explicit witnesses.

mod families;
mod invariants;
mod oracle;
pub(crate) mod witness;

pub use families::{canonical_two_point, family_rc, lambda_mu_of_c, lambda_mu_relation};
pub use invariants::{four_point_invariants, ordered_cross_ratios, FourPointInvariants};
pub use oracle::{are_equivalent, are_equivalent_with_limit};
pub use witness::find_witness;

use crate::error::{Error, Result};
use crate::field::{Fel, Field};
use crate::moebius::{cross_ratio, three_point_map, Moebius, PairAction};
use crate::poly::Poly;
use crate::ramify::{profile_any_degree, RamProfile, Ramification};
use crate::ratexpr::{ProjPoint, RatExpr};

use witness::fiber_points;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// `x^2`, odd characteristic, rational ramification points.
    QuadX2,
    /// `(x^2 + σ)/(2x)`, conjugate ramification points.
    QuadTwist,
    /// `x^2` in characteristic 2.
    QuadX2Insep,
    /// `(x^2 + 1)/x` in characteristic 2.
    QuadSepChar2,
    CubicX3,
    /// `(x^3 + 3σx)/(3x^2 + σ)`
    CubicTwist,
    /// `x^3 - 3x`
    CubicDickson,
    /// `x^3 - 3σx`
    CubicDicksonTwist,
    /// `x^3` in characteristic 3.
    Char3Insep,
    Char3X3X2,
    Char3X3X,
    Char3X3SigmaX,
    Char2X3,
    /// `(x^3 + σx + σ)/(x^2 + x + σ + 1)`
    Char2Twist,
    Char2X3X2,
    /// `(x^3 + θ^k)/x`
    Char2OnePoint {
        k: u8,
    },
    /// `(x^3 + c)/(x + c)`
    Char2Split {
        c: Fel,
    },
    /// `(x^3 + bx^2 + σx + (b+1)σ)/(x^2 + x + b + 1 + σ)`
    Char2Conjugate {
        b: Fel,
    },
    FourPoint(FourPointInvariants),
}

impl ClassLabel {
    pub fn case_name(&self) -> &'static str {
        match self {
            ClassLabel::QuadX2 => "quad-x2",
            ClassLabel::QuadTwist => "quad-twist",
            ClassLabel::QuadX2Insep => "quad-x2-insep",
            ClassLabel::QuadSepChar2 => "quad-sep-char2",
            ClassLabel::CubicX3 => "cubic-x3",
            ClassLabel::CubicTwist => "cubic-twist",
            ClassLabel::CubicDickson => "cubic-dickson",
            ClassLabel::CubicDicksonTwist => "cubic-dickson-twist",
            ClassLabel::Char3Insep => "char3-insep",
            ClassLabel::Char3X3X2 => "char3-x3x2",
            ClassLabel::Char3X3X => "char3-x3x",
            ClassLabel::Char3X3SigmaX => "char3-x3-sigma-x",
            ClassLabel::Char2X3 => "char2-x3",
            ClassLabel::Char2Twist => "char2-twist",
            ClassLabel::Char2X3X2 => "char2-x3x2",
            ClassLabel::Char2OnePoint { .. } => "char2-one-point",
            ClassLabel::Char2Split { .. } => "char2-split",
            ClassLabel::Char2Conjugate { .. } => "char2-conjugate",
            ClassLabel::FourPoint(_) => "four-point",
        }
    }

    /// Names of every case, for command-line lookup.
    pub const CASE_NAMES: [&'static str; 19] = [
        "quad-x2",
        "quad-twist",
        "quad-x2-insep",
        "quad-sep-char2",
        "cubic-x3",
        "cubic-twist",
        "cubic-dickson",
        "cubic-dickson-twist",
        "char3-insep",
        "char3-x3x2",
        "char3-x3x",
        "char3-x3-sigma-x",
        "char2-x3",
        "char2-twist",
        "char2-x3x2",
        "char2-one-point",
        "char2-split",
        "char2-conjugate",
        "four-point",
    ];
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub label: ClassLabel,
    /// `witness.act(R) == canonical_rep(label)`; absent for four-point classes.
    pub witness: Option<PairAction>,
    pub profile: RamProfile,
}

fn poly(coeffs: Vec<Fel>) -> Poly {
    Poly::from_coeffs(coeffs)
}

fn mono(k: usize) -> Poly {
    Poly::monomial(Fel::ONE, k)
}

fn expect_char(f: &Field, ok: bool, what: &'static str) -> Result<()> {
    let _ = f;
    if ok {
        Ok(())
    } else {
        Err(Error::Characteristic(what))
    }
}

/// The representative displayed for `label`, with the canonical σ and θ.
pub fn canonical_rep(f: &Field, label: &ClassLabel) -> Result<RatExpr> {
    use ClassLabel::*;
    let p = f.p();
    let (z, o) = (Fel::ZERO, Fel::ONE);
    let sigma = f.canonical_sigma();
    let from_poly = |coeffs: Vec<Fel>| Ok(RatExpr::from_poly(poly(coeffs)));
    match label {
        QuadX2 => {
            expect_char(f, p != 2, "odd characteristic")?;
            Ok(RatExpr::from_poly(mono(2)))
        }
        QuadTwist => {
            expect_char(f, p != 2, "odd characteristic")?;
            canonical_two_point(f, 2, true)
        }
        QuadX2Insep => {
            expect_char(f, p == 2, "characteristic 2")?;
            Ok(RatExpr::from_poly(mono(2)))
        }
        QuadSepChar2 => {
            expect_char(f, p == 2, "characteristic 2")?;
            RatExpr::new(f, poly(vec![o, z, o]), mono(1))
        }
        CubicX3 | CubicTwist | CubicDickson | CubicDicksonTwist => {
            expect_char(f, p >= 5, "characteristic at least 5")?;
            let m3 = f.from_int(-3);
            match label {
                CubicX3 => canonical_two_point(f, 3, false),
                CubicTwist => canonical_two_point(f, 3, true),
                CubicDickson => from_poly(vec![z, m3, z, o]),
                _ => from_poly(vec![z, f.mul(m3, sigma), z, o]),
            }
        }
        Char3Insep | Char3X3X2 | Char3X3X | Char3X3SigmaX => {
            expect_char(f, p == 3, "characteristic 3")?;
            match label {
                Char3Insep => from_poly(vec![z, z, z, o]),
                Char3X3X2 => from_poly(vec![z, z, o, o]),
                Char3X3X => from_poly(vec![z, o, z, o]),
                _ => from_poly(vec![z, sigma, z, o]),
            }
        }
        Char2X3 | Char2Twist | Char2X3X2 | Char2OnePoint { .. } | Char2Split { .. } | Char2Conjugate { .. } => {
            expect_char(f, p == 2, "characteristic 2")?;
            match *label {
                Char2X3 => from_poly(vec![z, z, z, o]),
                Char2Twist => RatExpr::new(f, poly(vec![sigma, sigma, z, o]), poly(vec![f.add(sigma, o), o, o])),
                Char2X3X2 => from_poly(vec![z, z, o, o]),
                Char2OnePoint { k } => {
                    if k > 2 {
                        return Err(Error::InvalidParameter(format!("k = {k} must be 0, 1 or 2")));
                    }
                    let c = if k == 0 { o } else { f.pow(f.canonical_theta()?, k as u64) };
                    RatExpr::new(f, poly(vec![c, z, z, o]), mono(1))
                }
                Char2Split { c } => {
                    check_outside_f2(f, c, "c")?;
                    RatExpr::new(f, poly(vec![c, z, z, o]), poly(vec![c, o]))
                }
                Char2Conjugate { b } => {
                    check_outside_f2(f, b, "b")?;
                    let b1 = f.add(b, o);
                    RatExpr::new(f, poly(vec![f.mul(b1, sigma), sigma, b, o]), poly(vec![f.add(b1, sigma), o, o]))
                }
                _ => unreachable!(),
            }
        }
        FourPoint(_) => Err(Error::NoCanonicalForm),
    }
}

fn check_outside_f2(f: &Field, v: Fel, name: &str) -> Result<()> {
    if v.code() >= f.order() {
        return Err(Error::BadElement(v.code()));
    }
    if f.in_prime_field(v) {
        return Err(Error::InvalidParameter(format!("{name} must lie outside F_2")));
    }
    Ok(())
}

pub fn classify(f: &Field, r: &RatExpr) -> Result<Classification> {
    match r.degree() {
        2 => classify_quadratic(f, r),
        3 => classify_cubic(f, r),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

/// The class label alone, without constructing a witness.
pub fn label_of(f: &Field, r: &RatExpr) -> Result<ClassLabel> {
    match r.degree() {
        2 => quadratic_label(f, r).map(|l| l.0),
        3 => cubic_label(f, r).map(|l| l.0),
        d => Err(Error::UnsupportedDegree(d)),
    }
}

pub fn classify_quadratic(f: &Field, r: &RatExpr) -> Result<Classification> {
    let (label, profile) = quadratic_label(f, r)?;
    finish(f, r, label, profile)
}

pub fn classify_cubic(f: &Field, r: &RatExpr) -> Result<Classification> {
    let (label, profile) = cubic_label(f, r)?;
    finish(f, r, label, profile)
}

fn quadratic_label(f: &Field, r: &RatExpr) -> Result<(ClassLabel, RamProfile)> {
    if r.degree() != 2 {
        return Err(Error::UnsupportedDegree(r.degree()));
    }
    let profile = profile_any_degree(f, r)?;
    let label = match &profile {
        RamProfile::Inseparable { .. } => ClassLabel::QuadX2Insep,
        RamProfile::Separable(_) if f.p() == 2 => ClassLabel::QuadSepChar2,
        RamProfile::Separable(ram) if ram.is_rational() => ClassLabel::QuadX2,
        RamProfile::Separable(_) => ClassLabel::QuadTwist,
    };
    Ok((label, profile))
}

fn cubic_label(f: &Field, r: &RatExpr) -> Result<(ClassLabel, RamProfile)> {
    if r.degree() != 3 {
        return Err(Error::UnsupportedDegree(r.degree()));
    }
    let profile = profile_any_degree(f, r)?;
    let ram = match &profile {
        RamProfile::Inseparable { .. } => return Ok((ClassLabel::Char3Insep, profile)),
        RamProfile::Separable(ram) => ram,
    };
    let indices = ram.indices();
    let unexpected = || Error::Internal(format!("unexpected ramification indices {indices:?}"));
    let label = match (f.p(), indices.as_slice()) {
        (_, [2, 2, 2, 2]) => ClassLabel::FourPoint(four_point_invariants(f, ram)?),
        (p, [3, 3]) if p >= 5 => {
            if ram.is_rational() {
                ClassLabel::CubicX3
            } else {
                ClassLabel::CubicTwist
            }
        }
        (p, [3, 2, 2]) if p >= 5 => {
            if ram.is_rational() {
                ClassLabel::CubicDickson
            } else {
                ClassLabel::CubicDicksonTwist
            }
        }
        (3, [3, 2]) => ClassLabel::Char3X3X2,
        (3, [3]) => char3_one_point(f, r, ram)?,
        (2, [3, 3]) => {
            if ram.is_rational() {
                ClassLabel::Char2X3
            } else {
                ClassLabel::Char2Twist
            }
        }
        (2, [3, 2]) => ClassLabel::Char2X3X2,
        (2, [2]) => char2_one_point(f, r, ram)?,
        (2, [2, 2]) => char2_two_points(f, r, ram)?,
        _ => return Err(unexpected()),
    };
    Ok((label, profile))
}

fn finish(f: &Field, r: &RatExpr, label: ClassLabel, profile: RamProfile) -> Result<Classification> {
    if matches!(label, ClassLabel::FourPoint(_)) {
        return Ok(Classification { label, witness: None, profile });
    }
    let target = canonical_rep(f, &label)?;
    let witness = find_witness(f, r, &target)?
        .ok_or_else(|| Error::Internal(format!("no witness for case {}", label.case_name())))?;
    if witness.act(f, r)? != target {
        return Err(Error::Internal("witness check failed".into()));
    }
    Ok(Classification { label, witness: Some(witness), profile })
}

fn rational(ram: &Ramification, p: ProjPoint) -> Result<ProjPoint> {
    p.descend(&ram.embedding).ok_or_else(|| Error::Internal("expected a rational point".into()))
}

/// Sends `∞ ↦ p`.
fn from_infinity(f: &Field, p: ProjPoint) -> Moebius {
    match p {
        ProjPoint::Infinity => Moebius::identity(),
        ProjPoint::Finite(a) => Moebius::new(f, a, Fel::ONE, Fel::ONE, Fel::ZERO).expect("invertible"),
    }
}

/// Sends `q ↦ ∞`.
fn to_infinity(f: &Field, q: ProjPoint) -> Moebius {
    match q {
        ProjPoint::Infinity => Moebius::identity(),
        ProjPoint::Finite(a) => Moebius::new(f, Fel::ZERO, Fel::ONE, Fel::ONE, f.neg(a)).expect("invertible"),
    }
}

/// Index-3 point moved to `∞` over `∞`: `a x^3 + c x + d`; the class is the
/// square class of `c/a`.
fn char3_one_point(f: &Field, r: &RatExpr, ram: &Ramification) -> Result<ClassLabel> {
    let p = rational(ram, ram.points[0].point)?;
    let q = r.eval(f, p);
    let s = to_infinity(f, q).compose_left(f, &from_infinity(f, p).compose_right(f, r));
    let g = s.num();
    if !s.den().is_one() || !g.coeff(2).is_zero() || g.coeff(1).is_zero() {
        return Err(Error::Internal("normal form is not x^3 + bx".into()));
    }
    let ratio = f.div(g.coeff(1), g.coeff(3))?;
    Ok(if f.is_square(ratio) { ClassLabel::Char3X3X } else { ClassLabel::Char3X3SigmaX })
}

/// The ramification point to `∞` over `∞` and the other preimage of `∞`
/// to 0: `(a x^3 + c x + d)/x`; the class is the cube class of `d/a`.
fn char2_one_point(f: &Field, r: &RatExpr, ram: &Ramification) -> Result<ClassLabel> {
    let p = rational(ram, ram.points[0].point)?;
    let q = r.eval(f, p);
    let others: Vec<ProjPoint> = fiber_points(f, r, q).into_iter().filter(|&x| x != p).collect();
    let [x] = others.as_slice() else {
        return Err(Error::Internal("expected one further preimage".into()));
    };
    let filler = ProjPoint::all(f).find(|&z| z != p && z != *x).expect("three points");
    let m = three_point_map(f, p, *x, filler)?;
    let s = to_infinity(f, q).compose_left(f, &m.compose_right(f, r));
    let g = s.num();
    if *s.den() != mono(1) || !g.coeff(2).is_zero() {
        return Err(Error::Internal("normal form is not (x^3 + cx + d)/x".into()));
    }
    let v = f.div(g.coeff(0), g.coeff(3))?;
    let order = f.order() as u64;
    if !(order - 1).is_multiple_of(3) {
        return Ok(ClassLabel::Char2OnePoint { k: 0 });
    }
    let theta = f.canonical_theta()?;
    let is_cube = |a: Fel| f.pow(a, (order - 1) / 3) == Fel::ONE;
    let k = (0..3u8)
        .find(|&k| is_cube(f.div(v, f.pow(theta, k as u64)).expect("nonzero")))
        .expect("cube classes cover the units");
    Ok(ClassLabel::Char2OnePoint { k })
}

/// Cross-ratio of the two ramification points and the further preimages of
/// their branch points; rational points give `c`, conjugate ones give `b`.
fn char2_two_points(f: &Field, r: &RatExpr, ram: &Ramification) -> Result<ClassLabel> {
    let field = &ram.field;
    let big = r.embed(&ram.embedding);
    let further = |i: usize| -> Result<ProjPoint> {
        let pt = &ram.points[i];
        let v: Vec<ProjPoint> = fiber_points(field, &big, pt.branch).into_iter().filter(|&x| x != pt.point).collect();
        match v.as_slice() {
            [x] => Ok(*x),
            _ => Err(Error::Internal("expected one further preimage".into())),
        }
    };
    let quad = [ram.points[0].point, ram.points[1].point, further(0)?, further(1)?];
    let lam = cross_ratio(field, quad)?
        .finite()
        .and_then(|l| ram.embedding.preimage(l))
        .ok_or_else(|| Error::Internal("cross-ratio not rational".into()))?;
    if ram.is_rational() {
        let c = f.add(f.inv(lam)?, Fel::ONE);
        Ok(ClassLabel::Char2Split { c })
    } else {
        let s = f.sqrt(lam)?;
        let b = f.div(s, f.add(s, Fel::ONE))?;
        Ok(ClassLabel::Char2Conjugate { b })
    }
}

#[cfg(test)]
mod tests;
