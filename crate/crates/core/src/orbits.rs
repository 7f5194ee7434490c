//! Exhaustive enumeration of expressions, orbits and stabilizers, and the
//! counting statements they are checked against.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::classify::witness::forced_b;
use crate::classify::{canonical_rep, label_of, ClassLabel};
use crate::config;
use crate::error::{Error, Result};
use crate::field::{Fel, Field};
use crate::moebius::{enumerate_pgl2, Moebius, PairAction};
use crate::poly::Poly;
use crate::ratexpr::RatExpr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitClass {
    /// Least member in expression order.
    pub representative: RatExpr,
    pub size: u64,
    /// Present for degrees 2 and 3.
    pub label: Option<ClassLabel>,
    pub stabilizer_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub q: u64,
    pub degree: usize,
    pub classes: Vec<OrbitClass>,
    pub total: u64,
}

impl OrbitReport {
    pub fn group_order(&self) -> u64 {
        pgl2_order(self.q).pow(2)
    }

    /// Violations of `Σ sizes = total` and `size · |Stab| = |G|`.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let sum: u64 = self.classes.iter().map(|c| c.size).sum();
        if sum != self.total {
            out.push(format!("class sizes sum to {sum}, expected {}", self.total));
        }
        for c in &self.classes {
            if c.size * c.stabilizer_order != self.group_order() {
                out.push(format!(
                    "class of size {} has stabilizer of order {}, product differs from {}",
                    c.size,
                    c.stabilizer_order,
                    self.group_order()
                ));
            }
        }
        out
    }

    /// Labels other than four-point ones that name more than one class.
    pub fn repeated_labels(&self) -> Vec<ClassLabel> {
        let mut seen: BTreeMap<&ClassLabel, usize> = BTreeMap::new();
        for l in self.classes.iter().filter_map(|c| c.label.as_ref()) {
            *seen.entry(l).or_default() += 1;
        }
        seen.into_iter()
            .filter(|(l, n)| *n > 1 && !matches!(l, ClassLabel::FourPoint(_)))
            .map(|(l, _)| l.clone())
            .collect()
    }

    pub fn class_with_label(&self, label: &ClassLabel) -> Option<&OrbitClass> {
        self.classes.iter().find(|c| c.label.as_ref() == Some(label))
    }

    pub fn four_point_classes(&self) -> impl Iterator<Item = &OrbitClass> {
        self.classes.iter().filter(|c| matches!(c.label, Some(ClassLabel::FourPoint(_))))
    }
}

fn pgl2_order(q: u64) -> u64 {
    q * q * q - q
}

/// `q^(2r-1) (q^2 - 1)`, the number of expressions of degree `r`.
pub fn expression_count(q: u64, r: usize) -> Option<u64> {
    if r == 0 {
        return None;
    }
    q.checked_pow(2 * r as u32 - 1)?.checked_mul(q * q - 1)
}

/// Every polynomial of degree at most `d`, in code order.
fn polys_up_to(f: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = f.order() as u64;
    (0..q.pow(d as u32 + 1)).map(move |mut code| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            coeffs.push(Fel((code % q) as u32));
            code /= q;
        }
        Poly::from_coeffs(coeffs)
    })
}

fn monic_of_degree(f: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let lead = Poly::monomial(Fel::ONE, d);
    let lower: Box<dyn Iterator<Item = Poly>> =
        if d == 0 { Box::new(std::iter::once(Poly::zero())) } else { Box::new(polys_up_to(f, d - 1)) };
    lower.map(move |p| p.add(f, &lead))
}

fn coprime(f: &Field, a: &Poly, b: &Poly) -> bool {
    Poly::gcd_monic(f, a, b).map(|g| g.is_one()).unwrap_or(false)
}

pub fn enumerate_expressions(f: &Field, r: usize) -> Result<Vec<RatExpr>> {
    enumerate_expressions_with_limit(f, r, config::DEFAULT_LIMIT)
}

/// Each expression of degree exactly `r` once, sorted.
pub fn enumerate_expressions_with_limit(f: &Field, r: usize, limit: u64) -> Result<Vec<RatExpr>> {
    if r == 0 {
        return Err(Error::InvalidParameter("degree must be positive".into()));
    }
    let q = f.order() as u64;
    let count = expression_count(q, r).unwrap_or(u64::MAX);
    if count > limit {
        return Err(Error::LimitExceeded { count, limit });
    }
    let dens: Vec<Poly> = (0..=r).flat_map(|d| monic_of_degree(f, d)).collect();
    let nums: Vec<Poly> = polys_up_to(f, r).filter(|p| !p.is_zero()).collect();
    let mut out: Vec<RatExpr> = dens
        .par_iter()
        .flat_map_iter(|den| {
            nums.iter().filter_map(move |num| {
                let top = num.degree_or_zero().max(den.degree_or_zero());
                (top == r && coprime(f, num, den)).then(|| RatExpr::scaled(f, num.clone(), den.clone()))
            })
        })
        .collect();
    out.sort();
    if out.len() as u64 != count {
        return Err(Error::Internal(format!("enumerated {} expressions, expected {count}", out.len())));
    }
    Ok(out)
}

/// Coprime pairs of monic polynomials of degrees exactly `r` and `s`.
pub fn coprime_pair_count(f: &Field, r: usize, s: usize) -> Result<u64> {
    coprime_pair_count_with_limit(f, r, s, config::DEFAULT_LIMIT)
}

pub fn coprime_pair_count_with_limit(f: &Field, r: usize, s: usize, limit: u64) -> Result<u64> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter("degrees must be positive".into()));
    }
    let q = f.order() as u64;
    let count = q.checked_pow((r + s) as u32).unwrap_or(u64::MAX);
    if count > limit {
        return Err(Error::LimitExceeded { count, limit });
    }
    let left: Vec<Poly> = monic_of_degree(f, r).collect();
    let right: Vec<Poly> = monic_of_degree(f, s).collect();
    Ok(left.par_iter().map(|a| right.iter().filter(|b| coprime(f, a, b)).count() as u64).sum())
}

/// Generators of PGL₂: translations by an additive basis, scaling by a
/// primitive element, and `1/x`.
fn pgl2_generators(f: &Field) -> Vec<Moebius> {
    let (z, o) = (Fel::ZERO, Fel::ONE);
    let mut gens = Vec::new();
    let mut basis = o;
    for _ in 0..f.n() {
        gens.push(Moebius::new(f, o, basis, z, o).expect("translation"));
        basis = f.mul(basis, if f.n() == 1 { o } else { f.generator() });
    }
    let g = f.primitive_element();
    if g != o {
        gens.push(Moebius::new(f, g, z, z, o).expect("scaling"));
    }
    gens.push(Moebius::new(f, z, o, o, z).expect("inversion"));
    gens
}

/// The orbit of `r` by breadth-first search over generators acting on
/// either side.
pub fn orbit_of(f: &Field, r: &RatExpr) -> Result<HashSet<RatExpr>> {
    orbit_of_with_limit(f, r, config::DEFAULT_LIMIT)
}

pub fn orbit_of_with_limit(f: &Field, r: &RatExpr, limit: u64) -> Result<HashSet<RatExpr>> {
    if r.is_constant() {
        return Err(Error::ConstantExpression);
    }
    let gens = pgl2_generators(f);
    let mut seen = HashSet::from([r.clone()]);
    let mut queue = VecDeque::from([r.clone()]);
    while let Some(cur) = queue.pop_front() {
        for g in &gens {
            for next in [g.compose_left(f, &cur), g.compose_right(f, &cur)] {
                if !seen.contains(&next) {
                    if seen.len() as u64 >= limit {
                        return Err(Error::LimitExceeded { count: seen.len() as u64 + 1, limit });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

/// All `(B, A)` with `B∘r∘A⁻¹ = r`; `B` is forced by `A`.
pub fn stabilizer(f: &Field, r: &RatExpr) -> Result<Vec<PairAction>> {
    stabilizer_with_limit(f, r, config::DEFAULT_LIMIT)
}

pub fn stabilizer_with_limit(f: &Field, r: &RatExpr, limit: u64) -> Result<Vec<PairAction>> {
    if r.is_constant() {
        return Err(Error::ConstantExpression);
    }
    let group = enumerate_pgl2(f, limit)?;
    Ok(group
        .par_iter()
        .filter_map(|a| {
            let s = a.inverse(f).compose_right(f, r);
            forced_b(f, &s, r).map(|b| PairAction::new(b, *a))
        })
        .collect())
}

/// The orbit of `r` as `{B∘r∘A}` over the whole group.
fn sweep(f: &Field, group: &[Moebius], r: &RatExpr) -> HashSet<RatExpr> {
    group
        .par_iter()
        .flat_map_iter(|a| {
            let s = a.compose_right(f, r);
            group.iter().map(move |b| b.compose_left(f, &s))
        })
        .collect()
}

pub fn all_classes(f: &Field, r: usize) -> Result<OrbitReport> {
    all_classes_with_limit(f, r, config::DEFAULT_LIMIT)
}

/// Partitions every expression of degree `r` into orbits. Each expression is
/// labelled first; each orbit is then swept out of its least unassigned
/// member and checked to carry a single label.
pub fn all_classes_with_limit(f: &Field, r: usize, limit: u64) -> Result<OrbitReport> {
    let exprs = enumerate_expressions_with_limit(f, r, limit)?;
    let q = f.order() as u64;
    let group = enumerate_pgl2(f, limit)?;
    let labels: Vec<Option<ClassLabel>> = if r == 2 || r == 3 {
        exprs.par_iter().map(|e| label_of(f, e).map(Some)).collect::<Result<_>>()?
    } else {
        vec![None; exprs.len()]
    };
    let index: HashMap<&RatExpr, usize> = exprs.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut assigned = vec![false; exprs.len()];
    let mut classes = Vec::new();
    for (i, rep) in exprs.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let orbit = sweep(f, &group, rep);
        for member in &orbit {
            let j = *index
                .get(member)
                .ok_or_else(|| Error::Internal(format!("{} missing from enumeration", member.format(f))))?;
            if assigned[j] {
                return Err(Error::Internal("orbits overlap".into()));
            }
            if labels[j] != labels[i] {
                return Err(Error::Internal(format!(
                    "{} and {} share an orbit but not a label",
                    rep.format(f),
                    member.format(f)
                )));
            }
            assigned[j] = true;
        }
        let stabilizer_order = stabilizer_with_limit(f, rep, limit)?.len() as u64;
        classes.push(OrbitClass {
            representative: rep.clone(),
            size: orbit.len() as u64,
            label: labels[i].clone(),
            stabilizer_order,
        });
    }
    let report = OrbitReport { q, degree: r, classes, total: exprs.len() as u64 };
    if let Some(v) = report.invariant_violations().into_iter().next() {
        return Err(Error::Internal(v));
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    /// Number of expressions of degree 2 and 3.
    ExpressionCounts,
    /// Coprime monic pairs of degrees up to 3.
    CoprimeCounts,
    /// Quadratic classes and their sizes.
    QuadCounts,
    /// Cubic classes in characteristic 2.
    Char2CubicCounts,
    /// Cubic classes with few ramification points in characteristic 3.
    Char3CubicClasses,
    /// Totals with and without four ramification points, characteristic ≥ 5.
    SixCounts,
    /// Upper bound on the number of cubic classes, characteristic ≥ 5.
    ClassBound,
    /// Stabilizer orders of the two- and three-point representatives.
    Stabilizers,
}

impl Statement {
    pub const ALL: [Statement; 8] = [
        Statement::ExpressionCounts,
        Statement::CoprimeCounts,
        Statement::QuadCounts,
        Statement::Char2CubicCounts,
        Statement::Char3CubicClasses,
        Statement::SixCounts,
        Statement::ClassBound,
        Statement::Stabilizers,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statement::ExpressionCounts => "expression-counts",
            Statement::CoprimeCounts => "coprime-counts",
            Statement::QuadCounts => "quad-counts",
            Statement::Char2CubicCounts => "char2-cubic-counts",
            Statement::Char3CubicClasses => "char3-cubic-classes",
            Statement::SixCounts => "six-counts",
            Statement::ClassBound => "class-bound",
            Statement::Stabilizers => "stabilizers",
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Statement> {
        Statement::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown statement {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub statement: Statement,
    pub field: String,
    pub checks: Vec<Check>,
    /// Findings reported without an expected value.
    pub notes: Vec<String>,
    pub class_count: Option<usize>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    fn check(&mut self, name: impl Into<String>, expected: impl fmt::Debug, actual: impl fmt::Debug) {
        let (expected, actual) = (format!("{expected:?}"), format!("{actual:?}"));
        let ok = expected == actual;
        self.checks.push(Check { name: name.into(), expected, actual, ok });
    }

    fn holds(&mut self, name: impl Into<String>, ok: bool) {
        self.check(name, true, ok);
    }
}

fn inapplicable(statement: Statement, reason: &str) -> Error {
    Error::Inapplicable { statement: statement.name().into(), reason: reason.into() }
}

pub fn verify(f: &Field, statement: Statement) -> Result<VerifyReport> {
    verify_with_limit(f, statement, config::DEFAULT_LIMIT)
}

/// Recomputes both sides of `statement` over `f`.
pub fn verify_with_limit(f: &Field, statement: Statement, limit: u64) -> Result<VerifyReport> {
    let q = f.order() as u64;
    let p = f.p();
    let mut rep =
        VerifyReport { statement, field: f.designator(), checks: Vec::new(), notes: Vec::new(), class_count: None };
    let sorted = |mut v: Vec<u64>| {
        v.sort_unstable();
        v
    };
    match statement {
        Statement::ExpressionCounts => {
            for r in 1..=3 {
                let expected = expression_count(q, r).unwrap_or(u64::MAX);
                if expected > limit {
                    continue;
                }
                let got = enumerate_expressions_with_limit(f, r, limit).map(|v| v.len() as u64);
                rep.check(format!("degree {r}"), expected, got.unwrap_or(0));
            }
        }
        Statement::CoprimeCounts => {
            for r in 1..=3 {
                for s in 1..=3 {
                    if q.pow((r + s) as u32) > limit {
                        continue;
                    }
                    let expected = q.pow((r + s - 1) as u32) * (q - 1);
                    rep.check(format!("degrees ({r}, {s})"), expected, coprime_pair_count_with_limit(f, r, s, limit)?);
                }
            }
        }
        Statement::QuadCounts => {
            let classes = all_classes_with_limit(f, 2, limit)?;
            rep.class_count = Some(classes.classes.len());
            let size = |l: ClassLabel| classes.class_with_label(&l).map(|c| c.size);
            rep.check("class count", 2usize, classes.classes.len());
            if p == 2 {
                rep.check("x^2", Some(q * (q * q - 1)), size(ClassLabel::QuadX2Insep));
                rep.check("(x^2+1)/x", Some(q * (q * q - 1).pow(2)), size(ClassLabel::QuadSepChar2));
                rep.check("total", q.pow(3) * (q * q - 1), classes.total);
            } else {
                rep.check("x^2", Some(q * q * (q * q - 1) * (q + 1) / 2), size(ClassLabel::QuadX2));
                rep.check("twist", Some(q * q * (q * q - 1) * (q - 1) / 2), size(ClassLabel::QuadTwist));
            }
        }
        Statement::Char2CubicCounts => {
            if p != 2 {
                return Err(inapplicable(statement, "characteristic 2 only"));
            }
            let classes = all_classes_with_limit(f, 3, limit)?;
            rep.class_count = Some(classes.classes.len());
            let g = q * q * (q * q - 1);
            let cube_split = (q - 1).is_multiple_of(3);
            let mut expected = vec![g * (q + 1) / 2, g * (q - 1) / 2, g * (q * q - 1)];
            if cube_split {
                expected.extend([g * (q * q - 1) / 3; 3]);
            } else {
                expected.push(g * (q * q - 1));
            }
            expected.extend(std::iter::repeat_n(g * (q * q - 1) / 2, 2 * (q as usize - 2)));
            let expected_count = if cube_split { 2 * q + 2 } else { 2 * q };
            rep.check("class count", expected_count, classes.classes.len() as u64);
            rep.check("class sizes", sorted(expected), sorted(classes.classes.iter().map(|c| c.size).collect()));
            rep.check("total", q.pow(5) * (q * q - 1), classes.total);
            rep.check("four-point classes", 0, classes.four_point_classes().count());
            rep.check("repeated labels", Vec::<ClassLabel>::new(), classes.repeated_labels());
        }
        Statement::Char3CubicClasses => {
            if p != 3 {
                return Err(inapplicable(statement, "characteristic 3 only"));
            }
            let classes = all_classes_with_limit(f, 3, limit)?;
            rep.class_count = Some(classes.classes.len());
            let few: Vec<&str> = classes
                .classes
                .iter()
                .filter_map(|c| c.label.as_ref())
                .filter(|l| !matches!(l, ClassLabel::FourPoint(_)))
                .map(|l| l.case_name())
                .collect();
            rep.check(
                "few-point classes",
                sorted_names(&["char3-insep", "char3-x3x2", "char3-x3x", "char3-x3-sigma-x"]),
                sorted_names(&few),
            );
            for c in &classes.classes {
                let Some(label) = c.label.as_ref().filter(|l| !matches!(l, ClassLabel::FourPoint(_))) else {
                    continue;
                };
                let canon = canonical_rep(f, label)?;
                let in_class = orbit_contains(f, &c.representative, &canon, limit)?;
                rep.holds(format!("{} lies in its class", canon.format(f)), in_class);
            }
            rep.notes.push(format!("{} four-point classes", classes.four_point_classes().count()));
        }
        Statement::SixCounts | Statement::ClassBound | Statement::Stabilizers => {
            if p < 5 {
                return Err(inapplicable(statement, "characteristic at least 5"));
            }
            verify_large_char(f, statement, limit, &mut rep)?;
        }
    }
    Ok(rep)
}

fn sorted_names(names: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

fn orbit_contains(f: &Field, r: &RatExpr, target: &RatExpr, limit: u64) -> Result<bool> {
    let group = enumerate_pgl2(f, limit)?;
    Ok(group.par_iter().any(|a| {
        let s = a.inverse(f).compose_right(f, r);
        forced_b(f, &s, target).is_some()
    }))
}

fn verify_large_char(f: &Field, statement: Statement, limit: u64, rep: &mut VerifyReport) -> Result<()> {
    let q = f.order() as u64;
    let few_labels =
        [ClassLabel::CubicX3, ClassLabel::CubicTwist, ClassLabel::CubicDickson, ClassLabel::CubicDicksonTwist];
    if statement == Statement::Stabilizers {
        let expected = [2 * (q - 1), 2 * (q + 1), 2, 2];
        for (label, order) in few_labels.iter().zip(expected) {
            let r = canonical_rep(f, label)?;
            let got = stabilizer_with_limit(f, &r, limit)?.len() as u64;
            rep.check(format!("stabilizer of {}", r.format(f)), order, got);
        }
        return Ok(());
    }
    let classes = all_classes_with_limit(f, 3, limit)?;
    rep.class_count = Some(classes.classes.len());
    let few: u64 =
        classes.classes.iter().filter(|c| few_labels.iter().any(|l| c.label.as_ref() == Some(l))).map(|c| c.size).sum();
    let four: u64 = classes.four_point_classes().map(|c| c.size).sum();
    match statement {
        Statement::SixCounts => {
            let g = q * q * (q * q - 1);
            let sizes = [g * (q + 1) / 2, g * (q - 1) / 2, g * (q * q - 1) / 2, g * (q * q - 1) / 2];
            for (label, size) in few_labels.iter().zip(sizes) {
                rep.check(label.case_name(), Some(size), classes.class_with_label(label).map(|c| c.size));
            }
            rep.check("two or three ramification points", q * q * (q - 1) * (q + 1) * (q * q + q - 1), few);
            rep.check("four ramification points", q * q * (q + 1).pow(2) * (q - 1).pow(3), four);
            rep.check("total", q.pow(5) * (q * q - 1), classes.total);
        }
        Statement::ClassBound => {
            let n = classes.classes.len() as u64;
            rep.holds(format!("{n} classes, at most {}", 6 * q - 2), n <= 6 * q - 2);
            rep.check("repeated labels", Vec::<ClassLabel>::new(), classes.repeated_labels());
            let group = classes.group_order();
            let mut a4 = 0;
            for c in classes.four_point_classes() {
                let Some(ClassLabel::FourPoint(inv)) = &c.label else { continue };
                rep.holds(
                    format!("stabilizer of {} avoids orders 8 and 24", c.representative.format(f)),
                    c.stabilizer_order != 8 && c.stabilizer_order != 24,
                );
                if c.size * 12 == group {
                    a4 += 1;
                    let big = f.extend(inv.ext_degree)?.0;
                    let l = inv.lambda;
                    let sixth = big.add(big.sub(big.square(l), l), Fel::ONE).is_zero();
                    rep.holds(format!("λ of {} is a primitive sixth root of unity", c.representative.format(f)), sixth);
                }
            }
            rep.notes.push(format!("four-point classes with stabilizer of order 12: {a4}"));
        }
        _ => unreachable!(),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(f: &Field, n: &[i64], d: &[i64]) -> RatExpr {
        let p = |cs: &[i64]| Poly::from_coeffs(cs.iter().map(|&c| f.from_int(c)).collect());
        RatExpr::new(f, p(n), p(d)).unwrap()
    }

    #[test]
    fn counts() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(enumerate_expressions(&f2, 2).unwrap().len(), 24);
        assert_eq!(enumerate_expressions(&f2, 1).unwrap().len(), 6);
        assert_eq!(coprime_pair_count(&f2, 1, 1).unwrap(), 2);
        assert_eq!(coprime_pair_count(&f2, 2, 2).unwrap(), 8);
        assert_eq!(coprime_pair_count(&Field::new(3, 1).unwrap(), 2, 1).unwrap(), 18);
        assert!(matches!(
            enumerate_expressions_with_limit(&f2, 3, 10),
            Err(Error::LimitExceeded { count: 96, limit: 10 })
        ));
    }

    #[test]
    fn bfs_orbits() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(orbit_of(&f2, &r(&f2, &[0, 0, 0, 1], &[1])).unwrap().len(), 18);
        assert_eq!(orbit_of(&f2, &r(&f2, &[0, 1, 1], &[1])).unwrap().len(), 18);
        assert_eq!(orbit_of(&f2, &r(&f2, &[0, 0, 1], &[1])).unwrap().len(), 6);
    }

    #[test]
    fn bfs_matches_sweep() {
        for (p, n) in [(2, 1), (3, 1), (2, 2)] {
            let f = Field::new(p, n).unwrap();
            let group = enumerate_pgl2(&f, u64::MAX).unwrap();
            for e in enumerate_expressions(&f, 2).unwrap().iter().step_by(7) {
                assert_eq!(orbit_of(&f, e).unwrap(), sweep(&f, &group, e));
            }
        }
    }

    #[test]
    fn stabilizer_examples() {
        let f5 = Field::new(5, 1).unwrap();
        assert_eq!(stabilizer(&f5, &r(&f5, &[0, 0, 0, 1], &[1])).unwrap().len(), 8);
        assert_eq!(stabilizer(&f5, &r(&f5, &[0, 1, 0, 1], &[2, 0, 3])).unwrap().len(), 12);
        assert_eq!(stabilizer(&f5, &r(&f5, &[0, -3, 0, 1], &[1])).unwrap().len(), 2);
        for pair in stabilizer(&f5, &r(&f5, &[0, 0, 0, 1], &[1])).unwrap() {
            assert_eq!(pair.act(&f5, &r(&f5, &[0, 0, 0, 1], &[1])).unwrap(), r(&f5, &[0, 0, 0, 1], &[1]));
        }
    }

    #[test]
    fn small_partitions() {
        let f2 = Field::new(2, 1).unwrap();
        let rep = all_classes(&f2, 3).unwrap();
        let mut sizes: Vec<u64> = rep.classes.iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![6, 18, 36, 36]);
        assert!(rep.repeated_labels().is_empty());
        let one = all_classes(&f2, 1).unwrap();
        assert_eq!(one.classes.len(), 1);
        assert_eq!(one.classes[0].label, None);
    }

    #[test]
    fn statements() {
        assert_eq!("six-counts".parse::<Statement>().unwrap(), Statement::SixCounts);
        assert!("nope".parse::<Statement>().is_err());
        let f2 = Field::new(2, 1).unwrap();
        assert!(matches!(verify(&f2, Statement::SixCounts), Err(Error::Inapplicable { .. })));
        for st in
            [Statement::ExpressionCounts, Statement::CoprimeCounts, Statement::QuadCounts, Statement::Char2CubicCounts]
        {
            let rep = verify(&f2, st).unwrap();
            assert!(rep.passed(), "{st}: {:?}", rep.checks);
        }
        let f3 = Field::new(3, 1).unwrap();
        let rep = verify(&f3, Statement::Char3CubicClasses).unwrap();
        assert!(rep.passed(), "{:?}", rep.checks);
    }
}
