//! The Möbius group PGL₂ and the pair action `(B, A)·R = B∘R∘A⁻¹`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{Embedding, Fel, Field};
use crate::poly::Poly;
use crate::ratexpr::{ProjPoint, RatExpr};

/// `(a*x + b)/(c*x + d)` with nonzero determinant, scaled so the first
/// nonzero entry of `[a, b, c, d]` is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Moebius {
    m: [Fel; 4],
}

impl Moebius {
    pub fn new(f: &Field, a: Fel, b: Fel, c: Fel, d: Fel) -> Result<Moebius> {
        if f.sub(f.mul(a, d), f.mul(b, c)).is_zero() {
            return Err(Error::Singular);
        }
        let lead = if a.is_zero() { b } else { a };
        let s = f.inv(lead)?;
        Ok(Moebius { m: [a, b, c, d].map(|e| f.mul(e, s)) })
    }

    pub fn identity() -> Moebius {
        Moebius { m: [Fel::ONE, Fel::ZERO, Fel::ZERO, Fel::ONE] }
    }

    pub fn entries(&self) -> [Fel; 4] {
        self.m
    }

    pub fn is_identity(&self) -> bool {
        *self == Moebius::identity()
    }

    /// `self ∘ other`.
    pub fn compose(&self, f: &Field, other: &Moebius) -> Moebius {
        let [a, b, c, d] = self.m;
        let [e, g, h, k] = other.m;
        let dot = |x: Fel, y: Fel, z: Fel, w: Fel| f.add(f.mul(x, y), f.mul(z, w));
        Moebius::new(f, dot(a, e, b, h), dot(a, g, b, k), dot(c, e, d, h), dot(c, g, d, k))
            .expect("product of invertible matrices")
    }

    pub fn inverse(&self, f: &Field) -> Moebius {
        let [a, b, c, d] = self.m;
        Moebius::new(f, d, f.neg(b), f.neg(c), a).expect("invertible")
    }

    pub fn act_point(&self, f: &Field, p: ProjPoint) -> ProjPoint {
        let [a, b, c, d] = self.m;
        match p {
            ProjPoint::Infinity => {
                if c.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(f.div(a, c).expect("nonzero"))
                }
            }
            ProjPoint::Finite(x) => {
                let den = f.add(f.mul(c, x), d);
                if den.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(f.div(f.add(f.mul(a, x), b), den).expect("nonzero"))
                }
            }
        }
    }

    pub fn to_ratexpr(&self, f: &Field) -> RatExpr {
        let [a, b, c, d] = self.m;
        RatExpr::scaled(f, Poly::from_coeffs(vec![b, a]), Poly::from_coeffs(vec![d, c]))
    }

    pub fn from_ratexpr(f: &Field, r: &RatExpr) -> Result<Moebius> {
        if r.degree() != 1 {
            return Err(Error::UnsupportedDegree(r.degree()));
        }
        let (g, h) = (r.num(), r.den());
        Moebius::new(f, g.coeff(1), g.coeff(0), h.coeff(1), h.coeff(0))
    }

    pub fn embed(&self, emb: &Embedding) -> Moebius {
        Moebius { m: self.m.map(|e| emb.apply(e)) }
    }

    /// The same map over the subfield, when it is defined there.
    pub fn descend(&self, emb: &Embedding) -> Option<Moebius> {
        let [a, b, c, d] = self.m;
        Some(Moebius { m: [emb.preimage(a)?, emb.preimage(b)?, emb.preimage(c)?, emb.preimage(d)?] })
    }

    /// `M(x)^q` entrywise, the Galois conjugate map.
    pub fn frobenius(&self, f: &Field, base: u64) -> Result<Moebius> {
        let mut m = self.m;
        for e in m.iter_mut() {
            *e = f.frobenius(*e, base, 1)?;
        }
        Ok(Moebius { m })
    }

    /// `self ∘ r`, skipping the gcd since Möbius maps preserve coprimality.
    pub fn compose_left(&self, f: &Field, r: &RatExpr) -> RatExpr {
        let [a, b, c, d] = self.m;
        let (g, h) = (r.num(), r.den());
        let num = g.scale(f, a).add(f, &h.scale(f, b));
        let den = g.scale(f, c).add(f, &h.scale(f, d));
        RatExpr::scaled(f, num, den)
    }

    /// `r ∘ self`.
    pub fn compose_right(&self, f: &Field, r: &RatExpr) -> RatExpr {
        let [a, b, c, d] = self.m;
        let (num, den) = r.homogeneous_substitute(f, &Poly::from_coeffs(vec![b, a]), &Poly::from_coeffs(vec![d, c]));
        RatExpr::scaled(f, num, den)
    }

    /// Text form `(a*x+b)/(c*x+d)` with field literals.
    pub fn format(&self, f: &Field) -> String {
        let [a, b, c, d] = self.m.map(|e| f.format_elem(e));
        format!("({a}*x+{b})/({c}*x+{d})")
    }
}

/// The unique map with `∞ ↦ a`, `0 ↦ b`, `1 ↦ c`.
pub fn three_point_map(f: &Field, a: ProjPoint, b: ProjPoint, c: ProjPoint) -> Result<Moebius> {
    if a == b || b == c || a == c {
        return Err(Error::RepeatedPoints);
    }
    use ProjPoint::*;
    let one = Fel::ONE;
    let zero = Fel::ZERO;
    match (a, b, c) {
        (Infinity, Finite(b), Finite(c)) => Moebius::new(f, f.sub(c, b), b, zero, one),
        (Finite(a), Infinity, Finite(c)) => Moebius::new(f, a, f.sub(c, a), one, zero),
        (Finite(a), Finite(b), Infinity) => Moebius::new(f, f.neg(a), b, f.neg(one), one),
        (Finite(a), Finite(b), Finite(c)) => {
            let bc = f.sub(b, c);
            let ca = f.sub(c, a);
            Moebius::new(f, f.mul(a, bc), f.mul(b, ca), bc, ca)
        }
        _ => unreachable!("at most one point is infinite"),
    }
}

/// The unique map sending `from[i]` to `to[i]`.
pub fn map_triple(f: &Field, from: [ProjPoint; 3], to: [ProjPoint; 3]) -> Result<Moebius> {
    let s = three_point_map(f, from[0], from[1], from[2])?;
    let t = three_point_map(f, to[0], to[1], to[2])?;
    Ok(t.compose(f, &s.inverse(f)))
}

/// Every element of PGL₂ over `f`, each once; errors beyond `limit` elements.
pub fn enumerate_pgl2(f: &Field, limit: u64) -> Result<Vec<Moebius>> {
    let q = f.order() as u64;
    let count = q * q * q - q;
    if count > limit {
        return Err(Error::LimitExceeded { count, limit });
    }
    let mut out = Vec::with_capacity(count as usize);
    for b in f.elements() {
        for c in f.elements() {
            for d in f.elements() {
                if f.mul(b, c) != d {
                    out.push(Moebius { m: [Fel::ONE, b, c, d] });
                }
            }
        }
    }
    for c in f.elements().filter(|c| !c.is_zero()) {
        for d in f.elements() {
            out.push(Moebius { m: [Fel::ZERO, Fel::ONE, c, d] });
        }
    }
    Ok(out)
}

/// A pair `(B, A)` acting by `R ↦ B∘R∘A⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairAction {
    pub b: Moebius,
    pub a: Moebius,
}

impl PairAction {
    pub fn new(b: Moebius, a: Moebius) -> PairAction {
        PairAction { b, a }
    }

    pub fn identity() -> PairAction {
        PairAction { b: Moebius::identity(), a: Moebius::identity() }
    }

    pub fn act(&self, f: &Field, r: &RatExpr) -> Result<RatExpr> {
        if r.is_constant() {
            return Err(Error::ConstantExpression);
        }
        let inner = self.a.inverse(f).compose_right(f, r);
        Ok(self.b.compose_left(f, &inner))
    }

    /// `self · other`, acting as `other` first.
    pub fn then_after(&self, f: &Field, other: &PairAction) -> PairAction {
        PairAction { b: self.b.compose(f, &other.b), a: self.a.compose(f, &other.a) }
    }

    pub fn inverse(&self, f: &Field) -> PairAction {
        PairAction { b: self.b.inverse(f), a: self.a.inverse(f) }
    }

    pub fn descend(&self, emb: &Embedding) -> Option<PairAction> {
        Some(PairAction { b: self.b.descend(emb)?, a: self.a.descend(emb)? })
    }

    pub fn embed(&self, emb: &Embedding) -> PairAction {
        PairAction { b: self.b.embed(emb), a: self.a.embed(emb) }
    }
}

/// `[x1,x2,x3,x4] = (x1-x3)(x2-x4) / ((x2-x3)(x1-x4))`, with the two factors
/// containing an infinite entry dropped.
pub fn cross_ratio(f: &Field, pts: [ProjPoint; 4]) -> Result<ProjPoint> {
    for i in 0..4 {
        for j in i + 1..4 {
            if pts[i] == pts[j] {
                return Err(Error::RepeatedPoints);
            }
        }
    }
    let diff = |i: usize, j: usize| match (pts[i], pts[j]) {
        (ProjPoint::Finite(a), ProjPoint::Finite(b)) => f.sub(a, b),
        _ => Fel::ONE,
    };
    let num = f.mul(diff(0, 2), diff(1, 3));
    let den = f.mul(diff(1, 2), diff(0, 3));
    Ok(ProjPoint::Finite(f.div(num, den)?))
}

/// The six maps of the group S acting on cross-ratio values, identity first.
pub fn s_group(f: &Field) -> [Moebius; 6] {
    let (o, z, m) = (Fel::ONE, Fel::ZERO, f.neg(Fel::ONE));
    let mk = |a, b, c, d| Moebius::new(f, a, b, c, d).expect("invertible");
    [
        Moebius::identity(),
        mk(z, o, o, z), // 1/x
        mk(m, o, z, o), // 1-x
        mk(o, z, o, m), // x/(x-1)
        mk(z, o, m, o), // 1/(1-x)
        mk(o, m, o, z), // (x-1)/x
    ]
}

pub fn s_orbit(f: &Field, lambda: ProjPoint) -> BTreeSet<ProjPoint> {
    s_group(f).iter().map(|s| s.act_point(f, lambda)).collect()
}

/// `λ ↦ (λ-2)/(2λ-1)`, defined outside characteristics 2 and 3.
pub fn s_centralizer_involution(f: &Field, lambda: ProjPoint) -> Result<ProjPoint> {
    if f.p() == 2 || f.p() == 3 {
        return Err(Error::Characteristic("characteristic other than 2 and 3"));
    }
    let two = f.from_int(2);
    let m = Moebius::new(f, Fel::ONE, f.neg(two), two, f.neg(Fel::ONE))?;
    Ok(m.act_point(f, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(f: &Field, v: i64) -> ProjPoint {
        ProjPoint::Finite(f.from_int(v))
    }

    fn mk(f: &Field, a: i64, b: i64, c: i64, d: i64) -> Moebius {
        Moebius::new(f, f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)).unwrap()
    }

    #[test]
    fn group_laws() {
        let f5 = Field::new(5, 1).unwrap();
        let m = mk(&f5, 2, 3, 1, 1);
        assert!(m.compose(&f5, &m.inverse(&f5)).is_identity());
        let inv = mk(&f5, 0, 1, 1, 0);
        assert_eq!(inv.act_point(&f5, fin(&f5, 0)), ProjPoint::Infinity);
        assert_eq!(mk(&f5, 1, 1, 0, 1).compose(&f5, &mk(&f5, 2, 0, 0, 1)), mk(&f5, 2, 1, 0, 1));
        assert_eq!(Moebius::new(&f5, Fel::ONE, Fel::ONE, Fel::ONE, Fel::ONE), Err(Error::Singular));
    }

    #[test]
    fn three_point_examples() {
        let f5 = Field::new(5, 1).unwrap();
        let (inf, z, o) = (ProjPoint::Infinity, fin(&f5, 0), fin(&f5, 1));
        assert!(three_point_map(&f5, inf, z, o).unwrap().is_identity());
        assert_eq!(three_point_map(&f5, fin(&f5, 2), z, o).unwrap(), mk(&f5, 3, 0, 4, 4));
        let m = three_point_map(&f5, inf, o, z).unwrap();
        assert_eq!([inf, z, o].map(|p| m.act_point(&f5, p)), [inf, o, z]);
        assert_eq!(three_point_map(&f5, z, z, o), Err(Error::RepeatedPoints));
    }

    #[test]
    fn three_point_reproduces_triples() {
        for q in [2, 3, 4, 5] {
            let f = Field::from_designator(&q.to_string()).unwrap();
            let pts: Vec<_> = ProjPoint::all(&f).collect();
            let base = [ProjPoint::Infinity, fin(&f, 0), fin(&f, 1)];
            for &a in &pts {
                for &b in &pts {
                    for &c in &pts {
                        if a == b || b == c || a == c {
                            continue;
                        }
                        let m = three_point_map(&f, a, b, c).unwrap();
                        assert_eq!(base.map(|p| m.act_point(&f, p)), [a, b, c]);
                    }
                }
            }
        }
    }

    #[test]
    fn pgl2_sizes() {
        for (q, n) in [(2, 6), (3, 24), (5, 120)] {
            let f = Field::new(q, 1).unwrap();
            let all = enumerate_pgl2(&f, u64::MAX).unwrap();
            assert_eq!(all.len(), n);
            assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), n);
        }
        let f = Field::new(5, 1).unwrap();
        assert!(matches!(enumerate_pgl2(&f, 100), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn pair_action_examples() {
        let f7 = Field::new(7, 1).unwrap();
        let cube = RatExpr::from_poly(Poly::monomial(Fel::ONE, 3));
        for a in 1..7 {
            let pair = PairAction::new(mk(&f7, a * a * a, 0, 0, 1), mk(&f7, a, 0, 0, 1));
            assert_eq!(pair.act(&f7, &cube).unwrap(), cube);
        }
        assert_eq!(PairAction::identity().act(&f7, &cube).unwrap(), cube);
        // R_{1/2} = -2x^3 + 3x^2; (-4x+2)∘R∘(x+1)/2
        let r = RatExpr::from_poly(Poly::from_coeffs(vec![Fel::ZERO, Fel::ZERO, f7.from_int(3), f7.from_int(-2)]));
        let pair = PairAction::new(mk(&f7, -4, 2, 0, 1), mk(&f7, 2, -1, 0, 1));
        let inner =
            RatExpr::new(&f7, Poly::from_coeffs(vec![Fel::ONE, Fel::ONE]), Poly::constant(f7.from_int(2))).unwrap();
        let outer = mk(&f7, -4, 2, 0, 1).to_ratexpr(&f7);
        let expected = outer.compose(&f7, &r.compose(&f7, &inner).unwrap()).unwrap();
        assert_eq!(pair.act(&f7, &r).unwrap(), expected);
    }

    #[test]
    fn action_axioms() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for q in [3u32, 5] {
            let f = Field::new(q, 1).unwrap();
            let g = enumerate_pgl2(&f, u64::MAX).unwrap();
            for _ in 0..200 {
                let pick = |rng: &mut rand_chacha::ChaCha8Rng| g[rng.gen_range(0..g.len())];
                let p1 = PairAction::new(pick(&mut rng), pick(&mut rng));
                let p2 = PairAction::new(pick(&mut rng), pick(&mut rng));
                let num: Vec<Fel> = (0..4).map(|_| f.elem(rng.gen_range(0..q)).unwrap()).collect();
                let den: Vec<Fel> = (0..3).map(|_| f.elem(rng.gen_range(0..q)).unwrap()).collect();
                let Ok(r) = RatExpr::new(&f, Poly::from_coeffs(num), Poly::from_coeffs(den)) else {
                    continue;
                };
                if r.is_constant() {
                    continue;
                }
                let two_step = p2.act(&f, &p1.act(&f, &r).unwrap()).unwrap();
                assert_eq!(two_step, p2.then_after(&f, &p1).act(&f, &r).unwrap());
                assert_eq!(p1.act(&f, &r).unwrap().degree(), r.degree());
                let slow =
                    p1.b.to_ratexpr(&f).compose(&f, &r.compose(&f, &p1.a.inverse(&f).to_ratexpr(&f)).unwrap()).unwrap();
                assert_eq!(slow, p1.act(&f, &r).unwrap());
            }
        }
    }

    #[test]
    fn cross_ratio_examples() {
        let f7 = Field::new(7, 1).unwrap();
        let inf = ProjPoint::Infinity;
        for l in 2..7 {
            assert_eq!(cross_ratio(&f7, [inf, fin(&f7, 0), fin(&f7, 1), fin(&f7, l)]).unwrap(), fin(&f7, l));
        }
        let a = f7.from_int(2);
        let pts = [a, f7.neg(a), f7.inv(a).unwrap(), f7.neg(f7.inv(a).unwrap())].map(ProjPoint::Finite);
        let a2 = f7.square(a);
        let expected = f7.div(f7.square(f7.sub(a2, Fel::ONE)), f7.square(f7.add(a2, Fel::ONE))).unwrap();
        assert_eq!(cross_ratio(&f7, pts).unwrap(), ProjPoint::Finite(expected));
        let swapped = [pts[1], pts[0], pts[3], pts[2]];
        assert_eq!(cross_ratio(&f7, swapped).unwrap(), ProjPoint::Finite(expected));
        assert!(cross_ratio(&f7, [inf, inf, fin(&f7, 1), fin(&f7, 2)]).is_err());
    }

    #[test]
    fn cross_ratio_invariance() {
        let f = Field::new(5, 1).unwrap();
        let g = enumerate_pgl2(&f, u64::MAX).unwrap();
        let pts: Vec<_> = ProjPoint::all(&f).collect();
        let quad = [pts[0], pts[2], pts[3], pts[5]];
        let lam = cross_ratio(&f, quad).unwrap();
        for m in &g {
            assert_eq!(cross_ratio(&f, quad.map(|p| m.act_point(&f, p))).unwrap(), lam);
        }
    }

    #[test]
    fn s_orbit_examples() {
        let f7 = Field::new(7, 1).unwrap();
        let set = |v: &[i64]| v.iter().map(|&x| fin(&f7, x)).collect::<BTreeSet<_>>();
        assert_eq!(s_orbit(&f7, fin(&f7, 2)), set(&[2, 4, 6]));
        let mut exp = set(&[0, 1]);
        exp.insert(ProjPoint::Infinity);
        assert_eq!(s_orbit(&f7, ProjPoint::Infinity), exp);
        assert_eq!(s_orbit(&f7, fin(&f7, 3)), set(&[3, 5]));
    }

    #[test]
    fn centralizer_involution() {
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(s_centralizer_involution(&f7, fin(&f7, 2)).unwrap(), fin(&f7, 0));
        let once = s_centralizer_involution(&f7, fin(&f7, 3)).unwrap();
        assert_eq!(s_centralizer_involution(&f7, once).unwrap(), fin(&f7, 3));
        let inv = s_group(&f7)[1];
        let l = fin(&f7, 3);
        assert_eq!(
            s_centralizer_involution(&f7, inv.act_point(&f7, l)).unwrap(),
            inv.act_point(&f7, s_centralizer_involution(&f7, l).unwrap())
        );
        assert!(s_centralizer_involution(&Field::new(3, 1).unwrap(), fin(&f7, 0)).is_err());
    }
}
