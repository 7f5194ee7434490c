//! Constructing explicit pairs `(B, A)` with `B∘R∘A⁻¹ = T`.
//!
//! A Möbius map is fixed by three points. `A` must carry the ramification
//! points of `R` to those of `T` with equal indices, and the remaining
//! points of each branch fiber likewise; when fewer than three such anchors
//! exist, rational points fill in. Each candidate is checked for being
//! defined over the base field, then `B` is forced by matching values.

use crate::error::Result;
use crate::field::{Embedding, Field};
use crate::moebius::{map_triple, Moebius, PairAction};
use crate::ramify::{index_at, profile_any_degree, RamProfile, Ramification};
use crate::ratexpr::{ProjPoint, RatExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Anchor {
    point: ProjPoint,
    /// (0 for ramification points, 1 for other fiber points; index)
    kind: (u8, usize),
}

/// Points of `r^{-1}(v)` inside `field`.
pub(crate) fn fiber_points(field: &Field, r: &RatExpr, v: ProjPoint) -> Vec<ProjPoint> {
    let poly = match v {
        ProjPoint::Infinity => r.den().clone(),
        ProjPoint::Finite(a) => r.num().sub(field, &r.den().scale(field, a)),
    };
    let mut out: Vec<ProjPoint> = if poly.degree_or_zero() == 0 {
        Vec::new()
    } else {
        poly.distinct_roots(field).unwrap_or_default().into_iter().map(ProjPoint::Finite).collect()
    };
    if r.eval(field, ProjPoint::Infinity) == v {
        out.push(ProjPoint::Infinity);
    }
    out.sort();
    out
}

fn anchors(ram: &Ramification, big: &RatExpr) -> Vec<Anchor> {
    let field = &ram.field;
    let mut out: Vec<Anchor> = ram.points.iter().map(|p| Anchor { point: p.point, kind: (0, p.index) }).collect();
    for p in &ram.points {
        for x in fiber_points(field, big, p.branch) {
            if out.iter().all(|a| a.point != x) {
                out.push(Anchor { point: x, kind: (1, index_at(field, big, x)) });
            }
        }
    }
    out
}

/// The smallest extension of `f` with at least six elements, for forcing `B`
/// when the base field has too few points.
fn probe_extension(f: &Field) -> Result<(Field, Embedding)> {
    let mut m = 1;
    while (f.order() as u64).pow(m) < 6 {
        m += 1;
    }
    f.extend(m)
}

/// Collects three pairs `(s(p), t(p))` with distinct first entries.
fn value_triples(f: &Field, s: &RatExpr, t: &RatExpr) -> Option<Option<([ProjPoint; 3], [ProjPoint; 3])>> {
    let mut pairs: Vec<(ProjPoint, ProjPoint)> = Vec::with_capacity(3);
    for p in ProjPoint::all(f) {
        let u = s.eval(f, p);
        let v = t.eval(f, p);
        match pairs.iter().find(|(a, _)| *a == u) {
            Some((_, w)) if *w != v => return None,
            Some(_) => {}
            None => {
                if pairs.iter().any(|(_, w)| *w == v) {
                    return None;
                }
                pairs.push((u, v));
                if pairs.len() == 3 {
                    return Some(Some(([pairs[0].0, pairs[1].0, pairs[2].0], [pairs[0].1, pairs[1].1, pairs[2].1])));
                }
            }
        }
    }
    Some(None)
}

/// The unique `B` over `f` with `B∘s = t`, if any.
pub(crate) fn forced_b(f: &Field, s: &RatExpr, t: &RatExpr) -> Option<Moebius> {
    let b = match value_triples(f, s, t)? {
        Some((from, to)) => map_triple(f, from, to).ok()?,
        None => {
            let (big, emb) = probe_extension(f).ok()?;
            let (from, to) = value_triples(&big, &s.embed(&emb), &t.embed(&emb))??;
            map_triple(&big, from, to).ok()?.descend(&emb)?
        }
    };
    (b.compose_left(f, s) == *t).then_some(b)
}

/// Writes an inseparable `(a x^p + b)/(c x^p + d)` as `M∘x^p`, returning `M`.
fn inseparable_outer(f: &Field, r: &RatExpr) -> Option<Moebius> {
    let p = r.degree();
    let (g, h) = (r.num(), r.den());
    Moebius::new(f, g.coeff(p), g.coeff(0), h.coeff(p), h.coeff(0)).ok()
}

/// Some `(B, A)` over `f` with `B∘r∘A⁻¹ = t`, or `None` when the two are
/// inequivalent.
pub fn find_witness(f: &Field, r: &RatExpr, t: &RatExpr) -> Result<Option<PairAction>> {
    if r.degree() != t.degree() || r.is_constant() {
        return Ok(None);
    }
    let (pr, pt) = (profile_any_degree(f, r)?, profile_any_degree(f, t)?);
    let (ram_r, ram_t) = match (pr, pt) {
        (RamProfile::Inseparable { .. }, RamProfile::Inseparable { .. }) => {
            let (Some(mr), Some(mt)) = (inseparable_outer(f, r), inseparable_outer(f, t)) else {
                return Ok(None);
            };
            let pair = PairAction::new(mt.compose(f, &mr.inverse(f)), Moebius::identity());
            return Ok(Some(pair));
        }
        (RamProfile::Separable(a), RamProfile::Separable(b)) => (a, b),
        _ => return Ok(None),
    };
    if ram_r.field != ram_t.field || ram_r.indices() != ram_t.indices() || ram_r.pattern() != ram_t.pattern() {
        return Ok(None);
    }
    let field = ram_r.field.clone();
    let emb = ram_r.embedding.clone();
    let (big_r, big_t) = (r.embed(&emb), t.embed(&emb));
    let (anc_r, anc_t) = (anchors(&ram_r, &big_r), anchors(&ram_t, &big_t));
    if anc_r.len() != anc_t.len() {
        return Ok(None);
    }
    let chosen: Vec<Anchor> = anc_r.iter().copied().take(3).collect();
    let k = chosen.len();
    let rational = |anc: &[Anchor]| -> Vec<ProjPoint> {
        ProjPoint::all(f).map(|p| p.embed(&emb)).filter(|p| anc.iter().all(|a| a.point != *p)).collect()
    };
    let fill_r: Vec<ProjPoint> = rational(&anc_r).into_iter().take(3 - k).collect();
    let fill_t = rational(&anc_t);
    if fill_r.len() < 3 - k {
        return Ok(None);
    }
    let mut from: Vec<ProjPoint> = chosen.iter().map(|a| a.point).collect();
    from.extend(&fill_r);
    let from = [from[0], from[1], from[2]];

    let mut images: Vec<Vec<ProjPoint>> = Vec::new();
    extend_images(&chosen, &anc_t, &mut Vec::new(), &mut images);
    for img in images {
        let mut fills: Vec<Vec<ProjPoint>> = Vec::new();
        choose_distinct(&fill_t, 3 - k, &mut Vec::new(), &mut fills);
        for fill in fills {
            let to: Vec<ProjPoint> = img.iter().chain(fill.iter()).copied().collect();
            let Ok(big_a) = map_triple(&field, from, [to[0], to[1], to[2]]) else {
                continue;
            };
            let Some(a) = big_a.descend(&emb) else { continue };
            let s = a.inverse(f).compose_right(f, r);
            if let Some(b) = forced_b(f, &s, t) {
                return Ok(Some(PairAction::new(b, a)));
            }
        }
    }
    Ok(None)
}

/// All injective, kind-preserving images of `chosen` in `targets`.
fn extend_images(chosen: &[Anchor], targets: &[Anchor], cur: &mut Vec<ProjPoint>, out: &mut Vec<Vec<ProjPoint>>) {
    let i = cur.len();
    if i == chosen.len() {
        out.push(cur.clone());
        return;
    }
    for t in targets {
        if t.kind == chosen[i].kind && !cur.contains(&t.point) {
            cur.push(t.point);
            extend_images(chosen, targets, cur, out);
            cur.pop();
        }
    }
}

fn choose_distinct(pool: &[ProjPoint], n: usize, cur: &mut Vec<ProjPoint>, out: &mut Vec<Vec<ProjPoint>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for &p in pool {
        if !cur.contains(&p) {
            cur.push(p);
            choose_distinct(pool, n, cur, out);
            cur.pop();
        }
    }
}
