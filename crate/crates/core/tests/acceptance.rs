//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ratclass::classify::{
    are_equivalent, canonical_rep, classify, family_rc, lambda_mu_of_c, lambda_mu_relation, ordered_cross_ratios,
    ClassLabel,
};
use ratclass::moebius::{s_group, s_orbit};
use ratclass::orbits::{all_classes, coprime_pair_count, enumerate_expressions, OrbitReport};
use ratclass::ramify::{hurwitz_check, ramification_profile, HurwitzVerdict, RamProfile};
use ratclass::{Fel, Field, ProjPoint, RatExpr};

/// Exact number of cubic classes over F_5, fixed after first derivation.
const F5_CUBIC_CLASSES: usize = 10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field(p: u32, n: u32) -> Field {
    Field::new(p, n).unwrap()
}

fn sizes_by_label(rep: &OrbitReport) -> BTreeMap<&'static str, Vec<u64>> {
    let mut out: BTreeMap<&'static str, Vec<u64>> = BTreeMap::new();
    for c in &rep.classes {
        out.entry(c.label.as_ref().map_or("none", |l| l.case_name())).or_default().push(c.size);
    }
    out
}

fn sorted_sizes(rep: &OrbitReport) -> Vec<u64> {
    let mut v: Vec<u64> = rep.classes.iter().map(|c| c.size).collect();
    v.sort_unstable();
    v
}

fn f5_cubic() -> &'static OrbitReport {
    static REPORT: OnceLock<OrbitReport> = OnceLock::new();
    REPORT.get_or_init(|| all_classes(&field(5, 1), 3).unwrap())
}

fn expression_counts() -> Outcome {
    for ((p, r), want) in [((2, 2), 24), ((2, 3), 96), ((3, 2), 216), ((3, 3), 1944)] {
        let got = enumerate_expressions(&field(p, 1), r).unwrap().len();
        ensure(got == want, || format!("q={p} r={r}: {got} != {want}"))?;
    }
    for p in [2u64, 3] {
        for r in 1..=3 {
            for s in 1..=3 {
                let got = coprime_pair_count(&field(p as u32, 1), r, s).unwrap();
                let want = p.pow((r + s - 1) as u32) * (p - 1);
                ensure(got == want, || format!("pairs q={p} ({r},{s}): {got} != {want}"))?;
            }
        }
    }
    Ok("24, 96, 216, 1944 expressions; coprime pairs match for r, s <= 3".into())
}

fn quadratic_odd() -> Outcome {
    for (p, big, small) in [(3, 144, 72), (5, 1800, 1200)] {
        let rep = all_classes(&field(p, 1), 2).unwrap();
        let by = sizes_by_label(&rep);
        ensure(rep.classes.len() == 2, || format!("F_{p}: {} classes", rep.classes.len()))?;
        ensure(by.get("quad-x2") == Some(&vec![big]), || format!("F_{p}: x^2 class {:?}", by.get("quad-x2")))?;
        ensure(by.get("quad-twist") == Some(&vec![small]), || format!("F_{p}: twist {:?}", by.get("quad-twist")))?;
    }
    Ok("F_3 144/72, F_5 1800/1200".into())
}

fn quadratic_char2() -> Outcome {
    for ((p, n), insep, sep) in [((2, 1), 6, 18), ((2, 2), 60, 900)] {
        let rep = all_classes(&field(p, n), 2).unwrap();
        let by = sizes_by_label(&rep);
        ensure(rep.classes.len() == 2, || format!("{} classes", rep.classes.len()))?;
        ensure(by.get("quad-x2-insep") == Some(&vec![insep]), || format!("x^2 {:?}", by.get("quad-x2-insep")))?;
        ensure(by.get("quad-sep-char2") == Some(&vec![sep]), || format!("sep {:?}", by.get("quad-sep-char2")))?;
        let q = rep.q;
        ensure(rep.total == q.pow(3) * (q * q - 1), || format!("total {}", rep.total))?;
    }
    Ok("F_2 6/18, F_4 60/900 (total 960)".into())
}

fn cubic_char2() -> Outcome {
    let r2 = all_classes(&field(2, 1), 3).unwrap();
    ensure(sorted_sizes(&r2) == vec![6, 18, 36, 36], || format!("F_2 sizes {:?}", sorted_sizes(&r2)))?;
    let r4 = all_classes(&field(2, 2), 3).unwrap();
    let want = vec![360, 600, 1200, 1200, 1200, 1800, 1800, 1800, 1800, 3600];
    ensure(sorted_sizes(&r4) == want, || format!("F_4 sizes {:?}", sorted_sizes(&r4)))?;
    ensure(r4.total == 15360, || format!("F_4 total {}", r4.total))?;
    ensure(r4.repeated_labels().is_empty(), || "a label names two classes".into())?;
    Ok("F_2: 4 classes {18, 6, 36, 36}; F_4: 10 classes, total 15360".into())
}

fn cubic_char3() -> Outcome {
    let f = field(3, 1);
    let few = [ClassLabel::Char3Insep, ClassLabel::Char3X3X2, ClassLabel::Char3X3X, ClassLabel::Char3X3SigmaX];
    let reps: Vec<RatExpr> = few.iter().map(|l| canonical_rep(&f, l).unwrap()).collect();
    let exprs = enumerate_expressions(&f, 3).unwrap();
    let mut landed = 0;
    for e in &exprs {
        let c = classify(&f, e).unwrap();
        let slot = few.iter().position(|l| *l == c.label);
        if let Some(i) = slot {
            landed += 1;
            let w = c.witness.as_ref().ok_or("missing witness")?;
            ensure(w.act(&f, e).unwrap() == reps[i], || format!("bad witness for {}", e.format(&f)))?;
        } else {
            ensure(matches!(c.label, ClassLabel::FourPoint(_)), || format!("{} labelled {:?}", e.format(&f), c.label))?;
        }
        for (j, rep) in reps.iter().enumerate() {
            let oracle = are_equivalent(&f, e, rep).unwrap().is_some();
            ensure(oracle == (slot == Some(j)), || {
                format!("oracle disagrees on {} vs {}", e.format(&f), rep.format(&f))
            })?;
        }
    }
    Ok(format!("{landed} of 1944 cubics land in the four classes; oracle agrees on all"))
}

fn cubic_large_char() -> Outcome {
    let rep = f5_cubic();
    let want = [
        (ClassLabel::CubicX3, 8, 1800),
        (ClassLabel::CubicTwist, 12, 1200),
        (ClassLabel::CubicDickson, 2, 7200),
        (ClassLabel::CubicDicksonTwist, 2, 7200),
    ];
    let mut few = 0;
    for (label, stab, size) in want {
        let c = rep.class_with_label(&label).ok_or_else(|| format!("no class {}", label.case_name()))?;
        ensure(c.stabilizer_order == stab && c.size == size, || {
            format!("{}: stabilizer {} size {}", label.case_name(), c.stabilizer_order, c.size)
        })?;
        few += c.size;
    }
    let four: u64 = rep.four_point_classes().map(|c| c.size).sum();
    ensure(few == 17400, || format!("two/three-point total {few}"))?;
    ensure(four == 57600, || format!("four-point total {four}"))?;
    ensure(rep.total == 75000, || format!("total {}", rep.total))?;
    Ok("stabilizers {8, 12, 2, 2}; 17400 + 57600 = 75000".into())
}

fn class_bound() -> Outcome {
    let rep = f5_cubic();
    let n = rep.classes.len();
    ensure(n <= 28, || format!("{n} classes exceed 28"))?;
    ensure(n == F5_CUBIC_CLASSES, || format!("{n} classes, regression value {F5_CUBIC_CLASSES}"))?;
    let f = field(5, 1);
    let mut a4 = 0;
    for c in rep.four_point_classes() {
        ensure(c.stabilizer_order != 8 && c.stabilizer_order != 24, || {
            format!("stabilizer of order {} at {}", c.stabilizer_order, c.representative.format(&f))
        })?;
        if c.size * 12 == rep.group_order() {
            a4 += 1;
            let Some(ClassLabel::FourPoint(inv)) = &c.label else { unreachable!() };
            let (e, _) = f.extend(inv.ext_degree).unwrap();
            let l = inv.lambda;
            ensure(e.add(e.sub(e.square(l), l), Fel::ONE).is_zero(), || "A4 orbit with bad lambda".into())?;
        }
    }
    Ok(format!("{n} classes <= 28; {a4} orbit(s) of length q^2(q^2-1)^2/12"))
}

fn lambda_mu() -> Outcome {
    let mut tested = 0;
    for p in [7u32, 11, 13] {
        let f = field(p, 1);
        let half = f.inv(f.from_int(2)).unwrap();
        for c in f.elements() {
            let excluded = [Fel::ZERO, Fel::ONE, half, f.from_int(2), f.from_int(-1)].contains(&c)
                || f.add(f.sub(f.square(c), c), Fel::ONE).is_zero();
            if excluded {
                continue;
            }
            let r = family_rc(&f, c).unwrap();
            let RamProfile::Separable(ram) = ramification_profile(&f, &r).unwrap() else {
                return Err(format!("F_{p} c={c:?}: inseparable"));
            };
            ensure(ram.indices() == vec![2, 2, 2, 2], || format!("F_{p} c={c:?}: {:?}", ram.indices()))?;
            let (l, m) = ordered_cross_ratios(&ram).unwrap();
            let (l, m) = (ram.embedding.preimage(l).unwrap(), ram.embedding.preimage(m).unwrap());
            let (el, em) = lambda_mu_of_c(&f, c).unwrap();
            ensure((ProjPoint::Finite(l), ProjPoint::Finite(m)) == (el, em), || format!("F_{p} c={c:?}: mismatch"))?;
            ensure(lambda_mu_relation(&f, el, em).unwrap(), || format!("F_{p} c={c:?}: relation fails"))?;
            tested += 1;
        }
        if p == 7 {
            ensure(tested == 0, || "F_7 should exclude every c".into())?;
        }
    }
    Ok(format!("vacuous over F_7; {tested} values of c over F_11 and F_13"))
}

fn hurwitz() -> Outcome {
    let mut checked = 0usize;
    let mut check = |f: &Field, e: &RatExpr| -> Result<(), String> {
        if !e.is_separable(f) {
            return Ok(());
        }
        let h = hurwitz_check(f, e).unwrap();
        ensure(h.verdict != HurwitzVerdict::Violated && h.consistent, || {
            format!("{} over F_{}", e.format(f), f.order())
        })?;
        checked += 1;
        Ok(())
    };
    for (p, n) in [(2, 1), (3, 1), (2, 2)] {
        let f = field(p, n);
        for r in [2, 3] {
            for e in enumerate_expressions(&f, r).unwrap() {
                check(&f, &e)?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for p in [5, 7] {
        let f = field(p, 1);
        let pool: Vec<RatExpr> = [2, 3].iter().flat_map(|&r| enumerate_expressions(&f, r).unwrap()).collect();
        for e in pool.choose_multiple(&mut rng, 10_000) {
            check(&f, e)?;
        }
    }
    Ok(format!("{checked} separable expressions, none violated, tameness consistent"))
}

fn witness_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut verified = 0;
    for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let f = field(p, n);
        let pool: Vec<RatExpr> = [2, 3].iter().flat_map(|&r| enumerate_expressions(&f, r).unwrap()).collect();
        for _ in 0..1000 {
            let e = pool.choose(&mut rng).unwrap();
            let c = classify(&f, e).unwrap();
            let Some(w) = c.witness else {
                ensure(matches!(c.label, ClassLabel::FourPoint(_)), || "witness missing".into())?;
                continue;
            };
            let target = canonical_rep(&f, &c.label).unwrap();
            ensure(w.act(&f, e).unwrap() == target, || format!("{} over F_{}", e.format(&f), f.order()))?;
            verified += 1;
        }
    }
    Ok(format!("{verified} witnesses verified exactly (four-point samples carry none)"))
}

fn s_machinery() -> Outcome {
    for (p, n) in [(5, 1), (7, 1), (3, 2)] {
        let f = field(p, n);
        let fin = |v: i64| ProjPoint::Finite(f.from_int(v));
        let half = ProjPoint::Finite(f.inv(f.from_int(2)).unwrap());
        let first: Vec<ProjPoint> = vec![ProjPoint::Infinity, fin(0), fin(1)];
        let second: Vec<ProjPoint> = vec![half, fin(2), fin(-1)];
        for l in ProjPoint::all(&f) {
            let orbit = s_orbit(&f, l);
            let k = orbit.len();
            ensure([1, 2, 3, 6].contains(&k), || format!("orbit of size {k}"))?;
            let in_first = first.contains(&l);
            let in_second = second.contains(&l);
            if in_first {
                ensure(orbit == first.iter().copied().collect(), || "orbit of infinity".into())?;
            }
            if in_second {
                ensure(orbit == second.iter().copied().collect(), || "orbit of 1/2".into())?;
            }
            if k == 3 {
                ensure(in_first || in_second, || format!("unexpected orbit of size 3 over F_{}", f.order()))?;
            }
            if k <= 2 {
                let ProjPoint::Finite(v) = l else { return Err("infinity in a short orbit".into()) };
                ensure(f.add(f.sub(f.square(v), v), Fel::ONE).is_zero(), || "short orbit off λ²-λ+1".into())?;
            }
        }
    }
    let f = field(7, 1);
    let s = s_group(&f);
    for c in f.elements().filter(|&c| !c.is_zero() && c != Fel::ONE) {
        let lam = |c: Fel| lambda_mu_of_c(&f, c).unwrap().0;
        let inv = f.inv(c).unwrap();
        ensure(lam(inv) == s[1].act_point(&f, lam(c)), || format!("1/c at {c:?}"))?;
        let one_minus = f.sub(Fel::ONE, c);
        if !one_minus.is_zero() {
            ensure(lam(one_minus) == s[2].act_point(&f, lam(c)), || format!("1-c at {c:?}"))?;
        }
    }
    Ok("orbit sizes exhaustive for q in {5, 7, 9}; c -> λ equivariant over F_7".into())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("expression and coprime-pair counts", expression_counts),
        ("quadratic classes, odd characteristic", quadratic_odd),
        ("quadratic classes, characteristic 2", quadratic_char2),
        ("cubic classes, characteristic 2", cubic_char2),
        ("cubic classes, characteristic 3", cubic_char3),
        ("cubic classes, characteristic >= 5", cubic_large_char),
        ("class bound over F_5", class_bound),
        ("lambda-mu relation", lambda_mu),
        ("Hurwitz check", hurwitz),
        ("witness soundness", witness_soundness),
        ("S-machinery", s_machinery),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
