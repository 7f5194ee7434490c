use super::*;

fn r(f: &Field, n: &[i64], d: &[i64]) -> RatExpr {
    let p = |cs: &[i64]| Poly::from_coeffs(cs.iter().map(|&c| f.from_int(c)).collect());
    RatExpr::new(f, p(n), p(d)).unwrap()
}

fn check(f: &Field, e: &RatExpr) -> Classification {
    let c = classify(f, e).unwrap();
    if let Some(w) = &c.witness {
        assert_eq!(w.act(f, e).unwrap(), canonical_rep(f, &c.label).unwrap());
    }
    c
}

#[test]
fn worked_examples() {
    let f7 = Field::new(7, 1).unwrap();
    assert_eq!(check(&f7, &r(&f7, &[1, -3, 0, 1], &[0, -1, 1])).label, ClassLabel::CubicX3);
    let f3 = Field::new(3, 1).unwrap();
    assert_eq!(check(&f3, &r(&f3, &[0, 2, 0, 1], &[1])).label, ClassLabel::Char3X3SigmaX);
    assert_eq!(check(&f3, &r(&f3, &[0, 1, 0, 1], &[1])).label, ClassLabel::Char3X3X);
    let f5 = Field::new(5, 1).unwrap();
    assert_eq!(check(&f5, &r(&f5, &[2, 0, 1], &[0, 2])).label, ClassLabel::QuadTwist);
    let f2 = Field::new(2, 1).unwrap();
    assert_eq!(check(&f2, &r(&f2, &[0, 1, 1], &[1])).label, ClassLabel::QuadSepChar2);
    let f4 = Field::new(2, 2).unwrap();
    let t = f4.generator();
    let e = RatExpr::new(&f4, Poly::from_coeffs(vec![t, Fel::ZERO, Fel::ZERO, Fel::ONE]), Poly::x()).unwrap();
    assert_eq!(check(&f4, &e).label, ClassLabel::Char2OnePoint { k: 1 });
}

#[test]
fn oracle_separates_char3_classes() {
    let f3 = Field::new(3, 1).unwrap();
    let a = r(&f3, &[0, 1, 0, 1], &[1]);
    let b = r(&f3, &[0, 2, 0, 1], &[1]);
    assert!(are_equivalent(&f3, &a, &b).unwrap().is_none());
    assert!(find_witness(&f3, &a, &b).unwrap().is_none());
    let w = are_equivalent(&f3, &a, &a).unwrap().unwrap();
    assert_eq!(w.act(&f3, &a).unwrap(), a);
}

#[test]
fn representatives_classify_to_themselves() {
    let fields = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (11, 1)];
    for (p, n) in fields {
        let f = Field::new(p, n).unwrap();
        let mut labels = vec![
            ClassLabel::QuadX2,
            ClassLabel::QuadTwist,
            ClassLabel::QuadX2Insep,
            ClassLabel::QuadSepChar2,
            ClassLabel::CubicX3,
            ClassLabel::CubicTwist,
            ClassLabel::CubicDickson,
            ClassLabel::CubicDicksonTwist,
            ClassLabel::Char3Insep,
            ClassLabel::Char3X3X2,
            ClassLabel::Char3X3X,
            ClassLabel::Char3X3SigmaX,
            ClassLabel::Char2X3,
            ClassLabel::Char2Twist,
            ClassLabel::Char2X3X2,
        ];
        for k in 0..3 {
            labels.push(ClassLabel::Char2OnePoint { k });
        }
        for c in f.elements().filter(|&c| !f.in_prime_field(c)) {
            labels.push(ClassLabel::Char2Split { c });
            labels.push(ClassLabel::Char2Conjugate { b: c });
        }
        for label in labels {
            let Ok(rep) = canonical_rep(&f, &label) else { continue };
            let got = check(&f, &rep);
            assert_eq!(got.label, label, "{} over F_{}", rep.format(&f), f.order());
            assert!(got.witness.is_some());
        }
    }
}

#[test]
fn wrong_characteristic_is_rejected() {
    let f5 = Field::new(5, 1).unwrap();
    assert!(matches!(canonical_rep(&f5, &ClassLabel::Char2X3), Err(Error::Characteristic(_))));
    let f3 = Field::new(3, 1).unwrap();
    assert!(matches!(canonical_rep(&f3, &ClassLabel::CubicDickson), Err(Error::Characteristic(_))));
    let f2 = Field::new(2, 1).unwrap();
    assert!(canonical_rep(&f2, &ClassLabel::Char2Split { c: Fel::ONE }).is_err());
    // 3 does not divide 1
    assert!(canonical_rep(&f2, &ClassLabel::Char2OnePoint { k: 1 }).is_err());
    let fp = ClassLabel::FourPoint(FourPointInvariants {
        ext_degree: 1,
        lambda: Fel::ONE,
        mu: Fel::ONE,
        mu_alt: None,
        pattern: vec![1; 4],
    });
    assert!(matches!(canonical_rep(&f5, &fp), Err(Error::NoCanonicalForm)));
}

#[test]
fn family_members_are_four_point() {
    let f7 = Field::new(7, 1).unwrap();
    let c = classify(&f7, &family_rc(&f7, f7.from_int(3)).unwrap()).unwrap();
    let ClassLabel::FourPoint(inv) = c.label else { panic!("expected four points") };
    assert!(c.witness.is_none());
    assert_eq!(inv.pattern, vec![1, 1, 1, 1]);
    let ram = c.profile.separable().unwrap();
    let (l, m) = ordered_cross_ratios(ram).unwrap();
    assert!(lambda_mu_relation(&f7, ProjPoint::Finite(l), ProjPoint::Finite(m)).unwrap());
}

#[test]
fn degree_guard() {
    let f5 = Field::new(5, 1).unwrap();
    assert!(matches!(classify(&f5, &r(&f5, &[0, 0, 0, 0, 1], &[1])), Err(Error::UnsupportedDegree(4))));
    assert!(matches!(classify_cubic(&f5, &r(&f5, &[0, 0, 1], &[1])), Err(Error::UnsupportedDegree(2))));
}
