//! Exhaustive runs over F_7; `cargo test -- --ignored` to include them.

use ratclass::classify::ClassLabel;
use ratclass::orbits::{all_classes, verify, Statement};
use ratclass::Field;

#[test]
#[ignore = "about two minutes"]
fn cubic_classes_over_f7() {
    let f = Field::new(7, 1).unwrap();
    let rep = all_classes(&f, 3).unwrap();
    assert_eq!(rep.classes.len(), 16);
    assert_eq!(rep.total, 806_736);
    let a4: Vec<_> = rep.four_point_classes().filter(|c| c.stabilizer_order == 12).collect();
    assert_eq!(a4.len(), 1);
    let mut invariants: Vec<_> = rep
        .four_point_classes()
        .filter_map(|c| match &c.label {
            Some(ClassLabel::FourPoint(inv)) => Some(inv.clone()),
            _ => None,
        })
        .collect();
    let classes = invariants.len();
    invariants.sort();
    invariants.dedup();
    assert_eq!(invariants.len(), classes - 1);
}

#[test]
#[ignore = "about two minutes"]
fn class_bound_over_f7() {
    let report = verify(&Field::new(7, 1).unwrap(), Statement::ClassBound).unwrap();
    assert!(report.passed(), "{:?}", report.checks);
}
