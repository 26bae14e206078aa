//! Family-level invariants checked across the whole registry.

use bicyclic_core::{box_elems, Carrier, ExtElem};
use bicyclic_topologies::{
    basics_disjoint, nbhd_is_cofinite, nbhd_subset, separate, BasicNbhd, CofiniteVerdict, Family,
    FamilyKind, SeparationVerdict,
};

/// One representative instance of every registered family.
fn all_families() -> Vec<Family> {
    vec![
        Family::discrete(Carrier::Full),
        Family::discrete(Carrier::CPlus),
        Family::diag_tail(Carrier::Full).unwrap(),
        Family::diag_tail(Carrier::CPlus).unwrap(),
        Family::cofinite_block(Carrier::Full).unwrap(),
        Family::cofinite_block(Carrier::CPlus).unwrap(),
        Family::zero_compact(),
        Family::padic_omega(2).unwrap(),
        Family::padic_plus(2).unwrap(),
        Family::padic_plus(3).unwrap(),
        Family::padic_minus(2).unwrap(),
    ]
}

fn carrier_points(family: &Family, bound: u64) -> Vec<ExtElem> {
    let mut pts: Vec<ExtElem> = box_elems(family.carrier(), bound)
        .into_iter()
        .map(ExtElem::Elem)
        .collect();
    if family.carrier() == Carrier::SZero {
        pts.insert(0, ExtElem::Zero);
    }
    pts
}

#[test]
fn centers_belong_to_their_own_basics() {
    for family in all_families() {
        for center in carrier_points(&family, 5) {
            for n in 0..=5 {
                let b = BasicNbhd::new(family, center, n).unwrap();
                assert!(
                    b.contains(&center).unwrap(),
                    "{family}: center {center} missing from its {n}-basic"
                );
            }
        }
    }
}

#[test]
fn parameter_chains_shrink() {
    for family in all_families() {
        for center in carrier_points(&family, 4) {
            for n in 0..=6u64 {
                let tighter = BasicNbhd::new(family, center, n + 1).unwrap();
                let looser = BasicNbhd::new(family, center, n).unwrap();
                assert!(
                    nbhd_subset(&tighter, &looser).unwrap().is_subset(),
                    "{family}: chain broken at {center}, n={n}"
                );
            }
        }
    }
}

/// Enumeration and membership agree on a finite window: everything the
/// enumeration produces is a member, and every box point it omits
/// (while still enumerating past the box) is a non-member.
#[test]
fn enumeration_matches_membership() {
    for family in all_families() {
        for center in carrier_points(&family, 3) {
            for n in 0..=3u64 {
                let b = BasicNbhd::new(family, center, n).unwrap();
                let listed = b.enumerate(600);
                for x in &listed {
                    assert!(b.contains(x).unwrap(), "{family}: enumerated {x} not a member");
                }
                let box_bound = 8u64;
                let in_window: std::collections::BTreeSet<_> = listed
                    .iter()
                    .filter(|x| match x {
                        ExtElem::Zero => true,
                        ExtElem::Elem(e) => e.i <= box_bound && e.j <= box_bound,
                    })
                    .cloned()
                    .collect();
                for point in carrier_points(&family, box_bound) {
                    let member = b.contains(&point).unwrap();
                    let enumerated = in_window.contains(&point);
                    // 600 entries always cover the 8-box for these families
                    assert_eq!(
                        member, enumerated,
                        "{family}: membership/enumeration disagree at {point} (center {center}, n={n})"
                    );
                }
            }
        }
    }
}

#[test]
fn progression_members_stay_on_the_center_line() {
    let fam = Family::padic_plus(3).unwrap();
    for center in box_elems(Carrier::CPlus, 4) {
        for n in 0..=4 {
            let b = BasicNbhd::new(fam, ExtElem::Elem(center), n).unwrap();
            for x in b.enumerate(50) {
                assert_eq!(x.as_elem().unwrap().i, center.i);
            }
        }
    }
}

#[test]
fn separations_are_really_disjoint() {
    let fams = vec![
        Family::padic_plus(2).unwrap(),
        Family::padic_plus(5).unwrap(),
        Family::padic_minus(3).unwrap(),
        Family::padic_omega(2).unwrap(),
        Family::zero_compact(),
        Family::diag_tail(Carrier::Full).unwrap(),
        Family::discrete(Carrier::Full),
    ];
    for family in fams {
        let points = carrier_points(&family, 4);
        for x in &points {
            for y in &points {
                if x == y {
                    continue;
                }
                match separate(&family, x, y, 8).unwrap() {
                    SeparationVerdict::SeparatedBy(a, b) => {
                        assert!(basics_disjoint(&a, &b).unwrap());
                        // cross-check the congruence reasoning on enumerations
                        let left = a.enumerate(50);
                        let right: std::collections::BTreeSet<_> =
                            b.enumerate(50).into_iter().collect();
                        assert!(
                            left.iter().all(|m| !right.contains(m)),
                            "{family}: separation of {x}, {y} overlaps"
                        );
                    }
                    SeparationVerdict::NotSeparatedWithinBound { .. } => {}
                    v => panic!("unexpected verdict {v:?}"),
                }
            }
        }
    }
}

#[test]
fn zero_basic_complement_has_triangular_size() {
    for n in 0..=20u64 {
        let b = BasicNbhd::new(Family::zero_compact(), ExtElem::Zero, n).unwrap();
        match nbhd_is_cofinite(&b) {
            CofiniteVerdict::Cofinite { complement } => {
                assert_eq!(complement.len() as u64, n * (n + 1) / 2);
            }
            other => panic!("expected cofinite, got {other:?}"),
        }
    }
}

#[test]
fn dual_membership_commutes_everywhere() {
    let plus = Family::padic_plus(2).unwrap();
    for center in box_elems(Carrier::CPlus, 4) {
        for n in 0..=3 {
            let b = BasicNbhd::new(plus, ExtElem::Elem(center), n).unwrap();
            let d = b.dualize().unwrap();
            for x in box_elems(Carrier::CPlus, 9) {
                assert_eq!(
                    b.contains(&ExtElem::Elem(x)).unwrap(),
                    d.contains(&ExtElem::Elem(x.dual())).unwrap(),
                    "dual membership mismatch at {x} (center {center}, n={n})"
                );
            }
        }
    }
}

#[test]
fn subset_verdict_kinds_are_wire_stable() {
    assert_eq!(
        serde_json::to_string(&FamilyKind::PadicMinus).unwrap(),
        "\"padic-minus\""
    );
    assert_eq!(
        serde_json::to_string(&FamilyKind::ZeroCompact).unwrap(),
        "\"zero-compact\""
    );
}
