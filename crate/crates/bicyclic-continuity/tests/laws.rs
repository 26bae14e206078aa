//! Cross-module laws: the image law at depth, verdict soundness, the
//! idempotent product trichotomy, and positive/negative duality.

use bicyclic_continuity::{
    check_shift_continuity, padic_left_image, padic_shift_suite, ContinuityVerdict, ShiftSpec,
    Side,
};
use bicyclic_core::{box_elems, mul, BicyclicElem, Carrier, ExtElem};
use bicyclic_topologies::{nbhd_subset, BasicNbhd, Family};

/// The left-shift image of a progression basic equals the same-
/// parameter basic at the image point, member for member, at depth 50.
#[test]
fn image_law_setwise_at_depth() {
    let fam = Family::padic_plus(2).unwrap();
    for s in box_elems(Carrier::CPlus, 6) {
        for center in box_elems(Carrier::CPlus, 6) {
            for n in [0u64, 1, 2, 5, 10] {
                let b = BasicNbhd::new(fam, ExtElem::Elem(center), n).unwrap();
                let image = padic_left_image(s, &b).unwrap();
                let products: Vec<ExtElem> = b
                    .enumerate(50)
                    .into_iter()
                    .map(|u| ExtElem::Elem(mul(s, u.as_elem().unwrap())))
                    .collect();
                assert_eq!(products, image.enumerate(50));
            }
        }
    }
}

/// Every continuous verdict re-validates: the image basic of each
/// witness row sits inside the target basic per the inclusion decider.
#[test]
fn certificates_revalidate_under_subset() {
    let fam = Family::padic_plus(3).unwrap();
    for s in box_elems(Carrier::CPlus, 4) {
        for point in box_elems(Carrier::CPlus, 4) {
            let spec =
                ShiftSpec::new(Side::Left, ExtElem::Elem(s), fam, ExtElem::Elem(point)).unwrap();
            let target = spec.apply(&ExtElem::Elem(point)).unwrap();
            match check_shift_continuity(&spec, 5).unwrap() {
                ContinuityVerdict::ContinuousExact { table, .. } => {
                    for row in table {
                        let src = BasicNbhd::new(fam, ExtElem::Elem(point), row.source_param)
                            .unwrap();
                        let image = padic_left_image(s, &src).unwrap();
                        let v = BasicNbhd::new(fam, target, row.target_param).unwrap();
                        assert!(nbhd_subset(&image, &v).unwrap().is_subset());
                    }
                }
                other => panic!("left shifts are exactly continuous, got {other:?}"),
            }
        }
    }
}

/// Discontinuous verdicts are sound: each recorded escaper belongs to
/// its source basic and its image misses the offending basic.
#[test]
fn discontinuity_witnesses_are_sound() {
    let fam = Family::padic_plus(5).unwrap();
    for point in box_elems(Carrier::CPlus, 4) {
        for s in box_elems(Carrier::CPlus, 4) {
            if point.j >= s.i {
                continue; // continuous regime
            }
            let spec =
                ShiftSpec::new(Side::Right, ExtElem::Elem(s), fam, ExtElem::Elem(point)).unwrap();
            match check_shift_continuity(&spec, 6).unwrap() {
                ContinuityVerdict::Discontinuous { offending, escapes, bound, .. } => {
                    assert_eq!(escapes.len() as u64, bound + 1);
                    for e in &escapes {
                        let src = BasicNbhd::new(fam, ExtElem::Elem(point), e.source_param)
                            .unwrap();
                        assert!(src.contains(&e.escaper).unwrap());
                        let image = spec.apply(&e.escaper).unwrap();
                        assert_eq!(image, e.image);
                        assert!(!offending.contains(&image).unwrap());
                    }
                }
                other => panic!("expected discontinuity below the row gap, got {other:?}"),
            }
        }
    }
}

/// Multiplying by an idempotent on the right either drags the element
/// up to the idempotent's level or leaves it alone; the closed
/// three-way split is checked against the multiplication everywhere.
#[test]
fn idempotent_product_trichotomy() {
    for x in box_elems(Carrier::Full, 15) {
        for i in 0..=15u64 {
            let e = BicyclicElem::idempotent(i);
            let got = mul(x, e);
            let expected = if x.j < i {
                BicyclicElem::new(x.i + (i - x.j), i)
            } else {
                x
            };
            assert_eq!(got, expected, "trichotomy failed at x={x}, i={i}");
        }
    }
}

/// Positive-side checks and their exponent-swapped negative-side
/// counterparts produce structurally identical verdicts.
#[test]
fn duality_preserves_verdict_structure() {
    let plus = Family::padic_plus(2).unwrap();
    let minus = Family::padic_minus(2).unwrap();
    for s in box_elems(Carrier::CPlus, 4) {
        for point in box_elems(Carrier::CPlus, 4) {
            for side in [Side::Left, Side::Right] {
                let here =
                    ShiftSpec::new(side, ExtElem::Elem(s), plus, ExtElem::Elem(point)).unwrap();
                let there = ShiftSpec::new(
                    side.flipped(),
                    ExtElem::Elem(s.dual()),
                    minus,
                    ExtElem::Elem(point.dual()),
                )
                .unwrap();
                let v1 = check_shift_continuity(&here, 4).unwrap();
                let v2 = check_shift_continuity(&there, 4).unwrap();
                assert_eq!(v1.variant_name(), v2.variant_name());
                assert_eq!(v1.witness_table(), v2.witness_table());
                if let (
                    ContinuityVerdict::Discontinuous { escapes: e1, .. },
                    ContinuityVerdict::Discontinuous { escapes: e2, .. },
                ) = (&v1, &v2)
                {
                    for (a, b) in e1.iter().zip(e2) {
                        assert_eq!(a.escaper.dual(), b.escaper);
                        assert_eq!(a.image.dual(), b.image);
                    }
                }
            }
        }
    }
}

/// The suite over a box contains only exact continuity on the left and
/// splits the right side by the row gap.
#[test]
fn suite_verdict_census() {
    let suite = padic_shift_suite(2, 4, 4).unwrap();
    for entry in &suite.entries {
        let (s, point) = (entry.s.as_elem().unwrap(), entry.point.as_elem().unwrap());
        match entry.side {
            Side::Left => assert!(entry.verdict.is_exact(), "left entry not exact: {entry:?}"),
            Side::Right => {
                if point.j < s.i {
                    assert!(entry.verdict.is_discontinuous());
                } else {
                    assert!(entry.verdict.is_exact());
                }
            }
        }
    }
}
