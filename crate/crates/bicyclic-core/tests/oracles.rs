//! Brute-force cross-checks for the closed-form solvers.
//!
//! Every oracle here enumerates candidates directly from the
//! multiplication, without touching the solver code paths it checks.

use std::collections::BTreeSet;

use bicyclic_core::{
    box_elems, dual, finite_open_nbhd, green_related, mul, right_ideal, solve_left_div,
    solve_right_div, BicyclicElem, Carrier, GreenRelation,
};

/// All u in the carrier box with v·u = w (right division oracle).
fn brute_right_div(
    v: BicyclicElem,
    w: BicyclicElem,
    c: Carrier,
    search: u64,
) -> BTreeSet<BicyclicElem> {
    box_elems(c, search)
        .into_iter()
        .filter(|&u| mul(v, u) == w)
        .collect()
}

fn brute_left_div(
    v: BicyclicElem,
    w: BicyclicElem,
    c: Carrier,
    search: u64,
) -> BTreeSet<BicyclicElem> {
    box_elems(c, search)
        .into_iter()
        .filter(|&u| mul(u, v) == w)
        .collect()
}

/// Any solution of v·u = w has u.i ≤ w.i + v.j and u.j ≤ w.j, and the
/// mirrored bounds hold for u·v = w, so this box is exhaustive.
fn search_bound(v: BicyclicElem, w: BicyclicElem) -> u64 {
    v.i + v.j + w.i + w.j + 2
}

#[test]
fn division_matches_brute_force_everywhere() {
    for c in [Carrier::CPlus, Carrier::CMinus, Carrier::Full] {
        for v in box_elems(c, 6) {
            for w in box_elems(c, 6) {
                let bound = search_bound(v, w);
                assert_eq!(
                    solve_right_div(v, w, c).unwrap(),
                    brute_right_div(v, w, c, bound),
                    "right division mismatch at v={v}, w={w}, carrier={c}"
                );
                assert_eq!(
                    solve_left_div(v, w, c).unwrap(),
                    brute_left_div(v, w, c, bound),
                    "left division mismatch at v={v}, w={w}, carrier={c}"
                );
            }
        }
    }
}

#[test]
fn frozen_division_examples_agree_with_oracle() {
    // Values frozen only after the oracle produced them.
    let v = BicyclicElem::new(1, 2);
    let w = BicyclicElem::new(1, 3);
    let oracle = brute_right_div(v, w, Carrier::CPlus, 10);
    assert_eq!(oracle.len(), 3);
    assert_eq!(solve_right_div(v, w, Carrier::CPlus).unwrap(), oracle);

    // u·(1,2) = (0,1) has no solution in the positive submonoid.
    let oracle = brute_left_div(v, BicyclicElem::new(0, 1), Carrier::CPlus, 10);
    assert!(oracle.is_empty());
    assert_eq!(
        solve_left_div(v, BicyclicElem::new(0, 1), Carrier::CPlus).unwrap(),
        oracle
    );
}

#[test]
fn left_division_agrees_with_dual_right_division() {
    // u·v = w  ⟺  dual(v)·dual(u) = dual(w)
    for v in box_elems(Carrier::CPlus, 8) {
        for w in box_elems(Carrier::CPlus, 8) {
            let direct = solve_left_div(v, w, Carrier::CPlus).unwrap();
            let via_dual: BTreeSet<_> =
                solve_right_div(dual(v), dual(w), Carrier::CMinus)
                    .unwrap()
                    .into_iter()
                    .map(dual)
                    .collect();
            assert_eq!(direct, via_dual, "duality mismatch at v={v}, w={w}");
        }
    }
}

/// Exhaustive witness search for J-relatedness, independent of the
/// division solvers.
fn brute_j_one_way(u: BicyclicElem, v: BicyclicElem, c: Carrier, bound: u64) -> bool {
    let elems = box_elems(c, bound);
    elems
        .iter()
        .any(|&x| elems.iter().any(|&y| mul(mul(x, u), y) == v))
}

#[test]
fn bounded_j_matches_brute_force_at_small_scale() {
    let c = Carrier::CPlus;
    for u in box_elems(c, 3) {
        for v in box_elems(c, 3) {
            let brute = brute_j_one_way(u, v, c, 6) && brute_j_one_way(v, u, c, 6);
            let verdict = green_related(GreenRelation::J, u, v, c, 6).unwrap();
            assert_eq!(
                verdict.is_related(),
                brute,
                "J mismatch at u={u}, v={v}"
            );
        }
    }
}

#[test]
fn truncated_ideal_equals_brute_force_products() {
    // Products x·(i,i) over a larger box, then truncated.
    for i in 0..=6u64 {
        let trunc = 12u64;
        let e = BicyclicElem::idempotent(i);
        let brute: BTreeSet<BicyclicElem> = box_elems(Carrier::CPlus, trunc + i)
            .into_iter()
            .map(|x| mul(x, e))
            .filter(|p| p.i <= trunc && p.j <= trunc)
            .collect();
        assert_eq!(right_ideal(i, Carrier::CPlus, trunc).unwrap(), brute);
    }
}

#[test]
fn open_nbhd_complements_the_ideal() {
    for x in box_elems(Carrier::CPlus, 8) {
        let nbhd = finite_open_nbhd(x).unwrap();
        assert!(nbhd.contains(&x));
        let ideal = right_ideal(x.j + 1, Carrier::CPlus, x.j + 6).unwrap();
        assert!(nbhd.is_disjoint(&ideal));
        // together they tile the truncated carrier
        let all: BTreeSet<_> = box_elems(Carrier::CPlus, x.j + 1)
            .into_iter()
            .filter(|e| e.i <= e.j)
            .collect();
        let union: BTreeSet<_> = nbhd
            .union(&right_ideal(x.j + 1, Carrier::CPlus, x.j + 1).unwrap())
            .copied()
            .collect();
        assert_eq!(union, all);
    }
}
