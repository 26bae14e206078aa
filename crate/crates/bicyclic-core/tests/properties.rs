//! Law-level property tests for the monoid arithmetic.

use bicyclic_core::{
    dual, ext_in_carrier, in_carrier, mul, mul_s, row_coord, row_embed, solve_right_div,
    BicyclicElem, Carrier, ExtElem,
};
use proptest::prelude::*;

fn any_elem(max: u64) -> impl Strategy<Value = BicyclicElem> {
    (0..=max, 0..=max).prop_map(|(i, j)| BicyclicElem::new(i, j))
}

fn cplus_elem(max: u64) -> impl Strategy<Value = BicyclicElem> {
    (0..=max, 0..=max).prop_map(|(a, b)| BicyclicElem::new(a.min(b), a.max(b)))
}

fn s_zero_elem(max: u64) -> impl Strategy<Value = ExtElem> {
    prop_oneof![
        1 => Just(ExtElem::Zero),
        9 => cplus_elem(max).prop_map(ExtElem::Elem),
    ]
}

proptest! {
    #[test]
    fn associativity(x in any_elem(12), y in any_elem(12), z in any_elem(12)) {
        prop_assert_eq!(mul(mul(x, y), z), mul(x, mul(y, z)));
    }

    #[test]
    fn positive_submonoid_closed(x in cplus_elem(30), y in cplus_elem(30)) {
        prop_assert!(in_carrier(mul(x, y), Carrier::CPlus).unwrap());
        // and dually on the negative side
        prop_assert!(in_carrier(mul(dual(y), dual(x)), Carrier::CMinus).unwrap());
    }

    #[test]
    fn dual_is_an_anti_homomorphism(x in any_elem(30), y in any_elem(30)) {
        prop_assert_eq!(dual(mul(x, y)), mul(dual(y), dual(x)));
        prop_assert_eq!(dual(dual(x)), x);
    }

    #[test]
    fn dual_swaps_the_submonoids(x in cplus_elem(30)) {
        prop_assert!(in_carrier(dual(x), Carrier::CMinus).unwrap());
    }

    #[test]
    fn right_division_is_sound(v in cplus_elem(10), w in cplus_elem(10)) {
        for u in solve_right_div(v, w, Carrier::CPlus).unwrap() {
            prop_assert_eq!(mul(v, u), w);
            prop_assert!(in_carrier(u, Carrier::CPlus).unwrap());
        }
    }

    #[test]
    fn zero_adjoined_associativity(
        x in s_zero_elem(8),
        y in s_zero_elem(8),
        z in s_zero_elem(8),
    ) {
        prop_assert!(ext_in_carrier(&x, Carrier::SZero));
        let left = mul_s(mul_s(x, y).unwrap(), z).unwrap();
        let right = mul_s(x, mul_s(y, z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn row_embedding_iso(k in 0..=20u64, s1 in 0..=20u64, s2 in 0..=20u64) {
        prop_assert_eq!(
            mul(row_embed(k, s1), row_embed(k, s2)),
            row_embed(k, s1 + s2)
        );
        prop_assert_eq!(row_coord(k, row_embed(k, s1)).unwrap(), s1);
    }
}
