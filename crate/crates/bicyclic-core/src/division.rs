//! Closed-form left and right division inside a carrier.
//!
//! Both solution sets `{u : v·u = w}` and `{u : u·v = w}` are finite;
//! the solvers enumerate them exactly from the three-way case split of
//! the multiplication, then filter by carrier membership.

use std::collections::BTreeSet;

use crate::carrier::{in_carrier, Carrier};
use crate::elem::BicyclicElem;
use crate::error::CoreError;

fn require_plain_member(v: BicyclicElem, c: Carrier) -> Result<(), CoreError> {
    if !c.is_plain() {
        return Err(CoreError::WrongUniverse(c));
    }
    if !in_carrier(v, c)? {
        return Err(CoreError::NotInCarrier { elem: v, carrier: c });
    }
    Ok(())
}

/// Exactly `{u ∈ c : v·u = w}`.
///
/// The divisor must belong to `c`; the target may be any element (a
/// target outside `c` simply has no solutions, since `c` is closed
/// under products).
pub fn solve_right_div(
    v: BicyclicElem,
    w: BicyclicElem,
    c: Carrier,
) -> Result<BTreeSet<BicyclicElem>, CoreError> {
    require_plain_member(v, c)?;
    let mut out = BTreeSet::new();
    let mut push = |u: BicyclicElem| {
        if in_carrier(u, c).expect("plain carrier") {
            out.insert(u);
        }
    };

    // v.j < u.i: (v.i − v.j + u.i, u.j) = w forces u.i = w.i − v.i + v.j
    if w.i > v.i {
        push(BicyclicElem::new(w.i - v.i + v.j, w.j));
    }
    // v.j = u.i: (v.i, u.j) = w
    if w.i == v.i {
        push(BicyclicElem::new(v.j, w.j));
    }
    // v.j > u.i: (v.i, v.j − u.i + u.j) = w, one candidate per u.i < v.j
    if w.i == v.i {
        for ui in 0..v.j {
            let need = v.j - ui; // u.j = w.j − need
            if w.j >= need {
                push(BicyclicElem::new(ui, w.j - need));
            }
        }
    }
    Ok(out)
}

/// Exactly `{u ∈ c : u·v = w}`, by the mirrored case split.
pub fn solve_left_div(
    v: BicyclicElem,
    w: BicyclicElem,
    c: Carrier,
) -> Result<BTreeSet<BicyclicElem>, CoreError> {
    require_plain_member(v, c)?;
    let mut out = BTreeSet::new();
    let mut push = |u: BicyclicElem| {
        if in_carrier(u, c).expect("plain carrier") {
            out.insert(u);
        }
    };

    // u.j < v.i: (u.i − u.j + v.i, v.j) = w, one candidate per u.j < v.i
    if w.j == v.j {
        for uj in 0..v.i {
            // u.i = u.j + w.i − v.i must be a natural
            if w.i + uj >= v.i {
                push(BicyclicElem::new(w.i + uj - v.i, uj));
            }
        }
    }
    // u.j = v.i: (u.i, v.j) = w
    if w.j == v.j {
        push(BicyclicElem::new(w.i, v.i));
    }
    // u.j > v.i: (u.i, u.j − v.i + v.j) = w forces u.j = w.j − v.j + v.i
    if w.j > v.j {
        push(BicyclicElem::new(w.i, w.j - v.j + v.i));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elem::mul;

    fn set(elems: &[(u64, u64)]) -> BTreeSet<BicyclicElem> {
        elems.iter().map(|&(i, j)| BicyclicElem::new(i, j)).collect()
    }

    #[test]
    fn right_division_examples() {
        assert_eq!(
            solve_right_div(BicyclicElem::new(1, 2), BicyclicElem::new(1, 3), Carrier::CPlus)
                .unwrap(),
            set(&[(0, 1), (1, 2), (2, 3)])
        );
        assert_eq!(
            solve_right_div(BicyclicElem::IDENTITY, BicyclicElem::new(2, 5), Carrier::CPlus)
                .unwrap(),
            set(&[(2, 5)])
        );
        // target outside the carrier has no solutions
        assert!(solve_right_div(
            BicyclicElem::new(0, 1),
            BicyclicElem::new(3, 2),
            Carrier::CPlus
        )
        .unwrap()
        .is_empty());
    }

    #[test]
    fn left_division_examples() {
        // no u in the positive submonoid satisfies u·(1,2) = (0,1)
        assert!(solve_left_div(
            BicyclicElem::new(1, 2),
            BicyclicElem::new(0, 1),
            Carrier::CPlus
        )
        .unwrap()
        .is_empty());
        assert_eq!(
            solve_left_div(BicyclicElem::IDENTITY, BicyclicElem::new(1, 4), Carrier::CPlus)
                .unwrap(),
            set(&[(1, 4)])
        );
    }

    #[test]
    fn solutions_solve() {
        let v = BicyclicElem::new(2, 4);
        let w = BicyclicElem::new(2, 6);
        for u in solve_right_div(v, w, Carrier::CPlus).unwrap() {
            assert_eq!(mul(v, u), w);
        }
        for u in solve_left_div(v, w, Carrier::CPlus).unwrap() {
            assert_eq!(mul(u, v), w);
        }
    }

    #[test]
    fn divisor_must_be_in_carrier() {
        assert!(solve_right_div(
            BicyclicElem::new(3, 1),
            BicyclicElem::new(3, 3),
            Carrier::CPlus
        )
        .is_err());
        assert!(
            solve_left_div(BicyclicElem::new(0, 1), BicyclicElem::new(0, 2), Carrier::Omega)
                .is_err()
        );
    }
}
