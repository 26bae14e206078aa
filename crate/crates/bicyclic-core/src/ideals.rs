//! Principal right ideals of idempotents and their finite complements.

use std::collections::BTreeSet;

use crate::carrier::{in_carrier, Carrier};
use crate::elem::BicyclicElem;
use crate::error::CoreError;

/// Truncation of the principal set `C₊·b^i a^i = {b^s a^t : s ≤ t, t ≥ i}`:
/// all members with both exponents at most `trunc`.
pub fn right_ideal(
    i: u64,
    c: Carrier,
    trunc: u64,
) -> Result<BTreeSet<BicyclicElem>, CoreError> {
    if c != Carrier::CPlus {
        return Err(CoreError::UnsupportedCarrier(c));
    }
    let mut out = BTreeSet::new();
    for s in 0..=trunc {
        for t in s.max(i)..=trunc {
            out.insert(BicyclicElem::new(s, t));
        }
    }
    Ok(out)
}

/// The finite set `{b^s a^t : s ≤ t ≤ x.j}` — the complement of the
/// right ideal at index `x.j + 1`, hence open whenever that ideal is
/// closed. It contains `x` and has `(j+1)(j+2)/2` elements.
pub fn finite_open_nbhd(x: BicyclicElem) -> Result<BTreeSet<BicyclicElem>, CoreError> {
    if !in_carrier(x, Carrier::CPlus)? {
        return Err(CoreError::NotInCarrier { elem: x, carrier: Carrier::CPlus });
    }
    let mut out = BTreeSet::new();
    for t in 0..=x.j {
        for s in 0..=t {
            out.insert(BicyclicElem::new(s, t));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncated_ideal() {
        let got = right_ideal(2, Carrier::CPlus, 3).unwrap();
        let want: BTreeSet<_> = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)]
            .into_iter()
            .map(|(i, j)| BicyclicElem::new(i, j))
            .collect();
        assert_eq!(got, want);

        // index 0 imposes no constraint
        assert_eq!(right_ideal(0, Carrier::CPlus, 2).unwrap().len(), 6);

        assert!(right_ideal(1, Carrier::CMinus, 3).is_err());
    }

    #[test]
    fn ideal_membership() {
        let ideal = right_ideal(3, Carrier::CPlus, 5).unwrap();
        assert!(ideal.contains(&BicyclicElem::new(1, 5)));
        assert!(!ideal.contains(&BicyclicElem::new(1, 2)));
    }

    #[test]
    fn open_nbhd() {
        let got = finite_open_nbhd(BicyclicElem::new(1, 2)).unwrap();
        let want: BTreeSet<_> = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
            .into_iter()
            .map(|(i, j)| BicyclicElem::new(i, j))
            .collect();
        assert_eq!(got, want);

        assert_eq!(
            finite_open_nbhd(BicyclicElem::IDENTITY).unwrap().len(),
            1
        );
        assert_eq!(finite_open_nbhd(BicyclicElem::new(0, 4)).unwrap().len(), 15);
        assert!(finite_open_nbhd(BicyclicElem::new(4, 0)).is_err());
    }
}
