//! Carriers: the monoids and submonoids a computation runs in.

use std::fmt;

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::elem::{mul, BicyclicElem};
use crate::error::CoreError;

/// Which monoid a computation runs in.
///
/// `Full` is the whole two-generator monoid, `CPlus`/`CMinus` the
/// submonoids with `i ≤ j` / `i ≥ j`, `Omega` the additive naturals
/// encoded on row zero as `(0, s)`, and `SZero` the positive submonoid
/// with an absorbing zero adjoined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Carrier {
    Full,
    CPlus,
    CMinus,
    Omega,
    SZero,
}

impl Carrier {
    /// Carriers whose elements are plain `BicyclicElem`s.
    pub fn is_plain(self) -> bool {
        matches!(self, Carrier::Full | Carrier::CPlus | Carrier::CMinus)
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Carrier::Full => "full",
            Carrier::CPlus => "cplus",
            Carrier::CMinus => "cminus",
            Carrier::Omega => "omega",
            Carrier::SZero => "szero",
        };
        f.write_str(name)
    }
}

/// Membership of a plain element in a plain carrier.
///
/// `Omega` and `SZero` have a different element universe and are
/// rejected; use [`ext_in_carrier`] for those.
pub fn in_carrier(x: BicyclicElem, c: Carrier) -> Result<bool, CoreError> {
    match c {
        Carrier::Full => Ok(true),
        Carrier::CPlus => Ok(x.i <= x.j),
        Carrier::CMinus => Ok(x.i >= x.j),
        Carrier::Omega | Carrier::SZero => Err(CoreError::WrongUniverse(c)),
    }
}

fn require_member(x: BicyclicElem, c: Carrier) -> Result<(), CoreError> {
    if in_carrier(x, c)? {
        Ok(())
    } else {
        Err(CoreError::NotInCarrier { elem: x, carrier: c })
    }
}

/// Multiply inside a carrier, checking both operands up front.
///
/// The product of two members is again a member for every plain
/// carrier; a violation would be a bug in the multiplication, so it is
/// asserted rather than surfaced as an error value.
pub fn mul_closed(
    x: BicyclicElem,
    y: BicyclicElem,
    c: Carrier,
) -> Result<BicyclicElem, CoreError> {
    require_member(x, c)?;
    require_member(y, c)?;
    let p = mul(x, y);
    assert!(
        in_carrier(p, c).unwrap_or(false),
        "closure violated: {x} * {y} = {p} escaped {c}"
    );
    Ok(p)
}

/// An element of the zero-adjoined monoid: either the absorbing zero or
/// a plain element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtElem {
    Zero,
    Elem(BicyclicElem),
}

impl ExtElem {
    pub fn elem(i: u64, j: u64) -> Self {
        ExtElem::Elem(BicyclicElem::new(i, j))
    }

    pub fn as_elem(&self) -> Option<BicyclicElem> {
        match self {
            ExtElem::Zero => None,
            ExtElem::Elem(e) => Some(*e),
        }
    }

    /// Exponent-swap dual, fixing zero.
    pub fn dual(self) -> Self {
        match self {
            ExtElem::Zero => ExtElem::Zero,
            ExtElem::Elem(e) => ExtElem::Elem(e.dual()),
        }
    }
}

impl From<BicyclicElem> for ExtElem {
    fn from(e: BicyclicElem) -> Self {
        ExtElem::Elem(e)
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtElem::Zero => f.write_str("0"),
            ExtElem::Elem(e) => e.fmt(f),
        }
    }
}

// Zero serializes as the string "0", plain elements as `[i, j]`.
impl Serialize for ExtElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtElem::Zero => "0".serialize(serializer),
            ExtElem::Elem(e) => e.serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for ExtElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Zero(String),
            Pair(u64, u64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Zero(s) if s == "0" => Ok(ExtElem::Zero),
            Repr::Zero(s) => Err(serde::de::Error::custom(format!(
                "expected \"0\" or [i, j], got {s:?}"
            ))),
            Repr::Pair(i, j) => Ok(ExtElem::elem(i, j)),
        }
    }
}

/// Membership of an extended element in any carrier.
pub fn ext_in_carrier(x: &ExtElem, c: Carrier) -> bool {
    match (x, c) {
        (ExtElem::Zero, Carrier::SZero) => true,
        (ExtElem::Zero, _) => false,
        (ExtElem::Elem(e), Carrier::SZero) => e.i <= e.j,
        (ExtElem::Elem(e), Carrier::Omega) => e.i == 0,
        (ExtElem::Elem(e), c) => in_carrier(*e, c).expect("plain carrier"),
    }
}

/// Product in the zero-adjoined monoid: zero absorbs, plain elements
/// multiply inside the positive submonoid.
pub fn mul_s(x: ExtElem, y: ExtElem) -> Result<ExtElem, CoreError> {
    match (x, y) {
        (ExtElem::Zero, _) | (_, ExtElem::Zero) => Ok(ExtElem::Zero),
        (ExtElem::Elem(a), ExtElem::Elem(b)) => {
            Ok(ExtElem::Elem(mul_closed(a, b, Carrier::CPlus)?))
        }
    }
}

/// All plain members of `c` with both exponents at most `bound`, in
/// increasing `(i, j)` order. Bulk sweeps and reports rely on this
/// order being deterministic.
pub fn box_elems(c: Carrier, bound: u64) -> Vec<BicyclicElem> {
    let mut out = Vec::new();
    for i in 0..=bound {
        for j in 0..=bound {
            let e = BicyclicElem::new(i, j);
            let keep = match c {
                Carrier::Full => true,
                Carrier::CPlus => i <= j,
                Carrier::CMinus => i >= j,
                Carrier::Omega => i == 0,
                Carrier::SZero => i <= j,
            };
            if keep {
                out.push(e);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership() {
        assert!(in_carrier(BicyclicElem::new(1, 3), Carrier::CPlus).unwrap());
        assert!(!in_carrier(BicyclicElem::new(3, 1), Carrier::CPlus).unwrap());
        // the boundary i = j belongs to both submonoids
        assert!(in_carrier(BicyclicElem::new(2, 2), Carrier::CMinus).unwrap());
        assert!(in_carrier(BicyclicElem::new(2, 2), Carrier::CPlus).unwrap());
        assert!(in_carrier(BicyclicElem::new(9, 0), Carrier::Full).unwrap());
        assert!(in_carrier(BicyclicElem::new(0, 1), Carrier::Omega).is_err());
        assert!(in_carrier(BicyclicElem::new(0, 1), Carrier::SZero).is_err());
    }

    #[test]
    fn closed_products() {
        assert_eq!(
            mul_closed(BicyclicElem::new(1, 2), BicyclicElem::new(1, 3), Carrier::CPlus).unwrap(),
            BicyclicElem::new(1, 4)
        );
        assert_eq!(
            mul_closed(BicyclicElem::new(0, 1), BicyclicElem::new(1, 1), Carrier::CPlus).unwrap(),
            BicyclicElem::new(0, 1)
        );
        assert_eq!(
            mul_closed(BicyclicElem::IDENTITY, BicyclicElem::new(4, 7), Carrier::CPlus).unwrap(),
            BicyclicElem::new(4, 7)
        );
        assert!(matches!(
            mul_closed(BicyclicElem::new(3, 1), BicyclicElem::new(1, 3), Carrier::CPlus),
            Err(CoreError::NotInCarrier { .. })
        ));
    }

    #[test]
    fn zero_absorbs() {
        assert_eq!(
            mul_s(ExtElem::Zero, ExtElem::elem(1, 2)).unwrap(),
            ExtElem::Zero
        );
        assert_eq!(
            mul_s(ExtElem::elem(0, 0), ExtElem::Zero).unwrap(),
            ExtElem::Zero
        );
        assert_eq!(
            mul_s(ExtElem::elem(1, 2), ExtElem::elem(1, 3)).unwrap(),
            ExtElem::elem(1, 4)
        );
        assert!(mul_s(ExtElem::elem(3, 1), ExtElem::elem(0, 0)).is_err());
    }

    #[test]
    fn box_counts() {
        // 0 ≤ i ≤ j ≤ 3 gives 10 elements
        assert_eq!(box_elems(Carrier::CPlus, 3).len(), 10);
        assert_eq!(box_elems(Carrier::CMinus, 2).len(), 6);
        assert_eq!(box_elems(Carrier::Full, 2).len(), 9);
        assert_eq!(box_elems(Carrier::Omega, 4).len(), 5);
    }

    #[test]
    fn ext_serde() {
        assert_eq!(serde_json::to_string(&ExtElem::Zero).unwrap(), "\"0\"");
        assert_eq!(serde_json::to_string(&ExtElem::elem(1, 2)).unwrap(), "[1,2]");
        let z: ExtElem = serde_json::from_str("\"0\"").unwrap();
        assert_eq!(z, ExtElem::Zero);
        let e: ExtElem = serde_json::from_str("[4,5]").unwrap();
        assert_eq!(e, ExtElem::elem(4, 5));
    }
}
