//! The element type and the multiplication it carries.
//!
//! Every element of the monoid generated by `a` and `b` under the single
//! relation `ab = 1` has a unique normal form `b^i a^j`; only the exponent
//! pair `(i, j)` is stored. Multiplication cancels the inner `a^j b^k`
//! block and is a constant-time three-way case split.

use std::fmt;
use std::ops::Mul;

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::CoreError;

/// `b^i a^j` in normal form, stored as the exponent pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BicyclicElem {
    /// Exponent of `b`.
    pub i: u64,
    /// Exponent of `a`.
    pub j: u64,
}

impl BicyclicElem {
    /// The identity `1 = b^0 a^0`.
    pub const IDENTITY: BicyclicElem = BicyclicElem { i: 0, j: 0 };

    pub fn new(i: u64, j: u64) -> Self {
        BicyclicElem { i, j }
    }

    /// The idempotent `b^i a^i`.
    pub fn idempotent(i: u64) -> Self {
        BicyclicElem { i, j: i }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn is_idempotent(&self) -> bool {
        self.i == self.j
    }

    /// Exponent-swap dual `b^i a^j ↦ b^j a^i`.
    ///
    /// This is the canonical anti-isomorphism between the positive
    /// (`i ≤ j`) and negative (`i ≥ j`) submonoids: it is an involution
    /// and reverses products, `dual(x·y) = dual(y)·dual(x)`.
    pub fn dual(self) -> Self {
        BicyclicElem {
            i: self.j,
            j: self.i,
        }
    }
}

/// Product of two normal forms.
///
/// Writing `x = b^k a^l` and `y = b^m a^n`, the inner block `a^l b^m`
/// collapses by `ab = 1` and leaves the shorter power standing:
///
/// - `l < m`: `b^(k−l+m) a^n`
/// - `l = m`: `b^k a^n`
/// - `l > m`: `b^k a^(l−m+n)`
pub fn mul(x: BicyclicElem, y: BicyclicElem) -> BicyclicElem {
    if x.j < y.i {
        BicyclicElem::new(x.i + (y.i - x.j), y.j)
    } else if x.j == y.i {
        BicyclicElem::new(x.i, y.j)
    } else {
        BicyclicElem::new(x.i, (x.j - y.i) + y.j)
    }
}

impl Mul for BicyclicElem {
    type Output = BicyclicElem;

    fn mul(self, rhs: BicyclicElem) -> BicyclicElem {
        mul(self, rhs)
    }
}

/// Exponent-swap dual as a free function; see [`BicyclicElem::dual`].
pub fn dual(x: BicyclicElem) -> BicyclicElem {
    x.dual()
}

/// Embed the additive monoid of naturals onto row `k`: `s ↦ b^k a^(k+s)`.
///
/// Each row `{b^k a^(k+s) : s ∈ ω}` is a subsemigroup isomorphic to
/// `(ω, +)`; `row_embed(k, ·)` is that isomorphism.
pub fn row_embed(k: u64, s: u64) -> BicyclicElem {
    BicyclicElem::new(k, k + s)
}

/// Inverse of [`row_embed`]: recover `s` from `b^k a^(k+s)`.
///
/// Fails when `x` does not lie on row `k`.
pub fn row_coord(k: u64, x: BicyclicElem) -> Result<u64, CoreError> {
    if x.i != k || x.j < k {
        return Err(CoreError::OutsideRow { elem: x, row: k });
    }
    Ok(x.j - k)
}

impl fmt::Display for BicyclicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => write!(f, "1"),
            (0, j) => write!(f, "a^{j}"),
            (i, 0) => write!(f, "b^{i}"),
            (i, j) => write!(f, "b^{i} a^{j}"),
        }
    }
}

// Wire format: a plain `[i, j]` pair.
impl Serialize for BicyclicElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        (self.i, self.j).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BicyclicElem {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let (i, j) = <(u64, u64)>::deserialize(deserializer)?;
        Ok(BicyclicElem::new(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let x = BicyclicElem::new(3, 5);
        assert_eq!(mul(BicyclicElem::IDENTITY, x), x);
        assert_eq!(mul(x, BicyclicElem::IDENTITY), x);
    }

    #[test]
    fn three_case_products() {
        // l > m keeps the left factor's b-exponent
        assert_eq!(
            mul(BicyclicElem::new(2, 3), BicyclicElem::new(1, 2)),
            BicyclicElem::new(2, 4)
        );
        // l < m pulls in the right factor's surplus
        assert_eq!(
            mul(BicyclicElem::new(1, 1), BicyclicElem::new(3, 4)),
            BicyclicElem::new(3, 4)
        );
        // l = m splices directly
        assert_eq!(
            mul(BicyclicElem::new(2, 3), BicyclicElem::new(3, 7)),
            BicyclicElem::new(2, 7)
        );
    }

    #[test]
    fn dual_swaps_and_reverses() {
        assert_eq!(dual(BicyclicElem::new(1, 3)), BicyclicElem::new(3, 1));
        assert_eq!(dual(BicyclicElem::IDENTITY), BicyclicElem::IDENTITY);
        // dual((1,2)·(1,3)) = dual((1,4)) = (4,1) = (3,1)·(2,1)
        let x = BicyclicElem::new(1, 2);
        let y = BicyclicElem::new(1, 3);
        assert_eq!(mul(x, y), BicyclicElem::new(1, 4));
        assert_eq!(dual(mul(x, y)), BicyclicElem::new(4, 1));
        assert_eq!(mul(dual(y), dual(x)), BicyclicElem::new(4, 1));
    }

    #[test]
    fn row_embedding_is_a_homomorphism() {
        assert_eq!(row_embed(2, 3), BicyclicElem::new(2, 5));
        assert_eq!(row_embed(0, 0), BicyclicElem::IDENTITY);
        // row_embed(1,2)·row_embed(1,3) = (1,6) = row_embed(1,5)
        assert_eq!(
            mul(row_embed(1, 2), row_embed(1, 3)),
            row_embed(1, 5)
        );
        assert_eq!(row_coord(2, BicyclicElem::new(2, 5)).unwrap(), 3);
        assert!(row_coord(1, BicyclicElem::new(2, 5)).is_err());
        assert!(row_coord(3, BicyclicElem::new(3, 1)).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(BicyclicElem::IDENTITY.to_string(), "1");
        assert_eq!(BicyclicElem::new(0, 4).to_string(), "a^4");
        assert_eq!(BicyclicElem::new(2, 0).to_string(), "b^2");
        assert_eq!(BicyclicElem::new(2, 4).to_string(), "b^2 a^4");
    }

    #[test]
    fn json_pair_round_trip() {
        let x = BicyclicElem::new(1, 3);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[1,3]");
        let back: BicyclicElem = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
