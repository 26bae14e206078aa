//! The registered neighborhood-base families.
//!
//! Each family fixes a carrier and, for the p-adic ones, a prime. A
//! `Family` value is the handle everything else (membership,
//! enumeration, inclusion, separation, continuity rules) dispatches on.

use std::fmt;

use serde::{Deserialize, Serialize};

use bicyclic_core::{ext_in_carrier, Carrier, ExtElem};

use crate::error::TopologyError;

/// The seven registered base shapes.
///
/// - `Discrete`: singletons at every point.
/// - `DiagTail`: the point plus its diagonal translates `(i+l, j+l)`
///   for `l > n`.
/// - `CofiniteBlock`: the point plus everything outside the square
///   block `{i, j ≤ n}`.
/// - `ZeroCompact`: on the zero-adjoined positive submonoid; plain
///   points isolated, basics at zero cofinite.
/// - `PadicOmega`: arithmetic progressions `s + pⁿ·ω` on the naturals
///   (row-zero encoding).
/// - `PadicPlus`: the progression topology pushed onto every row of the
///   positive submonoid: `{b^k a^(k+s+pⁿt) : t ∈ ω}`.
/// - `PadicMinus`: the exponent-swap dual of `PadicPlus` on the
///   negative submonoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Discrete,
    DiagTail,
    CofiniteBlock,
    ZeroCompact,
    PadicOmega,
    PadicPlus,
    PadicMinus,
}

/// A registered family: base shape, carrier, and prime where relevant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    kind: FamilyKind,
    carrier: Carrier,
    prime: Option<u64>,
}

/// Trial-division primality; parameters here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn require_prime(p: u64) -> Result<u64, TopologyError> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(TopologyError::NotPrime(p))
    }
}

impl Family {
    pub fn discrete(carrier: Carrier) -> Family {
        Family { kind: FamilyKind::Discrete, carrier, prime: None }
    }

    /// Diagonal-tail bases, on the full monoid or its positive
    /// submonoid (the latter is the literal subspace base).
    pub fn diag_tail(carrier: Carrier) -> Result<Family, TopologyError> {
        match carrier {
            Carrier::Full | Carrier::CPlus => {
                Ok(Family { kind: FamilyKind::DiagTail, carrier, prime: None })
            }
            other => Err(TopologyError::InvalidCarrier {
                kind: FamilyKind::DiagTail,
                carrier: other,
            }),
        }
    }

    pub fn cofinite_block(carrier: Carrier) -> Result<Family, TopologyError> {
        match carrier {
            Carrier::Full | Carrier::CPlus => {
                Ok(Family { kind: FamilyKind::CofiniteBlock, carrier, prime: None })
            }
            other => Err(TopologyError::InvalidCarrier {
                kind: FamilyKind::CofiniteBlock,
                carrier: other,
            }),
        }
    }

    pub fn zero_compact() -> Family {
        Family {
            kind: FamilyKind::ZeroCompact,
            carrier: Carrier::SZero,
            prime: None,
        }
    }

    pub fn padic_omega(p: u64) -> Result<Family, TopologyError> {
        Ok(Family {
            kind: FamilyKind::PadicOmega,
            carrier: Carrier::Omega,
            prime: Some(require_prime(p)?),
        })
    }

    pub fn padic_plus(p: u64) -> Result<Family, TopologyError> {
        Ok(Family {
            kind: FamilyKind::PadicPlus,
            carrier: Carrier::CPlus,
            prime: Some(require_prime(p)?),
        })
    }

    pub fn padic_minus(p: u64) -> Result<Family, TopologyError> {
        Ok(Family {
            kind: FamilyKind::PadicMinus,
            carrier: Carrier::CMinus,
            prime: Some(require_prime(p)?),
        })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn prime(&self) -> Option<u64> {
        self.prime
    }

    /// Carrier admission for points handed to this family.
    pub fn admits(&self, x: &ExtElem) -> bool {
        ext_in_carrier(x, self.carrier)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.prime {
            Some(p) => write!(f, "{:?}(p={}) on {}", self.kind, p, self.carrier),
            None => write!(f, "{:?} on {}", self.kind, self.carrier),
        }
    }
}

/// `p^n` as a wide integer, or `None` past the representable range.
/// Desk-scale parameters never get close; callers treat `None` as "the
/// modulus exceeds every representable exponent difference".
pub(crate) fn prime_power(p: u64, n: u64) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(p as u128)?;
    }
    Some(acc)
}

/// Does `p^n` divide `diff`?
pub(crate) fn power_divides(p: u64, n: u64, diff: u64) -> bool {
    match prime_power(p, n) {
        Some(q) => (diff as u128) % q == 0,
        None => diff == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(97));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91)); // 7 * 13
    }

    #[test]
    fn carriers_are_checked() {
        assert!(Family::diag_tail(Carrier::Full).is_ok());
        assert!(Family::diag_tail(Carrier::CPlus).is_ok());
        assert!(Family::diag_tail(Carrier::CMinus).is_err());
        assert!(Family::cofinite_block(Carrier::SZero).is_err());
        assert!(Family::padic_plus(4).is_err());
        assert_eq!(Family::padic_plus(5).unwrap().carrier(), Carrier::CPlus);
        assert_eq!(Family::padic_minus(5).unwrap().carrier(), Carrier::CMinus);
        assert_eq!(Family::zero_compact().carrier(), Carrier::SZero);
    }

    #[test]
    fn power_arithmetic() {
        assert_eq!(prime_power(2, 10), Some(1024));
        assert!(power_divides(2, 1, 4));
        assert!(!power_divides(2, 2, 2));
        assert!(power_divides(3, 0, 7)); // p^0 = 1 divides everything
        assert!(prime_power(2, 200).is_none());
        assert!(power_divides(2, 200, 0));
        assert!(!power_divides(2, 200, 5));
    }
}
