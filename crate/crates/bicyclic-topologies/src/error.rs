use thiserror::Error;

use bicyclic_core::{Carrier, ExtElem};

use crate::family::FamilyKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("carrier {carrier} does not admit {kind:?} bases")]
    InvalidCarrier { kind: FamilyKind, carrier: Carrier },
    #[error("{0} is not a prime greater than 1")]
    NotPrime(u64),
    #[error("center {center} is outside carrier {carrier}")]
    CenterOutsideCarrier { center: ExtElem, carrier: Carrier },
    #[error("{point} is outside carrier {carrier}")]
    PointOutsideCarrier { point: ExtElem, carrier: Carrier },
    #[error("basic sets live on different carriers: {0} vs {1}")]
    CarrierMismatch(Carrier, Carrier),
    #[error(
        "inclusion of a {inner:?} basic in a {outer:?} basic is undecided: \
         no closed form is registered and no witness was found within depth {depth}"
    )]
    UndecidedInclusion {
        inner: FamilyKind,
        outer: FamilyKind,
        depth: usize,
    },
    #[error("the two points coincide")]
    SamePoint,
    #[error("expected a {expected:?} basic, got {got:?}")]
    WrongFamily { expected: FamilyKind, got: FamilyKind },
    #[error("parameter overflow: {0}")]
    Overflow(String),
}
