use thiserror::Error;

use crate::carrier::Carrier;
use crate::elem::BicyclicElem;

/// Errors raised when an operation's carrier preconditions are violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("{elem} is not a member of carrier {carrier}")]
    NotInCarrier {
        elem: BicyclicElem,
        carrier: Carrier,
    },
    #[error("carrier {0} does not share the plain-element universe")]
    WrongUniverse(Carrier),
    #[error("operation is not defined on carrier {0}")]
    UnsupportedCarrier(Carrier),
    #[error("{elem} lies outside row {row}")]
    OutsideRow { elem: BicyclicElem, row: u64 },
    #[error("zero operand is only valid in the zero-adjoined carrier")]
    ZeroOutsideSZero,
}
