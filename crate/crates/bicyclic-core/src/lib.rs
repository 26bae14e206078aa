//! Exact arithmetic of the bicyclic monoid and its submonoids.
//!
//! Elements are exponent pairs `(i, j)` standing for the normal form
//! `b^i a^j`; everything here is a pure function over them:
//! multiplication, carrier membership, the exponent-swap duality
//! between the positive and negative submonoids, exact division
//! solvers, Green's relations, and the principal right ideals whose
//! finite complements drive the discreteness-forcing argument.
//!
//! All values are immutable and all operations are pure, so bulk
//! verifications can be partitioned across threads freely; the
//! functions that return sets use ordered collections so results
//! assemble deterministically.

mod carrier;
mod division;
mod elem;
mod error;
mod green;
mod ideals;

pub use carrier::{box_elems, ext_in_carrier, in_carrier, mul_closed, mul_s, Carrier, ExtElem};
pub use division::{solve_left_div, solve_right_div};
pub use elem::{dual, mul, row_coord, row_embed, BicyclicElem};
pub use error::CoreError;
pub use green::{
    green_classes, green_related, GreenRelation, GreenVerdict, GreenWitness, SearchScope,
};
pub use ideals::{finite_open_nbhd, right_ideal};
