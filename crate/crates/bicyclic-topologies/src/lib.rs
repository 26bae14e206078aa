//! Neighborhood-base topologies on the bicyclic monoid carriers,
//! represented by their generating bases only.
//!
//! Seven families are registered: the discrete base, the diagonal-tail
//! and cofinite-block bases (on the full monoid and, by carrier
//! filtering, on the positive submonoid), the zero-adjoined compact
//! base, and the p-adic progression bases on the naturals, the
//! positive submonoid, and — via the exponent-swap duality — the
//! negative one. Membership, enumeration, cofiniteness, inclusion and
//! separation are all decided exactly wherever a closed form exists;
//! everything else reports the bound or depth it was checked to.
//!
//! The family registry is plain data and every query is a pure
//! function, so concurrent use needs no synchronization.

mod cofinite;
mod error;
mod family;
mod nbhd;
mod separation;
mod subset;

pub use cofinite::{compactness_certificate, nbhd_is_cofinite, CofiniteVerdict, CompactnessVerdict};
pub use error::TopologyError;
pub use family::{is_prime, Family, FamilyKind};
pub use nbhd::BasicNbhd;
pub use separation::{basics_disjoint, separate, t1_check, SeparationVerdict};
pub use subset::{nbhd_subset, SubsetVerdict};
