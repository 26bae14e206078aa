//! Continuity verification for the registered topologies: certificates
//! for continuous shifts, machine-checked witnesses for discontinuous
//! ones, and the exhaustive desk-scale sweeps built on them.
//!
//! The continuity of a shift over the infinite parameter range is
//! closed by per-family structural rules (the progression image law,
//! absorption in the zero-adjoined monoid, division preimages for the
//! cofinite blocks, singletons for the discrete base); bounded
//! enumeration checking is the fallback, and every verdict says which
//! of the two produced it.

mod checker;
mod dual;
mod error;
mod report;
mod shift;
mod sweeps;
mod verdict;

pub use checker::{check_shift_continuity, padic_left_image};
pub use dual::{dual_report, padic_shift_suite, DualReport, ShiftCheck, ShiftSuite, SpotCheck};
pub use error::ContinuityError;
pub use report::{CheckRecord, SweepReport};
pub use shift::{ShiftSpec, Side};
pub use sweeps::{
    discreteness_forcing, remark_sweep_point, verify_cofinite_block_shifts,
    verify_diag_tail_semigroup, verify_zero_compact_monoid, DirectionalVerdicts,
};
pub use verdict::{ContinuityVerdict, EscapeEntry, WitnessEntry};
