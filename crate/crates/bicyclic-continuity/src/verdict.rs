//! Continuity verdicts: certificates with explicit epistemic status.

use serde::{Deserialize, Serialize};

use bicyclic_core::ExtElem;
use bicyclic_topologies::BasicNbhd;

/// One row of a witness table: for the `target_param`-basic around the
/// image point, the `source_param`-basic around the source point maps
/// inside it. The smallest working source parameter is recorded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub target_param: u64,
    pub source_param: u64,
}

/// One verified escape: a member of the `source_param`-basic at the
/// point whose image lands outside the offending target basic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EscapeEntry {
    pub source_param: u64,
    pub escaper: ExtElem,
    pub image: ExtElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ContinuityVerdict {
    /// A structural rule covers every target parameter; the table
    /// shows the per-parameter witnesses up to the requested bound.
    ContinuousExact {
        rule: String,
        table: Vec<WitnessEntry>,
    },
    /// Witnesses were found for every target parameter up to `bound`,
    /// by bounded search rather than a structural rule.
    ContinuousUpToBound {
        bound: u64,
        table: Vec<WitnessEntry>,
    },
    /// A structural rule shows the shift escapes the `offending` basic
    /// from inside every source basic; one escaper per source
    /// parameter up to `bound` is recorded and machine-checked.
    Discontinuous {
        offending: BasicNbhd,
        escapes: Vec<EscapeEntry>,
        bound: u64,
        rule: String,
    },
    /// Neither a witness within the bound nor a structural rule; never
    /// silently merged into a continuous verdict.
    Inconclusive { reason: String },
}

impl ContinuityVerdict {
    pub fn is_continuous(&self) -> bool {
        matches!(
            self,
            ContinuityVerdict::ContinuousExact { .. }
                | ContinuityVerdict::ContinuousUpToBound { .. }
        )
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ContinuityVerdict::ContinuousExact { .. })
    }

    pub fn is_discontinuous(&self) -> bool {
        matches!(self, ContinuityVerdict::Discontinuous { .. })
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            ContinuityVerdict::ContinuousExact { .. } => "continuous-exact",
            ContinuityVerdict::ContinuousUpToBound { .. } => "continuous-up-to-bound",
            ContinuityVerdict::Discontinuous { .. } => "discontinuous",
            ContinuityVerdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn witness_table(&self) -> Option<&[WitnessEntry]> {
        match self {
            ContinuityVerdict::ContinuousExact { table, .. }
            | ContinuityVerdict::ContinuousUpToBound { table, .. } => Some(table),
            _ => None,
        }
    }
}
