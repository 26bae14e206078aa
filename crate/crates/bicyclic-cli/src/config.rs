//! Run configuration shared by every claim runner.

use serde::{Deserialize, Serialize};

use bicyclic_topologies::is_prime;

/// Bounds and the prime every sweep runs at. All truncation parameters
/// are explicit so reports are reproducible from the config alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub prime: u64,
    pub elem_bound: u64,
    pub param_bound: u64,
    pub witness_bound: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { prime: 2, elem_bound: 12, param_bound: 8, witness_bound: 16 }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !is_prime(self.prime) {
            return Err(format!("--prime must be a prime ≥ 2, got {}", self.prime));
        }
        for (name, value) in [
            ("--elem-bound", self.elem_bound),
            ("--param-bound", self.param_bound),
            ("--witness-bound", self.witness_bound),
        ] {
            if value == 0 {
                return Err(format!("{name} must be at least 1"));
            }
        }
        Ok(())
    }
}
