use thiserror::Error;

use bicyclic_core::CoreError;
use bicyclic_topologies::TopologyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContinuityError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error("invalid shift spec: {0}")]
    InvalidSpec(String),
}
