//! Nearest-neighbor thermodynamics and the stem-distance model.
//!
//! Weights are magnitudes of the stacked-pair free energy
//! `dG = dH - T dS / 1000` (dS in cal/(mol K)). All functions take strands in
//! 5'->3' order and look pairs up in that orientation.

mod analysis;
mod stem;
mod table;

use thiserror::Error;

use crate::codes::CodeError;

pub use analysis::{analyze_code, analyze_span, analyze_words, fixed4, StemReport};
pub use stem::{hybridization_energy, stem_distance, stem_distance_ring, stem_similarity};
pub use table::{
    build_weight_table, rc_classes, NearestNeighborParams, Provenance, StemWeightTable,
    DEFAULT_TEMPERATURE, STACKED_PAIRS,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThermoError {
    #[error("strand lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("temperature must be positive kelvin, got {0}")]
    BadTemperature(f64),
    #[error("no parameters for stacked pair {0} or its reverse complement")]
    MissingPair(String),
    #[error("conflicting values for stacked pair {0} and its reverse complement")]
    ConflictingClass(String),
    #[error("negative weight for {0}")]
    NegativeWeight(String),
    #[error("weight table CSV: {0}")]
    Csv(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}
