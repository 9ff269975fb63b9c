use thiserror::Error;

use crate::codes::CodeError;
use crate::dna::DnaError;
use crate::polys::PolyError;
use crate::thermo::ThermoError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid ring element `{0}` (expected hex digit 0-F or polynomial like 1+u+u^3)")]
    RingElement(String),
    #[error("invalid dinucleotide `{0}`")]
    Dinucleotide(String),
    #[error("invalid binary polynomial `{0}` (expected bit string like 1101 or 1+x+x^3)")]
    Polynomial(String),
    #[error("invalid strand `{0}`")]
    Strand(String),
    #[error("invalid ring word `{0}`")]
    Word(String),
}

/// Any error produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Dna(#[from] DnaError),
    #[error(transparent)]
    Thermo(#[from] ThermoError),
}
