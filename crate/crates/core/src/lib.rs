//! Cyclic DNA codes over the chain ring `R = F2[u]/(u^4 - 1)`.
//!
//! * [`ring`]: arithmetic in `R` and the map from ring elements to nucleotide pairs.
//! * [`polys`]: polynomials over F2 and `R`, factorization of `x^n - 1`, reciprocals.
//! * [`codes`]: cyclic codes from divisor chains, membership, enumeration,
//!   reverse-complement checks, the `(1+u^2)` subcode.
//! * [`dna`]: strands, Watson-Crick operations, the word-to-strand map, FASTA.
//! * [`thermo`]: stacked-pair weights, stem similarity and distance, hybridization energy.
//! * [`cli`]: the command-line front end.
//!
//! The thermodynamic layer is generic over the float type; the aliases below
//! fix it to `f64` (or `f32`).

pub mod cli;
pub mod codes;
pub mod dna;
pub mod error;
pub mod polys;
pub mod ring;
pub mod scalar;
pub mod thermo;

pub use error::{Error, ParseError};
pub use scalar::Scalar;

pub use codes::{CodeDescriptor, CyclicCodeR, RingWord, Span};
pub use dna::{DnaStrand, Nucleotide};
pub use polys::{Factorization, PolyF2, PolyR};
pub use ring::{Dinucleotide, RingElement};

pub type WeightTable = thermo::StemWeightTable<f64>;
pub type WeightTable32 = thermo::StemWeightTable<f32>;
pub type Params = thermo::NearestNeighborParams<f64>;
pub type Report = thermo::StemReport<f64>;
pub type Report32 = thermo::StemReport<f32>;
