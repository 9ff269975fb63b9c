//! Cyclic codes over `R`: construction from divisor chains, membership,
//! enumeration, reverse-complement checks, and the `(1+u^2)` subcode.

mod chains;
mod cyclic;
mod oracle;
mod span;
mod word;

use thiserror::Error;

pub use chains::{enumerate_chains, enumerate_distinct_codes, Chains};
pub use cyclic::{CodeDescriptor, CyclicCodeR, SubcodeReport, DEFAULT_CAP};
pub use oracle::{brute_force_ideals, DEFAULT_ORACLE_CAP};
pub use span::{Elements, Span};
pub use word::RingWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("length n must be at least 1")]
    ZeroLength,
    #[error("f{index} = {poly} does not divide x^{n}-1")]
    NotADivisor {
        index: usize,
        poly: String,
        n: usize,
    },
    #[error("chain violation: f{inner} = {inner_poly} does not divide f{outer} = {outer_poly}")]
    ChainViolation {
        inner: usize,
        outer: usize,
        inner_poly: String,
        outer_poly: String,
    },
    #[error("word length {got} does not match code length {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("code has 2^{log2_size} words, above the cap of {cap}")]
    CapExceeded { log2_size: usize, cap: u64 },
    #[error("16^{n} elements exceed the oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: u64 },
}
