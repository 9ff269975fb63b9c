//! Polynomials over F2 and over `R`, and the factorization of `x^n - 1`.

mod f2;
mod factor;
mod ring_poly;

use thiserror::Error;

pub use f2::PolyF2;
pub use factor::{
    cyclotomic_cosets, factor_xn_minus_1, negacyclic_condition, Factor, Factorization,
    NegacyclicCheck,
};
pub use ring_poly::PolyR;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("length n must be at least 1")]
    ZeroLength,
    #[error("modulus {0} must be odd and positive")]
    EvenModulus(usize),
    #[error("{poly} does not divide x^{n}-1")]
    NotADivisor { poly: String, n: usize },
}
