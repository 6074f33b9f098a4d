//! Exact arithmetic for rational functions in `q`, `z` and `w` (with
//! `w^2 = z` carrying half-integer powers of the spectral parameter),
//! q-integers and q-binomials, and dense matrices over that ring.

pub mod eval;
pub mod poly;
pub mod qsym;
pub mod ratfn;
pub mod rfmatrix;
pub mod series;

pub use eval::Number;
pub use poly::{Mono, Poly, Var};
pub use qsym::{q_binom, q_factorial, q_int};
pub use ratfn::RationalFn;
pub use rfmatrix::RFMatrix;
pub use series::series_at_one;

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("pole at zeta = 1 while expanding")]
    PoleAtOne,
    #[error("value diverges as q -> 0")]
    DivergentLimit,
    #[error("exact evaluation requires w-free input (half-integer powers present)")]
    WPresent,
    #[error("matrix dimensions {0}x{1} and {2}x{3} incompatible")]
    Dimensions(usize, usize, usize, usize),
    #[error("linear system is singular or inconsistent: {0}")]
    BadSystem(String),
}
