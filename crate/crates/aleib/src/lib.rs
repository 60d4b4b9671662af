//! Exact-arithmetic structure-constant computer algebra for finite-dimensional
//! anti-Leibniz algebras, coalgebras and bialgebras.
//!
//! Everything is represented by dense structure-constant tensors over an exact
//! field (arbitrary-precision rationals or a small prime field), and every
//! algebraic law is verified by an exact-zero test on basis tuples.

pub mod affine;
pub mod algebra;
pub mod bialgebra;
pub mod bimodule;
pub mod catalog;
pub mod io;
pub mod matrix;
pub mod report;
pub mod rotabaxter;
pub mod scalar;
pub mod search;
pub mod tensor;
pub mod tensorconstruct;
pub mod yangbaxter;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("matrix not invertible (rank {rank})")]
    NotInvertible { rank: usize },
    #[error("r-matrix is not factorizable")]
    NotFactorizable,
    #[error("weight must be nonzero")]
    ZeroWeight,
    #[error("r-matrix is not symmetric")]
    NotSymmetric,
    #[error("unknown fixture: {0}")]
    UnknownFixture(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("search budget exceeded: needed {needed}, budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("degree outside window of half-width {window}")]
    WindowOverflow { window: i64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error in field {field}: {message}")]
    Schema { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
