//! Bernstein-Sato polynomials and multiplier ideals of monomial ideals.
//!
//! The b-function of a monomial ideal is computed as the monic generator of
//! an elimination ideal built from binomial products over a lattice cone
//! decomposition ([`conegen`], [`groebner`], [`bsengine`]). Multiplier-ideal
//! data comes from the Newton polyhedron ([`newton`]), and the two sides are
//! cross-checked: the log-canonical threshold must be the smallest root of
//! `b(-s)`, and every jumping coefficient below it plus one must be a root.
//!
//! Everything is exact; see [`exactalg`].

pub mod bsengine;
pub mod conegen;
pub mod exactalg;
pub mod groebner;
pub mod newton;
pub mod polyhedra;

pub use bsengine::{bernstein_sato, bw_generator, codim, compose_thom_sebastiani, BsResult, WeightVector};
pub use conegen::{af_generators, ExponentMatrix, ShiftVector, SignVector};
pub use exactalg::{FactoredBPoly, MultiPoly, Rational, UniPoly};
pub use newton::{check_roots, Jump, JumpReport, NewtonPolyhedron, RootJumpCheck};

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polynomial has a factor without rational roots: {0}")]
    NonRationalFactor(String),
    #[error("the zero polynomial cannot be factored")]
    ZeroPolynomial,
    #[error("empty input")]
    EmptyInput,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("elimination ideal contains no univariate polynomial")]
    ZeroEliminationIdeal,
    #[error("shift vector entries sum to {0}, expected 1")]
    BadShiftSum(i64),
    #[error("coordinate {0} is not strictly positive")]
    NonPositiveCoordinate(usize),
    #[error("invalid exponent matrix: {0}")]
    InvalidMatrix(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("bound {max} is below the log canonical threshold {lct}")]
    BelowThreshold { max: String, lct: String },
    #[error("{got} variables exceed the supported maximum of {max}")]
    TooManyVariables { max: usize, got: usize },
}
