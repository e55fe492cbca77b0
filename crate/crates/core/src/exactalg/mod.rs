//! Exact rational arithmetic and the polynomial types built on it.
//!
//! Nothing in the crate ever rounds: every root, threshold and jump value is
//! a [`Rational`].

mod factored;
mod multipoly;
mod rational;
mod roots;
mod unipoly;

pub use factored::FactoredBPoly;
pub use multipoly::{default_names, MultiPoly};
pub use rational::{denom_lcm, ParseRationalError, Rational};
pub use unipoly::UniPoly;
