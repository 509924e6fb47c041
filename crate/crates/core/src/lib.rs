//! Exact enumerators of Smirnov words by descents and cyclic descents.
//!
//! Closed forms live in [`enumerators`]; brute-force oracles that they are
//! checked against live in [`combinatorics`].

mod error;
mod json;
mod variant;

pub mod combinatorics;
pub mod enumerators;
pub mod exact_algebra;
pub mod symfun;

pub use error::{Error, Result};
pub use variant::Variant;
