//! Exact computations for 3-strand braids modulo the center: free-group word
//! algebra on `a1 = σ1²`, `a2 = σ2²`, a solved word problem with a unique
//! normal form, syllable-based bounds on conformal invariants and entropy,
//! and exact counting functions checked against their analytic bounds.

pub mod braid;
pub mod classes;
pub mod counting;
pub mod error;
pub mod exact;
pub mod invariants;
pub mod oracle;
mod syntax;
pub mod words;

pub use error::{Error, Result};
pub use exact::Precision;
