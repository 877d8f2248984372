//! Quantum BCH codes from classical BCH codes over GF(2), GF(4) and GF(2^ℓ).
//!
//! The crate builds cyclic codes from zero sets, checks the self-duality
//! conditions needed for the CSS-type constructions, verifies designed,
//! dual and true minimum distances, and simulates decoding over
//! depolarizing and erasure channels.

pub mod basis_expand;
pub mod bits;
pub mod channel_sim;
pub mod cyclic_code;
pub mod cyclotomic;
pub mod distance;
pub mod error;
pub mod finite_field;
pub mod linalg;
pub mod poly;
pub mod quantum;

pub use error::{Error, Result};
