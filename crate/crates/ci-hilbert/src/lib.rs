//! Exact-arithmetic toolkit for Hilbert polynomials of complete
//! intersections in projective space.
//!
//! The crate computes Hilbert polynomials by two independent routes (a
//! Koszul-resolution inclusion-exclusion formula and a Riemann-Roch route
//! through modified Todd invariants), generates those invariants both
//! symbolically and numerically, recovers degree sequences from Hilbert
//! polynomials in codimension ≤ 6, and searches exhaustively for pairs of
//! distinct degree sequences sharing a Hilbert polynomial. All arithmetic is
//! exact rational; there is no floating point anywhere.

pub mod algebra;
pub mod error;
pub mod hilbert;
pub mod symfunc;
pub mod todd;

pub mod sequence;

pub use error::{Error, Result};
pub use sequence::DegreeSequence;
