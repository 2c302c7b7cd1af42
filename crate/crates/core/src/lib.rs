//! Computable machinery for the quartic large sieve over `Z[i]`.
//!
//! The crate provides exact Gaussian-integer arithmetic ([`zi`]), quartic
//! residue symbols and reciprocity ([`symbol`]), Gauss sums and the
//! rational-twist sums `tau` ([`gauss`]), primitive quartic Dirichlet
//! characters together with a brute-force character-group oracle ([`chars`]),
//! the smoothed-sum analytic toolkit ([`analysis`]), and an empirical
//! large-sieve harness ([`sieve`]) that measures spectral norms of character
//! matrices, checks duality inequalities and runs the exponent recursion.
//!
//! Everything is deterministic: enumerations are ordered by `(norm, a, b)`,
//! report serialization is byte-stable, and the only randomness (coefficient
//! vectors in consistency checks) comes from fixed-seed generators.

pub mod acceptance;
pub mod analysis;
pub mod chars;
pub mod gauss;
pub mod linalg;
pub mod quad;
pub mod report;
pub mod sieve;
pub mod symbol;
pub mod zi;

mod error;

pub use error::{Error, Result};
pub use symbol::QuarticSymbolValue;
pub use zi::GaussianInteger;
