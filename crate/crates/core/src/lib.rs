//! Exact combinatorics for mod p representations of GL2 over an unramified
//! p-adic field.
//!
//! The crate works entirely with discrete invariants: Serre weights and
//! torus characters ([`weights`]), affine tuples and the tuple sets that
//! index weights and principal-series constituents ([`tuples`]), weight sets
//! and numerical hypothesis profiles ([`diagram`]), subspace-tuple models of
//! the subrepresentation lattice over a small prime field ([`lattice`]), and
//! characteristic cycles of monomial modules over
//! `F[y_i, z_i] / (y_i z_i)` ([`charcycle`]).
//!
//! Every operation is pure and deterministic. No floating point is used.

pub mod charcycle;
pub mod diagram;
mod error;
pub mod lattice;
pub mod oracle;
pub mod tuples;
pub mod weights;

pub use error::{Error, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        num_integer::binomial(n, k)
    }
}
