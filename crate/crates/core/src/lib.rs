//! Exact Frobenius characters of symmetric-group actions.
//!
//! The crate covers the symmetric-function algebra over the rationals
//! (power-sum, complete homogeneous and Schur bases, products, Hall inner
//! product and plethysm), the character theory of `S_n` (Murnaghan–Nakayama
//! values, the Frobenius characteristic map, decomposition, Kronecker
//! products), partial transformations and loop-augmented rooted forests with
//! the characters of their conjugation orbits ("oduns"), and the adjoint
//! action of `S_n` on `Mat_n`, `Sym_n` and `Skew_n`.
//!
//! Every coefficient is an exact rational. Each closed-form computation is
//! paired with a brute-force route (orbit enumeration, explicit matrix
//! traces, expansion in finitely many variables) so the two can be compared.

pub mod adjoint;
pub mod characters;
pub mod cli;
pub mod error;
pub mod forests;
pub mod partitions;
pub mod symfunc;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use symfunc::{Basis, SymFunc};

/// Exact rational scalar used for every coefficient.
pub type Rational = num_rational::BigRational;
