//! Schubert determinantal ideals and their Gröbner bases under antidiagonal
//! term orders, permutation classifiers, and the regularity of binomial
//! cases computed by several independent routes.
//!
//! Indices are 1-based throughout: `x[i,j]` is the entry in row `i`, column
//! `j` of the generic matrix, and permutations are one-line words on `1..=n`.

pub mod error;
pub mod ideals;
pub mod partition;
pub mod perm;
pub mod poly;
pub mod regularity;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::{parse_permutation, Permutation};
pub use poly::{GridVar, Monomial, Polynomial, TermOrder};
