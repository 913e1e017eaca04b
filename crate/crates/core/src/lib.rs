//! Exact computation of Bott–Samelson point-count distributions on `S_n`,
//! commutation-class invariants of reduced words, and brute-force checks of
//! the identities relating them.
//!
//! Conventions: permutations act on `[n] = {1, …, n}` in one-line notation,
//! `(u·v)(k) = u(v(k))`, so `w·s_i` swaps positions `i` and `i+1`. Words are
//! sequences of letters in `[1, n-1]` and `w(R) = s_{i_1} ⋯ s_{i_L}`.

pub mod cellrep;
pub mod demazure;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod oracle;
pub mod perm;
pub mod tl;
pub mod word;

pub use cellrep::CellMatrix;
pub use error::{Error, Result};
pub use hecke::{Distribution, HeckeElement};
pub use laurent::LaurentPolynomial;
pub use perm::{Permutation, StandardTableau};
pub use tl::TLMonomial;
pub use word::{ClassGraph, ClassKey, TripleStat, Word};
