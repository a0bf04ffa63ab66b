//! Exact representation-theoretic combinatorics of the free unitary and free
//! orthogonal compact quantum groups.
//!
//! Irreducible representations of the free unitary quantum group are indexed
//! by words in `α`, `β` and fuse by the free-monoid rule in [`fusion`]. The
//! number of fixed vectors of a tensor word is computed three independent ways
//! (fusion ring, colored non-crossing pairings in [`pairings`], and a truncated
//! Fock-space model in [`fock`]), and certified as an exact rank of explicit
//! fixed vectors in [`fixed_vectors`].

pub mod error;
pub mod exact;
pub mod fixed_vectors;
pub mod fock;
pub mod fusion;
pub mod matrix_file;
pub mod pairings;
pub mod powers;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, GaussianRational};
pub use fixed_vectors::{FixedSpace, FixedVector};
pub use fusion::{FusionElement, OWeight};
pub use pairings::{ColoredPairing, Pairing};
pub use words::{Letter, Word};
