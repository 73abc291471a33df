//! Two-level fractional factorial designs from quaternary linear codes.
//!
//! The crate builds ±1 designs as Gray-map images of Z4 codes, computes
//! their exact wordlength patterns and moment criteria, and selects
//! minimum-aberration designs through their complementary sets.

pub mod catalog;
pub mod combinatorics;
pub mod compset;
pub mod error;
pub mod exact;
pub mod gray;
pub mod oracle;
pub mod regsel;
pub mod sign_matrix;
pub mod wlp;
pub mod z4;

pub use error::{Error, Result};
pub use exact::Fraction;
pub use gray::{construct, construct_even, construct_odd, halve, GeneratorMatrix, Parity};
pub use sign_matrix::SignMatrix;
pub use wlp::{wlp_direct, wlp_distance, Resolution, WordLengthPattern};
pub use z4::{ComplementSet, ReferenceKind, ReferenceSet, Z4Vector};
