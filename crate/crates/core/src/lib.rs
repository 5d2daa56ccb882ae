//! Exact-arithmetic plethystic isomorphisms and weight/defect invariants for
//! representations of 2×2 matrix groups.
//!
//! The crate builds polynomial representations of GL₂(K)/SL₂(K) over exact
//! fields (GF(p), GF(p^k), ℚ) as constructor trees, realizes the explicit
//! isomorphisms between plethysms of the natural module (complement map,
//! Wronskian map, Hermite composite), and computes weight-space and
//! defect-set invariants that certify non-isomorphism results.
//!
//! Modules:
//! - [`field`]: exact field arithmetic, symbolic-γ polynomials, Lucas-theorem
//!   combinatorics.
//! - [`shapes`]: partitions, tableaux, complements, place permutations.
//! - [`repmod`]: representations with enumerated bases, group/Lie actions,
//!   Garnir straightening.
//! - [`isomaps`]: the explicit linear maps between plethysms.
//! - [`weights`]: weight decompositions and defect sets.
//! - [`certify`]: equivariance/bijectivity checks, non-isomorphism
//!   certificates, packaged theorem verifications.

pub mod certify;
pub mod error;
pub mod field;
pub mod isomaps;
pub mod linalg;
pub mod parse;
pub mod repmod;
pub mod scalar;
pub mod shapes;
pub mod weights;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, Polynomial};
pub use scalar::Scalar;
