//! Exact computations around equivariant Pólya-frequency sequences.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * [`shapes`]: partitions, skew shapes, compositions, ribbons, weights and
//!   permutations.
//! * [`symfunc`]: the character ring of a product of general linear groups in
//!   the Schur basis, Littlewood–Richardson coefficients and dimension
//!   evaluations.
//! * [`sequences`]: graded sequences, their Jacobi–Trudi minors and
//!   total-positivity scans, plus the Veronese / tensor / Segre transforms.
//! * [`quadric`]: quadric Schur functor dimensions, stable-range orthogonal
//!   decompositions and the multigraded Hilbert series factorization.
//! * [`resolutions`]: EFW partitions, pure free resolutions over polynomial
//!   rings, quadric hypersurfaces and rational normal curves, and the
//!   Herzog–Kühl type linear system.
//! * [`zelevinsky`]: the term layout of the Jacobi–Trudi complex and its
//!   Euler characteristic.
//!
//! Every quantity is an exact integer, rational or Schur class.

#![no_std]

extern crate alloc;

mod error;
pub mod linalg;
pub mod quadric;
pub mod resolutions;
pub mod sequences;
pub mod series;
pub mod shapes;
pub mod symfunc;
pub mod zelevinsky;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
