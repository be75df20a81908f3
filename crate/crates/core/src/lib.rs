//! Exact symbolic computation in representation rings and ±-graded
//! Grothendieck-Witt rings of symplectic groups, tori with involution and
//! GL_n with involution, including augmentation-ideal completions.
//!
//! Everything here is exact: integer lattices, arbitrary-precision integer
//! coefficients, and exact rational linear algebra. No floating point.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub use num_bigint;
pub use num_rational;
pub use num_traits;

pub mod char_ring;
pub mod completion;
pub mod diag_restrict;
pub mod error;
pub mod freudenthal;
pub mod gw_coeff;
pub mod gw_ring;
pub mod linalg;
pub mod rep_ring;
pub mod root_system;
pub mod torsor;

pub use error::{Error, Result};
