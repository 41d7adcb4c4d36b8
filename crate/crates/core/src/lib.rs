//! Ur-spinor algebra and the tetrads built from it.
//!
//! The crate follows one chain of constructions:
//!
//! * [`spinor`]: points of U(2), the quaternion chart of S³, ur-spinor dyads
//!   and ε-metric index gymnastics.
//! * [`tetrad`]: null and real tetrads from Pauli bilinears of a dyad,
//!   Minkowski-metric reconstruction, and left-translated tangent frames on S³.
//! * [`fock`]: four bosonic modes truncated at a total-quanta cutoff, ladder
//!   operators, the symmetrized bilinears τ̂ and the operator-valued tetrad.
//! * [`cosmos`]: the linear expansion law and the reference ur count.
//!
//! Everything here is `no_std` and needs only `alloc` (for the Fock space).

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cosmos;
mod error;
pub mod fock;
pub mod spinor;
#[cfg(test)]
mod testutil;
pub mod tetrad;
pub mod tolerance;

pub use error::Error;
pub use num_complex::Complex64 as C64;

pub type Result<T, E = Error> = core::result::Result<T, E>;
