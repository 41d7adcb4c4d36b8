//! Second-quantized urs on a truncated four-mode bosonic Fock space.
//!
//! The spinor components `u_r` (r = 1..4) are promoted to ladder operators
//! `â_r` with `[â_r, â_s⁺] = δ_rs`. The space keeps every occupation
//! `(n₁, n₂, n₃, n₄)` with `Σ n_r ≤ cutoff`.
//!
//! Number-conserving operators such as `τ̂_rs = ½{â_r⁺, â_s}` are exact on
//! the truncated space; single ladder operators are not, and the canonical
//! commutator only holds on states below the top layer.

mod coherent;
mod operators;
mod space;
mod sparse;

pub use coherent::{coherent_state, expectation, BispinorAmplitudes, CoherentState};
pub use operators::{
    annihilator, creator, operator_tetrad, tau, tetrad_coefficients, total_number, total_quanta,
    Coefficients, Leg, OperatorTetrad,
};
pub use space::{FockSpace, Mode, Occupation, DEFAULT_MAX_DIMENSION};
pub use sparse::SparseOperator;
