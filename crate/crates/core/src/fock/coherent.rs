use alloc::vec::Vec;

use num_traits::{Float, Zero};

use super::{Coefficients, FockSpace, SparseOperator};
use crate::spinor::GroupElement;
use crate::tolerance::TRUNCATION_DEFICIT;
use crate::{Error, Result, C64};

/// The bispinor components `u_r`, phase included:
/// `(a, −b*, b, a*) · e^{iφ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BispinorAmplitudes {
    pub u: [C64; 4],
}

impl BispinorAmplitudes {
    pub fn from_element(g: &GroupElement) -> Self {
        let p = g.phase_factor();
        let (a, b) = (g.a(), g.b());
        BispinorAmplitudes {
            u: [a * p, -b.conj() * p, b * p, a.conj() * p],
        }
    }

    /// The conjugate components `u_r*`.
    pub fn conjugates(&self) -> [C64; 4] {
        self.u.map(|c| c.conj())
    }

    /// Multiplies every component by `e^{iθ}`.
    pub fn rephase(&self, theta: f64) -> Self {
        let p = C64::new(Float::cos(theta), Float::sin(theta));
        BispinorAmplitudes {
            u: self.u.map(|c| c * p),
        }
    }

    /// `Σ c_rs α_r* α_s` with `α = scale · u`: the c-number value of a
    /// `τ̂` combination.
    pub fn classical(&self, coeffs: &Coefficients, scale: f64) -> C64 {
        let alpha = self.u.map(|c| c * scale);
        let mut acc = C64::zero();
        for r in 0..4 {
            for s in 0..4 {
                acc += coeffs[r][s] * alpha[r].conj() * alpha[s];
            }
        }
        acc
    }
}

/// A product of four single-mode coherent states, cut at the Fock cutoff
/// and renormalized.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentState {
    alpha: [C64; 4],
    deficit: f64,
    vector: Vec<C64>,
}

impl CoherentState {
    pub fn alpha(&self) -> [C64; 4] {
        self.alpha
    }

    /// Norm lost to the cutoff before renormalization.
    pub fn deficit(&self) -> f64 {
        self.deficit
    }

    pub fn vector(&self) -> &[C64] {
        &self.vector
    }

    pub fn into_vector(self) -> Vec<C64> {
        self.vector
    }
}

/// Coherent state with mode amplitudes `α_r = scale · u_r`.
///
/// Fails with [`Error::TruncationTooLossy`] when the cutoff discards more
/// than [`TRUNCATION_DEFICIT`] of the norm.
pub fn coherent_state(
    f: &FockSpace,
    amps: &BispinorAmplitudes,
    scale: f64,
) -> Result<CoherentState> {
    let alpha = amps.u.map(|c| c * scale);
    let cutoff = f.cutoff();
    // α^n / √n! per mode, n = 0..=cutoff.
    let tables: [Vec<C64>; 4] = core::array::from_fn(|r| {
        let mut t = Vec::with_capacity(cutoff + 1);
        let mut term = C64::new(1.0, 0.0);
        t.push(term);
        for n in 1..=cutoff {
            term = term * alpha[r] / Float::sqrt(n as f64);
            t.push(term);
        }
        t
    });
    let mean: f64 = alpha.iter().map(|a| a.norm_sqr()).sum();
    let envelope = Float::exp(-0.5 * mean);
    let mut vector: Vec<C64> = f
        .basis()
        .iter()
        .map(|occ| {
            let amp = (0..4).fold(C64::new(1.0, 0.0), |acc, r| {
                acc * tables[r][occ[r] as usize]
            });
            amp * envelope
        })
        .collect();
    let kept: f64 = vector.iter().map(|c| c.norm_sqr()).sum();
    let deficit = (1.0 - kept).max(0.0);
    if !kept.is_finite() || deficit > TRUNCATION_DEFICIT {
        return Err(Error::TruncationTooLossy {
            deficit: if kept.is_finite() {
                deficit
            } else {
                f64::INFINITY
            },
        });
    }
    let norm = Float::sqrt(kept);
    for c in vector.iter_mut() {
        *c /= norm;
    }
    Ok(CoherentState {
        alpha,
        deficit,
        vector,
    })
}

/// `⟨ψ|A|ψ⟩`.
pub fn expectation(op: &SparseOperator, state: &[C64]) -> Result<C64> {
    if state.len() != op.dimension() {
        return Err(Error::DimensionMismatch {
            expected: op.dimension(),
            found: state.len(),
        });
    }
    Ok(op
        .triplets()
        .iter()
        .map(|&(r, c, v)| state[r].conj() * v * state[c])
        .sum())
}
