use alloc::vec::Vec;

use num_traits::{Float, Zero};

use super::{FockSpace, Mode, SparseOperator};
use crate::C64;

/// `â_r`: lowers `n_r` by one with amplitude `√n_r`.
pub fn annihilator(f: &FockSpace, r: Mode) -> SparseOperator {
    let slot = r.slot();
    let triplets = f
        .basis()
        .iter()
        .enumerate()
        .filter(|(_, occ)| occ[slot] > 0)
        .map(|(i, occ)| {
            let mut lowered = *occ;
            lowered[slot] -= 1;
            let j = f.index_of(&lowered).expect("lowered state is in the space");
            (j, i, C64::new(Float::sqrt(occ[slot] as f64), 0.0))
        });
    SparseOperator::from_triplets(f.dimension(), triplets)
}

/// `â_r⁺`, the conjugate transpose of [`annihilator`]. Top-layer states are
/// sent to zero.
pub fn creator(f: &FockSpace, r: Mode) -> SparseOperator {
    annihilator(f, r).adjoint()
}

/// The occupation count `Σ n_r` as a diagonal operator.
pub fn total_quanta(f: &FockSpace) -> SparseOperator {
    SparseOperator::diagonal((0..f.dimension()).map(|i| C64::new(f.total_quanta_of(i) as f64, 0.0)))
}

/// `τ̂_rs = ½{â_r⁺, â_s} = â_r⁺ â_s + ½ δ_rs`.
///
/// `τ̂_rs` conserves the total number of quanta, so its restriction to the
/// truncated space is exact. Matrix elements are written down directly:
/// `n_r + ½` on the diagonal for `r = s`, and `√(n_s (n_r + 1))` for the hop
/// of one quantum from mode `s` to mode `r` otherwise.
pub fn tau(f: &FockSpace, r: Mode, s: Mode) -> SparseOperator {
    let (rs, ss) = (r.slot(), s.slot());
    let triplets = f.basis().iter().enumerate().filter_map(|(i, occ)| {
        if rs == ss {
            return Some((i, i, C64::new(occ[rs] as f64 + 0.5, 0.0)));
        }
        if occ[ss] == 0 {
            return None;
        }
        let mut hopped = *occ;
        hopped[ss] -= 1;
        hopped[rs] += 1;
        let j = f.index_of(&hopped).expect("hop conserves total quanta");
        let amp = Float::sqrt(occ[ss] as f64 * hopped[rs] as f64);
        Some((j, i, C64::new(amp, 0.0)))
    });
    SparseOperator::from_triplets(f.dimension(), triplets)
}

/// `n̂ = Σ_r τ̂_rr`, which equals the total quanta plus 2.
pub fn total_number(f: &FockSpace) -> SparseOperator {
    Mode::ALL
        .iter()
        .fold(SparseOperator::zero(f.dimension()), |acc, &r| {
            &acc + &tau(f, r, r)
        })
}

/// Coefficients `c_rs` of a linear combination `Σ c_rs τ̂_rs`, indexed `[r-1][s-1]`.
pub type Coefficients = [[C64; 4]; 4];

/// The four legs of the operator tetrad.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Leg {
    T,
    Z,
    X,
    Y,
}

impl Leg {
    pub const ALL: [Leg; 4] = [Leg::T, Leg::Z, Leg::X, Leg::Y];

    pub fn name(self) -> char {
        match self {
            Leg::T => 't',
            Leg::Z => 'z',
            Leg::X => 'x',
            Leg::Y => 'y',
        }
    }

    fn slot(self) -> usize {
        match self {
            Leg::T => 0,
            Leg::Z => 1,
            Leg::X => 2,
            Leg::Y => 3,
        }
    }
}

/// Every component of the quantized tetrad as a combination of `τ̂_rs`,
/// indexed `[leg][μ]` with legs in the order `t, z, x, y`.
pub fn tetrad_coefficients() -> [[Coefficients; 4]; 4] {
    let zero = [[C64::zero(); 4]; 4];
    let half = C64::new(0.5, 0.0);
    let ihalf = C64::new(0.0, 0.5);
    // Builds `k · Σ sign·τ̂_rs` from 1-based index pairs.
    let combo = |k: C64, terms: &[(f64, usize, usize)]| {
        let mut c = zero;
        for &(sign, r, s) in terms {
            c[r - 1][s - 1] += k * sign;
        }
        c
    };

    let t0 = combo(
        C64::new(1.0, 0.0),
        &[(1.0, 1, 1), (1.0, 2, 2), (1.0, 3, 3), (1.0, 4, 4)],
    );
    let z = [
        zero,
        combo(
            half,
            &[(-1.0, 1, 2), (-1.0, 2, 1), (1.0, 3, 4), (1.0, 4, 3)],
        ),
        combo(
            ihalf,
            &[(1.0, 1, 2), (-1.0, 2, 1), (-1.0, 3, 4), (1.0, 4, 3)],
        ),
        combo(
            half,
            &[(-1.0, 1, 1), (1.0, 2, 2), (1.0, 3, 3), (-1.0, 4, 4)],
        ),
    ];
    let x = [
        zero,
        combo(half, &[(1.0, 1, 4), (1.0, 4, 1), (1.0, 2, 3), (1.0, 3, 2)]),
        combo(
            ihalf,
            &[(-1.0, 1, 4), (1.0, 4, 1), (-1.0, 3, 2), (1.0, 2, 3)],
        ),
        combo(
            half,
            &[(1.0, 1, 3), (1.0, 3, 1), (-1.0, 2, 4), (-1.0, 4, 2)],
        ),
    ];
    let y = [
        zero,
        combo(
            ihalf,
            &[(-1.0, 1, 4), (1.0, 4, 1), (-1.0, 2, 3), (1.0, 3, 2)],
        ),
        combo(
            half,
            &[(-1.0, 1, 4), (-1.0, 4, 1), (1.0, 2, 3), (1.0, 3, 2)],
        ),
        combo(
            ihalf,
            &[(-1.0, 1, 3), (1.0, 3, 1), (1.0, 2, 4), (-1.0, 4, 2)],
        ),
    ];
    [[t0, zero, zero, zero], z, x, y]
}

fn assemble(f: &FockSpace, coeffs: &Coefficients, taus: &[SparseOperator]) -> SparseOperator {
    let mut acc = SparseOperator::zero(f.dimension());
    for (r, row) in coeffs.iter().enumerate() {
        for (s, &k) in row.iter().enumerate() {
            if !k.is_zero() {
                acc = &acc + &taus[4 * r + s].scale(k);
            }
        }
    }
    acc
}

/// The operator-valued tetrad `(t̂, ẑ, x̂, ŷ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorTetrad {
    pub t_hat: [SparseOperator; 4],
    pub z_hat: [SparseOperator; 4],
    pub x_hat: [SparseOperator; 4],
    pub y_hat: [SparseOperator; 4],
}

impl OperatorTetrad {
    pub fn leg(&self, leg: Leg) -> &[SparseOperator; 4] {
        match leg {
            Leg::T => &self.t_hat,
            Leg::Z => &self.z_hat,
            Leg::X => &self.x_hat,
            Leg::Y => &self.y_hat,
        }
    }

    pub fn component(&self, leg: Leg, mu: usize) -> &SparseOperator {
        &self.leg(leg)[mu]
    }

    /// All sixteen `(leg, μ, operator)` triples.
    pub fn components(&self) -> impl Iterator<Item = (Leg, usize, &SparseOperator)> + '_ {
        Leg::ALL
            .into_iter()
            .flat_map(move |leg| (0..4).map(move |mu| (leg, mu, self.component(leg, mu))))
    }
}

pub fn operator_tetrad(f: &FockSpace) -> OperatorTetrad {
    let taus: Vec<SparseOperator> = Mode::ALL
        .iter()
        .flat_map(|&r| Mode::ALL.iter().map(move |&s| (r, s)))
        .map(|(r, s)| tau(f, r, s))
        .collect();
    let coeffs = tetrad_coefficients();
    let build = |leg: Leg| -> [SparseOperator; 4] {
        core::array::from_fn(|mu| assemble(f, &coeffs[leg.slot()][mu], &taus))
    };
    OperatorTetrad {
        t_hat: build(Leg::T),
        z_hat: build(Leg::Z),
        x_hat: build(Leg::X),
        y_hat: build(Leg::Y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::expectation;
    use alloc::vec;

    fn mode(r: usize) -> Mode {
        Mode::new(r).unwrap()
    }

    fn unit(f: &FockSpace, occ: [u32; 4]) -> Vec<C64> {
        let mut v = vec![C64::zero(); f.dimension()];
        v[f.index_of(&occ).unwrap()] = C64::new(1.0, 0.0);
        v
    }

    #[test]
    fn annihilator_kills_vacuum() {
        let f = FockSpace::new(3).unwrap();
        let out = annihilator(&f, mode(1))
            .apply(&unit(&f, [0, 0, 0, 0]))
            .unwrap();
        assert!(out.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn ladder_amplitudes() {
        let f = FockSpace::new(3).unwrap();
        let a2 = annihilator(&f, mode(2));
        let out = a2.apply(&unit(&f, [0, 3, 0, 0])).unwrap();
        let j = f.index_of(&[0, 2, 0, 0]).unwrap();
        assert!((out[j].re - 3f64.sqrt()).abs() < 1e-15);
        // Creation out of the top layer is truncated away.
        let out = creator(&f, mode(1)).apply(&unit(&f, [0, 3, 0, 0])).unwrap();
        assert!(out.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn vacuum_commutator() {
        let f = FockSpace::new(2).unwrap();
        let comm = annihilator(&f, mode(1)).commutator(&creator(&f, mode(1)));
        let vac = unit(&f, [0, 0, 0, 0]);
        assert_eq!(comm.apply(&vac).unwrap(), vac);
    }

    #[test]
    fn canonical_commutators() {
        let f = FockSpace::new(4).unwrap();
        let id = SparseOperator::identity(f.dimension());
        for r in Mode::ALL {
            for s in Mode::ALL {
                let a_r = annihilator(&f, r);
                let a_s = annihilator(&f, s);
                let mut comm = a_r.commutator(&creator(&f, s));
                if r == s {
                    comm = &comm - &id;
                }
                assert!(comm.max_abs_in_columns(|i| f.is_safe(i)) < 1e-14);
                assert!(a_r.commutator(&a_s).max_abs() < 1e-14);
                assert!(creator(&f, r).commutator(&creator(&f, s)).max_abs() < 1e-14);
            }
        }
        // The top layer is where truncation shows up.
        let comm = annihilator(&f, mode(1)).commutator(&creator(&f, mode(1)));
        assert!((&comm - &id).max_abs() > 0.5);
    }

    #[test]
    fn tau_on_vacuum() {
        let f = FockSpace::new(2).unwrap();
        let vac = unit(&f, [0, 0, 0, 0]);
        let out = tau(&f, mode(1), mode(1)).apply(&vac).unwrap();
        assert_eq!(out[0], C64::new(0.5, 0.0));
        assert!(out[1..].iter().all(|c| c.is_zero()));
        assert_eq!(
            expectation(&total_number(&f), &vac).unwrap(),
            C64::new(2.0, 0.0)
        );
    }

    #[test]
    fn tau_adjoint_swaps_indices() {
        let f = FockSpace::new(3).unwrap();
        for r in Mode::ALL {
            for s in Mode::ALL {
                assert_eq!(tau(&f, r, s).adjoint(), tau(&f, s, r));
            }
        }
    }

    #[test]
    fn tau_matches_anticommutator_on_a_larger_space() {
        // Independent route: build ½{â_r⁺, â_s} literally one layer up and
        // cut back; no top-layer loss reaches the kept states.
        let cutoff = 3;
        let f = FockSpace::new(cutoff).unwrap();
        let big = FockSpace::new(cutoff + 1).unwrap();
        for r in Mode::ALL {
            for s in Mode::ALL {
                let literal = creator(&big, r)
                    .anticommutator(&annihilator(&big, s))
                    .scale(C64::new(0.5, 0.0))
                    .truncate(f.dimension());
                assert!(
                    (&literal - &tau(&f, r, s)).max_abs() < 1e-14,
                    "tau {}{}",
                    r.label(),
                    s.label()
                );
            }
        }
    }

    #[test]
    fn number_offset_is_two() {
        let f = FockSpace::new(4).unwrap();
        let diff = &total_number(&f) - &total_quanta(&f);
        let two = SparseOperator::identity(f.dimension()).scale(C64::new(2.0, 0.0));
        assert_eq!((&diff - &two).max_abs(), 0.0);
    }

    #[test]
    fn cutoff_one_time_component() {
        let f = FockSpace::new(1).unwrap();
        let ot = operator_tetrad(&f);
        let t0 = ot.component(Leg::T, 0);
        assert_eq!(t0.nnz(), 5);
        assert!(t0.triplets().iter().all(|&(r, c, _)| r == c));
        let d: Vec<f64> = t0.diagonal_entries().iter().map(|c| c.re).collect();
        assert_eq!(d, vec![2.0, 3.0, 3.0, 3.0, 3.0]);
    }

    #[test]
    fn structure_of_the_operator_tetrad() {
        let f = FockSpace::new(3).unwrap();
        let ot = operator_tetrad(&f);
        for (leg, mu, op) in ot.components() {
            assert!(op.hermiticity_defect() < 1e-12, "{}{mu}", leg.name());
            let must_vanish = (leg == Leg::T) != (mu == 0);
            assert_eq!(op.is_zero(), must_vanish, "{}{mu}", leg.name());
        }
        let z3 = ot.component(Leg::Z, 3);
        assert!(z3.triplets().iter().all(|&(r, c, _)| r == c));
    }

    #[test]
    fn spatial_components_have_no_zero_point_shift() {
        let coeffs = tetrad_coefficients();
        for leg in [Leg::Z, Leg::X, Leg::Y] {
            for mu in 1..4 {
                let trace: C64 = (0..4).map(|r| coeffs[leg.slot()][mu][r][r]).sum();
                assert_eq!(trace, C64::zero());
            }
        }
        // So every spatial component annihilates the vacuum diagonal.
        let f = FockSpace::new(2).unwrap();
        let ot = operator_tetrad(&f);
        for leg in [Leg::Z, Leg::X, Leg::Y] {
            for mu in 1..4 {
                assert_eq!(ot.component(leg, mu).get(0, 0), C64::zero());
            }
        }
    }

    #[test]
    fn z3_on_single_quantum() {
        let f = FockSpace::new(2).unwrap();
        let ot = operator_tetrad(&f);
        let e = expectation(ot.component(Leg::Z, 3), &unit(&f, [1, 0, 0, 0])).unwrap();
        assert_eq!(e, C64::new(-0.5, 0.0));
    }
}
