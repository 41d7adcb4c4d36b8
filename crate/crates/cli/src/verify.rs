//! Seeded verification sweeps over the algebraic identities of each module.

use clap::ValueEnum;
use rand::Rng;
use serde::Serialize;
use urtetrad::fock::{
    annihilator, coherent_state, creator, expectation, operator_tetrad, tau, tetrad_coefficients,
    total_number, total_quanta, BispinorAmplitudes, FockSpace, Leg, Mode, SparseOperator,
};
use urtetrad::spinor::{contract, Dyad, GroupElement};
use urtetrad::tetrad::{
    null_tetrad, pauli_bilinear, real_tetrad, real_tetrad_polynomials, reconstruct_metric,
    reconstruct_metric_general, tangent_frame_at, Metric4, MinkowskiMetric, RealTetrad,
    NULL_FRAME_METRIC, REAL_FRAME_METRIC,
};
use urtetrad::tolerance::CLASSICAL_LIMIT;
use urtetrad::{Error, C64};

use crate::json;
use crate::sampling::{random_element, random_point, random_spinor, sample_rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Spinor,
    Tetrad,
    Fock,
    All,
}

impl Suite {
    fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Spinor, Suite::Tetrad, Suite::Fock],
            s => vec![s],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Spinor => "spinor",
            Suite::Tetrad => "tetrad",
            Suite::Fock => "fock",
            Suite::All => "all",
        }
    }

    fn stream(self) -> u64 {
        match self {
            Suite::Spinor => 1,
            Suite::Tetrad => 2,
            Suite::Fock => 3,
            Suite::All => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub suite: Suite,
    pub cutoff: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            samples: 1000,
            seed: 0,
            tolerance: 1e-12,
            suite: Suite::All,
            cutoff: 4,
        }
    }
}

/// Worst observed deviation of one identity over a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub name: String,
    pub samples: usize,
    #[serde(serialize_with = "json::real")]
    pub max_deviation: f64,
    #[serde(serialize_with = "json::real")]
    pub tolerance: f64,
    pub pass: bool,
}

impl Record {
    pub fn new(name: impl Into<String>, tolerance: f64) -> Self {
        Record {
            name: name.into(),
            samples: 0,
            max_deviation: 0.0,
            tolerance,
            pass: true,
        }
    }

    pub fn observe(&mut self, deviation: f64) {
        // NaN counts as an unbounded deviation.
        let d = if deviation.is_nan() {
            f64::INFINITY
        } else {
            deviation.abs()
        };
        self.samples += 1;
        self.max_deviation = self.max_deviation.max(d);
        self.pass = self.max_deviation <= self.tolerance;
    }

    /// Combines partial sweeps of the same identity. Associative and commutative.
    pub fn merge(&mut self, other: &Record) {
        debug_assert_eq!(self.name, other.name);
        self.samples += other.samples;
        self.max_deviation = self.max_deviation.max(other.max_deviation);
        self.pass = self.max_deviation <= self.tolerance;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub samples: usize,
    #[serde(serialize_with = "json::real")]
    pub tolerance: f64,
    pub suites: Vec<&'static str>,
    pub cutoff: usize,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_real")]
    pub coherent_scale: Option<f64>,
    pub records: Vec<Record>,
    pub pass: bool,
}

fn opt_real<S: serde::Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => json::real(v, s),
        None => s.serialize_none(),
    }
}

/// Runs `sample` for every index and folds the returned deviations into `records`.
fn sweep<const K: usize>(
    cfg: &VerifyConfig,
    suite: Suite,
    names: [&str; K],
    tolerances: [f64; K],
    mut sample: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> [f64; K],
) -> Vec<Record> {
    let mut records: Vec<Record> = names
        .iter()
        .zip(tolerances)
        .map(|(n, t)| Record::new(format!("{}.{n}", suite.name()), t))
        .collect();
    for i in 0..cfg.samples {
        let mut rng = sample_rng(cfg.seed, suite.stream(), i as u64);
        for (rec, d) in records.iter_mut().zip(sample(&mut rng)) {
            rec.observe(d);
        }
    }
    records
}

fn max_metric_dev(g: &Metric4<C64>, target: &Metric4<f64>) -> f64 {
    let mut m = 0.0f64;
    for mu in 0..4 {
        for nu in 0..4 {
            m = m.max((g[mu][nu] - target[mu][nu]).norm());
        }
    }
    m
}

fn spinor_suite(cfg: &VerifyConfig) -> Vec<Record> {
    let tol = cfg.tolerance;
    sweep(
        cfg,
        Suite::Spinor,
        [
            "unitarity",
            "chart_round_trip",
            "dyad_uu_zero",
            "dyad_vv_zero",
            "dyad_vu_one",
            "dyad_uv_minus_one",
            "raise_lower_identity",
            "contract_antisymmetry",
        ],
        [tol; 8],
        |rng| {
            let g = random_element(rng);
            let back = GroupElement::from_quaternion(&g.to_quaternion(), g.phi());
            let round_trip = back
                .map(|b| (b.a() - g.a()).norm().max((b.b() - g.b()).norm()))
                .unwrap_or(f64::INFINITY);
            let d = Dyad::from_element(&g);
            let s = random_spinor(rng);
            let t = random_spinor(rng);
            let rl = s.lower().and_then(|l| l.raise()).map(|r| {
                (r.components[0] - s.components[0])
                    .norm()
                    .max((r.components[1] - s.components[1]).norm())
            });
            [
                g.det_su2() - 1.0,
                round_trip,
                contract(&d.u, &d.u).norm(),
                contract(&d.v, &d.v).norm(),
                (contract(&d.v, &d.u) - 1.0).norm(),
                (contract(&d.u, &d.v) + 1.0).norm(),
                rl.unwrap_or(f64::INFINITY),
                (contract(&s, &t) + contract(&t, &s)).norm(),
            ]
        },
    )
}

fn rotation_checks(rt: &RealTetrad) -> (f64, f64) {
    let r = rt.spatial_rotation();
    let mut orth = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            let s: f64 = (0..3).map(|k| r[k][i] * r[k][j]).sum();
            orth = orth.max((s - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    let det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
        - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
        + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
    (orth, (det - 1.0).abs())
}

fn frame_dev(a: &RealTetrad, b: &RealTetrad) -> f64 {
    a.frame()
        .iter()
        .zip(b.frame().iter())
        .flat_map(|(x, y)| (0..4).map(move |mu| (x[mu] - y[mu]).abs()))
        .fold(0.0, f64::max)
}

fn tetrad_suite(cfg: &VerifyConfig) -> Vec<Record> {
    let tol = cfg.tolerance;
    let eta = MinkowskiMetric::matrix();
    sweep(
        cfg,
        Suite::Tetrad,
        [
            "nullity",
            "inner_product_table",
            "m_n_relations",
            "metric_reconstruction",
            "metric_imaginary_part",
            "general_reconstruction_null_frame",
            "general_reconstruction_real_frame",
            "phase_invariance",
            "oracle_equivalence",
            "rotation_orthogonality",
            "rotation_determinant",
            "double_cover",
            "tangent_frame_tangency",
            "tangent_frame_orthonormality",
        ],
        [tol; 14],
        |rng| {
            let g = random_element(rng);
            let d = Dyad::from_element(&g);
            let Ok(nt) = null_tetrad(&d) else {
                return [f64::INFINITY; 14];
            };

            let table = nt.inner_products();
            let nullity = (0..4).map(|a| table[a][a].norm()).fold(0.0, f64::max);
            let mut expected = [[0.0; 4]; 4];
            expected[0][1] = 1.0;
            expected[1][0] = 1.0;
            expected[2][3] = -1.0;
            expected[3][2] = -1.0;
            let table_dev = max_metric_dev(&table, &expected);
            let mn = (nt.m[0] - nt.n[0]).norm().max(
                (1..4)
                    .map(|k| (nt.m[k] + nt.n[k]).norm())
                    .fold(0.0, f64::max),
            );

            let metric = reconstruct_metric(&nt);
            let imag = metric
                .iter()
                .flatten()
                .map(|c| c.im.abs())
                .fold(0.0, f64::max);
            let general = reconstruct_metric_general(&nt.frame(), &NULL_FRAME_METRIC)
                .map(|m| max_metric_dev(&m, &eta))
                .unwrap_or(f64::INFINITY);
            let rt = RealTetrad::from_null(&nt);
            let real_general =
                reconstruct_metric_general(&rt.frame().map(|v| v.complexify()), &REAL_FRAME_METRIC)
                    .map(|m| max_metric_dev(&m, &eta))
                    .unwrap_or(f64::INFINITY);

            let p = g.phase_factor();
            let (u, v) = (d.u.scale(p), d.v.scale(p));
            let rephased = [
                pauli_bilinear(&v, &u),
                pauli_bilinear(&u, &v),
                pauli_bilinear(&v, &v),
                pauli_bilinear(&u, &u),
            ];
            let phase = nt
                .frame()
                .iter()
                .zip(rephased.iter())
                .flat_map(|(a, b)| (0..4).map(move |mu| (a[mu] - b[mu]).norm()))
                .fold(0.0, f64::max);

            let q = random_point(rng);
            let dq =
                Dyad::from_element(&GroupElement::from_quaternion(&q, 0.0).expect("unit point"));
            let dneg =
                Dyad::from_element(&GroupElement::from_quaternion(&-q, 0.0).expect("unit point"));
            let (oracle, orth, det, cover) = match (real_tetrad(&dq), real_tetrad(&dneg)) {
                (Ok(a), Ok(b)) => {
                    let (orth, det) = rotation_checks(&a);
                    (
                        frame_dev(&a, &real_tetrad_polynomials(&q)),
                        orth,
                        det,
                        frame_dev(&a, &b),
                    )
                }
                _ => (f64::INFINITY, f64::INFINITY, f64::INFINITY, f64::INFINITY),
            };

            let frame = tangent_frame_at(&q);
            let radial = q.to_array();
            let dot = |a: &[f64; 4], b: &[f64; 4]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
            let tangency = frame
                .iter()
                .map(|e| dot(e, &radial).abs())
                .fold(0.0, f64::max);
            let mut gram = 0.0f64;
            for i in 0..3 {
                for j in 0..3 {
                    gram = gram
                        .max((dot(&frame[i], &frame[j]) - if i == j { 1.0 } else { 0.0 }).abs());
                }
            }

            [
                nullity,
                table_dev,
                mn,
                max_metric_dev(&metric, &eta),
                imag,
                general,
                real_general,
                phase,
                oracle,
                orth,
                det,
                cover,
                tangency,
                gram,
            ]
        },
    )
}

/// Largest scale `0.5 / 2^k` whose coherent states fit under the cutoff.
pub fn coherent_scale_for(f: &FockSpace) -> Option<f64> {
    let amps = BispinorAmplitudes::from_element(&GroupElement::identity());
    let mut scale = 0.5;
    for _ in 0..64 {
        match coherent_state(f, &amps, scale) {
            Ok(_) => return Some(scale),
            Err(Error::TruncationTooLossy { .. }) => scale *= 0.5,
            Err(_) => return None,
        }
    }
    None
}

fn fock_suite(cfg: &VerifyConfig) -> (Vec<Record>, Option<f64>) {
    let tol = cfg.tolerance;
    let name = |n: &str| format!("fock.{n}");
    let f = match FockSpace::new(cfg.cutoff) {
        Ok(f) => f,
        Err(_) => {
            let mut r = Record::new(name("space"), tol);
            r.observe(f64::INFINITY);
            return (vec![r], None);
        }
    };
    let dim = f.dimension();
    let id = SparseOperator::identity(dim);

    let mut ccr = Record::new(name("commutator_a_adag_safe_subspace"), tol);
    let mut aa = Record::new(name("commutator_a_a"), tol);
    let mut adad = Record::new(name("commutator_adag_adag"), tol);
    let mut tau_adj = Record::new(name("tau_adjoint"), tol);
    for r in Mode::ALL {
        for s in Mode::ALL {
            let mut c = annihilator(&f, r).commutator(&creator(&f, s));
            if r == s {
                c = &c - &id;
            }
            ccr.observe(c.max_abs_in_columns(|i| f.is_safe(i)));
            aa.observe(annihilator(&f, r).commutator(&annihilator(&f, s)).max_abs());
            adad.observe(creator(&f, r).commutator(&creator(&f, s)).max_abs());
            tau_adj.observe((&tau(&f, r, s).adjoint() - &tau(&f, s, r)).max_abs());
        }
    }

    let ot = operator_tetrad(&f);
    let mut herm = Record::new(name("hermiticity"), tol);
    let mut vanishing = Record::new(name("vanishing_components"), tol);
    for (leg, mu, op) in ot.components() {
        herm.observe(op.hermiticity_defect());
        if (leg == Leg::T) != (mu == 0) {
            vanishing.observe(op.max_abs());
        }
    }

    let mut offset = Record::new(name("number_offset"), tol);
    let two = id.scale(C64::new(2.0, 0.0));
    offset.observe((&(&total_number(&f) - &total_quanta(&f)) - &two).max_abs());

    // Spatial components against the same combinations of â_r⁺ â_s.
    let coeffs = tetrad_coefficients();
    let mut zero_point = Record::new(name("zero_point_cancellation"), tol);
    for (li, leg) in Leg::ALL.iter().enumerate().skip(1) {
        for mu in 1..4 {
            let mut normal = SparseOperator::zero(dim);
            for r in Mode::ALL {
                for s in Mode::ALL {
                    let k = coeffs[li][mu][r.slot()][s.slot()];
                    if k != C64::new(0.0, 0.0) {
                        normal = &normal + &creator(&f, r).matmul(&annihilator(&f, s)).scale(k);
                    }
                }
            }
            zero_point.observe((ot.component(*leg, mu) - &normal).max_abs());
        }
    }

    let scale = coherent_scale_for(&f);
    let spatial: Vec<(Leg, usize)> = [Leg::Z, Leg::X, Leg::Y]
        .iter()
        .flat_map(|&l| (1..4).map(move |mu| (l, mu)))
        .collect();
    let mut sampled = sweep(
        cfg,
        Suite::Fock,
        ["classical_limit", "phase_covariance"],
        [CLASSICAL_LIMIT, tol],
        |rng| {
            let Some(scale) = scale else {
                return [f64::INFINITY; 2];
            };
            let g = random_element(rng);
            let theta = rng.gen_range(0.0..std::f64::consts::TAU);
            let amps = BispinorAmplitudes::from_element(&g);
            let (Ok(st), Ok(st2)) = (
                coherent_state(&f, &amps, scale),
                coherent_state(&f, &amps.rephase(theta), scale),
            ) else {
                return [f64::INFINITY; 2];
            };
            let poly = real_tetrad_polynomials(&g.to_quaternion());
            let classical = |leg: Leg, mu: usize| {
                let v = match leg {
                    Leg::Z => poly.z,
                    Leg::X => poly.x,
                    Leg::Y => poly.y,
                    Leg::T => poly.t,
                };
                scale * scale * v[mu]
            };
            let mut lim = 0.0f64;
            for &(leg, mu) in &spatial {
                let e = expectation(ot.component(leg, mu), st.vector())
                    .unwrap_or(C64::new(f64::NAN, 0.0));
                lim = lim.max((e - classical(leg, mu)).norm());
            }
            let mut cov = 0.0f64;
            for (_, _, op) in ot.components() {
                let e1 = expectation(op, st.vector()).unwrap_or(C64::new(f64::NAN, 0.0));
                let e2 = expectation(op, st2.vector()).unwrap_or(C64::new(f64::NAN, 0.0));
                cov = cov.max((e1 - e2).norm());
            }
            [lim, cov]
        },
    );

    let mut records = vec![ccr, aa, adad, tau_adj, herm, vanishing, offset, zero_point];
    records.append(&mut sampled);
    (records, scale)
}

pub fn run(cfg: &VerifyConfig) -> VerificationReport {
    let suites = cfg.suite.expand();
    let mut records = Vec::new();
    let mut coherent_scale = None;
    for s in &suites {
        match s {
            Suite::Spinor => records.extend(spinor_suite(cfg)),
            Suite::Tetrad => records.extend(tetrad_suite(cfg)),
            Suite::Fock => {
                let (r, scale) = fock_suite(cfg);
                records.extend(r);
                coherent_scale = scale;
            }
            Suite::All => unreachable!("expanded above"),
        }
    }
    let pass = records.iter().all(|r| r.pass);
    VerificationReport {
        seed: cfg.seed,
        samples: cfg.samples,
        tolerance: cfg.tolerance,
        suites: suites.iter().map(|s| s.name()).collect(),
        cutoff: cfg.cutoff,
        coherent_scale,
        records,
        pass,
    }
}
