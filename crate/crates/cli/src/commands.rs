//! The documents emitted by each subcommand.

use serde::Serialize;
use urtetrad::cosmos::{ur_count_reference, ExpansionModel};
use urtetrad::fock::{
    coherent_state, expectation, operator_tetrad, tau, tetrad_coefficients, BispinorAmplitudes,
    Coefficients, FockSpace, Leg, Mode, Occupation, SparseOperator,
};
use urtetrad::spinor::{Dyad, GroupElement, QuaternionPoint};
use urtetrad::tetrad::{null_tetrad, real_tetrad};
use urtetrad::C64;

use crate::json::{self, complexes, reals, Complex, Real};
use crate::CliError;

pub const CONVENTION: &str =
    "sigma^mu = (1, sigma_x, sigma_y, sigma_z) with the first (dotted) spinor conjugated; \
eta = diag(-1, 1, 1, 1); u = (a, -conj(b)), v = (b, conj(a)); \
l = sigma(v, u)/sqrt2, l_star = sigma(u, v)/sqrt2, m = sigma(v, v)/sqrt2, n = sigma(u, u)/sqrt2; \
t = (m+n)/sqrt2, z = (m-n)/sqrt2, x = (l+l_star)/sqrt2, y = i(l-l_star)/sqrt2; \
a = w + iz, b = y + ix";

/// Where a group element came from on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ElementInput {
    Complex { a: C64, b: C64, phi: f64 },
    Quaternion { q: [f64; 4], phi: f64 },
}

impl ElementInput {
    pub fn admit(&self) -> Result<GroupElement, CliError> {
        let g = match *self {
            ElementInput::Complex { a, b, phi } => GroupElement::new(a, b, phi)?,
            ElementInput::Quaternion { q, phi } => {
                let q = QuaternionPoint::new(q[0], q[1], q[2], q[3])?;
                GroupElement::from_quaternion(&q, phi)?
            }
        };
        Ok(g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TetradKind {
    Null,
    Real,
}

#[derive(Serialize)]
struct InputEcho {
    a: Complex,
    b: Complex,
    #[serde(serialize_with = "json::real")]
    phi: f64,
    quaternion: [Real; 4],
}

#[derive(Serialize)]
struct TetradDoc {
    input: InputEcho,
    convention: &'static str,
    kind: &'static str,
    #[serde(flatten)]
    vectors: TetradVectors,
}

#[derive(Serialize)]
#[serde(untagged)]
enum TetradVectors {
    Null {
        l: [Complex; 4],
        l_star: [Complex; 4],
        m: [Complex; 4],
        n: [Complex; 4],
    },
    Real {
        t: [Real; 4],
        z: [Real; 4],
        x: [Real; 4],
        y: [Real; 4],
    },
}

pub fn tetrad(input: &ElementInput, kind: TetradKind) -> Result<String, CliError> {
    let g = input.admit()?;
    let d = Dyad::from_element(&g);
    let vectors = match kind {
        TetradKind::Null => {
            let nt = null_tetrad(&d)?;
            TetradVectors::Null {
                l: complexes(nt.l.0),
                l_star: complexes(nt.l_star.0),
                m: complexes(nt.m.0),
                n: complexes(nt.n.0),
            }
        }
        TetradKind::Real => {
            let rt = real_tetrad(&d)?;
            TetradVectors::Real {
                t: reals(rt.t.0),
                z: reals(rt.z.0),
                x: reals(rt.x.0),
                y: reals(rt.y.0),
            }
        }
    };
    let doc = TetradDoc {
        input: InputEcho {
            a: Complex(g.a()),
            b: Complex(g.b()),
            phi: g.phi(),
            quaternion: reals(g.to_quaternion().to_array()),
        },
        convention: CONVENTION,
        kind: match kind {
            TetradKind::Null => "null",
            TetradKind::Real => "real",
        },
        vectors,
    };
    Ok(json::to_string(&doc))
}

/// A named operator of the quantized tetrad, or a single `τ̂_rs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorName {
    Component(Leg, usize),
    Tau(Mode, Mode),
}

impl OperatorName {
    /// Parses `t0`, `z1`..`z3`, `x1`..`x3`, `y1`..`y3`, or `tau R S`.
    pub fn parse(words: &[String]) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("unknown operator {:?}", words.join(" ")));
        match words {
            [t, r, s] if t == "tau" => {
                let mode = |w: &String| -> Result<Mode, CliError> {
                    let r: usize = w.parse().map_err(|_| bad())?;
                    Ok(Mode::new(r)?)
                };
                Ok(OperatorName::Tau(mode(r)?, mode(s)?))
            }
            [name] => {
                let mut chars = name.chars();
                let (Some(leg), Some(mu), None) = (chars.next(), chars.next(), chars.next()) else {
                    return Err(bad());
                };
                let mu = mu.to_digit(10).ok_or_else(bad)? as usize;
                match (leg, mu) {
                    ('t', 0) => Ok(OperatorName::Component(Leg::T, 0)),
                    ('z', 1..=3) => Ok(OperatorName::Component(Leg::Z, mu)),
                    ('x', 1..=3) => Ok(OperatorName::Component(Leg::X, mu)),
                    ('y', 1..=3) => Ok(OperatorName::Component(Leg::Y, mu)),
                    _ => Err(bad()),
                }
            }
            _ => Err(bad()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            OperatorName::Component(leg, mu) => format!("{}{mu}", leg.name()),
            OperatorName::Tau(r, s) => format!("tau {} {}", r.label(), s.label()),
        }
    }

    fn is_hermitian(&self) -> bool {
        matches!(self, OperatorName::Component(..))
            || matches!(self, OperatorName::Tau(r, s) if r == s)
    }

    fn build(&self, f: &FockSpace) -> SparseOperator {
        match *self {
            OperatorName::Component(leg, mu) => operator_tetrad(f).component(leg, mu).clone(),
            OperatorName::Tau(r, s) => tau(f, r, s),
        }
    }

    /// Coefficients of the operator as a `τ̂` combination.
    fn coefficients(&self) -> Coefficients {
        match *self {
            OperatorName::Component(leg, mu) => {
                let slot = Leg::ALL.iter().position(|&l| l == leg).expect("leg listed");
                tetrad_coefficients()[slot][mu]
            }
            OperatorName::Tau(r, s) => {
                let mut c = [[C64::new(0.0, 0.0); 4]; 4];
                c[r.slot()][s.slot()] = C64::new(1.0, 0.0);
                c
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FockQuery {
    Matrix,
    /// `(a, b, phi, scale)` of a coherent state.
    ExpectCoherent {
        a: C64,
        b: C64,
        phi: f64,
        scale: f64,
    },
}

#[derive(Serialize)]
struct Triplet {
    row: usize,
    col: usize,
    #[serde(serialize_with = "json::real")]
    re: f64,
    #[serde(serialize_with = "json::real")]
    im: f64,
}

#[derive(Serialize)]
struct MatrixDoc<'a> {
    cutoff: usize,
    dimension: usize,
    operator: String,
    basis: &'a [Occupation],
    triplets: Vec<Triplet>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Scalar {
    Real(Real),
    Complex(Complex),
}

#[derive(Serialize)]
struct ExpectationDoc {
    cutoff: usize,
    dimension: usize,
    operator: String,
    alpha: [Complex; 4],
    #[serde(serialize_with = "json::real")]
    scale: f64,
    #[serde(serialize_with = "json::real")]
    truncation_deficit: f64,
    expectation: Scalar,
    classical: Scalar,
    #[serde(serialize_with = "json::real")]
    difference: f64,
}

pub fn fock(cutoff: usize, op: OperatorName, query: FockQuery) -> Result<String, CliError> {
    let f = FockSpace::new(cutoff)?;
    let operator = op.build(&f);
    match query {
        FockQuery::Matrix => {
            let triplets = operator
                .triplets()
                .iter()
                .map(|&(row, col, v)| Triplet {
                    row,
                    col,
                    re: v.re,
                    im: v.im,
                })
                .collect();
            Ok(json::to_string(&MatrixDoc {
                cutoff,
                dimension: f.dimension(),
                operator: op.label(),
                basis: f.basis(),
                triplets,
            }))
        }
        FockQuery::ExpectCoherent { a, b, phi, scale } => {
            let g = GroupElement::new(a, b, phi)?;
            let amps = BispinorAmplitudes::from_element(&g);
            let state = coherent_state(&f, &amps, scale)?;
            let value = expectation(&operator, state.vector())?;
            // c-number substitution τ̂_rs → α_r* α_s; the zero-point terms
            // of diagonal τ̂ are not part of it.
            let classical = amps.classical(&op.coefficients(), scale);
            let difference = (value - classical).norm();
            let (expectation, classical) = if op.is_hermitian() {
                (
                    Scalar::Real(Real(value.re)),
                    Scalar::Real(Real(classical.re)),
                )
            } else {
                (
                    Scalar::Complex(Complex(value)),
                    Scalar::Complex(Complex(classical)),
                )
            };
            Ok(json::to_string(&ExpectationDoc {
                cutoff,
                dimension: f.dimension(),
                operator: op.label(),
                alpha: complexes(state.alpha()),
                scale,
                truncation_deficit: state.deficit(),
                expectation,
                classical,
                difference,
            }))
        }
    }
}

#[derive(Serialize)]
struct CosmosDoc {
    #[serde(serialize_with = "json::real")]
    r0: f64,
    #[serde(serialize_with = "json::real")]
    c: f64,
    #[serde(serialize_with = "json::real")]
    epoch: f64,
    #[serde(serialize_with = "json::real")]
    radius: f64,
    #[serde(serialize_with = "json::real")]
    ur_count_reference: f64,
}

pub fn cosmos(r0: f64, c: f64, epoch: f64) -> Result<String, CliError> {
    let model = ExpansionModel::new(r0, c)?;
    let radius = model.radius_at(epoch)?;
    Ok(json::to_string(&CosmosDoc {
        r0,
        c,
        epoch,
        radius,
        ur_count_reference: ur_count_reference(),
    }))
}
