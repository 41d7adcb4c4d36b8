//! Null and real tetrads from ur-spinor dyads.
//!
//! Four-vectors are contravariant with components indexed `0..4` (time
//! first). Indices are lowered with `η = diag(-1, 1, 1, 1)`.

use core::f64::consts::FRAC_1_SQRT_2;
use core::ops::{Add, Index, Mul, Sub};

use num_traits::{Float, Zero};

use crate::spinor::{Dyad, GroupElement, QuaternionPoint, Spinor};
use crate::tolerance::ADMISSION;
use crate::{Error, Result, C64};

/// A 4×4 array indexed `[μ][ν]`.
pub type Metric4<T> = [[T; 4]; 4];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector<T>(pub [T; 4]);

impl<T> Index<usize> for FourVector<T> {
    type Output = T;

    fn index(&self, mu: usize) -> &T {
        &self.0[mu]
    }
}

impl<T: Copy + Add<Output = T>> Add for FourVector<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        FourVector(core::array::from_fn(|mu| self.0[mu] + rhs.0[mu]))
    }
}

impl<T: Copy + Sub<Output = T>> Sub for FourVector<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        FourVector(core::array::from_fn(|mu| self.0[mu] - rhs.0[mu]))
    }
}

impl<T: Copy + Mul<Output = T>> FourVector<T> {
    pub fn scale(self, k: T) -> Self {
        FourVector(core::array::from_fn(|mu| self.0[mu] * k))
    }
}

impl FourVector<C64> {
    pub fn conj(&self) -> Self {
        FourVector(self.0.map(|c| c.conj()))
    }

    pub fn re(&self) -> FourVector<f64> {
        FourVector(self.0.map(|c| c.re))
    }

    pub fn max_imag(&self) -> f64 {
        self.0.iter().fold(0.0, |m, c| m.max(c.im.abs()))
    }
}

impl FourVector<f64> {
    pub fn complexify(&self) -> FourVector<C64> {
        FourVector(self.0.map(|x| C64::new(x, 0.0)))
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.0[1], self.0[2], self.0[3]]
    }
}

/// The flat metric `η = diag(-1, 1, 1, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinkowskiMetric;

impl MinkowskiMetric {
    pub const DIAGONAL: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

    pub fn matrix() -> Metric4<f64> {
        core::array::from_fn(|mu| {
            core::array::from_fn(|nu| if mu == nu { Self::DIAGONAL[mu] } else { 0.0 })
        })
    }

    /// `v_μ = η_μν v^ν`.
    pub fn lower<T>(v: &FourVector<T>) -> FourVector<T>
    where
        T: Copy + core::ops::Neg<Output = T>,
    {
        let mut out = *v;
        out.0[0] = -out.0[0];
        out
    }
}

/// `η_μν p^μ q^ν`. Bilinear, no conjugation.
pub fn minkowski_inner<T>(p: &FourVector<T>, q: &FourVector<T>) -> T
where
    T: Copy + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    p.0[1] * q.0[1] + p.0[2] * q.0[2] + p.0[3] * q.0[3] - p.0[0] * q.0[0]
}

/// `σ^μ = (1, σ_x, σ_y, σ_z)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PauliBasis;

impl PauliBasis {
    pub fn sigma(mu: usize) -> [[C64; 2]; 2] {
        let o = C64::new(0.0, 0.0);
        let one = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        match mu {
            0 => [[one, o], [o, one]],
            1 => [[o, one], [one, o]],
            2 => [[o, -i], [i, o]],
            3 => [[one, o], [o, -one]],
            _ => panic!("Pauli index {mu} out of range"),
        }
    }
}

/// `σ^μ_{ȦB} p^Ȧ q^B` without the `1/√2`.
fn sigma_contraction(p: &Spinor, q: &Spinor) -> FourVector<C64> {
    let pc = p.conj().components;
    let qc = q.components;
    FourVector(core::array::from_fn(|mu| {
        let s = PauliBasis::sigma(mu);
        let mut acc = C64::zero();
        for i in 0..2 {
            for j in 0..2 {
                acc += pc[i] * s[i][j] * qc[j];
            }
        }
        acc
    }))
}

/// `(1/√2) σ^μ_{ȦB} p^Ȧ q^B`: the dotted slot takes the conjugate of `p`.
pub fn pauli_bilinear(p: &Spinor, q: &Spinor) -> FourVector<C64> {
    sigma_contraction(p, q).scale(C64::new(FRAC_1_SQRT_2, 0.0))
}

/// Frame metric `g_(α)(β)` for the null frame `(l, l*, m, n)`.
pub const NULL_FRAME_METRIC: Metric4<f64> = [
    [0.0, 1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, -1.0],
    [0.0, 0.0, -1.0, 0.0],
];

/// Frame metric for the real frame `(t, z, x, y)`.
pub const REAL_FRAME_METRIC: Metric4<f64> = [
    [-1.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
];

/// Four lightlike vectors `(l, l*, m, n)` built from a dyad.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullTetrad {
    pub l: FourVector<C64>,
    pub l_star: FourVector<C64>,
    pub m: FourVector<C64>,
    pub n: FourVector<C64>,
}

impl NullTetrad {
    pub fn frame(&self) -> [FourVector<C64>; 4] {
        [self.l, self.l_star, self.m, self.n]
    }

    pub fn frame_metric(&self) -> Metric4<f64> {
        NULL_FRAME_METRIC
    }

    /// Table of `η(e_α, e_β)` over the frame.
    pub fn inner_products(&self) -> Metric4<C64> {
        let f = self.frame();
        core::array::from_fn(|a| core::array::from_fn(|b| minkowski_inner(&f[a], &f[b])))
    }
}

/// `l = σ(v̄, u)`, `l* = σ(ū, v)`, `m = σ(v̄, v)`, `n = σ(ū, u)`.
pub fn null_tetrad(d: &Dyad) -> Result<NullTetrad> {
    d.check(ADMISSION)?;
    Ok(NullTetrad {
        l: pauli_bilinear(&d.v, &d.u),
        l_star: pauli_bilinear(&d.u, &d.v),
        m: pauli_bilinear(&d.v, &d.v),
        n: pauli_bilinear(&d.u, &d.u),
    })
}

/// `l_μ l*_ν + l*_μ l_ν − m_μ n_ν − n_μ m_ν`.
pub fn reconstruct_metric(nt: &NullTetrad) -> Metric4<C64> {
    let l = MinkowskiMetric::lower(&nt.l);
    let ls = MinkowskiMetric::lower(&nt.l_star);
    let m = MinkowskiMetric::lower(&nt.m);
    let n = MinkowskiMetric::lower(&nt.n);
    core::array::from_fn(|mu| {
        core::array::from_fn(|nu| l[mu] * ls[nu] + ls[mu] * l[nu] - m[mu] * n[nu] - n[mu] * m[nu])
    })
}

fn det4(m: &Metric4<f64>) -> f64 {
    // Laplace expansion along the first row over 3×3 minors.
    let minor = |col: usize| {
        let cols: [usize; 3] = match col {
            0 => [1, 2, 3],
            1 => [0, 2, 3],
            2 => [0, 1, 3],
            _ => [0, 1, 2],
        };
        let e = |r: usize, c: usize| m[r + 1][cols[c]];
        e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
    };
    (0..4)
        .map(|c| if c % 2 == 0 { 1.0 } else { -1.0 } * m[0][c] * minor(c))
        .sum()
}

/// `g_μν = g_(α)(β) t_μ^(α) t_ν^(β)` for an arbitrary frame.
pub fn reconstruct_metric_general(
    frame: &[FourVector<C64>; 4],
    frame_metric: &Metric4<f64>,
) -> Result<Metric4<C64>> {
    let scale = frame_metric
        .iter()
        .flatten()
        .fold(0.0f64, |m, x| m.max(x.abs()));
    let det = det4(frame_metric);
    if !det.is_finite() || scale == 0.0 || det.abs() <= 1e-12 * Float::powi(scale, 4) {
        return Err(Error::SingularFrameMetric);
    }
    let lowered = frame.map(|t| MinkowskiMetric::lower(&t));
    Ok(core::array::from_fn(|mu| {
        core::array::from_fn(|nu| {
            let mut acc = C64::zero();
            for (a, ta) in lowered.iter().enumerate() {
                for (b, tb) in lowered.iter().enumerate() {
                    if frame_metric[a][b] != 0.0 {
                        acc += ta[mu] * tb[nu] * frame_metric[a][b];
                    }
                }
            }
            acc
        })
    }))
}

/// Real frame `(t, z, x, y)`: one timelike vector and a spatial dreibein.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealTetrad {
    pub t: FourVector<f64>,
    pub z: FourVector<f64>,
    pub x: FourVector<f64>,
    pub y: FourVector<f64>,
}

impl RealTetrad {
    /// `t = (m+n)/√2`, `z = (m−n)/√2`, `x = (l+l*)/√2`, `y = i(l−l*)/√2`.
    /// Imaginary parts (zero up to rounding) are dropped.
    pub fn from_null(nt: &NullTetrad) -> Self {
        let k = C64::new(FRAC_1_SQRT_2, 0.0);
        let ik = C64::new(0.0, FRAC_1_SQRT_2);
        RealTetrad {
            t: (nt.m + nt.n).scale(k).re(),
            z: (nt.m - nt.n).scale(k).re(),
            x: (nt.l + nt.l_star).scale(k).re(),
            y: (nt.l - nt.l_star).scale(ik).re(),
        }
    }

    pub fn frame(&self) -> [FourVector<f64>; 4] {
        [self.t, self.z, self.x, self.y]
    }

    /// Spatial parts as the columns `(x, y, z)` of a 3×3 matrix `R[i][j]`.
    pub fn spatial_rotation(&self) -> [[f64; 3]; 3] {
        let cols = [self.x.spatial(), self.y.spatial(), self.z.spatial()];
        core::array::from_fn(|i| core::array::from_fn(|j| cols[j][i]))
    }
}

/// Same combinations as [`RealTetrad::from_null`], with the two `1/√2`
/// factors folded into an exact `1/2`.
pub fn real_tetrad(d: &Dyad) -> Result<RealTetrad> {
    d.check(ADMISSION)?;
    let (u, v) = (&d.u, &d.v);
    let (l, ls) = (sigma_contraction(v, u), sigma_contraction(u, v));
    let (m, n) = (sigma_contraction(v, v), sigma_contraction(u, u));
    let half = C64::new(0.5, 0.0);
    Ok(RealTetrad {
        t: (m + n).scale(half).re(),
        z: (m - n).scale(half).re(),
        x: (l + ls).scale(half).re(),
        y: (l - ls).scale(C64::new(0.0, 0.5)).re(),
    })
}

/// The real tetrad evaluated from its closed-form quadratic polynomials in
/// `(w, x, y, z)`. Independent of the Pauli-bilinear route.
pub fn real_tetrad_polynomials(q: &QuaternionPoint) -> RealTetrad {
    let QuaternionPoint { w, x, y, z } = *q;
    RealTetrad {
        t: FourVector([1.0, 0.0, 0.0, 0.0]),
        z: FourVector([
            0.0,
            2.0 * (w * y - x * z),
            -2.0 * (w * x + y * z),
            x * x + y * y - w * w - z * z,
        ]),
        x: FourVector([
            0.0,
            x * x - y * y + w * w - z * z,
            2.0 * (x * y - w * z),
            2.0 * (w * y + x * z),
        ]),
        y: FourVector([
            0.0,
            -2.0 * (x * y + w * z),
            x * x - y * y - w * w + z * z,
            2.0 * (w * x - y * z),
        ]),
    }
}

/// Left translation by `q` of a vector of ℝ⁴ in chart coordinates `(w, x, y, z)`.
///
/// Uses the `SU(2)` product on the matrices `(a b; -b* a*)` with
/// `a = w + iz`, `b = y + ix`, extended linearly off the sphere.
fn left_translate(q: &QuaternionPoint, p: [f64; 4]) -> [f64; 4] {
    let g = GroupElement::from_quaternion(q, 0.0).unwrap_or_else(|_| GroupElement::identity());
    let (a1, b1) = (g.a(), g.b());
    let (a2, b2) = (C64::new(p[0], p[3]), C64::new(p[2], p[1]));
    let a = a1 * a2 - b1 * b2.conj();
    let b = a1 * b2 + b1 * a2.conj();
    [a.re, b.im, b.re, a.im]
}

/// The dreibein at the identity, embedded in ℝ⁴ as tangent vectors at
/// `(1, 0, 0, 0)` and carried to `q` by left translation. Order `(x, y, z)`.
pub fn tangent_frame_at(q: &QuaternionPoint) -> [[f64; 4]; 3] {
    let base = real_tetrad_polynomials(&QuaternionPoint::identity());
    [base.x, base.y, base.z].map(|v| {
        let s = v.spatial();
        left_translate(q, [0.0, s[0], s[1], s[2]])
    })
}
