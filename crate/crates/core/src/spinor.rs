//! U(2) group elements, the quaternion chart of S³ and ur-spinor dyads.
//!
//! A group element is `A = U e^{iφ}` with
//!
//! ```text
//!     U = (  a   b  )      |a|² + |b|² = 1
//!         ( -b*  a* )
//! ```
//!
//! and the chart `a = w + iz`, `b = y + ix` identifies `SU(2)` with the unit
//! sphere `w² + x² + y² + z² = 1`. The two columns of `U` are the ur-spinors
//! `u^A = (a, -b*)` and `v^A = (b, a*)`.

use core::f64::consts::TAU;
use core::ops::Neg;

use num_traits::Float;

use crate::tolerance::{ADMISSION, IDENTITY};
use crate::{Error, Result, C64};

fn wrap_phase(phi: f64) -> f64 {
    let r = phi % TAU;
    let r = if r < 0.0 { r + TAU } else { r };
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// A point of U(2): `(a, b)` on the unit sphere of ℂ² together with a phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    a: C64,
    b: C64,
    phi: f64,
}

impl GroupElement {
    /// Admits `(a, b)` when `|a|² + |b|²` is within [`ADMISSION`] of one and
    /// rescales it onto the sphere. The phase is wrapped into `[0, 2π)`.
    pub fn new(a: C64, b: C64, phi: f64) -> Result<Self> {
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if !norm_sq.is_finite() || !phi.is_finite() || (norm_sq - 1.0).abs() > ADMISSION {
            return Err(Error::NonUnit { norm_sq });
        }
        let s = Float::sqrt(norm_sq);
        Ok(Self {
            a: a / s,
            b: b / s,
            phi: wrap_phase(phi),
        })
    }

    pub fn identity() -> Self {
        Self {
            a: C64::new(1.0, 0.0),
            b: C64::new(0.0, 0.0),
            phi: 0.0,
        }
    }

    pub fn a(&self) -> C64 {
        self.a
    }

    pub fn b(&self) -> C64 {
        self.b
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// `e^{iφ}`.
    pub fn phase_factor(&self) -> C64 {
        C64::new(Float::cos(self.phi), Float::sin(self.phi))
    }

    /// The `SU(2)` factor `U`.
    pub fn su2_matrix(&self) -> [[C64; 2]; 2] {
        [[self.a, self.b], [-self.b.conj(), self.a.conj()]]
    }

    /// The full `U(2)` matrix `A = U e^{iφ}`.
    pub fn matrix(&self) -> [[C64; 2]; 2] {
        let p = self.phase_factor();
        let u = self.su2_matrix();
        [[u[0][0] * p, u[0][1] * p], [u[1][0] * p, u[1][1] * p]]
    }

    /// `det U = |a|² + |b|²`.
    pub fn det_su2(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    /// Group product `self · other`; phases add.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        // (a1 b1; -b1* a1*)(a2 b2; -b2* a2*) has first row
        // (a1 a2 - b1 b2*, a1 b2 + b1 a2*).
        let a = self.a * other.a - self.b * other.b.conj();
        let b = self.a * other.b + self.b * other.a.conj();
        GroupElement {
            a,
            b,
            phi: wrap_phase(self.phi + other.phi),
        }
    }

    /// Chart coordinates `w = Re a`, `z = Im a`, `y = Re b`, `x = Im b`.
    /// The phase is not part of the chart.
    pub fn to_quaternion(&self) -> QuaternionPoint {
        QuaternionPoint {
            w: self.a.re,
            x: self.b.im,
            y: self.b.re,
            z: self.a.im,
        }
    }

    pub fn from_quaternion(q: &QuaternionPoint, phi: f64) -> Result<Self> {
        Self::new(C64::new(q.w, q.z), C64::new(q.y, q.x), phi)
    }
}

/// A point `(w, x, y, z)` of the unit three-sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuaternionPoint {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl QuaternionPoint {
    /// Admits a point within [`ADMISSION`] of the sphere and rescales it onto it.
    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        let norm_sq = w * w + x * x + y * y + z * z;
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > ADMISSION {
            return Err(Error::NonUnit { norm_sq });
        }
        let s = Float::sqrt(norm_sq);
        Ok(Self {
            w: w / s,
            x: x / s,
            y: y / s,
            z: z / s,
        })
    }

    pub fn identity() -> Self {
        Self {
            w: 1.0,
            x: 0.0,
            y: 0.0,
            z: 0.0,
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

impl Neg for QuaternionPoint {
    type Output = QuaternionPoint;

    fn neg(self) -> QuaternionPoint {
        QuaternionPoint {
            w: -self.w,
            x: -self.x,
            y: -self.y,
            z: -self.z,
        }
    }
}

/// Position of the spinor index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Upper,
    Lower,
}

/// A two-component spinor `s^A` or `s_A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spinor {
    pub components: [C64; 2],
    pub variance: Variance,
}

impl Spinor {
    pub fn upper(c1: C64, c2: C64) -> Self {
        Spinor {
            components: [c1, c2],
            variance: Variance::Upper,
        }
    }

    pub fn lower_from(c1: C64, c2: C64) -> Self {
        Spinor {
            components: [c1, c2],
            variance: Variance::Lower,
        }
    }

    /// `s_A = ε_AB s^B`.
    pub fn lower(&self) -> Result<Spinor> {
        if self.variance != Variance::Upper {
            return Err(Error::VarianceMismatch);
        }
        Ok(Spinor {
            components: EpsilonMetric::lower(self.components),
            variance: Variance::Lower,
        })
    }

    /// `s^A = s_B ε^{BA}`.
    pub fn raise(&self) -> Result<Spinor> {
        if self.variance != Variance::Lower {
            return Err(Error::VarianceMismatch);
        }
        Ok(Spinor {
            components: EpsilonMetric::raise(self.components),
            variance: Variance::Upper,
        })
    }

    fn as_lower(&self) -> [C64; 2] {
        match self.variance {
            Variance::Lower => self.components,
            Variance::Upper => EpsilonMetric::lower(self.components),
        }
    }

    fn as_upper(&self) -> [C64; 2] {
        match self.variance {
            Variance::Upper => self.components,
            Variance::Lower => EpsilonMetric::raise(self.components),
        }
    }

    /// Componentwise complex conjugate (the dotted spinor), same index position.
    pub fn conj(&self) -> Spinor {
        Spinor {
            components: [self.components[0].conj(), self.components[1].conj()],
            ..*self
        }
    }

    pub fn scale(&self, k: C64) -> Spinor {
        Spinor {
            components: [self.components[0] * k, self.components[1] * k],
            ..*self
        }
    }
}

/// The spinor metric. `ε_AB` and `ε^AB` are the same array.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonMetric;

impl EpsilonMetric {
    pub const MATRIX: [[f64; 2]; 2] = [[0.0, 1.0], [-1.0, 0.0]];

    /// `s_A = ε_AB s^B`.
    pub fn lower<T>(s: [T; 2]) -> [T; 2]
    where
        T: Copy + Neg<Output = T>,
    {
        [s[1], -s[0]]
    }

    /// `s^A = s_B ε^{BA}`.
    pub fn raise<T>(s: [T; 2]) -> [T; 2]
    where
        T: Copy + Neg<Output = T>,
    {
        [-s[1], s[0]]
    }
}

/// `p_A q^A`, lowering `p` and raising `q` as needed.
pub fn contract(p: &Spinor, q: &Spinor) -> C64 {
    let pl = p.as_lower();
    let qu = q.as_upper();
    pl[0] * qu[0] + pl[1] * qu[1]
}

/// An ordered ur-spinor pair `(u, v)`, both with upper indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dyad {
    pub u: Spinor,
    pub v: Spinor,
}

impl Dyad {
    /// Pairs two spinors without checking the dyad relations; see [`Dyad::deviation`].
    pub fn new(u: Spinor, v: Spinor) -> Self {
        Dyad { u, v }
    }

    /// The columns of `U`: `u = (a, -b*)`, `v = (b, a*)`. The phase of `g`
    /// is not applied.
    pub fn from_element(g: &GroupElement) -> Self {
        Dyad {
            u: Spinor::upper(g.a(), -g.b().conj()),
            v: Spinor::upper(g.b(), g.a().conj()),
        }
    }

    /// Largest violation of `u_A u^A = v_A v^A = 0`, `v_A u^A = 1`, `u_A v^A = -1`.
    pub fn deviation(&self) -> f64 {
        let one = C64::new(1.0, 0.0);
        [
            contract(&self.u, &self.u).norm(),
            contract(&self.v, &self.v).norm(),
            (contract(&self.v, &self.u) - one).norm(),
            (contract(&self.u, &self.v) + one).norm(),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn check(&self, tol: f64) -> Result<()> {
        let deviation = self.deviation();
        if deviation.is_nan() || deviation > tol {
            Err(Error::DyadInvalid { deviation })
        } else {
            Ok(())
        }
    }

    pub fn is_valid(&self) -> bool {
        self.check(IDENTITY).is_ok()
    }
}
