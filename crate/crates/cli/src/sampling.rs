//! Seeded random inputs for verification sweeps.
//!
//! Every sample draws from its own ChaCha stream, so a sample's value
//! depends only on `(seed, suite, index)` and sweeps can be split freely.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use urtetrad::spinor::{GroupElement, QuaternionPoint, Spinor};
use urtetrad::C64;

pub fn sample_rng(seed: u64, suite: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite << 48) ^ index);
    rng
}

/// Uniform on S³: four standard normals, normalized.
pub fn random_point(rng: &mut impl Rng) -> QuaternionPoint {
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n > 1e-6 {
            return QuaternionPoint::new(v[0] / n, v[1] / n, v[2] / n, v[3] / n)
                .expect("normalized point is on the sphere");
        }
    }
}

/// Haar-uniform on SU(2) with a uniform phase.
pub fn random_element(rng: &mut impl Rng) -> GroupElement {
    let q = random_point(rng);
    let phi = rng.gen_range(0.0..std::f64::consts::TAU);
    GroupElement::from_quaternion(&q, phi).expect("normalized point is on the sphere")
}

pub fn random_spinor(rng: &mut impl Rng) -> Spinor {
    let mut c = || C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
    Spinor::upper(c(), c())
}
