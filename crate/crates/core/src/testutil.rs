use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::spinor::{GroupElement, QuaternionPoint};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Haar-uniform on SU(2) with a uniform phase.
pub fn random_element(rng: &mut impl Rng) -> GroupElement {
    let q = random_point(rng);
    GroupElement::from_quaternion(&q, rng.gen_range(0.0..core::f64::consts::TAU)).unwrap()
}

pub fn random_point(rng: &mut impl Rng) -> QuaternionPoint {
    let v: [f64; 4] = core::array::from_fn(|_| rng.sample(StandardNormal));
    let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    QuaternionPoint::new(v[0] / n, v[1] / n, v[2] / n, v[3] / n).unwrap()
}
