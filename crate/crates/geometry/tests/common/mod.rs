use dnull_geometry::ShapeOperator;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Symmetric matrix with standard normal entries, scaled by a random factor in [0.1, 10].
pub fn random_operator(rng: &mut ChaCha8Rng, n: usize) -> ShapeOperator {
    let scale = 10f64.powf(rng.random_range(-1.0..1.0));
    let g = DMatrix::from_fn(n, n, |_, _| StandardNormal.sample(rng));
    ShapeOperator::new((&g + g.transpose()) * (0.5 * scale)).unwrap()
}

#[allow(dead_code)]
pub fn orthogonal(rng: &mut ChaCha8Rng, k: usize) -> DMatrix<f64> {
    dnull_geometry::stiefel::random_frame(k, k, rng)
}
