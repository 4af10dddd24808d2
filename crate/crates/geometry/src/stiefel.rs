//! Minimizing the scalar curvature of `r`-planes over orthonormal frames.
//!
//! An `r`-plane is represented by an `n x r` matrix `F` with `FᵀF = I`.
//! With `B = FᵀAF` the restricted scalar curvature is
//! `τ(F) = ((tr B)² - tr B²)/2`, whose Euclidean gradient is
//! `2 tr(B)·AF - 2·AFB`. Descent projects that onto the tangent space of
//! the Stiefel manifold and retracts with a sign-fixed QR factorization.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StiefelConfig {
    pub restarts: usize,
    pub seed: u64,
    pub max_iter: usize,
    /// Stop once the Riemannian gradient norm drops below this.
    pub grad_tol: f64,
}

impl Default for StiefelConfig {
    fn default() -> Self {
        StiefelConfig {
            restarts: 32,
            seed: 0,
            max_iter: 5000,
            grad_tol: 1e-10,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Descent {
    pub value: f64,
    pub frame: DMatrix<f64>,
    pub iterations: usize,
    pub grad_norm: f64,
    pub restart: usize,
}

/// `τ` of the plane spanned by the columns of `f`, no orthonormality check.
pub fn tau_of_frame(a: &DMatrix<f64>, f: &DMatrix<f64>) -> f64 {
    let b = f.transpose() * a * f;
    let t = b.trace();
    0.5 * (t * t - b.component_mul(&b).sum())
}

/// Euclidean gradient of [`tau_of_frame`] in the entries of `f`.
pub fn euclidean_gradient(a: &DMatrix<f64>, f: &DMatrix<f64>) -> DMatrix<f64> {
    let af = a * f;
    let b = f.transpose() * &af;
    &af * (2.0 * b.trace()) - &af * b * 2.0
}

/// Gradient projected onto the tangent space at `f`: `G - F sym(FᵀG)`.
pub fn riemannian_gradient(a: &DMatrix<f64>, f: &DMatrix<f64>) -> DMatrix<f64> {
    let g = euclidean_gradient(a, f);
    let ftg = f.transpose() * &g;
    let sym = (&ftg + ftg.transpose()) * 0.5;
    g - f * sym
}

/// Q factor with a nonnegative diagonal of R, so the retraction is unique.
pub fn retract(x: DMatrix<f64>) -> DMatrix<f64> {
    let qr = x.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..q.ncols() {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

pub fn random_frame(n: usize, r: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    retract(DMatrix::from_fn(n, r, |_, _| StandardNormal.sample(rng)))
}

/// Projected gradient descent from `start`. Step sizes follow the
/// alternating Barzilai-Borwein rule, accepted by a nonmonotone Armijo
/// test against a running weighted average of past values (Zhang-Hager).
/// Returns the final frame, its value, iterations and gradient norm.
pub fn descend(
    a: &DMatrix<f64>,
    start: DMatrix<f64>,
    cfg: &StiefelConfig,
) -> (DMatrix<f64>, f64, usize, f64) {
    const ETA: f64 = 0.85;
    let mut f = start;
    let mut value = tau_of_frame(a, &f);
    let mut xi = riemannian_gradient(a, &f);
    let mut grad_norm = xi.norm();
    let mut step = 1.0 / a.norm().max(1e-12);
    let (mut reference, mut weight) = (value, 1.0);
    let mut iter = 0;
    while iter < cfg.max_iter && grad_norm > cfg.grad_tol {
        let slope = grad_norm * grad_norm;
        let mut t = step;
        let accepted = loop {
            let cand = retract(&f - &xi * t);
            let v = tau_of_frame(a, &cand);
            if v <= reference - 1e-4 * t * slope {
                break Some((cand, v));
            }
            t *= 0.5;
            if t < 1e-20 {
                break None;
            }
        };
        let Some((next, v)) = accepted else { break };
        iter += 1;
        let next_xi = riemannian_gradient(a, &next);
        let s = &next - &f;
        let y = &next_xi - &xi;
        let sy = s.dot(&y).abs();
        step = if sy > 0.0 {
            if iter % 2 == 0 {
                s.norm_squared() / sy
            } else {
                sy / y.norm_squared()
            }
        } else {
            t * 2.0
        };
        step = step.clamp(1e-20, 1e20);
        f = next;
        value = v;
        xi = next_xi;
        grad_norm = xi.norm();
        let w = ETA * weight + 1.0;
        reference = (ETA * weight * reference + value) / w;
        weight = w;
    }
    (f, value, iter, grad_norm)
}

fn restart(a: &DMatrix<f64>, r: usize, cfg: &StiefelConfig, k: usize) -> Descent {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(k as u64);
    let start = random_frame(a.nrows(), r, &mut rng);
    let (frame, value, iterations, grad_norm) = descend(a, start, cfg);
    Descent {
        value,
        frame,
        iterations,
        grad_norm,
        restart: k,
    }
}

/// Best of `cfg.restarts` independent descents. Restart `k` draws its
/// start from stream `k` of the seeded generator, so the result does not
/// depend on scheduling. Ties go to the lower restart index.
pub fn minimize_tau(a: &DMatrix<f64>, r: usize, cfg: &StiefelConfig) -> Option<Descent> {
    #[cfg(feature = "parallel")]
    let runs: Vec<Descent> = {
        use rayon::prelude::*;
        (0..cfg.restarts)
            .into_par_iter()
            .map(|k| restart(a, r, cfg, k))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let runs: Vec<Descent> = (0..cfg.restarts).map(|k| restart(a, r, cfg, k)).collect();
    minimize_sequential_order(runs)
}

/// Same as [`minimize_tau`] on the calling thread only.
pub fn minimize_tau_sequential(a: &DMatrix<f64>, r: usize, cfg: &StiefelConfig) -> Option<Descent> {
    minimize_sequential_order((0..cfg.restarts).map(|k| restart(a, r, cfg, k)).collect())
}

fn minimize_sequential_order(runs: Vec<Descent>) -> Option<Descent> {
    runs.into_iter()
        .reduce(|best, d| if d.value < best.value { d } else { best })
}
