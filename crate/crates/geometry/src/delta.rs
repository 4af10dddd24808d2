//! `δ(r) = τ - inf τ(L)` over `r`-planes `L`, the universal upper bound
//! for it and the gap between the two.

use itertools::Itertools;
use nalgebra::DMatrix;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::shape::{curvature_report, to_rows, ShapeOperator};
use crate::stiefel::{minimize_tau, tau_of_frame, StiefelConfig};

/// Orthonormality tolerance for frames passed in by the caller.
pub const FRAME_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaConfig {
    pub restarts: usize,
    pub seed: u64,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for DeltaConfig {
    fn default() -> Self {
        DeltaConfig {
            restarts: 32,
            seed: 0,
            tol: 1e-8,
            max_iter: 5000,
        }
    }
}

impl DeltaConfig {
    fn stiefel(&self) -> StiefelConfig {
        StiefelConfig {
            restarts: self.restarts,
            seed: self.seed,
            max_iter: self.max_iter,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Combinatorial,
    Optimizer,
    BothAgree,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    /// Indices into the ascending principal curvatures.
    Subset(Vec<usize>),
    /// Columns of an orthonormal frame, one inner vector per column.
    Frame(Vec<Vec<f64>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaResult {
    pub r: usize,
    pub delta: f64,
    pub tau: f64,
    pub inf_tau_l: f64,
    pub witness: Witness,
    pub method: Method,
    pub combinatorial: f64,
    /// Absent when no restarts were requested.
    pub optimizer: Option<f64>,
}

fn check_rank(n: usize, r: usize) -> Result<(), GeometryError> {
    if n < 3 || r < 2 || r > n - 1 {
        return Err(GeometryError::RankOutOfRange {
            r,
            n,
            max: n.saturating_sub(1),
        });
    }
    Ok(())
}

/// `τ(L)` for the plane spanned by the columns of `frame` (`n x r`).
pub fn restricted_scalar(a: &ShapeOperator, frame: &DMatrix<f64>) -> Result<f64, GeometryError> {
    if frame.nrows() != a.n {
        return Err(GeometryError::FrameShape {
            rows: frame.nrows(),
            n: a.n,
        });
    }
    let r = frame.ncols();
    let err = (frame.transpose() * frame - DMatrix::identity(r, r)).amax();
    if err > FRAME_TOL {
        return Err(GeometryError::NotOrthonormal(err));
    }
    Ok(tau_of_frame(&a.symmetric(), frame))
}

/// Minimum pair sum over all `r`-subsets of `lambdas`, with the first
/// minimizing subset in lexicographic order.
pub fn combinatorial_inf(lambdas: &[f64], r: usize) -> (f64, Vec<usize>) {
    let mut best = (f64::INFINITY, Vec::new());
    for subset in (0..lambdas.len()).combinations(r) {
        let v = subset
            .iter()
            .tuple_combinations()
            .map(|(&i, &j)| lambdas[i] * lambdas[j])
            .sum::<f64>();
        if v < best.0 {
            best = (v, subset);
        }
    }
    best
}

pub fn delta_invariant(
    a: &ShapeOperator,
    r: usize,
    cfg: &DeltaConfig,
) -> Result<DeltaResult, GeometryError> {
    check_rank(a.n, r)?;
    let tau = curvature_report(a).tau;
    let (vals, _) = a.eigen();
    let (comb, subset) = combinatorial_inf(&vals, r);
    let descent = if cfg.restarts > 0 {
        minimize_tau(&a.symmetric(), r, &cfg.stiefel())
    } else {
        None
    };
    let optimizer = descent.as_ref().map(|d| d.value);
    let (inf, witness, method) = match descent {
        Some(d) if (d.value - comb).abs() <= cfg.tol * comb.abs().max(1.0) => {
            (comb, Witness::Subset(subset), Method::BothAgree)
        }
        Some(d) if d.value < comb => {
            let cols = to_rows(&d.frame.transpose());
            (d.value, Witness::Frame(cols), Method::Optimizer)
        }
        _ => (comb, Witness::Subset(subset), Method::Combinatorial),
    };
    Ok(DeltaResult {
        r,
        delta: tau - inf,
        tau,
        inf_tau_l: inf,
        witness,
        method,
        combinatorial: comb,
        optimizer,
    })
}

/// `n²(n - r) / (2(n - r + 1)) · H²`.
pub fn chen_bound(n: usize, r: usize, h: f64) -> Result<f64, GeometryError> {
    bound_from_trace(n, r, n as f64 * h)
}

/// The same bound written with `tr A = nH`, which stays exact for integer
/// spectra.
pub fn bound_from_trace(n: usize, r: usize, trace: f64) -> Result<f64, GeometryError> {
    check_rank(n, r)?;
    let k = (n - r) as f64;
    Ok(trace * trace * k / (2.0 * (k + 1.0)))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealityGap {
    pub r: usize,
    pub bound: f64,
    pub delta: DeltaResult,
    pub gap: f64,
    pub ideal: bool,
}

pub fn ideality_gap(
    a: &ShapeOperator,
    r: usize,
    cfg: &DeltaConfig,
) -> Result<IdealityGap, GeometryError> {
    let delta = delta_invariant(a, r, cfg)?;
    let bound = bound_from_trace(a.n, r, a.symmetric().trace())?;
    let gap = bound - delta.delta;
    Ok(IdealityGap {
        r,
        bound,
        ideal: gap.abs() <= cfg.tol,
        gap,
        delta,
    })
}

/// Exact `δ(r)` and bound on a rational spectrum: `(delta, bound)`.
pub fn exact_delta_and_bound(
    spectrum: &[BigRational],
    r: usize,
) -> Result<(BigRational, BigRational), GeometryError> {
    let n = spectrum.len();
    check_rank(n, r)?;
    let pair = |idx: &[usize]| -> BigRational {
        idx.iter()
            .tuple_combinations()
            .fold(BigRational::zero(), |acc, (&i, &j)| {
                acc + &spectrum[i] * &spectrum[j]
            })
    };
    let all: Vec<usize> = (0..n).collect();
    let tau = pair(&all);
    let inf = (0..n)
        .combinations(r)
        .map(|s| pair(&s))
        .min()
        .expect("r <= n");
    let int = |v: usize| BigRational::from_integer((v as i64).into());
    let h = spectrum.iter().fold(BigRational::zero(), |acc, x| acc + x) / int(n);
    let bound = int(n * n * (n - r)) / int(2 * (n - r + 1)) * &h * &h;
    Ok((tau - inf, bound))
}
