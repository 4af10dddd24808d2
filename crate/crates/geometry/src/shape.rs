//! Shape operators and their pointwise curvature invariants.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// Relative tolerance for the symmetry check.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Symmetric `n x n` operator of a hypersurface at a point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShapeOperator {
    pub n: usize,
    #[serde(serialize_with = "rows")]
    pub matrix: DMatrix<f64>,
}

fn rows<S: serde::Serializer>(m: &DMatrix<f64>, s: S) -> Result<S::Ok, S::Error> {
    to_rows(m).serialize(s)
}

pub fn to_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().copied().collect())
        .collect()
}

impl ShapeOperator {
    pub fn new(matrix: DMatrix<f64>) -> Result<Self, GeometryError> {
        let (r, c) = matrix.shape();
        if r != c {
            return Err(GeometryError::NotSquare { rows: r, cols: c });
        }
        if r < 2 {
            return Err(GeometryError::TooSmall(r));
        }
        if let Some((k, _)) = matrix.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(GeometryError::NonFinite(k % r, k / r));
        }
        let scale = matrix.amax().max(1.0);
        for i in 0..r {
            for j in i + 1..r {
                let diff = (matrix[(i, j)] - matrix[(j, i)]).abs();
                if diff > SYMMETRY_TOL * scale {
                    return Err(GeometryError::Asymmetric { i, j, diff });
                }
            }
        }
        Ok(ShapeOperator { n: r, matrix })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, GeometryError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(GeometryError::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn diagonal(values: &[f64]) -> Result<Self, GeometryError> {
        Self::new(DMatrix::from_diagonal(
            &nalgebra::DVector::from_column_slice(values),
        ))
    }

    pub fn identity(n: usize) -> Result<Self, GeometryError> {
        Self::new(DMatrix::identity(n, n))
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut v: Vec<f64> = SymmetricEigen::new(self.symmetric())
            .eigenvalues
            .iter()
            .copied()
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Eigenvalues ascending with unit eigenvectors as columns in the same order.
    pub fn eigen(&self) -> (Vec<f64>, DMatrix<f64>) {
        let e = SymmetricEigen::new(self.symmetric());
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| e.eigenvalues[a].total_cmp(&e.eigenvalues[b]));
        let vals = order.iter().map(|&k| e.eigenvalues[k]).collect();
        let vecs = DMatrix::from_fn(self.n, self.n, |i, j| e.eigenvectors[(i, order[j])]);
        (vals, vecs)
    }

    /// Exactly symmetric copy, averaging the two triangles.
    pub fn symmetric(&self) -> DMatrix<f64> {
        (&self.matrix + self.matrix.transpose()) * 0.5
    }

    pub fn mean_curvature(&self) -> f64 {
        self.matrix.trace() / self.n as f64
    }
}

/// Pointwise invariants: principal curvatures, mean curvature `H`,
/// `tr A²` and scalar curvature `τ = (n²H² - tr A²)/2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub principal_curvatures: Vec<f64>,
    #[serde(rename = "H")]
    pub h: f64,
    #[serde(rename = "trA2")]
    pub tr_a2: f64,
    pub tau: f64,
}

pub fn curvature_report(a: &ShapeOperator) -> SpectrumReport {
    let lambdas = a.eigenvalues();
    let n = a.n as f64;
    let sym = a.symmetric();
    let tr_a2 = sym.component_mul(&sym).sum();
    let h = sym.trace() / n;
    let tau = 0.5 * (n * n * h * h - tr_a2);
    SpectrumReport {
        principal_curvatures: lambdas,
        h,
        tr_a2,
        tau,
    }
}

/// `Σ_{i<j} λi λj`, the scalar curvature straight from the spectrum.
pub fn pair_sum(lambdas: &[f64]) -> f64 {
    let mut s = 0.0;
    for (i, x) in lambdas.iter().enumerate() {
        for y in &lambdas[i + 1..] {
            s += x * y;
        }
    }
    s
}
