use nalgebra::{DMatrix, DVector, SymmetricEigen};
use serde::{Deserialize, Serialize};

use super::Chart;
use crate::error::GeometryError;
use crate::shape::ShapeOperator;

/// Metrics with a larger eigenvalue ratio are treated as degenerate.
pub const MAX_CONDITION: f64 = 1e12;

/// Points of an immersion `u ↦ x(u) ∈ R^(n+1)` on a uniform lattice.
/// `points` is row-major over the lattice (last axis fastest), each point
/// contributing its `n + 1` coordinates in order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImmersionGrid {
    pub n: usize,
    pub h: Vec<f64>,
    pub shape: Vec<usize>,
    pub base: Vec<usize>,
    pub points: Vec<f64>,
}

impl ImmersionGrid {
    /// Sample `chart` on `2·half + 1` points per axis centred on `u = 0`.
    pub fn sample(chart: &Chart, h: f64, half: usize) -> Self {
        let n = chart.n();
        let side = 2 * half + 1;
        let shape = vec![side; n];
        let total = side.pow(n as u32);
        let mut points = Vec::with_capacity(total * (n + 1));
        let mut u = vec![0.0; n];
        for flat in 0..total {
            let mut rest = flat;
            for axis in (0..n).rev() {
                u[axis] = ((rest % side) as f64 - half as f64) * h;
                rest /= side;
            }
            points.extend(chart.point(&u));
        }
        ImmersionGrid {
            n,
            h: vec![h; n],
            shape,
            base: vec![half; n],
            points,
        }
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        let n = self.n;
        let schema = |m: String| Err(GeometryError::Schema(m));
        if n < 2 {
            return schema(format!("n: {n} is below 2"));
        }
        for (key, len) in [
            ("h", self.h.len()),
            ("shape", self.shape.len()),
            ("base", self.base.len()),
        ] {
            if len != n {
                return schema(format!("{key}: length {len}, expected {n}"));
            }
        }
        if let Some(h) = self.h.iter().find(|h| !(h.is_finite() && **h > 0.0)) {
            return schema(format!("h: spacing {h} is not positive"));
        }
        let expected = self.shape.iter().product::<usize>() * (n + 1);
        if self.points.len() != expected {
            return schema(format!(
                "points: length {}, shape implies {expected}",
                self.points.len()
            ));
        }
        if self.points.iter().any(|v| !v.is_finite()) {
            return schema("points: non-finite coordinate".into());
        }
        for axis in 0..n {
            let (b, s) = (self.base[axis], self.shape[axis]);
            if b < 2 || b + 2 >= s {
                return Err(GeometryError::Stencil(format!(
                    "axis {axis}: base {b} in extent {s} leaves fewer than two points on a side"
                )));
            }
        }
        Ok(())
    }

    fn at(&self, offset: &[isize]) -> DVector<f64> {
        let mut flat = 0usize;
        for axis in 0..self.n {
            let idx = self.base[axis] as isize + offset[axis];
            flat = flat * self.shape[axis] + idx as usize;
        }
        let m = self.n + 1;
        DVector::from_column_slice(&self.points[flat * m..(flat + 1) * m])
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridDiagnostics {
    pub metric_condition: f64,
    /// Unit normal used for the second fundamental form.
    pub normal: Vec<f64>,
}

/// Central differences for the first and second fundamental forms, the
/// normal from the cofactors of the tangent frame, then
/// `A = L⁻¹·II·L⁻ᵀ` with `I = LLᵀ`: the operator `I⁻¹II` written in an
/// orthonormal basis, which keeps it symmetric. The normal is oriented so
/// that `H >= 0`; when `H` vanishes the frame `(x_1, …, x_n, ν)` is
/// positively oriented.
pub fn shape_operator_from_grid(
    grid: &ImmersionGrid,
) -> Result<(ShapeOperator, GridDiagnostics), GeometryError> {
    grid.validate()?;
    let n = grid.n;
    let unit = |axis: usize, step: isize| {
        let mut o = vec![0isize; n];
        o[axis] = step;
        o
    };
    let x0 = grid.at(&vec![0; n]);
    let mut jac = DMatrix::zeros(n + 1, n);
    for i in 0..n {
        let d = (grid.at(&unit(i, 1)) - grid.at(&unit(i, -1))) / (2.0 * grid.h[i]);
        jac.set_column(i, &d);
    }
    let metric = jac.transpose() * &jac;
    let eig = SymmetricEigen::new(metric.clone()).eigenvalues;
    let (lo, hi) = (eig.min(), eig.max());
    let condition = if lo > 0.0 { hi / lo } else { f64::INFINITY };
    if condition > MAX_CONDITION {
        return Err(GeometryError::DegenerateMetric(condition));
    }

    // ν_k = (-1)^(k+n) det(J without row k) makes det[J | ν] = |ν|² > 0.
    let mut normal = DVector::zeros(n + 1);
    for k in 0..=n {
        let minor = jac.clone().remove_row(k);
        let sign = if (k + n) % 2 == 0 { 1.0 } else { -1.0 };
        normal[k] = sign * minor.determinant();
    }
    normal /= normal.norm();

    let mut second = DMatrix::zeros(n, n);
    for i in 0..n {
        let xii =
            (grid.at(&unit(i, 1)) - &x0 * 2.0 + grid.at(&unit(i, -1))) / (grid.h[i] * grid.h[i]);
        second[(i, i)] = xii.dot(&normal);
        for j in i + 1..n {
            let corner = |si: isize, sj: isize| {
                let mut o = vec![0isize; n];
                o[i] = si;
                o[j] = sj;
                grid.at(&o)
            };
            let xij = (corner(1, 1) - corner(1, -1) - corner(-1, 1) + corner(-1, -1))
                / (4.0 * grid.h[i] * grid.h[j]);
            second[(i, j)] = xij.dot(&normal);
            second[(j, i)] = second[(i, j)];
        }
    }

    let chol = metric
        .cholesky()
        .ok_or(GeometryError::DegenerateMetric(condition))?;
    let l_inv = chol
        .l()
        .try_inverse()
        .ok_or(GeometryError::DegenerateMetric(condition))?;
    let mut a = &l_inv * second * l_inv.transpose();
    a = (&a + a.transpose()) * 0.5;
    let scale = a.amax().max(1.0);
    if a.trace() < -1e-12 * scale {
        a = -a;
        normal = -normal;
    }
    let op = ShapeOperator::new(a)?;
    Ok((
        op,
        GridDiagnostics {
            metric_condition: condition,
            normal: normal.iter().copied().collect(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperplane_is_flat() {
        let g = ImmersionGrid::sample(&Chart::Hyperplane { n: 4 }, 1e-3, 2);
        let (a, diag) = shape_operator_from_grid(&g).unwrap();
        assert!(a.matrix.amax() <= 1e-10);
        assert!((diag.metric_condition - 1.0).abs() < 1e-9);
    }

    #[test]
    fn cylinder_has_positive_curvature() {
        let g = ImmersionGrid::sample(&Chart::Cylinder { n: 4, radius: 1.0 }, 1e-3, 2);
        let (a, _) = shape_operator_from_grid(&g).unwrap();
        let ev = a.eigenvalues();
        assert!(
            (ev[3] - 1.0).abs() < 1e-4 && ev[..3].iter().all(|v| v.abs() < 1e-4),
            "{ev:?}"
        );
    }

    #[test]
    fn short_stencil_and_bad_lengths() {
        let mut g = ImmersionGrid::sample(&Chart::Hyperplane { n: 2 }, 0.1, 1);
        assert!(matches!(
            shape_operator_from_grid(&g),
            Err(GeometryError::Stencil(_))
        ));
        g.points.pop();
        assert!(matches!(
            shape_operator_from_grid(&g),
            Err(GeometryError::Schema(_))
        ));
    }

    #[test]
    fn degenerate_metric() {
        // Collapse the second coordinate direction.
        let mut g = ImmersionGrid::sample(&Chart::Hyperplane { n: 2 }, 0.1, 2);
        for p in g.points.chunks_mut(3) {
            p[1] = 0.0;
        }
        assert!(matches!(
            shape_operator_from_grid(&g),
            Err(GeometryError::DegenerateMetric(_))
        ));
    }
}
