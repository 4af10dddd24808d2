use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::shape::ShapeOperator;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SurfaceSpec {
    /// `S^p(radius) x R^(n-p)`.
    SphericalCylinder {
        p: usize,
        n: usize,
        radius: f64,
    },
    RoundSphere {
        n: usize,
        radius: f64,
    },
    Hyperplane {
        n: usize,
    },
    /// Graph of a height function with vanishing gradient at the origin.
    Graph {
        hessian: Vec<Vec<f64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
}

impl SurfaceSpec {
    pub fn n(&self) -> usize {
        match self {
            SurfaceSpec::SphericalCylinder { n, .. }
            | SurfaceSpec::RoundSphere { n, .. }
            | SurfaceSpec::Hyperplane { n } => *n,
            SurfaceSpec::Graph { hessian, .. } => hessian.len(),
        }
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        let bad = |m: String| Err(GeometryError::InvalidSpec(m));
        let radius_ok = |r: f64| r.is_finite() && r > 0.0;
        match self {
            SurfaceSpec::SphericalCylinder { p, n, radius } => {
                if *n < 2 {
                    return bad(format!("n: {n} is below 2"));
                }
                if *p < 1 || *p > n - 1 {
                    return bad(format!("p: {p} outside 1..={}", n - 1));
                }
                if !radius_ok(*radius) {
                    return bad(format!("radius: {radius} is not positive"));
                }
            }
            SurfaceSpec::RoundSphere { n, radius } => {
                if *n < 2 {
                    return bad(format!("n: {n} is below 2"));
                }
                if !radius_ok(*radius) {
                    return bad(format!("radius: {radius} is not positive"));
                }
            }
            SurfaceSpec::Hyperplane { n } => {
                if *n < 2 {
                    return bad(format!("n: {n} is below 2"));
                }
            }
            SurfaceSpec::Graph { hessian, n } => {
                if let Some(n) = n {
                    if *n != hessian.len() {
                        return bad(format!(
                            "n: {n} disagrees with a {}-row hessian",
                            hessian.len()
                        ));
                    }
                }
                ShapeOperator::from_rows(hessian)
                    .map_err(|e| GeometryError::InvalidSpec(format!("hessian: {e}")))?;
            }
        }
        Ok(())
    }
}

pub fn catalog_shape_operator(spec: &SurfaceSpec) -> Result<ShapeOperator, GeometryError> {
    spec.validate()?;
    match spec {
        SurfaceSpec::SphericalCylinder { p, n, radius } => {
            let mut d = vec![0.0; *n];
            d[..*p].fill(1.0 / radius);
            ShapeOperator::diagonal(&d)
        }
        SurfaceSpec::RoundSphere { n, radius } => ShapeOperator::diagonal(&vec![1.0 / radius; *n]),
        SurfaceSpec::Hyperplane { n } => ShapeOperator::new(DMatrix::zeros(*n, *n)),
        SurfaceSpec::Graph { hessian, .. } => ShapeOperator::from_rows(hessian),
    }
}

/// Parametrizations that can be sampled into an [`super::ImmersionGrid`].
#[derive(Debug, Clone, PartialEq)]
pub enum Chart {
    /// `(r cos(u1/r), r sin(u1/r), u2, …, un)`.
    Cylinder { n: usize, radius: f64 },
    /// `(u, uᵀ Hess u / 2)`.
    QuadraticGraph { hessian: DMatrix<f64> },
    /// `(u, 0)`.
    Hyperplane { n: usize },
}

impl Chart {
    pub fn n(&self) -> usize {
        match self {
            Chart::Cylinder { n, .. } | Chart::Hyperplane { n } => *n,
            Chart::QuadraticGraph { hessian } => hessian.nrows(),
        }
    }

    pub fn point(&self, u: &[f64]) -> Vec<f64> {
        match self {
            Chart::Cylinder { radius, .. } => {
                let t = u[0] / radius;
                let mut x = vec![radius * t.cos(), radius * t.sin()];
                x.extend_from_slice(&u[1..]);
                x
            }
            Chart::QuadraticGraph { hessian } => {
                let v = nalgebra::DVector::from_column_slice(u);
                let mut x = u.to_vec();
                x.push(0.5 * v.dot(&(hessian * &v)));
                x
            }
            Chart::Hyperplane { .. } => {
                let mut x = u.to_vec();
                x.push(0.0);
                x
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_examples() {
        let c = catalog_shape_operator(&SurfaceSpec::SphericalCylinder {
            p: 1,
            n: 4,
            radius: 1.0,
        })
        .unwrap();
        assert_eq!(c.eigenvalues(), vec![0.0, 0.0, 0.0, 1.0]);
        let s = catalog_shape_operator(&SurfaceSpec::RoundSphere { n: 4, radius: 2.0 }).unwrap();
        assert_eq!(s.matrix, DMatrix::identity(4, 4) * 0.5);
        let h = vec![
            vec![1.0, 0.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0, 0.0],
            vec![0.0, 0.0, 3.0, 0.0],
            vec![0.0, 0.0, 0.0, 6.0],
        ];
        let g = catalog_shape_operator(&SurfaceSpec::Graph {
            hessian: h,
            n: None,
        })
        .unwrap();
        assert_eq!(g.eigenvalues(), vec![1.0, 2.0, 3.0, 6.0]);
        assert_eq!(
            catalog_shape_operator(&SurfaceSpec::Hyperplane { n: 3 })
                .unwrap()
                .matrix,
            DMatrix::zeros(3, 3)
        );
    }

    #[test]
    fn invalid_specs() {
        for spec in [
            SurfaceSpec::SphericalCylinder {
                p: 0,
                n: 4,
                radius: 1.0,
            },
            SurfaceSpec::SphericalCylinder {
                p: 4,
                n: 4,
                radius: 1.0,
            },
            SurfaceSpec::SphericalCylinder {
                p: 1,
                n: 4,
                radius: 0.0,
            },
            SurfaceSpec::RoundSphere { n: 4, radius: -1.0 },
            SurfaceSpec::Graph {
                hessian: vec![vec![1.0, 2.0], vec![0.0, 1.0]],
                n: None,
            },
        ] {
            assert!(
                matches!(
                    catalog_shape_operator(&spec),
                    Err(GeometryError::InvalidSpec(_))
                ),
                "{spec:?}"
            );
        }
    }
}
