//! Shape operators of the form `(α, β, γ, α+β+γ, …, α+β+γ)`.

use serde::{Deserialize, Serialize};

use crate::shape::ShapeOperator;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdealPattern {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Mean of the eigenvalues in the repeated slots.
    pub repeated: f64,
    pub multiplicity: usize,
    /// Indices into the ascending principal curvatures, in slot order:
    /// α, β, γ, then the repeated slots.
    pub permutation: Vec<usize>,
}

/// First matching assignment: triples `i < j < k` of ascending eigenvalue
/// indices in lexicographic order, every remaining eigenvalue within `tol`
/// of `λi + λj + λk`. Needs `n >= 4`.
pub fn detect_ideal_pattern(a: &ShapeOperator, tol: f64) -> Option<IdealPattern> {
    detect_in_spectrum(&a.eigenvalues(), tol)
}

pub fn detect_in_spectrum(lambdas: &[f64], tol: f64) -> Option<IdealPattern> {
    let n = lambdas.len();
    if n < 4 {
        return None;
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let s = lambdas[i] + lambdas[j] + lambdas[k];
                let rest: Vec<usize> = (0..n).filter(|&m| m != i && m != j && m != k).collect();
                if rest.iter().all(|&m| (lambdas[m] - s).abs() <= tol) {
                    let repeated =
                        rest.iter().map(|&m| lambdas[m]).sum::<f64>() / rest.len() as f64;
                    let mut permutation = vec![i, j, k];
                    permutation.extend(&rest);
                    return Some(IdealPattern {
                        alpha: lambdas[i],
                        beta: lambdas[j],
                        gamma: lambdas[k],
                        repeated,
                        multiplicity: rest.len(),
                        permutation,
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p = detect_in_spectrum(&[1.0, 2.0, 3.0, 6.0], 1e-8).unwrap();
        assert_eq!(
            (p.alpha, p.beta, p.gamma, p.repeated, p.multiplicity),
            (1.0, 2.0, 3.0, 6.0, 1)
        );
        let p = detect_in_spectrum(&[1.0, 2.0, 3.0, 6.0, 6.0], 1e-8).unwrap();
        assert_eq!((p.repeated, p.multiplicity), (6.0, 2));
        assert_eq!(p.permutation, vec![0, 1, 2, 3, 4]);
        assert!(detect_in_spectrum(&[1.0, 1.0, 1.0, 1.0], 1e-8).is_none());
        assert!(detect_in_spectrum(&[1.0, 2.0, 3.0], 1e-8).is_none());
    }

    #[test]
    fn repeated_slot_need_not_be_largest() {
        // α+β+γ = -1 sits below β and γ.
        let p = detect_in_spectrum(&[-4.0, -1.0, 1.0, 2.0], 1e-8).unwrap();
        assert_eq!(
            (p.alpha, p.beta, p.gamma, p.repeated),
            (-4.0, 1.0, 2.0, -1.0)
        );
        assert_eq!(p.permutation, vec![0, 2, 3, 1]);
    }
}
