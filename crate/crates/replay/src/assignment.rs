//! Which slot of the ideal pattern carries the curvature `-(n/2)H`.
//!
//! The pattern is `(α, β, γ, α+β+γ, …, α+β+γ)` with the last value repeated
//! `n - 3` times, and the trace equals `nH`. The simple curvature
//! `λ1 = c1·H` can be `α` (accepted) or the repeated value, which needs
//! multiplicity one and so `n = 4`.

use dnull_sym::{Polynomial, Rational, Ring};
use serde::Serialize;

use crate::checkpoint::Checkpoint;
use crate::frame::{Constants, Frame};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RejectedBranch {
    /// Both evaluations of the trace, and the consequence `trace - pattern = 0`
    /// reduced to its primitive part.
    Contradiction {
        trace: String,
        pattern_trace: String,
        consequence: String,
    },
    /// The branch needs multiplicity one for the repeated value, impossible for `n > 4`.
    Vacuous { multiplicity: u32 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssignmentCertificate {
    pub n: u32,
    pub rejected: RejectedBranch,
    /// Accepted assignment `λ1, λ2, λ3, λ4..λn`.
    pub lambdas: [String; 4],
}

pub fn check_curvature_assignment(n: u32) -> (AssignmentCertificate, Vec<Checkpoint>) {
    let ring = Ring::new(&["H", "alpha", "beta", "gamma"]).expect("fixed names");
    let v = |name: &str| ring.var(name).expect("declared");
    let (h, alpha, beta, gamma) = (v("H"), v("alpha"), v("beta"), v("gamma"));
    let k = Constants::new(n);
    let nn = Rational::integer(i64::from(n));
    let trace = h.scale(&nn);
    let mut checkpoints = Vec::new();

    let rejected = if n == 4 {
        // λ1 is the repeated value, so α + β + γ = c1·H and the trace is twice that.
        let pattern_trace = h.scale(&(&Rational::integer(2) * &k.c1));
        let consequence = &trace - &pattern_trace;
        checkpoints.push(Checkpoint::against(
            "assignment.rejected",
            "repeated slot carrying -(n/2)H forces H = 0",
            consequence.clone(),
            h.clone(),
        ));
        RejectedBranch::Contradiction {
            trace: trace.to_string(),
            pattern_trace: pattern_trace.to_string(),
            consequence: consequence.primitive().to_string(),
        }
    } else {
        RejectedBranch::Vacuous {
            multiplicity: n - 3,
        }
    };

    // Accepted: α = c1·H and (n-2)(α+β+γ) = nH.
    let repeated = h.scale(&(&nn / &Rational::integer(i64::from(n) - 2)));
    let alpha_value = h.scale(&k.c1);
    let solved_gamma = &(&repeated - &alpha_value) - &beta;
    let pattern_sum = &(&alpha + &beta) + &gamma;
    let at = |p: &Polynomial| p.substitute(1, &alpha_value).substitute(3, &solved_gamma);
    let sum_residue = &at(&pattern_sum) - &repeated;
    let trace_residue = &at(&(&pattern_sum.scale(&Rational::integer(i64::from(n) - 2)))) - &trace;
    let frame = Frame::new(n);
    let lambda3 = frame.lambda3().to_ring(&ring).expect("H and beta only");
    let residue = dnull_sym::RationalFunction::from_poly(&sum_residue + &trace_residue);
    checkpoints.push(Checkpoint::vanishing(
        "assignment.trace",
        "accepted slot satisfies the trace",
        &residue,
    ));
    checkpoints.push(Checkpoint::required(
        "assignment.accepted",
        "third curvature is c2 H - beta",
        solved_gamma.clone(),
        lambda3,
    ));

    let cert = AssignmentCertificate {
        n,
        rejected,
        lambdas: [
            alpha_value.to_string(),
            beta.to_string(),
            solved_gamma.to_string(),
            repeated.to_string(),
        ],
    };
    (cert, checkpoints)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejected_branch_at_four_forces_h_zero() {
        let (cert, cps) = check_curvature_assignment(4);
        match cert.rejected {
            RejectedBranch::Contradiction {
                trace,
                pattern_trace,
                consequence,
            } => {
                assert_eq!(trace, "4*H");
                assert_eq!(pattern_trace, "-4*H");
                assert_eq!(consequence, "H");
            }
            other => panic!("{other:?}"),
        }
        assert!(cps.iter().all(|c| c.passed()), "{cps:?}");
        assert_eq!(
            cert.lambdas,
            [
                "-2*H".to_string(),
                "beta".into(),
                "-beta + 4*H".into(),
                "2*H".into()
            ]
        );
    }

    #[test]
    fn rejected_branch_vacuous_above_four() {
        let (cert, cps) = check_curvature_assignment(5);
        assert_eq!(cert.rejected, RejectedBranch::Vacuous { multiplicity: 2 });
        assert!(cps.iter().all(|c| c.passed()));
        assert_eq!(cert.lambdas[0], "-5/2*H");
    }
}
