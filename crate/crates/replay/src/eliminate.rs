//! Elimination of `β` between the two curves.
//!
//! The raw curves share the excluded factors (`H`, the curvature gaps and
//! `L/H`, `M/H`), so their resultant vanishes identically. Those factors are
//! divided out, with multiplicity, before the resultant is taken.

use dnull_sym::{poly_gcd, resultant_with, DetMethod, Execution, Polynomial, Rational, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checkpoint::{strip_factors, Checkpoint, Ledger};
use crate::config::{AMode, ReplayConfig};
use crate::curves::Curves;
use crate::error::ReplayError;
use crate::frame::Frame;

pub const SMALL_VARIABLES: [&str; 3] = ["H", "beta", "a"];
const H: usize = 0;
const BETA: usize = 1;
const A: usize = 2;

pub const CROSS_CHECKS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The final resultant is a nonzero polynomial, so `H` is a root of a
    /// fixed nonzero polynomial and is locally constant.
    #[serde(rename = "H-locally-constant")]
    HLocallyConstant,
    Inconclusive,
}

/// One evaluation-homomorphism check at a random point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CrossCheck {
    pub h: String,
    pub a: Option<String>,
    /// Degree in `β` of the gcd of the specialized curves.
    pub gcd_degree: u32,
    pub specialized_resultant_zero: bool,
    /// The resultant of the specializations equals the specialized resultant.
    pub homomorphism_holds: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone)]
pub struct Elimination {
    pub reduced9: Polynomial,
    pub reduced12: Polynomial,
    /// Multiplicity removed from each curve, per factor, in [`Elimination::factors`] order.
    pub removed9: Vec<u32>,
    pub removed12: Vec<u32>,
    pub factors: Vec<Polynomial>,
    /// Primitive part of the resultant, over `H, a` (or `H` with numeric `a`).
    pub final_resultant: Polynomial,
    pub verdict: Verdict,
    pub cross_checks: Vec<CrossCheck>,
    pub checkpoints: Vec<Checkpoint>,
}

pub fn small_ring() -> Ring {
    Ring::new(&SMALL_VARIABLES).expect("fixed names")
}

/// Resultant in `var` and the verdict it implies. Both inputs must involve
/// `var`; a constant one would make the resultant a meaningless power.
pub fn resultant_verdict(
    f: &Polynomial,
    g: &Polynomial,
    var: usize,
    exec: Execution,
) -> Result<(Polynomial, Verdict), ReplayError> {
    for (p, which) in [(f, "first input"), (g, "second input")] {
        if p.degree_in(var).unwrap_or(0) == 0 {
            return Err(ReplayError::BetaFree(which.into()));
        }
    }
    let r = resultant_with(f, g, var, DetMethod::Bareiss, exec)?;
    let verdict = if r.is_zero() {
        Verdict::Inconclusive
    } else {
        Verdict::HLocallyConstant
    };
    Ok((r, verdict))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let num: i64 = rng.random_range(-40..=40);
        if num != 0 {
            return Rational::ratio(num, rng.random_range(1..=9));
        }
    }
}

pub fn eliminate(
    cfg: &ReplayConfig,
    frame: &Frame,
    curves: &Curves,
    ledger: &mut Ledger,
) -> Result<Elimination, ReplayError> {
    let ring = small_ring();
    let small = |p: &Polynomial| p.to_ring(&ring);
    let k = &frame.k;
    let lin = |x: &Rational, y: i64| -> Result<Polynomial, ReplayError> {
        Ok(small(&frame.lin(x, &Rational::integer(y)))?)
    };
    let factors = vec![
        small(&frame.h())?,
        small(&frame.gap12())?,
        small(&frame.gap13())?,
        lin(&k.sum(), -1)?,
        lin(&k.c1, 1)?,
        small(&frame.gap32())?,
        small(&curves.l1)?,
        small(&curves.m1)?,
    ];
    let (mut f, removed9) = strip_factors(&small(&curves.curve9)?, &factors);
    let (mut g, removed12) = strip_factors(&small(&curves.curve12)?, &factors);
    for (i, fac) in factors.iter().enumerate() {
        if (removed9[i] > 0 || removed12[i] > 0) && !fac.is_constant() {
            let lifted = fac.to_ring(&frame.ring)?;
            ledger.record(
                &lifted,
                "eliminate.beta",
                "excluded factor divided out of the curves",
            );
        }
    }
    if let AMode::Numeric { value } = &cfg.a_mode {
        f = f.partial_evaluate(&[(A, value.clone())]);
        g = g.partial_evaluate(&[(A, value.clone())]);
    }
    if f.degree_in(BETA).unwrap_or(0) == 0 {
        return Err(ReplayError::BetaFree("reduced nine-curve".into()));
    }
    if g.degree_in(BETA).unwrap_or(0) == 0 {
        return Err(ReplayError::BetaFree("reduced twelve-curve".into()));
    }

    let (raw, verdict) = resultant_verdict(&f, &g, BETA, cfg.execution)?;
    let final_resultant = raw.primitive();
    let mut cps = Vec::new();
    cps.push(Checkpoint::structural(
        "eliminate.beta",
        "resultant in beta of the reduced curves",
        final_resultant.clone(),
        "nonzero and free of beta",
        !raw.is_zero() && raw.degree_in(BETA).unwrap_or(0) == 0,
    ));

    let symbolic_a = matches!(cfg.a_mode, AMode::Symbolic);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + u64::from(cfg.n));
    let lc = |p: &Polynomial| p.coeffs_in(BETA).pop().expect("positive degree");
    let (lf, lg) = (lc(&f), lc(&g));
    let mut checks = Vec::with_capacity(CROSS_CHECKS);
    while checks.len() < CROSS_CHECKS {
        let h0 = random_rational(&mut rng);
        let a0 = if symbolic_a {
            Some(random_rational(&mut rng))
        } else {
            None
        };
        let mut at = vec![(H, h0.clone())];
        if let Some(a0) = &a0 {
            at.push((A, a0.clone()));
        }
        // Leading coefficients must survive for the homomorphism to hold.
        if lf.partial_evaluate(&at).is_zero() || lg.partial_evaluate(&at).is_zero() {
            continue;
        }
        let fs = f.partial_evaluate(&at);
        let gs = g.partial_evaluate(&at);
        let gcd_degree = poly_gcd(&fs, &gs).degree_in(BETA).unwrap_or(0);
        let specialized = raw.partial_evaluate(&at);
        let direct = resultant_with(&fs, &gs, BETA, DetMethod::Bareiss, Execution::Sequential)?;
        let zero = specialized.is_zero();
        let homomorphism_holds = direct == specialized;
        checks.push(CrossCheck {
            h: h0.to_string(),
            a: a0.map(|v| v.to_string()),
            gcd_degree,
            specialized_resultant_zero: zero,
            homomorphism_holds,
            consistent: homomorphism_holds && (gcd_degree > 0) == zero,
        });
    }
    let agree = checks.iter().filter(|c| c.consistent).count();
    cps.push(Checkpoint::structural(
        "eliminate.cross-check",
        "evaluation-homomorphism gcd checks at random points",
        final_resultant.clone(),
        &format!("{agree}/{CROSS_CHECKS} points consistent"),
        agree == CROSS_CHECKS,
    ));

    Ok(Elimination {
        reduced9: f,
        reduced12: g,
        removed9,
        removed12,
        factors,
        final_resultant,
        verdict,
        cross_checks: checks,
        checkpoints: cps,
    })
}
