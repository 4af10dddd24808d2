//! Derivatives of `β` across the `e1` direction vanish.
//!
//! Along `e3` (and likewise `e2`) the Laplacian equation is differentiated
//! twice; eliminating `w313` between the two results leaves
//! `u·H·(2β - c2H)²` once `E` and `(c1 - c2)H + β` are removed, which is
//! excluded. Along `e_k`, `k >= 4`, the second derivative leaves `4H`.

use dnull_sym::{resultant_with, DetMethod, Polynomial, Rational, RationalFunction};

use crate::checkpoint::{strip_factors, Checkpoint, Ledger};
use crate::config::ReplayConfig;
use crate::derivation::Derivation;
use crate::error::ReplayError;
use crate::frame::{var, Frame};
use crate::reference;

#[derive(Debug, Clone)]
pub struct Transversal {
    /// Eliminant after removing `E` and `(c1 - c2)H + β`.
    /// First and second `e3`-derivatives of the Laplacian, divided by `e3(β)`.
    pub first: RationalFunction,
    pub second: RationalFunction,
    pub eliminant: Polynomial,
    pub unit: Option<Rational>,
    /// Coefficient of `e_k(β)` in the second `e_k`-derivative.
    pub k_coefficient: RationalFunction,
    pub checkpoints: Vec<Checkpoint>,
}

fn rf(p: Polynomial) -> RationalFunction {
    RationalFunction::from_poly(p)
}

fn frozen(f: &Frame) -> Derivation {
    let zero = Polynomial::zero(&f.ring);
    Derivation::new(&f.ring)
        .with(var::H, zero.clone())
        .with(var::E, zero.clone())
        .with(var::ED, zero.clone())
        .with(var::A, zero)
        .with(var::BETA, f.bt())
}

/// Derivative along `e3`: `e3(w212)` and `e3(w313)` from the curvature
/// tensor rows, `H` and its `e1`-derivatives frozen.
pub fn along_e3(f: &Frame) -> Result<Derivation, ReplayError> {
    let k = &f.k;
    let step = RationalFunction::new(&f.bt() * &(&f.w3() - &f.w2()), f.gap32())?;
    let twist = RationalFunction::new(
        &f.h().scale(&-k.sum()) + &f.beta().scale(&Rational::integer(3)),
        f.gap13(),
    )?;
    let dw3 = &step * &twist;
    Ok(frozen(f).with(var::W2, step).with(var::W3, dw3))
}

/// Derivative along `e_k`, `k >= 4`.
pub fn along_ek(f: &Frame) -> Result<Derivation, ReplayError> {
    let k = &f.k;
    let fq = reference::normal_quotient(f);
    let g1 = &f.h().scale(&k.sum()) - &f.beta();
    let g2 = &f.h().scale(&k.c1) + &f.beta();
    let bt = rf(f.bt());
    let dw2 = -&(&(&bt * &(&fq + &rf(f.w2()))) / &rf(g1));
    let dw3 = &(&bt * &(&fq + &rf(f.w3()))) / &rf(g2);
    Ok(frozen(f).with(var::W2, dw2).with(var::W3, dw3))
}

pub fn check_transversal(
    cfg: &ReplayConfig,
    ledger: &mut Ledger,
) -> Result<Transversal, ReplayError> {
    cfg.validate()?;
    let f = Frame::new(cfg.n);
    let k = &f.k;
    let bt = rf(f.bt());
    let mut cps = Vec::new();
    let eq = reference::laplacian_quotient(&f);
    ledger.record(
        &f.h(),
        "transversal.first",
        "normal quotient (c1 + c2)E/(c2 H)",
    );

    let d3 = along_e3(&f)?;
    ledger.record(
        &f.gap32(),
        "transversal.first",
        "e3 rule denominator c2 H - 2 beta",
    );
    ledger.record(
        &f.gap13(),
        "transversal.first",
        "e3 rule denominator (c1 - c2)H + beta",
    );
    let first = &d3.apply_rational(&eq)? / &bt;
    let printed_first = rf(reference::transversal_first(&f));
    cps.push(
        Checkpoint::against_rational(
            "transversal.first",
            "first e3-derivative of the Laplacian",
            &first,
            &printed_first,
        )
        .with_note("reference form carries no factor e1(H) on the quotient difference"),
    );
    let second = &d3.apply_rational(&first)? / &bt;
    let printed_second = reference::transversal_second(&f);
    let second_of_printed = &d3.apply_rational(&printed_first)? / &bt;
    // As equations: the denominators differ by the excluded gap c2H - 2β.
    cps.push(Checkpoint::against(
        "transversal.second",
        "e3-derivative of the reference first consequence",
        second_of_printed.numer().clone(),
        printed_second.numer().clone(),
    ));

    let raw = resultant_with(
        first.numer(),
        second.numer(),
        var::W3,
        DetMethod::Bareiss,
        cfg.execution,
    )?;
    ledger.record(
        &f.e(),
        "transversal.eliminant",
        "e1(H) divided out of the eliminant",
    );
    let (stripped, _) = strip_factors(&raw, &[f.e(), f.gap13()]);
    let pattern = &f.h() * &(&f.beta().scale(&Rational::integer(2)) - &f.h().scale(&k.c2)).pow(2);
    let eliminant_cp = Checkpoint::required(
        "transversal.eliminant",
        "w313 eliminated between the two e3-derivatives",
        stripped.clone(),
        pattern,
    );
    let unit = eliminant_cp.unit.clone();
    cps.push(eliminant_cp);

    let dk = along_ek(&f)?;
    let g1 = &f.h().scale(&k.sum()) - &f.beta();
    let g2 = &f.h().scale(&k.c1) + &f.beta();
    ledger.record(
        &g1,
        "transversal.k-first",
        "e_k rule denominator (c1 + c2)H - beta",
    );
    ledger.record(
        &g2,
        "transversal.k-first",
        "e_k rule denominator c1 H + beta",
    );
    let k_first = &dk.apply_rational(&eq)? / &bt;
    cps.push(Checkpoint::against_rational(
        "transversal.k-first",
        "first e_k-derivative of the Laplacian",
        &k_first,
        &reference::transversal_k_first(&f),
    ));
    let k_coefficient = &dk.apply_rational(&k_first)? / &bt;
    cps.push(
        Checkpoint::against_rational(
            "transversal.k-coefficient",
            "second e_k-derivative leaves 4H e_k(beta)",
            &k_coefficient,
            &rf(f.h().scale(&Rational::integer(4))),
        )
        .strict(),
    );

    Ok(Transversal {
        first,
        second,
        eliminant: stripped,
        unit,
        k_coefficient,
        checkpoints: cps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eliminant_pattern_at_four() {
        let mut ledger = Ledger::default();
        let t = check_transversal(&ReplayConfig::new(4), &mut ledger).unwrap();
        for c in &t.checkpoints {
            println!("{} {:?} {:?}", c.id, c.status, c.unit);
        }
        assert!(t
            .checkpoints
            .iter()
            .all(|c| c.status != crate::checkpoint::Status::Failed));
        assert!(t.unit.is_some());
    }
}
