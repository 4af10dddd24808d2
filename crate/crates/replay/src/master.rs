//! The three master equations: beta-gamma, normal and Laplacian.
//!
//! The beta-gamma equation comes from `e1e1(β) + e1e1(c2H - β) = c2·Ed`,
//! with both second derivatives taken in their own chart, the squares of
//! `w212, w313` cancelled with the sum relation, `w212·w313` removed with the
//! trace relation and `H·w414` with the normal relation.

use dnull_sym::{Polynomial, Rational, RationalFunction};

use crate::checkpoint::Checkpoint;
use crate::derivation::{normal_equation, DerivationAlgebra};
use crate::error::ReplayError;
use crate::frame::{coefficient_of, monomial_of, replace_product, var, Frame};
use crate::reference;

#[derive(Debug, Clone)]
pub struct MasterEquations {
    /// Monic in `Ed`.
    pub beta_gamma: Polynomial,
    /// Monic in `Ed`.
    pub normal: Polynomial,
    pub laplacian: Polynomial,
    pub checkpoints: Vec<Checkpoint>,
}

/// `e1e1(β) + e1e1(c2H - β) - c2·Ed` reduced by the relations, before
/// normalizing; `(s_jj, s_33)` fix the reading of the trace relation.
pub fn beta_gamma_raw(
    alg: &DerivationAlgebra,
    s_jj: i64,
    s_33: i64,
) -> Result<Polynomial, ReplayError> {
    let f = &alg.frame;
    let bdd = alg.base.apply_poly(&alg.base.apply_poly(&f.beta())?)?;
    let gdd = alg
        .gamma_chart
        .apply_poly(&alg.gamma_chart.apply_poly(&f.lambda3())?)?;
    let mut expr = &(&bdd + &gdd) - &f.ed().scale(&f.k.c2);
    expr = &expr + &(&(&f.w2() + &f.w3()) * &f.sum_relation()).scale(&Rational::integer(2));

    // s_33·w212·w313 = K - s_jj(n-3)·w414·(w212 + w313).
    let trace = f.trace_relation(s_jj, s_33);
    let pair = monomial_of(f.ring.len(), &[(var::W2, 1), (var::W3, 1)]);
    let pair_coeff = Rational::integer(s_33);
    let pair_value =
        (&(&(&f.w2() * &f.w3()).scale(&pair_coeff) - &trace)).scale(&pair_coeff.recip()?);
    expr = replace_product(&expr, &pair, &pair_value);
    Ok(f.rewrite_normal(&expr))
}

/// Make `p` monic in `Ed`, which must enter linearly with a constant coefficient.
pub fn ed_monic(id: &str, p: &Polynomial) -> Result<Polynomial, ReplayError> {
    let lead = coefficient_of(p, &[(var::ED, 1)], &[var::ED]);
    let higher = p.degree_in(var::ED).unwrap_or(0) > 1;
    if higher || !lead.is_constant() || lead.is_zero() {
        return Err(ReplayError::CheckpointFailed {
            id: id.into(),
            detail: "Ed must enter linearly with a constant coefficient".into(),
            derived: p.to_string(),
            expected: "c*Ed + ...".into(),
        });
    }
    Ok(p.scale(&lead.constant_term().recip()?))
}

/// The Laplacian equation: `-Ed - (w212 + w313 + (n-3)w414)E + H(tr A² - a)`.
pub fn laplacian(f: &Frame) -> Polynomial {
    let fluxes = &(&f.w2() + &f.w3()) + &f.w4().scale(&f.k.tail());
    let lead = &(-&f.ed()) - &(&fluxes * &f.e());
    &lead + &(&f.h() * &(&f.trace_a2() - &f.a()))
}

/// The quotient forms `w212 = Bd/(c1H - β)`, `w313 = (c2E - Bd)/((c1-c2)H + β)`
/// and `w414 = -(c1+c2)E/(c2H)` satisfy the sum and normal relations.
pub fn codazzi_quotients(f: &Frame) -> Result<RationalFunction, ReplayError> {
    let k = &f.k;
    let w2 = RationalFunction::new(f.bd(), f.gap12())?;
    let w3 = RationalFunction::new(&f.e().scale(&k.c2) - &f.bd(), f.gap13())?;
    let w4 = RationalFunction::new(f.e().scale(&-k.sum()), f.h().scale(&k.c2))?;
    let subst = |p: &Polynomial| -> Result<RationalFunction, ReplayError> {
        Ok(RationalFunction::from_poly(p.clone())
            .substitute(var::W2, &w2)?
            .substitute(var::W3, &w3)?
            .substitute(var::W4, &w4)?)
    };
    let a = subst(&f.sum_relation())?;
    let b = subst(&f.normal_relation())?;
    Ok(&(&a * &a) + &(&b * &b))
}

pub fn derive_master(
    alg: &DerivationAlgebra,
    s_jj: i64,
    s_33: i64,
) -> Result<MasterEquations, ReplayError> {
    let f = &alg.frame;
    let mut cps = Vec::new();

    let bdd = alg.base.apply_poly(&alg.base.apply_poly(&f.beta())?)?;
    let gdd = alg
        .gamma_chart
        .apply_poly(&alg.gamma_chart.apply_poly(&f.lambda3())?)?;
    cps.push(Checkpoint::printed_identity(
        "master.beta-second",
        "second derivative of beta along e1",
        reference::beta_second(f, &bdd),
    ));
    cps.push(Checkpoint::printed_identity(
        "master.gamma-second",
        "second derivative of the third curvature along e1",
        reference::gamma_second(f, &gdd),
    ));
    let normal_raw = alg.base.apply_poly(&f.normal_relation())?;
    cps.push(Checkpoint::against(
        "master.normal-second",
        "second derivative of the repeated curvature, modulo the normal relation",
        f.rewrite_normal(&normal_raw),
        f.rewrite_normal(&reference::normal_second(f)),
    ));
    cps.push(Checkpoint::vanishing(
        "frame.codazzi-quotients",
        "quotient forms of the connection satisfy the sum and normal relations",
        &codazzi_quotients(f)?,
    ));

    let bg_raw = beta_gamma_raw(alg, s_jj, s_33)?;
    cps.push(Checkpoint::against(
        "master.beta-gamma-general",
        "beta-gamma equation in c1, c2",
        bg_raw.clone(),
        reference::beta_gamma_general(f),
    ));
    let beta_gamma = ed_monic("master.beta-gamma", &bg_raw)?;
    cps.push(Checkpoint::against(
        "master.beta-gamma",
        "beta-gamma master equation",
        beta_gamma.clone(),
        reference::beta_gamma(f),
    ));

    let (normal_reduced, normal) = normal_equation(f, &alg.base)?;
    cps.push(Checkpoint::against(
        "master.normal-general",
        "normal equation in c1, c2",
        normal_reduced,
        reference::normal_general(f),
    ));
    cps.push(Checkpoint::against(
        "master.normal",
        "normal master equation",
        normal.clone(),
        reference::normal(f),
    ));

    let lap = laplacian(f);
    cps.push(Checkpoint::against(
        "master.laplacian-general",
        "Laplacian equation in c1, c2",
        lap.clone(),
        reference::laplacian_general(f),
    ));
    cps.push(Checkpoint::against(
        "master.laplacian",
        "Laplacian master equation",
        lap.clone(),
        reference::laplacian(f),
    ));

    Ok(MasterEquations {
        beta_gamma,
        normal,
        laplacian: lap,
        checkpoints: cps,
    })
}

/// For each reading `(s_jj, s_33)` of the trace relation, whether the
/// derived beta-gamma equation reproduces the reference form.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SignAudit {
    pub s_jj: i64,
    pub s_33: i64,
    pub reproduces_reference: bool,
}

pub fn sign_audit(alg: &DerivationAlgebra) -> Result<Vec<SignAudit>, ReplayError> {
    let reference = reference::beta_gamma(&alg.frame);
    let mut out = Vec::new();
    for s_jj in [-1, 1] {
        for s_33 in [-1, 1] {
            let derived = ed_monic("master.beta-gamma", &beta_gamma_raw(alg, s_jj, s_33)?)?;
            out.push(SignAudit {
                s_jj,
                s_33,
                reproduces_reference: derived.ratio_to(&reference).is_some(),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ReplayConfig;
    use crate::derivation::build_algebra;
    use dnull_sym::parse;

    #[test]
    fn dimension_four_forms() {
        let alg = build_algebra(&ReplayConfig::new(4)).unwrap();
        let m = derive_master(&alg, -1, 1).unwrap();
        let p = |s: &str| parse(&alg.frame.ring, s).unwrap();
        assert_eq!(
            m.beta_gamma,
            p("Ed + (w212 + w313)*E/2 + 44*H^3 + 12*H^2*beta - 3*H*beta^2")
        );
        assert_eq!(m.normal, p("Ed + 3*w414*E + 8*H^3"));
        for c in &m.checkpoints {
            assert!(c.passed(), "{c:?}");
        }
    }

    #[test]
    fn only_one_reading_reproduces() {
        let alg = build_algebra(&ReplayConfig::new(5)).unwrap();
        let audit = sign_audit(&alg).unwrap();
        let hits: Vec<_> = audit
            .iter()
            .filter(|a| a.reproduces_reference)
            .map(|a| (a.s_jj, a.s_33))
            .collect();
        assert_eq!(hits, vec![(-1, 1)]);
    }
}
