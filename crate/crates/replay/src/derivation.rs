//! Derivations on the frame ring, given by their values on the variables and
//! extended by the Leibniz rule.

use dnull_sym::{Polynomial, RationalFunction, Ring};

use crate::config::ReplayConfig;
use crate::error::ReplayError;
use crate::frame::{var, Frame};

#[derive(Debug, Clone)]
pub struct Derivation {
    ring: Ring,
    rules: Vec<Option<RationalFunction>>,
}

impl Derivation {
    pub fn new(ring: &Ring) -> Self {
        Derivation {
            ring: ring.clone(),
            rules: vec![None; ring.len()],
        }
    }

    pub fn with(mut self, var: usize, value: impl Into<RationalFunction>) -> Self {
        self.set(var, value);
        self
    }

    pub fn set(&mut self, var: usize, value: impl Into<RationalFunction>) {
        self.rules[var] = Some(value.into());
    }

    pub fn rule(&self, var: usize) -> Option<&RationalFunction> {
        self.rules[var].as_ref()
    }

    fn rule_or_err(&self, var: usize) -> Result<&RationalFunction, ReplayError> {
        self.rule(var)
            .ok_or_else(|| ReplayError::MissingRule(self.ring.name(var).to_string()))
    }

    /// `D(p)` as a rational function.
    pub fn apply(&self, p: &Polynomial) -> Result<RationalFunction, ReplayError> {
        let mut poly_part = Polynomial::zero(&self.ring);
        let mut frac_part = RationalFunction::zero(&self.ring);
        for v in p.variables() {
            let rule = self.rule_or_err(v)?;
            if rule.is_zero() {
                continue;
            }
            let dp = p.diff(v);
            match rule.as_polynomial() {
                Some(r) => poly_part = &poly_part + &(&dp * &r),
                None => frac_part = &frac_part + &(&RationalFunction::from_poly(dp) * rule),
            }
        }
        Ok(&RationalFunction::from_poly(poly_part) + &frac_part)
    }

    /// `D(p)` when every rule it touches is polynomial.
    pub fn apply_poly(&self, p: &Polynomial) -> Result<Polynomial, ReplayError> {
        let mut out = Polynomial::zero(&self.ring);
        for v in p.variables() {
            let rule = self.rule_or_err(v)?;
            if rule.is_zero() {
                continue;
            }
            let r = rule.as_polynomial().ok_or_else(|| {
                ReplayError::NotPolynomial(format!("rule for {} is {rule}", self.ring.name(v)))
            })?;
            out = &out + &(&p.diff(v) * &r);
        }
        Ok(out)
    }

    /// Quotient rule.
    pub fn apply_rational(&self, f: &RationalFunction) -> Result<RationalFunction, ReplayError> {
        let dn = self.apply(f.numer())?;
        let dd = self.apply(f.denom())?;
        let num = RationalFunction::from_poly(f.numer().clone());
        let den = RationalFunction::from_poly(f.denom().clone());
        let top = &(&dn * &den) - &(&num * &dd);
        Ok(&top / &RationalFunction::from_poly(f.denom().pow(2)))
    }
}

/// The e1-derivation of the replay.
///
/// `base` leaves `e1(E)` as the free symbol `Ed`; `d` closes it with the
/// value read off the normal master equation. `gamma_chart` differs from
/// `base` only in writing `e1(β)` through the third curvature, which is the
/// natural chart for second derivatives of `λ3`.
#[derive(Debug, Clone)]
pub struct DerivationAlgebra {
    pub frame: Frame,
    pub base: Derivation,
    pub gamma_chart: Derivation,
    pub d: Derivation,
    /// `e1(E)` on the solution set.
    pub ed_value: Polynomial,
}

impl DerivationAlgebra {
    pub fn constants(&self) -> &crate::frame::Constants {
        &self.frame.k
    }
}

/// Rules shared by every chart: everything except `β`.
fn common_rules(f: &Frame) -> Derivation {
    let k = &f.k;
    let h = f.h();
    let w2 = f.w2();
    let w3 = f.w3();
    let w4 = f.w4();
    let dw2 = &(-&w2.pow(2)) - &(&h * &f.beta()).scale(&k.c1);
    let dw3 = &(-&w3.pow(2)) - &(&h * &f.lambda3()).scale(&k.c1);
    let dw4 = &(-&w4.pow(2)) - &h.pow(2).scale(&(&k.c1 * &k.sum()));
    Derivation::new(&f.ring)
        .with(var::H, f.e())
        .with(var::A, Polynomial::zero(&f.ring))
        .with(var::W2, dw2)
        .with(var::W3, dw3)
        .with(var::W4, dw4)
        .with(var::E, f.ed())
}

/// Base derivation with `e1(β) = (c1H - β)·w212` and `e1(E) = Ed`.
pub fn base_derivation(f: &Frame) -> Derivation {
    common_rules(f).with(var::BETA, &f.gap12() * &f.w2())
}

/// Same as the base derivation but with `e1(β) = c2·E - ((c1 - c2)H + β)·w313`.
pub fn gamma_chart(f: &Frame) -> Derivation {
    common_rules(f).with(var::BETA, &f.e().scale(&f.k.c2) - &(&f.gap13() * &f.w3()))
}

/// Normal master equation in the base derivation, made monic in `Ed`:
/// the `e1`-derivative of the normal relation, with `H·w414` rewritten,
/// divided by `c1 + c2`.
pub fn normal_equation(
    f: &Frame,
    base: &Derivation,
) -> Result<(Polynomial, Polynomial), ReplayError> {
    let raw = base.apply_poly(&f.normal_relation())?;
    let reduced = f.rewrite_normal(&raw);
    let lead = crate::frame::coefficient_of(&reduced, &[(var::ED, 1)], &[var::ED]);
    if !lead.is_constant() || lead.is_zero() {
        return Err(ReplayError::CheckpointFailed {
            id: "master.normal".into(),
            detail: "Ed does not enter linearly with a constant coefficient".into(),
            derived: reduced.to_string(),
            expected: "c·Ed + ...".into(),
        });
    }
    let monic = reduced.scale(&lead.constant_term().recip()?);
    Ok((reduced, monic))
}

pub fn build_algebra(cfg: &ReplayConfig) -> Result<DerivationAlgebra, ReplayError> {
    cfg.validate()?;
    let frame = Frame::new(cfg.n);
    let base = base_derivation(&frame);
    let gamma = gamma_chart(&frame);
    let (_, monic) = normal_equation(&frame, &base)?;
    // monic = Ed + rest, so e1(E) = -rest.
    let ed_value = -&(&monic - &frame.ed());
    let d = base.clone().with(var::E, ed_value.clone());
    Ok(DerivationAlgebra {
        frame,
        base,
        gamma_chart: gamma,
        d,
        ed_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use dnull_sym::parse;

    #[test]
    fn rules_at_four() {
        let alg = build_algebra(&ReplayConfig::new(4)).unwrap();
        let r = &alg.frame.ring;
        let p = |s: &str| parse(r, s).unwrap();
        assert_eq!(
            alg.d.apply_poly(&p("beta")).unwrap(),
            p("(-2*H - beta)*w212")
        );
        assert_eq!(
            alg.d.apply_poly(&p("w212")).unwrap(),
            p("-w212^2 + 2*H*beta")
        );
        assert!(alg.d.apply_poly(&p("a")).unwrap().is_zero());
        assert_eq!(alg.ed_value, p("-3*w414*E - 8*H^3"));
    }

    #[test]
    fn missing_rule_is_an_error() {
        let alg = build_algebra(&ReplayConfig::new(5)).unwrap();
        let e = alg.d.apply_poly(&alg.frame.hagg()).unwrap_err();
        assert!(matches!(e, ReplayError::MissingRule(ref v) if v == "h"));
    }

    #[test]
    fn small_dimension_rejected() {
        assert!(matches!(
            build_algebra(&ReplayConfig::new(3)),
            Err(ReplayError::DimensionTooSmall(3))
        ));
    }
}
