//! The tangency relation `L·w212 + M·w313 = 0`, the quadric
//! `(w212 + w313)(q·w212 + P·w313) = N`, and the two plane curves in
//! `(H, β)` obtained by eliminating the connection forms.

use dnull_sym::Polynomial;

use crate::checkpoint::{Checkpoint, Ledger};
use crate::derivation::DerivationAlgebra;
use crate::error::ReplayError;
use crate::frame::{coefficient_of, monomial_of, replace_product, var, Frame};
use crate::integrals::FirstIntegrals;

#[derive(Debug, Clone)]
pub struct Curves {
    pub l: Polynomial,
    pub m: Polynomial,
    pub n: Polynomial,
    /// `L/H` and `M/H`.
    pub l1: Polynomial,
    pub m1: Polynomial,
    pub curve9: Polynomial,
    pub curve12: Polynomial,
    pub checkpoints: Vec<Checkpoint>,
}

const WATCHED: [usize; 5] = [var::W2, var::W3, var::W4, var::E, var::ED];

/// Degree in `(H, β)` of each monomial, and its weight with `a` counted twice.
fn strata(p: &Polynomial) -> (Vec<u32>, Vec<u32>) {
    let mut degs: Vec<u32> = Vec::new();
    let mut weights: Vec<u32> = Vec::new();
    for (m, _) in p.terms() {
        let d = m.exponent(var::H) + m.exponent(var::BETA);
        let w = d + 2 * m.exponent(var::A);
        if !degs.contains(&d) {
            degs.push(d);
        }
        if !weights.contains(&w) {
            weights.push(w);
        }
    }
    degs.sort_unstable();
    weights.sort_unstable();
    (degs, weights)
}

/// Every monomial is `H^i β^j a^k` with `(i + j, k)` among `allowed` and
/// nothing else occurs.
fn fits_template(p: &Polynomial, allowed: &[(u32, u32)], need_h: bool) -> bool {
    p.terms().all(|(m, _)| {
        let others = m
            .exponents()
            .iter()
            .enumerate()
            .all(|(v, &e)| e == 0 || [var::H, var::BETA, var::A].contains(&v));
        let d = m.exponent(var::H) + m.exponent(var::BETA);
        others && allowed.contains(&(d, m.exponent(var::A))) && (!need_h || m.exponent(var::H) > 0)
    })
}

/// Curve predicate: weighted-homogeneous of weight `w` (with `a` of weight 2),
/// `(H, β)`-degree `w` attained, strata of `(H, β)`-degree among `allowed`.
fn curve_shape(p: &Polynomial, w: u32, allowed: &[u32]) -> bool {
    let (degs, weights) = strata(p);
    weights == [w]
        && degs.last() == Some(&w)
        && degs.iter().all(|d| allowed.contains(d))
        && p.degree_in(var::BETA).unwrap_or(0) > 0
}

/// `c2·q·M1·∂β F + ∂H F·(q·M1 - P·L1)`: the β-derivative of `F` along the
/// curve, with `dH/dβ = (q·M1 - P·L1)/(c2·q·M1)` cleared.
pub fn prolong(f: &Frame, curve: &Polynomial, l1: &Polynomial, m1: &Polynomial) -> Polynomial {
    let q = f.gap12();
    let slope_num = &(&q * m1) - &(&f.gap13() * l1);
    let along_beta = &(&(&q * m1) * &curve.diff(var::BETA)).scale(&f.k.c2);
    along_beta + &(&curve.diff(var::H) * &slope_num)
}

pub fn derive_curves(
    alg: &DerivationAlgebra,
    fi: &FirstIntegrals,
    ledger: &mut Ledger,
) -> Result<Curves, ReplayError> {
    let f = &alg.frame;
    let k = &f.k;
    let mut cps = Vec::new();

    // e1 of the energy integral, with w414·E and then E eliminated.
    let energy_form = &f.e().pow(2) - &fi.energy;
    let mut t = alg.d.apply_poly(&energy_form)?;
    let flux = monomial_of(f.ring.len(), &[(var::W4, 1), (var::E, 1)]);
    t = replace_product(&t, &flux, &fi.normal_flux);
    let e_value = (&(&f.gap12() * &f.w2()) + &(&f.gap13() * &f.w3())).scale(&k.c2.recip()?);
    t = t.substitute(var::E, &e_value).scale(&k.c2);
    let l = coefficient_of(&t, &[(var::W2, 1)], &WATCHED);
    let m = coefficient_of(&t, &[(var::W3, 1)], &WATCHED);
    let rebuilt = &(&l * &f.w2()) + &(&m * &f.w3());
    let quartic: [(u32, u32); 2] = [(4, 0), (2, 1)];
    let tangency_ok = rebuilt == t
        && !l.is_zero()
        && !m.is_zero()
        && fits_template(&l, &quartic, true)
        && fits_template(&m, &quartic, true);
    cps.push(Checkpoint::structural(
        "curve.tangency",
        "derivative of the energy integral is L w212 + M w313",
        t.clone(),
        "L, M in span{H^4, H^3 beta, H^2 beta^2, H beta^3, a H^2, a H beta}",
        tangency_ok,
    ));
    if !tangency_ok {
        return Err(ReplayError::CheckpointFailed {
            id: "curve.tangency".into(),
            detail: "L or M off template".into(),
            derived: t.to_string(),
            expected: "L*w212 + M*w313".into(),
        });
    }

    let n_poly = fi.tangent_flux.scale(&k.c2);
    let quadric =
        &(&(&f.w2() + &f.w3()) * &(&(&f.gap12() * &f.w2()) + &(&f.gap13() * &f.w3()))) - &n_poly;
    cps.push(Checkpoint::structural(
        "curve.quadric",
        "tangent flux integral times c2 with the sum relation",
        quadric,
        "N in span{H^3, H^2 beta, H beta^2, a H}",
        fits_template(&n_poly, &[(3, 0), (1, 1)], true),
    ));

    let h = f.h();
    let l1 = l.div_exact(&h)?;
    let m1 = m.div_exact(&h)?;
    ledger.record(&h, "curve.tangency", "L and M divided by H");
    ledger.record(&m1, "curve.nine", "w313 = -(L/M) w212");
    ledger.record(
        &l1,
        "curve.nine",
        "w212^2 = -W M/L from the product integral",
    );

    let q = f.gap12();
    let p = f.gap13();
    let w = &fi.product;
    let curve9 = &(&(w * &(&m1 - &l1)) * &(&(&q * &m1) - &(&p * &l1))) + &(&(&n_poly * &l1) * &m1);
    cps.push(Checkpoint::structural(
        "curve.nine",
        "curve from the product, tangency and quadric relations",
        curve9.clone(),
        "weight 9 with weight(a) = 2, (H, beta)-degree 9, strata 3, 5, 7, 9",
        curve_shape(&curve9, 9, &[3, 5, 7, 9]),
    ));

    ledger.record(
        &q,
        "curve.twelve",
        "dH/dbeta denominator c2 (c1 H - beta) M",
    );
    ledger.record(
        &m1,
        "curve.twelve",
        "dH/dbeta denominator c2 (c1 H - beta) M",
    );
    let curve12 = prolong(f, &curve9, &l1, &m1);
    cps.push(Checkpoint::structural(
        "curve.twelve",
        "beta-derivative of the nine-curve along the integral curve",
        curve12.clone(),
        "weight 12 with weight(a) = 2, (H, beta)-degree 12, even strata 4..12",
        curve_shape(&curve12, 12, &[4, 6, 8, 10, 12]),
    ));
    Ok(Curves {
        l,
        m,
        n: n_poly,
        l1,
        m1,
        curve9,
        curve12,
        checkpoints: cps,
    })
}
