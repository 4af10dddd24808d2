//! First integrals: the master equations are linear in `w414·E` and
//! `(w212 + w313)·E` once `Ed` is eliminated, which fixes both products,
//! then `E²` through the normal relation and `w212·w313` through the trace
//! relation.

use dnull_sym::{Polynomial, Rational};

use crate::checkpoint::Checkpoint;
use crate::error::ReplayError;
use crate::frame::{coefficient_of, var, Frame};
use crate::master::MasterEquations;
use crate::reference;

#[derive(Debug, Clone)]
pub struct FirstIntegrals {
    /// Value of `w414·E`.
    pub normal_flux: Polynomial,
    /// Value of `(w212 + w313)·E`.
    pub tangent_flux: Polynomial,
    /// Value of `E²`.
    pub energy: Polynomial,
    /// Value of `w212·w313`.
    pub product: Polynomial,
    pub checkpoints: Vec<Checkpoint>,
}

const WATCHED: [usize; 5] = [var::W2, var::W3, var::W4, var::E, var::ED];

/// Split `p = x·(w414E) + y·(w212 + w313)E + r` with constants `x, y` and
/// `r` free of the watched symbols.
fn flux_coordinates(
    f: &Frame,
    id: &str,
    p: &Polynomial,
) -> Result<(Rational, Rational, Polynomial), ReplayError> {
    let fail = |detail: &str| ReplayError::CheckpointFailed {
        id: id.into(),
        detail: detail.into(),
        derived: p.to_string(),
        expected: "x*w414*E + y*(w212 + w313)*E + r(H, beta, a)".into(),
    };
    let coeff = |v: usize| coefficient_of(p, &[(v, 1), (var::E, 1)], &WATCHED);
    let (x, y2, y3) = (coeff(var::W4), coeff(var::W2), coeff(var::W3));
    let rest = coefficient_of(p, &[], &WATCHED);
    if !(x.is_constant() && y2.is_constant() && y2 == y3) {
        return Err(fail("flux coefficients are not constant and symmetric"));
    }
    let x = x.constant_term();
    let y = y2.constant_term();
    let rebuilt =
        &(&(&f.w4() * &f.e()).scale(&x) + &(&(&f.w2() + &f.w3()) * &f.e()).scale(&y)) + &rest;
    if &rebuilt != p {
        return Err(fail("unexpected terms outside the flux products"));
    }
    Ok((x, y, rest))
}

pub fn derive_integrals(
    f: &Frame,
    m: &MasterEquations,
    s_jj: i64,
    s_33: i64,
) -> Result<FirstIntegrals, ReplayError> {
    let mut cps = Vec::new();
    let first = &m.normal - &m.beta_gamma;
    let second = &m.normal + &m.laplacian;
    cps.push(Checkpoint::against(
        "integral.eliminated-first",
        "normal minus beta-gamma equation",
        first.clone(),
        reference::eliminated_first(f),
    ));
    cps.push(Checkpoint::against(
        "integral.eliminated-second",
        "normal plus Laplacian equation",
        second.clone(),
        reference::eliminated_second(f),
    ));

    // x1 X + y1 Y + r1 = 0, x2 X + y2 Y + r2 = 0.
    let (x1, y1, r1) = flux_coordinates(f, "integral.eliminated-first", &first)?;
    let (x2, y2, r2) = flux_coordinates(f, "integral.eliminated-second", &second)?;
    let det = &(&x1 * &y2) - &(&x2 * &y1);
    if det.is_zero() {
        return Err(ReplayError::CheckpointFailed {
            id: "integral.normal-flux".into(),
            detail: "the two flux equations are dependent".into(),
            derived: format!("{first} ; {second}"),
            expected: "independent equations".into(),
        });
    }
    let inv = det.recip()?;
    let normal_flux = (&r2.scale(&y1) - &r1.scale(&y2)).scale(&inv);
    let tangent_flux = (&r1.scale(&x2) - &r2.scale(&x1)).scale(&inv);

    let normal_form = &(&f.w4() * &f.e()) - &normal_flux;
    let tangent_form = &(&(&f.w2() + &f.w3()) * &f.e()) - &tangent_flux;
    cps.push(Checkpoint::against(
        "integral.normal-flux",
        "first integral for w414 E",
        normal_form,
        reference::normal_flux_integral(f),
    ));
    cps.push(Checkpoint::against(
        "integral.tangent-flux",
        "first integral for (w212 + w313) E",
        tangent_form,
        reference::tangent_flux_integral(f),
    ));

    // w414 = -(c1+c2)E/(c2H): E² = -c2H·(w414E)/(c1+c2) and
    // w414(w212 + w313) = -(c1+c2)·Y/(c2H).
    let k = &f.k;
    let energy = (&f.h() * &normal_flux).scale(&-(&k.c2 / &k.sum()));
    let y_over_h = tangent_flux.div_exact(&f.h())?;
    let mixed = y_over_h.scale(&-(&k.sum() / &k.c2));
    let product = (&f.trace_constant() - &mixed.scale(&(&Rational::integer(s_jj) * &k.tail())))
        .scale(&Rational::integer(s_33).recip()?);
    cps.push(Checkpoint::against(
        "integral.product",
        "first integral for w212 w313",
        &(&f.w2() * &f.w3()) - &product,
        reference::product_integral(f),
    ));
    cps.push(Checkpoint::against(
        "integral.energy",
        "first integral for E^2",
        &f.e().pow(2) - &energy,
        reference::energy_integral(f),
    ));
    let a_linear = product.degree_in(var::A).unwrap_or(0) <= 1
        && energy.degree_in(var::A).unwrap_or(0) <= 1
        && tangent_flux.degree_in(var::A).unwrap_or(0) <= 1;
    cps.push(Checkpoint::structural(
        "integral.a-linear",
        "first integrals are linear in a",
        product.clone(),
        "degree in a at most 1",
        a_linear,
    ));
    Ok(FirstIntegrals {
        normal_flux,
        tangent_flux,
        energy,
        product,
        checkpoints: cps,
    })
}
