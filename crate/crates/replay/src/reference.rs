//! Reference forms of the published derivation, as polynomials over the
//! frame ring for a fixed `n`. Each function returns the form moved to one
//! side (`lhs - rhs`), so a derived equation matches when it is a nonzero
//! rational multiple of the returned polynomial.

use dnull_sym::{Polynomial, Rational, RationalFunction};

use crate::frame::Frame;

fn r(num: i64, den: i64) -> Rational {
    Rational::ratio(num, den)
}

/// `(w212 + w313)·E`.
fn tangent_flux(f: &Frame) -> Polynomial {
    &(&f.w2() + &f.w3()) * &f.e()
}

/// `w414·E`.
fn normal_flux(f: &Frame) -> Polynomial {
    &f.w4() * &f.e()
}

/// `x·H³ + y·H²β + z·Hβ²`.
fn cubic(f: &Frame, x: &Rational, y: &Rational, z: &Rational) -> Polynomial {
    let h = f.h();
    let b = f.beta();
    &(&h.pow(3).scale(x) + &(&h.pow(2) * &b).scale(y)) + &(&h * &b.pow(2)).scale(z)
}

fn a_h(f: &Frame) -> Polynomial {
    &f.a() * &f.h()
}

/// Second-order equation for `β`, with `e1e1(β)` given.
pub fn beta_second(f: &Frame, bdd: &Polynomial) -> Polynomial {
    let k = &f.k;
    let q = f.gap12();
    let lhs = &(bdd - &(&f.w2() * &f.e()).scale(&k.c1)) + &(&q * &f.w2().pow(2)).scale(&r(2, 1));
    let rhs = -&(&(&f.h() * &f.beta()) * &q).scale(&k.c1);
    &lhs - &rhs
}

/// Second-order equation for the third curvature, with `e1e1(c2H - β)` given.
pub fn gamma_second(f: &Frame, gdd: &Polynomial) -> Polynomial {
    let k = &f.k;
    let p = f.gap13();
    let lhs = &(gdd - &(&f.w3() * &f.e()).scale(&k.c1)) + &(&p * &f.w3().pow(2)).scale(&r(2, 1));
    let rhs = -&(&(&f.h() * &f.lambda3()) * &p).scale(&k.c1);
    &lhs - &rhs
}

/// Second-order equation for the repeated curvature.
pub fn normal_second(f: &Frame) -> Polynomial {
    let k = &f.k;
    let lhs = &(&f.ed().scale(&k.sum()) - &normal_flux(f).scale(&k.c1))
        - &(&f.h() * &f.w4().pow(2)).scale(&(&r(2, 1) * &k.c2));
    let rhs = f.h().pow(3).scale(&(&(&k.c1 * &k.c2) * &k.sum()));
    &lhs - &rhs
}

/// Beta-gamma equation in terms of `c1, c2` before substituting `n`.
pub fn beta_gamma_general(f: &Frame) -> Polynomial {
    let k = &f.k;
    let (c1, c2, s, t) = (&k.c1, &k.c2, k.sum(), k.tail());
    let two = r(2, 1);
    let c2sq = c2 * c2;
    let twoc1_c2 = &(&two * c1) - c2;
    let flux = &(&(&(&two * &t) * &s) * &twoc1_c2) + &(c2 * &(&(&two * c2) - c1));
    let lhs = &f.ed().scale(&c2sq) + &tangent_flux(f).scale(&flux);
    let x = &(&(&(&(&two * &t) * &twoc1_c2) * &s) * &c2sq) - &(&(c1 * &c2sq) * &(c1 - c2));
    let y = &(&two * &c2sq) * &(c1 - c2);
    let z = -&(&(&two * c2) * &(c1 - c2));
    &lhs - &cubic(f, &x, &y, &z)
}

/// Normal equation in terms of `c1, c2`.
pub fn normal_general(f: &Frame) -> Polynomial {
    let k = &f.k;
    let lhs = &f.ed().scale(&k.sum()) + &normal_flux(f).scale(&(&k.c1 + &(&r(2, 1) * &k.c2)));
    &lhs - &f.h().pow(3).scale(&(&(&k.c1 * &k.c2) * &k.sum()))
}

/// Laplacian equation in terms of `c1, c2`.
pub fn laplacian_general(f: &Frame) -> Polynomial {
    let k = &f.k;
    let (c1, c2, s) = (&k.c1, &k.c2, k.sum());
    let fluxes = &(&f.w2() + &f.w3()) + &f.w4().scale(&k.tail());
    let x = &(&(c1 * c1) + &(c2 * c2)) + &(&k.tail() * &(&s * &s));
    let lead = &(-&f.ed()) - &(&fluxes * &f.e());
    &(&lead + &cubic(f, &x, &(&r(-2, 1) * c2), &r(2, 1))) - &a_h(f)
}

/// Beta-gamma master equation with `n` substituted.
pub fn beta_gamma(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let flux = r(-(9 * n * n - 50 * n + 48), n * n);
    let x = r(n * n * (7 * n * n - 29 * n + 26), 2 * (n - 2) * (n - 2));
    let y = r(2 * n * (n - 1), n - 2);
    let z = r(-4 * (n - 1), n);
    &(&f.ed() + &tangent_flux(f).scale(&flux)) + &cubic(f, &x, &y, &z)
}

/// Normal master equation with `n` substituted.
pub fn normal(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let lead = &f.ed() + &normal_flux(f).scale(&r(n + 2, 2));
    &lead + &f.h().pow(3).scale(&r(n * n * n, 4 * (n - 2)))
}

/// Laplacian master equation with `n` substituted.
pub fn laplacian(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let fluxes = &(&f.w2() + &f.w3()) + &f.w4().scale(&f.k.tail());
    let lead = &(-&f.ed()) - &(&fluxes * &f.e());
    let rest = cubic(
        f,
        &r(n * n * (n + 2), 2 * (n - 2)),
        &r(-n * n, n - 2),
        &r(2, 1),
    );
    &(&lead + &rest) - &a_h(f)
}

/// First line after eliminating `e1e1(H)` (normal minus beta-gamma).
pub fn eliminated_first(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let lhs = &tangent_flux(f).scale(&r(9 * n * n - 50 * n + 48, n * n))
        + &normal_flux(f).scale(&r(n + 2, 2));
    let rhs = cubic(
        f,
        &r(n * n * (13 * n * n - 56 * n + 52), 4 * (n - 2) * (n - 2)),
        &r(2 * n * (n - 1), n - 2),
        &r(4 * (2 * n - 3), n),
    );
    &lhs - &rhs
}

/// Second line after eliminating `e1e1(H)` (normal plus Laplacian).
pub fn eliminated_second(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let lhs = &tangent_flux(f) + &normal_flux(f).scale(&r(n - 8, 2));
    let rhs = &cubic(
        f,
        &r(n * n * (3 * n + 4), 4 * (n - 2)),
        &r(-n * n, n - 2),
        &r(2, 1),
    ) - &a_h(f);
    &lhs - &rhs
}

/// The factor `2n³ + 31n² - 112n + 96` shared by the first integrals.
pub fn integral_factor(n: u32) -> i64 {
    let n = i64::from(n);
    2 * n * n * n + 31 * n * n - 112 * n + 96
}

/// Normal-flux first integral.
pub fn normal_flux_integral(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let lhs = normal_flux(f).scale(&r(2 * integral_factor(f.k.n), n * n));
    let rhs = &cubic(
        f,
        &r(
            7 * n.pow(4) - 56 * n.pow(3) + 86 * n * n + 152 * n - 192,
            2 * (n - 2) * (n - 2),
        ),
        &r(-(11 * n * n - 52 * n + 48), n - 2),
        &r(2 * (5 * n * n - 44 * n + 48), n * n),
    ) - &a_h(f).scale(&r(9 * n * n - 50 * n + 48, n * n));
    &lhs - &rhs
}

/// Tangent-flux first integral.
pub fn tangent_flux_integral(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let lhs = tangent_flux(f).scale(&r(2 * integral_factor(f.k.n), n * n));
    let rhs = &cubic(
        f,
        &r(
            n * n * (5 * n.pow(3) - 82 * n * n + 256 * n - 200),
            4 * (n - 2) * (n - 2),
        ),
        &r(n * (3 * n * n - 16 * n + 16), 2 * (n - 2)),
        &r(3 * n * n - 40 * n + 48, n),
    ) + &a_h(f).scale(&r(n + 2, 2));
    &lhs - &rhs
}

/// Product first integral for `w212·w313`.
pub fn product_integral(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let (h, b) = (f.h(), f.beta());
    let lhs = (&f.w2() * &f.w3()).scale(&r(integral_factor(f.k.n), n * (n - 3)));
    let rhs = [
        h.pow(2).scale(&r(
            n * n * (n.pow(3) - 144 * n * n + 480 * n - 392),
            4 * (n - 2) * (n - 2),
        )),
        (&h * &b).scale(&r(
            n * (n.pow(3) - 56 * n * n + 176 * n - 144),
            2 * (n - 2) * (n - 3),
        )),
        b.pow(2)
            .scale(&r(5 * n.pow(3) - 18 * n * n + 56 * n - 48, n * (n - 3))),
        a_h(f).scale(&r(n + 2, 2)),
    ]
    .iter()
    .fold(Polynomial::zero(&f.ring), |acc, t| &acc + t);
    &lhs - &rhs
}

/// Energy first integral for `E²`.
pub fn energy_integral(f: &Frame) -> Polynomial {
    let n = i64::from(f.k.n);
    let h = f.h();
    let lhs = f
        .e()
        .pow(2)
        .scale(&r(-4 * integral_factor(f.k.n), n.pow(3)));
    let rhs =
        &(&h * &cubic(
            f,
            &r(
                7 * n.pow(4) - 56 * n.pow(3) + 86 * n * n + 152 * n - 192,
                2 * (n - 2) * (n - 2),
            ),
            &r(-(11 * n * n - 52 * n + 48), n - 2),
            &r(2 * (5 * n * n - 44 * n + 48), n * n),
        )) - &(&h * &a_h(f)).scale(&r(9 * n * n - 50 * n + 48, n * n));
    &lhs - &rhs
}

fn rf(p: Polynomial) -> RationalFunction {
    RationalFunction::from_poly(p)
}

/// First transversal consequence as printed: the quotient difference plus
/// `H(2β - c2H)((c1 - c2)H + β)`.
pub fn transversal_first(f: &Frame) -> Polynomial {
    let k = &f.k;
    let diff = &f.w3() - &f.w2();
    let tail = &(&f.h() * &(&f.beta().scale(&r(2, 1)) - &f.h().scale(&k.c2))) * &f.gap13();
    &diff + &tail
}

/// Second transversal consequence as printed.
pub fn transversal_second(f: &Frame) -> RationalFunction {
    let k = &f.k;
    let diff = &f.w3() - &f.w2();
    let factor = &f.h().scale(&(&r(-2, 1) * &k.c1)) + &f.beta().scale(&r(2, 1));
    let first = &rf(&diff * &factor) / &rf(f.gap13());
    let lin =
        &f.h().scale(&(&(&r(2, 1) * &k.c1) - &(&r(3, 1) * &k.c2))) + &f.beta().scale(&r(4, 1));
    let second = &(&f.h() * &f.gap32()) * &lin;
    &first + &rf(second)
}

/// `(c1 + c2)E/(c2H)`, the value of `-w414` on the normal relation.
pub fn normal_quotient(f: &Frame) -> RationalFunction {
    let k = &f.k;
    RationalFunction::new(f.e().scale(&k.sum()), f.h().scale(&k.c2)).expect("nonzero")
}

/// Consequence of the `k >= 4` transversal derivative as printed.
pub fn transversal_k_first(f: &Frame) -> RationalFunction {
    let k = &f.k;
    let fq = normal_quotient(f);
    let g1 = &f.h().scale(&k.sum()) - &f.beta();
    let g2 = &f.h().scale(&k.c1) + &f.beta();
    let t1 = &(&fq + &rf(f.w2())) / &rf(g1);
    let t2 = &(&fq + &rf(f.w3())) / &rf(g2);
    let brace = &(&t1 - &t2) * &rf(f.e());
    let tail = (&f.h() * &(&f.beta().scale(&r(2, 1)) - &f.h().scale(&k.c2))).scale(&r(2, 1));
    &brace + &rf(tail)
}

/// Laplacian equation with `w414` written through the normal quotient.
pub fn laplacian_quotient(f: &Frame) -> RationalFunction {
    let k = &f.k;
    let fq = normal_quotient(f);
    let brace = &rf(&f.w2() + &f.w3()) - &fq.scale(&k.tail());
    let lead = &rf(-&f.ed()) - &(&brace * &rf(f.e()));
    let curv = &f.h() * &(&f.trace_a2() - &f.a());
    &lead + &rf(curv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dnull_sym::parse;

    #[test]
    fn dimension_four_coefficients() {
        let f = Frame::new(4);
        let p = |s: &str| parse(&f.ring, s).unwrap();
        assert_eq!(
            beta_gamma(&f),
            p("Ed + (w212 + w313)*E/2 + 44*H^3 + 12*H^2*beta - 3*H*beta^2")
        );
        assert_eq!(normal(&f), p("Ed + 3*w414*E + 8*H^3"));
        assert_eq!(
            laplacian(&f),
            p("-Ed - (w212 + w313 + w414)*E + 24*H^3 - 8*H^2*beta + 2*H*beta^2 - a*H")
        );
        assert_eq!(integral_factor(4) * 4, 17 * 64);
    }

    #[test]
    fn general_forms_specialize_at_four() {
        let f = Frame::new(4);
        assert!(beta_gamma_general(&f).ratio_to(&beta_gamma(&f)).is_some());
        assert!(laplacian_general(&f).ratio_to(&laplacian(&f)).is_some());
    }
}
