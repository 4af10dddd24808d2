//! Mixed connection coefficients and the Gauss-equation rows built from them.
//!
//! The coefficients `ω_23^j, ω_32^j, ω_j2³` (and their antisymmetric
//! partners) are quotients of one function `h_j` by curvature gaps. All
//! `h_j` enter the rows identically, so a single symbol `h` stands for them
//! and sums over `j = 4..n` become a factor `n - 3`.

use dnull_sym::{Polynomial, Rational, RationalFunction, Ring};

use crate::checkpoint::Checkpoint;
use crate::frame::{Constants, Frame};

pub const OMEGA_VARIABLES: [&str; 7] = ["H", "beta", "h", "ojj", "o33", "w212", "w313"];

#[derive(Debug, Clone)]
pub struct OmegaResult {
    pub checkpoints: Vec<Checkpoint>,
    /// `(n-3)·ojj·(w212 + w313) + o33·w212 - K` over [`OMEGA_VARIABLES`].
    pub trace_relation: Polynomial,
}

struct Mixed {
    o23j: RationalFunction,
    o2j3: RationalFunction,
    o32j: RationalFunction,
    o3j2: RationalFunction,
    oj23: RationalFunction,
    oj32: RationalFunction,
}

fn rf(p: Polynomial) -> RationalFunction {
    RationalFunction::from_poly(p)
}

pub fn check_omega_identities(n: u32) -> OmegaResult {
    let ring = Ring::new(&OMEGA_VARIABLES).expect("fixed names");
    let v = |name: &str| ring.var(name).expect("declared");
    let k = Constants::new(n);
    let (h, beta, hj, ojj, o33, w2, w3) = (
        v("H"),
        v("beta"),
        v("h"),
        v("ojj"),
        v("o33"),
        v("w212"),
        v("w313"),
    );
    let lin = |x: &Rational, y: i64| &h.scale(x) + &beta.scale(&Rational::integer(y));
    let quot = |den: Polynomial| RationalFunction::new(hj.clone(), den).expect("nonzero gap");

    // β + c1H, β - (c1+c2)H, 2β - c2H.
    let g23 = lin(&k.c1, 1);
    let g32 = lin(&-k.sum(), 1);
    let gj = lin(&-&k.c2, 2);
    let m = Mixed {
        o23j: -quot(g23.clone()),
        o2j3: quot(g23),
        o32j: quot(g32.clone()),
        o3j2: -quot(g32),
        oj23: quot(gj.clone()),
        oj32: -quot(gj),
    };
    let mut cps = Vec::new();

    let products = [
        (
            "omega.product-first",
            -&(&m.o2j3 * &m.oj32) - (&(&m.oj23 - &m.o2j3) * &m.o3j2),
        ),
        (
            "omega.product-second",
            -&(&m.o3j2 * &m.oj23) - (&(&m.oj32 - &m.o3j2) * &m.o2j3),
        ),
        (
            "omega.product-third",
            -&(&m.o23j * &m.o3j2) - (&(&m.o32j - &m.o23j) * &m.oj32),
        ),
    ];
    for (id, residue) in &products {
        cps.push(Checkpoint::vanishing(
            id,
            "product relation of the mixed coefficients",
            residue,
        ));
    }
    let cyclic = &(&(&m.o2j3 * &m.oj32) + &(&m.o3j2 * &m.oj23)) + &(&m.o23j * &m.o3j2);
    cps.push(Checkpoint::vanishing(
        "omega.cyclic",
        "cyclic identity of the mixed coefficients",
        &cyclic,
    ));

    let tail = k.tail();
    let gamma = lin(&k.c2, -1);
    let rhs_beta = (&h * &beta).scale(&k.sum());
    let rhs_gamma = (&h * &gamma).scale(&k.sum());
    let rhs_mixed = &beta * &gamma;

    // Gauss rows along (e_j, e_2), (e_j, e_3) and (e_3, e_2).
    let row_beta = &(&(&rf(&ojj * &w2) - &(&m.o2j3 * &m.oj32)) + &(&(&m.oj23 - &m.o2j3) * &m.o3j2))
        - &rf(rhs_beta.clone());
    let row_gamma = &(&(&rf(&ojj * &w3) - &(&m.o3j2 * &m.oj23))
        + &(&(&m.oj32 - &m.o3j2) * &m.o2j3))
        - &rf(rhs_gamma.clone());
    let row_mixed = &(&(&rf(&o33 * &w2) - &(&m.o23j * &m.o3j2).scale(&tail))
        + &(&(&m.o32j - &m.o23j) * &m.oj32).scale(&tail))
        - &rf(rhs_mixed.clone());

    let two = Rational::integer(2);
    let printed_beta =
        &(&rf(&ojj * &w2) - &(&m.o2j3 * &m.oj32).scale(&two)) - &rf(rhs_beta.clone());
    let printed_gamma = &(&rf(&ojj * &w3) - &(&m.o3j2 * &m.oj23).scale(&two)) - &rf(rhs_gamma);
    let printed_mixed =
        &(&rf(&o33 * &w2) - &(&m.o23j * &m.o3j2).scale(&(&two * &tail))) - &rf(rhs_mixed);
    cps.push(
        Checkpoint::against_rational(
            "omega.row-beta",
            "row along e_j, e_2",
            &row_beta,
            &printed_beta,
        )
        .strict(),
    );
    cps.push(
        Checkpoint::against_rational(
            "omega.row-gamma",
            "row along e_j, e_3",
            &row_gamma,
            &printed_gamma,
        )
        .strict(),
    );
    cps.push(
        Checkpoint::against_rational(
            "omega.row-mixed",
            "row along e_3, e_2",
            &row_mixed,
            &printed_mixed,
        )
        .strict(),
    );

    let untwisted = row_beta
        .substitute(2, &RationalFunction::zero(&ring))
        .expect("polynomial substitution");
    let plain = rf(&(&ojj * &w2) - &rhs_beta);
    cps.push(
        Checkpoint::against_rational(
            "omega.untwisted",
            "row along e_j, e_2 with h = 0",
            &untwisted,
            &plain,
        )
        .strict(),
    );

    let trace_sum = &(&row_beta + &row_gamma).scale(&tail) + &row_mixed;
    let k_const = &h.pow(2).scale(&(&(&tail * &k.sum()) * &k.c2)) + &(&beta * &gamma);
    let trace_relation = &(&(&ojj * &(&w2 + &w3)).scale(&tail) + &(&o33 * &w2)) - &k_const;
    cps.push(
        Checkpoint::against_rational(
            "omega.trace-sum",
            "trace of the three rows",
            &trace_sum,
            &rf(trace_relation.clone()),
        )
        .strict(),
    );

    OmegaResult {
        checkpoints: cps,
        trace_relation,
    }
}

/// Write the omega-ring trace relation with `ω_jj¹ = s_jj·w414` and
/// `ω_33¹ = s_33·w313` over the frame ring.
pub fn to_frame(trace_relation: &Polynomial, frame: &Frame, s_jj: i64, s_33: i64) -> Polynomial {
    let ring = trace_relation.ring();
    let idx = |name: &str| ring.index_of(name).expect("declared");
    let target = Ring::new(&[&OMEGA_VARIABLES[..], &["w414"]].concat()).expect("fresh names");
    let lifted = trace_relation.to_ring(&target).expect("superset");
    let w4 = target.var("w414").expect("declared");
    let w3 = target.var("w313").expect("declared");
    let mapped = lifted
        .substitute(idx("ojj"), &w4.scale(&Rational::integer(s_jj)))
        .substitute(idx("o33"), &w3.scale(&Rational::integer(s_33)));
    mapped.to_ring(&frame.ring).expect("frame variables")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        for n in [4, 7] {
            let out = check_omega_identities(n);
            assert_eq!(out.checkpoints.len(), 9);
            for c in &out.checkpoints {
                assert!(c.passed(), "n = {n}: {c:?}");
            }
        }
    }

    #[test]
    fn trace_relation_maps_to_frame() {
        let frame = Frame::new(5);
        let out = check_omega_identities(5);
        for (s, t) in [(-1, 1), (-1, -1), (1, 1), (1, -1)] {
            assert_eq!(
                to_frame(&out.trace_relation, &frame, s, t),
                frame.trace_relation(s, t)
            );
        }
    }
}
