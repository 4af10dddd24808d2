//! One PASS/FAIL line per acceptance criterion, written straight to stdout
//! so the table shows even when the harness captures output. The first-integral criterion is a known failure: the
//! derived integrals disagree with the printed coefficient formulas, and
//! the test pins that outcome so a silent change in either direction shows.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use dnull_geometry::delta::combinatorial_inf;
use dnull_geometry::shape::pair_sum;
use dnull_geometry::stiefel::{
    euclidean_gradient, minimize_tau, random_frame, tau_of_frame, StiefelConfig,
};
use dnull_geometry::surface::{Chart, ImmersionGrid};
use dnull_geometry::{
    catalog_shape_operator, chen_bound, delta_invariant, ideality_gap, null2type_check,
    shape_operator_from_grid, DeltaConfig, Null2Status, ShapeOperator, SurfaceSpec,
};
use dnull_replay::checkpoint::Status;
use dnull_replay::frame::{coefficient_of, var, Frame};
use dnull_replay::reference::integral_factor;
use dnull_replay::{
    check_omega_identities, check_transversal_flatness, derive_first_integrals,
    derive_master_equations, eliminate_beta, replay_all, ReplayConfig, Verdict,
};
use dnull_sym::resultant::sylvester_matrix;
use dnull_sym::{
    poly_gcd, resultant_with, DetMethod, Execution, Monomial, Polynomial, Rational, Ring,
};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

type Outcome = (bool, String);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_operator(r: &mut ChaCha8Rng, n: usize) -> ShapeOperator {
    let scale = 10f64.powf(r.random_range(-1.0..1.0));
    let g = DMatrix::from_fn(n, n, |_, _| StandardNormal.sample(r));
    ShapeOperator::new((&g + g.transpose()) * (0.5 * scale)).unwrap()
}

fn int(v: i64) -> Rational {
    Rational::integer(v)
}

fn coeff(p: &Polynomial, pattern: &[(usize, u32)]) -> Rational {
    let watched = [
        var::H,
        var::BETA,
        var::W2,
        var::W3,
        var::W4,
        var::E,
        var::ED,
        var::A,
    ];
    coefficient_of(p, pattern, &watched).constant_term()
}

fn master() -> Outcome {
    use var::*;
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 4..=12 {
        let m = derive_master_equations(&ReplayConfig::new(n)).unwrap();
        bad.extend(
            m.checkpoints
                .iter()
                .filter(|c| !matches!(c.status, Status::ExactMatch | Status::MatchUpToUnit))
                .map(|c| format!("n={n} {}", c.id)),
        );
    }
    let m = derive_master_equations(&ReplayConfig::new(4)).unwrap();
    let lap = m.laplacian.scale(&int(-1));
    let got = [
        coeff(&m.beta_gamma, &[(H, 3)]),
        coeff(&m.beta_gamma, &[(H, 2), (BETA, 1)]),
        coeff(&m.beta_gamma, &[(H, 1), (BETA, 2)]),
        coeff(&m.normal, &[(W4, 1), (E, 1)]),
        coeff(&m.normal, &[(H, 3)]),
        -coeff(&lap, &[(H, 3)]),
        coeff(&lap, &[(H, 2), (BETA, 1)]),
        -coeff(&lap, &[(H, 1), (BETA, 2)]),
    ];
    let want = [44, 12, -3, 3, 8, 24, 8, 2].map(int);
    let secs = start.elapsed().as_secs_f64();
    let ok = bad.is_empty() && got == want && secs < 10.0;
    (
        ok,
        format!(
            "n=4..12 checkpoints {}, n=4 coefficients {:?}, {secs:.2} s",
            if bad.is_empty() {
                "match".into()
            } else {
                bad.join(",")
            },
            got.map(|q| q.to_string())
        ),
    )
}

fn first_integrals() -> Outcome {
    let mut bad = BTreeSet::new();
    for n in 4..=12 {
        let fi = derive_first_integrals(&ReplayConfig::new(n)).unwrap();
        for c in &fi.checkpoints {
            if c.status != Status::ExactMatch
                && c.status != Status::MatchUpToUnit
                && c.status != Status::StructuralOnly
            {
                bad.insert(c.id.clone());
            }
        }
    }
    let spot = Rational::ratio(4 * integral_factor(4), 64);
    let ok = bad.is_empty() && spot == int(17);
    let ids: Vec<_> = bad.into_iter().collect();
    (
        ok,
        format!(
            "spot value {spot}; derived integrals disagree with the printed forms at {}",
            if ids.is_empty() {
                "none".into()
            } else {
                ids.join(", ")
            }
        ),
    )
}

fn transversal() -> Outcome {
    let mut bad = Vec::new();
    for n in 4..=12 {
        let (t, _) = check_transversal_flatness(&ReplayConfig::new(n)).unwrap();
        let f = Frame::new(n);
        let pattern = &f.h() * &(&f.beta().scale(&int(2)) - &f.h().scale(&f.k.c2)).pow(2);
        let unit_ok = t.eliminant.ratio_to(&pattern).is_some_and(|u| !u.is_zero());
        let four_h = f.h().scale(&int(4));
        let k_ok = t
            .k_coefficient
            .as_polynomial()
            .and_then(|p| p.ratio_to(&four_h))
            .is_some();
        if !(unit_ok && k_ok) {
            bad.push(n);
        }
    }
    (
        bad.is_empty(),
        format!("u·H·(2β - c2 H)² and 4H for n=4..12, failures at {bad:?}"),
    )
}

fn omega() -> Outcome {
    let mut bad = Vec::new();
    for n in 4..=12 {
        let out = check_omega_identities(n);
        bad.extend(
            out.checkpoints
                .iter()
                .filter(|c| c.status != Status::ExactMatch)
                .map(|c| format!("n={n} {}", c.id)),
        );
    }
    (
        bad.is_empty(),
        format!("residues zero for n=4..12, failures {bad:?}"),
    )
}

fn mechanism() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 4..=8 {
        let start = Instant::now();
        let rep = eliminate_beta(&ReplayConfig::new(n)).unwrap();
        let secs = start.elapsed().as_secs_f64();
        let checks = rep.cross_checks.len() == 20
            && rep
                .cross_checks
                .iter()
                .all(|c| c.consistent && c.homomorphism_holds);
        let good = rep.verdict == Verdict::HLocallyConstant
            && !rep.final_resultant.is_zero()
            && rep.final_resultant.degree_in(var::A).unwrap_or(0) > 0
            && checks
            && secs < 300.0;
        ok &= good;
        lines.push(format!(
            "n={n}: {} terms, {secs:.1} s",
            rep.final_resultant.len()
        ));
    }
    (
        ok,
        format!(
            "nonzero resultant in (H, a), 20/20 cross-checks; {}",
            lines.join("; ")
        ),
    )
}

fn chen() -> Outcome {
    let mut r = rng(3);
    let cfg = DeltaConfig {
        restarts: 4,
        seed: 5,
        ..Default::default()
    };
    let mut worst = f64::INFINITY;
    for k in 0..1000 {
        let n = 4 + k % 5;
        let a = random_operator(&mut r, n);
        for rank in [2, 3] {
            let d = delta_invariant(&a, rank, &cfg).unwrap();
            worst = worst.min(chen_bound(n, rank, a.mean_curvature()).unwrap() - d.delta);
        }
    }
    (
        worst >= -1e-9,
        format!("smallest bound - delta over 2000 cases: {worst:e}"),
    )
}

fn ideal_equality() -> Outcome {
    let mut r = rng(4);
    let mut worst = 0f64;
    for k in 0..1000 {
        let n = 4 + k % 5;
        let (a, b, c): (f64, f64, f64) = (
            r.random_range(-5.0..5.0),
            r.random_range(-5.0..5.0),
            r.random_range(-5.0..5.0),
        );
        let mut spec = vec![a, b, c];
        spec.extend(std::iter::repeat_n(a + b + c, n - 3));
        let h = spec.iter().sum::<f64>() / n as f64;
        let mut sorted = spec.clone();
        sorted.sort_by(f64::total_cmp);
        let (inf, _) = combinatorial_inf(&sorted, 3);
        let nf = n as f64;
        let bound = nf * nf * (nf - 3.0) / (2.0 * (nf - 2.0)) * h * h;
        worst = worst.max((pair_sum(&spec) - inf - bound).abs() / bound.abs().max(1.0));
    }
    let cfg = DeltaConfig::default();
    let four = ideality_gap(
        &ShapeOperator::diagonal(&[1.0, 2.0, 3.0, 6.0]).unwrap(),
        3,
        &cfg,
    )
    .unwrap();
    let five = ideality_gap(
        &ShapeOperator::diagonal(&[1.0, 2.0, 3.0, 6.0, 6.0]).unwrap(),
        3,
        &cfg,
    )
    .unwrap();
    let ok = worst <= 1e-9
        && (four.delta.delta, four.bound) == (36.0, 36.0)
        && (five.delta.delta, five.bound) == (108.0, 108.0);
    (
        ok,
        format!(
            "worst relative gap {worst:e}; diag(1,2,3,6) {}/{}; diag(1,2,3,6,6) {}/{}",
            four.delta.delta, four.bound, five.delta.delta, five.bound
        ),
    )
}

fn optimizer() -> Outcome {
    let mut r = rng(11);
    let cfg = StiefelConfig {
        restarts: 32,
        seed: 3,
        ..Default::default()
    };
    let mut agree = 0;
    for k in 0..100 {
        let n = 4 + k % 5;
        let rank = 2 + k % 2;
        let a = random_operator(&mut r, n);
        let (comb, _) = combinatorial_inf(&a.eigenvalues(), rank);
        let best = minimize_tau(&a.symmetric(), rank, &cfg).unwrap();
        if (best.value - comb).abs() <= 1e-6 * comb.abs().max(1.0) {
            agree += 1;
        } else {
            println!(
                "  optimizer discrepancy: instance {k}, n = {n}, r = {rank}: {} vs {comb}",
                best.value
            );
        }
    }
    let mut worst = 0f64;
    for k in 0..100 {
        let n = 4 + k % 5;
        let rank = 2 + k % 2;
        let a = random_operator(&mut r, n).symmetric();
        let f = random_frame(n, rank, &mut r);
        let dir = random_frame(n, rank, &mut r);
        let eps = 1e-6;
        let fd = (tau_of_frame(&a, &(&f + &dir * eps)) - tau_of_frame(&a, &(&f - &dir * eps)))
            / (2.0 * eps);
        let an = euclidean_gradient(&a, &f).dot(&dir);
        worst = worst.max((fd - an).abs() / an.abs().max(1.0));
    }
    (
        agree == 100 && worst <= 1e-5,
        format!("{agree}/100 agree within 1e-6; gradient vs finite differences worst {worst:e}"),
    )
}

fn null2_catalog() -> Outcome {
    let mut ok = true;
    for n in 4..=8usize {
        for p in 1..n {
            for radius in [0.5, 1.0, 2.0, 4.0] {
                let a = catalog_shape_operator(&SurfaceSpec::SphericalCylinder { p, n, radius })
                    .unwrap();
                let rep = null2type_check(&a, true, 1e-8).unwrap();
                ok &= rep.status == Null2Status::Candidate
                    && rep.a == Some(p as f64 / (radius * radius));
            }
        }
        let s = catalog_shape_operator(&SurfaceSpec::RoundSphere { n, radius: 1.5 }).unwrap();
        ok &= null2type_check(&s, true, 1e-8).unwrap().status == Null2Status::RejectedUmbilical;
        let z = ShapeOperator::diagonal(&vec![0.0; n]).unwrap();
        ok &= null2type_check(&z, true, 1e-8).unwrap().status == Null2Status::RejectedMinimal;
    }
    (
        ok,
        "cylinders give a = p/r² exactly, spheres umbilical, zero operator minimal".into(),
    )
}

fn grids() -> Outcome {
    let err = |h: f64| {
        let grid = ImmersionGrid::sample(&Chart::Cylinder { n: 4, radius: 1.0 }, h, 2);
        let ev = shape_operator_from_grid(&grid).unwrap().0.eigenvalues();
        [0.0, 0.0, 0.0, 1.0]
            .iter()
            .zip(&ev)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    };
    let fine = err(1e-3);
    let errs: Vec<f64> = [1e-2, 5e-3, 2.5e-3].iter().map(|&h| err(h)).collect();
    let ratios: Vec<f64> = errs.windows(2).map(|w| w[0] / w[1]).collect();
    let hess = DMatrix::from_diagonal(&DVector::from_vec(vec![1.0, 2.0, 3.0, 6.0]));
    let grid = ImmersionGrid::sample(
        &Chart::QuadraticGraph {
            hessian: hess.clone(),
        },
        1e-3,
        2,
    );
    let graph = (shape_operator_from_grid(&grid).unwrap().0.matrix - hess).amax();
    let ok = fine <= 1e-4 && ratios.iter().all(|r| (3.5..=4.5).contains(r)) && graph <= 1e-4;
    (
        ok,
        format!("cylinder error {fine:e} at h=1e-3, ratios {ratios:.3?}, graph error {graph:e}"),
    )
}

fn random_in_x(r: &mut ChaCha8Rng, ring: &Ring, deg: u32) -> Polynomial {
    let mut p = Polynomial::zero(ring);
    for k in 0..=deg {
        for _ in 0..r.random_range(1..=3) {
            let e = vec![k, r.random_range(0..=2), r.random_range(0..=1)];
            let c = Rational::ratio(r.random_range(-5..=5), r.random_range(1..=3));
            p = &p + &Polynomial::monomial(ring, c, Monomial::from_exponents(e));
        }
    }
    if p.degree_in(0) != Some(deg) {
        p = &p
            + &Polynomial::monomial(
                ring,
                Rational::one(),
                Monomial::from_exponents(vec![deg, 0, 0]),
            );
    }
    p
}

fn kernel() -> Outcome {
    let ring = Ring::new(&["x", "y", "z"]).unwrap();
    let mut r = rng(17);
    let mut iff = 0;
    for i in 0..500 {
        let (f, g) = if i % 2 == 0 {
            let c = {
                let d = r.random_range(1..=2);
                random_in_x(&mut r, &ring, d)
            };
            let a = {
                let d = r.random_range(0..=2);
                random_in_x(&mut r, &ring, d)
            };
            let b = {
                let d = r.random_range(0..=2);
                random_in_x(&mut r, &ring, d)
            };
            (&a * &c, &b * &c)
        } else {
            let a = {
                let d = r.random_range(1..=3);
                random_in_x(&mut r, &ring, d)
            };
            let b = {
                let d = r.random_range(1..=3);
                random_in_x(&mut r, &ring, d)
            };
            (a, b)
        };
        let res = resultant_with(&f, &g, 0, DetMethod::Bareiss, Execution::Sequential).unwrap();
        let shares = poly_gcd(&f, &g).degree_in(0).unwrap_or(0) > 0;
        iff += usize::from(res.is_zero() == shares);
    }
    let mut dets = 0;
    let mut det_ok = 0;
    for df in 1..=7u32 {
        for dg in 1..=(8 - df) {
            let f = random_in_x(&mut r, &ring, df);
            let g = random_in_x(&mut r, &ring, dg);
            assert!(sylvester_matrix(&f, &g, 0).unwrap().len() <= 8);
            let a = resultant_with(&f, &g, 0, DetMethod::Bareiss, Execution::Sequential).unwrap();
            let b = resultant_with(&f, &g, 0, DetMethod::Cofactor, Execution::Sequential).unwrap();
            dets += 1;
            det_ok += usize::from(a == b);
        }
    }
    let cfg = ReplayConfig::new(5);
    let replay_same = replay_all(&cfg).unwrap().to_json_string()
        == replay_all(&cfg.with_execution(Execution::Sequential))
            .unwrap()
            .to_json_string();
    let cli = || {
        let mut out = Vec::new();
        let args = [
            "dnull",
            "delta",
            "--r",
            "3",
            "--seed",
            "42",
            "--matrix",
            "[[1,0.5,0,0],[0.5,-2,0.3,0],[0,0.3,4,1],[0,0,1,0.5]]",
        ];
        assert_eq!(dnull_cli::run(args, &mut out, &mut std::io::sink()), 0);
        out
    };
    let cli_same = cli() == cli();
    let ok = iff == 500 && det_ok == dets && replay_same && cli_same;
    (ok, format!("resultant iff gcd {iff}/500, Bareiss = cofactor {det_ok}/{dets}, byte-identical replay {replay_same}, CLI {cli_same}"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("master equations", master),
        ("first integrals", first_integrals),
        ("transversal eliminant", transversal),
        ("connection identities", omega),
        ("constant mean curvature mechanism", mechanism),
        ("Chen inequality", chen),
        ("ideal equality", ideal_equality),
        ("optimizer agreement", optimizer),
        ("null 2-type catalog", null2_catalog),
        ("grid pipeline", grids),
        ("kernel soundness", kernel),
    ];
    let mut failing = BTreeSet::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let (ok, detail) = f();
        writeln!(
            std::io::stdout().lock(),
            "criterion {}: {} {name}: {detail}",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        )
        .unwrap();
        if !ok {
            failing.insert(i + 1);
        }
    }
    assert_eq!(
        failing,
        BTreeSet::from([2]),
        "unexpected acceptance outcome"
    );
}
