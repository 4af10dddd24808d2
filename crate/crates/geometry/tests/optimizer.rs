mod common;

use dnull_geometry::delta::combinatorial_inf;
use dnull_geometry::stiefel::{minimize_tau, StiefelConfig};

use common::{random_operator, rng};

/// Agreement of the frame optimizer with the best principal subset. The
/// two are reported side by side; a disagreement is logged, and the test
/// only requires that the optimizer never claims a lower value than a
/// plane actually attains.
#[test]
fn optimizer_agrees_with_principal_subsets() {
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
        let (comb, subset) = combinatorial_inf(&a.eigenvalues(), rank);
        let best = minimize_tau(&a.symmetric(), rank, &cfg).unwrap();
        let diff = best.value - comb;
        if diff.abs() <= 1e-6 * comb.abs().max(1.0) {
            agree += 1;
        } else {
            println!(
                "instance {k}: n = {n}, r = {rank}, subset {subset:?} gives {comb}, optimizer {}",
                best.value
            );
        }
    }
    println!("optimizer agreement: {agree}/100");
    assert_eq!(agree, 100);
}
