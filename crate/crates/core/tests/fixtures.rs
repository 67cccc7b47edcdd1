//! Values frozen from an independent numpy expansion of the same register.

mod common;

use common::c;
use qss_core::branch::{BellOutcome, Flow};
use qss_core::oracle::branch_probability_table;
use qss_core::protocol::{collusion_probe, reference, share, BellChoice};
use qss_core::resource::{register, GParams, Secret};

#[test]
fn bob_charlie_marginal_at_reference_point() {
    let p = GParams::reference_point();
    let s = Secret::zero();
    let expected = |r: usize, col: usize| match (r, col) {
        (r, col) if r == col => c(0.25, 0.0),
        (0, 3) | (2, 1) => c(0.0, 0.25),
        (3, 0) | (1, 2) => c(0.0, -0.25),
        _ => c(0.0, 0.0),
    };
    let printed = reference::printed_shared_state(&p, &s, BellOutcome::PhiPlus).unwrap();
    let simulated = share(&s, &p, BellChoice::One(BellOutcome::PhiPlus))
        .unwrap()
        .remove(0)
        .state;
    for state in [printed, simulated] {
        let rho = state
            .partial_trace(&[register::BOB, register::CHARLIE])
            .unwrap();
        for r in 0..4 {
            for col in 0..4 {
                assert!(
                    (rho.entry(r, col) - expected(r, col)).norm() < 1e-12,
                    "({r},{col})"
                );
            }
        }
    }
}

#[test]
fn collusion_distance_for_basis_secrets() {
    let rows = collusion_probe(
        &GParams::reference_point(),
        (&Secret::zero(), &Secret::one()),
    )
    .unwrap();
    let got: Vec<(BellOutcome, f64)> = rows.iter().map(|r| (r.bell, r.trace_distance)).collect();
    for (bell, d) in got {
        assert!((d - 1.0).abs() < 1e-10, "{bell}: {d}");
    }
}

#[test]
fn a_only_branch_probabilities() {
    let p = GParams::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let s = Secret::new(c(h, 0.0), c(h, 0.0)).unwrap();
    let probs: Vec<f64> = branch_probability_table(&p, &s, Flow::Revocation)
        .unwrap()
        .iter()
        .map(|r| r.probability)
        .collect();
    let pattern = [0.125, 0.0, 0.0, 0.125];
    for (i, prob) in probs.iter().enumerate() {
        assert!((prob - pattern[i % 4]).abs() < 1e-12, "branch {i}: {prob}");
    }
}
