//! Hand-derived states as printed, kept verbatim (including their misprints)
//! so that the simulator can be compared against them.

use num_complex::Complex64;
use serde::Serialize;

use crate::branch::{BellOutcome, Branch, Flow, HadamardBit};
use crate::oracle::branch_projection;
use crate::qstate::{PureState, StateError};
use crate::resource::{register, GParams, Secret};
use crate::tolerance;

/// The printed combined state of `(A2, B, C)` after Alice's Bell outcome.
pub fn printed_shared_state(
    params: &GParams,
    secret: &Secret,
    bell: BellOutcome,
) -> Result<PureState, StateError> {
    let r2 = std::f64::consts::SQRT_2;
    let (a, b, c, d) = (params.a(), params.b(), params.c(), params.d());
    let (al, be) = (secret.alpha(), secret.beta() * bell.sign());
    let mut amps = vec![Complex64::new(0.0, 0.0); 8];
    // (coefficient, index carrying α, index carrying ±β) for Φ; Ψ swaps them.
    for (coef, i_alpha, i_beta) in [
        ((a + d) / r2, 0b000, 0b111),
        ((a - d) / r2, 0b011, 0b100),
        ((b + c) / r2, 0b101, 0b010),
        ((b - c) / r2, 0b110, 0b001),
    ] {
        let (ia, ib) = if bell.is_phi() {
            (i_alpha, i_beta)
        } else {
            (i_beta, i_alpha)
        };
        amps[ia] += coef * al;
        amps[ib] += coef * be;
    }
    PureState::new(register::SHARED, amps)
}

/// The printed resultant on the correcting party's qubit, up to normalization.
/// Only revocation and reconstruction at Charlie are listed.
pub fn listed_resultant(
    params: &GParams,
    secret: &Secret,
    flow: Flow,
    branch: Branch,
) -> Option<[Complex64; 2]> {
    use HadamardBit::{Minus, Plus};
    let (a, b, c, d) = (params.a(), params.b(), params.c(), params.d());
    let (al, be) = (secret.alpha(), secret.beta());
    let pm = branch.bell.sign();
    let bits = (branch.first, branch.second);
    let v = match flow {
        Flow::Revocation if branch.bell.is_phi() => match bits {
            (Plus, Plus) => [a * al + pm * b * be, b * al + pm * a * be],
            (Plus, Minus) => [d * al + pm * c * be, -(c * al + pm * d * be)],
            (Minus, Plus) => [d * al - pm * c * be, c * al - pm * d * be],
            (Minus, Minus) => [a * al - pm * b * be, -(b * al - pm * a * be)],
        },
        Flow::Revocation => match bits {
            (Plus, Plus) => [b * al + pm * a * be, a * al + pm * b * be],
            (Plus, Minus) => [c * al + pm * d * be, -(d * al + pm * c * be)],
            (Minus, Plus) => [-(c * al - pm * d * be), -(d * al - pm * c * be)],
            (Minus, Minus) => [-(b * al - pm * b * be), -(a * al - pm * b * be)],
        },
        // The Ψ rows are printed identical to the Φ rows.
        Flow::ReconstructionAtCharlie => {
            let (l1, l2) = (a + b - c + d, a + b + c - d);
            match bits {
                (Plus, Plus) => [l1 * al + pm * l2 * be, l2 * al + pm * l1 * be],
                (Plus, Minus) => [
                    (a - b + c + d) * al + pm * (a - b - c - d) * be,
                    (-a + b + c + d) * al + pm * (-a + b - c - d) * be,
                ],
                (Minus, Plus) => [
                    (a - b + c + d) * al + pm * (-a + b + c + d) * be,
                    (a - b - c - d) * al + pm * (-a + b - c - d) * be,
                ],
                (Minus, Minus) => [l1 * al + pm * l2 * be, (-a - b - c + d) * al + pm * l1 * be],
            }
        }
        Flow::ReconstructionAtBob => return None,
    };
    Some(v)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub flow: Flow,
    pub branch: Branch,
    /// `|⟨printed|simulated⟩|²` after normalizing both.
    pub overlap: f64,
}

fn overlap(x: [Complex64; 2], y: &[Complex64]) -> f64 {
    let nx = x[0].norm_sqr() + x[1].norm_sqr();
    let ny: f64 = y.iter().map(Complex64::norm_sqr).sum();
    if nx <= tolerance::CONSTRUCTION * tolerance::CONSTRUCTION || ny <= 0.0 {
        return if nx == ny { 1.0 } else { 0.0 };
    }
    let inner = x[0].conj() * y[0] + x[1].conj() * y[1];
    inner.norm_sqr() / (nx * ny)
}

/// Branches whose printed resultant differs from the simulated one by more
/// than a global phase, for the two listed flows.
pub fn discrepancy_log(params: &GParams, secret: &Secret) -> Result<Vec<Discrepancy>, StateError> {
    let mut log = Vec::new();
    for flow in [Flow::Revocation, Flow::ReconstructionAtCharlie] {
        for branch in Branch::all() {
            let Some(printed) = listed_resultant(params, secret, flow, branch) else {
                continue;
            };
            let simulated = branch_projection(params, secret, flow, branch)?;
            let overlap = overlap(printed, simulated.amplitudes());
            if (1.0 - overlap).abs() > tolerance::DERIVED {
                log.push(Discrepancy {
                    flow,
                    branch,
                    overlap,
                });
            }
        }
    }
    Ok(log)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generic() -> (GParams, Secret) {
        let p = GParams::normalized(
            Complex64::new(0.3, -0.7),
            Complex64::new(-0.2, 0.4),
            Complex64::new(0.9, 0.1),
            Complex64::new(-0.5, -0.6),
        )
        .unwrap();
        (
            p,
            Secret::normalized(Complex64::new(0.6, 0.2), Complex64::new(-0.3, 0.7)).unwrap(),
        )
    }

    #[test]
    fn table_state_is_normalized() {
        let (p, s) = generic();
        for bell in BellOutcome::ALL {
            assert!((printed_shared_state(&p, &s, bell).unwrap().norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn generic_discrepancies_are_the_misprinted_rows() {
        use BellOutcome::*;
        use HadamardBit::*;
        let (p, s) = generic();
        let log = discrepancy_log(&p, &s).unwrap();
        let got: Vec<(Flow, Branch)> = log.iter().map(|d| (d.flow, d.branch)).collect();
        let mut expected = vec![
            (Flow::Revocation, Branch::new(PsiPlus, Minus, Minus)),
            (Flow::Revocation, Branch::new(PsiMinus, Minus, Minus)),
            (
                Flow::ReconstructionAtCharlie,
                Branch::new(PhiPlus, Minus, Minus),
            ),
            (
                Flow::ReconstructionAtCharlie,
                Branch::new(PhiMinus, Minus, Minus),
            ),
        ];
        for bell in [PsiPlus, PsiMinus] {
            for first in HadamardBit::ALL {
                for second in HadamardBit::ALL {
                    expected.push((
                        Flow::ReconstructionAtCharlie,
                        Branch::new(bell, first, second),
                    ));
                }
            }
        }
        expected.sort_by_key(|(f, b)| (Flow::ALL.iter().position(|x| x == f), *b));
        assert_eq!(got, expected);
    }
}
