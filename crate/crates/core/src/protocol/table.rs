use num_complex::Complex64;

use super::ProtocolError;
use crate::branch::{BellOutcome, Branch, Flow, HadamardBit};
use crate::correction::Correction;
use crate::oracle::{solve_correction, BranchMap};
use crate::qstate::{Gate2, StateError};
use crate::resource::GParams;
use crate::tolerance;

use BellOutcome::{PhiMinus, PhiPlus, PsiPlus};
use HadamardBit::{Minus, Plus};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// The five documented closed-form corrections, unscaled and un-rephased.
///
/// `(Φ⁺, +, −)` uses the explicit matrix `√2 [[d, c], [−c, −d]]`, i.e.
/// `√2(dσz + icσy)`.
pub fn closed_form(params: &GParams, flow: Flow, branch: Branch) -> Option<Gate2> {
    let (a, b, cc, d) = (params.a(), params.b(), params.c(), params.d());
    let r2 = c(std::f64::consts::SQRT_2);
    let z = c(0.0);
    let key = (branch.bell, branch.first, branch.second);
    let w = match (flow, key) {
        (Flow::Revocation, (PhiPlus, Plus, Plus)) => [-a * r2, b * r2, z, z],
        (Flow::Revocation, (PhiPlus, Plus, Minus)) => {
            return Some(Gate2::new([[d * r2, cc * r2], [-cc * r2, -d * r2]]));
        }
        (Flow::Revocation, (PhiMinus, Plus, Minus)) => [-d * r2, -cc * r2, z, z],
        (Flow::Revocation, (PsiPlus, Plus, Plus)) => [-b * r2, a * r2, z, z],
        (Flow::ReconstructionAtCharlie, (PhiPlus, Plus, Plus)) => {
            let s = c(std::f64::consts::FRAC_1_SQRT_2);
            [-params.lambda1() * s, params.lambda2() * s, z, z]
        }
        _ => return None,
    };
    Some(Gate2::from_pauli(w))
}

/// True when `u` maps the branch onto a multiple of the identity.
fn corrects(u: &Gate2, map: &BranchMap) -> bool {
    let product = *u * map.matrix();
    let e = product.entries();
    let s = (e[0][0] + e[1][1]) / 2.0;
    s.norm() > tolerance::CONSTRUCTION
        && product.max_abs_diff(&Gate2::IDENTITY.scale(s)) <= tolerance::SOLVE * s.norm()
}

/// Correction for one branch: the closed form where documented and valid for
/// `params`, the oracle solution otherwise.
pub fn correction_table(
    params: &GParams,
    flow: Flow,
    branch: Branch,
) -> Result<Correction, ProtocolError> {
    let map = BranchMap::extract(params, flow, branch)?;
    if let Some(u) = closed_form(params, flow, branch) {
        if let Ok(corr) = Correction::closed_form(u) {
            if corrects(corr.matrix(), &map) {
                return Ok(corr);
            }
        }
    }
    let solved = solve_correction(&map);
    solved.correction.ok_or(ProtocolError::CorrectionNotFound {
        flow,
        branch,
        residual: solved.residual,
    })
}

impl From<StateError> for ProtocolError {
    fn from(e: StateError) -> Self {
        ProtocolError::State(e)
    }
}
