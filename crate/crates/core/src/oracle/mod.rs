//! Brute-force verification layer.
//!
//! Everything here is rebuilt from [`build_g_state`] and raw projective
//! measurements on the five-qubit register; the protocol module's tables are
//! never consulted, so agreement between the two is evidence rather than
//! tautology.

mod region;

pub use region::{
    branch_probability_table, theorem1_case_grid, theorem2_case_grid, verify_theorem,
    verify_theorem_sampled, BranchProbability, Counterexample, PointClass, PointResult,
    RegionReport, Theorem, DEFAULT_GRID,
};

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::Serialize;

use crate::branch::{Branch, Flow};
use crate::correction::Correction;
use crate::qstate::{Gate2, Projection, StateError};
use crate::resource::{build_g_state, register, GParams, Secret};
use crate::tolerance;

/// Smallest branch-map scale treated as a reachable branch.
const MIN_SCALE: f64 = 1e-20;

/// Unnormalized one-qubit amplitudes left on the flow's target after the Bell
/// measurement and both Hadamard measurements; `probability()` is the joint
/// probability of the branch.
pub fn branch_projection(
    params: &GParams,
    secret: &Secret,
    flow: Flow,
    branch: Branch,
) -> Result<Projection, StateError> {
    let register = secret
        .state(register::SECRET)
        .tensor(&build_g_state(params))?;
    let shared = register.project(
        &[register::SECRET, register::ALICE_1],
        &branch.bell.vector(),
    )?;
    let [(q1, _), (q2, _)] = flow.measurements();
    shared
        .project(&[q1], &branch.first.vector())?
        .project(&[q2], &branch.second.vector())
}

/// The linear map `(α, β) ↦ √2 · (branch amplitudes)` of one branch.
///
/// Column `j` is the renormalized pre-correction state for the basis secret
/// `e_j`, scaled by `√(2 p_j)`; equivalently `√2` times its unnormalized
/// projection, which makes the map linear in the secret.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchMap {
    pub columns: [[Complex64; 2]; 2],
}

impl BranchMap {
    pub fn extract(params: &GParams, flow: Flow, branch: Branch) -> Result<Self, StateError> {
        let column = |secret: Secret| -> Result<[Complex64; 2], StateError> {
            let proj = branch_projection(params, &secret, flow, branch)?;
            let amps = proj.amplitudes();
            Ok([
                amps[0] * std::f64::consts::SQRT_2,
                amps[1] * std::f64::consts::SQRT_2,
            ])
        };
        Ok(Self {
            columns: [column(Secret::zero())?, column(Secret::one())?],
        })
    }

    pub fn from_matrix(k: &Gate2) -> Self {
        let m = k.entries();
        Self {
            columns: [[m[0][0], m[1][0]], [m[0][1], m[1][1]]],
        }
    }

    /// The map as a matrix `K` with `K e_j = columns[j]`.
    pub fn matrix(&self) -> Gate2 {
        let [c0, c1] = self.columns;
        Gate2::new([[c0[0], c1[0]], [c0[1], c1[1]]])
    }

    pub fn apply(&self, secret: &Secret) -> [Complex64; 2] {
        self.matrix().apply(secret.vector())
    }

    fn is_finite(&self) -> bool {
        self.columns
            .iter()
            .flatten()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveResult {
    /// Present iff `residual < 1e−9`.
    pub correction: Option<Correction>,
    /// Worst of the probe infidelity `max(1 − F)` and the proportionality defect;
    /// 1 for an unreachable branch.
    pub residual: f64,
    /// `‖K†K/s − I‖_F` with `s = tr(K†K)/2`, so independent of the map's scale.
    pub proportionality_defect: f64,
    /// `s = tr(K†K)/2`; zero for a branch that never occurs.
    pub scale: f64,
    /// Closest unitary inverse of the map (polar factor), available for any
    /// reachable branch even when no exact correction exists.
    pub best_effort: Option<Gate2>,
}

impl SolveResult {
    pub fn is_solvable(&self) -> bool {
        self.correction.is_some()
    }
}

/// Twenty fixed probe secrets `cos θ|0⟩ + e^{iφ} sin θ|1⟩`: both poles plus
/// `θ ∈ {π/8, π/4, 3π/8}` × six equally spaced `φ` (θ = π/4 is the equator).
pub fn probe_secrets() -> Vec<Secret> {
    use std::f64::consts::PI;
    let mut probes = vec![
        Secret::from_angles(0.0, 0.0),
        Secret::from_angles(PI / 2.0, 0.0),
    ];
    for theta in [PI / 8.0, PI / 4.0, 3.0 * PI / 8.0] {
        for k in 0..6 {
            probes.push(Secret::from_angles(theta, k as f64 * PI / 3.0));
        }
    }
    probes
}

/// Finds a secret-independent unitary `U` with `U K ∝ I` if one exists.
///
/// Such a `U` exists iff `K†K = sI` for some `s > 0`; it is then `(K/√s)†`,
/// computed here as the adjoint of the polar factor of `K`.
pub fn solve_correction(map: &BranchMap) -> SolveResult {
    let unreachable = |defect: f64, scale: f64| SolveResult {
        correction: None,
        residual: 1.0,
        proportionality_defect: defect,
        scale,
        best_effort: None,
    };
    if !map.is_finite() {
        return unreachable(f64::INFINITY, 0.0);
    }
    let k = map.matrix();
    let gram = k.adjoint() * k;
    let scale = (gram.entries()[0][0].re + gram.entries()[1][1].re) / 2.0;
    if scale <= MIN_SCALE {
        return unreachable(0.0, scale);
    }
    let defect = {
        let g = gram.entries();
        let diag = |v: Complex64| (v / scale - 1.0).norm_sqr();
        (diag(g[0][0])
            + diag(g[1][1])
            + (g[0][1] / scale).norm_sqr()
            + (g[1][0] / scale).norm_sqr())
        .sqrt()
    };

    let inverse = polar_factor(&k).adjoint();
    let infidelity = probe_secrets()
        .iter()
        .map(|s| {
            let out = inverse.apply(k.apply(s.vector()));
            let norm = (out[0].norm_sqr() + out[1].norm_sqr()).sqrt();
            let overlap = s.alpha().conj() * out[0] + s.beta().conj() * out[1];
            1.0 - (overlap.norm() / norm).powi(2)
        })
        .fold(0.0, f64::max)
        .max(0.0);
    let residual = infidelity.max(defect);

    let correction = if residual < tolerance::SOLVE {
        Correction::solved(inverse).ok()
    } else {
        None
    };
    SolveResult {
        residual: if correction.is_some() {
            residual
        } else {
            residual.max(tolerance::SOLVE)
        },
        correction,
        proportionality_defect: defect,
        scale,
        best_effort: Some(inverse),
    }
}

/// Unitary factor `W V†` of the SVD `K = W Σ V†`.
fn polar_factor(k: &Gate2) -> Gate2 {
    let e = k.entries();
    let m = Matrix2::new(e[0][0], e[0][1], e[1][0], e[1][1]);
    let svd = m.svd(true, true);
    let (w, v_t) = (svd.u.expect("requested U"), svd.v_t.expect("requested V^T"));
    let q = w * v_t;
    Gate2::new([[q[(0, 0)], q[(0, 1)]], [q[(1, 0)], q[(1, 1)]]])
}

/// Solves every branch of `flow` for `params`, in [`Branch::all`] order.
pub fn solve_flow(params: &GParams, flow: Flow) -> Result<Vec<(Branch, SolveResult)>, StateError> {
    Branch::all()
        .map(|b| Ok((b, solve_correction(&BranchMap::extract(params, flow, b)?))))
        .collect()
}
