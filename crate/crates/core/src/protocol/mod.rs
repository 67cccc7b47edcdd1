//! The three-party protocol: sharing by Alice's Bell measurement, then
//! revocation at Alice or reconstruction at Charlie or Bob.
//!
//! Every measurement is enumerated rather than sampled, so a run yields one
//! [`Transcript`] per branch. [`sample_run`] picks a single branch by its Born
//! probability.

mod collusion;
pub mod reference;
mod table;

pub use collusion::{collusion_probe, CollusionDistance};
pub use table::{closed_form, correction_table};

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::branch::{BellOutcome, Branch, Flow, HadamardBit, Party};
use crate::correction::Correction;
use crate::oracle::{solve_correction, BranchMap};
use crate::qstate::{PureState, StateError};
use crate::resource::{build_g_state, register, GParams, Secret};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProtocolError {
    #[error(transparent)]
    State(StateError),
    #[error("no secret-independent correction for {flow} branch {branch} (residual {residual:e})")]
    CorrectionNotFound {
        flow: Flow,
        branch: Branch,
        residual: f64,
    },
    #[error("{0:?} holds no share to reconstruct at")]
    NotAShareholder(Party),
    #[error("shared state was prepared for Bell outcome {expected}, branch asks for {actual}")]
    BellMismatch {
        expected: BellOutcome,
        actual: BellOutcome,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BellChoice {
    One(BellOutcome),
    Enumerate,
}

/// State after the sharing phase for one Bell outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Shared {
    pub params: GParams,
    pub secret: Secret,
    pub bell: BellOutcome,
    pub bell_probability: f64,
    /// Normalized state of `(A2, B, C)`.
    pub state: PureState,
}

/// Builds `|ψ⟩_S ⊗ |G⟩` and Bell-measures `(S, A1)`.
pub fn share(
    secret: &Secret,
    params: &GParams,
    choice: BellChoice,
) -> Result<Vec<Shared>, ProtocolError> {
    let register = secret
        .state(register::SECRET)
        .tensor(&build_g_state(params))?;
    let outcomes = match choice {
        BellChoice::One(b) => vec![b],
        BellChoice::Enumerate => BellOutcome::ALL.to_vec(),
    };
    outcomes
        .into_iter()
        .map(|bell| {
            let proj = register.project(&[register::SECRET, register::ALICE_1], &bell.vector())?;
            let state = proj.normalized().ok_or(StateError::ZeroVector)?;
            Ok(Shared {
                params: *params,
                secret: *secret,
                bell,
                bell_probability: proj.probability(),
                state,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HadamardRecord {
    pub sender: Party,
    pub qubit: String,
    pub bit: HadamardBit,
    /// Classical bit as sent: `+ → 0`, `− → 1`.
    pub cbit: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Recovered,
    /// No exact correction exists; the closest unitary was applied instead.
    CorrectionNotFound,
    /// The branch has zero probability.
    Unreachable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Transcript {
    pub params: GParams,
    pub secret: Secret,
    pub bell: BellOutcome,
    pub bell_probability: f64,
    pub shared_state: PureState,
    pub flow: Flow,
    pub hadamard_bits: [HadamardRecord; 2],
    /// Probability of the two Hadamard outcomes given the Bell outcome.
    pub branch_probability: f64,
    pub pre_correction_state: Option<PureState>,
    pub correction: Option<Correction>,
    pub status: Status,
    pub recovered_state: Option<PureState>,
    /// `|⟨secret|recovered⟩|²`; for a flagged branch, what the best-effort
    /// unitary achieves.
    pub fidelity: Option<f64>,
}

impl Transcript {
    pub fn branch(&self) -> Branch {
        Branch::new(
            self.bell,
            self.hadamard_bits[0].bit,
            self.hadamard_bits[1].bit,
        )
    }

    pub fn joint_probability(&self) -> f64 {
        self.bell_probability * self.branch_probability
    }
}

/// Completes one branch of `flow` from a shared state.
pub fn run_branch(
    shared: &Shared,
    flow: Flow,
    branch: Branch,
) -> Result<Transcript, ProtocolError> {
    if branch.bell != shared.bell {
        return Err(ProtocolError::BellMismatch {
            expected: shared.bell,
            actual: branch.bell,
        });
    }
    let [(q1, p1), (q2, p2)] = flow.measurements();
    let record = |qubit: &str, sender: Party, bit: HadamardBit| HadamardRecord {
        sender,
        qubit: qubit.to_string(),
        bit,
        cbit: bit.encode(),
    };
    let proj = shared
        .state
        .project(&[q1], &branch.first.vector())?
        .project(&[q2], &branch.second.vector())?;
    let pre = proj.normalized();

    let (status, correction, applied) = match &pre {
        None => (Status::Unreachable, None, None),
        Some(_) => match correction_table(&shared.params, flow, branch) {
            Ok(c) => (Status::Recovered, Some(c), Some(*c.matrix())),
            Err(ProtocolError::CorrectionNotFound { .. }) => {
                let fallback = solve_correction(&BranchMap::extract(&shared.params, flow, branch)?);
                (Status::CorrectionNotFound, None, fallback.best_effort)
            }
            Err(e) => return Err(e),
        },
    };
    let recovered = match (&pre, applied) {
        (Some(state), Some(u)) => Some(state.apply_gate(&u, flow.target())?),
        _ => None,
    };
    let fidelity = match &recovered {
        Some(r) => Some(shared.secret.state(flow.target()).fidelity(r)?),
        None => None,
    };
    Ok(Transcript {
        params: shared.params,
        secret: shared.secret,
        bell: shared.bell,
        bell_probability: shared.bell_probability,
        shared_state: shared.state.clone(),
        flow,
        hadamard_bits: [record(q1, p1, branch.first), record(q2, p2, branch.second)],
        branch_probability: proj.probability(),
        pre_correction_state: pre,
        correction,
        status,
        recovered_state: recovered,
        fidelity,
    })
}

fn complete(shared: &Shared, flow: Flow) -> Result<Vec<Transcript>, ProtocolError> {
    HadamardBit::ALL
        .into_iter()
        .flat_map(|first| {
            HadamardBit::ALL
                .into_iter()
                .map(move |second| (first, second))
        })
        .map(|(first, second)| run_branch(shared, flow, Branch::new(shared.bell, first, second)))
        .collect()
}

/// Bob then Charlie measure in the Hadamard basis; Alice corrects. Returns the
/// four outcomes in `(+,+), (+,−), (−,+), (−,−)` order.
pub fn revoke(shared: &Shared) -> Result<Vec<Transcript>, ProtocolError> {
    complete(shared, Flow::Revocation)
}

/// Alice and the other shareholder measure; `at` corrects.
pub fn reconstruct(shared: &Shared, at: Party) -> Result<Vec<Transcript>, ProtocolError> {
    let flow = match at {
        Party::Charlie => Flow::ReconstructionAtCharlie,
        Party::Bob => Flow::ReconstructionAtBob,
        Party::Alice => return Err(ProtocolError::NotAShareholder(at)),
    };
    complete(shared, flow)
}

/// All sixteen branches of `flow`, in [`Branch::all`] order.
pub fn run_protocol(
    params: &GParams,
    secret: &Secret,
    flow: Flow,
) -> Result<Vec<Transcript>, ProtocolError> {
    let mut out = Vec::with_capacity(16);
    for shared in share(secret, params, BellChoice::Enumerate)? {
        out.extend(complete(&shared, flow)?);
    }
    Ok(out)
}

/// One branch drawn by its joint probability.
pub fn sample_run(
    params: &GParams,
    secret: &Secret,
    flow: Flow,
    seed: u64,
) -> Result<Transcript, ProtocolError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<f64> = Branch::all()
        .map(|b| crate::oracle::branch_projection(params, secret, flow, b).map(|p| p.probability()))
        .collect::<Result<_, _>>()?;
    let dist = WeightedIndex::new(&weights).map_err(|_| StateError::ZeroVector)?;
    let branch = Branch::all()
        .nth(dist.sample(&mut rng))
        .expect("index within sixteen branches");
    let shared = share(secret, params, BellChoice::One(branch.bell))?.remove(0);
    run_branch(&shared, flow, branch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn reference_point_round_trip_all_flows() {
        let p = GParams::reference_point();
        let s = Secret::from_angles(0.9, -0.4);
        for flow in Flow::ALL {
            let ts = run_protocol(&p, &s, flow).unwrap();
            assert_eq!(ts.len(), 16);
            let total: f64 = ts.iter().map(Transcript::joint_probability).sum();
            assert!((total - 1.0).abs() < 1e-10);
            for t in &ts {
                assert_eq!(t.status, Status::Recovered, "{flow} {}", t.branch());
                assert!((t.fidelity.unwrap() - 1.0).abs() < 1e-10);
                assert!((t.bell_probability - 0.25).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn shared_state_matches_printed_table() {
        let p = GParams::reference_point();
        let s = Secret::from_angles(0.3, 2.0);
        for sh in share(&s, &p, BellChoice::Enumerate).unwrap() {
            let printed = reference::printed_shared_state(&p, &s, sh.bell).unwrap();
            assert!(
                (sh.state.fidelity(&printed).unwrap() - 1.0).abs() < 1e-12,
                "{}",
                sh.bell
            );
        }
    }

    #[test]
    fn transcript_records_senders_and_bits() {
        let p = GParams::reference_point();
        let sh = share(&Secret::zero(), &p, BellChoice::One(BellOutcome::PsiMinus))
            .unwrap()
            .remove(0);
        let ts = reconstruct(&sh, Party::Bob).unwrap();
        assert_eq!(ts.len(), 4);
        assert_eq!(ts[1].hadamard_bits[0].sender, Party::Alice);
        assert_eq!(ts[1].hadamard_bits[1].sender, Party::Charlie);
        assert_eq!(
            (ts[1].hadamard_bits[0].cbit, ts[1].hadamard_bits[1].cbit),
            (0, 1)
        );
        assert_eq!(
            reconstruct(&sh, Party::Alice),
            Err(ProtocolError::NotAShareholder(Party::Alice))
        );
        let other = Branch::new(BellOutcome::PhiPlus, HadamardBit::Plus, HadamardBit::Plus);
        assert!(matches!(
            run_branch(&sh, Flow::Revocation, other),
            Err(ProtocolError::BellMismatch { .. })
        ));
    }

    #[test]
    fn inadmissible_params_are_flagged() {
        let one = Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.0, 0.0);
        let p = GParams::new(one, z, z, z).unwrap();
        let ts = run_protocol(&p, &Secret::from_angles(0.5, 0.5), Flow::Revocation).unwrap();
        assert!(ts.iter().any(|t| t.status != Status::Recovered));
        for t in ts.iter().filter(|t| t.status == Status::CorrectionNotFound) {
            assert!(t.correction.is_none());
            assert!(t.fidelity.unwrap() <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn sampled_run_is_deterministic() {
        let p = GParams::reference_point();
        let s = Secret::from_angles(1.0, 0.2);
        let a = sample_run(&p, &s, Flow::ReconstructionAtCharlie, 5).unwrap();
        let b = sample_run(&p, &s, Flow::ReconstructionAtCharlie, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.status, Status::Recovered);
    }
}
