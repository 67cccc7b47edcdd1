//! Serializable run and sweep reports.
//!
//! All reals are rounded to 12 significant digits before serialization so
//! that output is stable across platforms and runs.

use num_complex::Complex64;
use serde::Serialize;

use crate::branch::{BellOutcome, Flow, HadamardBit, Party};
use crate::correction::CorrectionSource;
use crate::oracle::{PointClass, RegionReport};
use crate::protocol::{reference, ProtocolError, Status, Transcript};
use crate::resource::{GParams, Secret};
use crate::tolerance;

pub const SCHEMA_VERSION: &str = "1.0.0";

/// Magnitudes below this are rounding noise and print as zero.
const FLUSH: f64 = 1e-14;

/// Rounds to 12 significant digits; `-0` and values below `1e−14` become `0`.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < FLUSH {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(c: Complex64) -> Self {
        Self {
            re: round12(c.re),
            im: round12(c.im),
        }
    }
}

impl std::fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ParamsValue {
    pub a: ComplexValue,
    pub b: ComplexValue,
    pub c: ComplexValue,
    pub d: ComplexValue,
}

impl From<&GParams> for ParamsValue {
    fn from(p: &GParams) -> Self {
        Self {
            a: p.a().into(),
            b: p.b().into(),
            c: p.c().into(),
            d: p.d().into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SecretValue {
    pub alpha: ComplexValue,
    pub beta: ComplexValue,
}

impl From<&Secret> for SecretValue {
    fn from(s: &Secret) -> Self {
        Self {
            alpha: s.alpha().into(),
            beta: s.beta().into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PauliValue {
    pub w_i: ComplexValue,
    pub w_x: ComplexValue,
    pub w_y: ComplexValue,
    pub w_z: ComplexValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BitRecord {
    pub sender: Party,
    pub qubit: String,
    pub bit: HadamardBit,
    pub cbit: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchRecord {
    pub bell: BellOutcome,
    pub bits: [BitRecord; 2],
    /// Joint probability of the Bell outcome and both bits.
    pub probability: f64,
    pub status: Status,
    pub correction_source: Option<CorrectionSource>,
    pub correction: Option<PauliValue>,
    pub fidelity: Option<f64>,
}

impl From<&Transcript> for BranchRecord {
    fn from(t: &Transcript) -> Self {
        let bit = |i: usize| {
            let h = &t.hadamard_bits[i];
            BitRecord {
                sender: h.sender,
                qubit: h.qubit.clone(),
                bit: h.bit,
                cbit: h.cbit,
            }
        };
        Self {
            bell: t.bell,
            bits: [bit(0), bit(1)],
            probability: round12(t.joint_probability()),
            status: t.status,
            correction_source: t.correction.map(|c| c.source()),
            correction: t.correction.map(|c| {
                let p = c.pauli();
                PauliValue {
                    w_i: p.w_i.into(),
                    w_x: p.w_x.into(),
                    w_y: p.w_y.into(),
                    w_z: p.w_z.into(),
                }
            }),
            fidelity: t.fidelity.map(round12),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub branches: usize,
    pub recovered: usize,
    pub correction_not_found: usize,
    pub unreachable: usize,
    /// Over reachable branches; `None` when there are none.
    pub min_fidelity: Option<f64>,
    pub mean_fidelity: Option<f64>,
    pub probability_total: f64,
    /// Every reachable branch recovered the secret to fidelity `1 − 1e−10`.
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscrepancyRecord {
    pub flow: Flow,
    pub bell: BellOutcome,
    pub bits: [HadamardBit; 2],
    pub overlap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: &'static str,
    pub params: ParamsValue,
    pub secret: SecretValue,
    pub flow: Flow,
    pub branches: Vec<BranchRecord>,
    pub summary: Summary,
    /// Branches where the printed resultant differs from the simulated one.
    pub discrepancies: Vec<DiscrepancyRecord>,
}

impl RunReport {
    pub fn new(
        params: &GParams,
        secret: &Secret,
        flow: Flow,
        transcripts: &[Transcript],
    ) -> Result<Self, ProtocolError> {
        let count = |s: Status| transcripts.iter().filter(|t| t.status == s).count();
        let fidelities: Vec<f64> = transcripts.iter().filter_map(|t| t.fidelity).collect();
        let min = fidelities.iter().copied().reduce(f64::min);
        let mean = (!fidelities.is_empty())
            .then(|| fidelities.iter().sum::<f64>() / fidelities.len() as f64);
        let recovered = count(Status::Recovered);
        let success = count(Status::CorrectionNotFound) == 0
            && count(Status::Unreachable) == 0
            && min.is_some_and(|m| m >= 1.0 - tolerance::DERIVED);
        let discrepancies = reference::discrepancy_log(params, secret)?
            .into_iter()
            .filter(|d| d.flow == flow)
            .map(|d| DiscrepancyRecord {
                flow: d.flow,
                bell: d.branch.bell,
                bits: d.branch.bits(),
                overlap: round12(d.overlap),
            })
            .collect();
        Ok(Self {
            schema_version: SCHEMA_VERSION,
            params: params.into(),
            secret: secret.into(),
            flow,
            branches: transcripts.iter().map(BranchRecord::from).collect(),
            summary: Summary {
                branches: transcripts.len(),
                recovered,
                correction_not_found: count(Status::CorrectionNotFound),
                unreachable: count(Status::Unreachable),
                min_fidelity: min.map(round12),
                mean_fidelity: mean.map(round12),
                probability_total: round12(
                    transcripts.iter().map(Transcript::joint_probability).sum(),
                ),
                success,
            },
            discrepancies,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointRecord {
    pub index: usize,
    pub params: ParamsValue,
    pub cases: Vec<u8>,
    pub predicate: bool,
    pub solvable: bool,
    pub class: PointClass,
    pub unsolvable_branches: usize,
    pub max_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema_version: &'static str,
    pub theorem: crate::oracle::Theorem,
    pub flow: Flow,
    pub region: crate::resource::Region,
    pub samples: usize,
    pub seed: u64,
    pub consistent: usize,
    pub predicate_only: usize,
    pub solvable_only: usize,
    pub admissible: usize,
    pub counterexamples: Vec<usize>,
    pub points: Vec<PointRecord>,
}

impl VerifyReport {
    pub fn new(report: &RegionReport, region: crate::resource::Region, seed: u64) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            theorem: report.theorem,
            flow: report.flow,
            region,
            samples: report.total,
            seed,
            consistent: report.consistent,
            predicate_only: report.predicate_only,
            solvable_only: report.solvable_only,
            admissible: report.admissible,
            counterexamples: report.counterexamples.iter().map(|c| c.index).collect(),
            points: report
                .points
                .iter()
                .map(|p| PointRecord {
                    index: p.index,
                    params: (&p.params).into(),
                    cases: p.cases.clone(),
                    predicate: p.predicate,
                    solvable: p.solvable,
                    class: p.class,
                    unsolvable_branches: p.unsolvable_branches.len(),
                    max_residual: round12(p.max_residual),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::run_protocol;

    #[test]
    fn rounding() {
        assert_eq!(round12(0.1 + 0.2), 0.3);
        assert_eq!(round12(-4.3e-17).to_bits(), 0.0f64.to_bits());
        assert_eq!(round12(1.234567890123456e-9), 1.23456789012e-9);
        assert_eq!(round12(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(round12(1.0 - 1e-15), 1.0);
    }

    #[test]
    fn complex_display() {
        assert_eq!(ComplexValue { re: 0.5, im: -0.25 }.to_string(), "0.5-0.25i");
        assert_eq!(ComplexValue { re: 0.0, im: 1.0 }.to_string(), "0+1i");
    }

    #[test]
    fn reference_point_report_summary() {
        let p = GParams::reference_point();
        let s = Secret::from_angles(0.6, 0.0);
        let ts = run_protocol(&p, &s, Flow::Revocation).unwrap();
        let r = RunReport::new(&p, &s, Flow::Revocation, &ts).unwrap();
        assert_eq!(r.branches.len(), 16);
        assert_eq!(r.summary.probability_total, 1.0);
        assert_eq!(r.summary.min_fidelity, Some(1.0));
        assert!(r.summary.success);
    }
}
