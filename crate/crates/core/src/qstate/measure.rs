use num_complex::Complex64;
use serde::Serialize;

use super::{BellOutcome, HadamardBit, PureState, StateError, ZERO_PROBABILITY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasurementBasis {
    Bell,
    Hadamard,
    Computational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Bell(BellOutcome),
    Hadamard(HadamardBit),
    Computational(u8),
}

/// One branch of a projective measurement.
///
/// Measured qubits are removed from `post_state`. A branch of zero probability
/// has no post-measurement state.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasurementRecord {
    pub basis: MeasurementBasis,
    pub outcome: Outcome,
    pub probability: f64,
    pub post_state: Option<PureState>,
}

/// Unnormalized amplitudes left on the surviving qubits after contracting
/// some qubits against a fixed ket. Its squared norm is the branch probability.
#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    labels: Vec<String>,
    amplitudes: Vec<Complex64>,
}

impl Projection {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn probability(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// Renormalized state, or `None` for an (effectively) impossible branch.
    pub fn normalized(&self) -> Option<PureState> {
        if self.probability() <= ZERO_PROBABILITY {
            return None;
        }
        PureState::from_unnormalized(self.labels.clone(), self.amplitudes.clone()).ok()
    }

    /// Projects further; positions refer to this projection's own labels.
    pub fn project(&self, qubits: &[&str], ket: &[Complex64]) -> Result<Projection, StateError> {
        let carrier = PureState::from_parts(self.labels.clone(), self.amplitudes.clone())?;
        carrier.project(qubits, ket)
    }
}

impl PureState {
    /// Contracts `qubits` (in the given order, big-endian) against `ket` and
    /// discards them: `out[r] = Σ_j conj(ket[j]) · ψ[r ⊕ j]`.
    pub fn project(&self, qubits: &[&str], ket: &[Complex64]) -> Result<Projection, StateError> {
        let positions = qubits
            .iter()
            .map(|q| self.position(q))
            .collect::<Result<Vec<_>, _>>()?;
        for (k, p) in positions.iter().enumerate() {
            if positions[..k].contains(p) {
                return Err(StateError::SameQubit(qubits[k].to_owned()));
            }
        }
        let expected = 1usize << positions.len();
        if ket.len() != expected {
            return Err(StateError::LengthMismatch {
                expected,
                actual: ket.len(),
            });
        }
        let kept: Vec<usize> = (0..self.num_qubits())
            .filter(|p| !positions.contains(p))
            .collect();
        let mut out = vec![Complex64::new(0.0, 0.0); 1 << kept.len()];
        for (index, amp) in self.amplitudes().iter().enumerate() {
            let gather = |ps: &[usize]| {
                ps.iter().fold(0usize, |acc, &p| {
                    (acc << 1) | usize::from(index & self.bit(p) != 0)
                })
            };
            out[gather(&kept)] += ket[gather(&positions)].conj() * amp;
        }
        Ok(Projection {
            labels: kept.iter().map(|&p| self.labels()[p].clone()).collect(),
            amplitudes: out,
        })
    }

    /// Bell-basis measurement of `(q1, q2)`, branches in the order Φ⁺, Φ⁻, Ψ⁺, Ψ⁻.
    pub fn measure_bell(&self, q1: &str, q2: &str) -> Result<Vec<MeasurementRecord>, StateError> {
        if q1 == q2 {
            return Err(StateError::SameQubit(q1.to_owned()));
        }
        BellOutcome::ALL
            .iter()
            .map(|&b| {
                let proj = self.project(&[q1, q2], &b.vector())?;
                Ok(record(MeasurementBasis::Bell, Outcome::Bell(b), &proj))
            })
            .collect()
    }

    /// Hadamard-basis measurement of `q`, branches in the order `+`, `−`.
    pub fn measure_hadamard(&self, q: &str) -> Result<Vec<MeasurementRecord>, StateError> {
        HadamardBit::ALL
            .iter()
            .map(|&h| {
                let proj = self.project(&[q], &h.vector())?;
                Ok(record(
                    MeasurementBasis::Hadamard,
                    Outcome::Hadamard(h),
                    &proj,
                ))
            })
            .collect()
    }

    pub fn measure_computational(&self, q: &str) -> Result<Vec<MeasurementRecord>, StateError> {
        let zero = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        [(0u8, [one, zero]), (1u8, [zero, one])]
            .iter()
            .map(|(bit, ket)| {
                let proj = self.project(&[q], ket)?;
                Ok(record(
                    MeasurementBasis::Computational,
                    Outcome::Computational(*bit),
                    &proj,
                ))
            })
            .collect()
    }
}

fn record(basis: MeasurementBasis, outcome: Outcome, proj: &Projection) -> MeasurementRecord {
    MeasurementRecord {
        basis,
        outcome,
        probability: proj.probability().clamp(0.0, 1.0),
        post_state: proj.normalized(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn bell_measurement_of_zero_zero() {
        let state = PureState::basis(["x", "y"], 0).unwrap();
        let records = state.measure_bell("x", "y").unwrap();
        let probs: Vec<f64> = records.iter().map(|r| r.probability).collect();
        for (p, expected) in probs.iter().zip([0.5, 0.5, 0.0, 0.0]) {
            assert!((p - expected).abs() < 1e-15);
        }
        let post = records[0].post_state.as_ref().unwrap();
        assert_eq!(post.num_qubits(), 0);
        assert!(records[2].post_state.is_none());
    }

    #[test]
    fn bell_measurement_rejects_same_qubit() {
        let state = PureState::basis(["x", "y"], 0).unwrap();
        assert_eq!(
            state.measure_bell("x", "x"),
            Err(StateError::SameQubit("x".into()))
        );
    }

    #[test]
    fn hadamard_measurement() {
        let zero = PureState::basis(["q"], 0).unwrap();
        let r = zero.measure_hadamard("q").unwrap();
        assert!((r[0].probability - 0.5).abs() < 1e-15);
        assert!((r[1].probability - 0.5).abs() < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = PureState::qubit("q", c(h), c(h)).unwrap();
        let r = plus.measure_hadamard("q").unwrap();
        assert!((r[0].probability - 1.0).abs() < 1e-15);
        assert!(r[1].probability < 1e-15);
        assert!(matches!(
            zero.measure_hadamard("p"),
            Err(StateError::UnknownLabel(_))
        ));
    }

    #[test]
    fn post_state_keeps_survivors_in_register_order() {
        // |1⟩_a |0⟩_b |1⟩_c, measure b.
        let state = PureState::basis(["a", "b", "c"], 0b101).unwrap();
        let r = state.measure_computational("b").unwrap();
        assert_eq!(r[0].probability, 1.0);
        let post = r[0].post_state.as_ref().unwrap();
        assert_eq!(post.labels(), ["a", "c"]);
        assert_eq!(post.amplitude(0b11), c(1.0));
    }

    #[test]
    fn projection_order_follows_argument_order() {
        // |01⟩ over (x, y) projected with qubits listed as (y, x) onto |10⟩.
        let state = PureState::basis(["x", "y"], 0b01).unwrap();
        let ket = [c(0.0), c(0.0), c(1.0), c(0.0)];
        let proj = state.project(&["y", "x"], &ket).unwrap();
        assert!((proj.probability() - 1.0).abs() < 1e-15);
    }
}
