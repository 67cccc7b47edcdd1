use std::collections::HashSet;

use num_complex::Complex64;
use serde::Serialize;

use super::{Gate2, StateError, MAX_QUBITS};
use crate::tolerance;

/// Normalized pure state over a labelled register.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PureState {
    labels: Vec<String>,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Builds a state, requiring `Σ|amp|² = 1` within the construction tolerance.
    pub fn new<L: Into<String>>(
        labels: impl IntoIterator<Item = L>,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self, StateError> {
        let state = Self::from_parts(labels.into_iter().map(Into::into).collect(), amplitudes)?;
        let norm_sqr = state.norm_sqr();
        if (norm_sqr - 1.0).abs() > tolerance::CONSTRUCTION {
            return Err(StateError::NotNormalized { norm_sqr });
        }
        Ok(state)
    }

    /// Builds a state from an arbitrary nonzero vector by rescaling it.
    pub fn from_unnormalized<L: Into<String>>(
        labels: impl IntoIterator<Item = L>,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self, StateError> {
        let mut state = Self::from_parts(labels.into_iter().map(Into::into).collect(), amplitudes)?;
        let norm = state.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(StateError::ZeroVector);
        }
        state.amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(state)
    }

    /// `α|0⟩ + β|1⟩` on a single labelled qubit.
    pub fn qubit(
        label: impl Into<String>,
        alpha: Complex64,
        beta: Complex64,
    ) -> Result<Self, StateError> {
        Self::new([label.into()], vec![alpha, beta])
    }

    /// Computational basis state `|index⟩`.
    pub fn basis<L: Into<String>>(
        labels: impl IntoIterator<Item = L>,
        index: usize,
    ) -> Result<Self, StateError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let dim = 1usize << labels.len().min(usize::BITS as usize - 1);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        if index >= dim {
            return Err(StateError::LengthMismatch {
                expected: dim,
                actual: index + 1,
            });
        }
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self::new(labels, amplitudes)
    }

    pub(crate) fn from_parts(
        labels: Vec<String>,
        amplitudes: Vec<Complex64>,
    ) -> Result<Self, StateError> {
        if labels.len() > MAX_QUBITS {
            return Err(StateError::TooManyQubits(labels.len()));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(StateError::DuplicateLabel(label.clone()));
            }
        }
        let expected = 1usize << labels.len();
        if amplitudes.len() != expected {
            return Err(StateError::LengthMismatch {
                expected,
                actual: amplitudes.len(),
            });
        }
        if amplitudes
            .iter()
            .any(|a| !a.re.is_finite() || !a.im.is_finite())
        {
            return Err(StateError::NonFinite);
        }
        Ok(Self { labels, amplitudes })
    }

    pub fn num_qubits(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// Register position of `label`.
    pub fn position(&self, label: &str) -> Result<usize, StateError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| StateError::UnknownLabel(label.to_owned()))
    }

    /// Bit mask selecting `position` inside a basis index.
    pub(crate) fn bit(&self, position: usize) -> usize {
        1 << (self.labels.len() - 1 - position)
    }

    /// Kronecker product; the result's labels are `self ++ other`.
    pub fn tensor(&self, other: &PureState) -> Result<PureState, StateError> {
        if let Some(shared) = self.labels.iter().find(|l| other.labels.contains(l)) {
            return Err(StateError::LabelCollision(shared.clone()));
        }
        let labels: Vec<String> = self.labels.iter().chain(&other.labels).cloned().collect();
        if labels.len() > MAX_QUBITS {
            return Err(StateError::TooManyQubits(labels.len()));
        }
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|l| other.amplitudes.iter().map(move |r| l * r))
            .collect();
        Ok(PureState { labels, amplitudes })
    }

    /// Applies a single-qubit unitary to the qubit named `label`.
    pub fn apply_gate(&self, gate: &Gate2, label: &str) -> Result<PureState, StateError> {
        let defect = gate.unitarity_defect();
        if defect > tolerance::CONSTRUCTION {
            return Err(StateError::NonUnitary { defect });
        }
        let mask = self.bit(self.position(label)?);
        let m = gate.entries();
        let mut out = self.amplitudes.clone();
        for i0 in (0..self.amplitudes.len()).filter(|i| i & mask == 0) {
            let i1 = i0 | mask;
            let (x0, x1) = (self.amplitudes[i0], self.amplitudes[i1]);
            out[i0] = m[0][0] * x0 + m[0][1] * x1;
            out[i1] = m[1][0] * x0 + m[1][1] * x1;
        }
        Ok(PureState {
            labels: self.labels.clone(),
            amplitudes: out,
        })
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &PureState) -> Result<Complex64, StateError> {
        if self.num_qubits() != other.num_qubits() {
            return Err(StateError::ShapeMismatch {
                left: self.num_qubits(),
                right: other.num_qubits(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(x, y)| x.conj() * y)
            .sum())
    }

    /// `|⟨self|other⟩|²`, insensitive to global phase and to qubit names.
    pub fn fidelity(&self, other: &PureState) -> Result<f64, StateError> {
        Ok(self.inner(other)?.norm_sqr().clamp(0.0, 1.0))
    }

    /// Same amplitudes under a new set of labels.
    pub fn relabel<L: Into<String>>(
        &self,
        labels: impl IntoIterator<Item = L>,
    ) -> Result<PureState, StateError> {
        Self::from_parts(
            labels.into_iter().map(Into::into).collect(),
            self.amplitudes.clone(),
        )
    }

    /// Multiplies every amplitude by `e^{iθ}`.
    pub fn with_global_phase(&self, theta: f64) -> PureState {
        let phase = Complex64::from_polar(1.0, theta);
        PureState {
            labels: self.labels.clone(),
            amplitudes: self.amplitudes.iter().map(|a| a * phase).collect(),
        }
    }
}
