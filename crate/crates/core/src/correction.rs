//! Branch correction unitaries and their Pauli decomposition.

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::qstate::Gate2;
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorrectionSource {
    /// One of the five hand-derived closed forms.
    AppendixClosedForm,
    /// Solved from the simulated branch map.
    OracleSolved,
}

/// `w_I·I + w_x·σx + w_y·σy + w_z·σz`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PauliDecomposition {
    pub w_i: Complex64,
    pub w_x: Complex64,
    pub w_y: Complex64,
    pub w_z: Complex64,
}

impl PauliDecomposition {
    pub fn of(gate: &Gate2) -> Self {
        let [w_i, w_x, w_y, w_z] = gate.pauli_coefficients();
        Self { w_i, w_x, w_y, w_z }
    }

    pub fn as_array(&self) -> [Complex64; 4] {
        [self.w_i, self.w_x, self.w_y, self.w_z]
    }

    pub fn to_gate(&self) -> Gate2 {
        Gate2::from_pauli(self.as_array())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("correction matrix is not unitary (defect {defect:e})")]
pub struct NotUnitary {
    pub defect: f64,
}

/// A unitary correction, phase-fixed so that equal corrections compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Correction {
    matrix: Gate2,
    pauli: PauliDecomposition,
    source: CorrectionSource,
}

impl Correction {
    /// Closed forms are rephased to `det U = −1`.
    pub fn closed_form(matrix: Gate2) -> Result<Self, NotUnitary> {
        let det = matrix.det();
        let phase = Complex64::from_polar(1.0, (std::f64::consts::PI - det.arg()) / 2.0);
        Self::build(matrix.scale(phase), CorrectionSource::AppendixClosedForm)
    }

    /// Solved corrections are rephased so that `w_I` is real and non-positive;
    /// when `w_I` vanishes the first nonzero of `w_x, w_y, w_z` is made real positive.
    pub fn solved(matrix: Gate2) -> Result<Self, NotUnitary> {
        let w = matrix.pauli_coefficients();
        let phase = match w.iter().position(|c| c.norm() > tolerance::CONSTRUCTION) {
            Some(0) => -w[0].conj() / w[0].norm(),
            Some(k) => w[k].conj() / w[k].norm(),
            None => Complex64::new(1.0, 0.0),
        };
        Self::build(matrix.scale(phase), CorrectionSource::OracleSolved)
    }

    fn build(matrix: Gate2, source: CorrectionSource) -> Result<Self, NotUnitary> {
        let defect = matrix.unitarity_defect();
        if defect > tolerance::CONSTRUCTION {
            return Err(NotUnitary { defect });
        }
        Ok(Self {
            matrix,
            pauli: PauliDecomposition::of(&matrix),
            source,
        })
    }

    pub fn matrix(&self) -> &Gate2 {
        &self.matrix
    }

    pub fn pauli(&self) -> &PauliDecomposition {
        &self.pauli
    }

    pub fn source(&self) -> CorrectionSource {
        self.source
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_rephases_to_negative_determinant() {
        let c = Correction::closed_form(Gate2::IDENTITY).unwrap();
        assert!((c.matrix().det() + 1.0).norm() < 1e-15);
        assert_eq!(c.source(), CorrectionSource::AppendixClosedForm);
        let already = Correction::closed_form(Gate2::PAULI_X).unwrap();
        assert_eq!(already.matrix(), &Gate2::PAULI_X);
    }

    #[test]
    fn solved_form_has_nonpositive_identity_weight() {
        let g = Gate2::HADAMARD.scale(Complex64::from_polar(1.0, 0.9));
        let c = Correction::solved(g).unwrap();
        assert!(c.pauli().w_i.im.abs() < 1e-15);
        assert!(c.pauli().w_i.re <= 0.0);
        let x = Correction::solved(Gate2::PAULI_X.scale(Complex64::new(0.0, 1.0))).unwrap();
        assert_eq!(x.pauli().w_x, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn decomposition_reconstructs_matrix() {
        let c = Correction::solved(Gate2::HADAMARD).unwrap();
        assert!(c.pauli().to_gate().max_abs_diff(c.matrix()) < 1e-15);
    }

    #[test]
    fn non_unitary_is_rejected() {
        let g = Gate2::IDENTITY.scale(Complex64::new(2.0, 0.0));
        assert!(Correction::solved(g).is_err());
        assert!(Correction::closed_form(g).is_err());
    }
}
