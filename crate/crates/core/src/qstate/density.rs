use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use super::{PureState, StateError};

/// Dense density matrix over a labelled register, row-major.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityMatrix {
    labels: Vec<String>,
    dim: usize,
    entries: Vec<Complex64>,
}

impl DensityMatrix {
    pub fn from_pure(state: &PureState) -> Self {
        let amps = state.amplitudes();
        let dim = amps.len();
        let entries = (0..dim * dim)
            .map(|k| amps[k / dim] * amps[k % dim].conj())
            .collect();
        Self {
            labels: state.labels().to_vec(),
            dim,
            entries,
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.entry(i, i)).sum()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for c in 0..self.dim {
                worst = worst.max((self.entry(r, c) - self.entry(c, r).conj()).norm());
            }
        }
        worst
    }

    fn to_matrix(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.dim, self.dim, &self.entries)
    }

    /// Eigenvalues in ascending order (the matrix is taken as Hermitian).
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut values: Vec<f64> = self
            .to_matrix()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect();
        values.sort_by(f64::total_cmp);
        values
    }

    /// `½‖ρ − σ‖₁`.
    pub fn trace_distance(&self, other: &DensityMatrix) -> Result<f64, StateError> {
        if self.dim != other.dim {
            return Err(StateError::ShapeMismatch {
                left: self.labels.len(),
                right: other.labels.len(),
            });
        }
        let diff = self.to_matrix() - other.to_matrix();
        Ok(0.5
            * diff
                .symmetric_eigenvalues()
                .iter()
                .map(|v| v.abs())
                .sum::<f64>())
    }
}

impl PureState {
    /// Reduced density matrix on `keep`; kept qubits stay in register order.
    pub fn partial_trace(&self, keep: &[&str]) -> Result<DensityMatrix, StateError> {
        if keep.is_empty() {
            return Err(StateError::EmptyKeep);
        }
        let mut kept = keep
            .iter()
            .map(|q| self.position(q))
            .collect::<Result<Vec<_>, _>>()?;
        kept.sort_unstable();
        kept.dedup();
        let traced: Vec<usize> = (0..self.num_qubits())
            .filter(|p| !kept.contains(p))
            .collect();
        let dim = 1usize << kept.len();
        let env_dim = 1usize << traced.len();

        let index_of = |sys: usize, env: usize| {
            let mut index = 0;
            for (k, &p) in kept.iter().enumerate() {
                if sys & (1 << (kept.len() - 1 - k)) != 0 {
                    index |= self.bit(p);
                }
            }
            for (k, &p) in traced.iter().enumerate() {
                if env & (1 << (traced.len() - 1 - k)) != 0 {
                    index |= self.bit(p);
                }
            }
            index
        };

        let amps = self.amplitudes();
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                entries[r * dim + c] = (0..env_dim)
                    .map(|e| amps[index_of(r, e)] * amps[index_of(c, e)].conj())
                    .sum();
            }
        }
        Ok(DensityMatrix {
            labels: kept.iter().map(|&p| self.labels()[p].clone()).collect(),
            dim,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn marginal_of_bell_pair_is_maximally_mixed() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let phi = PureState::new(
            ["A", "B"],
            vec![c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)],
        )
        .unwrap();
        let rho = phi.partial_trace(&["A"]).unwrap();
        assert_eq!(rho.dim(), 2);
        for (r, col, v) in [(0, 0, 0.5), (1, 1, 0.5), (0, 1, 0.0), (1, 0, 0.0)] {
            assert!((rho.entry(r, col) - c(v, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn marginal_of_product_state() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let zero = PureState::basis(["x"], 0).unwrap();
        let plus = PureState::qubit("y", c(h, 0.0), c(h, 0.0)).unwrap();
        let rho = zero.tensor(&plus).unwrap().partial_trace(&["y"]).unwrap();
        assert_eq!(rho.labels(), ["y"]);
        for k in 0..4 {
            assert!((rho.entries()[k] - c(0.5, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn empty_keep_is_rejected() {
        let zero = PureState::basis(["x"], 0).unwrap();
        assert_eq!(zero.partial_trace(&[]), Err(StateError::EmptyKeep));
    }

    #[test]
    fn trace_distance_of_orthogonal_pure_states() {
        let zero = DensityMatrix::from_pure(&PureState::basis(["x"], 0).unwrap());
        let one = DensityMatrix::from_pure(&PureState::basis(["x"], 1).unwrap());
        assert!((zero.trace_distance(&one).unwrap() - 1.0).abs() < 1e-14);
        assert!(zero.trace_distance(&zero).unwrap() < 1e-14);
        assert_eq!(zero.eigenvalues().len(), 2);
    }
}
