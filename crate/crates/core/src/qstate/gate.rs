use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const O: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);
const H: Complex64 = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);

/// A 2×2 complex matrix acting on one qubit. Not necessarily unitary;
/// see [`Gate2::unitarity_defect`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gate2 {
    entries: [[Complex64; 2]; 2],
}

impl Gate2 {
    pub const IDENTITY: Gate2 = Gate2 {
        entries: [[ONE, O], [O, ONE]],
    };
    pub const PAULI_X: Gate2 = Gate2 {
        entries: [[O, ONE], [ONE, O]],
    };
    pub const PAULI_Y: Gate2 = Gate2 {
        entries: [[O, Complex64::new(0.0, -1.0)], [I, O]],
    };
    pub const PAULI_Z: Gate2 = Gate2 {
        entries: [[ONE, O], [O, Complex64::new(-1.0, 0.0)]],
    };
    pub const HADAMARD: Gate2 = Gate2 {
        entries: [[H, H], [H, Complex64::new(-H.re, 0.0)]],
    };

    pub const fn new(entries: [[Complex64; 2]; 2]) -> Self {
        Self { entries }
    }

    /// `w_I·I + w_x·σx + w_y·σy + w_z·σz`.
    pub fn from_pauli(w: [Complex64; 4]) -> Self {
        let [wi, wx, wy, wz] = w;
        Self::new([[wi + wz, wx - I * wy], [wx + I * wy, wi - wz]])
    }

    /// Coefficients `[w_I, w_x, w_y, w_z]` of the Pauli expansion.
    pub fn pauli_coefficients(&self) -> [Complex64; 4] {
        let m = &self.entries;
        [
            (m[0][0] + m[1][1]) / 2.0,
            (m[0][1] + m[1][0]) / 2.0,
            I * (m[0][1] - m[1][0]) / 2.0,
            (m[0][0] - m[1][1]) / 2.0,
        ]
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.entries;
        Self::new([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let m = &self.entries;
        Self::new([
            [m[0][0] * factor, m[0][1] * factor],
            [m[1][0] * factor, m[1][1] * factor],
        ])
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn apply(&self, v: [Complex64; 2]) -> [Complex64; 2] {
        let m = &self.entries;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    /// Largest entry modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Gate2) -> f64 {
        self.iter()
            .zip(other.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus of `U†U − I`.
    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Gate2::IDENTITY)
    }

    fn iter(&self) -> impl Iterator<Item = &Complex64> {
        self.entries.iter().flatten()
    }
}

impl Mul for Gate2 {
    type Output = Gate2;

    fn mul(self, rhs: Gate2) -> Gate2 {
        let (a, b) = (&self.entries, &rhs.entries);
        let at = |r: usize, c: usize| a[r][0] * b[0][c] + a[r][1] * b[1][c];
        Gate2::new([[at(0, 0), at(0, 1)], [at(1, 0), at(1, 1)]])
    }
}

/// True iff `y = e^{iθ}·x` entrywise within `tol` for some θ.
///
/// The phase is read off the largest-magnitude entry of `x` and then checked
/// on all four entries.
pub fn equal_up_to_phase(x: &Gate2, y: &Gate2, tol: f64) -> bool {
    let (pivot, scale) =
        x.iter()
            .enumerate()
            .map(|(k, v)| (k, v.norm()))
            .fold(
                (0, 0.0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
    if scale <= tol {
        return y.iter().all(|v| v.norm() <= tol);
    }
    let xp = *x.iter().nth(pivot).unwrap_or(&O);
    let yp = *y.iter().nth(pivot).unwrap_or(&O);
    if yp.norm() <= tol {
        return false;
    }
    let ratio = yp / xp;
    let phase = ratio / ratio.norm();
    x.scale(phase).max_abs_diff(y) <= tol
}
