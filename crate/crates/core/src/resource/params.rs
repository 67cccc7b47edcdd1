use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::register;
use crate::qstate::PureState;
use crate::tolerance;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("coefficients are not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },
    #[error("coefficients contain a non-finite value")]
    NonFinite,
    #[error("cannot normalize an all-zero coefficient vector")]
    Zero,
}

fn validate(values: &[Complex64]) -> Result<f64, ParamError> {
    if values
        .iter()
        .any(|v| !v.re.is_finite() || !v.im.is_finite())
    {
        return Err(ParamError::NonFinite);
    }
    Ok(values.iter().map(Complex64::norm_sqr).sum())
}

/// The complex coefficients `(a, b, c, d)` of the resource state,
/// with `|a|² + |b|² + |c|² + |d|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GParams {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl GParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, ParamError> {
        let norm_sqr = validate(&[a, b, c, d])?;
        if (norm_sqr - 1.0).abs() > tolerance::CONSTRUCTION {
            return Err(ParamError::NotNormalized { norm_sqr });
        }
        Ok(Self { a, b, c, d })
    }

    /// Rescales any nonzero coefficient vector onto the unit sphere.
    pub fn normalized(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    ) -> Result<Self, ParamError> {
        let norm_sqr = validate(&[a, b, c, d])?;
        if norm_sqr == 0.0 {
            return Err(ParamError::Zero);
        }
        let n = norm_sqr.sqrt();
        Ok(Self {
            a: a / n,
            b: b / n,
            c: c / n,
            d: d / n,
        })
    }

    /// `(a, b, c, d) = (1/2, i/2, 1/2, i/2)`, the reference point used in the demos.
    pub fn reference_point() -> Self {
        let r = Complex64::new(0.5, 0.0);
        let i = Complex64::new(0.0, 0.5);
        Self {
            a: r,
            b: i,
            c: r,
            d: i,
        }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }
    pub fn b(&self) -> Complex64 {
        self.b
    }
    pub fn c(&self) -> Complex64 {
        self.c
    }
    pub fn d(&self) -> Complex64 {
        self.d
    }

    pub fn as_array(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.as_array().iter().map(Complex64::norm_sqr).sum()
    }

    /// `λ₁ = a + b − c + d`.
    pub fn lambda1(&self) -> Complex64 {
        self.a + self.b - self.c + self.d
    }

    /// `λ₂ = a + b + c − d`.
    pub fn lambda2(&self) -> Complex64 {
        self.a + self.b + self.c - self.d
    }
}

/// The shared qubit `α|0⟩ + β|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Secret {
    alpha: Complex64,
    beta: Complex64,
}

impl Secret {
    pub fn new(alpha: Complex64, beta: Complex64) -> Result<Self, ParamError> {
        let norm_sqr = validate(&[alpha, beta])?;
        if (norm_sqr - 1.0).abs() > tolerance::CONSTRUCTION {
            return Err(ParamError::NotNormalized { norm_sqr });
        }
        Ok(Self { alpha, beta })
    }

    pub fn normalized(alpha: Complex64, beta: Complex64) -> Result<Self, ParamError> {
        let norm_sqr = validate(&[alpha, beta])?;
        if norm_sqr == 0.0 {
            return Err(ParamError::Zero);
        }
        let n = norm_sqr.sqrt();
        Ok(Self {
            alpha: alpha / n,
            beta: beta / n,
        })
    }

    /// `cos θ |0⟩ + e^{iφ} sin θ |1⟩`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        Self {
            alpha: Complex64::new(theta.cos(), 0.0),
            beta: Complex64::from_polar(theta.sin(), phi),
        }
    }

    pub fn zero() -> Self {
        Self {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(0.0, 0.0),
        }
    }

    pub fn one() -> Self {
        Self {
            alpha: Complex64::new(0.0, 0.0),
            beta: Complex64::new(1.0, 0.0),
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn vector(&self) -> [Complex64; 2] {
        [self.alpha, self.beta]
    }

    /// Multiplies both amplitudes by `e^{iθ}`.
    pub fn with_global_phase(&self, theta: f64) -> Self {
        let p = Complex64::from_polar(1.0, theta);
        Self {
            alpha: self.alpha * p,
            beta: self.beta * p,
        }
    }

    pub fn state(&self, label: &str) -> PureState {
        PureState::from_unnormalized([label], vec![self.alpha, self.beta])
            .expect("a validated secret is a nonzero single-qubit vector")
    }
}

/// The four-qubit resource on `(A1, A2, B, C)`:
///
/// ```text
/// (a+d)/2 (|0000⟩+|1111⟩) + (a−d)/2 (|1100⟩+|0011⟩)
///   + (b+c)/2 (|0101⟩+|1010⟩) + (b−c)/2 (|0110⟩+|1001⟩)
/// ```
pub fn build_g_state(p: &GParams) -> PureState {
    let mut amps = vec![Complex64::new(0.0, 0.0); 16];
    let (a, b, c, d) = (p.a, p.b, p.c, p.d);
    for (indices, value) in [
        ([0b0000, 0b1111], (a + d) / 2.0),
        ([0b1100, 0b0011], (a - d) / 2.0),
        ([0b0101, 0b1010], (b + c) / 2.0),
        ([0b0110, 0b1001], (b - c) / 2.0),
    ] {
        for i in indices {
            amps[i] = value;
        }
    }
    // The eight amplitudes have total weight |a|²+|b|²+|c|²+|d|², which is 1 for
    // validated parameters; rescale only to absorb rounding.
    PureState::from_unnormalized(register::RESOURCE, amps)
        .expect("validated parameters give a nonzero vector")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn g_state_for_a_only() {
        let p = GParams::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let g = build_g_state(&p);
        for i in 0..16 {
            let expected = if [0b0000, 0b1111, 0b1100, 0b0011].contains(&i) {
                0.5
            } else {
                0.0
            };
            assert_eq!(g.amplitude(i), c(expected, 0.0), "index {i:04b}");
        }
    }

    #[test]
    fn g_state_for_b_only() {
        let p = GParams::new(c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)).unwrap();
        let g = build_g_state(&p);
        for i in 0..16 {
            let expected = if [0b0101, 0b1010, 0b0110, 0b1001].contains(&i) {
                0.5
            } else {
                0.0
            };
            assert_eq!(g.amplitude(i), c(expected, 0.0), "index {i:04b}");
        }
    }

    #[test]
    fn g_state_at_reference_point() {
        let g = build_g_state(&GParams::reference_point());
        let nonzero: Vec<usize> = (0..16).filter(|&i| g.amplitude(i).norm() > 0.0).collect();
        assert_eq!(nonzero.len(), 8);
        for &i in &nonzero {
            assert!((g.amplitude(i).norm_sqr() - 0.125).abs() < 1e-15);
        }
        assert!((g.amplitude(0) - c(0.25, 0.25)).norm() < 1e-15);
        assert_eq!(g.labels(), register::RESOURCE);
    }

    #[test]
    fn params_validation() {
        assert!(matches!(
            GParams::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)),
            Err(ParamError::NotNormalized { .. })
        ));
        assert_eq!(
            GParams::new(c(f64::INFINITY, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)),
            Err(ParamError::NonFinite)
        );
        let z = c(0.0, 0.0);
        assert_eq!(GParams::normalized(z, z, z, z), Err(ParamError::Zero));
        let p = GParams::normalized(c(1.0, 0.0), c(1.0, 0.0), z, z).unwrap();
        assert!((p.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn lambdas_at_reference_point() {
        let p = GParams::reference_point();
        assert!((p.lambda1() - c(0.0, 1.0)).norm() < 1e-15);
        assert!((p.lambda2() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn secret_validation() {
        assert!(Secret::new(c(1.0, 0.0), c(1.0, 0.0)).is_err());
        let s = Secret::from_angles(0.3, 1.1);
        assert!((s.alpha().norm_sqr() + s.beta().norm_sqr() - 1.0).abs() < 1e-15);
    }
}
