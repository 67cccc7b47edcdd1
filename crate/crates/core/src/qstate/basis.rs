use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// One of the four Bell states, `Φ± = (|00⟩ ± |11⟩)/√2`, `Ψ± = (|01⟩ ± |10⟩)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BellOutcome {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellOutcome {
    pub const ALL: [BellOutcome; 4] = [
        BellOutcome::PhiPlus,
        BellOutcome::PhiMinus,
        BellOutcome::PsiPlus,
        BellOutcome::PsiMinus,
    ];

    /// Ket coefficients over `|00⟩, |01⟩, |10⟩, |11⟩`.
    pub fn vector(self) -> [Complex64; 4] {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        let z = Complex64::new(0.0, 0.0);
        match self {
            BellOutcome::PhiPlus => [h, z, z, h],
            BellOutcome::PhiMinus => [h, z, z, -h],
            BellOutcome::PsiPlus => [z, h, h, z],
            BellOutcome::PsiMinus => [z, h, -h, z],
        }
    }

    /// `+1` for the `+` member of the pair, `-1` for the `−` member.
    pub fn sign(self) -> f64 {
        match self {
            BellOutcome::PhiPlus | BellOutcome::PsiPlus => 1.0,
            BellOutcome::PhiMinus | BellOutcome::PsiMinus => -1.0,
        }
    }

    pub fn is_phi(self) -> bool {
        matches!(self, BellOutcome::PhiPlus | BellOutcome::PhiMinus)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BellOutcome::PhiPlus => "phi+",
            BellOutcome::PhiMinus => "phi-",
            BellOutcome::PsiPlus => "psi+",
            BellOutcome::PsiMinus => "psi-",
        }
    }
}

impl fmt::Display for BellOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Outcome of a measurement in the Hadamard basis, `|±⟩ = (|0⟩ ± |1⟩)/√2`.
///
/// The classical encoding sent between parties is `+ → 0`, `− → 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HadamardBit {
    Plus,
    Minus,
}

impl HadamardBit {
    pub const ALL: [HadamardBit; 2] = [HadamardBit::Plus, HadamardBit::Minus];

    pub fn vector(self) -> [Complex64; 2] {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        match self {
            HadamardBit::Plus => [h, h],
            HadamardBit::Minus => [h, -h],
        }
    }

    pub fn encode(self) -> u8 {
        match self {
            HadamardBit::Plus => 0,
            HadamardBit::Minus => 1,
        }
    }

    pub fn decode(bit: u8) -> Option<Self> {
        match bit {
            0 => Some(HadamardBit::Plus),
            1 => Some(HadamardBit::Minus),
            _ => None,
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            HadamardBit::Plus => 1.0,
            HadamardBit::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            HadamardBit::Plus => "+",
            HadamardBit::Minus => "-",
        }
    }
}

impl fmt::Display for HadamardBit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_vectors_are_orthonormal() {
        for x in BellOutcome::ALL {
            for y in BellOutcome::ALL {
                let ip: Complex64 = x
                    .vector()
                    .iter()
                    .zip(y.vector().iter())
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let expected = if x == y { 1.0 } else { 0.0 };
                assert!((ip - expected).norm() < 1e-15, "{x} {y}");
            }
        }
    }

    #[test]
    fn hadamard_encoding_round_trips() {
        for bit in HadamardBit::ALL {
            assert_eq!(HadamardBit::decode(bit.encode()), Some(bit));
        }
        assert_eq!(HadamardBit::Plus.encode(), 0);
        assert_eq!(HadamardBit::Minus.encode(), 1);
        assert_eq!(HadamardBit::decode(2), None);
    }
}
