//! Exact dense statevector engine for registers of up to five qubits.
//!
//! Amplitudes are stored big-endian with respect to the register's label
//! list: the first label is the most significant bit of the basis index.
//! Every operation is a pure function returning a new value.

mod basis;
mod density;
mod gate;
mod measure;
mod state;

pub use basis::{BellOutcome, HadamardBit};
pub use density::DensityMatrix;
pub use gate::{equal_up_to_phase, Gate2};
pub use measure::{MeasurementBasis, MeasurementRecord, Outcome, Projection};
pub use state::PureState;

use thiserror::Error;

pub use num_complex::Complex64 as Amplitude;

/// Largest register the engine accepts.
pub const MAX_QUBITS: usize = 5;

/// Squared norm below which a projected branch is treated as impossible.
pub const ZERO_PROBABILITY: f64 = 1e-24;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("qubit label `{0}` appears more than once")]
    DuplicateLabel(String),
    #[error("qubit label `{0}` is present in both registers")]
    LabelCollision(String),
    #[error("unknown qubit label `{0}`")]
    UnknownLabel(String),
    #[error("register of {0} qubits exceeds the {MAX_QUBITS}-qubit limit")]
    TooManyQubits(usize),
    #[error("expected {expected} amplitudes, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("amplitude vector is not normalized (squared norm {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },
    #[error("amplitude vector contains a non-finite entry")]
    NonFinite,
    #[error("gate is not unitary (defect {defect:e})")]
    NonUnitary { defect: f64 },
    #[error("a two-qubit measurement needs two distinct qubits, got `{0}` twice")]
    SameQubit(String),
    #[error("partial trace needs at least one kept qubit")]
    EmptyKeep,
    #[error("register shapes differ: {left} vs {right} qubits")]
    ShapeMismatch { left: usize, right: usize },
    #[error("cannot normalize a zero vector")]
    ZeroVector,
}
