//! Exact simulation and verification of revocable quantum secret sharing
//! over the four-qubit `G_abcd` resource state.
//!
//! The dealer (Alice) holds the secret qubit `S` and resource qubits `A1`,
//! `A2`; Bob holds `B` and Charlie holds `C`. After Alice's Bell measurement
//! on `(S, A1)` the secret is spread over `(A2, B, C)`. Either Alice revokes
//! it (Bob and Charlie measure in the Hadamard basis and send their bits) or
//! a shareholder reconstructs it (the other two parties measure).
//!
//! * [`qstate`]: small-register statevector engine.
//! * [`resource`]: resource-state builder, parameter admissibility, samplers.
//! * [`protocol`]: sharing, revocation and reconstruction transcripts, and
//!   the correction table.
//! * [`oracle`]: brute-force correction solver and region sweeps, built
//!   only on [`qstate`] and [`resource`].
//! * [`report`]: serializable run reports.

pub mod branch;
pub mod correction;
pub mod oracle;
pub mod protocol;
pub mod qstate;
pub mod report;
pub mod resource;

pub use num_complex::Complex64;

/// Tolerances shared across the crate.
pub mod tolerance {
    /// Construction and exact algebra (normalization, unitarity).
    pub const CONSTRUCTION: f64 = 1e-12;
    /// Equalities that hold only after a derivation (fidelities, expansions).
    pub const DERIVED: f64 = 1e-10;
    /// A negative test must exceed this residual.
    pub const NEGATIVE: f64 = 1e-6;
    /// Threshold on solver residuals and proportionality defects.
    pub const SOLVE: f64 = 1e-9;
}
