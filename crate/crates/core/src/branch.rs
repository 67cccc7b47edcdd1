//! Parties, protocol flows and the sixteen measurement branches of a flow.

use std::fmt;

use serde::{Deserialize, Serialize};

pub use crate::qstate::{BellOutcome, HadamardBit};
use crate::resource::register;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Party {
    Alice,
    Bob,
    Charlie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flow {
    /// Bob and Charlie measure; Alice corrects `A2`.
    Revocation,
    /// Alice (`A2`) and Bob measure; Charlie corrects `C`.
    ReconstructionAtCharlie,
    /// Alice (`A2`) and Charlie measure; Bob corrects `B`.
    ReconstructionAtBob,
}

impl Flow {
    pub const ALL: [Flow; 3] = [
        Flow::Revocation,
        Flow::ReconstructionAtCharlie,
        Flow::ReconstructionAtBob,
    ];

    /// Measured qubits with the party that announces each bit, in measurement order.
    pub fn measurements(self) -> [(&'static str, Party); 2] {
        match self {
            Flow::Revocation => [
                (register::BOB, Party::Bob),
                (register::CHARLIE, Party::Charlie),
            ],
            Flow::ReconstructionAtCharlie => [
                (register::ALICE_2, Party::Alice),
                (register::BOB, Party::Bob),
            ],
            Flow::ReconstructionAtBob => [
                (register::ALICE_2, Party::Alice),
                (register::CHARLIE, Party::Charlie),
            ],
        }
    }

    /// The qubit the correction acts on.
    pub fn target(self) -> &'static str {
        match self {
            Flow::Revocation => register::ALICE_2,
            Flow::ReconstructionAtCharlie => register::CHARLIE,
            Flow::ReconstructionAtBob => register::BOB,
        }
    }

    pub fn recipient(self) -> Party {
        match self {
            Flow::Revocation => Party::Alice,
            Flow::ReconstructionAtCharlie => Party::Charlie,
            Flow::ReconstructionAtBob => Party::Bob,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flow::Revocation => "revocation",
            Flow::ReconstructionAtCharlie => "reconstruction_at_charlie",
            Flow::ReconstructionAtBob => "reconstruction_at_bob",
        }
    }
}

impl fmt::Display for Flow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Alice's Bell outcome plus the two Hadamard bits, in the flow's measurement order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Branch {
    pub bell: BellOutcome,
    pub first: HadamardBit,
    pub second: HadamardBit,
}

impl Branch {
    pub const fn new(bell: BellOutcome, first: HadamardBit, second: HadamardBit) -> Self {
        Self {
            bell,
            first,
            second,
        }
    }

    /// All sixteen branches, Bell-major then first bit then second bit.
    pub fn all() -> impl Iterator<Item = Branch> {
        BellOutcome::ALL.into_iter().flat_map(|bell| {
            HadamardBit::ALL.into_iter().flat_map(move |first| {
                HadamardBit::ALL.into_iter().map(move |second| Branch {
                    bell,
                    first,
                    second,
                })
            })
        })
    }

    pub fn bits(&self) -> [HadamardBit; 2] {
        [self.first, self.second]
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.bell, self.first, self.second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_distinct_branches() {
        let all: Vec<Branch> = Branch::all().collect();
        assert_eq!(all.len(), 16);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 16);
        assert_eq!(
            all[0],
            Branch::new(BellOutcome::PhiPlus, HadamardBit::Plus, HadamardBit::Plus)
        );
        assert_eq!(all[1].second, HadamardBit::Minus);
    }

    #[test]
    fn flows_never_measure_their_target() {
        for flow in Flow::ALL {
            for (q, _) in flow.measurements() {
                assert_ne!(q, flow.target());
            }
        }
    }
}
