use serde::Serialize;

use super::{share, BellChoice, ProtocolError};
use crate::branch::BellOutcome;
use crate::resource::{register, GParams, Secret};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CollusionDistance {
    pub bell: BellOutcome,
    pub trace_distance: f64,
}

/// How well Bob and Charlie together can tell two secrets apart without
/// Alice: trace distance between their joint reduced states, per Bell outcome.
pub fn collusion_probe(
    params: &GParams,
    secrets: (&Secret, &Secret),
) -> Result<Vec<CollusionDistance>, ProtocolError> {
    let first = share(secrets.0, params, BellChoice::Enumerate)?;
    let second = share(secrets.1, params, BellChoice::Enumerate)?;
    let keep = [register::BOB, register::CHARLIE];
    first
        .iter()
        .zip(&second)
        .map(|(x, y)| {
            let rx = x.state.partial_trace(&keep)?;
            let ry = y.state.partial_trace(&keep)?;
            Ok(CollusionDistance {
                bell: x.bell,
                trace_distance: rx.trace_distance(&ry)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_and_rephased_secrets_are_indistinguishable() {
        let p = GParams::reference_point();
        let s = Secret::from_angles(0.7, 1.3);
        for pair in [(s, s), (s, s.with_global_phase(2.1))] {
            for row in collusion_probe(&p, (&pair.0, &pair.1)).unwrap() {
                assert!(row.trace_distance < 1e-12, "{row:?}");
            }
        }
    }

    #[test]
    fn reference_point_basis_secrets_are_fully_distinguishable() {
        // Frozen regression value from an independent numpy computation.
        let rows = collusion_probe(
            &GParams::reference_point(),
            (&Secret::zero(), &Secret::one()),
        )
        .unwrap();
        assert_eq!(rows.len(), 4);
        for row in rows {
            assert!((row.trace_distance - 1.0).abs() < 1e-10, "{row:?}");
        }
    }
}
