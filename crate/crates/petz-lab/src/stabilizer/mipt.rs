//! Hybrid Clifford circuits: brickwork of random two-qubit Cliffords with
//! probabilistic single-site Z measurements (the measurement-induced phase
//! transition ensemble).

use rand::Rng;

use crate::error::{Error, Result};

use super::clifford::{random_two_qubit_clifford, CliffordGate2};
use super::tableau::StabilizerTableau;

/// Replayable log of one trajectory, e.g. for dense cross-checks.
#[derive(Debug, Clone)]
pub enum CircuitEvent {
    Gate {
        a: usize,
        b: usize,
        gate: CliffordGate2,
    },
    Measure {
        site: usize,
        outcome: u8,
    },
}

#[derive(Debug, Clone)]
pub struct CircuitRecord {
    pub num_qubits: usize,
    pub events: Vec<CircuitEvent>,
}

/// One trajectory: `layers` brickwork layers on a ring of `l` qubits
/// (l even), each followed by a round of Z measurements with rate `p`.
/// Returns the final state and the replay log.
pub fn run_clifford_mipt(
    l: usize,
    p: f64,
    layers: usize,
    rng: &mut impl Rng,
) -> Result<(StabilizerTableau, CircuitRecord)> {
    if l < 2 || l % 2 != 0 {
        return Err(Error::invalid(format!(
            "brickwork ring needs even l >= 2, got {l}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("measurement rate {p} not in [0,1]")));
    }
    let mut tableau = StabilizerTableau::zero_state(l);
    let mut events = Vec::new();
    for layer in 0..layers {
        let offset = layer % 2;
        for k in 0..l / 2 {
            let a = (2 * k + offset) % l;
            let b = (a + 1) % l;
            let gate = random_two_qubit_clifford(rng);
            tableau.apply_clifford2(&gate, a, b);
            events.push(CircuitEvent::Gate { a, b, gate });
        }
        for site in 0..l {
            if rng.gen::<f64>() < p {
                let outcome = tableau.measure_z(site, rng)?;
                events.push(CircuitEvent::Measure { site, outcome });
            }
        }
    }
    Ok((
        tableau,
        CircuitRecord {
            num_qubits: l,
            events,
        },
    ))
}
