//! Dense hybrid circuits: the same brickwork + probabilistic Z measurement
//! layout as the Clifford ensemble, with Haar or U(1)-symmetric gates, plus
//! exact replay of recorded Clifford trajectories for cross-checks.

use rand::Rng;

use crate::error::{Error, Result};
use crate::stabilizer::{CircuitEvent, CircuitRecord};

use super::gates::{haar_two_qubit, u1_haar_two_qubit};
use super::state::StateVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateEnsemble {
    Haar,
    U1,
}

/// One monitored trajectory on a ring of `l` qubits (l even): `layers`
/// brickwork layers, each followed by Z measurements with rate `p`.
/// Haar starts from |0…0⟩; U(1) from the half-filled Néel state.
pub fn run_dense_mipt(
    l: usize,
    p: f64,
    ensemble: GateEnsemble,
    layers: usize,
    rng: &mut impl Rng,
) -> Result<StateVector> {
    if l < 2 || l % 2 != 0 {
        return Err(Error::invalid(format!(
            "brickwork ring needs even l >= 2, got {l}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::invalid(format!("measurement rate {p} not in [0,1]")));
    }
    let mut psi = match ensemble {
        GateEnsemble::Haar => StateVector::zero_state(l),
        GateEnsemble::U1 => StateVector::neel(l),
    };
    for layer in 0..layers {
        let offset = layer % 2;
        for k in 0..l / 2 {
            let a = (2 * k + offset) % l;
            let b = (a + 1) % l;
            let u = match ensemble {
                GateEnsemble::Haar => haar_two_qubit(rng),
                GateEnsemble::U1 => u1_haar_two_qubit(rng),
            };
            psi.apply_two_qubit(&u, a, b)?;
        }
        for site in 0..l {
            if rng.gen::<f64>() < p {
                psi.measure_z(site, rng)?;
            }
        }
    }
    Ok(psi)
}

/// Replay a recorded Clifford trajectory as a dense statevector; outcomes
/// are forced to the recorded ones, so the result is the exact same state.
pub fn replay_clifford_record(record: &CircuitRecord) -> Result<StateVector> {
    let mut psi = StateVector::zero_state(record.num_qubits);
    for event in &record.events {
        match event {
            CircuitEvent::Gate { a, b, gate } => {
                psi.apply_two_qubit(&gate.unitary()?, *a, *b)?;
            }
            CircuitEvent::Measure { site, outcome } => {
                psi.measure_z_forced(*site, *outcome)?;
            }
        }
    }
    Ok(psi)
}
