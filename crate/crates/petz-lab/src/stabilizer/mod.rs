//! Stabilizer backend: tableau simulation of hybrid Clifford circuits and
//! topologically ordered states, with integer entropies and exact recovery
//! fidelities from GF(2) rank arithmetic.

pub mod clifford;
pub mod mipt;
pub mod rank;
pub mod tableau;
pub mod toric;

pub use clifford::{random_two_qubit_clifford, CliffordGate2, Pauli2};
pub use mipt::{run_clifford_mipt, CircuitEvent, CircuitRecord};
pub use rank::{cmi_stabilizer, gf2_rank, petz_fidelity_stabilizer, region_entropy};
pub use tableau::{PauliRow, StabilizerTableau};
pub use toric::{levin_wen_partition, toric_code_state};
