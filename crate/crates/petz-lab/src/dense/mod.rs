//! Exact statevector backend: monitored Haar / U(1) circuits, reduced
//! density matrices, and rotated-Petz recovery fidelities evaluated either
//! literally (small systems) or through Uhlmann purifications.

pub mod density;
pub mod gates;
pub mod mipt;
pub mod petz;
pub mod state;
pub mod uhlmann;

pub use density::{cmi_dense, entropy_dense, reduced_density, region_entropy_dense, CUTOFF_EIG};
pub use gates::{haar_two_qubit, haar_unitary, u1_haar_two_qubit};
pub use mipt::{replay_clifford_record, run_dense_mipt, GateEnsemble};
pub use petz::{
    beta_weight, direct_petz_recover, fidelity_dense, partial_trace, petz_fidelity_direct,
    twirled_petz_fidelity,
};
pub use state::StateVector;
pub use uhlmann::{uhlmann_fidelity_curve, uhlmann_petz_fidelity, Partition};
