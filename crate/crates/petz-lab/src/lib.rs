//! Recovery-map diagnostics for long-range entangled many-body states.
//!
//! This crate computes the fidelity of rotated recovery maps (the Petz map
//! and its one-parameter rotated family) together with the conditional
//! mutual information I(A:C|B) for tripartite cuts of many-body states, on
//! three interchangeable backends:
//!
//! - [`gaussian`] — fermionic Gaussian states tracked through their Majorana
//!   correlation matrices; scales to hundreds of sites.
//! - [`stabilizer`] — Clifford/stabilizer states in a binary-symplectic
//!   tableau; recovery fidelities are exact group-rank arithmetic.
//! - [`dense`] — exact statevector simulation with an Uhlmann-fidelity
//!   evaluation of the rotated recovery map; the universal (but exponential)
//!   oracle for the other two.
//!
//! The [`experiments`] module layers a declarative ensemble runner on top:
//! monitored-circuit steady states, measured critical chains, chiral thermal
//! states, and a toric-code topological-entropy check, with trajectory
//! averaging, scaling fits, and CSV/JSON emission.
//!
//! All entropies and logarithms are base 2 throughout.
//!
//! See the `examples/` directory for one runnable entry point per major
//! capability; the thin `petz-lab` binary drives the same machinery from
//! declarative config files.

#![deny(unsafe_code)]

pub mod dense;
pub mod error;
pub mod experiments;
pub mod gaussian;
pub mod linalg;
pub mod region;
pub mod stabilizer;

pub use error::{Error, Result};
pub use region::Region;
