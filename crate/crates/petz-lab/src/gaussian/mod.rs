//! Fermionic Gaussian states through Majorana correlation matrices.
//!
//! A state on L sites (2L Majorana modes, site j carrying modes 2j and 2j+1)
//! is fully described by the real antisymmetric matrix
//! G_ij = Tr(ρ iγ_iγ_j), i ≠ j. Everything here — entropies, marginals,
//! recovery maps, fidelities, parity measurements — is closed arithmetic on
//! G, so system sizes of hundreds of sites stay cheap.

pub mod fidelity;
pub mod measure;
pub mod petz;
pub mod schur;
pub mod states;

pub use fidelity::gaussian_fidelity;
pub use measure::{parity_measure, parity_measure_forced, MeasurementOutcome};
pub use petz::{
    apply_tp_map, petz_fidelity_curve, petz_map_matrices, rotated_petz_recover,
    rotation_conjugator, GaussianMap,
};
pub use schur::{schur_decompose, SchurForm};
pub use states::{
    chiral_correlation, ising_cft_correlation, ising_critical_hamiltonian, QuadraticHamiltonian,
};

use crate::error::{Error, Result};
use crate::linalg::{h2, RMat};
use crate::region::{check_disjoint, Region};

/// ε within this of ±1 counts as a pure mode.
pub const TOL_PURE: f64 = 1e-10;
/// |ε| beyond 1 + TOL_PHYS is an unphysical state.
pub const TOL_PHYS: f64 = 1e-8;
/// |ε^M| below this means a degenerate ground space.
pub const TOL_DEGENERATE: f64 = 1e-12;

/// Site/Majorana bookkeeping for a chain of `num_sites` sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SystemLayout {
    pub num_sites: usize,
}

impl SystemLayout {
    pub fn new(num_sites: usize) -> Self {
        SystemLayout { num_sites }
    }

    pub fn majorana_count(&self) -> usize {
        2 * self.num_sites
    }
}

/// Majorana two-point data of a Gaussian state.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    g: RMat,
}

impl CorrelationMatrix {
    /// Ingest a matrix, checking shape and antisymmetry (then symmetrizing
    /// exactly).
    pub fn new(g: RMat) -> Result<Self> {
        let n = g.nrows();
        if g.ncols() != n || n % 2 != 0 || n == 0 {
            return Err(Error::invalid(
                "correlation matrix must be square with even positive dimension",
            ));
        }
        let asym = g
            .iter()
            .zip(g.t().iter())
            .fold(0.0_f64, |m, (a, b)| m.max((a + b).abs()));
        if asym > 1e-8 {
            return Err(Error::invalid(format!(
                "correlation matrix not antisymmetric (max |G + Gᵀ| = {asym:e})"
            )));
        }
        Ok(Self::antisymmetrize(g))
    }

    /// Antisymmetrize exactly and wrap without further checks.
    pub(crate) fn antisymmetrize(g: RMat) -> Self {
        let a = (&g - &g.t()).mapv(|x| 0.5 * x);
        CorrelationMatrix { g: a }
    }

    /// The maximally mixed state on `num_sites` sites.
    pub fn maximally_mixed(num_sites: usize) -> Self {
        CorrelationMatrix {
            g: RMat::zeros((2 * num_sites, 2 * num_sites)),
        }
    }

    pub fn dim(&self) -> usize {
        self.g.nrows()
    }

    pub fn num_sites(&self) -> usize {
        self.dim() / 2
    }

    pub fn matrix(&self) -> &RMat {
        &self.g
    }

    pub fn into_matrix(self) -> RMat {
        self.g
    }

    pub fn schur(&self) -> Result<SchurForm> {
        schur_decompose(&self.g)
    }

    /// All |ε_i| ≤ 1 + TOL_PHYS?
    pub fn check_physical(&self) -> Result<()> {
        let s = self.schur()?;
        for &e in &s.eps {
            if e > 1.0 + TOL_PHYS {
                return Err(Error::Unphysical(format!(
                    "correlation mode |ε| = {e} exceeds 1"
                )));
            }
        }
        Ok(())
    }

    /// Von Neumann entropy in bits: Σ h₂((1+ε_i)/2).
    pub fn entropy(&self) -> Result<f64> {
        let s = self.schur()?;
        let mut total = 0.0;
        for &e in &s.eps {
            if e > 1.0 + TOL_PHYS {
                return Err(Error::Unphysical(format!(
                    "correlation mode |ε| = {e} exceeds 1"
                )));
            }
            let e = e.min(1.0);
            if 1.0 - e < TOL_PURE {
                continue; // pure mode contributes nothing
            }
            total += h2(0.5 * (1.0 + e));
        }
        Ok(total)
    }

    /// Σ (1 − ε_i); zero for pure states.
    pub fn impurity(&self) -> Result<f64> {
        Ok(self.schur()?.eps.iter().map(|e| 1.0 - e.min(1.0)).sum())
    }

    pub fn is_pure(&self) -> Result<bool> {
        Ok(self.impurity()? < 1e-8)
    }

    /// Restrict to the Majorana modes of `keep` (order preserved).
    pub fn partial_trace(&self, keep: &Region) -> Result<CorrelationMatrix> {
        if keep.is_empty() {
            return Err(Error::invalid("cannot keep an empty region"));
        }
        keep.check_within(self.num_sites())?;
        let idx = keep.majorana_indices();
        let m = idx.len();
        let mut out = RMat::zeros((m, m));
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out[[a, b]] = self.g[[i, j]];
            }
        }
        Ok(CorrelationMatrix { g: out })
    }

    /// Zero every row/column belonging to `region` (erasure to the maximally
    /// mixed state there), keeping the full dimension.
    pub fn erase_region(&self, region: &Region) -> Result<CorrelationMatrix> {
        region.check_within(self.num_sites())?;
        let mut g = self.g.clone();
        for &i in &region.majorana_indices() {
            g.row_mut(i).fill(0.0);
            g.column_mut(i).fill(0.0);
        }
        Ok(CorrelationMatrix { g })
    }
}

/// G₁ ⊕ G₂ — correlation matrix of the tensor product.
pub fn direct_sum(g1: &CorrelationMatrix, g2: &CorrelationMatrix) -> CorrelationMatrix {
    let (n1, n2) = (g1.dim(), g2.dim());
    let mut g = RMat::zeros((n1 + n2, n1 + n2));
    g.slice_mut(ndarray::s![..n1, ..n1]).assign(g1.matrix());
    g.slice_mut(ndarray::s![n1.., n1..]).assign(g2.matrix());
    CorrelationMatrix { g }
}

/// I(A:B) = S_A + S_B − S_AB in bits.
pub fn mutual_information(
    g: &CorrelationMatrix,
    a: &Region,
    b: &Region,
) -> Result<f64> {
    check_disjoint(&[a, b])?;
    let s_a = g.partial_trace(a)?.entropy()?;
    let s_b = g.partial_trace(b)?.entropy()?;
    let s_ab = g.partial_trace(&a.union(b)?)?.entropy()?;
    Ok(s_a + s_b - s_ab)
}

/// I(A:C|B) = S_AB + S_BC − S_B − S_ABC in bits.
pub fn cmi(
    g: &CorrelationMatrix,
    a: &Region,
    b: &Region,
    c: &Region,
) -> Result<f64> {
    check_disjoint(&[a, b, c])?;
    let s_ab = g.partial_trace(&a.union(b)?)?.entropy()?;
    let s_bc = g.partial_trace(&b.union(c)?)?.entropy()?;
    let s_b = g.partial_trace(b)?.entropy()?;
    let s_abc = g.partial_trace(&a.union(b)?.union(c)?)?.entropy()?;
    Ok(s_ab + s_bc - s_b - s_abc)
}
