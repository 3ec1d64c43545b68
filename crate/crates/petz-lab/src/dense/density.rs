//! Reduced density matrices, von Neumann entropies, and conditional mutual
//! information for dense pure states.

use ndarray::Array2;

use crate::error::{Error, Result};
use crate::linalg::{eigh, CMat};
use crate::region::{check_disjoint, Region};

use super::state::StateVector;

/// Eigenvalues below this are treated as zero (outside the support).
pub const CUTOFF_EIG: f64 = 1e-12;

/// Rearrange ψ into a matrix Ψ[r, e] with the region sites (ascending) as
/// row bits and the complement as column bits; ρ_R = Ψ Ψ†.
pub fn region_matrix(psi: &StateVector, region: &Region) -> Result<CMat> {
    let l = psi.num_qubits();
    region.check_within(l)?;
    let inside: Vec<usize> = region.sites().to_vec();
    let outside: Vec<usize> = (0..l).filter(|q| !region.contains(*q)).collect();
    let (dr, de) = (1usize << inside.len(), 1usize << outside.len());
    let mut m: CMat = Array2::zeros((dr, de));
    for (n, amp) in psi.amplitudes().iter().enumerate() {
        let mut r = 0usize;
        for (k, &q) in inside.iter().enumerate() {
            r |= (n >> (l - 1 - q) & 1) << (inside.len() - 1 - k);
        }
        let mut e = 0usize;
        for (k, &q) in outside.iter().enumerate() {
            e |= (n >> (l - 1 - q) & 1) << (outside.len() - 1 - k);
        }
        m[[r, e]] = *amp;
    }
    Ok(m)
}

pub fn reduced_density(psi: &StateVector, region: &Region) -> Result<CMat> {
    let m = region_matrix(psi, region)?;
    Ok(m.dot(&m.t().mapv(|c| c.conj())))
}

/// Von Neumann entropy in bits; fails loudly on non-unit trace or
/// eigenvalues below −cutoff.
pub fn entropy_dense(rho: &CMat) -> Result<f64> {
    let (vals, _) = eigh(rho)?;
    let trace: f64 = vals.sum();
    if (trace - 1.0).abs() > 1e-8 {
        return Err(Error::Numerical(format!(
            "density matrix trace {trace} far from 1"
        )));
    }
    let mut s = 0.0;
    for &v in vals.iter() {
        if v < -CUTOFF_EIG.sqrt() {
            return Err(Error::Numerical(format!("negative eigenvalue {v}")));
        }
        if v > CUTOFF_EIG {
            s -= v * v.log2();
        }
    }
    Ok(s)
}

pub fn region_entropy_dense(psi: &StateVector, region: &Region) -> Result<f64> {
    // spectrum of ρ_R = squared singular values of Ψ[r, e]
    let m = region_matrix(psi, region)?;
    let small = if m.nrows() <= m.ncols() {
        m.dot(&m.t().mapv(|c| c.conj()))
    } else {
        m.t().mapv(|c| c.conj()).dot(&m)
    };
    entropy_dense(&small)
}

/// I(A : C | B) in bits; anything outside A∪B∪C is traced out.
pub fn cmi_dense(psi: &StateVector, a: &Region, b: &Region, c: &Region) -> Result<f64> {
    check_disjoint(&[a, b, c])?;
    let ab = a.union(b)?;
    let bc = b.union(c)?;
    let abc = ab.union(c)?;
    Ok(region_entropy_dense(psi, &ab)? + region_entropy_dense(psi, &bc)?
        - region_entropy_dense(psi, b)?
        - region_entropy_dense(psi, &abc)?)
}
