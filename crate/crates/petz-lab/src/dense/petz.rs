//! Literal rotated-Petz recovery on dense density matrices. Exponential in
//! the full region size — the oracle route for cross-checking the
//! purification-based evaluation, not the production path.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{eigh, gauss_legendre_composite, singular_values, CMat};

use super::density::CUTOFF_EIG;

fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = (a.nrows(), a.ncols());
    let (br, bc) = (b.nrows(), b.ncols());
    let mut out: CMat = Array2::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[[i * br + k, j * bc + l]] = a[[i, j]] * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Partial trace over the factors of `dims` not listed in `keep`
/// (ascending).
pub fn partial_trace(rho: &CMat, dims: &[usize], keep: &[usize]) -> Result<CMat> {
    let d: usize = dims.iter().product();
    if rho.shape() != [d, d] {
        return Err(Error::invalid("density matrix does not match dims"));
    }
    if keep.windows(2).any(|w| w[0] >= w[1]) || keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::invalid("keep list must be ascending factor indices"));
    }
    let dk: usize = keep.iter().map(|&k| dims[k]).product();
    let traced: Vec<usize> = (0..dims.len()).filter(|k| !keep.contains(k)).collect();
    let dt: usize = traced.iter().map(|&k| dims[k]).product();
    // strides of each factor in the full index
    let mut stride = vec![1usize; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        stride[k] = stride[k + 1] * dims[k + 1];
    }
    let expand = |packed: usize, which: &[usize]| -> usize {
        let mut rest = packed;
        let mut full = 0;
        for &k in which.iter().rev() {
            full += (rest % dims[k]) * stride[k];
            rest /= dims[k];
        }
        full
    };
    let mut out: CMat = Array2::zeros((dk, dk));
    for i in 0..dk {
        let fi = expand(i, keep);
        for j in 0..dk {
            let fj = expand(j, keep);
            let mut acc = Complex64::new(0.0, 0.0);
            for e in 0..dt {
                let fe = expand(e, &traced);
                acc += rho[[fi + fe, fj + fe]];
            }
            out[[i, j]] = acc;
        }
    }
    Ok(out)
}

/// Hermitian matrix power on the support: eigenvalues below the cutoff are
/// projected out (so negative powers stay finite).
pub fn herm_power(m: &CMat, z: Complex64) -> Result<CMat> {
    let (vals, vecs) = eigh(m)?;
    let d = m.nrows();
    let mut out: CMat = Array2::zeros((d, d));
    for (k, &v) in vals.iter().enumerate() {
        if v <= CUTOFF_EIG {
            continue;
        }
        let f = (z * v.ln()).exp();
        let col = vecs.column(k);
        for i in 0..d {
            for j in 0..d {
                out[[i, j]] += f * col[i] * col[j].conj();
            }
        }
    }
    Ok(out)
}

/// Uhlmann fidelity F(ρ, σ) = ‖√ρ √σ‖₁ (not squared).
pub fn fidelity_dense(rho: &CMat, sigma: &CMat) -> Result<f64> {
    let sr = herm_power(rho, Complex64::new(0.5, 0.0))?;
    let ss = herm_power(sigma, Complex64::new(0.5, 0.0))?;
    Ok(singular_values(&sr.dot(&ss))?.sum())
}

/// Apply the rotated Petz map (erasing C, conditioning on B) to ρ_AB and
/// return the reconstructed state on A⊗B⊗C:
/// ρ̃ = ρ_BC^{(1+it)/2} ρ_B^{−(1+it)/2} (ρ_AB ⊗ I_C) ρ_B^{−(1−it)/2} ρ_BC^{(1−it)/2}.
pub fn direct_petz_recover(rho_abc: &CMat, dims: (usize, usize, usize), t: f64) -> Result<CMat> {
    let (da, db, dc) = dims;
    let all = [da, db, dc];
    let rho_ab = partial_trace(rho_abc, &all, &[0, 1])?;
    let rho_bc = partial_trace(rho_abc, &all, &[1, 2])?;
    let rho_b = partial_trace(rho_abc, &all, &[1])?;

    let half_it = Complex64::new(0.5, 0.5 * t);
    let eye = |d: usize| -> CMat { Array2::eye(d) };
    // K = (I_A ⊗ ρ_BC^{(1+it)/2}) (I_A ⊗ ρ_B^{−(1+it)/2} ⊗ I_C)
    let k_op = kron(&eye(da), &herm_power(&rho_bc, half_it)?)
        .dot(&kron(&eye(da), &kron(&herm_power(&rho_b, -half_it)?, &eye(dc))));
    let input = kron(&rho_ab, &eye(dc));
    let sigma = k_op.dot(&input).dot(&k_op.t().mapv(|c| c.conj()));

    // hermitize; the map is trace-preserving on the support of ρ_B
    let herm = (&sigma + &sigma.t().mapv(|c| c.conj())).mapv(|c| 0.5 * c);
    let trace: f64 = (0..herm.nrows()).map(|i| herm[[i, i]].re).sum();
    if !(0.5..=1.5).contains(&trace) || !trace.is_finite() {
        return Err(Error::Numerical(format!(
            "recovered state trace {trace} far from 1"
        )));
    }
    Ok(herm.mapv(|c| c / trace))
}

/// Recovery fidelity F(ρ_ABC, R_t(ρ_AB)) at a single rotation parameter.
pub fn petz_fidelity_direct(rho_abc: &CMat, dims: (usize, usize, usize), t: f64) -> Result<f64> {
    let sigma = direct_petz_recover(rho_abc, dims, t)?;
    fidelity_dense(rho_abc, &sigma)
}

/// Averaging weight of the twirled recovery map,
/// β(t) = π / (2 (1 + cosh πt)); normalized to ∫β = 1.
pub fn beta_weight(t: f64) -> f64 {
    std::f64::consts::PI / (2.0 * (1.0 + (std::f64::consts::PI * t).cosh()))
}

/// Fidelity of the β-averaged (twirled) recovery: F(ρ_ABC, ∫dt β(t) R_t(ρ_AB)).
pub fn twirled_petz_fidelity(rho_abc: &CMat, dims: (usize, usize, usize)) -> Result<f64> {
    let d = rho_abc.nrows();
    let mut avg: CMat = Array2::zeros((d, d));
    let mut weight = 0.0;
    // β decays like e^{−π|t|}: [−20, 20] captures it to ~1e−27
    for (t, w) in gauss_legendre_composite(-20.0, 20.0, 20, 16) {
        let bw = w * beta_weight(t);
        if bw < 1e-300 {
            continue;
        }
        let sigma = direct_petz_recover(rho_abc, dims, t)?;
        avg = avg + sigma.mapv(|c| c * bw);
        weight += bw;
    }
    let avg = avg.mapv(|c| c / weight);
    fidelity_dense(rho_abc, &avg)
}
