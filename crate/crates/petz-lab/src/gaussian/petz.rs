//! Petz and rotated-Petz recovery as Gaussian maps on correlation matrices.

use super::fidelity::gaussian_fidelity;
use super::schur::{schur_decompose, SchurForm};
use super::CorrelationMatrix;
use crate::error::{Error, Result};
use crate::linalg::RMat;
use crate::region::{check_disjoint, Region};

/// Modes with ε this close to 1 decouple from the rotation.
pub const TOL_DECOUPLE: f64 = 1e-8;

/// Grassmann-representation data (A, B, D, c) of a Gaussian linear map.
/// Trace-preserving maps have c = 1 and D = 0 and act as G ↦ A + B G Bᵀ.
#[derive(Debug, Clone)]
pub struct GaussianMap {
    pub a: RMat,
    pub b: RMat,
    pub d: RMat,
    pub c: num_complex::Complex64,
    pub trace_preserving: bool,
}

impl GaussianMap {
    pub fn trace_preserving(a: RMat, b: RMat) -> Result<Self> {
        let n = a.nrows();
        if a.ncols() != n || b.nrows() != n || b.ncols() != n {
            return Err(Error::invalid("map matrices must be square and same-sized"));
        }
        Ok(GaussianMap {
            d: RMat::zeros((n, n)),
            c: num_complex::Complex64::new(1.0, 0.0),
            a,
            b,
            trace_preserving: true,
        })
    }

    pub fn identity(dim: usize) -> Self {
        GaussianMap::trace_preserving(RMat::zeros((dim, dim)), RMat::eye(dim)).unwrap()
    }

    /// Composition: self ∘ other (apply `other` first).
    pub fn compose(&self, other: &GaussianMap) -> Result<GaussianMap> {
        if !(self.trace_preserving && other.trace_preserving) {
            return Err(Error::invalid("composition implemented for TP maps only"));
        }
        let a = &self.a + &self.b.dot(&other.a).dot(&self.b.t());
        let b = self.b.dot(&other.b);
        GaussianMap::trace_preserving(a, b)
    }
}

/// G ↦ A + B G Bᵀ for a trace-preserving Gaussian map.
pub fn apply_tp_map(map: &GaussianMap, g: &CorrelationMatrix) -> Result<CorrelationMatrix> {
    if !map.trace_preserving {
        return Err(Error::invalid("map is not trace-preserving"));
    }
    if map.b.ncols() != g.dim() {
        return Err(Error::invalid("dimension mismatch between map and state"));
    }
    let out = &map.a + &map.b.dot(g.matrix()).dot(&map.b.t());
    Ok(CorrelationMatrix::antisymmetrize(out))
}

/// O diag(c_i I₂) Oᵀ with c_i = (1 − ε_i²)^{±1/2}; ε is clamped just below 1
/// so pure modes stay finite (their contribution cancels structurally in the
/// Petz composition).
fn sqrt_one_plus_g2(s: &SchurForm, invert: bool) -> RMat {
    s.conjugate_blocks(|e| {
        let e = e.min(1.0 - 1e-12);
        let c = (1.0 - e * e).sqrt();
        let c = if invert { 1.0 / c } else { c };
        [[c, 0.0], [0.0, c]]
    })
}

/// Petz recovery map for the erasure channel on `erased`, with reference
/// state σ (the caller supplies G^σ = G_A ⊕ G_BC):
/// B = √(I+(G^σ)²) (B^N)ᵀ (√(I+(G^{N(σ)})²))⁻¹, A = G^σ − B G^{N(σ)} Bᵀ.
pub fn petz_map_matrices(g_sigma: &CorrelationMatrix, erased: &Region) -> Result<GaussianMap> {
    erased.check_within(g_sigma.num_sites())?;
    let g_ns = g_sigma.erase_region(erased)?;
    let s_sigma = g_sigma.schur()?;
    let s_ns = g_ns.schur()?;

    let n = g_sigma.dim();
    let mut b_n = RMat::eye(n);
    for &i in &erased.majorana_indices() {
        b_n[[i, i]] = 0.0;
    }

    let b = sqrt_one_plus_g2(&s_sigma, false)
        .dot(&b_n.t())
        .dot(&sqrt_one_plus_g2(&s_ns, true));
    let a = g_sigma.matrix() - &b.dot(g_ns.matrix()).dot(&b.t());
    let a = (&a - &a.t()).mapv(|x| 0.5 * x);
    GaussianMap::trace_preserving(a, b)
}

/// R(M, t) = O (⊕ᵢ M_{i,t}) Oᵀ where M_{i,t} is the rotation by the phase of
/// ((1+ε)/(1−ε))^{it/2} = e^{i t artanh ε}; blocks with ε within
/// TOL_DECOUPLE of 1 decouple and become I₂.
pub fn rotation_conjugator(m: &RMat, t: f64) -> Result<RMat> {
    if !t.is_finite() {
        return Err(Error::invalid("rotation parameter must be finite"));
    }
    let s = schur_decompose(m)?;
    Ok(s.conjugate_blocks(|e| {
        if e >= 1.0 - TOL_DECOUPLE {
            [[1.0, 0.0], [0.0, 1.0]]
        } else {
            let theta = t * e.atanh();
            let (sin, cos) = theta.sin_cos();
            [[cos, -sin], [sin, cos]]
        }
    }))
}

fn zero_cross_block(g: &CorrelationMatrix, cut: &Region) -> CorrelationMatrix {
    // Zero every entry linking `cut` with its complement (tensor-factorize).
    let mut out = g.matrix().clone();
    let in_cut = {
        let mut v = vec![false; g.dim()];
        for &i in &cut.majorana_indices() {
            v[i] = true;
        }
        v
    };
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            if in_cut[i] != in_cut[j] {
                out[[i, j]] = 0.0;
            }
        }
    }
    CorrelationMatrix::antisymmetrize(out)
}

/// Correlation matrix of ρ̃_ABC(t) = D_{σ,t}(ρ_AB ⊗ I_C/2^{|C|}) with
/// σ = ρ_A ⊗ ρ_BC, the rotated Petz recovery of the erased region C.
pub fn rotated_petz_recover(
    g_abc: &CorrelationMatrix,
    a: &Region,
    b: &Region,
    c: &Region,
    t: f64,
) -> Result<CorrelationMatrix> {
    check_disjoint(&[a, b, c])?;
    for r in [a, b, c] {
        r.check_within(g_abc.num_sites())?;
    }
    if a.len() + b.len() + c.len() != g_abc.num_sites() {
        return Err(Error::invalid(
            "regions A, B, C must partition the support of the state",
        ));
    }

    // σ = ρ_A ⊗ ρ_BC: drop all A↔BC correlations.
    let g_sigma = zero_cross_block(g_abc, a);
    // N(σ) = ρ_A ⊗ ρ_B ⊗ I_C
    let g_nsigma = g_sigma.erase_region(c)?;
    // channel input: ρ_AB ⊗ I_C
    let g_input = g_abc.erase_region(c)?;

    let petz = petz_map_matrices(&g_sigma, c)?;
    let r_sigma = rotation_conjugator(g_sigma.matrix(), t)?;
    let r_nsigma = rotation_conjugator(g_nsigma.matrix(), -t)?;

    let a_rot = r_sigma.dot(&petz.a).dot(&r_sigma.t());
    let b_rot = r_sigma.dot(&petz.b).dot(&r_nsigma);
    let rotated = GaussianMap::trace_preserving(a_rot, b_rot)?;
    apply_tp_map(&rotated, &g_input)
}

/// F_t = F(ρ̃_ABC(t), ρ_ABC) over a grid of rotation parameters.
pub fn petz_fidelity_curve(
    g_abc: &CorrelationMatrix,
    a: &Region,
    b: &Region,
    c: &Region,
    t_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    t_grid
        .iter()
        .map(|&t| {
            let recovered = rotated_petz_recover(g_abc, a, b, c, t)?;
            Ok((t, gaussian_fidelity(&recovered, g_abc)?))
        })
        .collect()
}

/// Default grid: 41 uniform points on [−5, 5].
pub fn default_t_grid() -> Vec<f64> {
    (0..41).map(|i| -5.0 + 0.25 * i as f64).collect()
}

/// (t*, F*) maximizing F over a computed curve.
pub fn curve_argmax(curve: &[(f64, f64)]) -> (f64, f64) {
    curve
        .iter()
        .copied()
        .fold((f64::NAN, f64::NEG_INFINITY), |best, p| {
            if p.1 > best.1 {
                p
            } else {
                best
            }
        })
}
