//! Real Schur (canonical) form of antisymmetric matrices.
//!
//! Every real antisymmetric G decomposes as G = O Λ Oᵀ with O orthogonal and
//! Λ block-diagonal in 2×2 blocks [[0, ε], [−ε, 0]], ε ≥ 0. We compute it
//! through the Hermitian eigenproblem of iG: eigenvalues come in ±ε pairs and
//! the real/imaginary parts of a +ε eigenvector span the corresponding
//! invariant 2-plane.

use ndarray::Array1;

use crate::error::{Error, Result};
use crate::linalg::{eigh, i_times, RMat};

use super::TOL_PHYS;

/// Modes with |eigenvalue| below this are treated as exact zero modes.
const KERNEL_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SchurForm {
    /// Orthogonal O, columns grouped in pairs (2i, 2i+1) per mode.
    pub orthogonal: RMat,
    /// Mode values ε_i ≥ 0, sorted descending.
    pub eps: Vec<f64>,
    /// Number of ε values clipped from slightly above 1 back to 1.
    pub clipped: usize,
}

impl SchurForm {
    pub fn num_modes(&self) -> usize {
        self.eps.len()
    }

    /// O Λ Oᵀ.
    pub fn reconstruct(&self) -> RMat {
        let n = self.orthogonal.nrows();
        let mut lam = RMat::zeros((n, n));
        for (i, &e) in self.eps.iter().enumerate() {
            lam[[2 * i, 2 * i + 1]] = e;
            lam[[2 * i + 1, 2 * i]] = -e;
        }
        self.orthogonal.dot(&lam).dot(&self.orthogonal.t())
    }

    /// O f(Λ) Oᵀ for a per-mode 2×2 block function.
    pub fn conjugate_blocks(&self, block: impl Fn(f64) -> [[f64; 2]; 2]) -> RMat {
        let n = self.orthogonal.nrows();
        let mut mid = RMat::zeros((n, n));
        for (i, &e) in self.eps.iter().enumerate() {
            let b = block(e);
            mid[[2 * i, 2 * i]] = b[0][0];
            mid[[2 * i, 2 * i + 1]] = b[0][1];
            mid[[2 * i + 1, 2 * i]] = b[1][0];
            mid[[2 * i + 1, 2 * i + 1]] = b[1][1];
        }
        self.orthogonal.dot(&mid).dot(&self.orthogonal.t())
    }
}

pub fn schur_decompose(g: &RMat) -> Result<SchurForm> {
    let n = g.nrows();
    if g.ncols() != n || n % 2 != 0 {
        return Err(Error::invalid("Schur form needs a square even-dimensional matrix"));
    }
    let asym = g
        .iter()
        .zip(g.t().iter())
        .fold(0.0_f64, |m, (a, b)| m.max((a + b).abs()));
    if asym > 1e-8 {
        return Err(Error::invalid(format!(
            "matrix is not antisymmetric (max |G + Gᵀ| = {asym:e})"
        )));
    }

    let (vals, vecs) = eigh(&i_times(g))?;

    // Positive eigenvalues, largest first.
    let mut pos: Vec<usize> = (0..n).filter(|&i| vals[i] > KERNEL_TOL).collect();
    pos.sort_by(|&a, &b| vals[b].partial_cmp(&vals[a]).unwrap());

    let mut o = RMat::zeros((n, n));
    let mut eps = Vec::with_capacity(n / 2);
    let mut clipped = 0usize;
    let mut ncols = 0usize;

    let push_column = |o: &mut RMat, ncols: &mut usize, v: Array1<f64>| -> bool {
        // Modified Gram-Schmidt against the accepted columns.
        let mut v = v;
        for _ in 0..2 {
            for j in 0..*ncols {
                let col = o.column(j);
                let proj = col.dot(&v);
                v = &v - &col.to_owned().mapv(|x| x * proj);
            }
        }
        let norm = v.dot(&v).sqrt();
        if norm < 1e-6 {
            return false;
        }
        let v = v.mapv(|x| x / norm);
        o.column_mut(*ncols).assign(&v);
        *ncols += 1;
        true
    };

    for &i in &pos {
        let mut e = vals[i];
        if e > 1.0 {
            if e <= 1.0 + TOL_PHYS {
                e = 1.0;
                clipped += 1;
            }
            // beyond tol_phys: keep raw; physicality is the caller's check
        }
        let v = vecs.column(i);
        let sqrt2 = std::f64::consts::SQRT_2;
        let mut o1 = v.mapv(|z| sqrt2 * z.im);
        let mut o2 = v.mapv(|z| sqrt2 * z.re);
        // Orient the pair so the block comes out as [[0, ε], [−ε, 0]]
        // (eigen-solver phase/conjugation conventions are not relied on).
        if o1.dot(&g.dot(&o2)) < 0.0 {
            std::mem::swap(&mut o1, &mut o2);
        }
        if !push_column(&mut o, &mut ncols, o1) || !push_column(&mut o, &mut ncols, o2) {
            return Err(Error::Numerical(
                "degenerate eigenvector pairing failed in Schur decomposition".into(),
            ));
        }
        eps.push(e);
    }

    // Zero modes: real and imaginary parts of the (complex) kernel vectors
    // span the real kernel; Gram-Schmidt extracts an orthonormal basis.
    for i in 0..n {
        if ncols == n {
            break;
        }
        if vals[i].abs() <= KERNEL_TOL {
            let v = vecs.column(i);
            for cand in [v.mapv(|z| z.re), v.mapv(|z| z.im)] {
                if ncols < n {
                    push_column(&mut o, &mut ncols, cand);
                }
            }
        }
    }
    if ncols != n {
        return Err(Error::Numerical(
            "failed to complete orthogonal basis in Schur decomposition".into(),
        ));
    }
    eps.resize(n / 2, 0.0);

    Ok(SchurForm {
        orthogonal: o,
        eps,
        clipped,
    })
}
