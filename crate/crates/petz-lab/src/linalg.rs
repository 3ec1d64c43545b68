//! Thin wrappers around LAPACK-backed decompositions plus a few dense
//! helpers shared by the backends.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eig, Eigh, SVD, Solve, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMat = Array2<Complex64>;
pub type RMat = Array2<f64>;

/// Hermitian eigendecomposition; eigenvalues ascending, eigenvectors in
/// columns so that h = U diag(vals) U†.
///
/// The backing LAPACK call sees our row-major buffer as the transpose, so
/// it actually diagonalizes h̄; conjugating its eigenvectors restores the
/// standard convention.
pub fn eigh(h: &CMat) -> Result<(Array1<f64>, CMat)> {
    let h = if h.is_standard_layout() {
        h.clone()
    } else {
        h.as_standard_layout().to_owned()
    };
    let (vals, vecs) = h
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Numerical(format!("eigh failed: {e}")))?;
    Ok((vals, vecs.mapv(|c| c.conj())))
}

/// Eigenvalues of a general real matrix.
pub fn eigvals_real(m: &RMat) -> Result<Array1<Complex64>> {
    let (vals, _) = m
        .clone()
        .eig()
        .map_err(|e| Error::Numerical(format!("eig failed: {e}")))?;
    Ok(vals)
}

/// Solve A X = B column-by-column for real matrices.
pub fn solve_real(a: &RMat, b: &RMat) -> Result<RMat> {
    let n = a.nrows();
    let mut out = RMat::zeros((n, b.ncols()));
    for (j, col) in b.columns().into_iter().enumerate() {
        let x = a
            .solve(&col.to_owned())
            .map_err(|e| Error::Numerical(format!("linear solve failed: {e}")))?;
        out.column_mut(j).assign(&x);
    }
    Ok(out)
}

/// Thin SVD of a complex matrix: (u, singular values, v_h).
pub fn svd(m: &CMat) -> Result<(CMat, Array1<f64>, CMat)> {
    let (u, s, vh) = m
        .svd(true, true)
        .map_err(|e| Error::Numerical(format!("svd failed: {e}")))?;
    Ok((u.unwrap(), s, vh.unwrap()))
}

/// Singular values only.
pub fn singular_values(m: &CMat) -> Result<Array1<f64>> {
    let (_, s, _) = m
        .svd(false, false)
        .map_err(|e| Error::Numerical(format!("svd failed: {e}")))?;
    Ok(s)
}

pub fn max_abs(m: &RMat) -> f64 {
    m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()))
}

/// Promote a real matrix to complex.
pub fn complexify(m: &RMat) -> CMat {
    m.mapv(|x| Complex64::new(x, 0.0))
}

/// i * G as a complex Hermitian matrix (G real antisymmetric).
pub fn i_times(g: &RMat) -> CMat {
    g.mapv(|x| Complex64::new(0.0, x))
}

/// Binary entropy in bits, safe at the endpoints.
pub fn h2(p: f64) -> f64 {
    let mut s = 0.0;
    for q in [p, 1.0 - p] {
        if q > 0.0 {
            s -= q * q.log2();
        }
    }
    s
}

/// Nodes and weights of composite Gauss-Legendre quadrature on [a, b]:
/// `panels` equal panels with an `order`-point rule each.
pub fn gauss_legendre_composite(a: f64, b: f64, panels: usize, order: usize) -> Vec<(f64, f64)> {
    let (nodes, weights) = gauss_legendre_unit(order);
    let h = (b - a) / panels as f64;
    let mut out = Vec::with_capacity(panels * order);
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        for (x, w) in nodes.iter().zip(&weights) {
            out.push((mid + 0.5 * h * x, 0.5 * h * w));
        }
    }
    out
}

/// Gauss-Legendre rule on [-1, 1] via Newton iteration on Legendre roots.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Chebyshev initial guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0_f64, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}
