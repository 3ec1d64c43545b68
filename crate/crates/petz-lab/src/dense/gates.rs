//! Random two-qubit gates for the dense circuit ensembles.

use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::CMat;

/// Haar-random d×d unitary: Ginibre matrix + Gram-Schmidt with the R
/// diagonal phases absorbed (QR with positive diagonal).
pub fn haar_unitary(d: usize, rng: &mut impl Rng) -> CMat {
    let mut a: CMat = Array2::zeros((d, d));
    for v in a.iter_mut() {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        *v = Complex64::new(re, im);
    }
    let mut q: CMat = Array2::zeros((d, d));
    for j in 0..d {
        let mut col = a.column(j).to_owned();
        for i in 0..j {
            let qi = q.column(i);
            let overlap: Complex64 = qi.iter().zip(col.iter()).map(|(u, v)| u.conj() * v).sum();
            for (c, u) in col.iter_mut().zip(qi.iter()) {
                *c -= overlap * u;
            }
        }
        let norm = col.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        // r_jj = ⟨q_j, a_j⟩ = norm * phase; divide it out so diag(R) > 0
        let rjj: Complex64 = col
            .iter()
            .zip(a.column(j).iter())
            .map(|(u, v)| u.conj() * v)
            .sum();
        let phase = rjj / rjj.norm();
        for (qc, c) in q.column_mut(j).iter_mut().zip(col.iter()) {
            *qc = c / norm * phase;
        }
    }
    q
}

pub fn haar_two_qubit(rng: &mut impl Rng) -> CMat {
    haar_unitary(4, rng)
}

/// Haar-random two-qubit gate commuting with total Z: independent phases on
/// |00⟩ and |11⟩ plus a Haar U(2) block on span{|01⟩, |10⟩}.
pub fn u1_haar_two_qubit(rng: &mut impl Rng) -> CMat {
    let v = haar_unitary(2, rng);
    let th0: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
    let th1: f64 = rng.gen::<f64>() * std::f64::consts::TAU;
    let mut u: CMat = Array2::zeros((4, 4));
    u[[0, 0]] = Complex64::from_polar(1.0, th0);
    u[[3, 3]] = Complex64::from_polar(1.0, th1);
    for (r, gr) in [1usize, 2].into_iter().enumerate() {
        for (c, gc) in [1usize, 2].into_iter().enumerate() {
            u[[gr, gc]] = v[[r, c]];
        }
    }
    u
}
