//! Shared helpers for the integration suites: Jordan-Wigner reconstruction
//! of dense density matrices from Gaussian correlation data, and Pauli
//! expectation values on statevectors.
#![allow(dead_code)] // each test binary uses a different subset

use ndarray::Array2;
use num_complex::Complex64;

use petz_lab::dense::StateVector;
use petz_lab::gaussian::CorrelationMatrix;
use petz_lab::linalg::CMat;
use petz_lab::stabilizer::PauliRow;

pub fn kron(a: &CMat, b: &CMat) -> CMat {
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

fn pauli(which: char) -> CMat {
    let c = |re: f64, im: f64| Complex64::new(re, im);
    match which {
        'i' => Array2::eye(2),
        'x' => ndarray::array![[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        'y' => ndarray::array![[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
        'z' => ndarray::array![[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
        _ => unreachable!(),
    }
}

/// Dense matrix of a Pauli string; site index = qubit index, qubit 0 is the
/// most significant bit (matching `StateVector`).
pub fn pauli_string(l: usize, ops: &[(usize, char)]) -> CMat {
    let mut factors: Vec<char> = vec!['i'; l];
    for &(site, op) in ops {
        factors[site] = op;
    }
    let mut out = pauli(factors[0]);
    for &f in &factors[1..] {
        out = kron(&out, &pauli(f));
    }
    out
}

/// Jordan-Wigner Majorana operators: γ_{2j} = (∏_{k<j} Z_k) X_j,
/// γ_{2j+1} = (∏_{k<j} Z_k) Y_j.
pub fn majorana_matrices(l: usize) -> Vec<CMat> {
    let mut out = Vec::with_capacity(2 * l);
    for j in 0..l {
        for p in ['x', 'y'] {
            let mut ops: Vec<(usize, char)> = (0..j).map(|k| (k, 'z')).collect();
            ops.push((j, p));
            out.push(pauli_string(l, &ops));
        }
    }
    out
}

/// Reconstruct the dense density matrix of a fermionic Gaussian state from
/// its Majorana correlation matrix: with G = O Λ Oᵀ and rotated Majoranas
/// Γ_a = Σ_i O_{ia} γ_i, the state is ∏_k ½(I + i ε_k Γ_{2k} Γ_{2k+1}).
pub fn gaussian_to_dense(g: &CorrelationMatrix) -> CMat {
    let l = g.num_sites();
    let d = 1usize << l;
    let gammas = majorana_matrices(l);
    let schur = g.schur().expect("schur");
    let o = &schur.orthogonal;
    let rotated: Vec<CMat> = (0..2 * l)
        .map(|a| {
            let mut acc: CMat = Array2::zeros((d, d));
            for (i, gi) in gammas.iter().enumerate() {
                let w = Complex64::new(o[[i, a]], 0.0);
                acc = acc + gi.mapv(|x| x * w);
            }
            acc
        })
        .collect();
    let mut rho: CMat = Array2::eye(d);
    for (k, &eps) in schur.eps.iter().enumerate() {
        let pair = rotated[2 * k].dot(&rotated[2 * k + 1]);
        let eye: CMat = Array2::eye(d);
        let factor = (&eye + &pair.mapv(|x| Complex64::i() * eps * x)).mapv(|x| 0.5 * x);
        rho = rho.dot(&factor);
    }
    // commuting (1 ± ε_k)/2 eigenvalues multiply out to unit trace
    rho
}

/// ⟨ψ| P |ψ⟩ for a Pauli tableau row, brute force over amplitudes.
pub fn pauli_expectation(psi: &StateVector, row: &PauliRow) -> Complex64 {
    let l = psi.num_qubits();
    let amps = psi.amplitudes();
    let mut acc = Complex64::new(0.0, 0.0);
    for (n, amp) in amps.iter().enumerate() {
        let mut m = n;
        let mut phase = Complex64::i().powu(row.p as u32);
        for q in 0..l {
            let bit = 1usize << (l - 1 - q);
            if row.get_z(q) && n & bit != 0 {
                phase = -phase;
            }
            if row.get_x(q) {
                m ^= bit;
            }
        }
        acc += amps[m].conj() * phase * amp;
    }
    acc
}
