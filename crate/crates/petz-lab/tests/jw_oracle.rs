//! Validates the Jordan-Wigner reconstruction helper itself: dense density
//! matrices rebuilt from correlation matrices must reproduce the Majorana
//! two-point function, entropies, and purity.

mod common;

use common::{gaussian_to_dense, majorana_matrices};
use ndarray::Array2;
use num_complex::Complex64;
use petz_lab::dense::entropy_dense;
use petz_lab::gaussian::QuadraticHamiltonian;
use petz_lab::linalg::RMat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

fn random_hamiltonian(l: usize, rng: &mut impl Rng) -> QuadraticHamiltonian {
    let n = 2 * l;
    let raw = RMat::from_shape_fn((n, n), |_| rng.gen_range(-1.0..1.0));
    let m = (&raw - &raw.t()).mapv(|x| 0.5 * x);
    QuadraticHamiltonian::new(m).unwrap()
}

fn correlation_from_dense(rho: &Array2<Complex64>, l: usize) -> RMat {
    let gammas = majorana_matrices(l);
    let n = 2 * l;
    let mut g = RMat::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let prod = gammas[i].dot(&gammas[j]);
            let mut tr = Complex64::new(0.0, 0.0);
            for k in 0..rho.nrows() {
                for m in 0..rho.nrows() {
                    tr += rho[[k, m]] * prod[[m, k]];
                }
            }
            g[[i, j]] = (Complex64::i() * tr).re;
        }
    }
    g
}

#[test]
fn reconstruction_reproduces_the_correlation_matrix() {
    let mut rng = ChaCha12Rng::seed_from_u64(17);
    for l in [2usize, 3] {
        for beta in [0.7, 3.0] {
            let h = random_hamiltonian(l, &mut rng);
            let g = h.thermal_state(beta).unwrap();
            let rho = gaussian_to_dense(&g);
            let trace: f64 = (0..rho.nrows()).map(|i| rho[[i, i]].re).sum();
            assert!((trace - 1.0).abs() < 1e-10, "trace {trace}");
            let g_back = correlation_from_dense(&rho, l);
            for i in 0..2 * l {
                for j in 0..2 * l {
                    assert!(
                        (g_back[[i, j]] - g.matrix()[[i, j]]).abs() < 1e-9,
                        "l={l} beta={beta} G[{i},{j}]: {} vs {}",
                        g_back[[i, j]],
                        g.matrix()[[i, j]]
                    );
                }
            }
        }
    }
}

#[test]
fn entropies_match_between_backends() {
    let mut rng = ChaCha12Rng::seed_from_u64(18);
    for _ in 0..5 {
        let l = 3;
        let h = random_hamiltonian(l, &mut rng);
        let g = h.thermal_state(1.2).unwrap();
        let rho = gaussian_to_dense(&g);
        let s_dense = entropy_dense(&rho).unwrap();
        let s_gauss = g.entropy().unwrap();
        assert!(
            (s_dense - s_gauss).abs() < 1e-8,
            "entropy {s_dense} vs {s_gauss}"
        );
    }
}

#[test]
fn ground_state_reconstruction_is_pure() {
    let mut rng = ChaCha12Rng::seed_from_u64(19);
    let h = random_hamiltonian(3, &mut rng);
    let g = h.ground_state().unwrap();
    let rho = gaussian_to_dense(&g);
    // ρ² = ρ for pure states
    let rho2 = rho.dot(&rho);
    let defect = (&rho2 - &rho)
        .iter()
        .map(|c| c.norm())
        .fold(0.0_f64, f64::max);
    assert!(defect < 1e-9, "purity defect {defect}");
}
