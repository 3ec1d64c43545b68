//! The three backends computing the same numbers.
//!
//! A Clifford circuit is run on the stabilizer backend and replayed as an
//! exact statevector; a small Gaussian thermal state is checked against the
//! dense Petz pipeline through its correlation matrix. Agreement to 1e-7
//! is the merge gate for any numerical change (see tests/acceptance.rs).

use ndarray::Array2;
use petz_lab::dense::{cmi_dense, petz_fidelity_direct, replay_clifford_record, uhlmann_fidelity_curve, Partition};
use petz_lab::gaussian::{cmi as cmi_gaussian, petz_fidelity_curve, QuadraticHamiltonian};
use petz_lab::linalg::RMat;
use petz_lab::region::RegionLabel;
use petz_lab::stabilizer::{cmi_stabilizer, run_clifford_mipt};
use petz_lab::Region;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

fn main() -> petz_lab::Result<()> {
    let mut rng = ChaCha12Rng::seed_from_u64(4);

    // stabilizer vs dense on an 8-qubit monitored Clifford circuit
    let (tableau, record) = run_clifford_mipt(8, 0.2, 32, &mut rng)?;
    let psi = replay_clifford_record(&record)?;
    let (a, b, c) = (
        Region::interval(0, 2, RegionLabel::A),
        Region::interval(2, 3, RegionLabel::B),
        Region::interval(5, 2, RegionLabel::C),
    );
    let cmi_s = cmi_stabilizer(&tableau, &a, &b, &c)? as f64;
    let cmi_d = cmi_dense(&psi, &a, &b, &c)?;
    let f_d = uhlmann_fidelity_curve(&psi, Partition::new(2, 3, 2)?, &[0.0])?[0];
    println!("clifford L=8:  CMI stabilizer = {cmi_s}, dense = {cmi_d:.10}");
    println!("               F0 dense = {f_d:.10}, 2^(-CMI/2) = {:.10}", 0.5_f64.powf(cmi_s / 2.0));

    // gaussian vs dense on a 4-site random quadratic Hamiltonian
    let n = 8;
    let raw = RMat::from_shape_fn((n, n), |_| rng.gen_range(-1.0_f64..1.0));
    let h = QuadraticHamiltonian::new((&raw - &raw.t()).mapv(|x| 0.5 * x))?;
    let g = h.thermal_state(1.0)?;
    let rho = jordan_wigner_density(&g);
    let (a, b, c) = (
        Region::interval(0, 1, RegionLabel::A),
        Region::interval(1, 2, RegionLabel::B),
        Region::interval(3, 1, RegionLabel::C),
    );
    let cmi_g = cmi_gaussian(&g, &a, &b, &c)?;
    let curve = petz_fidelity_curve(&g, &a, &b, &c, &[-1.0, 0.0, 1.0])?;
    println!("\nthermal 4-site state: CMI gaussian = {cmi_g:.10}");
    for (t, f_g) in curve {
        let f_d = petz_fidelity_direct(&rho, (2, 4, 2), t)?;
        println!("  t = {t:+.1}: F gaussian = {f_g:.10}, dense = {f_d:.10}");
    }
    Ok(())
}

/// Dense density matrix from the correlation matrix via Jordan-Wigner:
/// rho = prod_k (I + i eps_k Gamma_2k Gamma_2k+1)/2 in the rotated basis.
fn jordan_wigner_density(g: &petz_lab::gaussian::CorrelationMatrix) -> petz_lab::linalg::CMat {
    use num_complex::Complex64;
    use petz_lab::linalg::CMat;
    let l = g.num_sites();
    let d = 1usize << l;
    // site-j Majoranas with Z strings; qubit 0 is the most significant bit
    let mut gammas: Vec<CMat> = Vec::new();
    let eye: CMat = Array2::eye(2);
    let x = ndarray::array![[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)], [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]];
    let y = ndarray::array![[Complex64::new(0.0, 0.0), Complex64::new(0.0, -1.0)], [Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)]];
    let z = ndarray::array![[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], [Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)]];
    let kron = |a: &CMat, b: &CMat| -> CMat {
        let (ar, ac, br, bc) = (a.nrows(), a.ncols(), b.nrows(), b.ncols());
        let mut out: CMat = Array2::zeros((ar * br, ac * bc));
        for i in 0..ar {
            for j in 0..ac {
                for k in 0..br {
                    for m in 0..bc {
                        out[[i * br + k, j * bc + m]] = a[[i, j]] * b[[k, m]];
                    }
                }
            }
        }
        out
    };
    for j in 0..l {
        for p in [&x, &y] {
            let mut op: CMat = Array2::eye(1);
            for q in 0..l {
                let factor = if q < j { &z } else if q == j { p } else { &eye };
                op = kron(&op, factor);
            }
            gammas.push(op);
        }
    }
    let schur = g.schur().expect("schur");
    let o = &schur.orthogonal;
    let rotated: Vec<CMat> = (0..2 * l)
        .map(|a| {
            let mut acc: CMat = Array2::zeros((d, d));
            for (i, gi) in gammas.iter().enumerate() {
                acc = acc + gi.mapv(|v| v * Complex64::new(o[[i, a]], 0.0));
            }
            acc
        })
        .collect();
    let mut rho: CMat = Array2::eye(d);
    for (k, &eps) in schur.eps.iter().enumerate() {
        let pair = rotated[2 * k].dot(&rotated[2 * k + 1]);
        let eye_d: CMat = Array2::eye(d);
        let factor = (&eye_d + &pair.mapv(|v| Complex64::i() * eps * v)).mapv(|v| 0.5 * v);
        rho = rho.dot(&factor);
    }
    rho
}
