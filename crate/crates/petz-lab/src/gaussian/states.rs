//! Ground, thermal, critical-Ising and chiral correlation matrices.

use std::f64::consts::PI;

use super::schur::schur_decompose;
use super::{CorrelationMatrix, TOL_DEGENERATE};
use crate::error::{Error, Result};
use crate::linalg::RMat;

/// H = (i/2) Σ M_ij γ_i γ_j with M real antisymmetric.
#[derive(Debug, Clone)]
pub struct QuadraticHamiltonian {
    m: RMat,
}

impl QuadraticHamiltonian {
    pub fn new(m: RMat) -> Result<Self> {
        let n = m.nrows();
        if m.ncols() != n || n % 2 != 0 || n == 0 {
            return Err(Error::invalid(
                "quadratic Hamiltonian coefficient matrix must be square with even dimension",
            ));
        }
        let asym = m
            .iter()
            .zip(m.t().iter())
            .fold(0.0_f64, |mx, (a, b)| mx.max((a + b).abs()));
        if asym > 1e-10 {
            return Err(Error::invalid("coefficient matrix must be antisymmetric"));
        }
        Ok(QuadraticHamiltonian {
            m: (&m - &m.t()).mapv(|x| 0.5 * x),
        })
    }

    pub fn coeff(&self) -> &RMat {
        &self.m
    }

    pub fn num_sites(&self) -> usize {
        self.m.nrows() / 2
    }

    /// Ground-state correlation matrix. With the ε ≥ 0 Schur convention every
    /// mode sits in the lower of its two parity states: ε^G_k = −1 in the
    /// eigenmode basis of M.
    pub fn ground_state(&self) -> Result<CorrelationMatrix> {
        let s = schur_decompose(&self.m)?;
        for (k, &e) in s.eps.iter().enumerate() {
            if e < TOL_DEGENERATE {
                return Err(Error::DegenerateGroundState { index: k, value: e });
            }
        }
        let g = s.conjugate_blocks(|_| [[0.0, -1.0], [1.0, 0.0]]);
        Ok(CorrelationMatrix::antisymmetrize(g))
    }

    /// E_GS = −Σ_k ε^M_k (with ε ≥ 0).
    pub fn ground_state_energy(&self) -> Result<f64> {
        Ok(-schur_decompose(&self.m)?.eps.iter().sum::<f64>())
    }

    /// Thermal state e^{−βH}/Z: same eigenmodes, ε^G_k = −tanh(β ε^M_k).
    pub fn thermal_state(&self, beta: f64) -> Result<CorrelationMatrix> {
        if beta < 0.0 || beta.is_nan() {
            return Err(Error::invalid("inverse temperature must be non-negative"));
        }
        if beta.is_infinite() {
            return self.ground_state();
        }
        let s = schur_decompose(&self.m)?;
        let mut g = RMat::zeros(self.m.raw_dim());
        let o = &s.orthogonal;
        let n = self.m.nrows();
        let mut lam = RMat::zeros((n, n));
        for (k, &e) in s.eps.iter().enumerate() {
            let v = -(beta * e).tanh();
            lam[[2 * k, 2 * k + 1]] = v;
            lam[[2 * k + 1, 2 * k]] = -v;
        }
        g.assign(&o.dot(&lam).dot(&o.t()));
        Ok(CorrelationMatrix::antisymmetrize(g))
    }
}

/// Critical transverse-field Ising chain in Majorana form with Neveu-Schwarz
/// (antiperiodic) boundary: H = (i/2) Σ_k (γ_k γ_{k+1} − γ_{k+1} γ_k),
/// γ_{2L+1} = −γ_1.
pub fn ising_critical_hamiltonian(num_sites: usize) -> Result<QuadraticHamiltonian> {
    if num_sites < 2 {
        return Err(Error::invalid("need at least two sites"));
    }
    let n = 2 * num_sites;
    let mut m = RMat::zeros((n, n));
    for k in 0..n - 1 {
        m[[k, k + 1]] = 1.0;
        m[[k + 1, k]] = -1.0;
    }
    m[[n - 1, 0]] = -1.0;
    m[[0, n - 1]] = 1.0;
    QuadraticHamiltonian::new(m)
}

/// Closed-form Ising CFT ground-state correlation matrix:
/// G_{jl} = 1/[L sin(π(j−l)/(2L))] for odd j−l, zero otherwise.
pub fn ising_cft_correlation(num_sites: usize) -> Result<CorrelationMatrix> {
    if num_sites < 2 {
        return Err(Error::invalid("need at least two sites"));
    }
    let l = num_sites as f64;
    let n = 2 * num_sites;
    let mut g = RMat::zeros((n, n));
    for j in 0..n {
        for k in 0..n {
            let d = j as i64 - k as i64;
            if d.rem_euclid(2) == 1 {
                g[[j, k]] = 1.0 / (l * (PI * d as f64 / (2.0 * l)).sin());
            }
        }
    }
    Ok(CorrelationMatrix::antisymmetrize(g))
}

/// Chiral state: left-movers in the ground state, right-movers thermal at
/// β_R. G^chiral_{jl} = −G^Ising_{jl} + (2/L) Σ_n φ_n sin[(π/L)(n+½)(j−l)],
/// with φ_n = 1 for n ≥ L/2 and 1/(1+e^{−β_R sin p_n}) below.
pub fn chiral_correlation(num_sites: usize, beta_r: f64) -> Result<CorrelationMatrix> {
    if num_sites % 2 != 0 || num_sites < 2 {
        return Err(Error::invalid("chiral construction needs even L ≥ 2"));
    }
    if !(beta_r > 0.0) {
        return Err(Error::invalid("beta_R must be positive"));
    }
    let l = num_sites as f64;
    let phi: Vec<f64> = (0..num_sites)
        .map(|n| {
            if n >= num_sites / 2 {
                1.0
            } else {
                let p = PI / l * (n as f64 + 0.5);
                1.0 / (1.0 + (-beta_r * p.sin()).exp())
            }
        })
        .collect();
    let ising = ising_cft_correlation(num_sites)?;
    let nmaj = 2 * num_sites;
    let mut g = RMat::zeros((nmaj, nmaj));
    for j in 0..nmaj {
        for k in 0..nmaj {
            let d = (j as i64 - k as i64) as f64;
            let mut s = 0.0;
            for (n, &ph) in phi.iter().enumerate() {
                s += ph * (PI / l * (n as f64 + 0.5) * d).sin();
            }
            g[[j, k]] = -ising.matrix()[[j, k]] + 2.0 / l * s;
        }
    }
    Ok(CorrelationMatrix::antisymmetrize(g))
}
