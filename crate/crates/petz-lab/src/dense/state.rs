//! Dense statevector over L qubits. Qubit i maps to bit (L−1−i) of the
//! amplitude index, so qubit 0 is the most significant bit and contiguous
//! regions A,B,C,D correspond to row-major tensor axes.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::CMat;

/// Probabilities below this are treated as forbidden outcomes.
pub const TOL_PROB: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct StateVector {
    num_qubits: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn zero_state(num_qubits: usize) -> Self {
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        StateVector { num_qubits, amps }
    }

    pub fn basis_state(num_qubits: usize, bits: &[u8]) -> Result<Self> {
        if bits.len() != num_qubits {
            return Err(Error::invalid("bit string length mismatch"));
        }
        let mut idx = 0usize;
        for (q, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::invalid("bits must be 0 or 1"));
            }
            idx |= (b as usize) << (num_qubits - 1 - q);
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << num_qubits];
        amps[idx] = Complex64::new(1.0, 0.0);
        Ok(StateVector { num_qubits, amps })
    }

    /// Wrap an explicit amplitude vector; must have length 2^L and unit norm.
    pub fn from_amplitudes(num_qubits: usize, amps: Vec<Complex64>) -> Result<Self> {
        if amps.len() != 1 << num_qubits {
            return Err(Error::invalid("amplitude vector length must be 2^L"));
        }
        let s = StateVector { num_qubits, amps };
        if (s.norm() - 1.0).abs() > 1e-10 {
            return Err(Error::invalid("amplitude vector is not normalized"));
        }
        Ok(s)
    }

    /// |0101…⟩ — half filling for the U(1)-symmetric ensemble.
    pub fn neel(num_qubits: usize) -> Self {
        let bits: Vec<u8> = (0..num_qubits).map(|q| (q % 2) as u8).collect();
        StateVector::basis_state(num_qubits, &bits).expect("valid bits")
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalize(&mut self) -> Result<()> {
        let n = self.norm();
        if n < TOL_PROB {
            return Err(Error::Numerical("state norm underflow".into()));
        }
        for c in &mut self.amps {
            *c /= n;
        }
        Ok(())
    }

    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.num_qubits != other.num_qubits {
            return Err(Error::invalid("qubit count mismatch"));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    fn bit(&self, q: usize) -> usize {
        1 << (self.num_qubits - 1 - q)
    }

    /// Apply a 4×4 unitary on qubits (a, b); a is the high bit of the
    /// gate's basis ordering |q_a q_b⟩.
    pub fn apply_two_qubit(&mut self, u: &CMat, a: usize, b: usize) -> Result<()> {
        if a == b || a >= self.num_qubits || b >= self.num_qubits {
            return Err(Error::invalid("bad qubit pair"));
        }
        if u.shape() != [4, 4] {
            return Err(Error::invalid("two-qubit gate must be 4x4"));
        }
        let (ba, bb) = (self.bit(a), self.bit(b));
        for n in 0..self.amps.len() {
            if n & ba != 0 || n & bb != 0 {
                continue;
            }
            let idx = [n, n | bb, n | ba, n | ba | bb];
            let old = idx.map(|i| self.amps[i]);
            for (r, &i) in idx.iter().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for (c, &o) in old.iter().enumerate() {
                    acc += u[[r, c]] * o;
                }
                self.amps[i] = acc;
            }
        }
        Ok(())
    }

    pub fn prob_zero(&self, q: usize) -> f64 {
        let bq = self.bit(q);
        self.amps
            .iter()
            .enumerate()
            .filter(|(n, _)| n & bq == 0)
            .map(|(_, c)| c.norm_sqr())
            .sum()
    }

    fn project(&mut self, q: usize, outcome: u8, prob: f64) {
        let bq = self.bit(q);
        let keep_set = outcome == 1;
        let scale = 1.0 / prob.sqrt();
        for (n, c) in self.amps.iter_mut().enumerate() {
            if (n & bq != 0) == keep_set {
                *c *= scale;
            } else {
                *c = Complex64::new(0.0, 0.0);
            }
        }
    }

    /// Born-sampled Z measurement on qubit q; state projected + renormalized.
    pub fn measure_z(&mut self, q: usize, rng: &mut impl Rng) -> Result<u8> {
        if q >= self.num_qubits {
            return Err(Error::invalid("qubit out of range"));
        }
        let p0 = self.prob_zero(q).clamp(0.0, 1.0);
        let outcome = if rng.gen::<f64>() < p0 { 0 } else { 1 };
        let prob = if outcome == 0 { p0 } else { 1.0 - p0 };
        if prob < TOL_PROB {
            return Err(Error::ForbiddenOutcome {
                site: q,
                prob,
            });
        }
        self.project(q, outcome, prob);
        Ok(outcome)
    }

    /// Forced-outcome measurement (for replaying recorded trajectories).
    pub fn measure_z_forced(&mut self, q: usize, outcome: u8) -> Result<()> {
        let p0 = self.prob_zero(q).clamp(0.0, 1.0);
        let prob = if outcome == 0 { p0 } else { 1.0 - p0 };
        if prob < TOL_PROB {
            return Err(Error::ForbiddenOutcome { site: q, prob });
        }
        self.project(q, outcome & 1, prob);
        Ok(())
    }

    /// ⟨Σ_i Z_i⟩.
    pub fn total_z(&self) -> f64 {
        let l = self.num_qubits;
        self.amps
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let ones = (n & ((1 << l) - 1)).count_ones() as f64;
                (l as f64 - 2.0 * ones) * c.norm_sqr()
            })
            .sum()
    }
}
