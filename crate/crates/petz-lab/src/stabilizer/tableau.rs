//! Binary-symplectic stabilizer tableau (destabilizer + stabilizer rows,
//! bit-packed) with generic Pauli measurements.
//!
//! A row stores a Pauli as i^p X^x Z^z with p mod 4; rows kept in the
//! tableau are Hermitian, so their physical sign is
//! (−1)^{(p + |x∧z|)/2 mod 2}.

use rand::Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PauliRow {
    pub x: Vec<u64>,
    pub z: Vec<u64>,
    /// exponent of i in i^p X^x Z^z, mod 4
    pub p: u8,
}

fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(u, v)| (u & v).count_ones()).sum()
}

impl PauliRow {
    pub fn identity(words: usize) -> Self {
        PauliRow {
            x: vec![0; words],
            z: vec![0; words],
            p: 0,
        }
    }

    pub fn get_x(&self, q: usize) -> bool {
        self.x[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn get_z(&self, q: usize) -> bool {
        self.z[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn set_x(&mut self, q: usize, v: bool) {
        let (w, b) = (q / 64, q % 64);
        self.x[w] = self.x[w] & !(1 << b) | (v as u64) << b;
    }

    pub fn set_z(&mut self, q: usize, v: bool) {
        let (w, b) = (q / 64, q % 64);
        self.z[w] = self.z[w] & !(1 << b) | (v as u64) << b;
    }

    /// Hermitian Pauli with X on `xs`, Z on `zs` and overall sign (−1)^neg.
    pub fn from_supports(num_qubits: usize, xs: &[usize], zs: &[usize], neg: bool) -> Self {
        let words = num_qubits.div_ceil(64);
        let mut row = PauliRow::identity(words);
        for &q in xs {
            row.set_x(q, true);
        }
        for &q in zs {
            row.set_z(q, true);
        }
        // i^p X^x Z^z is Hermitian iff p ≡ |x∧z| (mod 4 up to sign choice)
        let k = popcount_and(&row.x, &row.z) % 4;
        row.p = ((k + if neg { 2 } else { 0 }) % 4) as u8;
        row
    }

    pub fn single_z(num_qubits: usize, q: usize) -> Self {
        PauliRow::from_supports(num_qubits, &[], &[q], false)
    }

    pub fn single_x(num_qubits: usize, q: usize) -> Self {
        PauliRow::from_supports(num_qubits, &[q], &[], false)
    }

    pub fn anticommutes(&self, other: &PauliRow) -> bool {
        (popcount_and(&self.x, &other.z) + popcount_and(&self.z, &other.x)) % 2 == 1
    }

    /// self ← self · other (operator product, phases tracked).
    pub fn mul_right(&mut self, other: &PauliRow) {
        let cross = popcount_and(&self.z, &other.x);
        self.p = ((self.p as u32 + other.p as u32 + 2 * cross) % 4) as u8;
        for w in 0..self.x.len() {
            self.x[w] ^= other.x[w];
            self.z[w] ^= other.z[w];
        }
    }

    pub fn is_identity_bits(&self) -> bool {
        self.x.iter().all(|&w| w == 0) && self.z.iter().all(|&w| w == 0)
    }

    pub fn same_bits(&self, other: &PauliRow) -> bool {
        self.x == other.x && self.z == other.z
    }

    /// Sign of the Hermitian operator: +1 or −1. Per qubit with both bits
    /// set, XZ = −iY, so i^p X^x Z^z = i^{p−k}·(sign-free Pauli word).
    pub fn sign(&self) -> Result<i8> {
        let k = popcount_and(&self.x, &self.z);
        match (self.p as i64 - k as i64).rem_euclid(4) {
            0 => Ok(1),
            2 => Ok(-1),
            _ => Err(Error::Numerical("non-Hermitian Pauli row".into())),
        }
    }
}

/// Aaronson-Gottesman-style tableau for a pure stabilizer state on L qubits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerTableau {
    num_qubits: usize,
    words: usize,
    destab: Vec<PauliRow>,
    stab: Vec<PauliRow>,
}

impl StabilizerTableau {
    /// |0…0⟩: stabilizers Z_i, destabilizers X_i.
    pub fn zero_state(num_qubits: usize) -> Self {
        let words = num_qubits.div_ceil(64);
        let mut destab = Vec::with_capacity(num_qubits);
        let mut stab = Vec::with_capacity(num_qubits);
        for q in 0..num_qubits {
            destab.push(PauliRow::single_x(num_qubits, q));
            stab.push(PauliRow::single_z(num_qubits, q));
        }
        StabilizerTableau {
            num_qubits,
            words,
            destab,
            stab,
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn stabilizers(&self) -> &[PauliRow] {
        &self.stab
    }

    /// Measure the Hermitian Pauli `op`. Returns (outcome, was_random).
    /// `forced` overrides the Born sample for the random branch; forcing a
    /// deterministic measurement to the wrong value is an error.
    pub fn measure_pauli(
        &mut self,
        op: &PauliRow,
        forced: Option<u8>,
        rng: &mut impl Rng,
    ) -> Result<(u8, bool)> {
        op.sign()?; // Hermiticity check
        let pivot = (0..self.num_qubits).find(|&i| self.stab[i].anticommutes(op));
        match pivot {
            Some(q) => {
                // Random outcome branch.
                let a = match forced {
                    Some(a) => a & 1,
                    None => rng.gen::<bool>() as u8,
                };
                let pivot_row = self.stab[q].clone();
                for i in 0..self.num_qubits {
                    if i != q && self.stab[i].anticommutes(op) {
                        self.stab[i].mul_right(&pivot_row);
                    }
                    if i != q && self.destab[i].anticommutes(op) {
                        self.destab[i].mul_right(&pivot_row);
                    }
                }
                // the old pivot anticommutes with op and (after the loop
                // above) commutes with every other stabilizer: it is the
                // destabilizer of the new stabilizer op
                self.destab[q] = pivot_row;
                let mut new_stab = op.clone();
                new_stab.p = (new_stab.p + 2 * a) % 4;
                self.stab[q] = new_stab;
                Ok((a, true))
            }
            None => {
                // Deterministic: op ∈ ±G; expand in stabilizer generators
                // using ⟨destab_i, stab_j⟩ = δ_ij.
                let mut acc = PauliRow::identity(self.words);
                for i in 0..self.num_qubits {
                    if self.destab[i].anticommutes(op) {
                        acc.mul_right(&self.stab[i]);
                    }
                }
                if !acc.same_bits(op) {
                    return Err(Error::Numerical(
                        "tableau inconsistency: deterministic measurement expansion failed".into(),
                    ));
                }
                let a = (((acc.p as i32 - op.p as i32).rem_euclid(4)) / 2) as u8;
                if let Some(f) = forced {
                    if f & 1 != a {
                        return Err(Error::ForbiddenOutcome {
                            site: usize::MAX,
                            prob: 0.0,
                        });
                    }
                }
                Ok((a, false))
            }
        }
    }

    pub fn measure_z(&mut self, q: usize, rng: &mut impl Rng) -> Result<u8> {
        if q >= self.num_qubits {
            return Err(Error::invalid(format!("qubit {q} out of range")));
        }
        let op = PauliRow::single_z(self.num_qubits, q);
        Ok(self.measure_pauli(&op, None, rng)?.0)
    }

    pub fn measure_z_forced(&mut self, q: usize, outcome: u8) -> Result<u8> {
        let op = PauliRow::single_z(self.num_qubits, q);
        let mut dummy = rand::rngs::mock::StepRng::new(0, 0);
        Ok(self.measure_pauli(&op, Some(outcome), &mut dummy)?.0)
    }

    /// Conjugate all rows by a two-qubit Clifford on (a, b), given the images
    /// of X_a, Z_a, X_b, Z_b as two-qubit Paulis (bit 0 ↔ a, bit 1 ↔ b).
    pub fn apply_clifford2(&mut self, gate: &super::clifford::CliffordGate2, a: usize, b: usize) {
        debug_assert!(a != b && a < self.num_qubits && b < self.num_qubits);
        for row in self.destab.iter_mut().chain(self.stab.iter_mut()) {
            let bits = [row.get_x(a), row.get_z(a), row.get_x(b), row.get_z(b)];
            if bits == [false; 4] {
                continue;
            }
            // product of images in the order X_a^{xa} Z_a^{za} X_b^{xb} Z_b^{zb}
            let (mut lx, mut lz, mut lp) = (0u8, 0u8, 0u32);
            for (k, &on) in bits.iter().enumerate() {
                if on {
                    let img = &gate.img[k];
                    lp += img.p as u32 + 2 * ((lz & img.x).count_ones());
                    lx ^= img.x;
                    lz ^= img.z;
                }
            }
            row.set_x(a, lx & 1 == 1);
            row.set_z(a, lz & 1 == 1);
            row.set_x(b, lx >> 1 & 1 == 1);
            row.set_z(b, lz >> 1 & 1 == 1);
            row.p = ((row.p as u32 + lp) % 4) as u8;
        }
    }

    /// Validity: stabilizers Hermitian, mutually commuting, independent; the
    /// destabilizer/stabilizer symplectic pairing ⟨d_i, s_j⟩ = δ_ij.
    pub fn check_valid(&self) -> Result<()> {
        let l = self.num_qubits;
        for i in 0..l {
            self.stab[i].sign()?;
            for j in 0..l {
                if self.stab[i].anticommutes(&self.stab[j]) {
                    return Err(Error::Numerical(format!(
                        "stabilizers {i} and {j} anticommute"
                    )));
                }
                let want = i == j;
                if self.destab[i].anticommutes(&self.stab[j]) != want {
                    return Err(Error::Numerical(format!(
                        "destabilizer pairing broken at ({i}, {j})"
                    )));
                }
            }
        }
        // independence follows from the pairing, but double-check the rank
        let rows: Vec<Vec<u64>> = self
            .stab
            .iter()
            .map(|r| {
                let mut v = r.x.clone();
                v.extend_from_slice(&r.z);
                v
            })
            .collect();
        if super::rank::gf2_rank(rows) != l {
            return Err(Error::Numerical("stabilizer rows not independent".into()));
        }
        Ok(())
    }
}
