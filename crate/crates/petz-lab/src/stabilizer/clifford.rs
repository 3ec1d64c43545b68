//! Uniform sampling of two-qubit Clifford gates, represented by the images
//! of the generators X_a, Z_a, X_b, Z_b under conjugation.
//!
//! A gate is a symplectic basis of GF(2)⁴ (720 choices) plus a sign for each
//! image (2⁴), i.e. 11 520 gates — the two-qubit Clifford group modulo
//! global phase.

use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::CMat;

/// Two-qubit Hermitian Pauli i^p X^x Z^z; bit 0 of x/z addresses the first
/// qubit of the gate, bit 1 the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pauli2 {
    pub x: u8,
    pub z: u8,
    pub p: u8,
}

impl Pauli2 {
    pub fn hermitian(x: u8, z: u8, neg: bool) -> Self {
        let p = (((x & z).count_ones() + if neg { 2 } else { 0 }) % 4) as u8;
        Pauli2 { x, z, p }
    }

    pub fn anticommutes(&self, other: &Pauli2) -> bool {
        ((self.x & other.z).count_ones() + (self.z & other.x).count_ones()) % 2 == 1
    }

    pub fn sign(&self) -> i8 {
        let k = (self.x & self.z).count_ones() as i64;
        if (self.p as i64 - k).rem_euclid(4) == 0 {
            1
        } else {
            -1
        }
    }

    /// 4×4 matrix; the first gate qubit is the high bit of the basis index.
    pub fn matrix(&self) -> CMat {
        let one = |x: bool, z: bool| -> CMat {
            let c = |re: f64| Complex64::new(re, 0.0);
            match (x, z) {
                (false, false) => Array2::eye(2),
                (true, false) => ndarray::array![[c(0.0), c(1.0)], [c(1.0), c(0.0)]],
                (false, true) => ndarray::array![[c(1.0), c(0.0)], [c(0.0), c(-1.0)]],
                (true, true) => ndarray::array![[c(0.0), c(-1.0)], [c(1.0), c(0.0)]], // XZ
            }
        };
        let ma = one(self.x & 1 == 1, self.z & 1 == 1);
        let mb = one(self.x >> 1 & 1 == 1, self.z >> 1 & 1 == 1);
        let phase = Complex64::i().powu(self.p as u32);
        let mut out = Array2::zeros((4, 4));
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[[2 * i + k, 2 * j + l]] = phase * ma[[i, j]] * mb[[k, l]];
                    }
                }
            }
        }
        out
    }
}

/// Images of (X_a, Z_a, X_b, Z_b) under conjugation by the gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CliffordGate2 {
    pub img: [Pauli2; 4],
}

impl CliffordGate2 {
    pub fn identity() -> Self {
        CliffordGate2 {
            img: [
                Pauli2::hermitian(1, 0, false),
                Pauli2::hermitian(0, 1, false),
                Pauli2::hermitian(2, 0, false),
                Pauli2::hermitian(0, 2, false),
            ],
        }
    }

    /// The images must form a symplectic basis with Hermitian signs.
    pub fn check(&self) -> Result<()> {
        for (i, a) in self.img.iter().enumerate() {
            if a.x == 0 && a.z == 0 {
                return Err(Error::invalid("identity image in Clifford gate"));
            }
            if (a.p as u32 + (a.x & a.z).count_ones()) % 2 != 0 {
                return Err(Error::invalid("non-Hermitian image in Clifford gate"));
            }
            for (j, b) in self.img.iter().enumerate().skip(i + 1) {
                let want = (i, j) == (0, 1) || (i, j) == (2, 3);
                if a.anticommutes(b) != want {
                    return Err(Error::invalid(format!(
                        "images {i},{j} break the symplectic pairing"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Unitary matrix realizing the gate (global phase fixed by making the
    /// largest-magnitude entry of the first column real positive).
    pub fn unitary(&self) -> Result<CMat> {
        // |ψ₀⟩ = U|00⟩ is stabilized by img(Z_a) and img(Z_b)
        let proj = {
            let eye: CMat = Array2::eye(4);
            let pa = (&eye + &self.img[1].matrix()).mapv(|c| 0.5 * c);
            let pb = (&eye + &self.img[3].matrix()).mapv(|c| 0.5 * c);
            pa.dot(&pb)
        };
        let mut psi0 = None;
        for col in 0..4 {
            let v = proj.column(col).to_owned();
            let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-6 {
                psi0 = Some(v.mapv(|c| c / norm));
                break;
            }
        }
        let psi0 = psi0.ok_or_else(|| Error::Numerical("stabilized state not found".into()))?;
        let xa = self.img[0].matrix();
        let xb = self.img[2].matrix();
        let mut u: CMat = Array2::zeros((4, 4));
        for (col, state) in [
            psi0.clone(),
            xb.dot(&psi0),
            xa.dot(&psi0),
            xa.dot(&xb.dot(&psi0)),
        ]
        .into_iter()
        .enumerate()
        {
            u.column_mut(col).assign(&state);
        }
        // fix global phase deterministically
        let (mut best, mut mag) = (Complex64::new(1.0, 0.0), 0.0);
        for c in u.column(0) {
            if c.norm() > mag {
                mag = c.norm();
                best = *c;
            }
        }
        let phase = best.conj() / best.norm();
        Ok(u.mapv(|c| c * phase))
    }
}

fn sp(a: (u8, u8), b: (u8, u8)) -> bool {
    ((a.0 & b.1).count_ones() + (a.1 & b.0).count_ones()) % 2 == 1
}

/// Uniform over all 11 520 two-qubit Cliffords (mod global phase).
pub fn random_two_qubit_clifford(rng: &mut impl Rng) -> CliffordGate2 {
    let draw = |rng: &mut dyn rand::RngCore| -> (u8, u8) {
        let v: u8 = (rng.next_u32() & 15) as u8;
        (v & 3, v >> 2)
    };
    let f1 = loop {
        let v = draw(rng);
        if v != (0, 0) {
            break v;
        }
    };
    let g1 = loop {
        let v = draw(rng);
        if sp(f1, v) {
            break v;
        }
    };
    let f2 = loop {
        let v = draw(rng);
        if v != (0, 0) && !sp(f1, v) && !sp(g1, v) {
            break v;
        }
    };
    let g2 = loop {
        let v = draw(rng);
        if !sp(f1, v) && !sp(g1, v) && sp(f2, v) {
            break v;
        }
    };
    let signs: u8 = (rng.next_u32() & 15) as u8;
    let img = [(f1, 0), (g1, 1), (f2, 2), (g2, 3)]
        .map(|(v, k)| Pauli2::hermitian(v.0, v.1, signs >> k & 1 == 1));
    CliffordGate2 { img }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::max_abs;
    use ndarray::Array2;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;
    use std::collections::HashMap;

    #[test]
    fn sampled_gates_are_valid_and_seed_deterministic() {
        let mut r1 = ChaCha12Rng::seed_from_u64(7);
        let mut r2 = ChaCha12Rng::seed_from_u64(7);
        for _ in 0..500 {
            let g = random_two_qubit_clifford(&mut r1);
            g.check().unwrap();
            assert_eq!(g, random_two_qubit_clifford(&mut r2));
        }
    }

    #[test]
    fn unitary_realizes_the_images() {
        let mut rng = ChaCha12Rng::seed_from_u64(8);
        let gens = [
            Pauli2::hermitian(1, 0, false),
            Pauli2::hermitian(0, 1, false),
            Pauli2::hermitian(2, 0, false),
            Pauli2::hermitian(0, 2, false),
        ];
        for _ in 0..25 {
            let g = random_two_qubit_clifford(&mut rng);
            let u = g.unitary().unwrap();
            // unitarity
            let udu = u.t().mapv(|c| c.conj()).dot(&u);
            let eye: CMat = Array2::eye(4);
            assert!(max_abs(&(&udu - &eye).mapv(|c| c.norm())) < 1e-12);
            // conjugation relations
            for (p, img) in gens.iter().zip(&g.img) {
                let lhs = u.dot(&p.matrix()).dot(&u.t().mapv(|c| c.conj()));
                let diff = &lhs - &img.matrix();
                assert!(
                    max_abs(&diff.mapv(|c| c.norm())) < 1e-12,
                    "conjugation failed for {p:?} -> {img:?}"
                );
            }
        }
    }

    #[test]
    fn first_image_uniform_over_30_possibilities() {
        // marginal of img[0]: 15 non-identity Paulis × 2 signs, each 1/30
        let mut rng = ChaCha12Rng::seed_from_u64(9);
        let n = 60_000;
        let mut counts: HashMap<Pauli2, u32> = HashMap::new();
        for _ in 0..n {
            let g = random_two_qubit_clifford(&mut rng);
            *counts.entry(g.img[0]).or_insert(0) += 1;
        }
        assert_eq!(counts.len(), 30);
        let expect = n as f64 / 30.0;
        let chi2: f64 = counts
            .values()
            .map(|&c| (c as f64 - expect).powi(2) / expect)
            .sum();
        // df = 29; mean 29, sd √58 ≈ 7.6
        assert!(chi2 < 70.0, "chi2 = {chi2}");
    }

    #[test]
    fn full_group_is_reached() {
        let mut rng = ChaCha12Rng::seed_from_u64(10);
        let mut seen = std::collections::HashSet::new();
        // coupon-collector style coverage: 11520 classes, 2.4e5 draws cover
        // all with overwhelming probability
        for _ in 0..240_000 {
            seen.insert(random_two_qubit_clifford(&mut rng));
        }
        assert_eq!(seen.len(), 11_520);
    }

    #[test]
    fn pauli2_matrix_signs() {
        let y = Pauli2::hermitian(1, 1, false); // Y on first qubit
        let m = y.matrix();
        // Y⊗I with first qubit as high bit: entry (0,2) = -i
        assert!((m[[0, 2]] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
        assert!((m[[2, 0]] - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let mz = Pauli2::hermitian(0, 2, true); // -Z on second qubit
        let m = mz.matrix();
        assert!((m[[0, 0]] - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        assert!((m[[1, 1]] - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(mz.sign(), -1);
    }
}
