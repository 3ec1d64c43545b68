//! Entropies and recovery fidelity of stabilizer states via GF(2) ranks.
//!
//! For a pure stabilizer state on L qubits and a region R, the subgroup G_R
//! of stabilizers supported inside R has log₂|G_R| = L − rank of the rows
//! restricted to the complement of R, and S_R = |R| − log₂|G_R| bits.

use crate::error::{Error, Result};
use crate::region::{check_disjoint, Region};

use super::tableau::StabilizerTableau;

/// Rank of bit-packed rows over GF(2); consumes the rows.
pub fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let words = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..words * 64 {
        let (w, b) = (col / 64, col % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] >> b & 1 == 1 {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// log₂|G_R|: number of independent stabilizers supported entirely in R.
pub fn log2_group_order(tableau: &StabilizerTableau, region: &Region) -> Result<usize> {
    let l = tableau.num_qubits();
    region.check_within(l)?;
    let complement: Vec<usize> = (0..l).filter(|q| !region.contains(*q)).collect();
    let words = (2 * complement.len()).div_ceil(64).max(1);
    let rows: Vec<Vec<u64>> = tableau
        .stabilizers()
        .iter()
        .map(|row| {
            let mut packed = vec![0u64; words];
            for (k, &q) in complement.iter().enumerate() {
                if row.get_x(q) {
                    packed[2 * k / 64] |= 1 << (2 * k % 64);
                }
                if row.get_z(q) {
                    packed[(2 * k + 1) / 64] |= 1 << ((2 * k + 1) % 64);
                }
            }
            packed
        })
        .collect();
    Ok(l - gf2_rank(rows))
}

/// Entanglement entropy of region R in bits (an integer for pure stabilizer
/// states).
pub fn region_entropy(tableau: &StabilizerTableau, region: &Region) -> Result<usize> {
    Ok(region.len() - log2_group_order(tableau, region)?)
}

/// I(A : C | B) in bits. The regions need not cover the system; anything
/// outside A∪B∪C is traced out.
pub fn cmi_stabilizer(
    tableau: &StabilizerTableau,
    a: &Region,
    b: &Region,
    c: &Region,
) -> Result<i64> {
    check_disjoint(&[a, b, c])?;
    let ab = a.union(b)?;
    let bc = b.union(c)?;
    let abc = ab.union(c)?;
    let g = |r: &Region| log2_group_order(tableau, r).map(|v| v as i64);
    // group-order route: sizes |AB|+|BC|−|B|−|ABC| cancel
    Ok(g(&abc)? + g(b)? - g(&ab)? - g(&bc)?)
}

/// Best rotated-Petz recovery fidelity after erasing A. For stabilizer
/// states the optimum is t-independent and saturates the bound exactly:
/// F = 2^{−I(A:C|B)/2}, via |G̃_ABC| = |G_AB||G_BC|/|G_B|.
///
/// Cross-checked internally against the entropy route S_R = |R| − log₂|G_R|.
pub fn petz_fidelity_stabilizer(
    tableau: &StabilizerTableau,
    a: &Region,
    b: &Region,
    c: &Region,
) -> Result<f64> {
    let neg_log2_f2 = cmi_stabilizer(tableau, a, b, c)?;
    // independent entropy-route evaluation of the same quantity
    let ab = a.union(b)?;
    let bc = b.union(c)?;
    let abc = ab.union(c)?;
    let s = |r: &Region| region_entropy(tableau, r).map(|v| v as i64);
    let cmi_entropy = s(&ab)? + s(&bc)? - s(b)? - s(&abc)?;
    if cmi_entropy != neg_log2_f2 {
        return Err(Error::Numerical(format!(
            "group-order CMI {neg_log2_f2} disagrees with entropy CMI {cmi_entropy}"
        )));
    }
    if neg_log2_f2 < 0 {
        return Err(Error::Numerical(format!(
            "negative conditional mutual information {neg_log2_f2}"
        )));
    }
    Ok(0.5_f64.powf(neg_log2_f2 as f64 / 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::RegionLabel;
    use crate::stabilizer::tableau::PauliRow;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn region(sites: Vec<usize>, label: RegionLabel) -> Region {
        Region::new(sites, label).unwrap()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(gf2_rank(vec![]), 0);
        assert_eq!(gf2_rank(vec![vec![0b101], vec![0b011], vec![0b110]]), 2);
        assert_eq!(gf2_rank(vec![vec![0b101], vec![0b011], vec![0b111]]), 3);
        // multi-word
        let mut r1 = vec![0u64; 2];
        r1[1] = 1 << 5;
        let r2 = vec![1u64, 0];
        assert_eq!(gf2_rank(vec![r1.clone(), r2, r1]), 2);
    }

    #[test]
    fn product_state_entropies_vanish() {
        let t = StabilizerTableau::zero_state(6);
        for q in 0..6 {
            let r = region(vec![q], RegionLabel::A);
            assert_eq!(region_entropy(&t, &r).unwrap(), 0);
        }
        let r = region(vec![0, 2, 4], RegionLabel::A);
        assert_eq!(region_entropy(&t, &r).unwrap(), 0);
    }

    #[test]
    fn ghz_entropies_and_cmi() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        let mut t = StabilizerTableau::zero_state(3);
        let xxx = PauliRow::from_supports(3, &[0, 1, 2], &[], false);
        t.measure_pauli(&xxx, Some(0), &mut rng).unwrap();
        // any single qubit of GHZ has S = 1 bit
        for q in 0..3 {
            assert_eq!(
                region_entropy(&t, &region(vec![q], RegionLabel::A)).unwrap(),
                1
            );
        }
        assert_eq!(
            region_entropy(&t, &region(vec![0, 1, 2], RegionLabel::A)).unwrap(),
            0
        );
        // GHZ is not a quantum Markov chain: S_AB = S_BC = S_B = 1,
        // S_ABC = 0, so I(A:C|B) = 1 bit and F = 2^{-1/2}
        let (a, b, c) = (
            region(vec![0], RegionLabel::A),
            region(vec![1], RegionLabel::B),
            region(vec![2], RegionLabel::C),
        );
        assert_eq!(cmi_stabilizer(&t, &a, &b, &c).unwrap(), 1);
        let f = petz_fidelity_stabilizer(&t, &a, &b, &c).unwrap();
        assert!((f - 0.5_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn bell_pairs_give_maximal_cmi() {
        // Bell pairs (0,2) and (1,3): A={0}, B={}, wait — use A={0}, B={1},
        // C={2}: qubit 0 is maximally entangled with 2, B is decoupled.
        let mut rng = ChaCha12Rng::seed_from_u64(12);
        let mut t = StabilizerTableau::zero_state(4);
        for (u, v) in [(0usize, 2usize), (1, 3)] {
            let xx = PauliRow::from_supports(4, &[u, v], &[], false);
            t.measure_pauli(&xx, Some(0), &mut rng).unwrap();
        }
        t.check_valid().unwrap();
        let (a, b, c) = (
            region(vec![0], RegionLabel::A),
            region(vec![1], RegionLabel::B),
            region(vec![2], RegionLabel::C),
        );
        // I(A:C|B) = I(A:C) = 2 S(A) = 2 bits
        assert_eq!(cmi_stabilizer(&t, &a, &b, &c).unwrap(), 2);
        let f = petz_fidelity_stabilizer(&t, &a, &b, &c).unwrap();
        assert!((f - 0.5).abs() < 1e-15);
    }

    #[test]
    fn entropy_of_complement_matches_for_pure_states() {
        let mut rng = ChaCha12Rng::seed_from_u64(13);
        let l = 8;
        let (t, _) = crate::stabilizer::run_clifford_mipt(l, 0.1, 4 * l, &mut rng).unwrap();
        for cut in 1..l {
            let r = region((0..cut).collect(), RegionLabel::A);
            let rc = region((cut..l).collect(), RegionLabel::C);
            assert_eq!(
                region_entropy(&t, &r).unwrap(),
                region_entropy(&t, &rc).unwrap()
            );
        }
    }
}
