//! Toric code on an Lx × Ly torus (qubits on edges) and the annular
//! partition used to extract the topological contribution to the
//! conditional mutual information.

use rand::rngs::mock::StepRng;

use crate::error::{Error, Result};
use crate::region::{Region, RegionLabel};

use super::tableau::{PauliRow, StabilizerTableau};

/// Horizontal edge leaving vertex (x, y) to the right.
fn h_edge(lx: usize, x: usize, y: usize) -> usize {
    2 * (y * lx + x)
}

/// Vertical edge leaving vertex (x, y) upward.
fn v_edge(lx: usize, x: usize, y: usize) -> usize {
    2 * (y * lx + x) + 1
}

/// Edges of the plaquette whose lower-left vertex is (x, y).
#[cfg_attr(not(test), allow(dead_code))]
fn plaquette_edges(lx: usize, ly: usize, x: usize, y: usize) -> [usize; 4] {
    [
        h_edge(lx, x, y),
        h_edge(lx, x, (y + 1) % ly),
        v_edge(lx, x, y),
        v_edge(lx, (x + 1) % lx, y),
    ]
}

/// Edges of the star at vertex (x, y).
fn star_edges(lx: usize, ly: usize, x: usize, y: usize) -> [usize; 4] {
    [
        h_edge(lx, x, y),
        h_edge(lx, (x + lx - 1) % lx, y),
        v_edge(lx, x, y),
        v_edge(lx, x, (y + ly - 1) % ly),
    ]
}

/// Toric code ground state with both Z logicals fixed to +1.
///
/// Built by forcing every star measurement to +1 on |0…0⟩; the plaquettes
/// and the two Z loops survive from the initial Z stabilizers, so the
/// resulting group is stars + plaquettes (one of each redundant) + logicals.
pub fn toric_code_state(lx: usize, ly: usize) -> Result<StabilizerTableau> {
    if lx < 2 || ly < 2 {
        return Err(Error::invalid(format!(
            "torus needs lx, ly >= 2, got {lx} x {ly}"
        )));
    }
    let n = 2 * lx * ly;
    let mut tableau = StabilizerTableau::zero_state(n);
    let mut rng = StepRng::new(0, 0); // forced outcomes only
    for y in 0..ly {
        for x in 0..lx {
            let star = PauliRow::from_supports(n, &star_edges(lx, ly, x, y), &[], false);
            tableau.measure_pauli(&star, Some(0), &mut rng)?;
        }
    }
    tableau.check_valid()?;
    Ok(tableau)
}

/// Annular (A, B, C) partition around the hole plaquette at (1, 1), built
/// from the two loop operators that wind around it: the Z loop on the
/// boundary of the 3×2 plaquette block (rows 1–2) and the X loop from the
/// product of the four stars at the hole's corners. A is the bottom arc of
/// both loops, C the top arc, B the two side arcs, so each loop is
/// supported in A∪B∪C but in no two-region union: I(A:C|B) = 2 bits and
/// F = 1/2 exactly. The hole's own edges stay outside the annulus so no
/// string operator can cut through it. Requires lx, ly >= 4 so the arcs do
/// not touch across the torus.
pub fn levin_wen_partition(lx: usize, ly: usize) -> Result<(Region, Region, Region)> {
    if lx < 4 || ly < 4 {
        return Err(Error::invalid(format!(
            "annular partition needs lx, ly >= 4, got {lx} x {ly}"
        )));
    }
    let h = |x, y| h_edge(lx, x, y);
    let v = |x, y| v_edge(lx, x, y);
    let a = vec![h(0, 1), h(1, 1), h(2, 1), v(1, 0), v(2, 0)];
    let b = vec![v(0, 1), v(0, 2), v(3, 1), v(3, 2), h(0, 2), h(2, 2)];
    let c = vec![h(0, 3), h(1, 3), h(2, 3), v(1, 2), v(2, 2)];
    Ok((
        Region::new(a, RegionLabel::A)?,
        Region::new(b, RegionLabel::B)?,
        Region::new(c, RegionLabel::C)?,
    ))
}
