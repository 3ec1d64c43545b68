//! On-site parity (Z) measurements of Gaussian states.
//!
//! P_{n,a} = (I + i(−1)^a γ_{2n-1}γ_{2n})/2 projects site n onto parity
//! (−1)^a. The update stays Gaussian and closes on the correlation matrix.

use rand::Rng;

use super::CorrelationMatrix;
use crate::error::{Error, Result};
use crate::linalg::RMat;

/// prob(a) below this means the outcome is forbidden.
pub const TOL_PROB: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementOutcome {
    pub site: usize,
    pub outcome: u8,
    pub probability: f64,
}

/// Born probability of outcome a at `site`: ½ + ((−1)^a/2) G_{2n,2n+1}.
pub fn outcome_probability(g: &CorrelationMatrix, site: usize, outcome: u8) -> Result<f64> {
    if site >= g.num_sites() {
        return Err(Error::invalid(format!("site {site} out of range")));
    }
    let sign = if outcome == 0 { 1.0 } else { -1.0 };
    Ok(0.5 + 0.5 * sign * g.matrix()[[2 * site, 2 * site + 1]])
}

/// Project onto the given outcome (no sampling).
pub fn parity_measure_forced(
    g: &CorrelationMatrix,
    site: usize,
    outcome: u8,
) -> Result<(CorrelationMatrix, MeasurementOutcome)> {
    let prob = outcome_probability(g, site, outcome)?;
    let sign = if outcome == 0 { 1.0 } else { -1.0 };
    let x = sign * g.matrix()[[2 * site, 2 * site + 1]];
    if 1.0 + x < TOL_PROB {
        return Err(Error::ForbiddenOutcome { site, prob });
    }

    let n = g.dim();
    let gm = g.matrix();
    let (r, c) = (2 * site, 2 * site + 1);
    // correction: (s/(1+x)) G[:,n-block] K G[n-block,:], K = [[0,1],[-1,0]]
    let coef = sign / (1.0 + x);
    let mut out = RMat::zeros((n, n));
    for i in 0..n {
        // (G[:,block] K)_i = (G_{i,r}, G_{i,c}) · K: col r ↦ −G_{i,c}? —
        // K columns: K[:,0] = (0,−1), K[:,1] = (1,0):
        let u0 = -gm[[i, c]];
        let u1 = gm[[i, r]];
        for j in 0..n {
            out[[i, j]] = gm[[i, j]] + coef * (u0 * gm[[r, j]] + u1 * gm[[c, j]]);
        }
    }
    // measured block: (−1)^a K; cross blocks vanish.
    for i in 0..n {
        out[[i, r]] = 0.0;
        out[[i, c]] = 0.0;
        out[[r, i]] = 0.0;
        out[[c, i]] = 0.0;
    }
    out[[r, c]] = sign;
    out[[c, r]] = -sign;

    Ok((
        CorrelationMatrix::antisymmetrize(out),
        MeasurementOutcome {
            site,
            outcome,
            probability: prob,
        },
    ))
}

/// Born-rule sampled parity measurement.
pub fn parity_measure(
    g: &CorrelationMatrix,
    site: usize,
    rng: &mut impl Rng,
) -> Result<(CorrelationMatrix, MeasurementOutcome)> {
    let p0 = outcome_probability(g, site, 0)?;
    let outcome = if rng.gen::<f64>() < p0 { 0 } else { 1 };
    parity_measure_forced(g, site, outcome)
}
