//! Ensemble aggregation, scaling fits, and the t-asymmetry metric.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::config::{eta_chord, eta_of, ExperimentConfig};
use super::run::TrajectoryRecord;

/// One output row: a (region, t) cell of the ensemble average.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SummaryRow {
    pub scenario: String,
    pub backend: String,
    pub l: usize,
    pub p: f64,
    pub l_a: usize,
    pub l_b: usize,
    pub l_c: usize,
    pub eta_lengths: f64,
    pub eta_chord: f64,
    pub t: f64,
    /// mean of −log₂ F (the default aggregation)
    pub mean_neg_log2_f: f64,
    pub sem: f64,
    /// mean of F itself (the alternative aggregation; −log₂ of this is the
    /// log-of-mean curve)
    pub mean_f: f64,
    pub mean_cmi_bits: f64,
    pub cmi_sem: f64,
    pub n: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnsembleSummary {
    pub rows: Vec<SummaryRow>,
}

fn mean_sem(xs: &[f64]) -> Result<(f64, f64)> {
    let n = xs.len();
    if n == 0 {
        return Err(Error::Numerical("empty sample".into()));
    }
    let mean = xs.iter().sum::<f64>() / n as f64;
    if !mean.is_finite() {
        return Err(Error::Numerical("NaN in ensemble aggregation".into()));
    }
    if n == 1 {
        return Ok((mean, 0.0));
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
    Ok((mean, (var / n as f64).sqrt()))
}

/// Group records by (region, t) and average. −log₂F of an exact zero
/// fidelity would be infinite; that is a numerical-guard failure.
pub fn summarize(config: &ExperimentConfig, records: &[TrajectoryRecord]) -> Result<EnsembleSummary> {
    if records.is_empty() {
        return Err(Error::Numerical("no records to summarize".into()));
    }
    // key: (la, lb, lc, start, t index)
    let mut groups: BTreeMap<(usize, usize, usize, usize, usize), (Vec<f64>, Vec<f64>)> =
        BTreeMap::new();
    for rec in records {
        rec.validate()?;
        for (ti, &f) in rec.f_t.iter().enumerate() {
            if f <= 0.0 {
                return Err(Error::Numerical(format!(
                    "zero recovery fidelity at t = {}; -log F diverges",
                    rec.t_grid[ti]
                )));
            }
            let key = (rec.region.la, rec.region.lb, rec.region.lc, rec.region.start, ti);
            let entry = groups.entry(key).or_default();
            entry.0.push(-(f.min(1.0)).log2());
            entry.1.push(rec.cmi_bits);
        }
    }
    let mut rows = Vec::with_capacity(groups.len());
    for ((la, lb, lc, _start, ti), (neg_logs, cmis)) in groups {
        let (mean_nl, sem) = mean_sem(&neg_logs)?;
        let fs: Vec<f64> = neg_logs.iter().map(|nl| 0.5_f64.powf(*nl)).collect();
        let (mean_f, _) = mean_sem(&fs)?;
        let (mean_cmi, cmi_sem) = mean_sem(&cmis)?;
        rows.push(SummaryRow {
            scenario: config.scenario.as_str().to_string(),
            backend: config.backend.as_str().to_string(),
            l: config.l,
            p: config.p,
            l_a: la,
            l_b: lb,
            l_c: lc,
            eta_lengths: eta_of(la, lb, lc),
            eta_chord: eta_chord(la, lb, lc, config.l),
            t: config.t_grid[ti],
            mean_neg_log2_f: mean_nl,
            sem,
            mean_f,
            mean_cmi_bits: mean_cmi,
            cmi_sem,
            n: neg_logs.len(),
        });
    }
    Ok(EnsembleSummary { rows })
}

impl EnsembleSummary {
    /// Rows at t = 0 (or the grid point closest to it), one per region.
    pub fn at_t_zero(&self) -> Vec<&SummaryRow> {
        let best_t = self
            .rows
            .iter()
            .map(|r| r.t.abs())
            .fold(f64::INFINITY, f64::min);
        self.rows
            .iter()
            .filter(|r| (r.t.abs() - best_t).abs() < 1e-12)
            .collect()
    }

    /// Best (minimal) −log₂F over the t grid, per region.
    pub fn best_neg_log2_f(&self) -> Vec<(f64, f64, f64)> {
        // (eta_lengths, mean_cmi, min over t of mean_neg_log2_f)
        let mut per_region: BTreeMap<(usize, usize, usize), (f64, f64, f64)> = BTreeMap::new();
        for r in &self.rows {
            let e = per_region
                .entry((r.l_a, r.l_b, r.l_c))
                .or_insert((r.eta_lengths, r.mean_cmi_bits, f64::INFINITY));
            e.2 = e.2.min(r.mean_neg_log2_f);
        }
        per_region.into_values().collect()
    }
}

/// Δ = mean over t > 0 of [(−log₂F at −t) − (−log₂F at +t)], averaged over
/// regions. Positive Δ means recovery works better at positive t.
/// Also returns the quadrature-combined SEM of the difference.
pub fn asymmetry_metric(summary: &EnsembleSummary) -> Result<(f64, f64)> {
    let mut diffs = Vec::new();
    let mut sems = Vec::new();
    for row in &summary.rows {
        if row.t <= 0.0 {
            continue;
        }
        let partner = summary.rows.iter().find(|r| {
            (r.t + row.t).abs() < 1e-9
                && r.l_a == row.l_a
                && r.l_b == row.l_b
                && r.l_c == row.l_c
        });
        let Some(m) = partner else {
            return Err(Error::invalid(format!(
                "t grid is not symmetric: no partner for t = {}",
                row.t
            )));
        };
        diffs.push(m.mean_neg_log2_f - row.mean_neg_log2_f);
        sems.push(m.sem.hypot(row.sem));
    }
    if diffs.is_empty() {
        return Err(Error::invalid("no t > 0 rows for asymmetry metric"));
    }
    let n = diffs.len() as f64;
    let delta = diffs.iter().sum::<f64>() / n;
    let sem = (sems.iter().map(|s| s * s).sum::<f64>()).sqrt() / n;
    Ok((delta, sem))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitModel {
    LinearThroughOrigin,
    LinearAffine,
    QuadraticThroughOrigin,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalingFit {
    pub model: FitModel,
    /// [slope] / [intercept, slope] / [quadratic coefficient]
    pub coefficients: Vec<f64>,
    pub residual_sum: f64,
    pub r2: f64,
}

/// Least-squares fit of y against x under the given model.
pub fn fit_scaling(points: &[(f64, f64)], model: FitModel) -> Result<ScalingFit> {
    if points.len() < 2 {
        return Err(Error::invalid("need at least two points to fit"));
    }
    if points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(Error::Numerical("non-finite data in fit".into()));
    }
    let predict: Box<dyn Fn(f64) -> f64>;
    let coefficients: Vec<f64>;
    match model {
        FitModel::LinearThroughOrigin => {
            let sxy: f64 = points.iter().map(|(x, y)| x * y).sum();
            let sxx: f64 = points.iter().map(|(x, _)| x * x).sum();
            if sxx == 0.0 {
                return Err(Error::Numerical("degenerate abscissa".into()));
            }
            let k = sxy / sxx;
            coefficients = vec![k];
            predict = Box::new(move |x| k * x);
        }
        FitModel::QuadraticThroughOrigin => {
            let sxy: f64 = points.iter().map(|(x, y)| x * x * y).sum();
            let sxx: f64 = points.iter().map(|(x, _)| x.powi(4)).sum();
            if sxx == 0.0 {
                return Err(Error::Numerical("degenerate abscissa".into()));
            }
            let k = sxy / sxx;
            coefficients = vec![k];
            predict = Box::new(move |x| k * x * x);
        }
        FitModel::LinearAffine => {
            let n = points.len() as f64;
            let sx: f64 = points.iter().map(|(x, _)| x).sum();
            let sy: f64 = points.iter().map(|(_, y)| y).sum();
            let sxx: f64 = points.iter().map(|(x, _)| x * x).sum();
            let sxy: f64 = points.iter().map(|(x, y)| x * y).sum();
            let det = n * sxx - sx * sx;
            if det.abs() < 1e-300 {
                return Err(Error::Numerical("degenerate abscissa".into()));
            }
            let slope = (n * sxy - sx * sy) / det;
            let intercept = (sy - slope * sx) / n;
            coefficients = vec![intercept, slope];
            predict = Box::new(move |x| intercept + slope * x);
        }
    }
    let residual_sum: f64 = points.iter().map(|(x, y)| (y - predict(*x)).powi(2)).sum();
    let mean_y: f64 = points.iter().map(|(_, y)| y).sum::<f64>() / points.len() as f64;
    let ss_tot: f64 = points.iter().map(|(_, y)| (y - mean_y).powi(2)).sum();
    let r2 = if ss_tot > 0.0 {
        1.0 - residual_sum / ss_tot
    } else {
        1.0
    };
    Ok(ScalingFit {
        model,
        coefficients,
        residual_sum,
        r2,
    })
}
