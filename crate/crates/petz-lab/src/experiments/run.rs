//! Ensemble orchestration: dispatch a config to its backend, one
//! independent trajectory per (master_seed, index) RNG stream, parallel
//! across trajectories.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dense::{
    cmi_dense, replay_clifford_record, run_dense_mipt, uhlmann_fidelity_curve, GateEnsemble,
    Partition,
};
use crate::error::{Error, Result};
use crate::gaussian::{
    chiral_correlation, cmi as cmi_gaussian, ising_cft_correlation, parity_measure,
    petz_fidelity_curve, CorrelationMatrix,
};
use crate::region::{Region, RegionLabel};
use crate::stabilizer::{
    cmi_stabilizer, levin_wen_partition, run_clifford_mipt, toric_code_state,
};

use super::config::{Backend, ExperimentConfig, RegionSpec, Scenario};

/// One (trajectory, region) result.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrajectoryRecord {
    pub seed: u64,
    pub trajectory: usize,
    pub l: usize,
    pub p: f64,
    pub ensemble: String,
    pub region: RegionSpec,
    pub cmi_bits: f64,
    pub t_grid: Vec<f64>,
    pub f_t: Vec<f64>,
    pub wall_time: f64,
}

impl TrajectoryRecord {
    pub fn validate(&self) -> Result<()> {
        if self.cmi_bits < -1e-8 || !self.cmi_bits.is_finite() {
            return Err(Error::Numerical(format!(
                "record has invalid CMI {}",
                self.cmi_bits
            )));
        }
        if self.f_t.len() != self.t_grid.len() {
            return Err(Error::Numerical("t grid / fidelity length mismatch".into()));
        }
        for &f in &self.f_t {
            if !(0.0..=1.0 + 1e-8).contains(&f) {
                return Err(Error::Numerical(format!("fidelity {f} outside [0,1]")));
            }
        }
        Ok(())
    }
}

fn contiguous_regions(spec: &RegionSpec) -> (Region, Region, Region) {
    (
        Region::interval(spec.start, spec.la, RegionLabel::A),
        Region::interval(spec.start + spec.la, spec.lb, RegionLabel::B),
        Region::interval(spec.start + spec.la + spec.lb, spec.lc, RegionLabel::C),
    )
}

/// Regions rebased to a state supported on ABC alone.
fn rebased_regions(spec: &RegionSpec) -> (Region, Region, Region) {
    let mut local = *spec;
    local.start = 0;
    contiguous_regions(&local)
}

fn gaussian_trajectory(
    config: &ExperimentConfig,
    rng: &mut ChaCha12Rng,
) -> Result<CorrelationMatrix> {
    let mut g = match config.scenario {
        Scenario::IsingGround | Scenario::IsingMeasured => ising_cft_correlation(config.l)?,
        Scenario::Chiral | Scenario::ChiralMeasured => {
            chiral_correlation(config.l, config.beta_r.expect("validated"))?
        }
        _ => return Err(Error::Config("scenario is not gaussian".into())),
    };
    if matches!(
        config.scenario,
        Scenario::IsingMeasured | Scenario::ChiralMeasured
    ) {
        use rand::Rng;
        for site in 0..config.l {
            if rng.gen::<f64>() < config.p {
                let (next, _) = parity_measure(&g, site, rng)?;
                g = next;
            }
        }
    }
    Ok(g)
}

fn run_trajectory(config: &ExperimentConfig, index: usize) -> Result<Vec<TrajectoryRecord>> {
    let mut rng = ChaCha12Rng::seed_from_u64(config.master_seed);
    rng.set_stream(index as u64);
    let start = std::time::Instant::now();
    let mut records = Vec::new();
    let mut push = |region: RegionSpec, cmi_bits: f64, f_t: Vec<f64>| {
        records.push(TrajectoryRecord {
            seed: config.master_seed,
            trajectory: index,
            l: config.l,
            p: config.p,
            ensemble: config.scenario.as_str().to_string(),
            region,
            cmi_bits,
            t_grid: config.t_grid.clone(),
            f_t,
            wall_time: 0.0,
        });
    };

    match (config.backend, config.scenario) {
        (Backend::Stabilizer, Scenario::MiptClifford) => {
            let layers = config.layers_per_site * config.l;
            let (tableau, _) = run_clifford_mipt(config.l, config.p, layers, &mut rng)?;
            for spec in &config.regions {
                let (a, b, c) = contiguous_regions(spec);
                let cmi = cmi_stabilizer(&tableau, &a, &b, &c)? as f64;
                // fidelity is exactly 2^{-CMI/2}, independent of t
                let f = 0.5_f64.powf(cmi / 2.0);
                push(*spec, cmi, vec![f; config.t_grid.len()]);
            }
        }
        (Backend::Dense, Scenario::MiptClifford) => {
            let layers = config.layers_per_site * config.l;
            let (_, record) = run_clifford_mipt(config.l, config.p, layers, &mut rng)?;
            let psi = replay_clifford_record(&record)?;
            for spec in &config.regions {
                let (a, b, c) = contiguous_regions(spec);
                let cmi = cmi_dense(&psi, &a, &b, &c)?;
                let part = Partition::new(spec.la, spec.lb, spec.lc)?;
                let f_t = uhlmann_fidelity_curve(&psi, part, &config.t_grid)?;
                push(*spec, cmi, f_t);
            }
        }
        (Backend::Dense, Scenario::MiptHaar | Scenario::MiptU1) => {
            let ensemble = if config.scenario == Scenario::MiptHaar {
                GateEnsemble::Haar
            } else {
                GateEnsemble::U1
            };
            let layers = config.layers_per_site * config.l;
            let psi = run_dense_mipt(config.l, config.p, ensemble, layers, &mut rng)?;
            for spec in &config.regions {
                let (a, b, c) = contiguous_regions(spec);
                let cmi = cmi_dense(&psi, &a, &b, &c)?;
                let part = Partition::new(spec.la, spec.lb, spec.lc)?;
                let f_t = uhlmann_fidelity_curve(&psi, part, &config.t_grid)?;
                push(*spec, cmi, f_t);
            }
        }
        (Backend::Gaussian, _) => {
            let g = gaussian_trajectory(config, &mut rng)?;
            for spec in &config.regions {
                let (a, b, c) = contiguous_regions(spec);
                let cmi = cmi_gaussian(&g, &a, &b, &c)?;
                let abc = a.union(&b)?.union(&c)?;
                let g_abc = g.partial_trace(&abc)?;
                let (ra, rb, rc) = rebased_regions(spec);
                let curve = petz_fidelity_curve(&g_abc, &ra, &rb, &rc, &config.t_grid)?;
                push(*spec, cmi, curve.into_iter().map(|(_, f)| f).collect());
            }
        }
        (Backend::Stabilizer, Scenario::ToricTee) => {
            let tableau = toric_code_state(config.l, config.l)?;
            let (a, b, c) = levin_wen_partition(config.l, config.l)?;
            let cmi = cmi_stabilizer(&tableau, &a, &b, &c)? as f64;
            let f = 0.5_f64.powf(cmi / 2.0);
            // region lengths reported as site counts of the annulus arcs
            let spec = RegionSpec::new(a.len(), b.len(), c.len());
            push(spec, cmi, vec![f; config.t_grid.len()]);
        }
        (backend, scenario) => {
            return Err(Error::Config(format!(
                "no runner for backend {} + scenario {}",
                backend.as_str(),
                scenario.as_str()
            )));
        }
    }

    let per_record = start.elapsed().as_secs_f64() / records.len().max(1) as f64;
    for r in &mut records {
        r.wall_time = per_record;
        r.validate()?;
    }
    Ok(records)
}

/// Run every trajectory of the ensemble; deterministic given the config
/// (trajectory i always uses RNG stream i of master_seed).
pub fn run_ensemble(config: &ExperimentConfig) -> Result<Vec<TrajectoryRecord>> {
    config.validate()?;
    let n = if config.scenario.is_deterministic() {
        1
    } else {
        config.num_trajectories
    };
    let mut per_traj: Vec<Vec<TrajectoryRecord>> = (0..n)
        .into_par_iter()
        .map(|i| run_trajectory(config, i))
        .collect::<Result<_>>()?;
    Ok(per_traj.drain(..).flatten().collect())
}
