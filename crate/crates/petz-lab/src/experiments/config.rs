//! Declarative experiment description, loadable from TOML.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const CONFIG_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Backend {
    Gaussian,
    Stabilizer,
    Dense,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    MiptClifford,
    MiptHaar,
    MiptU1,
    IsingGround,
    IsingMeasured,
    Chiral,
    ChiralMeasured,
    ToricTee,
}

impl Scenario {
    pub fn as_str(&self) -> &'static str {
        match self {
            Scenario::MiptClifford => "mipt-clifford",
            Scenario::MiptHaar => "mipt-haar",
            Scenario::MiptU1 => "mipt-u1",
            Scenario::IsingGround => "ising-ground",
            Scenario::IsingMeasured => "ising-measured",
            Scenario::Chiral => "chiral",
            Scenario::ChiralMeasured => "chiral-measured",
            Scenario::ToricTee => "toric-tee",
        }
    }

    /// Backends that can run this scenario.
    pub fn allowed_backends(&self) -> &'static [Backend] {
        match self {
            Scenario::MiptClifford => &[Backend::Stabilizer, Backend::Dense],
            Scenario::MiptHaar | Scenario::MiptU1 => &[Backend::Dense],
            Scenario::IsingGround
            | Scenario::IsingMeasured
            | Scenario::Chiral
            | Scenario::ChiralMeasured => &[Backend::Gaussian],
            Scenario::ToricTee => &[Backend::Stabilizer],
        }
    }

    pub fn is_deterministic(&self) -> bool {
        matches!(
            self,
            Scenario::IsingGround | Scenario::Chiral | Scenario::ToricTee
        )
    }
}

impl Backend {
    pub fn as_str(&self) -> &'static str {
        match self {
            Backend::Gaussian => "gaussian",
            Backend::Stabilizer => "stabilizer",
            Backend::Dense => "dense",
        }
    }
}

/// Contiguous tripartition [A|B|C] of lengths (la, lb, lc) starting at
/// `start` (sites start .. start+la+lb+lc).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionSpec {
    pub la: usize,
    pub lb: usize,
    pub lc: usize,
    #[serde(default)]
    pub start: usize,
}

impl RegionSpec {
    pub fn new(la: usize, lb: usize, lc: usize) -> Self {
        RegionSpec {
            la,
            lb,
            lc,
            start: 0,
        }
    }

    pub fn total(&self) -> usize {
        self.la + self.lb + self.lc
    }
}

fn default_t_grid() -> Vec<f64> {
    crate::gaussian::petz::default_t_grid()
}

fn default_layers_per_site() -> usize {
    4
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "config_version")]
    pub version: u32,
    pub backend: Backend,
    pub scenario: Scenario,
    /// Chain length; for toric-tee the linear size of the square torus.
    pub l: usize,
    /// Measurement rate (monitored circuits and measured ensembles).
    #[serde(default)]
    pub p: f64,
    /// Right-moving inverse temperature (chiral scenarios).
    #[serde(default)]
    pub beta_r: Option<f64>,
    /// Brickwork depth = layers_per_site × L.
    #[serde(default = "default_layers_per_site")]
    pub layers_per_site: usize,
    pub regions: Vec<RegionSpec>,
    #[serde(default = "default_t_grid")]
    pub t_grid: Vec<f64>,
    #[serde(default = "one")]
    pub num_trajectories: usize,
    #[serde(default)]
    pub master_seed: u64,
}

fn config_version() -> u32 {
    CONFIG_VERSION
}

impl ExperimentConfig {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        let cfg: ExperimentConfig =
            toml::from_str(s).map_err(|e| Error::Config(format!("bad config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.version != CONFIG_VERSION {
            return Err(Error::Config(format!(
                "unsupported config version {}",
                self.version
            )));
        }
        if !self.scenario.allowed_backends().contains(&self.backend) {
            return Err(Error::Config(format!(
                "scenario {} cannot run on the {} backend",
                self.scenario.as_str(),
                self.backend.as_str()
            )));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::Config(format!(
                "measurement rate {} not in [0,1]",
                self.p
            )));
        }
        if self.num_trajectories < 1 {
            return Err(Error::Config("need at least one trajectory".into()));
        }
        if self.t_grid.is_empty() || self.t_grid.iter().any(|t| !t.is_finite()) {
            return Err(Error::Config("t_grid must be non-empty and finite".into()));
        }
        match self.scenario {
            Scenario::ToricTee => {
                if self.l < 4 {
                    return Err(Error::Config("toric-tee needs l >= 4".into()));
                }
            }
            _ => {
                if self.regions.is_empty() {
                    return Err(Error::Config("at least one region triple required".into()));
                }
                for r in &self.regions {
                    if r.la == 0 || r.lb == 0 || r.lc == 0 {
                        return Err(Error::Config("regions A, B, C must be non-empty".into()));
                    }
                    if r.start + r.total() > self.l {
                        return Err(Error::Config(format!(
                            "region ({}, {}, {}) at start {} exceeds l = {}",
                            r.la, r.lb, r.lc, r.start, self.l
                        )));
                    }
                    if self.backend == Backend::Dense && r.start != 0 {
                        return Err(Error::Config(
                            "dense backend requires regions starting at site 0".into(),
                        ));
                    }
                }
            }
        }
        match self.scenario {
            Scenario::Chiral | Scenario::ChiralMeasured => {
                let b = self
                    .beta_r
                    .ok_or_else(|| Error::Config("chiral scenarios need beta_r".into()))?;
                if !(b > 0.0) {
                    return Err(Error::Config("beta_r must be positive".into()));
                }
            }
            _ => {}
        }
        if matches!(
            self.scenario,
            Scenario::MiptClifford | Scenario::MiptHaar | Scenario::MiptU1
        ) && (self.l < 2 || self.l % 2 != 0)
        {
            return Err(Error::Config("monitored circuits need even l >= 2".into()));
        }
        if self.backend == Backend::Dense && self.l > 24 {
            return Err(Error::Config(format!(
                "dense backend limited to l <= 24, got {}",
                self.l
            )));
        }
        Ok(())
    }
}

/// Cross-ratio from plain interval lengths:
/// η = L_A L_C / ((L_A + L_B)(L_B + L_C)).
pub fn eta_of(la: usize, lb: usize, lc: usize) -> f64 {
    (la * lc) as f64 / (((la + lb) * (lb + lc)) as f64)
}

/// Chord-length cross-ratio for a periodic chain of length `l`: each length
/// x is replaced by the chord sin(πx/l) before forming the same ratio.
pub fn eta_chord(la: usize, lb: usize, lc: usize, l: usize) -> f64 {
    let chord = |x: usize| (std::f64::consts::PI * x as f64 / l as f64).sin();
    chord(la) * chord(lc) / (chord(la + lb) * chord(lb + lc))
}
