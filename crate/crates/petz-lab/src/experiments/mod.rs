//! Declarative ensemble runner: configs, trajectory orchestration,
//! averaging with error bars, scaling fits, and flat-file emission.

pub mod config;
pub mod emit;
pub mod run;
pub mod summary;

pub use config::{eta_chord, eta_of, Backend, ExperimentConfig, RegionSpec, Scenario};
pub use emit::{summary_csv, to_json_bytes, write_file, SCHEMA_VERSION};
pub use run::{run_ensemble, TrajectoryRecord};
pub use summary::{
    asymmetry_metric, fit_scaling, summarize, EnsembleSummary, FitModel, ScalingFit, SummaryRow,
};
