//! Thin CLI over the experiments module: run ensembles from a declarative
//! config, summarize stored records, fit scaling laws, or do all of it in
//! one `report` invocation.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use petz_lab::error::{Error, Result};
use petz_lab::experiments::{
    asymmetry_metric, fit_scaling, run_ensemble, summarize, summary_csv, to_json_bytes,
    write_file, EnsembleSummary, ExperimentConfig, FitModel, TrajectoryRecord,
};

#[derive(Parser)]
#[command(name = "petz-lab", version, about = "Recovery-map fidelity experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunArgs {
    /// TOML experiment config
    #[arg(long)]
    config: PathBuf,
    /// Override the config's master_seed
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Records output path (JSON)
    #[arg(long, default_value = "records.json")]
    out: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Run the ensemble and write trajectory records
    Run(RunArgs),
    /// Aggregate stored records into a summary CSV
    Summarize {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        records: PathBuf,
        #[arg(long, default_value = "summary.csv")]
        out: PathBuf,
    },
    /// Fit a scaling law to a summary at t = 0
    Fit {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        records: PathBuf,
        /// Abscissa: cmi or eta
        #[arg(long, default_value = "cmi")]
        x: String,
        /// linear-through-origin | linear-affine | quadratic-through-origin
        #[arg(long, default_value = "linear-through-origin")]
        model: String,
    },
    /// Run + summarize + fits + asymmetry in one pass
    Report {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        threads: Option<usize>,
        /// Output directory
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn load_records(path: &PathBuf) -> Result<Vec<TrajectoryRecord>> {
    let bytes = std::fs::read(path)?;
    let v: serde_json::Value = serde_json::from_slice(&bytes)
        .map_err(|e| Error::Config(format!("cannot parse records: {e}")))?;
    let payload = v.get("payload").cloned().unwrap_or(v);
    serde_json::from_value(payload).map_err(|e| Error::Config(format!("bad record schema: {e}")))
}

fn parse_model(s: &str) -> Result<FitModel> {
    match s {
        "linear-through-origin" => Ok(FitModel::LinearThroughOrigin),
        "linear-affine" => Ok(FitModel::LinearAffine),
        "quadratic-through-origin" => Ok(FitModel::QuadraticThroughOrigin),
        other => Err(Error::Config(format!("unknown fit model {other}"))),
    }
}

fn setup_threads(threads: Option<usize>) -> Result<()> {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn fit_points(summary: &EnsembleSummary, x: &str) -> Result<Vec<(f64, f64)>> {
    summary
        .at_t_zero()
        .iter()
        .map(|row| {
            let abscissa = match x {
                "cmi" => row.mean_cmi_bits,
                "eta" => row.eta_lengths,
                "eta-chord" => row.eta_chord,
                other => return Err(Error::Config(format!("unknown abscissa {other}"))),
            };
            Ok((abscissa, row.mean_neg_log2_f))
        })
        .collect()
}

fn real_main() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Run(args) => {
            setup_threads(args.threads)?;
            let mut config = ExperimentConfig::from_path(&args.config)?;
            if let Some(seed) = args.seed {
                config.master_seed = seed;
            }
            let records = run_ensemble(&config)?;
            write_file(&args.out, &to_json_bytes(&records)?)?;
            eprintln!("wrote {} records to {}", records.len(), args.out.display());
        }
        Command::Summarize {
            config,
            records,
            out,
        } => {
            let config = ExperimentConfig::from_path(&config)?;
            let records = load_records(&records)?;
            let summary = summarize(&config, &records)?;
            write_file(&out, &summary_csv(&summary)?)?;
            eprintln!("wrote {} summary rows to {}", summary.rows.len(), out.display());
        }
        Command::Fit {
            config,
            records,
            x,
            model,
        } => {
            let config = ExperimentConfig::from_path(&config)?;
            let records = load_records(&records)?;
            let summary = summarize(&config, &records)?;
            let fit = fit_scaling(&fit_points(&summary, &x)?, parse_model(&model)?)?;
            let bytes = to_json_bytes(&fit)?;
            std::io::Write::write_all(&mut std::io::stdout(), &bytes)?;
        }
        Command::Report {
            config,
            seed,
            threads,
            out,
        } => {
            setup_threads(threads)?;
            let mut config = ExperimentConfig::from_path(&config)?;
            if let Some(seed) = seed {
                config.master_seed = seed;
            }
            let records = run_ensemble(&config)?;
            let summary = summarize(&config, &records)?;
            write_file(&out.join("records.json"), &to_json_bytes(&records)?)?;
            write_file(&out.join("summary.csv"), &summary_csv(&summary)?)?;

            #[derive(serde::Serialize)]
            struct Report {
                fits: std::collections::BTreeMap<String, petz_lab::experiments::ScalingFit>,
                asymmetry: Option<(f64, f64)>,
            }
            let mut fits = std::collections::BTreeMap::new();
            for (x, model) in [
                ("cmi", FitModel::LinearThroughOrigin),
                ("eta", FitModel::LinearThroughOrigin),
                ("eta", FitModel::QuadraticThroughOrigin),
            ] {
                let pts = fit_points(&summary, x)?;
                if pts.len() >= 2 {
                    let name = format!("{x}-{}", serde_variant_name(model));
                    fits.insert(name, fit_scaling(&pts, model)?);
                }
            }
            let asymmetry = asymmetry_metric(&summary).ok();
            let report = Report { fits, asymmetry };
            write_file(&out.join("report.json"), &to_json_bytes(&report)?)?;
            eprintln!("report written to {}", out.display());
        }
    }
    Ok(())
}

fn serde_variant_name(m: FitModel) -> &'static str {
    match m {
        FitModel::LinearThroughOrigin => "linear-through-origin",
        FitModel::LinearAffine => "linear-affine",
        FitModel::QuadraticThroughOrigin => "quadratic-through-origin",
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
