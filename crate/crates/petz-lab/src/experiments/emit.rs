//! Flat-file emission: summary CSV (stable column order, schema header)
//! and JSON for records, summaries, and fits.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};

use super::summary::EnsembleSummary;

pub const SCHEMA_VERSION: &str = "petz-lab-summary-v1";

const CSV_COLUMNS: [&str; 16] = [
    "scenario",
    "backend",
    "L",
    "p",
    "L_A",
    "L_B",
    "L_C",
    "eta_lengths",
    "eta_chord",
    "t",
    "mean_neg_log2_F",
    "sem",
    "mean_F",
    "mean_cmi_bits",
    "cmi_sem",
    "N",
];

fn fmt(x: f64) -> String {
    if !x.is_finite() {
        // callers validate earlier; belt and braces
        return "nan".to_string();
    }
    format!("{x:.12e}")
}

/// Render the summary as CSV bytes: one `# schema:` comment line, a header
/// row, then one row per (region, t) cell. Deterministic for fixed input.
pub fn summary_csv(summary: &EnsembleSummary) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    writeln!(out, "# schema: {SCHEMA_VERSION}")?;
    writeln!(out, "{}", CSV_COLUMNS.join(","))?;
    for r in &summary.rows {
        if !r.mean_neg_log2_f.is_finite() || !r.mean_cmi_bits.is_finite() {
            return Err(Error::Numerical("NaN in summary row".into()));
        }
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.scenario,
            r.backend,
            r.l,
            fmt(r.p),
            r.l_a,
            r.l_b,
            r.l_c,
            fmt(r.eta_lengths),
            fmt(r.eta_chord),
            fmt(r.t),
            fmt(r.mean_neg_log2_f),
            fmt(r.sem),
            fmt(r.mean_f),
            fmt(r.mean_cmi_bits),
            fmt(r.cmi_sem),
            r.n,
        )?;
    }
    Ok(out)
}

/// Serialize any artifact as pretty JSON with a schema banner.
pub fn to_json_bytes<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    #[derive(Serialize)]
    struct Envelope<'a, T> {
        schema: &'static str,
        payload: &'a T,
    }
    let env = Envelope {
        schema: SCHEMA_VERSION,
        payload: value,
    };
    let mut bytes = serde_json::to_vec_pretty(&env)
        .map_err(|e| Error::Numerical(format!("json serialization failed: {e}")))?;
    bytes.push(b'\n');
    Ok(bytes)
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    std::fs::write(path, bytes)?;
    Ok(())
}
