//! Per-trial CSV and JSON summary files for a finished campaign.
//!
//! Output is a pure function of the campaign: no timestamps or host data,
//! so reruns with the same seeds are byte-identical.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::TrialRecord;
use crate::error::{Error, Result};
use crate::greedy::GreedyMode;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignFiles {
    pub csv: PathBuf,
    pub json: PathBuf,
}

/// Top-level JSON object of a summary file.
#[derive(Debug, Serialize)]
pub struct SummaryDocument<'a, T: Serialize> {
    pub version: &'static str,
    pub campaign: &'a str,
    pub instance_seed: u64,
    pub mode: GreedyMode,
    pub result: &'a T,
}

fn io_err(path: &Path, e: impl ToString) -> Error {
    Error::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    }
}

/// Writes `{campaign}-{instance_seed}-{mode}.csv` (one row per trial: trial
/// index, base weight seed, weight, steps with a choice; trial `i` uses
/// weight stream `i`) and the matching `.json` summary into `dir`.
pub fn emit_results<T: Serialize>(
    dir: &Path,
    campaign: &str,
    instance_seed: u64,
    mode: GreedyMode,
    trials: &[TrialRecord],
    result: &T,
) -> Result<CampaignFiles> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let stem = format!("{campaign}-{instance_seed}-{mode}");
    let csv_path = dir.join(format!("{stem}.csv"));
    let json_path = dir.join(format!("{stem}.json"));

    let mut out = csv::Writer::from_writer(Vec::new());
    let rows = std::iter::once(["trial".to_string(), "seed".into(), "weight".into(), "choice_steps".into()]).chain(
        trials
            .iter()
            .map(|t| [t.trial.to_string(), t.seed.to_string(), t.weight.to_string(), t.choice_steps.to_string()]),
    );
    for row in rows {
        out.write_record(&row).map_err(|e| io_err(&csv_path, e))?;
    }
    let bytes = out.into_inner().map_err(|e| io_err(&csv_path, e))?;
    fs::write(&csv_path, bytes).map_err(|e| io_err(&csv_path, e))?;

    let doc = SummaryDocument {
        version: env!("CARGO_PKG_VERSION"),
        campaign,
        instance_seed,
        mode,
        result,
    };
    let mut json = serde_json::to_string_pretty(&doc).map_err(|e| io_err(&json_path, e))?;
    json.push('\n');
    fs::write(&json_path, json).map_err(|e| io_err(&json_path, e))?;

    Ok(CampaignFiles {
        csv: csv_path,
        json: json_path,
    })
}
