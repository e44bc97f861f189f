use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::batch::draw_config;
use super::{ensure_parent, sibling, Format, RunConfig, Which};
use crate::error::Result;
use crate::{GENERATOR_ID, VERSION};

/// Metadata written next to every sample file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub tool: String,
    pub version: String,
    pub generator: String,
    pub config: RunConfig,
    pub output: PathBuf,
    pub wall_time_seconds: f64,
    pub variates_consumed: u64,
    pub variates_per_sample: u64,
}

#[derive(Serialize)]
struct JsonSamples<'a> {
    tool: &'a str,
    version: &'a str,
    generator: &'a str,
    config: &'a RunConfig,
    columns: Vec<String>,
    samples: Vec<&'a [f64]>,
}

pub(crate) fn columns(cfg: &RunConfig) -> Vec<String> {
    match cfg.which {
        Which::All => (1..=cfg.n).map(|i| format!("lambda_{i}")).collect(),
        Which::Min => vec!["lambda_min".into()],
        Which::Max => vec!["lambda_max".into()],
    }
}

/// Draws `cfg.samples` samples and writes them to `cfg.output` (CSV rows
/// `sample_index,lambda_...`, or JSON), plus `<stem>.summary.json`.
pub fn cmd_sample(cfg: &RunConfig) -> Result<SampleSummary> {
    let start = Instant::now();
    let draws = draw_config(cfg)?;
    let wall = start.elapsed().as_secs_f64();

    ensure_parent(&cfg.output)?;
    let mut out = BufWriter::new(File::create(&cfg.output)?);
    let cols = columns(cfg);
    match cfg.format {
        Format::Csv => {
            writeln!(out, "sample_index,{}", cols.join(","))?;
            for (i, d) in draws.iter().enumerate() {
                write!(out, "{i}")?;
                for v in &d.values {
                    write!(out, ",{v}")?;
                }
                writeln!(out)?;
            }
        }
        Format::Json => {
            let doc = JsonSamples {
                tool: "wishart-spectra",
                version: VERSION,
                generator: GENERATOR_ID,
                config: cfg,
                columns: cols,
                samples: draws.iter().map(|d| d.values.as_slice()).collect(),
            };
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
    }
    out.flush()?;

    let summary = SampleSummary {
        tool: "wishart-spectra".into(),
        version: VERSION.into(),
        generator: GENERATOR_ID.into(),
        config: cfg.clone(),
        output: cfg.output.clone(),
        wall_time_seconds: wall,
        variates_consumed: draws.iter().map(|d| d.variates).sum(),
        variates_per_sample: draws.first().map_or(0, |d| d.variates),
    };
    let f = File::create(sibling(&cfg.output, "summary.json"))?;
    serde_json::to_writer_pretty(BufWriter::new(f), &summary)?;
    Ok(summary)
}
