use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::batch::draw_one;
use super::{ensure_parent, sibling, Method, RunConfig, Which};
use crate::ensembles::EnsembleParams;
use crate::error::Result;
use crate::{GENERATOR_ID, VERSION};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub r: f64,
    pub beta: f64,
    pub method: Method,
    pub samples: usize,
    pub mean_seconds_per_sample: f64,
    pub variates_per_sample: u64,
}

#[derive(Serialize)]
struct BenchMeta<'a> {
    tool: &'a str,
    version: &'a str,
    generator: &'a str,
    config: &'a RunConfig,
    grid: &'a [(usize, f64)],
    skipped: Vec<String>,
}

fn applicable(method: Method, p: &EnsembleParams) -> bool {
    match method {
        Method::Dense => p.require_dense().is_ok(),
        Method::Closed2 => p.n == 2 && (p.beta == 1.0 || p.beta == 2.0) && !p.is_spiked(),
        Method::Tridiagonal | Method::Pencil => true,
    }
}

/// Times full-spectrum draws for each cell and method on one thread. One
/// warmup draw per cell is excluded. Inapplicable pairs (dense with
/// non-integer `R`, closed2 with `n != 2`) are skipped and listed in the
/// `<stem>.meta.json` written next to the CSV.
pub fn cmd_bench(cfg: &RunConfig, grid: &[(usize, f64)], methods: &[Method]) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &(n, r) in grid {
        let p = EnsembleParams::new(n, r, cfg.beta, cfg.sigma1)?;
        for &method in methods {
            if !applicable(method, &p) {
                skipped.push(format!("{}x{} {}", n, r, method.name()));
                continue;
            }
            let warm = draw_one(&p, method, Which::All, cfg.seed, u64::MAX)?;
            let start = Instant::now();
            for i in 0..cfg.samples as u64 {
                draw_one(&p, method, Which::All, cfg.seed, i)?;
            }
            let elapsed = start.elapsed().as_secs_f64();
            rows.push(BenchRow {
                n,
                r,
                beta: cfg.beta,
                method,
                samples: cfg.samples,
                mean_seconds_per_sample: elapsed / cfg.samples as f64,
                variates_per_sample: warm.variates,
            });
        }
    }

    ensure_parent(&cfg.output)?;
    let mut out = BufWriter::new(File::create(&cfg.output)?);
    writeln!(out, "n,r,beta,method,samples,mean_seconds_per_sample,variates_per_sample")?;
    for row in &rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.n,
            row.r,
            row.beta,
            row.method.name(),
            row.samples,
            row.mean_seconds_per_sample,
            row.variates_per_sample
        )?;
    }
    out.flush()?;

    let meta = BenchMeta {
        tool: "wishart-spectra",
        version: VERSION,
        generator: GENERATOR_ID,
        config: cfg,
        grid,
        skipped,
    };
    let f = File::create(sibling(&cfg.output, "meta.json"))?;
    serde_json::to_writer_pretty(BufWriter::new(f), &meta)?;
    Ok(rows)
}
