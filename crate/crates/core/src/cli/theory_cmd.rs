use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::svg::overlay_svg;
use super::RunConfig;
use crate::ensembles::EnsembleParams;
use crate::error::{invalid, Error, Result};
use crate::stats::{histogram, Bins};
use crate::theory::quadrature::integrate;
use crate::theory::{
    log_joint_density, pmin_cdf, pmin_exact, tw2_moments, tw2_pdf, tw_rescale, JointDensityQuery,
    Tw2Table, TwGrid, TW_S_MAX, TW_S_MIN,
};
use crate::{GENERATOR_ID, VERSION};

const TW_POINTS: usize = 321;
const PDF_POINTS: usize = 161;
const CURVE_POINTS: usize = 201;

#[derive(Serialize)]
struct TheoryMeta<'a> {
    tool: &'a str,
    version: &'a str,
    generator: &'a str,
    config: &'a RunConfig,
    tw_order: usize,
    tw_cache: Option<&'a Path>,
    tw2_mean: f64,
    tw2_variance: f64,
    files: Vec<PathBuf>,
}

fn tw_table(grid: &TwGrid, cache: Option<&Path>) -> Result<Tw2Table> {
    if let Some(path) = cache {
        if path.exists() {
            let t = Tw2Table::load(path)?;
            if t.rows.len() >= 2 {
                return Ok(t);
            }
        }
    }
    let t = Tw2Table::compute(grid, TW_S_MIN, TW_S_MAX, TW_POINTS)?;
    if let Some(path) = cache {
        super::ensure_parent(path)?;
        t.write_csv(BufWriter::new(File::create(path)?))?;
    }
    Ok(t)
}

fn linspace(lo: f64, hi: f64, k: usize) -> impl Iterator<Item = f64> {
    let step = (hi - lo) / (k - 1) as f64;
    (0..k).map(move |i| lo + step * i as f64)
}

fn joint(p: &EnsembleParams, l: &[f64]) -> f64 {
    log_joint_density(&JointDensityQuery {
        lambdas: l.to_vec(),
        params: *p,
    })
    .map_or(0.0, |d| d.log_value.exp())
}

/// Marginal densities of the largest and smallest eigenvalue at `x`
/// (`beta = 2`, `n <= 2`).
fn ordered_marginals(p: &EnsembleParams, x: f64) -> (f64, f64) {
    if x <= 0.0 {
        return (0.0, 0.0);
    }
    if p.n == 1 {
        let d = joint(p, &[x]);
        return (d, d);
    }
    let top = integrate(|mu| joint(p, &[x, mu]), 0.0, x, 16, 16);
    let tail = x + 60.0 + 4.0 * p.r;
    let bottom = integrate(|l| joint(p, &[l, x]), x, tail, 64, 16);
    (top, bottom)
}

fn sample_column(path: &Path) -> Result<(String, Vec<f64>)> {
    let mut lines = BufReader::new(File::open(path)?).lines();
    let header = lines
        .next()
        .transpose()?
        .ok_or_else(|| invalid(format!("{} is empty", path.display())))?;
    let cols: Vec<&str> = header.split(',').collect();
    if cols.first() != Some(&"sample_index") || cols.len() < 2 {
        return Err(invalid(format!("{} is not a sample CSV", path.display())));
    }
    // a full-spectrum file is reduced to its smallest eigenvalue
    let k = cols.len() - 1;
    let name = match cols[k] {
        "lambda_max" => "lambda_max",
        _ => "lambda_min",
    }
    .to_string();
    let mut values = Vec::new();
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let v = line
            .split(',')
            .nth(k)
            .and_then(|v| v.trim().parse::<f64>().ok())
            .ok_or_else(|| invalid(format!("bad row {line:?} in {}", path.display())))?;
        values.push(v);
    }
    Ok((name, values))
}

/// Writes reference curves into the directory `cfg.output`:
/// `tw2.csv`, `tw2_pdf.csv`, `pmin.csv` (`beta = 2`, `R = n`),
/// `density.csv` (`beta = 2`, `n <= 2`, no spike), `theory.json`, and
/// `overlay.svg` when `svg` is set and a sample CSV is given.
pub fn cmd_theory(
    cfg: &RunConfig,
    tw_order: usize,
    tw_cache: Option<&Path>,
    svg: bool,
    overlay: Option<&Path>,
) -> Result<Vec<PathBuf>> {
    let p = cfg.params()?;
    let grid = TwGrid::new(tw_order)?;
    if svg && overlay.is_none() {
        return Err(invalid("--svg needs --overlay <sample csv>"));
    }
    let dir = cfg.output.as_path();
    std::fs::create_dir_all(dir)?;
    let mut files = Vec::new();

    let table = tw_table(&grid, tw_cache)?;
    let path = dir.join("tw2.csv");
    table.write_csv(BufWriter::new(File::create(&path)?))?;
    files.push(path);

    let path = dir.join("tw2_pdf.csv");
    let mut out = BufWriter::new(File::create(&path)?);
    writeln!(out, "s,f2")?;
    let mut pdf_curve = Vec::with_capacity(PDF_POINTS);
    for s in linspace(-6.0, 2.0, PDF_POINTS) {
        let f = tw2_pdf(s, &grid)?.max(0.0);
        writeln!(out, "{s},{f}")?;
        pdf_curve.push((s, f));
    }
    out.flush()?;
    files.push(path);

    let hard_edge = p.beta == 2.0 && p.r == p.n as f64 && !p.is_spiked();
    if hard_edge {
        let path = dir.join("pmin.csv");
        let mut out = BufWriter::new(File::create(&path)?);
        writeln!(out, "x,p_min,cdf")?;
        for x in linspace(0.0, 8.0 / p.n as f64, CURVE_POINTS) {
            writeln!(out, "{x},{},{}", pmin_exact(x, p.n), pmin_cdf(x, p.n))?;
        }
        out.flush()?;
        files.push(path);
    }

    if p.beta == 2.0 && p.n <= 2 && !p.is_spiked() {
        let path = dir.join("density.csv");
        let mut out = BufWriter::new(File::create(&path)?);
        writeln!(out, "x,p_max,p_min")?;
        let hi = 2.0 * p.trace_mean() + 10.0 * p.trace_variance().sqrt();
        for x in linspace(0.0, hi, CURVE_POINTS) {
            let (top, bottom) = ordered_marginals(&p, x);
            writeln!(out, "{x},{top},{bottom}")?;
        }
        out.flush()?;
        files.push(path);
    }

    if let (true, Some(sample)) = (svg, overlay) {
        let (name, values) = sample_column(sample)?;
        let bins = cfg.bins.map_or(Bins::FreedmanDiaconis, Bins::Count);
        let (values, curve, title) = if name == "lambda_max" {
            let a = p.r - p.n as f64;
            let v: Vec<f64> = values.iter().map(|&l| tw_rescale(l, p.n as f64, a)).collect();
            (v, pdf_curve.clone(), "rescaled largest eigenvalue vs F2 density".to_string())
        } else {
            if !hard_edge {
                return Err(Error::Domain(
                    "smallest-eigenvalue overlay needs beta = 2, R = n and no spike".into(),
                ));
            }
            let hi = values.iter().cloned().fold(0.0, f64::max);
            let curve = linspace(0.0, hi, CURVE_POINTS)
                .map(|x| (x, pmin_exact(x, p.n)))
                .collect();
            (values, curve, format!("smallest eigenvalue vs {} exp(-{} x)", p.n, p.n))
        };
        let h = histogram(&values, &bins)?;
        let path = dir.join("overlay.svg");
        std::fs::write(&path, overlay_svg(&h, &curve, &title))?;
        files.push(path);
    }

    let (mean, variance) = tw2_moments(&grid)?;
    let path = dir.join("theory.json");
    let meta = TheoryMeta {
        tool: "wishart-spectra",
        version: VERSION,
        generator: GENERATOR_ID,
        config: cfg,
        tw_order,
        tw_cache,
        tw2_mean: mean,
        tw2_variance: variance,
        files: files.clone(),
    };
    serde_json::to_writer_pretty(BufWriter::new(File::create(&path)?), &meta)?;
    files.push(path);
    Ok(files)
}
