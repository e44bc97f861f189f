//! Tracy-Widom (`beta = 2`) distribution as the Fredholm determinant
//! `F_2(s) = det(I - K_Ai)` on `L^2(s, inf)`.
//!
//! The determinant is discretized by a Nystrom method: `m` Gauss-Legendre
//! nodes on `(0, 1)` mapped to `(s, inf)` by `x = s + c tan(pi t / 2)`.

use std::f64::consts::PI;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::airy::airy_pair;
use super::quadrature::{gauss_legendre, integrate};
use crate::error::{invalid, Error, Result};

/// Lower end of the supported range; `F_2` is below `1e-30` there.
pub const TW_S_MIN: f64 = -10.0;
/// Upper end of the supported range; `1 - F_2` is below `1e-11` there.
pub const TW_S_MAX: f64 = 6.0;
pub const DEFAULT_TW_ORDER: usize = 48;

const FD_STEP: f64 = 1e-3;

/// Quadrature nodes for the Nystrom discretization; immutable and shareable.
#[derive(Debug, Clone, PartialEq)]
pub struct TwGrid {
    order: usize,
    scale: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl TwGrid {
    pub fn new(order: usize) -> Result<Self> {
        Self::with_scale(order, 10.0)
    }

    pub fn with_scale(order: usize, scale: f64) -> Result<Self> {
        if order < 4 {
            return Err(invalid(format!("quadrature order must be >= 4, got {order}")));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(invalid("map scale must be positive"));
        }
        let (x, w) = gauss_legendre(order);
        Ok(TwGrid {
            order,
            scale,
            nodes: x.iter().map(|x| 0.5 * (x + 1.0)).collect(),
            weights: w.iter().map(|w| 0.5 * w).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The grid with twice as many nodes.
    pub fn refined(&self) -> Self {
        Self::with_scale(2 * self.order, self.scale).expect("refining a valid grid")
    }
}

impl Default for TwGrid {
    fn default() -> Self {
        Self::new(DEFAULT_TW_ORDER).expect("default order is valid")
    }
}

/// `F_2(s)`. Below [`TW_S_MIN`] returns 0; the result is clamped to `[0, 1]`.
pub fn tw2_cdf(s: f64, grid: &TwGrid) -> Result<f64> {
    if s.is_nan() {
        return Err(Error::Domain("F2(NaN)".into()));
    }
    if s < TW_S_MIN {
        return Ok(0.0);
    }
    let m = grid.order;
    let mut x = Vec::with_capacity(m);
    let mut sw = Vec::with_capacity(m);
    for (t, w) in grid.nodes.iter().zip(&grid.weights) {
        let arg = 0.5 * PI * t;
        let cos = arg.cos();
        x.push(s + grid.scale * arg.tan());
        sw.push((w * grid.scale * 0.5 * PI / (cos * cos)).sqrt());
    }
    let mut ai = Vec::with_capacity(m);
    let mut aip = Vec::with_capacity(m);
    for &xi in &x {
        let (a, d) = airy_pair(xi)?;
        ai.push(a);
        aip.push(d);
    }
    let mut mat = vec![0.0; m * m];
    for i in 0..m {
        for j in 0..m {
            let k = if i == j {
                aip[i] * aip[i] - x[i] * ai[i] * ai[i]
            } else {
                (ai[i] * aip[j] - aip[i] * ai[j]) / (x[i] - x[j])
            };
            let v = -sw[i] * k * sw[j];
            if !v.is_finite() {
                return Err(Error::Quadrature(format!(
                    "non-finite Airy kernel entry at nodes ({}, {})",
                    x[i], x[j]
                )));
            }
            mat[i * m + j] = v + if i == j { 1.0 } else { 0.0 };
        }
    }
    Ok(determinant(&mut mat, m).clamp(0.0, 1.0))
}

/// `F_2(s)` together with `|F_2(s; m) - F_2(s; 2m)|` as an error estimate.
pub fn tw2_cdf_with_estimate(s: f64, grid: &TwGrid) -> Result<(f64, f64)> {
    let coarse = tw2_cdf(s, grid)?;
    let fine = tw2_cdf(s, &grid.refined())?;
    Ok((fine, (fine - coarse).abs()))
}

/// Density by a centered difference of [`tw2_cdf`] with step `1e-3`.
pub fn tw2_pdf(s: f64, grid: &TwGrid) -> Result<f64> {
    let d = (tw2_cdf(s + FD_STEP, grid)? - tw2_cdf(s - FD_STEP, grid)?) / (2.0 * FD_STEP);
    if d < -1e-8 {
        return Err(Error::Quadrature(format!("negative density {d:e} at s = {s}")));
    }
    Ok(d.max(0.0))
}

/// Mean and variance from `E S = b - int_a^b F` and
/// `E S^2 = b^2 - 2 int_a^b s F`, over the supported range.
pub fn tw2_moments(grid: &TwGrid) -> Result<(f64, f64)> {
    let (a, b) = (TW_S_MIN, TW_S_MAX);
    let mut err = None;
    let mut eval = |s: f64| match tw2_cdf(s, grid) {
        Ok(v) => v,
        Err(e) => {
            err.get_or_insert(e);
            0.0
        }
    };
    let int_f = integrate(&mut eval, a, b, 16, 16);
    let int_sf = integrate(|s| s * eval(s), a, b, 16, 16);
    if let Some(e) = err {
        return Err(e);
    }
    let mean = b - int_f;
    let second = b * b - 2.0 * int_sf;
    Ok((mean, second - mean * mean))
}

/// LU with partial pivoting; `a` is overwritten.
fn determinant(a: &mut [f64], n: usize) -> f64 {
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
            .unwrap_or(col);
        if a[pivot * n + col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            det = -det;
        }
        let p = a[col * n + col];
        det *= p;
        for row in (col + 1)..n {
            let f = a[row * n + col] / p;
            if f != 0.0 {
                for k in (col + 1)..n {
                    a[row * n + k] -= f * a[col * n + k];
                }
            }
        }
    }
    det
}

/// A tabulated `F_2` curve, cached as CSV with columns `s,F2,quadrature_order`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tw2Table {
    pub rows: Vec<Tw2Row>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tw2Row {
    pub s: f64,
    pub f2: f64,
    pub quadrature_order: usize,
}

impl Tw2Table {
    /// `F_2` on `points` equally spaced values from `lo` to `hi`.
    pub fn compute(grid: &TwGrid, lo: f64, hi: f64, points: usize) -> Result<Self> {
        if points < 2 || !(hi > lo) {
            return Err(invalid("table needs at least two points and lo < hi"));
        }
        let step = (hi - lo) / (points - 1) as f64;
        let rows = (0..points)
            .map(|i| {
                let s = lo + step * i as f64;
                tw2_cdf(s, grid).map(|f2| Tw2Row {
                    s,
                    f2,
                    quadrature_order: grid.order(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Tw2Table { rows })
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "s,F2,quadrature_order")?;
        for r in &self.rows {
            writeln!(out, "{},{},{}", r.s, r.f2, r.quadrature_order)?;
        }
        Ok(())
    }

    pub fn read_csv<R: BufRead>(input: R) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in input.lines().enumerate() {
            let line = line?;
            if i == 0 {
                if line.trim() != "s,F2,quadrature_order" {
                    return Err(invalid(format!("unexpected F2 table header {line:?}")));
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let f: Vec<&str> = line.split(',').collect();
            let parse = |k: usize| -> Result<f64> {
                f.get(k)
                    .and_then(|v| v.trim().parse().ok())
                    .ok_or_else(|| invalid(format!("bad F2 table line {}: {line:?}", i + 1)))
            };
            rows.push(Tw2Row {
                s: parse(0)?,
                f2: parse(1)?,
                quadrature_order: parse(2)? as usize,
            });
        }
        Ok(Tw2Table { rows })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::read_csv(std::io::BufReader::new(f))
    }

    /// Linear interpolation; 0 / 1 outside the table.
    pub fn interpolate(&self, s: f64) -> f64 {
        let rows = &self.rows;
        if rows.is_empty() || s <= rows[0].s {
            return rows.first().map_or(0.0, |r| if s < r.s { 0.0 } else { r.f2 });
        }
        let last = rows[rows.len() - 1];
        if s >= last.s {
            return 1.0;
        }
        let i = rows.partition_point(|r| r.s <= s);
        let (a, b) = (rows[i - 1], rows[i]);
        a.f2 + (b.f2 - a.f2) * (s - a.s) / (b.s - a.s)
    }
}
