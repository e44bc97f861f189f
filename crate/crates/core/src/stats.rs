//! Empirical distributions, Kolmogorov-Smirnov tests, histograms and moments.

use serde::{Deserialize, Serialize};

use crate::ensembles::EnsembleParams;
use crate::error::{invalid, Result};

/// Where a sample came from.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SampleLabel {
    pub sampler: String,
    pub params: Option<EnsembleParams>,
    pub seed: Option<u64>,
}

/// Sorted (ascending) finite values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalSample {
    values: Vec<f64>,
    pub label: SampleLabel,
}

impl EmpiricalSample {
    pub fn new(mut values: Vec<f64>, label: SampleLabel) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid("empirical sample must be nonempty"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(invalid("empirical sample contains non-finite values"));
        }
        values.sort_by(f64::total_cmp);
        Ok(EmpiricalSample { values, label })
    }

    pub fn unlabeled(values: Vec<f64>) -> Result<Self> {
        Self::new(values, SampleLabel::default())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Right-continuous empirical CDF, `#{v <= x} / N`.
    pub fn ecdf(&self, x: f64) -> f64 {
        self.values.partition_point(|&v| v <= x) as f64 / self.values.len() as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KsKind {
    OneSample,
    TwoSample,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KsReport {
    pub kind: KsKind,
    pub statistic: f64,
    pub n_a: usize,
    pub n_b: Option<usize>,
    pub alpha: f64,
    pub critical: f64,
    pub pass: bool,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("alpha must lie in (0, 1), got {alpha}")))
    }
}

/// One-sample test against `cdf`; critical value `sqrt(-ln(alpha/2) / 2N)`.
pub fn ks_one_sample<F: Fn(f64) -> f64>(sample: &EmpiricalSample, cdf: F, alpha: f64) -> Result<KsReport> {
    check_alpha(alpha)?;
    let n = sample.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sample.values().iter().enumerate() {
        let f = cdf(x);
        d = d.max((i as f64 + 1.0) / n - f).max(f - i as f64 / n);
    }
    let critical = (-(alpha / 2.0).ln() / (2.0 * n)).sqrt();
    Ok(KsReport {
        kind: KsKind::OneSample,
        statistic: d,
        n_a: sample.len(),
        n_b: None,
        alpha,
        critical,
        pass: d < critical,
    })
}

/// Two-sample test; critical value `sqrt(-ln(alpha/2) (n_a + n_b) / (2 n_a n_b))`.
pub fn ks_two_sample(a: &EmpiricalSample, b: &EmpiricalSample, alpha: f64) -> Result<KsReport> {
    check_alpha(alpha)?;
    let (xa, xb) = (a.values(), b.values());
    let (na, nb) = (xa.len() as f64, xb.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < xa.len() && j < xb.len() {
        let x = xa[i].min(xb[j]);
        while i < xa.len() && xa[i] <= x {
            i += 1;
        }
        while j < xb.len() && xb[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    let critical = (-(alpha / 2.0).ln() * (na + nb) / (2.0 * na * nb)).sqrt();
    Ok(KsReport {
        kind: KsKind::TwoSample,
        statistic: d,
        n_a: xa.len(),
        n_b: Some(xb.len()),
        alpha,
        critical,
        pass: d < critical,
    })
}

/// How to choose histogram bins.
#[derive(Debug, Clone, PartialEq)]
pub enum Bins {
    /// Equal-width bins spanning `[min, max]`.
    Count(usize),
    /// Explicit ascending edges; values outside are not counted.
    Edges(Vec<f64>),
    /// Width `2 IQR / N^{1/3}`.
    FreedmanDiaconis,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub densities: Vec<f64>,
    /// Number of values that fell inside the edges.
    pub total: usize,
}

impl Histogram {
    pub fn centers(&self) -> Vec<f64> {
        self.edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect()
    }
}

fn quantile_sorted(v: &[f64], q: f64) -> f64 {
    let pos = q * (v.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    v[lo] + (v[hi] - v[lo]) * (pos - lo as f64)
}

/// Density-normalized histogram: `sum density * width = 1` over the counted values.
pub fn histogram(values: &[f64], bins: &Bins) -> Result<Histogram> {
    if values.iter().any(|v| !v.is_finite()) {
        return Err(invalid("histogram input contains non-finite values"));
    }
    if values.is_empty() {
        return Err(invalid("histogram input is empty"));
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let (lo, hi) = (sorted[0], sorted[sorted.len() - 1]);
    let equal = |k: usize| -> Vec<f64> {
        let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 0.5, hi + 0.5) };
        let w = (hi - lo) / k as f64;
        let mut e: Vec<f64> = (0..=k).map(|i| lo + w * i as f64).collect();
        e[k] = hi;
        e
    };
    let edges = match bins {
        Bins::Count(0) => return Err(invalid("bin count must be at least 1")),
        Bins::Count(k) => equal(*k),
        Bins::Edges(e) => {
            if e.len() < 2 || e.windows(2).any(|w| !(w[0] < w[1])) {
                return Err(invalid("histogram edges must be strictly ascending, at least two"));
            }
            e.clone()
        }
        Bins::FreedmanDiaconis => {
            let iqr = quantile_sorted(&sorted, 0.75) - quantile_sorted(&sorted, 0.25);
            let width = 2.0 * iqr / (sorted.len() as f64).cbrt();
            let k = if width > 0.0 {
                (((hi - lo) / width).ceil() as usize).clamp(1, 10_000)
            } else {
                1
            };
            equal(k)
        }
    };
    let k = edges.len() - 1;
    let mut counts = vec![0usize; k];
    for &v in &sorted {
        if v < edges[0] || v > edges[k] {
            continue;
        }
        // last bin is closed on the right
        let idx = edges.partition_point(|&e| e <= v).saturating_sub(1).min(k - 1);
        counts[idx] += 1;
    }
    let total: usize = counts.iter().sum();
    let densities = counts
        .iter()
        .zip(edges.windows(2))
        .map(|(&c, w)| if total == 0 { 0.0 } else { c as f64 / (total as f64 * (w[1] - w[0])) })
        .collect();
    Ok(Histogram {
        edges,
        densities,
        total,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub mean: f64,
    /// Unbiased (`N - 1`) variance.
    pub variance: f64,
    /// `m3 / m2^{3/2}` from central sample moments; 0 for constant samples.
    pub skewness: f64,
}

pub fn moments(values: &[f64]) -> Result<Moments> {
    if values.len() < 2 {
        return Err(invalid("moments need at least two values"));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let (mut m2, mut m3) = (0.0, 0.0);
    for v in values {
        let d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    let variance = m2 / (n - 1.0);
    let (m2, m3) = (m2 / n, m3 / n);
    let skewness = if m2 > 0.0 { m3 / m2.powf(1.5) } else { 0.0 };
    Ok(Moments {
        mean,
        variance,
        skewness,
    })
}
