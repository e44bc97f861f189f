use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::ensembles::EnsembleParams;
use crate::error::{invalid, Result};

/// Eigenvalues at which to evaluate the joint density (any order).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointDensityQuery {
    pub lambdas: Vec<f64>,
    pub params: EnsembleParams,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogDensity {
    pub log_value: f64,
    /// `true` when `log_value` includes the normalization constant.
    pub normalized: bool,
}

/// `-ln C` for the ordered complex (`beta = 2`) density,
/// `C = prod_{j=0}^{n-1} Gamma(j + 1) Gamma(j + R - n + 1)`.
pub fn log_normalization_beta2(n: usize, r: f64) -> f64 {
    let a = r - n as f64;
    -(0..n)
        .map(|j| ln_gamma(j as f64 + 1.0) + ln_gamma(j as f64 + a + 1.0))
        .sum::<f64>()
}

/// Log of the joint eigenvalue density.
///
/// For `beta = 2` this is the normalized density of the ordered eigenvalues
/// `C^{-1} e^{-sum l} prod l^{R-n} prod |l_k - l_j|^2` restricted to
/// `l_1 > ... > l_n`; the value is symmetric, so input order does not
/// matter. Other `beta` give the unnormalized
/// `e^{-beta sum l / 2} prod l^{beta a / 2} prod |l_k - l_j|^beta`.
pub fn log_joint_density(q: &JointDensityQuery) -> Result<LogDensity> {
    let p = &q.params;
    p.validate()?;
    if p.is_spiked() {
        return Err(invalid("joint density is only available for sigma1 = 1"));
    }
    if q.lambdas.len() != p.n {
        return Err(invalid(format!(
            "expected {} eigenvalues, got {}",
            p.n,
            q.lambdas.len()
        )));
    }
    if q.lambdas.iter().any(|l| !(l.is_finite() && *l > 0.0)) {
        return Err(invalid("eigenvalues must be positive and finite"));
    }
    let beta = p.beta;
    let sum: f64 = q.lambdas.iter().sum();
    let sum_log: f64 = q.lambdas.iter().map(|l| l.ln()).sum();
    let mut vandermonde = 0.0;
    for (j, lj) in q.lambdas.iter().enumerate() {
        for lk in &q.lambdas[j + 1..] {
            vandermonde += (lk - lj).abs().ln();
        }
    }
    let unnormalized = -0.5 * beta * sum + 0.5 * beta * p.a() * sum_log + beta * vandermonde;
    if beta == 2.0 {
        Ok(LogDensity {
            log_value: unnormalized + log_normalization_beta2(p.n, p.r),
            normalized: true,
        })
    } else {
        Ok(LogDensity {
            log_value: unnormalized,
            normalized: false,
        })
    }
}

/// Density of the smallest eigenvalue for `R = n`, `beta = 2`: `n e^{-n x}`.
pub fn pmin_exact(x: f64, n: usize) -> f64 {
    if x < 0.0 {
        return 0.0;
    }
    n as f64 * (-(n as f64) * x).exp()
}

/// CDF matching [`pmin_exact`]: `1 - e^{-n x}`.
pub fn pmin_cdf(x: f64, n: usize) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    -(-(n as f64) * x).exp_m1()
}

/// Soft-edge rescaling of the largest eigenvalue,
/// `(lambda_1 - 4N - 2a) / (2 (2N)^{1/3})`.
pub fn tw_rescale(lambda1: f64, n: f64, a: f64) -> f64 {
    (lambda1 - 4.0 * n - 2.0 * a) / (2.0 * (2.0 * n).cbrt())
}
