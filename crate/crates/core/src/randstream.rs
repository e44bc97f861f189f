//! Seedable random variate streams.
//!
//! Every stream is a ChaCha20 generator keyed by a 64-bit seed with the
//! stream index selecting one of the 2^64 independent ChaCha streams. The
//! same `(seed, stream_index)` pair reproduces the same variates on every
//! platform.
//!
//! Gamma variates use the Marsaglia-Tsang squeeze/rejection method, with
//! `Gamma(a) = Gamma(a + 1) * U^(1/a)` for shapes below one. Chi and
//! chi-squared variates are derived from it, so continuous degrees of
//! freedom are supported.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Name and version of the generator, recorded in output metadata.
pub const GENERATOR_ID: &str = "ChaCha20 (rand_chacha 0.9, stream = index); normals: ziggurat (rand_distr 0.5); gamma: Marsaglia-Tsang";

/// Degrees of freedom of a chi / chi-squared variate.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Dof(f64);

impl Dof {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Dof(value))
        } else {
            Err(invalid(format!("degrees of freedom must be positive, got {value}")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// A single-consumer deterministic random stream.
///
/// `variates_consumed` counts top-level draws: one per call of a
/// distribution method, two per complex normal.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    stream_index: u64,
    rng: ChaCha20Rng,
    consumed: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream_index: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(stream_index);
        RngStream {
            seed,
            stream_index,
            rng,
            consumed: 0,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream_index(&self) -> u64 {
        self.stream_index
    }

    pub fn variates_consumed(&self) -> u64 {
        self.consumed
    }

    /// Uniform on `[0, 1)`.
    pub fn uniform01(&mut self) -> f64 {
        self.consumed += 1;
        self.raw_uniform()
    }

    pub fn standard_normal(&mut self) -> f64 {
        self.consumed += 1;
        self.raw_normal()
    }

    /// A standard complex normal: real and imaginary parts are independent
    /// `N(0, 1/2)`, so `E|z|^2 = 1`.
    pub fn complex_standard_normal(&mut self) -> (f64, f64) {
        self.consumed += 2;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        (s * self.raw_normal(), s * self.raw_normal())
    }

    pub fn gamma_variate(&mut self, shape: f64, scale: f64) -> Result<f64> {
        check_positive("gamma shape", shape)?;
        check_positive("gamma scale", scale)?;
        self.consumed += 1;
        Ok(scale * self.raw_gamma(shape))
    }

    /// `chi^2_k = 2 Gamma(k/2, 1)`.
    pub fn chi_squared(&mut self, dof: Dof) -> f64 {
        self.consumed += 1;
        2.0 * self.raw_gamma(0.5 * dof.value())
    }

    pub fn chi(&mut self, dof: Dof) -> f64 {
        self.chi_squared(dof).sqrt()
    }

    /// `Beta(a, b)` as `g_a / (g_a + g_b)`; always strictly inside `(0, 1)`.
    pub fn beta_variate(&mut self, a: f64, b: f64) -> Result<f64> {
        check_positive("beta parameter a", a)?;
        check_positive("beta parameter b", b)?;
        self.consumed += 1;
        loop {
            let ga = self.raw_gamma(a);
            let gb = self.raw_gamma(b);
            let v = ga / (ga + gb);
            if v > 0.0 && v < 1.0 {
                return Ok(v);
            }
        }
    }

    fn raw_uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    fn raw_normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    fn raw_gamma(&mut self, shape: f64) -> f64 {
        if shape < 1.0 {
            // boost: Gamma(a) = Gamma(a + 1) * U^(1/a)
            let g = self.marsaglia_tsang(shape + 1.0);
            let u = 1.0 - self.raw_uniform();
            return g * u.powf(1.0 / shape);
        }
        self.marsaglia_tsang(shape)
    }

    fn marsaglia_tsang(&mut self, shape: f64) -> f64 {
        let d = shape - 1.0 / 3.0;
        let c = 1.0 / (9.0 * d).sqrt();
        loop {
            let (x, v) = loop {
                let x = self.raw_normal();
                let v = 1.0 + c * x;
                if v > 0.0 {
                    break (x, v * v * v);
                }
            };
            let u = 1.0 - self.raw_uniform();
            let x2 = x * x;
            if u < 1.0 - 0.0331 * x2 * x2 {
                return d * v;
            }
            if u.ln() < 0.5 * x2 + d * (1.0 - v + v.ln()) {
                return d * v;
            }
        }
    }
}

fn check_positive(what: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("{what} must be positive, got {value}")))
    }
}
