use rayon::prelude::*;

use super::{Method, RunConfig, Which};
use crate::ensembles::{
    sample_closed_form_n2, sample_dense_oracle, sample_extreme_tridiagonal, sample_spectrum_pencil,
    sample_spectrum_tridiagonal, EnsembleParams,
};
use crate::error::{invalid, Result};
use crate::randstream::RngStream;
use crate::Extreme;

/// One sample: eigenvalues (descending, or a single extreme value) and the
/// variates it consumed.
#[derive(Debug, Clone, PartialEq)]
pub struct Draw {
    pub values: Vec<f64>,
    pub variates: u64,
}

/// Draws sample `index` on stream `(seed, index)`.
pub fn draw_one(
    params: &EnsembleParams,
    method: Method,
    which: Which,
    seed: u64,
    index: u64,
) -> Result<Draw> {
    let mut rng = RngStream::new(seed, index);
    let values = match (method, which) {
        (Method::Tridiagonal, Which::Min) => {
            vec![sample_extreme_tridiagonal(params, Extreme::Smallest, &mut rng)?]
        }
        (Method::Tridiagonal, Which::Max) => {
            vec![sample_extreme_tridiagonal(params, Extreme::Largest, &mut rng)?]
        }
        _ => {
            let s = match method {
                Method::Tridiagonal => sample_spectrum_tridiagonal(params, &mut rng)?,
                Method::Pencil => sample_spectrum_pencil(params, &mut rng)?,
                Method::Dense => sample_dense_oracle(params, &mut rng)?,
                Method::Closed2 => {
                    if params.n != 2 {
                        return Err(invalid("closed2 requires n = 2"));
                    }
                    sample_closed_form_n2(params.r, params.beta, &mut rng)?
                }
            };
            match which {
                Which::All => s.values,
                Which::Min => vec![s.smallest()],
                Which::Max => vec![s.largest()],
            }
        }
    };
    Ok(Draw {
        values,
        variates: rng.variates_consumed(),
    })
}

/// Draws samples `0..count` on `threads` workers; results are in index
/// order and independent of the thread count.
pub fn draw_batch(
    params: &EnsembleParams,
    method: Method,
    which: Which,
    seed: u64,
    count: usize,
    threads: usize,
) -> Result<Vec<Draw>> {
    let job = || -> Result<Vec<Draw>> {
        (0..count as u64)
            .into_par_iter()
            .map(|i| draw_one(params, method, which, seed, i))
            .collect()
    };
    if threads <= 1 {
        return (0..count as u64)
            .map(|i| draw_one(params, method, which, seed, i))
            .collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| invalid(format!("cannot start {threads} worker threads: {e}")))?;
    pool.install(job)
}

pub(crate) fn draw_config(cfg: &RunConfig) -> Result<Vec<Draw>> {
    draw_batch(&cfg.params()?, cfg.method, cfg.which, cfg.seed, cfg.samples, cfg.threads)
}
