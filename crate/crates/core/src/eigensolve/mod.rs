//! Eigenvalue computation for the structured ensembles.
//!
//! * [`tridiag_eigen_all`] / [`tridiag_eigen_extreme`] for symmetric
//!   tridiagonals (implicit QL and Sturm bisection),
//! * [`charpoly_tridiag`] / [`charpoly_pencil`] for the scaled three-term
//!   recurrences,
//! * [`pencil_eigen_all`] for the bidiagonal pencil, by Sturm-count bisection,
//! * [`dense_hermitian_eigen`], a cyclic Jacobi solver used as an oracle.

mod charpoly;
mod jacobi;
mod pencil;
mod tridiag;

use serde::{Deserialize, Serialize};

pub use charpoly::{charpoly_pencil, charpoly_tridiag, CharPolyEval};
pub use jacobi::dense_hermitian_eigen;
pub use pencil::pencil_eigen_all;
pub use tridiag::{
    gershgorin_bounds, sturm_count, symmetric_tridiagonal_eigenvalues, tridiag_eigen_all,
    tridiag_eigen_extreme, tridiag_norm,
};

use crate::error::{invalid, Error, Result};

/// Default relative tolerance for all solvers.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Which end of the spectrum to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extreme {
    Smallest,
    Largest,
}

/// Eigenvalues of one draw, sorted descending (`values[0]` is the largest).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub solver: String,
    pub iterations: usize,
}

impl Spectrum {
    /// Sorts descending. Ties keep their input order.
    pub fn from_unsorted(mut values: Vec<f64>, solver: &str, iterations: usize) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            values,
            solver: solver.to_string(),
            iterations,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn largest(&self) -> f64 {
        self.values[0]
    }

    pub fn smallest(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol <= 1e-6 {
        Ok(())
    } else {
        Err(invalid(format!("tolerance must lie in (0, 1e-6], got {tol}")))
    }
}

/// Sets roundoff negatives in `[-floor, 0)` to zero; anything lower is an error.
pub(crate) fn clamp_nonnegative(values: &mut [f64], floor: f64) -> Result<()> {
    for v in values.iter_mut() {
        if *v < 0.0 {
            if *v >= -floor {
                *v = 0.0;
            } else {
                return Err(Error::NegativeEigenvalue { value: *v, floor });
            }
        }
    }
    Ok(())
}
