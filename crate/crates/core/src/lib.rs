//! Eigenvalue sampling for Wishart and beta-Laguerre ensembles.
//!
//! The spectrum of an `n x n` Wishart matrix `W = H^H H` built from an
//! `R x n` Gaussian matrix can be sampled from `2n - 1` chi variates instead
//! of `beta R n` Gaussians:
//!
//! ```
//! use wishart_spectra::{ensembles, EnsembleParams, RngStream};
//!
//! let params = EnsembleParams::unspiked(30, 30.0, 2.0)?;
//! let mut rng = RngStream::new(1, 0);
//! let spectrum = ensembles::sample_spectrum_tridiagonal(&params, &mut rng)?;
//! assert_eq!(spectrum.len(), 30);
//! assert_eq!(rng.variates_consumed(), 59);
//! # Ok::<(), wishart_spectra::Error>(())
//! ```
//!
//! [`stats`] and [`theory`] provide the machinery used to check the samplers
//! against each other and against exact and limiting laws; [`cli`] drives
//! the `wishart-spectra` binary.

pub mod cli;
pub mod eigensolve;
pub mod ensembles;
mod error;
pub mod randstream;
pub mod stats;
pub mod theory;

pub use eigensolve::{Extreme, Spectrum, DEFAULT_TOL};
pub use ensembles::{BidiagonalFactor, BidiagonalPencil, DenseHermitian, EnsembleParams, SymTridiagonal};
pub use error::{Error, Result};
pub use randstream::{Dof, RngStream, GENERATOR_ID};

/// Crate version, embedded in every output file.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
