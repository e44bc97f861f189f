//! Random structured matrices whose spectra follow the beta-Laguerre law.
//!
//! Three routes produce the same eigenvalue distribution:
//!
//! * a lower bidiagonal factor `B` with independent scaled chi entries,
//!   whose Gram matrix is a symmetric tridiagonal ([`sample_spectrum_tridiagonal`]),
//! * a pair of bidiagonal matrices `(L, M)` whose generalized eigenvalues are
//!   the roots of a random three-term recurrence ([`sample_spectrum_pencil`]),
//! * the dense Gaussian construction `W = H^H H` ([`sample_dense_oracle`]),
//!   which needs `beta * R * n` variates instead of `2n - 1`.
//!
//! For `n = 2` there is also an exact two-variate sampler,
//! [`sample_closed_form_n2`].
//!
//! A single spike `sigma1 != 1` (column one of `H` has variance `sigma1^2`)
//! scales the top-left bidiagonal entry by `sigma1`, and the last pencil
//! coefficients `a~_n`, `b~_{n-1}` by `sigma1^2`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eigensolve::{
    dense_hermitian_eigen, pencil_eigen_all, tridiag_eigen_all, tridiag_eigen_extreme, Extreme,
    Spectrum, DEFAULT_TOL,
};
use crate::error::{invalid, Result};
use crate::randstream::{Dof, RngStream};

/// Parameters `(n, R, beta, sigma1)` of a sampled ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleParams {
    pub n: usize,
    pub r: f64,
    pub beta: f64,
    pub sigma1: f64,
}

impl EnsembleParams {
    pub fn new(n: usize, r: f64, beta: f64, sigma1: f64) -> Result<Self> {
        let p = EnsembleParams { n, r, beta, sigma1 };
        p.validate()?;
        Ok(p)
    }

    /// Unspiked ensemble.
    pub fn unspiked(n: usize, r: f64, beta: f64) -> Result<Self> {
        Self::new(n, r, beta, 1.0)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(invalid("n must be at least 1"));
        }
        if !self.r.is_finite() || self.r < self.n as f64 {
            return Err(invalid(format!("R must be >= n = {}, got {}", self.n, self.r)));
        }
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return Err(invalid(format!("beta must be positive, got {}", self.beta)));
        }
        if !(self.sigma1.is_finite() && self.sigma1 > 0.0) {
            return Err(invalid(format!("sigma1 must be positive, got {}", self.sigma1)));
        }
        Ok(())
    }

    /// Exponent parameter `a = R - n + 1 - 2/beta` of the joint density.
    pub fn a(&self) -> f64 {
        self.r - self.n as f64 + 1.0 - 2.0 / self.beta
    }

    pub fn is_spiked(&self) -> bool {
        self.sigma1 != 1.0
    }

    /// `E[tr W] = R (sigma1^2 + n - 1)`.
    pub fn trace_mean(&self) -> f64 {
        self.r * (self.sigma1.powi(2) + self.n as f64 - 1.0)
    }

    /// `Var[tr W] = 2 R (sigma1^4 + n - 1) / beta`.
    pub fn trace_variance(&self) -> f64 {
        2.0 * self.r * (self.sigma1.powi(4) + self.n as f64 - 1.0) / self.beta
    }

    /// Checks that the dense Gaussian construction is available.
    pub fn require_dense(&self) -> Result<usize> {
        if self.beta != 1.0 && self.beta != 2.0 {
            return Err(invalid(format!(
                "the dense construction needs beta in {{1, 2}}, got {}",
                self.beta
            )));
        }
        if self.r.fract() != 0.0 {
            return Err(invalid(format!(
                "the dense construction needs integer R, got {}",
                self.r
            )));
        }
        Ok(self.r as usize)
    }
}

/// Lower bidiagonal `B` with `diag = (x_R, x_{R-1}, ..., x_{R-n+1})` on the
/// diagonal and `sub = (y_{n-1}, ..., y_1)` directly below it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BidiagonalFactor {
    diag: Vec<f64>,
    sub: Vec<f64>,
}

impl BidiagonalFactor {
    pub fn new(diag: Vec<f64>, sub: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || sub.len() + 1 != diag.len() {
            return Err(invalid(format!(
                "bidiagonal factor needs n >= 1 diagonal and n - 1 subdiagonal entries, got {} and {}",
                diag.len(),
                sub.len()
            )));
        }
        if diag.iter().chain(&sub).any(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(invalid("bidiagonal entries must be positive and finite"));
        }
        Ok(BidiagonalFactor { diag, sub })
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Row-major dense copy of `B`.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.len();
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] = self.diag[i];
            if i + 1 < n {
                m[(i + 1) * n + i] = self.sub[i];
            }
        }
        m
    }
}

/// Symmetric tridiagonal stored in matrix order: `diag[0] = a_n` is the
/// top-left entry and `off[0] = b_{n-1}` couples rows 0 and 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(invalid(format!(
                "tridiagonal needs n >= 1 diagonal and n - 1 off-diagonal entries, got {} and {}",
                diag.len(),
                off.len()
            )));
        }
        if diag.iter().chain(&off).any(|v| !v.is_finite()) {
            return Err(invalid("tridiagonal entries must be finite"));
        }
        Ok(SymTridiagonal { diag, off })
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.len();
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            m[i * n + i] = self.diag[i];
            if i + 1 < n {
                m[i * n + i + 1] = self.off[i];
                m[(i + 1) * n + i] = self.off[i];
            }
        }
        m
    }
}

/// Coefficients of the pencil: `L` has diagonal `a~_1..a~_n` and a unit
/// superdiagonal, `M` has a unit diagonal and subdiagonal `-b~_1..-b~_{n-1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BidiagonalPencil {
    a_tilde: Vec<f64>,
    b_tilde: Vec<f64>,
}

impl BidiagonalPencil {
    pub fn new(a_tilde: Vec<f64>, b_tilde: Vec<f64>) -> Result<Self> {
        if a_tilde.is_empty() || b_tilde.len() + 1 != a_tilde.len() {
            return Err(invalid(format!(
                "pencil needs n >= 1 and n - 1 coefficients, got {} and {}",
                a_tilde.len(),
                b_tilde.len()
            )));
        }
        if a_tilde.iter().chain(&b_tilde).any(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(invalid("pencil coefficients must be positive and finite"));
        }
        Ok(BidiagonalPencil { a_tilde, b_tilde })
    }

    /// Skips the positivity check; used to exercise solver diagnostics.
    pub fn new_unchecked(a_tilde: Vec<f64>, b_tilde: Vec<f64>) -> Self {
        BidiagonalPencil { a_tilde, b_tilde }
    }

    pub fn a_tilde(&self) -> &[f64] {
        &self.a_tilde
    }

    pub fn b_tilde(&self) -> &[f64] {
        &self.b_tilde
    }

    pub fn len(&self) -> usize {
        self.a_tilde.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a_tilde.is_empty()
    }

    /// Row-major dense `(L_j, M_j)`, the leading `j x j` blocks.
    pub fn dense_blocks(&self, j: usize) -> (Vec<f64>, Vec<f64>) {
        let mut l = vec![0.0; j * j];
        let mut m = vec![0.0; j * j];
        for i in 0..j {
            l[i * j + i] = self.a_tilde[i];
            m[i * j + i] = 1.0;
            if i + 1 < j {
                l[i * j + i + 1] = 1.0;
                m[(i + 1) * j + i] = -self.b_tilde[i];
            }
        }
        (l, m)
    }
}

/// Dense Hermitian (or real symmetric) matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseHermitian {
    order: usize,
    entries: Vec<Complex64>,
}

impl DenseHermitian {
    /// Checks Hermitian symmetry up to a relative `1e-12`, then symmetrizes exactly.
    pub fn new(order: usize, mut entries: Vec<Complex64>) -> Result<Self> {
        if order == 0 || entries.len() != order * order {
            return Err(invalid(format!(
                "dense matrix of order {order} needs {} entries, got {}",
                order * order,
                entries.len()
            )));
        }
        let scale = entries.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
        for i in 0..order {
            for j in i..order {
                let (u, l) = (entries[i * order + j], entries[j * order + i]);
                if (u - l.conj()).norm() > 1e-12 * scale {
                    return Err(invalid(format!("matrix is not Hermitian at ({i}, {j})")));
                }
                let avg = (u + l.conj()) * 0.5;
                entries[i * order + j] = if i == j { Complex64::new(avg.re, 0.0) } else { avg };
                entries[j * order + i] = entries[i * order + j].conj();
            }
        }
        Ok(DenseHermitian { order, entries })
    }

    /// `H^H H` for a row-major `rows x cols` matrix `H`.
    pub fn gram(h: &[Complex64], rows: usize, cols: usize) -> Result<Self> {
        if h.len() != rows * cols || cols == 0 {
            return Err(invalid("gram: shape mismatch"));
        }
        let mut w = vec![Complex64::new(0.0, 0.0); cols * cols];
        for i in 0..cols {
            for j in i..cols {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..rows {
                    s += h[k * cols + i].conj() * h[k * cols + j];
                }
                w[i * cols + j] = s;
                w[j * cols + i] = s.conj();
            }
            w[i * cols + i].im = 0.0;
        }
        Ok(DenseHermitian {
            order: cols,
            entries: w,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }
}

fn dof(v: f64) -> Result<Dof> {
    Dof::new(v)
}

/// Draws `B` row by row: `diag[k] = chi_{beta(R-k)} / sqrt(beta)`,
/// `sub[k] = chi_{beta(n-1-k)} / sqrt(beta)`; the top-left entry is
/// multiplied by `sigma1`. Consumes `2n - 1` variates.
pub fn build_bidiagonal(params: &EnsembleParams, rng: &mut RngStream) -> Result<BidiagonalFactor> {
    params.validate()?;
    let n = params.n;
    let beta = params.beta;
    let scale = 1.0 / beta.sqrt();
    // validate all dofs before drawing anything
    let diag_dofs: Vec<Dof> = (0..n)
        .map(|k| dof(beta * (params.r - k as f64)))
        .collect::<Result<_>>()?;
    let sub_dofs: Vec<Dof> = (0..n - 1)
        .map(|k| dof(beta * (n - 1 - k) as f64))
        .collect::<Result<_>>()?;
    let mut diag = Vec::with_capacity(n);
    let mut sub = Vec::with_capacity(n - 1);
    diag.push(params.sigma1 * scale * rng.chi(diag_dofs[0]));
    for k in 1..n {
        sub.push(scale * rng.chi(sub_dofs[k - 1]));
        diag.push(scale * rng.chi(diag_dofs[k]));
    }
    Ok(BidiagonalFactor { diag, sub })
}

/// `a_n = x_R^2`, `a_i = y_i^2 + x_{R-n+i}^2`, `b_i = y_i x_{R-n+i+1}`, i.e.
/// the tridiagonal `B B^T`, which has the same spectrum as `B^T B`.
pub fn to_tridiagonal(b: &BidiagonalFactor) -> SymTridiagonal {
    let n = b.len();
    let (x, y) = (b.diag(), b.sub());
    let diag = (0..n)
        .map(|k| {
            let xk = x[k] * x[k];
            if k == 0 {
                xk
            } else {
                y[k - 1] * y[k - 1] + xk
            }
        })
        .collect();
    let off = (0..n - 1).map(|k| y[k] * x[k]).collect();
    SymTridiagonal { diag, off }
}

/// Spectrum of the tridiagonal model, descending.
pub fn sample_spectrum_tridiagonal(params: &EnsembleParams, rng: &mut RngStream) -> Result<Spectrum> {
    let b = build_bidiagonal(params, rng)?;
    tridiag_eigen_all(&to_tridiagonal(&b), DEFAULT_TOL)
}

/// One extreme eigenvalue of the tridiagonal model by Sturm bisection.
pub fn sample_extreme_tridiagonal(
    params: &EnsembleParams,
    which: Extreme,
    rng: &mut RngStream,
) -> Result<f64> {
    let b = build_bidiagonal(params, rng)?;
    tridiag_eigen_extreme(&to_tridiagonal(&b), which, DEFAULT_TOL)
}

/// Draws `a~_j = chi^2_{beta(R+1-j)} / beta` and `b~_j = chi^2_{beta j} / beta`,
/// with `sigma1^2` on `a~_n` and `b~_{n-1}`. Draw order is
/// `a~_1, b~_1, a~_2, ..., a~_n`, `2n - 1` variates in total.
pub fn build_pencil(params: &EnsembleParams, rng: &mut RngStream) -> Result<BidiagonalPencil> {
    params.validate()?;
    let n = params.n;
    let beta = params.beta;
    let spike = params.sigma1 * params.sigma1;
    let a_dofs: Vec<Dof> = (1..=n)
        .map(|j| dof(beta * (params.r + 1.0 - j as f64)))
        .collect::<Result<_>>()?;
    let b_dofs: Vec<Dof> = (1..n).map(|j| dof(beta * j as f64)).collect::<Result<_>>()?;
    let mut a_tilde = Vec::with_capacity(n);
    let mut b_tilde = Vec::with_capacity(n - 1);
    for j in 1..=n {
        let s = if j == n { spike } else { 1.0 };
        a_tilde.push(s * rng.chi_squared(a_dofs[j - 1]) / beta);
        if j < n {
            let s = if j == n - 1 { spike } else { 1.0 };
            b_tilde.push(s * rng.chi_squared(b_dofs[j - 1]) / beta);
        }
    }
    Ok(BidiagonalPencil { a_tilde, b_tilde })
}

/// Roots of the pencil recurrence, descending.
pub fn sample_spectrum_pencil(params: &EnsembleParams, rng: &mut RngStream) -> Result<Spectrum> {
    let p = build_pencil(params, rng)?;
    pencil_eigen_all(&p, DEFAULT_TOL)
}

/// Exact sampler for `n = 2`: `lambda_{1,2} = t (1 +- sqrt(s)) / 2` with
/// `t ~ chi^2_{4R}/2`, `s ~ Beta(3/2, R - 1)` for `beta = 2`, and
/// `t ~ chi^2_{2R}`, `s ~ Beta(1, (R - 1)/2)` for `beta = 1`.
pub fn sample_closed_form_n2(r: f64, beta: f64, rng: &mut RngStream) -> Result<Spectrum> {
    if !(r.is_finite() && r >= 2.0) {
        return Err(invalid(format!("closed form needs R >= 2, got {r}")));
    }
    let (t, s) = if beta == 2.0 {
        (0.5 * rng.chi_squared(dof(4.0 * r)?), rng.beta_variate(1.5, r - 1.0)?)
    } else if beta == 1.0 {
        (rng.chi_squared(dof(2.0 * r)?), rng.beta_variate(1.0, 0.5 * (r - 1.0))?)
    } else {
        return Err(invalid(format!("closed form needs beta in {{1, 2}}, got {beta}")));
    };
    let root = s.sqrt();
    Ok(Spectrum {
        values: vec![0.5 * t * (1.0 + root), 0.5 * t * (1.0 - root)],
        solver: "closed form n = 2".to_string(),
        iterations: 0,
    })
}

/// Row-major `R x n` Gaussian data matrix with column 0 scaled by `sigma1`.
/// Entries are standard complex normals for `beta = 2`, `N(0, 1)` for
/// `beta = 1`; `beta * R * n` variates.
pub fn gaussian_data_matrix(params: &EnsembleParams, rng: &mut RngStream) -> Result<Vec<Complex64>> {
    params.validate()?;
    let rows = params.require_dense()?;
    let n = params.n;
    let mut h = Vec::with_capacity(rows * n);
    for _ in 0..rows {
        for j in 0..n {
            let z = if params.beta == 2.0 {
                let (re, im) = rng.complex_standard_normal();
                Complex64::new(re, im)
            } else {
                Complex64::new(rng.standard_normal(), 0.0)
            };
            h.push(if j == 0 { z * params.sigma1 } else { z });
        }
    }
    Ok(h)
}

/// Spectrum of `W = H^H H` from the dense Gaussian construction.
pub fn sample_dense_oracle(params: &EnsembleParams, rng: &mut RngStream) -> Result<Spectrum> {
    let h = gaussian_data_matrix(params, rng)?;
    let w = DenseHermitian::gram(&h, params.r as usize, params.n)?;
    let mut s = dense_hermitian_eigen(&w, DEFAULT_TOL)?;
    let floor = DEFAULT_TOL * s.values.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
    crate::eigensolve::clamp_nonnegative(&mut s.values, floor)?;
    Ok(s)
}
