use num_complex::Complex64;

use super::{check_tol, Spectrum};
use crate::ensembles::DenseHermitian;
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 100;

/// Full spectrum of a Hermitian matrix by cyclic Jacobi rotations, iterated
/// until the off-diagonal Frobenius norm drops below `tol * ||W||_F`.
///
/// Each rotation first removes the phase of `w_pq`, then applies the real
/// symmetric Jacobi rotation that annihilates it.
pub fn dense_hermitian_eigen(w: &DenseHermitian, tol: f64) -> Result<Spectrum> {
    check_tol(tol)?;
    let n = w.order();
    let mut a: Vec<Complex64> = w.entries().to_vec();
    let frob = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let target = tol * frob;
    let off_norm = |a: &[Complex64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                s += 2.0 * a[p * n + q].norm_sqr();
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NonConvergence {
                solver: "cyclic Jacobi",
                iterations: sweeps,
                detail: format!("off-diagonal norm {:e} > {:e}", off_norm(&a), target),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r == 0.0 || r < 1e-3 * target / n as f64 {
                    continue;
                }
                let phase = apq / r; // e^{i phi}
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta == 0.0 {
                    1.0
                } else {
                    theta.signum() / (theta.abs() + theta.hypot(1.0))
                };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                // J = D P with D = diag(1, e^{-i phi}) on (p, q)
                let jpp = Complex64::new(c, 0.0);
                let jpq = Complex64::new(s, 0.0);
                let jqp = -phase.conj() * s;
                let jqq = phase.conj() * c;
                // A <- A J
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * jpp + akq * jqp;
                    a[k * n + q] = akp * jpq + akq * jqq;
                }
                // A <- J^H A
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = jpp.conj() * apk + jqp.conj() * aqk;
                    a[q * n + k] = jpq.conj() * apk + jqq.conj() * aqk;
                }
                a[p * n + q] = Complex64::new(0.0, 0.0);
                a[q * n + p] = Complex64::new(0.0, 0.0);
                a[p * n + p] = Complex64::new(app - t * r, 0.0);
                a[q * n + q] = Complex64::new(aqq + t * r, 0.0);
            }
        }
    }
    let values = (0..n).map(|i| a[i * n + i].re).collect();
    Ok(Spectrum::from_unsorted(values, "cyclic Jacobi", sweeps))
}
