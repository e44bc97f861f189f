use super::{check_tol, clamp_nonnegative, Extreme, Spectrum};
use crate::ensembles::SymTridiagonal;
use crate::error::{Error, Result};

const MAX_QL_ITERATIONS: usize = 50;

/// Max absolute row sum; bounds the spectral radius.
pub fn tridiag_norm(t: &SymTridiagonal) -> f64 {
    let (a, b) = (t.diag(), t.off());
    let n = a.len();
    (0..n)
        .map(|i| {
            let left = if i > 0 { b[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { b[i].abs() } else { 0.0 };
            a[i].abs() + left + right
        })
        .fold(0.0, f64::max)
}

/// Gershgorin interval `(lo, hi)` containing every eigenvalue.
pub fn gershgorin_bounds(t: &SymTridiagonal) -> (f64, f64) {
    let (a, b) = (t.diag(), t.off());
    let n = a.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let left = if i > 0 { b[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { b[i].abs() } else { 0.0 };
        lo = lo.min(a[i] - left - right);
        hi = hi.max(a[i] + left + right);
    }
    (lo, hi)
}

/// Number of eigenvalues strictly below `x`, from the signs of the LDL^T
/// pivots `q_i = (a_i - x) - b_{i-1}^2 / q_{i-1}`.
pub fn sturm_count(t: &SymTridiagonal, x: f64) -> usize {
    let (a, b) = (t.diag(), t.off());
    if a.is_empty() {
        return 0;
    }
    // pivots smaller than this are replaced to avoid dividing by zero
    let guard = f64::EPSILON * tridiag_norm(t).max(f64::MIN_POSITIVE);
    let mut count = 0;
    let mut q = a[0] - x;
    for i in 0..a.len() {
        if i > 0 {
            let prev = if q.abs() < guard { -guard } else { q };
            q = (a[i] - x) - b[i - 1] * b[i - 1] / prev;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Raw eigenvalues (unsorted, unclamped) by implicit-shift QL with
/// deflation once `|e_m| <= tol * (|d_m| + |d_{m+1}|)`.
///
/// Returns the eigenvalues and the total number of QL iterations.
pub fn symmetric_tridiagonal_eigenvalues(
    diag: &[f64],
    off: &[f64],
    tol: f64,
) -> Result<(Vec<f64>, usize)> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = vec![0.0; n];
    e[..n.saturating_sub(1)].copy_from_slice(&off[..n.saturating_sub(1)]);
    let eps = tol.max(f64::EPSILON);
    let mut total = 0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= eps * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if iter == MAX_QL_ITERATIONS {
                return Err(Error::NonConvergence {
                    solver: "implicit QL",
                    iterations: iter,
                    detail: format!("eigenvalue index {l}, residual off-diagonal {:e}", e[l]),
                });
            }
            iter += 1;
            total += 1;

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok((d, total))
}

/// Full spectrum, descending. Values in `[-tol*||T||, 0)` are clamped to 0.
pub fn tridiag_eigen_all(t: &SymTridiagonal, tol: f64) -> Result<Spectrum> {
    check_tol(tol)?;
    let (mut values, iterations) = symmetric_tridiagonal_eigenvalues(t.diag(), t.off(), tol)?;
    clamp_nonnegative(&mut values, tol * tridiag_norm(t))?;
    Ok(Spectrum::from_unsorted(values, "tridiagonal implicit QL", iterations))
}

/// Smallest or largest eigenvalue by Sturm bisection inside the
/// Gershgorin interval, to absolute width `tol * ||T||`.
pub fn tridiag_eigen_extreme(t: &SymTridiagonal, which: Extreme, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    let n = t.len();
    let norm = tridiag_norm(t);
    let (mut lo, mut hi) = gershgorin_bounds(t);
    let width = tol * norm;
    // index (ascending) of the wanted eigenvalue
    let k = match which {
        Extreme::Smallest => 0,
        Extreme::Largest => n - 1,
    };
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(t, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let value = 0.5 * (lo + hi);
    Ok(if value < 0.0 && value >= -width { 0.0 } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: &[f64], b: &[f64]) -> SymTridiagonal {
        SymTridiagonal::new(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn diagonal_matrix_is_its_own_spectrum() {
        let m = t(&[3.0, 1.0, 2.0, 5.0], &[0.0, 0.0, 0.0]);
        let s = tridiag_eigen_all(&m, 1e-12).unwrap();
        assert_eq!(s.values, vec![5.0, 3.0, 2.0, 1.0]);
        let bottom = tridiag_eigen_extreme(&m, Extreme::Smallest, 1e-12).unwrap();
        assert!((bottom - 1.0).abs() < 1e-11);
        let top = tridiag_eigen_extreme(&m, Extreme::Largest, 1e-12).unwrap();
        assert!((top - 5.0).abs() < 1e-11);
    }

    #[test]
    fn two_by_two_closed_form() {
        let m = t(&[4.0, 10.0], &[6.0]);
        let s = tridiag_eigen_all(&m, 1e-12).unwrap();
        let r = 3.0 * 5f64.sqrt();
        assert!((s.values[0] - (7.0 + r)).abs() < 1e-12 * 16.0);
        assert!((s.values[1] - (7.0 - r)).abs() < 1e-12 * 16.0);
        let lo = tridiag_eigen_extreme(&m, Extreme::Smallest, 1e-12).unwrap();
        assert!((lo - (7.0 - r)).abs() < 1e-12 * 16.0);
        assert_eq!(sturm_count(&m, 7.0), 1);
    }

    #[test]
    fn sturm_outside_gershgorin() {
        let m = t(&[4.0, 10.0, 1.0], &[6.0, 0.5]);
        let (lo, hi) = gershgorin_bounds(&m);
        assert_eq!(sturm_count(&m, lo - 1e-9), 0);
        assert_eq!(sturm_count(&m, hi + 1e-9), 3);
    }

    #[test]
    fn single_entry() {
        let m = t(&[2.5], &[]);
        assert_eq!(tridiag_eigen_all(&m, 1e-12).unwrap().values, vec![2.5]);
        let v = tridiag_eigen_extreme(&m, Extreme::Largest, 1e-12).unwrap();
        assert!((v - 2.5).abs() < 1e-11);
    }

    #[test]
    fn clamps_roundoff_negatives_and_rejects_real_ones() {
        // singular Gram-like matrix: eigenvalues 0 and 2
        let m = t(&[1.0, 1.0], &[1.0]);
        let s = tridiag_eigen_all(&m, 1e-12).unwrap();
        assert!(s.smallest() >= 0.0 && s.smallest() < 1e-12);
        let bad = t(&[-1.0, 1.0], &[0.5]);
        assert!(matches!(
            tridiag_eigen_all(&bad, 1e-12),
            Err(Error::NegativeEigenvalue { .. })
        ));
    }

    #[test]
    fn rejects_bad_tolerance() {
        let m = t(&[1.0], &[]);
        assert!(tridiag_eigen_all(&m, 0.0).is_err());
        assert!(tridiag_eigen_all(&m, 1e-3).is_err());
        assert!(tridiag_eigen_extreme(&m, Extreme::Largest, -1.0).is_err());
    }
}
