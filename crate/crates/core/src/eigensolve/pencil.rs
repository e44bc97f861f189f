use super::{check_tol, Spectrum};
use crate::ensembles::BidiagonalPencil;
use crate::error::{Error, Result};

/// Number of roots of `B_n` strictly above `x > 0`.
///
/// For `x > 0` every coupling `x b~` is positive, so `B_0, ..., B_n` is a
/// Sturm sequence: its sign changes, i.e. the negative ratios
/// `q_j = B_j / B_{j-1} = (x - a~_j) - x b~_{j-1} / q_{j-1}`, count the roots
/// above `x`.
fn roots_above(a: &[f64], b: &[f64], x: f64, guard: f64) -> usize {
    let mut count = 0;
    let mut q = x - a[0];
    for j in 0..a.len() {
        if j > 0 {
            let prev = if q.abs() < guard { -guard } else { q };
            q = (x - a[j]) - x * b[j - 1] / prev;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// Generalized eigenvalues of the pencil `(L, M)`, i.e. the roots of `B_n`.
///
/// With every `b~ > 0` the roots are real, simple and lie in `(0, trace)`.
/// Each one is bisected on the Sturm count of the recurrence, which encodes
/// the interlacing of all degrees at once. Roots of consecutive degrees can
/// agree to within an ulp, so brackets built from computed roots of `B_{n-1}`
/// are not reliable.
pub fn pencil_eigen_all(p: &BidiagonalPencil, tol: f64) -> Result<Spectrum> {
    check_tol(tol)?;
    let (a, b) = (p.a_tilde(), p.b_tilde());
    let n = a.len();
    let upper: f64 = a.iter().sum::<f64>() + b.iter().sum::<f64>();
    if let Some(j) = b.iter().position(|&v| !(v > 0.0)) {
        return Err(Error::BracketViolation {
            degree: j + 2,
            lo: 0.0,
            hi: upper,
        });
    }
    let outer = upper * (1.0 + 1e-12) + f64::MIN_POSITIVE;
    let guard = f64::EPSILON * upper.max(f64::MIN_POSITIVE);

    let mut roots = Vec::with_capacity(n);
    let mut iterations = 0;
    // descending: root k has exactly k roots above it
    for k in 0..n {
        let (mut lo, mut hi) = (0.0, outer);
        while hi - lo > tol * hi {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            iterations += 1;
            if roots_above(a, b, mid, guard) > k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    Ok(Spectrum::from_unsorted(
        roots,
        "pencil Sturm bisection",
        iterations,
    ))
}
