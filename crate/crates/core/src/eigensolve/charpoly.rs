use serde::{Deserialize, Serialize};

use crate::ensembles::{BidiagonalPencil, SymTridiagonal};
use crate::error::{invalid, Result};

/// A polynomial value stored as `sign * mantissa * 2^exponent`, with the
/// mantissa in `[0.5, 1)` (or zero), so that large degrees cannot overflow.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CharPolyEval {
    pub sign: i8,
    pub mantissa: f64,
    pub exponent: i64,
}

impl CharPolyEval {
    fn from_scaled(value: f64, exponent: i64) -> Self {
        if value == 0.0 {
            return CharPolyEval {
                sign: 0,
                mantissa: 0.0,
                exponent: 0,
            };
        }
        let (m, e) = frexp(value.abs());
        CharPolyEval {
            sign: if value < 0.0 { -1 } else { 1 },
            mantissa: m,
            exponent: exponent + e as i64,
        }
    }

    /// The value as an `f64`; saturates to infinity or zero out of range.
    pub fn value(&self) -> f64 {
        f64::from(self.sign) * self.mantissa * 2f64.powf(self.exponent as f64)
    }

    /// `ln |value|`, finite whenever the value is nonzero.
    pub fn ln_abs(&self) -> f64 {
        if self.sign == 0 {
            f64::NEG_INFINITY
        } else {
            self.mantissa.ln() + self.exponent as f64 * std::f64::consts::LN_2
        }
    }
}

/// `x = m * 2^e` with `0.5 <= |m| < 1`.
fn frexp(x: f64) -> (f64, i32) {
    if x == 0.0 || !x.is_finite() {
        return (x, 0);
    }
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i32;
    if biased == 0 {
        // subnormal
        let (m, e) = frexp(x * 2f64.powi(54));
        return (m, e - 54);
    }
    let m = f64::from_bits((bits & !(0x7ff << 52)) | (1022 << 52));
    (m, biased - 1022)
}

/// Runs `p_k = alpha_k p_{k-1} - gamma_k p_{k-2}` from `p_{-1} = 0`,
/// `p_0 = 1`, rescaling by a power of two whenever the magnitude leaves
/// `[2^-300, 2^300]`.
fn scaled_recurrence(steps: impl Iterator<Item = (f64, f64)>) -> CharPolyEval {
    const HUGE: f64 = 2.037_035_976_334_486e90; // 2^300
    const TINY: f64 = 1.0 / HUGE;
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut exponent: i64 = 0;
    for (alpha, gamma) in steps {
        let next = alpha * cur - gamma * prev;
        prev = cur;
        cur = next;
        let big = cur.abs().max(prev.abs());
        if !(TINY..=HUGE).contains(&big) && big > 0.0 && big.is_finite() {
            let (_, e) = frexp(big);
            let scale = 2f64.powi(-e);
            cur *= scale;
            prev *= scale;
            exponent += e as i64;
        }
    }
    CharPolyEval::from_scaled(cur, exponent)
}

/// `P_n(lambda) = det(lambda I - T)` via
/// `P_k = (lambda - a_k) P_{k-1} - b_{k-1}^2 P_{k-2}`, where `P_k` is the
/// characteristic polynomial of the trailing `k x k` block.
pub fn charpoly_tridiag(t: &SymTridiagonal, lambda: f64) -> CharPolyEval {
    let (a, b) = (t.diag(), t.off());
    let n = a.len();
    // step k uses a_k = diag[n-k] and b_{k-1} = off[n-k]
    scaled_recurrence((1..=n).map(|k| {
        let alpha = lambda - a[n - k];
        let gamma = if k >= 2 { b[n - k] * b[n - k] } else { 0.0 };
        (alpha, gamma)
    }))
}

/// `B_j(x) = det(x M_j - L_j)` for the leading `j x j` blocks of the pencil,
/// via `B_j = (x - a~_j) B_{j-1} - x b~_{j-1} B_{j-2}`.
pub fn charpoly_pencil(p: &BidiagonalPencil, x: f64, degree: usize) -> Result<CharPolyEval> {
    if degree > p.len() {
        return Err(invalid(format!(
            "pencil degree {degree} exceeds order {}",
            p.len()
        )));
    }
    Ok(pencil_recurrence(p.a_tilde(), p.b_tilde(), x, degree))
}

pub(crate) fn pencil_recurrence(a: &[f64], b: &[f64], x: f64, degree: usize) -> CharPolyEval {
    scaled_recurrence((1..=degree).map(|j| {
        let gamma = if j >= 2 { x * b[j - 2] } else { 0.0 };
        (x - a[j - 1], gamma)
    }))
}
