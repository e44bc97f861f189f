//! Airy function `Ai` and its derivative on `[-40, inf)`.
//!
//! Maclaurin series in the middle, asymptotic expansions truncated at their
//! smallest term outside it. The series loses digits to cancellation as
//! `|x|` grows (faster on the oscillatory side), which fixes the switch
//! points below; both routes agree to better than `1e-10` near each switch.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Above this the decaying asymptotic expansion is used.
pub const SWITCH_POSITIVE: f64 = 4.8;
/// Below this the oscillatory asymptotic expansion is used.
pub const SWITCH_NEGATIVE: f64 = -7.0;
/// Lower end of the supported domain.
pub const DOMAIN_MIN: f64 = -40.0;

/// `Ai(0) = 3^{-2/3} / Gamma(2/3)`.
const AI0: f64 = 0.355_028_053_887_817_239_3;
/// `-Ai'(0) = 3^{-1/3} / Gamma(1/3)`.
const AIP0: f64 = 0.258_819_403_792_806_798_4;

const ASYMPTOTIC_TERMS: usize = 40;

pub fn airy_ai(x: f64) -> Result<f64> {
    airy_pair(x).map(|p| p.0)
}

pub fn airy_ai_prime(x: f64) -> Result<f64> {
    airy_pair(x).map(|p| p.1)
}

/// `(Ai(x), Ai'(x))`.
pub fn airy_pair(x: f64) -> Result<(f64, f64)> {
    if x.is_nan() {
        return Err(Error::Domain("Ai(NaN)".into()));
    }
    if x < DOMAIN_MIN {
        return Err(Error::Domain(format!(
            "Ai({x}) is outside the supported domain [{DOMAIN_MIN}, inf)"
        )));
    }
    Ok(if x > SWITCH_POSITIVE {
        asymptotic_positive(x)
    } else if x < SWITCH_NEGATIVE {
        asymptotic_negative(x)
    } else {
        maclaurin(x)
    })
}

pub(crate) fn maclaurin(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    // f = 1 + sum tf, g = x + sum tg, with tf_k ~ x^{3k}, tg_k ~ x^{3k+1}
    let (mut f, mut g) = (1.0, x);
    let (mut tf, mut tg) = (1.0, x);
    // derivatives: f' = sum df_k, g' = 1 + sum dg_k
    let (mut fp, mut gp) = (0.0, 1.0);
    let (mut df, mut dg) = (0.5 * x * x, x3 / 3.0);
    for k in 1..400 {
        let kf = k as f64;
        tf *= x3 / ((3.0 * kf - 1.0) * (3.0 * kf));
        tg *= x3 / ((3.0 * kf) * (3.0 * kf + 1.0));
        f += tf;
        g += tg;
        fp += df;
        gp += dg;
        df *= x3 / ((3.0 * kf + 2.0) * (3.0 * kf));
        dg *= x3 / ((3.0 * kf + 3.0) * (3.0 * kf + 1.0));
        let small = |t: f64, s: f64| t.abs() <= 1e-17 * s.abs().max(1.0);
        if k > 2 && small(tf, f) && small(tg, g) && small(df, fp) && small(dg, gp) {
            break;
        }
    }
    (AI0 * f - AIP0 * g, AI0 * fp - AIP0 * gp)
}

/// `u_k` and `v_k` of the standard asymptotic expansions.
fn coefficients() -> ([f64; ASYMPTOTIC_TERMS], [f64; ASYMPTOTIC_TERMS]) {
    let mut u = [0.0; ASYMPTOTIC_TERMS];
    let mut v = [0.0; ASYMPTOTIC_TERMS];
    u[0] = 1.0;
    v[0] = 1.0;
    for k in 1..ASYMPTOTIC_TERMS {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        v[k] = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u[k];
    }
    (u, v)
}

/// Terms `c_k / zeta^k`, cut just before the smallest one.
fn truncated(c: &[f64; ASYMPTOTIC_TERMS], zeta: f64) -> Vec<f64> {
    let mut terms = Vec::with_capacity(ASYMPTOTIC_TERMS);
    let mut power = 1.0;
    for ck in c {
        terms.push(ck * power);
        power /= zeta;
    }
    let cut = (0..terms.len())
        .min_by(|&i, &j| terms[i].abs().total_cmp(&terms[j].abs()))
        .unwrap_or(terms.len());
    terms.truncate(cut);
    terms
}

pub(crate) fn asymptotic_positive(x: f64) -> (f64, f64) {
    let (u, v) = coefficients();
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let alt = |t: Vec<f64>| -> f64 {
        t.iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { *c } else { -c })
            .sum()
    };
    let su = alt(truncated(&u, zeta));
    let sv = alt(truncated(&v, zeta));
    let e = (-zeta).exp() / (2.0 * PI.sqrt());
    let q = x.powf(0.25);
    (e / q * su, -q * e * sv)
}

pub(crate) fn asymptotic_negative(x: f64) -> (f64, f64) {
    let (u, v) = coefficients();
    let z = -x;
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    // even terms alternate into the cosine part, odd terms into the sine part
    let split = |t: Vec<f64>| -> (f64, f64) {
        let (mut even, mut odd) = (0.0, 0.0);
        for (k, c) in t.iter().enumerate() {
            let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 0 {
                even += sign * c;
            } else {
                odd += sign * c;
            }
        }
        (even, odd)
    };
    let (pu, qu) = split(truncated(&u, zeta));
    let (pv, qv) = split(truncated(&v, zeta));
    let theta = zeta - PI / 4.0;
    let (s, c) = theta.sin_cos();
    let q = z.powf(0.25);
    let norm = 1.0 / PI.sqrt();
    (
        norm / q * (c * pu + s * qu),
        norm * q * (s * pv - c * qv),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    // Ai(x), Ai'(x) to 16 digits (mpmath, 30-digit working precision)
    const REFERENCE: &[(f64, f64, f64)] = &[
        (-40.0, -0.04593392343795725, -1.3890908752607183),
        (-12.0, -0.06655517505437313, 1.0231104533679707),
        (-7.5, 0.3217757163806479, 0.3188095066985546),
        (-6.9, 0.10168799773976482, -0.8710310586863874),
        (-5.0, 0.35076100902411433, 0.32719281855444315),
        (-2.0, 0.22740742820168558, 0.618259020741691),
        (0.0, 0.3550280538878172, -0.2588194037928068),
        (1.0, 0.13529241631288141, -0.1591474412967932),
        (4.7, 0.00021286092135859743, -0.00047218363998626406),
        (4.9, 0.00013599211701506743, -0.0003076159963376495),
        (10.0, 1.1047532552898686e-10, -3.5206336767389237e-10),
    ];

    #[test]
    fn matches_reference_values() {
        for &(x, ai, aip) in REFERENCE {
            let (a, d) = airy_pair(x).unwrap();
            assert!((a - ai).abs() < 1e-10, "Ai({x}) = {a}, want {ai}");
            assert!((d - aip).abs() < 1e-9, "Ai'({x}) = {d}, want {aip}");
        }
    }

    #[test]
    fn value_at_zero() {
        let closed = 3f64.powf(-2.0 / 3.0) / statrs::function::gamma::gamma(2.0 / 3.0);
        assert!((airy_ai(0.0).unwrap() - closed).abs() < 1e-10);
    }

    #[test]
    fn series_and_asymptotics_agree_in_overlap() {
        for i in 0..=24 {
            let x = 4.8 + 0.05 * i as f64;
            let (s, sp) = maclaurin(x);
            let (a, ap) = asymptotic_positive(x);
            assert!((s - a).abs() < 1e-10 && (sp - ap).abs() < 1e-10, "x = {x}");
        }
        for i in 0..=20 {
            let x = -6.5 - 0.05 * i as f64;
            let (s, sp) = maclaurin(x);
            let (a, ap) = asymptotic_negative(x);
            assert!((s - a).abs() < 1e-10 && (sp - ap).abs() < 1e-9, "x = {x}");
        }
    }

    #[test]
    fn satisfies_airy_equation() {
        let h = 1e-3;
        for i in 0..=100 {
            let x = -5.0 + 0.1 * i as f64;
            if (x - SWITCH_POSITIVE).abs() < 2.0 * h {
                continue;
            }
            let ai = |t: f64| airy_ai(t).unwrap();
            let second = (ai(x + h) - 2.0 * ai(x) + ai(x - h)) / (h * h);
            assert!((second - x * ai(x)).abs() < 1e-6, "x = {x}");
            // the derivative is consistent with the function
            let first = (ai(x + h) - ai(x - h)) / (2.0 * h);
            assert!((first - airy_ai_prime(x).unwrap()).abs() < 1e-6);
        }
    }

    #[test]
    fn positive_and_decreasing_on_right() {
        let mut prev = f64::INFINITY;
        for i in 0..=1000 {
            let v = airy_ai(0.01 * i as f64).unwrap();
            assert!(v > 0.0 && v < prev);
            prev = v;
        }
    }

    #[test]
    fn domain_guard() {
        assert!(airy_ai(-40.5).is_err());
        assert!(airy_ai(f64::NAN).is_err());
        assert_eq!(airy_ai(200.0).unwrap(), 0.0);
    }
}
