use num_complex::Complex64;
use proptest::prelude::*;
use wishart_spectra::eigensolve::{
    charpoly_pencil, charpoly_tridiag, dense_hermitian_eigen, pencil_eigen_all, sturm_count,
    tridiag_eigen_all, tridiag_eigen_extreme, tridiag_norm,
};
use wishart_spectra::ensembles::to_tridiagonal;
use wishart_spectra::{
    BidiagonalFactor, BidiagonalPencil, DenseHermitian, Extreme, SymTridiagonal, DEFAULT_TOL,
};

/// Positive semidefinite tridiagonals `B B^T` from a random bidiagonal factor.
fn tridiag() -> impl Strategy<Value = SymTridiagonal> {
    (1usize..=20).prop_flat_map(|n| {
        (
            prop::collection::vec(0.1f64..4.0, n),
            prop::collection::vec(0.05f64..3.0, n - 1),
        )
            .prop_map(|(d, s)| to_tridiagonal(&BidiagonalFactor::new(d, s).unwrap()))
    })
}

fn pencil(max: usize) -> impl Strategy<Value = BidiagonalPencil> {
    (1usize..=max).prop_flat_map(|n| {
        (
            prop::collection::vec(0.05f64..10.0, n),
            prop::collection::vec(0.05f64..10.0, n - 1),
        )
            .prop_map(|(a, b)| BidiagonalPencil::new(a, b).unwrap())
    })
}

/// Determinant by cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    if n == 0 {
        return 1.0;
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<f64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, v)| *v).collect())
                .collect();
            let sign = if c % 2 == 0 { 1.0 } else { -1.0 };
            sign * m[0][c] * cofactor_det(&minor)
        })
        .sum()
}

/// `x M_j - L_j`: L has diagonal a~ and unit superdiagonal, M has unit
/// diagonal and subdiagonal -b~.
fn pencil_block(p: &BidiagonalPencil, x: f64, j: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; j]; j];
    for i in 0..j {
        m[i][i] = x - p.a_tilde()[i];
        if i + 1 < j {
            m[i][i + 1] = -1.0;
            m[i + 1][i] = -x * p.b_tilde()[i];
        }
    }
    m
}

fn dense_of(t: &SymTridiagonal) -> DenseHermitian {
    let n = t.len();
    let e = t.to_dense().into_iter().map(|v| Complex64::new(v, 0.0)).collect();
    DenseHermitian::new(n, e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sturm_count_is_monotone_and_matches_spectrum(t in tridiag(), xs in prop::collection::vec(-5.0f64..60.0, 8)) {
        let s = tridiag_eigen_all(&t, DEFAULT_TOL).unwrap();
        let margin = 10.0 * DEFAULT_TOL * tridiag_norm(&t);
        let mut xs = xs;
        xs.sort_by(f64::total_cmp);
        let mut prev = 0;
        for &x in &xs {
            let c = sturm_count(&t, x);
            prop_assert!(c >= prev);
            prev = c;
            if s.values.iter().all(|v| (v - x).abs() > margin) {
                prop_assert_eq!(c, s.values.iter().filter(|&&v| v < x).count());
            }
        }
    }

    #[test]
    fn trace_is_preserved(t in tridiag()) {
        let s = tridiag_eigen_all(&t, DEFAULT_TOL).unwrap();
        let tr: f64 = t.diag().iter().sum();
        let bound = 1e-10 * t.len() as f64 * tridiag_norm(&t);
        prop_assert!((s.trace() - tr).abs() <= bound);
    }

    #[test]
    fn charpoly_matches_product_of_roots(t in tridiag(), u in prop::collection::vec(0.0f64..1.0, 5)) {
        let s = tridiag_eigen_all(&t, DEFAULT_TOL).unwrap();
        let (lo, hi) = (s.smallest() - 1.0, s.largest() + 1.0);
        for f in u {
            let x = lo + f * (hi - lo);
            let prod: f64 = s.values.iter().map(|l| x - l).product();
            let p = charpoly_tridiag(&t, x).value();
            prop_assert!((p - prod).abs() <= 1e-8 * prod.abs(), "{} vs {}", p, prod);
        }
    }

    #[test]
    fn charpoly_sign_follows_sturm_parity(t in tridiag(), x in -5.0f64..60.0) {
        let p = charpoly_tridiag(&t, x);
        let s = tridiag_eigen_all(&t, DEFAULT_TOL).unwrap();
        if s.values.iter().all(|v| (v - x).abs() > 1e-6 * tridiag_norm(&t)) {
            // det(x - T) has one negative factor per eigenvalue above x
            let above = t.len() - sturm_count(&t, x);
            let expected = if above % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(p.sign, expected);
        }
    }

    #[test]
    fn extremes_match_full_spectrum(t in tridiag()) {
        let s = tridiag_eigen_all(&t, DEFAULT_TOL).unwrap();
        let w = 2.0 * DEFAULT_TOL * tridiag_norm(&t);
        let lo = tridiag_eigen_extreme(&t, Extreme::Smallest, DEFAULT_TOL).unwrap();
        let hi = tridiag_eigen_extreme(&t, Extreme::Largest, DEFAULT_TOL).unwrap();
        prop_assert!((lo - s.smallest()).abs() <= w);
        prop_assert!((hi - s.largest()).abs() <= w);
    }

    #[test]
    fn pencil_charpoly_is_a_determinant(p in pencil(6), x in -3.0f64..30.0) {
        for j in 0..=p.len() {
            let det = cofactor_det(&pencil_block(&p, x, j));
            let v = charpoly_pencil(&p, x, j).unwrap().value();
            let scale = det.abs().max(1e-300);
            prop_assert!((v - det).abs() <= 1e-10 * scale.max(1.0) , "j={} {} vs {}", j, v, det);
        }
    }

    #[test]
    fn pencil_roots_interlace_and_sum_to_trace(p in pencil(10)) {
        let s = pencil_eigen_all(&p, DEFAULT_TOL).unwrap();
        let tr: f64 = p.a_tilde().iter().sum::<f64>() + p.b_tilde().iter().sum::<f64>();
        prop_assert!((s.trace() - tr).abs() <= 1e-8 * tr);
        let n = p.len();
        if n >= 2 {
            // bisect to machine precision; roots of consecutive degrees can
            // then only meet when their true gap is below one ulp
            let full = pencil_eigen_all(&p, f64::EPSILON).unwrap();
            let lower = BidiagonalPencil::new(p.a_tilde()[..n - 1].to_vec(), p.b_tilde()[..n - 2].to_vec()).unwrap();
            let inner = pencil_eigen_all(&lower, f64::EPSILON).unwrap();
            // descending: s0 > i0 > s1 > i1 > ...
            for k in 0..n - 1 {
                let (hi, mid, lo) = (full.values[k], inner.values[k], full.values[k + 1]);
                prop_assert!(hi >= mid && mid >= lo && hi > lo,
                    "k={} {} {} {}", k, hi, mid, lo);
            }
        }
    }
}

#[test]
fn tridiagonal_matches_dense_jacobi() {
    let mut seed = 0x1234_5678u64;
    let mut next = || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (seed >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..20 {
        let n = 12;
        let d: Vec<f64> = (0..n).map(|_| 0.2 + 3.0 * next()).collect();
        let s: Vec<f64> = (0..n - 1).map(|_| 0.1 + 2.0 * next()).collect();
        let t = to_tridiagonal(&BidiagonalFactor::new(d, s).unwrap());
        let s = tridiag_eigen_all(&t, DEFAULT_TOL).unwrap();
        let d = dense_hermitian_eigen(&dense_of(&t), DEFAULT_TOL).unwrap();
        for (x, y) in s.values.iter().zip(&d.values) {
            assert!((x - y).abs() <= 1e-10 * d.largest(), "{x} vs {y}");
        }
    }
}
