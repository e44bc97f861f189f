//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Exits non-zero when any hard criterion fails. Soft criteria (timing and
//! the Tracy-Widom KS distance) are printed but never change the exit code.

use std::time::Instant;

use wishart_spectra::cli::{draw_batch, Method, Which};
use wishart_spectra::eigensolve::{charpoly_tridiag, pencil_eigen_all, tridiag_eigen_all};
use wishart_spectra::ensembles::{build_bidiagonal, build_pencil, to_tridiagonal};
use wishart_spectra::stats::{ks_one_sample, ks_two_sample, moments, EmpiricalSample};
use wishart_spectra::theory::quadrature::integrate;
use wishart_spectra::theory::{
    airy_ai, log_joint_density, pmin_cdf, tw2_cdf, tw_rescale, JointDensityQuery, Tw2Table, TwGrid,
    TW2_MEAN, TW2_VARIANCE,
};
use wishart_spectra::{BidiagonalPencil, EnsembleParams, RngStream, DEFAULT_TOL};

const ALPHA: f64 = 0.001;

struct Outcome {
    pass: bool,
    soft: bool,
    detail: String,
}

fn hard(pass: bool, detail: String) -> Outcome {
    Outcome { pass, soft: false, detail }
}

fn column(p: &EnsembleParams, method: Method, which: Which, seed: u64, n: usize, k: usize) -> Vec<f64> {
    draw_batch(p, method, which, seed, n, 1)
        .unwrap()
        .into_iter()
        .map(|d| d.values[k])
        .collect()
}

fn sample(v: Vec<f64>) -> EmpiricalSample {
    EmpiricalSample::unlabeled(v).unwrap()
}

/// Two-sample KS per ordered eigenvalue; returns (all pass, worst D / critical).
fn equivalent(p: &EnsembleParams, a: Method, b: Method, n: usize, seed: u64) -> (bool, f64) {
    let da = draw_batch(p, a, Which::All, seed, n, 1).unwrap();
    let db = draw_batch(p, b, Which::All, seed + 1, n, 1).unwrap();
    let mut worst: f64 = 0.0;
    let mut pass = true;
    for k in 0..p.n {
        let sa = sample(da.iter().map(|d| d.values[k]).collect());
        let sb = sample(db.iter().map(|d| d.values[k]).collect());
        let r = ks_two_sample(&sa, &sb, ALPHA).unwrap();
        pass &= r.pass;
        worst = worst.max(r.statistic / r.critical);
    }
    (pass, worst)
}

fn smallest_eigenvalue_law() -> Outcome {
    let p = EnsembleParams::unspiked(30, 30.0, 2.0).unwrap();
    let start = Instant::now();
    let mins = column(&p, Method::Tridiagonal, Which::Min, 1, 20_000, 0);
    let secs = start.elapsed().as_secs_f64();
    let r = ks_one_sample(&sample(mins), |x| pmin_cdf(x, 30), ALPHA).unwrap();
    hard(
        r.pass && secs <= 60.0,
        format!("D = {:.5} (critical {:.5}), {:.2} s single-threaded (limit 60 s)", r.statistic, r.critical, secs),
    )
}

fn largest_eigenvalue_law() -> Vec<Outcome> {
    let p = EnsembleParams::unspiked(30, 30.0, 2.0).unwrap();
    let maxs = column(&p, Method::Tridiagonal, Which::Max, 1, 20_000, 0);
    let s: Vec<f64> = maxs.iter().map(|&l| tw_rescale(l, 30.0, 0.0)).collect();
    let m = moments(&s).unwrap();
    let sd = m.variance.sqrt();
    let table = Tw2Table::compute(&TwGrid::default(), -10.0, 6.0, 1601).unwrap();
    let ks = ks_one_sample(&sample(s), |x| table.interpolate(x), ALPHA).unwrap();
    vec![
        hard(
            (m.mean - TW2_MEAN).abs() <= 0.10,
            format!("mean {:.4} vs {:.4} +- 0.10", m.mean, TW2_MEAN),
        ),
        hard(
            (sd - 0.902).abs() <= 0.05,
            format!("sd {:.4} vs 0.902 +- 0.05 (F2 sd {:.4})", sd, TW2_VARIANCE.sqrt()),
        ),
        Outcome {
            pass: ks.statistic < 0.03,
            soft: true,
            detail: format!("KS vs F2: D = {:.4} (soft limit 0.03)", ks.statistic),
        },
    ]
}

fn oracle_equivalence() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for &(n, r, beta) in &[(3, 5.0, 2.0), (2, 4.0, 1.0)] {
        let p = EnsembleParams::unspiked(n, r, beta).unwrap();
        for (m, seed) in [(Method::Dense, 100), (Method::Pencil, 200)] {
            let (ok, worst) = equivalent(&p, m, Method::Tridiagonal, 5000, seed);
            pass &= ok;
            notes.push(format!("{}({n},{r},{beta}) {:.2}", m.name(), worst));
        }
    }
    let p = EnsembleParams::unspiked(2, 4.0, 2.0).unwrap();
    let (ok, worst) = equivalent(&p, Method::Closed2, Method::Tridiagonal, 5000, 300);
    pass &= ok;
    notes.push(format!("closed2(2,4,2) {worst:.2}"));
    hard(pass, format!("max D/critical per pair: {}", notes.join(", ")))
}

fn spike_consistency() -> Outcome {
    let plain = EnsembleParams::unspiked(4, 8.0, 2.0).unwrap();
    let (same, worst) = equivalent(&plain, Method::Pencil, Method::Tridiagonal, 10_000, 400);
    let mut means = Vec::new();
    for &sigma in &[1.0, 2.0, 4.0] {
        let p = EnsembleParams::new(4, 8.0, 2.0, sigma).unwrap();
        let top = column(&p, Method::Pencil, Which::All, 500, 10_000, 0);
        means.push(moments(&top).unwrap().mean);
    }
    let monotone = means.windows(2).all(|w| w[1] >= w[0]);
    hard(
        same && monotone,
        format!("sigma1=1 pencil vs unspiked max D/critical {worst:.2}; E[l1] at 1,2,4: {means:.3?}"),
    )
}

fn trace_law() -> Outcome {
    let p = EnsembleParams::unspiked(4, 6.0, 2.0).unwrap();
    let n = 10_000;
    let draws = draw_batch(&p, Method::Tridiagonal, Which::All, 600, n, 1).unwrap();
    let tr: Vec<f64> = draws.iter().map(|d| d.values.iter().sum()).collect();
    let m = moments(&tr).unwrap();
    let nr = 24.0;
    let band = 3.0 * (nr / n as f64).sqrt();
    hard(
        (m.mean - nr).abs() <= band && (m.variance - nr).abs() <= 0.1 * nr,
        format!("mean {:.4} vs 24 +- {:.4}; variance {:.3} vs 24 +- 10%", m.mean, band, m.variance),
    )
}

fn recurrence_consistency() -> Outcome {
    let mut rng = RngStream::new(700, 0);
    let mut worst_poly: f64 = 0.0;
    for _ in 0..100 {
        let n = 1 + (rng.uniform01() * 20.0) as usize % 20;
        let r = n as f64 + 3.0 * rng.uniform01();
        let beta = 0.5 + 2.0 * rng.uniform01();
        let p = EnsembleParams::unspiked(n, r, beta).unwrap();
        let t = to_tridiagonal(&build_bidiagonal(&p, &mut rng).unwrap());
        let s = tridiag_eigen_all(&t, DEFAULT_TOL).unwrap();
        for _ in 0..5 {
            let x = (s.largest() + 1.0) * rng.uniform01();
            let prod: f64 = s.values.iter().map(|l| x - l).product();
            let v = charpoly_tridiag(&t, x).value();
            worst_poly = worst_poly.max((v - prod).abs() / prod.abs());
        }
    }
    let mut interlaced = true;
    let mut worst_trace: f64 = 0.0;
    for _ in 0..100 {
        let n = 2 + (rng.uniform01() * 9.0) as usize % 9;
        let r = n as f64 + 3.0 * rng.uniform01();
        let beta = 0.5 + 2.0 * rng.uniform01();
        let sigma = 0.5 + 2.0 * rng.uniform01();
        let p = EnsembleParams::new(n, r, beta, sigma).unwrap();
        let pencil = build_pencil(&p, &mut rng).unwrap();
        let full = pencil_eigen_all(&pencil, DEFAULT_TOL).unwrap();
        let tr: f64 = pencil.a_tilde().iter().sum::<f64>() + pencil.b_tilde().iter().sum::<f64>();
        worst_trace = worst_trace.max((full.trace() - tr).abs() / tr);
        // B_{j} roots against B_{j+1} roots, for every j
        let mut prev: Option<Vec<f64>> = None;
        for j in 1..=n {
            let block = BidiagonalPencil::new(
                pencil.a_tilde()[..j].to_vec(),
                pencil.b_tilde()[..j - 1].to_vec(),
            )
            .unwrap();
            let roots = pencil_eigen_all(&block, DEFAULT_TOL).unwrap().values;
            if let Some(inner) = &prev {
                for k in 0..j - 1 {
                    interlaced &= roots[k] > inner[k] && inner[k] > roots[k + 1];
                }
            }
            prev = Some(roots);
        }
    }
    hard(
        worst_poly < 1e-8 && interlaced && worst_trace < 1e-8,
        format!(
            "max charpoly rel error {worst_poly:.2e}; strict interlacing {interlaced}; max pencil trace rel error {worst_trace:.2e}"
        ),
    )
}

fn density_normalization() -> Outcome {
    let dens = |l: &[f64], n: usize, r: f64| {
        let q = JointDensityQuery {
            lambdas: l.to_vec(),
            params: EnsembleParams::unspiked(n, r, 2.0).unwrap(),
        };
        log_joint_density(&q).unwrap().log_value.exp()
    };
    let one = integrate(|x| dens(&[x], 1, 2.0), 0.0, 80.0, 80, 20);
    let two = integrate(
        |a| integrate(|b| dens(&[a, b], 2, 3.0), 0.0, a, 8, 20),
        0.0,
        80.0,
        80,
        20,
    );
    hard(
        (one - 1.0).abs() < 1e-6 && (two - 1.0).abs() < 1e-6,
        format!("(1,2): {one:.10}; (2,3): {two:.10}"),
    )
}

fn tracy_widom_evaluator() -> Outcome {
    let mut worst: f64 = 0.0;
    for &m in &[32, 48, 64] {
        let g = TwGrid::new(m).unwrap();
        let fine = g.refined();
        for i in 0..=64 {
            let s = -10.0 + 0.25 * i as f64;
            worst = worst.max((tw2_cdf(s, &g).unwrap() - tw2_cdf(s, &fine).unwrap()).abs());
        }
    }
    let exact = 3f64.powf(-2.0 / 3.0) / statrs::function::gamma::gamma(2.0 / 3.0);
    let ai0 = (airy_ai(0.0).unwrap() - exact).abs();
    hard(
        worst < 1e-6 && ai0 < 1e-10,
        format!("max |F2(m) - F2(2m)| for m in 32,48,64: {worst:.2e}; |Ai(0) error| {ai0:.2e}"),
    )
}

fn efficiency() -> Vec<Outcome> {
    let mut exact = true;
    for &(n, r) in &[(1usize, 1.0), (8, 8.0), (30, 30.0), (16, 40.0)] {
        for beta in [1.0, 2.0] {
            let p = EnsembleParams::unspiked(n, r, beta).unwrap();
            for (m, want) in [
                (Method::Tridiagonal, 2 * n as u64 - 1),
                (Method::Pencil, 2 * n as u64 - 1),
                (Method::Dense, (beta * r) as u64 * n as u64),
            ] {
                let d = draw_batch(&p, m, Which::All, 800, 1, 1).unwrap();
                exact &= d[0].variates == want;
            }
        }
    }
    let p = EnsembleParams::unspiked(256, 256.0, 2.0).unwrap();
    let time = |m: Method, count: usize| {
        draw_batch(&p, m, Which::All, 900, 1, 1).unwrap();
        let start = Instant::now();
        draw_batch(&p, m, Which::All, 901, count, 1).unwrap();
        start.elapsed().as_secs_f64() / count as f64
    };
    let structured = time(Method::Tridiagonal, 50);
    let dense = time(Method::Dense, 3);
    let ratio = dense / structured;
    vec![
        hard(exact, "variates: 2n-1 structured, beta R n dense, on every tested shape".into()),
        Outcome {
            pass: ratio >= 10.0,
            soft: true,
            detail: format!(
                "n=R=256: tridiagonal {:.3e} s/sample, dense {:.3e} s/sample, speedup {ratio:.1}x (soft limit 10x)",
                structured, dense
            ),
        },
    ]
}

fn main() {
    let mut results: Vec<(String, Outcome)> = Vec::new();
    results.push(("1 smallest eigenvalue law".into(), smallest_eigenvalue_law()));
    for (i, o) in largest_eigenvalue_law().into_iter().enumerate() {
        results.push((format!("2{} largest eigenvalue", ['a', 'b', 'c'][i]), o));
    }
    results.push(("3 oracle equivalence".into(), oracle_equivalence()));
    results.push(("4 spike consistency".into(), spike_consistency()));
    results.push(("5 trace law".into(), trace_law()));
    results.push(("6 recurrence and spectrum consistency".into(), recurrence_consistency()));
    results.push(("7 density normalization".into(), density_normalization()));
    results.push(("8 Tracy-Widom evaluator".into(), tracy_widom_evaluator()));
    for (i, o) in efficiency().into_iter().enumerate() {
        results.push((format!("9{} efficiency", ['a', 'b'][i]), o));
    }

    let mut failed = 0;
    for (name, o) in &results {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let soft = if o.soft { " (soft)" } else { "" };
        println!("{tag} criterion {name}{soft}: {}", o.detail);
        if !o.pass && !o.soft {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} hard criterion line(s) failed");
        std::process::exit(1);
    }
    println!("all hard criteria passed");
}
