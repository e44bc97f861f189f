//! Rescaled largest eigenvalue at n = R = 30 against Tracy-Widom F2.
//!
//! cargo run --release --example tracy_widom_largest

use wishart_spectra::ensembles::sample_extreme_tridiagonal;
use wishart_spectra::stats::moments;
use wishart_spectra::theory::{tw2_cdf, tw2_moments, tw_rescale, TwGrid};
use wishart_spectra::{EnsembleParams, Extreme, RngStream};

fn main() -> wishart_spectra::Result<()> {
    let n = 30;
    let params = EnsembleParams::unspiked(n, n as f64, 2.0)?;
    let mut s = Vec::with_capacity(20_000);
    for i in 0..20_000 {
        let l = sample_extreme_tridiagonal(&params, Extreme::Largest, &mut RngStream::new(1, i))?;
        s.push(tw_rescale(l, n as f64, 0.0));
    }
    let m = moments(&s)?;
    let grid = TwGrid::default();
    let (mean, var) = tw2_moments(&grid)?;
    println!("sample  mean {:.4}  sd {:.4}", m.mean, m.variance.sqrt());
    println!("F2      mean {:.4}  sd {:.4}", mean, var.sqrt());

    s.sort_by(f64::total_cmp);
    println!("{:>6} {:>10} {:>10}", "s", "ecdf", "F2");
    for x in [-4.0, -3.0, -2.0, -1.5, -1.0, 0.0, 1.0] {
        let ecdf = s.partition_point(|&v| v <= x) as f64 / s.len() as f64;
        println!("{x:>6.1} {ecdf:>10.4} {:>10.4}", tw2_cdf(x, &grid)?);
    }
    Ok(())
}
