//! Smallest eigenvalue of an n = R = 30 complex Wishart matrix against the
//! exact law `30 e^{-30 x}`, using Sturm bisection on the tridiagonal model.
//!
//! cargo run --release --example smallest_eigenvalue

use wishart_spectra::ensembles::sample_extreme_tridiagonal;
use wishart_spectra::stats::{histogram, ks_one_sample, Bins, EmpiricalSample};
use wishart_spectra::theory::{pmin_cdf, pmin_exact};
use wishart_spectra::{EnsembleParams, Extreme, RngStream};

fn main() -> wishart_spectra::Result<()> {
    let params = EnsembleParams::unspiked(30, 30.0, 2.0)?;
    let mins = (0..20_000)
        .map(|i| sample_extreme_tridiagonal(&params, Extreme::Smallest, &mut RngStream::new(1, i)))
        .collect::<wishart_spectra::Result<Vec<f64>>>()?;

    let h = histogram(&mins, &Bins::Count(12))?;
    println!("{:>10} {:>10} {:>10}", "x", "empirical", "exact");
    for (x, d) in h.centers().iter().zip(&h.densities) {
        println!("{x:>10.4} {d:>10.3} {:>10.3}", pmin_exact(*x, 30));
    }
    let ks = ks_one_sample(&EmpiricalSample::unlabeled(mins)?, |x| pmin_cdf(x, 30), 0.001)?;
    println!("KS D = {:.5}, critical {:.5}, pass = {}", ks.statistic, ks.critical, ks.pass);
    Ok(())
}
