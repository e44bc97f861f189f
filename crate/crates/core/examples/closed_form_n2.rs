//! Two-eigenvalue closed form: `t (1 +- sqrt(s)) / 2` from one chi-squared
//! and one beta variate, checked against the tridiagonal sampler.
//!
//! cargo run --release --example closed_form_n2

use wishart_spectra::ensembles::{sample_closed_form_n2, sample_spectrum_tridiagonal};
use wishart_spectra::stats::{ks_two_sample, EmpiricalSample};
use wishart_spectra::{EnsembleParams, RngStream};

fn main() -> wishart_spectra::Result<()> {
    for beta in [1.0, 2.0] {
        let r = 4.0;
        let p = EnsembleParams::unspiked(2, r, beta)?;
        let mut closed = [Vec::new(), Vec::new()];
        let mut tri = [Vec::new(), Vec::new()];
        for i in 0..5000 {
            let a = sample_closed_form_n2(r, beta, &mut RngStream::new(1, i))?;
            let b = sample_spectrum_tridiagonal(&p, &mut RngStream::new(2, i))?;
            for k in 0..2 {
                closed[k].push(a.values[k]);
                tri[k].push(b.values[k]);
            }
        }
        for k in 0..2 {
            let ks = ks_two_sample(
                &EmpiricalSample::unlabeled(closed[k].clone())?,
                &EmpiricalSample::unlabeled(tri[k].clone())?,
                0.001,
            )?;
            println!("beta {beta}, lambda_{}: D = {:.4} (critical {:.4})", k + 1, ks.statistic, ks.critical);
        }
    }
    Ok(())
}
