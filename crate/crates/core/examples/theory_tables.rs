//! Reference curves: Airy function, F2 with its quadrature error estimate,
//! and the normalized joint density for two eigenvalues.
//!
//! cargo run --release --example theory_tables

use wishart_spectra::theory::{
    airy_pair, log_joint_density, tw2_cdf_with_estimate, tw2_pdf, JointDensityQuery, TwGrid,
};
use wishart_spectra::EnsembleParams;

fn main() -> wishart_spectra::Result<()> {
    println!("{:>6} {:>14} {:>14}", "x", "Ai", "Ai'");
    for x in [-10.0, -5.0, -2.0, 0.0, 2.0, 5.0] {
        let (a, d) = airy_pair(x)?;
        println!("{x:>6.1} {a:>14.10} {d:>14.10}");
    }

    let grid = TwGrid::new(32)?;
    println!("\n{:>6} {:>14} {:>10} {:>10}", "s", "F2", "error", "f2");
    for i in 0..=10 {
        let s = -5.0 + 0.6 * i as f64;
        let (f, err) = tw2_cdf_with_estimate(s, &grid)?;
        println!("{s:>6.1} {f:>14.10} {err:>10.1e} {:>10.6}", tw2_pdf(s, &grid)?);
    }

    let params = EnsembleParams::unspiked(2, 3.0, 2.0)?;
    println!("\njoint density of (l1, l2), n = 2, R = 3");
    for (l1, l2) in [(1.0, 0.5), (3.0, 1.0), (6.0, 2.0)] {
        let d = log_joint_density(&JointDensityQuery { lambdas: vec![l1, l2], params })?;
        println!("p({l1}, {l2}) = {:.6}", d.log_value.exp());
    }
    Ok(())
}
