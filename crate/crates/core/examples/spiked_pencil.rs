//! Single-spike ensemble: the largest eigenvalue as the first column's
//! standard deviation grows, from the bidiagonal pencil and the dense oracle.
//!
//! cargo run --release --example spiked_pencil

use wishart_spectra::ensembles::{sample_dense_oracle, sample_spectrum_pencil};
use wishart_spectra::stats::moments;
use wishart_spectra::{EnsembleParams, RngStream};

fn main() -> wishart_spectra::Result<()> {
    let draws = 5000;
    println!("{:>7} {:>12} {:>12}", "sigma1", "pencil E l1", "dense E l1");
    for sigma in [1.0, 1.5, 2.0, 3.0, 4.0] {
        let p = EnsembleParams::new(4, 8.0, 2.0, sigma)?;
        let mut pencil = Vec::with_capacity(draws);
        let mut dense = Vec::with_capacity(draws);
        for i in 0..draws as u64 {
            pencil.push(sample_spectrum_pencil(&p, &mut RngStream::new(7, i))?.largest());
            dense.push(sample_dense_oracle(&p, &mut RngStream::new(8, i))?.largest());
        }
        println!(
            "{sigma:>7.1} {:>12.3} {:>12.3}",
            moments(&pencil)?.mean,
            moments(&dense)?.mean
        );
    }
    Ok(())
}
