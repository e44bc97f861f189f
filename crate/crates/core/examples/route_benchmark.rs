//! Variates and time per sample for each route as n grows.
//!
//! cargo run --release --example route_benchmark

use std::time::Instant;

use wishart_spectra::cli::{draw_batch, Method, Which};
use wishart_spectra::EnsembleParams;

fn main() -> wishart_spectra::Result<()> {
    println!("{:>5} {:<12} {:>9} {:>14}", "n", "method", "variates", "s/sample");
    for n in [8, 32, 128] {
        let p = EnsembleParams::unspiked(n, n as f64, 2.0)?;
        for method in [Method::Tridiagonal, Method::Pencil, Method::Dense] {
            let count = if method == Method::Tridiagonal { 200 } else { 10 };
            let warm = draw_batch(&p, method, Which::All, 0, 1, 1)?;
            let start = Instant::now();
            draw_batch(&p, method, Which::All, 1, count, 1)?;
            let per = start.elapsed().as_secs_f64() / count as f64;
            println!("{n:>5} {:<12} {:>9} {per:>14.3e}", method.name(), warm[0].variates);
        }
    }
    Ok(())
}
