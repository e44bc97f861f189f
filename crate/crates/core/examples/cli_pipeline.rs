//! Drives the command-line front end in-process: sample, verify and theory
//! into a temporary directory.
//!
//! cargo run --release --example cli_pipeline

fn main() {
    let dir = std::env::temp_dir().join("wishart-spectra-example");
    let out = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let steps: Vec<Vec<String>> = vec![
        vec!["sample", "--n", "30", "--which", "min", "--samples", "5000", "--output"],
        vec!["verify", "--n", "30", "--samples", "5000", "--checks", "min-law,trace", "--output"],
        vec!["theory", "--n", "30", "--svg", "--overlay", &out("min.csv"), "--output"],
    ]
    .into_iter()
    .zip(["min.csv", "report.json", "theory"])
    .map(|(args, target)| {
        let mut v: Vec<String> = std::iter::once("wishart-spectra").chain(args).map(String::from).collect();
        v.push(out(target));
        v
    })
    .collect();
    for args in steps {
        let code = wishart_spectra::cli::run(&args);
        println!("{} -> exit {code}", args[1]);
    }
    println!("outputs in {}", dir.display());
}
