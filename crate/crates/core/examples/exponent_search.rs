//! Random sampling of quartics, counting how often each exponent tuple occurs.

use jacsyz::corpus::{search, SearchParams};

fn run_example() -> jacsyz::error::Result<()> {
    let target: Vec<u32> = std::env::args()
        .nth(1)
        .map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect())
        .unwrap_or_else(|| vec![3, 3, 3, 3, 4]);
    let params = SearchParams { degree: 4, target, coeff_bound: 3, samples: 60, seed: 2024 };
    let r = search(&params, 1)?;
    for (e, n) in &r.histogram {
        println!("{e:<20} {n}");
    }
    println!("skipped {}", r.skipped);
    for f in &r.findings {
        println!("witness {} (tau {})", f.polynomial, f.tau);
    }
    println!("{}", r.summary_line());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
