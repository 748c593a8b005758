//! Full analysis of a curve: Tjurina number, freeness defect, type and all checks.
//!
//!     cargo run --release --example analyze_curve -- "x^5+y^5+y*z*(x^3+y^2*z)"

use jacsyz::invariants::{analyze, AnalyzeOptions, FieldMode};
use jacsyz::poly::parse_poly;

fn run_example() -> jacsyz::error::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "x*y*(x^4+y^4-z^4)".to_string());
    let f = parse_poly(&text)?;
    let r = analyze("example", &f, AnalyzeOptions { field: FieldMode::Prime, timings: true })?;
    println!("{r}");
    println!("n(f)_k     {:?}", r.n_table);
    println!("M(f)_k     {:?}", r.hilbert_m);
    println!("dpw        {:?}", r.dpw);
    for c in &r.checks {
        println!("  [{}] {}", if c.pass { "ok" } else { "FAIL" }, c.name);
    }
    println!("timings    {:?}", r.timings_ms);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
