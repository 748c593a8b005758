//! Runs part of the embedded corpus and prints expected against computed values.
//!
//!     cargo run --release --example run_corpus -- lines-8

use jacsyz::corpus::{embedded_corpus, run_corpus};
use jacsyz::invariants::{AnalyzeOptions, Status};

fn run_example() -> jacsyz::error::Result<()> {
    let filter = std::env::args().nth(1).unwrap_or_else(|| "quintic".to_string());
    let outcomes = run_corpus(&embedded_corpus(), Some(&filter), AnalyzeOptions::default(), 1)?;
    for o in &outcomes {
        println!("{:<40} {:?}", o.entry.name, o.status());
        for c in o.comparisons.iter().filter(|c| !c.pass) {
            println!("    {}: expected {} got {}", c.field, c.expected, c.actual);
        }
    }
    let bad = outcomes.iter().filter(|o| o.status() != Status::Pass).count();
    println!("{} entries, {bad} not passing", outcomes.len());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
