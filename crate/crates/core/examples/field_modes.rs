//! The prime-field route and the exact rational route on the same curves.

use std::time::Instant;

use jacsyz::invariants::{analyze, AnalyzeOptions, FieldMode};
use jacsyz::poly::parse_poly;

fn run_example() -> jacsyz::error::Result<()> {
    for text in ["x*y*z*(x^3+y^3+z^3)", "(x^3+y^3)^2+(y^2+z^2)^3", "x*(x^2+y^2+z^2)*(x^3+2*y^3+3*z^3)"] {
        let f = parse_poly(text)?;
        let mut rows = Vec::new();
        for field in [FieldMode::Prime, FieldMode::Rational] {
            let t = Instant::now();
            let r = analyze(text, &f, AnalyzeOptions { field, timings: false })?;
            rows.push((field, r.syzygy.exponents.clone(), r.tau, r.nu, r.n_table.clone(), t.elapsed()));
        }
        println!("{text}");
        for (field, e, tau, nu, _, dt) in &rows {
            println!("  {field:?}: exponents {e:?} tau {tau} nu {nu} in {dt:.2?}");
        }
        assert_eq!(rows[0].4, rows[1].4, "n(f)_k differs between the two routes");
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
