//! Intersection points of a line arrangement and what they say about the exponents.

use jacsyz::arrangements::{analyze_arrangement, LineArrangement};
use jacsyz::invariants::AnalyzeOptions;

fn run_example() -> jacsyz::error::Result<()> {
    let pairs = [
        ("not joined", r#"["y", "z", "x-y", "x+y", "x-z", "x+z", "x-2*y+13*z", "x+7*y+11*z"]"#),
        ("joined", r#"["x", "x+y", "x-y", "x-z", "x+z", "x-2*y+13*z", "x+7*y+11*z", "y+13*z"]"#),
    ];
    for (label, json) in pairs {
        let a = LineArrangement::from_json(json)?;
        let r = analyze_arrangement(label, &a, AnalyzeOptions::default())?;
        let c = &r.combinatorics;
        println!("{label}: {a}");
        println!("  census {:?}, tau from points {}, tau from M(f) {}", c.counts, c.tau, r.report.tau);
        for p in c.points.iter().filter(|p| p.multiplicity() > 2) {
            let coords: Vec<String> = p.point.iter().map(|q| q.to_string()).collect();
            println!("  ({}) on lines {:?}", coords.join(":"), p.lines);
        }
        println!("  triple points joined: {}", c.multiple_points_joined());
        println!("  exponents {:?}, {}", r.report.syzygy.exponents, r.report.subtype);
        println!("  verdict {:?}", r.verdict);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
