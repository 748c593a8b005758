//! Minimal generators of the module of Jacobian syzygies, their degrees and
//! the degrees of the relations among them.

use jacsyz::poly::parse_poly;
use jacsyz::syzygy::{certified_syzygies, exponents};

fn run_example() -> jacsyz::error::Result<()> {
    let f = parse_poly("x^4+y^4+x*y*z*(x+z)")?;
    let s = exponents(&f)?;
    println!("curve      {f}");
    println!("exponents  {:?}", s.exponents);
    println!("relations  {:?}", s.relation_degrees);
    println!("epsilons   {:?}", s.epsilons);
    println!("regularity {}", s.regularity);
    for g in &s.generators {
        let [a, b, c] = &g.components;
        println!("  degree {}: ({a}, {b}, {c})", g.degree);
    }

    // same data, computed modulo a prime and certified over Q
    let c = certified_syzygies(&f)?;
    assert_eq!(c.summary.exponents, s.exponents);
    println!("exact elimination needed in degrees {:?}", c.exact_degrees);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
