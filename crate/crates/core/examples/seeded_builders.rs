//! Generic constructions made reproducible: every random choice comes from a seed
//! and is checked before use.

use jacsyz::arrangements::{build_two_pencils, line_times_curve, nodal_cubic_times_conic, symmetric_family, SymmetricVariant};
use jacsyz::invariants::{analyze, AnalyzeOptions};
use jacsyz::poly::parse_poly;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn run_example() -> jacsyz::error::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = AnalyzeOptions::default();

    let (f, line) = line_times_curve(&parse_poly("x^4+y^4+z^4")?, &mut rng)?;
    let r = analyze("line and quartic", &f, opts)?;
    println!("line {line}: tau {} exponents {:?} {}", r.tau, r.syzygy.exponents, r.subtype);

    let (f, conic) = nodal_cubic_times_conic(&mut rng)?;
    let r = analyze("conic and nodal cubic", &f, opts)?;
    println!("conic {conic}: tau {} exponents {:?} {}", r.tau, r.syzygy.exponents, r.subtype);

    for (n1, n2) in [(2, 2), (2, 3), (3, 3)] {
        let a = build_two_pencils(n1, n2, &mut rng)?;
        let r = analyze("pencils", &a.polynomial(), opts)?;
        println!("pencils ({n1},{n2}): {a}\n  exponents {:?} {}", r.syzygy.exponents, r.subtype);
    }

    for v in [SymmetricVariant::Plain, SymmetricVariant::X, SymmetricVariant::XY, SymmetricVariant::XYZ] {
        let f = symmetric_family(3, v)?;
        let r = analyze("symmetric", &f, opts)?;
        println!("{} * C_3: exponents {:?} type {} {}", v.factor(), r.syzygy.exponents, r.type_t, r.subtype);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
