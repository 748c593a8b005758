//! Parsing, arithmetic and partial derivatives of ternary forms.

use jacsyz::arith::rational;
use jacsyz::poly::parse_poly;

fn run_example() -> jacsyz::error::Result<()> {
    let f = parse_poly("x*y*(x^4+y^4-z^4)")?;
    println!("f      = {f}");
    println!("degree = {}", f.degree());
    let [fx, fy, fz] = f.jacobian();
    println!("f_x    = {fx}\nf_y    = {fy}\nf_z    = {fz}");

    let p = [rational(1), rational(2), rational(3)];
    println!("f(1,2,3) = {}", f.eval(&p));

    let l = parse_poly("x-y+z")?;
    println!("(x-y+z)^3 = {}", l.pow(3));

    // Euler: x f_x + y f_y + z f_z = d f
    let euler = parse_poly("x")?.mul(&fx).add(&parse_poly("y")?.mul(&fy)).add(&parse_poly("z")?.mul(&fz));
    assert_eq!(euler, f.scale(&rational(f.degree() as i64)));
    println!("Euler identity holds");

    for bad in ["x^2+y", "x^2+y^2", "x*(y"] {
        match parse_poly(bad).and_then(|g| jacsyz::invariants::tjurina(&g)) {
            Ok(t) => println!("{bad}: tau {t}"),
            Err(e) => println!("{bad}: {e}"),
        }
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
