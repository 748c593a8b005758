//! Rank and kernel of a rational matrix, and the matrix of multiplication by a form.

use jacsyz::arith::{kernel_basis, rref, DenseMatrix, Rational};
use jacsyz::poly::{multiplication_matrix, parse_poly};

fn run_example() -> jacsyz::error::Result<()> {
    let m = DenseMatrix::<Rational>::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, -1]])?;
    let r = rref(&m);
    println!("rank {} pivots {:?}", m.rank(), r.pivot_columns);
    for v in kernel_basis(&m) {
        let shown: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        println!("kernel vector ({})", shown.join(", "));
    }

    // S_1 -> S_4 given by multiplication with x^3
    let g = parse_poly("x^3")?;
    let mm = multiplication_matrix(&g, 1);
    println!("multiplication by {g} on S_1: {} x {}, rank {}", mm.rows(), mm.cols(), mm.rank());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}
