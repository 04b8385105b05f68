// Parse an arrangement from text, build its constraint matrix and check the
// kernel against the divisibility oracle.
//
// ```bash
// cargo run --example custom_arrangement
// ```

use logderiv::{build_matrix, classify, is_logarithmic, kernel_basis, parse_arrangement};

const TEXT: &str = "\
# a triangle with one extra line through a vertex
1 0 0
0 1 0
1 1 -1
1 -1 0
";

pub fn run_example() -> logderiv::Result<()> {
    let a = parse_arrangement(TEXT)?;
    println!("{a}");
    for d in 0..=3 {
        let m = build_matrix(&a, d);
        let k = kernel_basis(&m);
        println!(
            "d={d}: matrix {}x{}, rank {}, dim F_d = {}",
            m.n_rows(),
            m.n_cols(),
            k.rank,
            k.dim()
        );
        for chi in &k.basis {
            assert!(is_logarithmic(chi, &a));
            println!("  {chi}  [{}]", classify(chi));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
