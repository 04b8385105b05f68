// The affine triple points of the Ziegler arrangement lie on a conic; the
// perturbed arrangement moves one of them off it.
//
// ```bash
// cargo run --example ziegler_conic
// ```

use logderiv::cli::{conic_check, ziegler_conic};
use logderiv::{Builtin, Rational};

pub fn run_example() -> logderiv::Result<()> {
    let conic = ziegler_conic();
    println!("C = {conic}");
    for b in [Builtin::Ziegler, Builtin::Ziegler2] {
        println!("{b}:");
        let values = conic_check(&b.arrangement(), &conic);
        for ((x, y), v) in &values {
            println!("  ({x}, {y})  C = {v}");
        }
        let on = values
            .iter()
            .filter(|(_, v)| *v == Rational::default())
            .count();
        println!("  {on}/{} triple points on C", values.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
