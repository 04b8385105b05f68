// Null, central, parallel and finite-type fields.
//
// ```bash
// cargo run --example classify_fields
// ```

use logderiv::cli::parse_field;
use logderiv::{classify, invariant_lines, FieldClass};

pub fn run_example() -> logderiv::Result<()> {
    for src in [
        "0;0",
        "x;y",
        "x-1;y+2",
        "0;x+1",
        "2*x^2;4*x^2",
        "x^2;y^2",
        "y;2*x",
    ] {
        let chi = parse_field(src)?;
        let class = classify(&chi);
        print!("{src:>12}  {class}");
        if class == FieldClass::Finite {
            let l = invariant_lines(&chi)?;
            let shown: Vec<String> = l.rational_lines.iter().map(|l| l.to_string()).collect();
            print!("  fixes [{}] complete={}", shown.join(", "), l.complete);
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
