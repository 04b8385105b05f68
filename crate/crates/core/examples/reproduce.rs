// The full reproduction table, as printed by `logderiv reproduce`.
//
// ```bash
// cargo run --release --example reproduce
// ```

use logderiv::classify::DEFAULT_GRID_CAP;
use logderiv::cli::reproduce;

pub fn run_example() -> logderiv::Result<()> {
    let r = reproduce(DEFAULT_GRID_CAP);
    print!("{}", r.to_text());
    assert!(r.all_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
