// Emit a JSON analysis report and re-verify it from the text alone.
//
// ```bash
// cargo run --release --example json_report
// ```

use logderiv::classify::DEFAULT_GRID_CAP;
use logderiv::cli::{analyze, verify_report};
use logderiv::Builtin;

pub fn run_example() -> logderiv::Result<()> {
    let a = Builtin::Ziegler.arrangement();
    let json = analyze(&a, "ziegler", 5, DEFAULT_GRID_CAP).to_json();
    println!("{}", json.lines().take(12).collect::<Vec<_>>().join("\n"));
    println!("... ({} bytes)", json.len());
    let failures = verify_report(&json)?;
    println!("re-verification: {} failures", failures.len());
    assert!(failures.is_empty(), "{failures:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
