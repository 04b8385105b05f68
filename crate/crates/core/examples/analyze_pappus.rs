// Filtration dimensions, `d_f` and the invariant lines of the witness for
// the Pappus arrangement.
//
// ```bash
// cargo run --release --example analyze_pappus
// ```

use logderiv::{compute_df, filtration_dims, invariant_lines, Builtin};

pub fn run_example() -> logderiv::Result<()> {
    let a = Builtin::Pappus.arrangement();
    println!("{a}");
    let dims = filtration_dims(&a, 6);
    println!("dim F_d, d = 0..6: {dims:?}");
    assert_eq!(&dims[..5], &[0, 0, 0, 0, 1]);

    let report = compute_df(&a, 6);
    let d_f = report
        .d_f()
        .expect("a finite-type field exists below degree 7");
    let witness = report.witness().unwrap();
    println!("d_f = {d_f}");
    println!("witness: {witness}");
    assert_eq!(d_f, 4);

    // The witness fixes only finitely many lines; all of them belong to the
    // arrangement here.
    let fixed = invariant_lines(witness)?;
    println!(
        "lines fixed by the witness (complete = {}):",
        fixed.complete
    );
    for l in &fixed.rational_lines {
        println!("  {l}");
    }
    assert!(fixed.rational_lines.iter().all(|l| a.lines().contains(l)));
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
