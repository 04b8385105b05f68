// Degree bounds from `ν_∞`, `ν_f` and `ν`, checked against exact kernels.
//
// ```bash
// cargo run --release --example bounds_report
// ```

use logderiv::{bounds_check, Arrangement, Builtin};

pub fn run_example() -> logderiv::Result<()> {
    let mut corpus: Vec<(String, Arrangement)> = Builtin::ALL
        .iter()
        .map(|b| (b.to_string(), b.arrangement()))
        .collect();
    corpus.push((
        "pencil + parallel".into(),
        Arrangement::from_triples(&[(1, 0, 0), (0, 1, 0), (1, -1, 0), (1, 0, -1), (1, 0, -2)]),
    ));
    for (name, a) in &corpus {
        let r = bounds_check(a);
        println!("{name}: nu_inf={} nu_f={} nu={}", r.nu_inf, r.nu_f, r.nu);
        for c in &r.claims {
            println!("  {c}");
        }
        assert!(r.all_hold());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
