// Weak combinatorics, intersection posets and `d_f` side by side.
//
// ```bash
// cargo run --release --example compare_arrangements
// ```

use logderiv::{combinatorial_data, compute_df, poset_isomorphic, weak_equal, Builtin};

pub fn run_example() -> logderiv::Result<()> {
    for (a, b) in [
        (Builtin::Pappus, Builtin::NonPappus),
        (Builtin::Ziegler, Builtin::Ziegler2),
    ] {
        let (x, y) = (a.arrangement(), b.arrangement());
        println!("{a} vs {b}");
        println!(
            "  signatures {:?} / {:?}",
            combinatorial_data(&x).weak_signature,
            combinatorial_data(&y).weak_signature
        );
        println!("  weak_equal = {}", weak_equal(&x, &y));
        match poset_isomorphic(&x, &y) {
            Some(w) => println!("  poset isomorphism, lines {:?}", w.line_map),
            None => println!("  posets differ"),
        }
        let (dx, dy) = (compute_df(&x, 7).d_f(), compute_df(&y, 7).d_f());
        println!("  d_f = {dx:?} vs {dy:?}");
        assert!(weak_equal(&x, &y));
        assert_ne!(dx, dy);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
