// Central and parallel logarithmic fields of the smallest degree the
// combinatorics allows.
//
// ```bash
// cargo run --example minimal_fields
// ```

use logderiv::{
    classify, combinatorial_data, is_logarithmic, minimal_central, minimal_parallel, Builtin,
};

pub fn run_example() -> logderiv::Result<()> {
    for b in Builtin::ALL {
        let a = b.arrangement();
        let data = combinatorial_data(&a);
        let c = minimal_central(&a)?;
        let p = minimal_parallel(&a);
        println!(
            "{b}: n={} m={} p={}  central deg {:?} ({}), parallel deg {:?} ({})",
            data.n,
            data.m,
            data.p,
            c.degree(),
            classify(&c),
            p.degree(),
            classify(&p)
        );
        assert!(is_logarithmic(&c, &a) && is_logarithmic(&p, &a));
        assert_eq!(c.degree(), Some((data.n - data.m + 1) as u32));
        assert_eq!(p.degree(), Some((data.n - data.p) as u32));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> logderiv::Result<()> {
    run_example()
}
