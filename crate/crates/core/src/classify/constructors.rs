use crate::arrangement::{combinatorial_data, product_of_forms, Arrangement};
use crate::derivations::VectorField;
use crate::error::{Error, Result};
use crate::poly::{BivariatePoly, Rational};

/// `Q_{A'}·((x − c_x)∂x + (y − c_y)∂y)` for a singular point `c` of maximal
/// multiplicity (smallest coordinates on ties), `A'` the lines missing `c`.
/// Its degree is `|A| − m(A) + 1`.
pub fn minimal_central(a: &Arrangement) -> Result<VectorField> {
    let data = combinatorial_data(a);
    let c = data
        .sing
        .iter()
        .find(|s| s.multiplicity() == data.m)
        .ok_or(Error::NoSingularPoint)?;
    let (cx, cy) = &c.point;
    let others = product_of_forms(
        a.lines()
            .iter()
            .enumerate()
            .filter(|(i, _)| !c.incident_lines.contains(i))
            .map(|(_, l)| l),
    );
    let radial = VectorField::new(
        &BivariatePoly::x() - &BivariatePoly::constant(cx.clone()),
        &BivariatePoly::y() - &BivariatePoly::constant(cy.clone()),
    );
    Ok(radial.times(&others))
}

/// `Q_{A'}·(v_x∂x + v_y∂y)` for a largest parallel class with direction `v`
/// (smallest canonical direction on ties), `A'` the lines not parallel to
/// `v`. Its degree is `|A| − p(A)`.
pub fn minimal_parallel(a: &Arrangement) -> VectorField {
    let data = combinatorial_data(a);
    let class = data
        .parallel_classes
        .iter()
        .find(|c| c.lines.len() == data.p)
        .expect("nonempty arrangement has a parallel class");
    let others = product_of_forms(
        a.lines()
            .iter()
            .enumerate()
            .filter(|(i, _)| !class.lines.contains(i))
            .map(|(_, l)| l),
    );
    let (vx, vy) = &class.direction;
    VectorField::new(
        BivariatePoly::constant(Rational::from_integer(vx.clone())),
        BivariatePoly::constant(Rational::from_integer(vy.clone())),
    )
    .times(&others)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::Builtin;
    use crate::classify::{classify, FieldClass};
    use crate::derivations::is_logarithmic;

    #[test]
    fn pencil_central_is_euler() {
        let a = Arrangement::from_triples(&[(1, 0, 0), (0, 1, 0), (1, -1, 0)]);
        assert_eq!(
            minimal_central(&a).unwrap(),
            VectorField::new(BivariatePoly::x(), BivariatePoly::y())
        );
        let two = Arrangement::from_triples(&[(1, 0, 0), (0, 1, 0)]);
        assert_eq!(minimal_central(&two).unwrap().degree(), Some(1));
    }

    #[test]
    fn no_singular_point() {
        let a = Arrangement::from_triples(&[(1, 0, 0), (1, 0, -1)]);
        assert_eq!(minimal_central(&a), Err(Error::NoSingularPoint));
        assert_eq!(
            minimal_parallel(&a),
            VectorField::new(BivariatePoly::zero(), BivariatePoly::one())
        );
    }

    #[test]
    fn axes_parallel_tie_break() {
        let a = Arrangement::from_triples(&[(1, 0, 0), (0, 1, 0)]);
        assert_eq!(
            minimal_parallel(&a),
            VectorField::new(BivariatePoly::zero(), BivariatePoly::y())
        );
    }

    #[test]
    fn pappus_degrees() {
        let a = Builtin::Pappus.arrangement();
        let c = minimal_central(&a).unwrap();
        let p = minimal_parallel(&a);
        assert_eq!((c.degree(), p.degree()), (Some(6), Some(6)));
        assert!(is_logarithmic(&c, &a) && is_logarithmic(&p, &a));
        assert!(matches!(classify(&c), FieldClass::Central { .. }));
        assert!(matches!(classify(&p), FieldClass::Parallel { .. }));
    }
}
