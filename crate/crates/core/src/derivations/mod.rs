//! Logarithmic vector fields as the kernel of an exact linear map.

mod field;
mod matrix;
mod space;

pub use field::VectorField;
pub use matrix::{
    build_matrix, coefficient_indices, line_constraint_rows, CoefficientIndex, Component,
    ConstraintMatrix, SparseRow,
};
pub use space::{filtration_dims, kernel_basis, DerivationSpace};

use crate::arrangement::Arrangement;

/// `χ ∈ D(A)`: `χ(Q_A) = P·∂x Q_A + Q·∂y Q_A` is divisible by `Q_A`.
///
/// The quotient is taken one affine form at a time by exact polynomial
/// division, independently of the constraint matrix.
pub fn is_logarithmic(chi: &VectorField, a: &Arrangement) -> bool {
    let mut rest = chi.apply(&a.defining_polynomial());
    for line in a.lines() {
        match rest.div_exact_linear(line) {
            Some(q) => rest = q,
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BivariatePoly;

    fn pencil() -> Arrangement {
        Arrangement::from_triples(&[(1, 0, 0), (0, 1, 0), (1, -1, 0)])
    }

    #[test]
    fn oracle_examples() {
        let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
        assert!(is_logarithmic(
            &VectorField::new(x.clone(), y.clone()),
            &pencil()
        ));
        let single = Arrangement::from_triples(&[(1, 0, 0)]);
        assert!(!is_logarithmic(
            &VectorField::new(BivariatePoly::one(), BivariatePoly::zero()),
            &single
        ));
        assert!(is_logarithmic(
            &VectorField::new(&x * &x, &y * &y),
            &pencil()
        ));
        assert!(is_logarithmic(&VectorField::zero(), &pencil()));
    }
}
