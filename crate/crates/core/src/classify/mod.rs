//! Null / central / parallel / finite classification and everything built
//! on it: the `d_f` driver, minimal infinite-type fields, bound checks and
//! invariant lines of finite-type fields.

mod bounds;
mod constructors;
mod df;
mod lines;
mod subspace;

pub use bounds::{bounds_check, BoundClaim, BoundsReport, ClaimKind};
pub use constructors::{minimal_central, minimal_parallel};
pub use df::{compute_df, compute_df_with_cap, DfDecision, DfOutcome, DfReport, TrailEntry};
pub use lines::{invariant_lines, InvariantLines};
pub use subspace::{
    subspace_all_infinite, subspace_all_infinite_symbolic, SubspaceDecision, DEFAULT_GRID_CAP,
};

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Integer, Zero};

use crate::arrangement::canonical_direction;
use crate::derivations::VectorField;
use crate::linalg::reduced_echelon;
use crate::poly::{denominator_lcm, BivariatePoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldClass {
    Null,
    /// `(x − c_x)·Q − (y − c_y)·P = 0`
    Central {
        center: (Rational, Rational),
    },
    /// `v_x·Q − v_y·P = 0` with `v` primitive and sign-canonical.
    Parallel {
        direction: (BigInt, BigInt),
    },
    Finite,
}

impl FieldClass {
    pub fn tag(&self) -> &'static str {
        match self {
            FieldClass::Null => "null",
            FieldClass::Central { .. } => "central",
            FieldClass::Parallel { .. } => "parallel",
            FieldClass::Finite => "finite",
        }
    }

    /// Null, central and parallel fields fix infinitely many lines.
    pub fn is_infinite_type(&self) -> bool {
        !matches!(self, FieldClass::Finite)
    }
}

impl fmt::Display for FieldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldClass::Central { center: (cx, cy) } => write!(f, "central ({cx}, {cy})"),
            FieldClass::Parallel {
                direction: (vx, vy),
            } => write!(f, "parallel ({vx}, {vy})"),
            other => f.write_str(other.tag()),
        }
    }
}

/// Coefficient columns of `x·Q − y·P`, `Q` and `−P` over their common
/// monomials. A vector `(A, B, C)` in the kernel solves
/// `(A·x + B)·Q − (A·y + C)·P = 0`.
pub(crate) fn collinearity_columns(chi: &VectorField) -> [BivariatePoly; 3] {
    let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
    [&(&x * &chi.q) - &(&y * &chi.p), chi.q.clone(), -&chi.p]
}

pub(crate) fn columns_as_rows(cols: &[BivariatePoly; 3]) -> Vec<Vec<Rational>> {
    let mut monomials: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for c in cols {
        for (i, j, _) in c.terms() {
            let n = monomials.len();
            monomials.entry((i, j)).or_insert(n);
        }
    }
    let mut rows = vec![vec![Rational::zero(); 3]; monomials.len()];
    for (k, c) in cols.iter().enumerate() {
        for (i, j, v) in c.terms() {
            rows[monomials[&(i, j)]][k] = v.clone();
        }
    }
    rows
}

/// Classifies `χ` by solving `(A·x + B)·Q − (A·y + C)·P = 0` for `(A, B, C)`.
///
/// A solution with `A ≠ 0` gives the center `(−B/A, −C/A)`; one with `A = 0`
/// gives the direction `(B, C)`; no nonzero solution means finite type.
pub fn classify(chi: &VectorField) -> FieldClass {
    if chi.is_zero() {
        return FieldClass::Null;
    }
    let rows = columns_as_rows(&collinearity_columns(chi));
    let kernel = reduced_echelon(&rows, 3).nullspace();
    // For a nonzero field the solution space has dimension at most one:
    // collinearity with two centers, two directions, or a center and a
    // direction forces P = Q = 0.
    debug_assert!(kernel.len() <= 1);
    let parallel = kernel.iter().find(|v| v[0].is_zero());
    if let Some(v) = parallel {
        return FieldClass::Parallel {
            direction: integer_direction(&v[1], &v[2]),
        };
    }
    match kernel.first() {
        Some(v) => FieldClass::Central {
            center: (-&v[1] / &v[0], -&v[2] / &v[0]),
        },
        None => FieldClass::Finite,
    }
}

fn integer_direction(vx: &Rational, vy: &Rational) -> (BigInt, BigInt) {
    let l = Rational::from_integer(denominator_lcm([vx, vy]));
    let (a, b) = ((vx * &l).to_integer(), (vy * &l).to_integer());
    let g = a.gcd(&b);
    canonical_direction(&(a / &g), &(b / g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn field(p: BivariatePoly, q: BivariatePoly) -> VectorField {
        VectorField::new(p, q)
    }

    #[test]
    fn reference_fields() {
        let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
        assert_eq!(
            classify(&field(x.clone(), y.clone())),
            FieldClass::Central {
                center: (rat(0), rat(0))
            }
        );
        let xp1 = &x + &BivariatePoly::one();
        assert_eq!(
            classify(&field(BivariatePoly::zero(), xp1)),
            FieldClass::Parallel {
                direction: (0.into(), 1.into())
            }
        );
        assert_eq!(classify(&field(&x * &x, &y * &y)), FieldClass::Finite);
        assert_eq!(classify(&VectorField::zero()), FieldClass::Null);
    }

    #[test]
    fn constant_fields_are_parallel() {
        let f = field(
            BivariatePoly::constant(rat(-2)),
            BivariatePoly::constant(rat(4)),
        );
        assert_eq!(
            classify(&f),
            FieldClass::Parallel {
                direction: (1.into(), (-2).into())
            }
        );
    }

    #[test]
    fn shifted_center() {
        let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
        let h = &(&x * &y) + &BivariatePoly::constant(rat(3));
        let p = &h * &(&x - &BivariatePoly::constant(rat(5)));
        let q = &h * &(&y + &BivariatePoly::constant(rat(1)));
        assert_eq!(
            classify(&field(p, q)),
            FieldClass::Central {
                center: (rat(5), rat(-1))
            }
        );
    }
}
