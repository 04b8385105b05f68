//! Exact logarithmic vector fields of real line arrangements.
//!
//! A line arrangement `A` in the real plane determines the space of
//! polynomial vector fields `P∂x + Q∂y` that leave every line of `A`
//! invariant. This crate computes that space degree by degree with exact
//! rational linear algebra, classifies the resulting fields as null,
//! central, parallel or finite, and finds the minimal degree `d_f(A)` of a
//! field fixing only finitely many lines.
//!
//! The modules mirror the layers of the computation:
//!
//! - [`poly`]: rationals, sparse bivariate and dense univariate polynomials.
//! - [`arrangement`]: lines, arrangements, singular points, combinatorial
//!   invariants and intersection-poset isomorphism.
//! - [`derivations`]: the constraint matrix whose kernel is `F_d D(A)`,
//!   exact kernels and the divisibility oracle.
//! - [`classify`]: field classification, the `d_f` driver, minimal
//!   central/parallel fields, bound checks and invariant-line enumeration.
//! - [`cli`]: report assembly, JSON output and the reproduction suite behind
//!   the `logderiv` binary.

pub mod arrangement;
pub mod classify;
pub mod cli;
pub mod derivations;
pub mod error;
pub mod linalg;
pub mod poly;

pub use arrangement::{
    builtin_arrangement, combinatorial_data, parse_arrangement, poset_isomorphic, singular_points,
    weak_equal, Arrangement, Builtin, CombinatorialData, Line, PosetIsomorphism, SingularPoint,
};
pub use classify::{
    bounds_check, classify, compute_df, invariant_lines, minimal_central, minimal_parallel,
    subspace_all_infinite, BoundsReport, DfOutcome, DfReport, FieldClass, InvariantLines,
    SubspaceDecision,
};
pub use derivations::{
    build_matrix, filtration_dims, is_logarithmic, kernel_basis, line_constraint_rows,
    CoefficientIndex, Component, ConstraintMatrix, DerivationSpace, VectorField,
};
pub use error::{Error, Result};
pub use poly::{BivariatePoly, Rational, UnivariatePoly, Var};
