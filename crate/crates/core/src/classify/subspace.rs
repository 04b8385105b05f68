//! Exact decision of whether a whole space of fields is of infinite type.
//!
//! For `χ(t) = Σ t_k χ_k` the collinearity system has a matrix `M(t)` whose
//! entries are linear forms in `t`, and `χ(t)` is of infinite type exactly
//! when `rank M(t) ≤ 2`, i.e. when every 3×3 minor vanishes. The minors are
//! cubic forms in `t`. A polynomial of total degree at most 3 that vanishes
//! on the simplex lattice `{t ∈ N^k : |t| ≤ 3}` is identically zero, and that
//! lattice lies inside the grid `{0,1,2,3}^k`, so checking it decides the
//! question. When it fails, the grid is scanned in lexicographic order and
//! the first point of rank 3 is returned.

use std::collections::BTreeMap;

use num::Zero;

use super::collinearity_columns;
use crate::derivations::{DerivationSpace, VectorField};
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::poly::Rational;

pub const DEFAULT_GRID_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubspaceDecision {
    AllInfinite,
    /// A grid point whose combination is of finite type.
    Finite {
        point: Vec<u32>,
        field: VectorField,
    },
}

impl SubspaceDecision {
    pub fn is_all_infinite(&self) -> bool {
        matches!(self, SubspaceDecision::AllInfinite)
    }
}

/// Per-basis-element columns of the collinearity matrix over a shared
/// monomial index, so `M(t)` is a linear combination.
struct PencilMatrix {
    /// `parts[k][col]` is the column `col` of basis element `k`, dense.
    parts: Vec<[Vec<Rational>; 3]>,
}

impl PencilMatrix {
    fn new(space: &DerivationSpace) -> Self {
        let cols: Vec<_> = space.basis.iter().map(collinearity_columns).collect();
        let mut monomials: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for c in cols.iter().flatten() {
            for (i, j, _) in c.terms() {
                let n = monomials.len();
                monomials.entry((i, j)).or_insert(n);
            }
        }
        let len = monomials.len();
        let parts = cols
            .iter()
            .map(|three| {
                three.clone().map(|poly| {
                    let mut v = vec![Rational::zero(); len];
                    for (i, j, c) in poly.terms() {
                        v[monomials[&(i, j)]] = c.clone();
                    }
                    v
                })
            })
            .collect();
        Self { parts }
    }

    fn rank_at(&self, t: &[u32]) -> usize {
        let len = self.parts.first().map_or(0, |p| p[0].len());
        let mut cols = vec![vec![Rational::zero(); len]; 3];
        for (tk, part) in t.iter().zip(&self.parts) {
            if *tk == 0 {
                continue;
            }
            let s = Rational::from_integer((*tk).into());
            for (acc, col) in cols.iter_mut().zip(part) {
                for (a, c) in acc.iter_mut().zip(col) {
                    if !c.is_zero() {
                        *a += &s * c;
                    }
                }
            }
        }
        rank(&cols, len)
    }
}

fn simplex_points(k: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(k, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, max_sum, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Advances `t` to the next point of `{0,1,2,3}^k` in lexicographic order.
fn next_grid_point(t: &mut [u32]) -> bool {
    for v in t.iter_mut().rev() {
        if *v < 3 {
            *v += 1;
            return true;
        }
        *v = 0;
    }
    false
}

fn first_finite_simplex_point(pencil: &PencilMatrix, k: usize) -> Option<Vec<u32>> {
    simplex_points(k, 3)
        .into_iter()
        .find(|t| pencil.rank_at(t) == 3)
}

/// Whether every nonzero element of `space` is central or parallel. Errors
/// with [`Error::DimensionTooLarge`] when `dim > cap`.
pub fn subspace_all_infinite(space: &DerivationSpace, cap: usize) -> Result<SubspaceDecision> {
    let k = space.dim();
    if k > cap {
        return Err(Error::DimensionTooLarge { dim: k, cap });
    }
    let pencil = PencilMatrix::new(space);
    if first_finite_simplex_point(&pencil, k).is_none() {
        return Ok(SubspaceDecision::AllInfinite);
    }
    let mut t = vec![0u32; k];
    while next_grid_point(&mut t) {
        if pencil.rank_at(&t) == 3 {
            return Ok(finite_at(space, t));
        }
    }
    unreachable!("a simplex point of rank 3 lies in the grid")
}

/// Same decision without a dimension cap. The witness is the first simplex
/// lattice point (lexicographic order) of rank 3.
pub fn subspace_all_infinite_symbolic(space: &DerivationSpace) -> SubspaceDecision {
    let pencil = PencilMatrix::new(space);
    match first_finite_simplex_point(&pencil, space.dim()) {
        None => SubspaceDecision::AllInfinite,
        Some(t) => finite_at(space, t),
    }
}

fn finite_at(space: &DerivationSpace, t: Vec<u32>) -> SubspaceDecision {
    let coeffs: Vec<Rational> = t
        .iter()
        .map(|&v| Rational::from_integer(v.into()))
        .collect();
    let field = space.combination(&coeffs);
    debug_assert_eq!(super::classify(&field), super::FieldClass::Finite);
    SubspaceDecision::Finite { point: t, field }
}
