use std::fmt;

use super::subspace::subspace_all_infinite_symbolic;
use super::{classify, minimal_central, minimal_parallel, FieldClass};
use crate::arrangement::{combinatorial_data, Arrangement};
use crate::derivations::{
    build_matrix, is_logarithmic, kernel_basis, DerivationSpace, VectorField,
};
use crate::poly::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimKind {
    /// `dim F_d = 0` for `0 < d < ν`.
    EmptyBelowNu,
    /// Every element of `F_d` is of infinite type for `d < ν_∞`.
    InfiniteBelowNuInf,
    /// Every nonzero element of `F_d` is of finite type for `0 < d < ν_f`.
    FiniteBelowNuF,
    /// An infinite-type logarithmic field of degree `ν_f` exists.
    InfiniteAtNuF,
}

impl ClaimKind {
    pub fn name(self) -> &'static str {
        match self {
            ClaimKind::EmptyBelowNu => "empty_below_nu",
            ClaimKind::InfiniteBelowNuInf => "infinite_below_nu_inf",
            ClaimKind::FiniteBelowNuF => "finite_below_nu_f",
            ClaimKind::InfiniteAtNuF => "infinite_at_nu_f",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundClaim {
    pub kind: ClaimKind,
    pub d: u32,
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub nu_inf: usize,
    pub nu_f: usize,
    pub nu: usize,
    pub claims: Vec<BoundClaim>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }
}

impl fmt::Display for BoundClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] d={} {}", self.d, self.statement)
    }
}

/// Samples of `F_d`: every basis vector and every combination with
/// coefficients in `N` summing to at most 2.
fn sample_fields(space: &DerivationSpace) -> Vec<VectorField> {
    let k = space.dim();
    let mut out = space.basis.clone();
    for a in 0..k {
        for b in a..k {
            let mut t = vec![Rational::default(); k];
            t[a] += Rational::from_integer(1.into());
            t[b] += Rational::from_integer(1.into());
            if a != b {
                out.push(space.combination(&t));
            }
        }
    }
    out
}

/// Checks the combinatorial degree bounds on `A` against exact kernel
/// computations.
pub fn bounds_check(a: &Arrangement) -> BoundsReport {
    let data = combinatorial_data(a);
    let (nu_inf, nu_f, nu) = (data.nu_inf as u32, data.nu_f as u32, data.nu as u32);
    let top = nu_inf.max(nu_f).saturating_sub(1);
    let mut claims = Vec::new();
    for d in 0..=top {
        if d >= nu_inf && (d == 0 || d >= nu_f) {
            continue;
        }
        let space = kernel_basis(&build_matrix(a, d));
        if d > 0 && d < nu {
            claims.push(BoundClaim {
                kind: ClaimKind::EmptyBelowNu,
                d,
                statement: format!(
                    "dim F_{d} = 0 since 0 < {d} < nu = {nu} (got {})",
                    space.dim()
                ),
                holds: space.dim() == 0,
            });
        }
        if d < nu_inf {
            let holds =
                space.dim() == 0 || subspace_all_infinite_symbolic(&space).is_all_infinite();
            claims.push(BoundClaim {
                kind: ClaimKind::InfiniteBelowNuInf,
                d,
                statement: format!(
                    "every element of F_{d} is null, central or parallel since {d} < nu_inf = {nu_inf}"
                ),
                holds,
            });
        }
        if d > 0 && d < nu_f {
            let holds = sample_fields(&space)
                .iter()
                .all(|f| classify(f) == FieldClass::Finite);
            claims.push(BoundClaim {
                kind: ClaimKind::FiniteBelowNuF,
                d,
                statement: format!(
                    "sampled elements of F_{d} (dim {}) are finite type since 0 < {d} < nu_f = {nu_f}",
                    space.dim()
                ),
                holds,
            });
        }
    }
    let witness = if data.nu_f == data.n + 1 - data.m && !data.sing.is_empty() {
        minimal_central(a).ok()
    } else {
        Some(minimal_parallel(a))
    };
    let holds = witness.as_ref().is_some_and(|w| {
        w.degree().unwrap_or(0) == nu_f && is_logarithmic(w, a) && classify(w).is_infinite_type()
    });
    claims.push(BoundClaim {
        kind: ClaimKind::InfiniteAtNuF,
        d: nu_f,
        statement: format!("an infinite-type logarithmic field of degree nu_f = {nu_f} exists"),
        holds,
    });
    BoundsReport {
        nu_inf: data.nu_inf,
        nu_f: data.nu_f,
        nu: data.nu,
        claims,
    }
}
