use super::subspace::{subspace_all_infinite, subspace_all_infinite_symbolic, DEFAULT_GRID_CAP};
use super::{classify, FieldClass, SubspaceDecision};
use crate::arrangement::{combinatorial_data, Arrangement};
use crate::derivations::{build_matrix, kernel_basis, VectorField};
use crate::error::Error;

/// How the driver settled one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DfDecision {
    /// `dim F_d = dim F_{d−1}`: nothing new at this degree.
    NoNewElements,
    /// `d < ν_f`, so every new element is of finite type.
    BoundShortcut { nu_f: usize },
    /// Exact subspace decision on `F_d`.
    Subspace {
        all_infinite: bool,
        grid_point: Option<Vec<u32>>,
        /// The grid cap was exceeded and the uncapped decision was used.
        uncapped: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailEntry {
    pub d: u32,
    pub dim: usize,
    pub decision: DfDecision,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DfOutcome {
    Found { d_f: u32, witness: VectorField },
    NotFoundBelow(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfReport {
    pub outcome: DfOutcome,
    pub trail: Vec<TrailEntry>,
}

impl DfReport {
    pub fn d_f(&self) -> Option<u32> {
        match &self.outcome {
            DfOutcome::Found { d_f, .. } => Some(*d_f),
            DfOutcome::NotFoundBelow(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&VectorField> {
        match &self.outcome {
            DfOutcome::Found { witness, .. } => Some(witness),
            DfOutcome::NotFoundBelow(_) => None,
        }
    }
}

/// Minimal degree of a finite-type logarithmic field, searched up to `d_max`.
pub fn compute_df(a: &Arrangement, d_max: u32) -> DfReport {
    compute_df_with_cap(a, d_max, DEFAULT_GRID_CAP)
}

pub fn compute_df_with_cap(a: &Arrangement, d_max: u32, cap: usize) -> DfReport {
    let nu_f = combinatorial_data(a).nu_f;
    let mut trail = Vec::new();
    // Degree-0 fields are constant, hence parallel; the search starts at 1.
    let mut prev_dim = kernel_basis(&build_matrix(a, 0)).dim();
    for d in 1..=d_max {
        let space = kernel_basis(&build_matrix(a, d));
        let dim = space.dim();
        if dim == prev_dim {
            trail.push(TrailEntry {
                d,
                dim,
                decision: DfDecision::NoNewElements,
            });
            continue;
        }
        prev_dim = dim;
        if (d as usize) < nu_f {
            let witness = space
                .basis
                .iter()
                .find(|b| b.degree() == Some(d))
                .expect("a new kernel element has full degree")
                .clone();
            if classify(&witness) == FieldClass::Finite {
                trail.push(TrailEntry {
                    d,
                    dim,
                    decision: DfDecision::BoundShortcut { nu_f },
                });
                return DfReport {
                    outcome: DfOutcome::Found { d_f: d, witness },
                    trail,
                };
            }
            // Unreachable if the bound holds; fall through to the exact path.
        }
        let (decision, uncapped) = match subspace_all_infinite(&space, cap) {
            Ok(dec) => (dec, false),
            Err(Error::DimensionTooLarge { .. }) => (subspace_all_infinite_symbolic(&space), true),
            Err(e) => unreachable!("{e}"),
        };
        match decision {
            SubspaceDecision::AllInfinite => trail.push(TrailEntry {
                d,
                dim,
                decision: DfDecision::Subspace {
                    all_infinite: true,
                    grid_point: None,
                    uncapped,
                },
            }),
            SubspaceDecision::Finite { point, field } => {
                trail.push(TrailEntry {
                    d,
                    dim,
                    decision: DfDecision::Subspace {
                        all_infinite: false,
                        grid_point: Some(point),
                        uncapped,
                    },
                });
                return DfReport {
                    outcome: DfOutcome::Found {
                        d_f: d,
                        witness: field,
                    },
                    trail,
                };
            }
        }
    }
    DfReport {
        outcome: DfOutcome::NotFoundBelow(d_max),
        trail,
    }
}
