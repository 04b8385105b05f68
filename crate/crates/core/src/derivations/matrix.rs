use std::fmt;

use num::Zero;

use crate::arrangement::{Arrangement, Line};
use crate::poly::{Rational, UnivariatePoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Component {
    P,
    Q,
}

/// Coordinate `a_{i,j}` (component `P`) or `b_{i,j}` (component `Q`) of the
/// coefficient space `C(d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoefficientIndex {
    pub component: Component,
    pub i: u32,
    pub j: u32,
}

impl CoefficientIndex {
    /// Position in [`coefficient_indices`]`(d)`.
    pub fn position(&self, d: u32) -> usize {
        let s = self.i + self.j;
        debug_assert!(s <= d);
        let half = ((d + 1) * (d + 2) / 2) as usize;
        let within = (s * (s + 1) / 2 + (s - self.i)) as usize;
        match self.component {
            Component::P => within,
            Component::Q => half + within,
        }
    }
}

impl fmt::Display for CoefficientIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.component {
            Component::P => 'a',
            Component::Q => 'b',
        };
        write!(f, "{c}_{}_{}", self.i, self.j)
    }
}

/// The `(d+1)(d+2)` coordinates of `C(d)`: all of `P` before `Q`, then by
/// total degree, then by decreasing power of `x`.
pub fn coefficient_indices(d: u32) -> Vec<CoefficientIndex> {
    [Component::P, Component::Q]
        .into_iter()
        .flat_map(|component| {
            (0..=d).flat_map(move |s| {
                (0..=s).rev().map(move |i| CoefficientIndex {
                    component,
                    i,
                    j: s - i,
                })
            })
        })
        .collect()
}

/// Sparse row over the columns of `C(d)`.
pub type SparseRow = Vec<(usize, Rational)>;

/// Row `m` holds the coefficient of `t^m` in `(αP + βQ)(p0 + t·v)` for the
/// generic `P`, `Q` of degree `d`, where `(p0, v)` is the canonical
/// parametrization of the line. A coefficient vector annihilates every row
/// exactly when the line is invariant.
pub fn line_constraint_rows(line: &Line, d: u32) -> Vec<SparseRow> {
    let (x0, y0) = line.base_point();
    let (vx, vy) = line.direction();
    let xt = UnivariatePoly::new(vec![x0, Rational::from_integer(vx)]);
    let yt = UnivariatePoly::new(vec![y0, Rational::from_integer(vy)]);
    let mut xp = vec![UnivariatePoly::one()];
    let mut yp = vec![UnivariatePoly::one()];
    for k in 0..d as usize {
        xp.push(&xp[k] * &xt);
        yp.push(&yp[k] * &yt);
    }
    let (alpha, beta, _) = line.coefficients();
    let mut rows: Vec<SparseRow> = vec![Vec::new(); d as usize + 1];
    for ci in coefficient_indices(d) {
        let weight = match ci.component {
            Component::P => &alpha,
            Component::Q => &beta,
        };
        if weight.is_zero() {
            continue;
        }
        let restricted = &xp[ci.i as usize] * &yp[ci.j as usize];
        let col = ci.position(d);
        for (m, c) in restricted.coeffs().iter().enumerate() {
            if !c.is_zero() {
                rows[m].push((col, c * weight));
            }
        }
    }
    rows
}

/// The matrix of `ψ: C(d) → Q^{n(d+1)}` whose kernel is `F_d D(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintMatrix {
    pub degree: u32,
    pub columns: Vec<CoefficientIndex>,
    pub rows: Vec<Vec<Rational>>,
    /// `(line index, power of t)` for each row.
    pub provenance: Vec<(usize, usize)>,
}

impl ConstraintMatrix {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    /// Text dump: a header naming the columns, then one row per line.
    pub fn dump(&self) -> String {
        let mut out = format!(
            "# constraint matrix degree {} rows {} cols {}\n# columns: {}\n",
            self.degree,
            self.n_rows(),
            self.n_cols(),
            self.columns
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        );
        for (row, (l, m)) in self.rows.iter().zip(&self.provenance) {
            let entries: Vec<String> = row.iter().map(ToString::to_string).collect();
            out.push_str(&format!("L{l} t^{m}: {}\n", entries.join(" ")));
        }
        out
    }
}

pub fn build_matrix(a: &Arrangement, d: u32) -> ConstraintMatrix {
    let columns = coefficient_indices(d);
    let ncols = columns.len();
    let mut rows = Vec::with_capacity(a.len() * (d as usize + 1));
    let mut provenance = Vec::with_capacity(rows.capacity());
    for (l, line) in a.lines().iter().enumerate() {
        for (m, sparse) in line_constraint_rows(line, d).into_iter().enumerate() {
            let mut dense = vec![Rational::zero(); ncols];
            for (c, v) in sparse {
                dense[c] = v;
            }
            rows.push(dense);
            provenance.push((l, m));
        }
    }
    ConstraintMatrix {
        degree: d,
        columns,
        rows,
        provenance,
    }
}
