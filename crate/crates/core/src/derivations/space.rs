use super::field::VectorField;
use super::matrix::{build_matrix, ConstraintMatrix};
use crate::arrangement::Arrangement;
use crate::linalg::{reduced_echelon, ReducedEchelon};
use crate::poly::Rational;

/// `F_d D(A)` as a subspace of `C(d)`, with its canonical basis: one vector
/// per free column of the reduced echelon form, in column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub d: u32,
    pub basis: Vec<VectorField>,
    pub coords: Vec<Vec<Rational>>,
    pub rank: usize,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ t_k · basis_k`
    pub fn combination(&self, t: &[Rational]) -> VectorField {
        assert_eq!(t.len(), self.dim());
        let n = self.coords.first().map_or(0, Vec::len);
        let mut v = vec![Rational::default(); n];
        for (tk, b) in t.iter().zip(&self.coords) {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += tk * bi;
            }
        }
        VectorField::from_coefficients(&v, self.d)
    }

    /// Text dump of the basis in column order.
    pub fn dump(&self) -> String {
        let mut out = format!("# kernel degree {} dim {}\n", self.d, self.dim());
        for v in &self.coords {
            let e: Vec<String> = v.iter().map(ToString::to_string).collect();
            out.push_str(&e.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn kernel_basis(m: &ConstraintMatrix) -> DerivationSpace {
    let echelon: ReducedEchelon = reduced_echelon(&m.rows, m.n_cols());
    let coords = echelon.nullspace();
    DerivationSpace {
        d: m.degree,
        basis: coords
            .iter()
            .map(|c| VectorField::from_coefficients(c, m.degree))
            .collect(),
        coords,
        rank: echelon.rank(),
    }
}

/// `dim F_d D(A)` for `d = 0..=d_max`.
pub fn filtration_dims(a: &Arrangement, d_max: u32) -> Vec<usize> {
    (0..=d_max)
        .map(|d| kernel_basis(&build_matrix(a, d)).dim())
        .collect()
}
