use std::fmt;

use num::Zero;

use super::matrix::{coefficient_indices, Component};
use crate::poly::{BivariatePoly, Rational, Var};

/// The polynomial vector field `P∂x + Q∂y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct VectorField {
    pub p: BivariatePoly,
    pub q: BivariatePoly,
}

impl VectorField {
    pub fn new(p: BivariatePoly, q: BivariatePoly) -> Self {
        Self { p, q }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// `max(deg P, deg Q)`, `None` for the zero field.
    pub fn degree(&self) -> Option<u32> {
        self.p.degree().max(self.q.degree())
    }

    /// `χ(f) = P·∂x f + Q·∂y f`
    pub fn apply(&self, f: &BivariatePoly) -> BivariatePoly {
        &(&self.p * &f.partial_derivative(Var::X)) + &(&self.q * &f.partial_derivative(Var::Y))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.p.scale(k), self.q.scale(k))
    }

    /// `h·χ`
    pub fn times(&self, h: &BivariatePoly) -> Self {
        Self::new(h * &self.p, h * &self.q)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.p + &other.p, &self.q + &other.q)
    }

    /// Reads a coordinate vector of `C(d)` in [`coefficient_indices`] order.
    pub fn from_coefficients(coords: &[Rational], d: u32) -> Self {
        let idx = coefficient_indices(d);
        assert_eq!(coords.len(), idx.len(), "coordinate vector length");
        let (mut p, mut q) = (Vec::new(), Vec::new());
        for (ci, c) in idx.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            let t = (ci.i, ci.j, c.clone());
            match ci.component {
                Component::P => p.push(t),
                Component::Q => q.push(t),
            }
        }
        Self::new(BivariatePoly::from_terms(p), BivariatePoly::from_terms(q))
    }

    /// Coordinates in `C(d)`; panics if the field has degree above `d`.
    pub fn to_coefficients(&self, d: u32) -> Vec<Rational> {
        assert!(
            self.degree().is_none_or(|e| e <= d),
            "field degree exceeds {d}"
        );
        coefficient_indices(d)
            .iter()
            .map(|ci| match ci.component {
                Component::P => self.p.coeff(ci.i, ci.j),
                Component::Q => self.q.coeff(ci.i, ci.j),
            })
            .collect()
    }

    /// Field obtained by pushing `self` forward along `p ↦ M·p + t`.
    pub fn push_forward(&self, m: &[[Rational; 2]; 2], t: &[Rational; 2]) -> Self {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        let inv = [
            [&m[1][1] / &det, -&m[0][1] / &det],
            [-&m[1][0] / &det, &m[0][0] / &det],
        ];
        // Inverse map as affine forms in the new coordinates.
        let (x, y) = (BivariatePoly::x(), BivariatePoly::y());
        let sx = &x - &BivariatePoly::constant(t[0].clone());
        let sy = &y - &BivariatePoly::constant(t[1].clone());
        let ux = &sx.scale(&inv[0][0]) + &sy.scale(&inv[0][1]);
        let uy = &sx.scale(&inv[1][0]) + &sy.scale(&inv[1][1]);
        let p = substitute(&self.p, &ux, &uy);
        let q = substitute(&self.q, &ux, &uy);
        Self::new(
            &p.scale(&m[0][0]) + &q.scale(&m[0][1]),
            &p.scale(&m[1][0]) + &q.scale(&m[1][1]),
        )
    }
}

fn substitute(f: &BivariatePoly, x: &BivariatePoly, y: &BivariatePoly) -> BivariatePoly {
    let mut out = BivariatePoly::zero();
    for (i, j, c) in f.terms() {
        out = &out + &(&x.pow(i) * &y.pow(j)).scale(c);
    }
    out
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})∂x + ({})∂y", self.p, self.q)
    }
}
