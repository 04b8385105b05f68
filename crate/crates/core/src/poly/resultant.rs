//! Resultants of bivariate polynomials by evaluation and interpolation.

use num::{One, Zero};

use super::{BivariatePoly, Rational, UnivariatePoly, Var};
use crate::linalg::determinant;

/// `Res_y(f, g)` as a polynomial in `x`.
///
/// The Sylvester matrix is built with the formal `y`-degrees of `f` and `g`,
/// so its determinant is a polynomial identity in `x`; it is evaluated at
/// enough integer points to pin down every coefficient and interpolated.
/// Both inputs must have positive degree in `y`.
pub fn resultant_in_y(f: &BivariatePoly, g: &BivariatePoly) -> UnivariatePoly {
    let a = f.degree_in(Var::Y).expect("nonzero f") as usize;
    let b = g.degree_in(Var::Y).expect("nonzero g") as usize;
    assert!(a > 0 && b > 0, "resultant needs positive y-degree");
    let fc: Vec<UnivariatePoly> = (0..=a)
        .map(|k| f.coefficient_in(Var::Y, k as u32))
        .collect();
    let gc: Vec<UnivariatePoly> = (0..=b)
        .map(|k| g.coefficient_in(Var::Y, k as u32))
        .collect();
    let deg_x = |cs: &[UnivariatePoly]| {
        cs.iter()
            .filter_map(UnivariatePoly::degree)
            .max()
            .unwrap_or(0)
    };
    let bound = a * deg_x(&gc) + b * deg_x(&fc);
    let points: Vec<(Rational, Rational)> = (0..=bound)
        .map(|k| {
            let x0 = Rational::from_integer(k.into());
            let fv: Vec<Rational> = fc.iter().map(|c| c.eval(&x0)).collect();
            let gv: Vec<Rational> = gc.iter().map(|c| c.eval(&x0)).collect();
            let det = determinant(&sylvester(&fv, &gv));
            (x0, det)
        })
        .collect();
    interpolate(&points)
}

/// Sylvester matrix from ascending coefficient lists.
pub fn sylvester(f: &[Rational], g: &[Rational]) -> Vec<Vec<Rational>> {
    let (a, b) = (f.len() - 1, g.len() - 1);
    let n = a + b;
    let mut rows = Vec::with_capacity(n);
    for shift in 0..b {
        let mut row = vec![Rational::zero(); n];
        for (k, c) in f.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..a {
        let mut row = vec![Rational::zero(); n];
        for (k, c) in g.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Newton interpolation through distinct abscissae.
pub fn interpolate(points: &[(Rational, Rational)]) -> UnivariatePoly {
    let n = points.len();
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / (xs[k] - xs[k - level]);
        }
    }
    let mut out = UnivariatePoly::zero();
    let mut basis = UnivariatePoly::one();
    for (k, c) in dd.iter().enumerate() {
        out = &out + &basis.scale(c);
        basis = &basis * &UnivariatePoly::new(vec![-xs[k].clone(), Rational::one()]);
    }
    out
}
