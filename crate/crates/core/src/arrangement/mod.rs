//! Lines, arrangements and their combinatorics.

mod builtin;
mod combinatorics;
mod parse;
mod poset;

pub use builtin::{builtin_arrangement, Builtin};
pub use combinatorics::{
    combinatorial_data, singular_points, weak_equal, CombinatorialData, ParallelClass,
    SingularPoint,
};
pub use parse::parse_arrangement;
pub use poset::{poset_isomorphic, IntersectionPoset, PosetIsomorphism};

use std::fmt;

use num::{BigInt, Integer, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{denominator_lcm, BivariatePoly, Rational};

/// The line `alpha·x + beta·y + gamma = 0` with primitive integer
/// coefficients and a sign-canonical normal: `alpha > 0`, or `alpha = 0` and
/// `beta > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    alpha: BigInt,
    beta: BigInt,
    gamma: BigInt,
}

impl Line {
    /// Normalizes `a·x + b·y + c = 0`. Returns `None` when `a = b = 0`.
    pub fn new(a: &Rational, b: &Rational, c: &Rational) -> Option<Self> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let l = Rational::from_integer(denominator_lcm([a, b, c]));
        let (a, b, c) = (
            (a * &l).to_integer(),
            (b * &l).to_integer(),
            (c * &l).to_integer(),
        );
        Some(Self::from_big(a, b, c))
    }

    /// Panics when `a = b = 0`.
    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        assert!(a != 0 || b != 0, "degenerate line");
        Self::from_big(a.into(), b.into(), c.into())
    }

    fn from_big(a: BigInt, b: BigInt, c: BigInt) -> Self {
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (a / &g, b / &g, c / &g);
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
            c = -c;
        }
        Self {
            alpha: a,
            beta: b,
            gamma: c,
        }
    }

    pub fn alpha(&self) -> &BigInt {
        &self.alpha
    }

    pub fn beta(&self) -> &BigInt {
        &self.beta
    }

    pub fn gamma(&self) -> &BigInt {
        &self.gamma
    }

    pub fn coefficients(&self) -> (Rational, Rational, Rational) {
        (
            Rational::from_integer(self.alpha.clone()),
            Rational::from_integer(self.beta.clone()),
            Rational::from_integer(self.gamma.clone()),
        )
    }

    pub fn is_vertical(&self) -> bool {
        self.beta.is_zero()
    }

    /// `(-gamma/alpha, 0)` for vertical lines, `(0, -gamma/beta)` otherwise.
    pub fn base_point(&self) -> (Rational, Rational) {
        let g = Rational::from_integer(-self.gamma.clone());
        if self.beta.is_zero() {
            (
                g / Rational::from_integer(self.alpha.clone()),
                Rational::zero(),
            )
        } else {
            (
                Rational::zero(),
                g / Rational::from_integer(self.beta.clone()),
            )
        }
    }

    /// `(beta, -alpha)`
    pub fn direction(&self) -> (BigInt, BigInt) {
        (self.beta.clone(), -self.alpha.clone())
    }

    /// Primitive sign-canonical direction; equal exactly for parallel lines.
    pub fn direction_class(&self) -> (BigInt, BigInt) {
        canonical_direction(&self.beta, &-self.alpha.clone())
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        &self.alpha * &other.beta == &self.beta * &other.alpha
    }

    pub fn affine_form(&self) -> BivariatePoly {
        let (a, b, c) = self.coefficients();
        BivariatePoly::linear(a, b, c)
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let (a, b, c) = self.coefficients();
        a * x + b * y + c
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        self.eval(x, y).is_zero()
    }

    /// Intersection point, `None` for parallel lines.
    pub fn intersect(&self, other: &Line) -> Option<(Rational, Rational)> {
        let det = &self.alpha * &other.beta - &self.beta * &other.alpha;
        if det.is_zero() {
            return None;
        }
        let det = Rational::from_integer(det);
        let x = Rational::from_integer(&self.beta * &other.gamma - &other.beta * &self.gamma);
        let y = Rational::from_integer(&other.alpha * &self.gamma - &self.alpha * &other.gamma);
        Some((x / &det, y / det))
    }

    /// Image under the invertible affine map `p ↦ M·p + t`.
    pub fn transform(&self, m: [[Rational; 2]; 2], t: [Rational; 2]) -> Line {
        // αx+βy+γ=0 pulled back through the inverse map.
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        let inv = [
            [&m[1][1] / &det, -&m[0][1] / &det],
            [-&m[1][0] / &det, &m[0][0] / &det],
        ];
        let (a, b, c) = self.coefficients();
        let na = &a * &inv[0][0] + &b * &inv[1][0];
        let nb = &a * &inv[0][1] + &b * &inv[1][1];
        let nc = c - (&na * &t[0] + &nb * &t[1]);
        Line::new(&na, &nb, &nc).expect("affine image of a line is a line")
    }
}

/// Primitive, sign-canonical representative of a nonzero direction.
pub fn canonical_direction(vx: &BigInt, vy: &BigInt) -> (BigInt, BigInt) {
    let g = vx.gcd(vy);
    let (mut a, mut b) = (vx / &g, vy / &g);
    if a.is_negative() || (a.is_zero() && b.is_negative()) {
        a = -a;
        b = -b;
    }
    (a, b)
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.affine_form())
    }
}

/// A finite nonempty list of pairwise distinct lines, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<Line>,
}

impl Arrangement {
    pub fn new(lines: Vec<Line>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        for (j, l) in lines.iter().enumerate() {
            if let Some(i) = lines[..j].iter().position(|k| k == l) {
                return Err(Error::DuplicateLine {
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
        Ok(Self { lines })
    }

    /// Panics on degenerate or duplicate triples.
    pub fn from_triples(triples: &[(i64, i64, i64)]) -> Self {
        Self::new(
            triples
                .iter()
                .map(|&(a, b, c)| Line::from_ints(a, b, c))
                .collect(),
        )
        .expect("valid triples")
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// `Q_A`, the product of the affine forms.
    pub fn defining_polynomial(&self) -> BivariatePoly {
        product_of_forms(self.lines.iter())
    }

    pub fn transform(&self, m: [[Rational; 2]; 2], t: [Rational; 2]) -> Arrangement {
        Arrangement::new(
            self.lines
                .iter()
                .map(|l| l.transform(m.clone(), t.clone()))
                .collect(),
        )
        .expect("affine maps preserve distinctness")
    }
}

pub(crate) fn product_of_forms<'a>(lines: impl Iterator<Item = &'a Line>) -> BivariatePoly {
    lines.fold(BivariatePoly::one(), |acc, l| &acc * &l.affine_form())
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            writeln!(f, "{} {} {}", l.alpha, l.beta, l.gamma)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn normalization() {
        let l = Line::new(&ratio(-4, 1), &ratio(-2, 1), &ratio(-2, 1)).unwrap();
        assert_eq!(l, Line::from_ints(2, 1, 1));
        let l = Line::new(&rat(0), &ratio(-1, 2), &ratio(1, 3)).unwrap();
        assert_eq!(l, Line::from_ints(0, 3, -2));
        assert!(Line::new(&rat(0), &rat(0), &rat(1)).is_none());
        assert_eq!(Line::from_ints(10, 10, -5), Line::from_ints(2, 2, -1));
    }

    #[test]
    fn parametrization_lies_on_line() {
        for l in [
            Line::from_ints(1, 0, 0),
            Line::from_ints(3, 0, -7),
            Line::from_ints(2, -5, 1),
            Line::from_ints(0, 1, -1),
        ] {
            let (x0, y0) = l.base_point();
            assert!(l.contains(&x0, &y0));
            let (vx, vy) = l.direction();
            let (x1, y1) = (
                &x0 + Rational::from_integer(vx),
                &y0 + Rational::from_integer(vy),
            );
            assert!(l.contains(&x1, &y1));
        }
        assert_eq!(
            Line::from_ints(1, 0, 0).direction(),
            (BigInt::from(0), BigInt::from(-1))
        );
    }

    #[test]
    fn intersections_and_parallels() {
        let a = Line::from_ints(1, -1, 0);
        let b = Line::from_ints(0, 1, -1);
        assert_eq!(a.intersect(&b), Some((rat(1), rat(1))));
        let c = Line::from_ints(2, -2, 5);
        assert!(a.is_parallel(&c));
        assert_eq!(a.intersect(&c), None);
        assert_eq!(a.direction_class(), c.direction_class());
    }

    #[test]
    fn transform_maps_points() {
        let l = Line::from_ints(2, 3, -1);
        let m = [[rat(1), rat(2)], [ratio(-1, 2), rat(3)]];
        let t = [rat(5), ratio(1, 7)];
        let img = l.transform(m.clone(), t.clone());
        let (x0, y0) = l.base_point();
        let px = &m[0][0] * &x0 + &m[0][1] * &y0 + &t[0];
        let py = &m[1][0] * &x0 + &m[1][1] * &y0 + &t[1];
        assert!(img.contains(&px, &py));
    }

    #[test]
    fn duplicates_rejected() {
        let err = Arrangement::new(vec![Line::from_ints(1, 0, 0), Line::from_ints(-1, 0, 0)]);
        assert_eq!(
            err,
            Err(Error::DuplicateLine {
                first: 1,
                second: 2
            })
        );
        assert_eq!(Arrangement::new(vec![]), Err(Error::EmptyArrangement));
    }
}
