use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{Rational, UnivariatePoly};
use crate::arrangement::Line;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Sparse polynomial in `x` and `y` with rational coefficients.
///
/// Terms are keyed by the exponent pair `(i, j)` of `x^i y^j`. Zero
/// coefficients are never stored, so the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(i, j, coefficient)` triples, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, Rational)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// The affine form `a·x + b·y + c`.
    pub fn linear(a: Rational, b: Rational, c: Rational) -> Self {
        Self::from_terms([(1, 0, a), (0, 1, b), (0, 0, c)])
    }

    pub(crate) fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((i, j)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    /// Degree in one variable, `None` for the zero polynomial.
    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| match var {
                Var::X => i,
                Var::Y => j,
            })
            .max()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        let dx = self.degree_in(Var::X).unwrap_or(0) as usize;
        let dy = self.degree_in(Var::Y).unwrap_or(0) as usize;
        let xp = powers(x0, dx);
        let yp = powers(y0, dy);
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * &xp[i as usize] * &yp[j as usize])
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn partial_derivative(&self, var: Var) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            match var {
                Var::X if i > 0 => out.add_term(i - 1, j, c * Rational::from_integer(i.into())),
                Var::Y if j > 0 => out.add_term(i, j - 1, c * Rational::from_integer(j.into())),
                _ => {}
            }
        }
        out
    }

    /// Substitutes univariate polynomials for `x` and `y`.
    pub fn compose(&self, x: &UnivariatePoly, y: &UnivariatePoly) -> UnivariatePoly {
        let dx = self.degree_in(Var::X).unwrap_or(0) as usize;
        let dy = self.degree_in(Var::Y).unwrap_or(0) as usize;
        let mut xp = vec![UnivariatePoly::one()];
        for k in 0..dx {
            xp.push(&xp[k] * x);
        }
        let mut yp = vec![UnivariatePoly::one()];
        for k in 0..dy {
            yp.push(&yp[k] * y);
        }
        let mut out = UnivariatePoly::zero();
        for (&(i, j), c) in &self.terms {
            out = &out + &(&xp[i as usize] * &yp[j as usize]).scale(c);
        }
        out
    }

    /// `f(p0 + t·v)` along the canonical parametrization of `line`.
    pub fn restrict_to_line(&self, line: &Line) -> UnivariatePoly {
        let (x0, y0) = line.base_point();
        let (vx, vy) = line.direction();
        let xt = UnivariatePoly::new(vec![x0, Rational::from_integer(vx)]);
        let yt = UnivariatePoly::new(vec![y0, Rational::from_integer(vy)]);
        self.compose(&xt, &yt)
    }

    /// Whether the affine form of `line` divides `self`.
    pub fn divisible_by_line(&self, line: &Line) -> bool {
        self.restrict_to_line(line).is_zero()
    }

    /// Exact quotient by the affine form of `line`, `None` if it does not
    /// divide. Works by term-wise Euclidean reduction in `y` (in `x` for
    /// vertical lines) and never goes through `restrict_to_line`.
    pub fn div_exact_linear(&self, line: &Line) -> Option<BivariatePoly> {
        let (a, b, c) = line.coefficients();
        // Reduce in the variable whose coefficient is nonzero.
        let y_side = !b.is_zero();
        let (lead, other) = if y_side { (b, a) } else { (a, b) };
        let konst = c;
        let mut rem = self.terms.clone();
        let mut quot = BivariatePoly::zero();
        loop {
            let key = rem
                .keys()
                .copied()
                .filter(|&(i, j)| if y_side { j > 0 } else { i > 0 })
                .max_by_key(|&(i, j)| if y_side { (j, i) } else { (i, j) });
            let Some((i, j)) = key else { break };
            let coef = rem.remove(&(i, j)).unwrap() / &lead;
            let (qi, qj) = if y_side { (i, j - 1) } else { (i - 1, j) };
            quot.add_term(qi, qj, coef.clone());
            let mut sub = |ii: u32, jj: u32, v: Rational| {
                if v.is_zero() {
                    return;
                }
                let e = rem.entry((ii, jj)).or_insert_with(Rational::zero);
                *e -= v;
                if e.is_zero() {
                    rem.remove(&(ii, jj));
                }
            };
            if y_side {
                sub(qi + 1, qj, &coef * &other);
            } else {
                sub(qi, qj + 1, &coef * &other);
            }
            sub(qi, qj, &coef * &konst);
        }
        rem.is_empty().then_some(quot)
    }

    /// Coefficient of `y^j` as a polynomial in `x` (or of `x^j` in `y`).
    pub fn coefficient_in(&self, var: Var, power: u32) -> UnivariatePoly {
        let mut coeffs = Vec::new();
        for (&(i, j), c) in &self.terms {
            let (keep, other) = match var {
                Var::Y => (j, i),
                Var::X => (i, j),
            };
            if keep == power {
                let k = other as usize;
                if coeffs.len() <= k {
                    coeffs.resize(k + 1, Rational::zero());
                }
                coeffs[k] = c.clone();
            }
        }
        UnivariatePoly::new(coeffs)
    }
}

fn powers(base: &Rational, n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Rational::one());
    for k in 0..n {
        let next = &out[k] * base;
        out.push(next);
    }
    out
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BivariatePoly {
            type Output = BivariatePoly;
            fn $m(self, rhs: BivariatePoly) -> BivariatePoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for BivariatePoly {
    /// Highest total degree first, `x`-heavy terms first within a degree.
    /// The output is accepted by the `--field` expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
        for (n, key) in keys.iter().enumerate() {
            let c = &self.terms[key];
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || *key == (0, 0) {
                factors.push(mag.to_string());
            }
            for (v, e) in [("x", key.0), ("y", key.1)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Whether the affine form of `line` divides `f`, decided by restriction.
pub fn divides_line(line: &Line, f: &BivariatePoly) -> bool {
    f.divisible_by_line(line)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    fn x() -> BivariatePoly {
        BivariatePoly::x()
    }
    fn y() -> BivariatePoly {
        BivariatePoly::y()
    }

    #[test]
    fn add_cancels_and_doubles() {
        assert_eq!(&x() + &y() + (&x() - &y()), x().scale(&rat(2)));
        let f = &(&x() * &x()) * &y();
        assert_eq!(&f + &BivariatePoly::zero(), f);
        assert_eq!(&f + &f, f.scale(&rat(2)));
    }

    #[test]
    fn mul_examples() {
        let diff = &(&x() - &y()) * &(&x() + &y());
        assert_eq!(diff, &(&x() * &x()) - &(&y() * &y()));
        let f = &(&x() * &y()) * &(&x() - &y());
        let expected = BivariatePoly::from_terms([(2, 1, rat(1)), (1, 2, rat(-1))]);
        assert_eq!(f, expected);
        for (a, b) in [(1, 2), (-3, 5), (7, -4), (0, 9), (2, 2)] {
            let (p, q) = (ratio(a, 3), ratio(b, 7));
            assert_eq!(f.eval(&p, &q), &p * &q * (&p - &q));
        }
        assert!((&f * &BivariatePoly::zero()).is_zero());
        assert_eq!(f.degree(), Some(3));
    }

    #[test]
    fn eval_examples() {
        let f = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(f.eval(&rat(2), &rat(1)), rat(3));
        assert_eq!(BivariatePoly::zero().eval(&rat(4), &ratio(1, 2)), rat(0));
        assert_eq!(BivariatePoly::zero().degree(), None);
    }

    #[test]
    fn derivatives() {
        let x2y = &(&x() * &x()) * &y();
        assert_eq!(x2y.partial_derivative(Var::X), (&x() * &y()).scale(&rat(2)));
        let c = &(&x() * &x()) + &BivariatePoly::constant(rat(3));
        assert!(c.partial_derivative(Var::Y).is_zero());
        let f = &(&x() * &y()) * &(&x() - &y());
        let expected = &(&x() * &y()).scale(&rat(2)) - &(&y() * &y());
        assert_eq!(f.partial_derivative(Var::X), expected);
    }

    #[test]
    fn restriction_examples() {
        let x_axis = Line::from_ints(0, 1, 0);
        let diag = Line::from_ints(1, -1, 0);
        let y_axis = Line::from_ints(1, 0, 0);
        assert!(x().restrict_to_line(&y_axis).is_zero());
        let sq = &(&x() * &x()) - &(&y() * &y());
        assert!(sq.restrict_to_line(&diag).is_zero());
        assert!(divides_line(&diag, &sq));
        let s = (&x() + &y()).restrict_to_line(&x_axis);
        assert_eq!(s, UnivariatePoly::new(vec![rat(0), rat(1)]));
        assert!(!divides_line(&y_axis, &(&x() + &BivariatePoly::one())));
    }

    #[test]
    fn exact_linear_division() {
        let l = Line::from_ints(2, -5, 1);
        let g = BivariatePoly::from_terms([(2, 1, ratio(3, 4)), (0, 0, rat(-2)), (1, 0, rat(7))]);
        let f = &l.affine_form() * &g;
        assert_eq!(f.div_exact_linear(&l), Some(g.clone()));
        let vertical = Line::from_ints(3, 0, -1);
        let f = &vertical.affine_form() * &g;
        assert_eq!(f.div_exact_linear(&vertical), Some(g.clone()));
        assert_eq!(g.div_exact_linear(&l), None);
        assert_eq!(
            BivariatePoly::zero().div_exact_linear(&l),
            Some(BivariatePoly::zero())
        );
    }

    #[test]
    fn display_round_trip_shape() {
        let f = BivariatePoly::from_terms([
            (2, 0, rat(6)),
            (0, 2, rat(2)),
            (1, 0, rat(5)),
            (1, 1, rat(8)),
            (0, 0, rat(1)),
        ]);
        assert_eq!(f.to_string(), "6*x^2 + 8*x*y + 2*y^2 + 5*x + 1");
        assert_eq!((-&x()).to_string(), "-x");
        assert_eq!(BivariatePoly::zero().to_string(), "0");
    }
}
