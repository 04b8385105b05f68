//! Rational invariant lines of a finite-type field.
//!
//! Vertical lines `x = x0` are invariant iff `P(x0, y) ≡ 0`, so `x0` is a
//! common root of the coefficients of `P` in `y`. A line `y = m·x + c` is
//! invariant iff `Q(x, mx + c) − m·P(x, mx + c) ≡ 0` in `x`; its coefficients
//! `C_k(m, c)` form a polynomial system whose slopes are roots of an
//! eliminant obtained from resultants in `c`.

use num::{One, Zero};

use super::{classify, FieldClass};
use crate::arrangement::Line;
use crate::derivations::VectorField;
use crate::error::{Error, Result};
use crate::poly::resultant::resultant_in_y;
use crate::poly::{BivariatePoly, Rational, UnivariatePoly, Var};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantLines {
    pub rational_lines: Vec<Line>,
    /// Every eliminant split into rational linear factors, so no invariant
    /// line was missed.
    pub complete: bool,
}

pub fn invariant_lines(chi: &VectorField) -> Result<InvariantLines> {
    let class = classify(chi);
    if class != FieldClass::Finite {
        return Err(Error::InfiniteType(class.to_string()));
    }
    let mut lines = Vec::new();
    let mut complete = true;

    // Vertical lines.
    let p_coeffs = (0..=chi.p.degree_in(Var::Y).unwrap_or(0))
        .map(|j| chi.p.coefficient_in(Var::Y, j))
        .fold(UnivariatePoly::zero(), |g, c| g.gcd(&c));
    complete &= p_coeffs.splits_over_rationals();
    for x0 in p_coeffs.rational_roots() {
        lines.push(Line::new(&Rational::one(), &Rational::zero(), &-x0).unwrap());
    }

    // Non-vertical lines: system in (m, c), stored with m as `x`, c as `y`.
    let system = slope_system(chi);
    let eliminant = eliminant(&system);
    match eliminant {
        None => complete = false,
        Some(e) => {
            complete &= e.splits_over_rationals();
            for m0 in e.rational_roots() {
                let g = system
                    .iter()
                    .map(|ck| at_slope(ck, &m0))
                    .fold(UnivariatePoly::zero(), |g, c| g.gcd(&c));
                if g.is_zero() {
                    // Every line of slope m0 would be invariant.
                    complete = false;
                    continue;
                }
                complete &= g.splits_over_rationals();
                for c0 in g.rational_roots() {
                    lines.push(Line::new(&m0, &-Rational::one(), &c0).unwrap());
                }
            }
        }
    }
    lines.sort();
    lines.dedup();
    Ok(InvariantLines {
        rational_lines: lines,
        complete,
    })
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into());
    }
    r
}

/// `C_k(m, c)` = coefficient of `x^k` in `Q(x, mx + c) − m·P(x, mx + c)`.
fn slope_system(chi: &VectorField) -> Vec<BivariatePoly> {
    let d = chi.degree().unwrap_or(0) as usize;
    let mut out = vec![BivariatePoly::zero(); d + 1];
    // x^i (mx + c)^j = Σ_l C(j,l) m^l c^(j−l) x^(i+l)
    for (poly, shift, sign) in [
        (&chi.q, 0u32, Rational::one()),
        (&chi.p, 1, -Rational::one()),
    ] {
        for (i, j, a) in poly.terms() {
            for l in 0..=j {
                let coef = a * binomial(j, l) * &sign;
                let term = BivariatePoly::monomial(coef, l + shift, j - l);
                let k = (i + l) as usize;
                out[k] = &out[k] + &term;
            }
        }
    }
    out.retain(|c| !c.is_zero());
    out
}

fn at_slope(ck: &BivariatePoly, m0: &Rational) -> UnivariatePoly {
    let top = ck.degree_in(Var::Y).unwrap_or(0);
    UnivariatePoly::new(
        (0..=top)
            .map(|j| ck.coefficient_in(Var::Y, j).eval(m0))
            .collect(),
    )
}

/// Gcd of the `c`-free members and of all pairwise resultants in `c`; falls
/// back to resultants of fixed combinations when all of those vanish.
fn eliminant(system: &[BivariatePoly]) -> Option<UnivariatePoly> {
    let mut g = UnivariatePoly::zero();
    let mut with_c = Vec::new();
    for ck in system {
        if ck.degree_in(Var::Y) == Some(0) {
            g = g.gcd(&ck.coefficient_in(Var::Y, 0));
        } else {
            with_c.push(ck);
        }
    }
    for (n, f) in with_c.iter().enumerate() {
        for h in &with_c[n + 1..] {
            let r = resultant_in_y(f, h);
            if !r.is_zero() {
                g = g.gcd(&r);
            }
        }
    }
    if g.is_zero() && with_c.len() > 1 {
        for seed in 1..=4i64 {
            let combo = |s: i64| {
                with_c
                    .iter()
                    .enumerate()
                    .fold(BivariatePoly::zero(), |acc, (k, c)| {
                        let w = Rational::from_integer(
                            ((k as i64 + 1) * s + k as i64 * k as i64).into(),
                        );
                        &acc + &c.scale(&w)
                    })
            };
            let (f, h) = (combo(seed), combo(seed + 7));
            if f.degree_in(Var::Y).unwrap_or(0) > 0 && h.degree_in(Var::Y).unwrap_or(0) > 0 {
                let r = resultant_in_y(&f, &h);
                if !r.is_zero() {
                    g = g.gcd(&r);
                }
            }
        }
    }
    (!g.is_zero()).then_some(g)
}
