//! Exact dense linear algebra over the rationals.
//!
//! Elimination runs fraction-free on integer rows (each row is first scaled by
//! the lcm of its denominators), choosing the first nonzero entry of each
//! column as pivot. The integer echelon form is then back-substituted into the
//! reduced row echelon form over the rationals, which is canonical for the
//! row space and yields a canonical nullspace basis.

use num::{BigInt, One, Zero};

use crate::poly::{denominator_lcm, Rational};

/// Reduced row echelon form; `rows[k]` has a leading one at `pivots[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedEchelon {
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl ReducedEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Free columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut pivot = self.pivots.iter().peekable();
        (0..self.cols)
            .filter(|c| {
                if pivot.peek() == Some(&c) {
                    pivot.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// One basis vector per free column `f`: a one at `f`, zeros at the other
    /// free columns, and the values forced on the pivot columns.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -&row[f];
                }
                v
            })
            .collect()
    }
}

fn integer_rows(rows: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, Vec<BigInt>) {
    let mut scales = Vec::with_capacity(rows.len());
    let ints = rows
        .iter()
        .map(|row| {
            let l = denominator_lcm(row);
            let out = row
                .iter()
                .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                .collect();
            scales.push(l);
            out
        })
        .collect();
    (ints, scales)
}

/// Fraction-free forward elimination in place. Returns the pivot columns and
/// the parity of the row swaps.
fn fraction_free_echelon(m: &mut [Vec<BigInt>], cols: usize) -> (Vec<usize>, bool) {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut odd = false;
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(i) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if i != r {
            m.swap(i, r);
            odd = !odd;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let p = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &p * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero());
                row[j] = v / &prev;
            }
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    (pivots, odd)
}

pub fn reduced_echelon(rows: &[Vec<Rational>], cols: usize) -> ReducedEchelon {
    let (mut m, _) = integer_rows(rows);
    let (pivots, _) = fraction_free_echelon(&mut m, cols);
    let mut out: Vec<Vec<Rational>> = m
        .into_iter()
        .take(pivots.len())
        .map(|row| row.into_iter().map(Rational::from_integer).collect())
        .collect();
    for k in (0..pivots.len()).rev() {
        let p = pivots[k];
        let inv = out[k][p].recip();
        for v in out[k][p..].iter_mut() {
            *v *= &inv;
        }
        let (above, below) = out.split_at_mut(k);
        let pivot_row = &below[0];
        for row in above.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for j in p..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
    }
    ReducedEchelon {
        rows: out,
        pivots,
        cols,
    }
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    let (mut m, _) = integer_rows(rows);
    fraction_free_echelon(&mut m, cols).0.len()
}

/// Determinant of a square matrix.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let (mut m, scales) = integer_rows(rows);
    let (pivots, odd) = fraction_free_echelon(&mut m, n);
    if pivots.len() < n {
        return Rational::zero();
    }
    let mut det = Rational::from_integer(m[n - 1][n - 1].clone());
    if odd {
        det = -det;
    }
    let scale: BigInt = scales.iter().product();
    det / Rational::from_integer(scale)
}

/// Row-major product `M·v`.
pub fn mat_vec(rows: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    rows.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| a * b)
                .fold(Rational::zero(), |s, t| s + t)
        })
        .collect()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Scales a nonzero vector so its first nonzero entry is `+1`.
pub fn normalize_leading(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|c| !c.is_zero()) {
        Some(lead) => {
            let inv = lead.recip();
            v.iter().map(|c| c * &inv).collect()
        }
        None => v.to_vec(),
    }
}
