use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use super::Rational;

/// Dense univariate polynomial, `coeffs[k]` multiplies `t^k`.
///
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t - r`
    pub fn linear_factor(r: &Rational) -> Self {
        Self::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (n, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + n] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn square_free(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Scales to integer coefficients with content one and positive leading
    /// coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = super::denominator_lcm(&self.coeffs);
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    /// Distinct rational roots in increasing order.
    ///
    /// Real roots of the square-free part are isolated with Sturm sequences
    /// and each isolating interval is shrunk until it contains at most one
    /// rational whose denominator divides the leading coefficient, which
    /// every rational root must satisfy.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = self.square_free();
        let ints = Self::new(
            sf.primitive_integer()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        );
        let lead = ints.leading().unwrap().clone();
        let sturm = SturmChain::new(&ints);
        let bound = ints.cauchy_bound();
        let mut roots = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            let count = sturm.count(&lo, &hi);
            if count == 0 {
                continue;
            }
            if count > 1 {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
                continue;
            }
            // Exactly one root in (lo, hi].
            let (mut lo, mut hi) = (lo, hi);
            while (&hi - &lo) * &lead >= Rational::one() {
                let mid = (&lo + &hi) / Rational::from_integer(2.into());
                if sturm.count(&lo, &mid) == 1 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let z = (&hi * &lead).floor();
            if z > &lo * &lead {
                let cand = z / &lead;
                if ints.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
        roots.sort();
        roots
    }

    /// Divides out every rational linear factor. Returns the roots with
    /// multiplicities and the cofactor, which is constant exactly when the
    /// polynomial splits over the rationals.
    pub fn split_rational(&self) -> (Vec<(Rational, usize)>, Self) {
        let mut rest = self.clone();
        let mut out = Vec::new();
        for r in self.rational_roots() {
            let lin = Self::linear_factor(&r);
            let mut mult = 0;
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            out.push((r, mult));
        }
        (out, rest)
    }

    /// Whether the polynomial is a product of rational linear factors.
    /// Constants split trivially; the zero polynomial does not.
    pub fn splits_over_rationals(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.split_rational().1.degree() == Some(0)
    }

    fn cauchy_bound(&self) -> Rational {
        let lc = self.leading().unwrap().abs();
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lc)
            .max()
            .unwrap_or_else(Rational::zero);
        m + Rational::one()
    }
}

struct SturmChain {
    chain: Vec<UnivariatePoly>,
}

impl SturmChain {
    fn new(p: &UnivariatePoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            // Only signs matter, so keep the remainders small.
            let r = -&r;
            let scale = r.leading().unwrap().abs().recip();
            chain.push(r.scale(&scale));
        }
        Self { chain }
    }

    fn sign_changes(&self, t: &Rational) -> usize {
        let mut changes = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let v = p.eval(t);
            let s = if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Number of distinct roots in `(lo, hi]` for a square-free polynomial.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.sign_changes(lo).saturating_sub(self.sign_changes(hi))
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn add(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn sub(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn mul(self, rhs: &UnivariatePoly) -> UnivariatePoly {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }
}

impl Neg for &UnivariatePoly {
    type Output = UnivariatePoly;
    fn neg(self) -> UnivariatePoly {
        UnivariatePoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
