//! Expression grammar for `--field`:
//!
//! ```text
//! field  := expr ';' expr
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power ('*' power)*
//! power  := atom ('^' integer)?
//! atom   := integer ['/' integer] | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit, so `2x` is rejected.

use num::BigInt;

use crate::derivations::VectorField;
use crate::error::{Error, Result};
use crate::poly::{BivariatePoly, Rational};

pub fn parse_field(s: &str) -> Result<VectorField> {
    let Some((p, q)) = s.split_once(';') else {
        return Err(err(0, "expected `P;Q`"));
    };
    let offset = p.chars().count() + 1;
    let p = parse_polynomial(p)?;
    let q = parse_polynomial(q).map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column: column + offset,
            message,
        },
        other => other,
    })?;
    Ok(VectorField::new(p, q))
}

pub fn parse_polynomial(s: &str) -> Result<BivariatePoly> {
    let mut parser = Parser {
        chars: s.chars().collect(),
        pos: 0,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(err(
            parser.pos,
            &format!("unexpected `{}`", parser.chars[parser.pos]),
        ));
    }
    Ok(p)
}

fn err(pos: usize, message: &str) -> Error {
    Error::Parse {
        line: 1,
        column: pos + 1,
        message: message.to_string(),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<BivariatePoly> {
        let negate = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<BivariatePoly> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<BivariatePoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let e = self
                .integer()
                .ok_or_else(|| err(start, "expected exponent"))?;
            let e: u32 = e
                .try_into()
                .map_err(|_| err(start, "exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BivariatePoly> {
        let out = match self.peek() {
            Some('x') => {
                self.pos += 1;
                BivariatePoly::x()
            }
            Some('y') => {
                self.pos += 1;
                BivariatePoly::y()
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(err(self.pos, "expected `)`"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer().unwrap();
                let mut value = Rational::from_integer(num);
                if self.chars.get(self.pos) == Some(&'/') {
                    self.pos += 1;
                    let den = self
                        .integer()
                        .ok_or_else(|| err(self.pos, "expected denominator"))?;
                    if den == BigInt::from(0) {
                        return Err(err(self.pos - 1, "zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                BivariatePoly::constant(value)
            }
            Some(c) => return Err(err(self.pos, &format!("unexpected `{c}`"))),
            None => return Err(err(self.pos, "unexpected end of input")),
        };
        // Reject implicit multiplication such as `2x` or `x y`.
        if let Some(c) = self.chars.get(self.pos) {
            if c.is_ascii_alphanumeric() || *c == '(' {
                return Err(err(self.pos, "implicit multiplication is not allowed"));
            }
        }
        Ok(out)
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn parses_reference_fields() {
        let f = parse_field("x^2;y^2").unwrap();
        assert_eq!(f.p, BivariatePoly::x().pow(2));
        assert_eq!(f.q, BivariatePoly::y().pow(2));
        let f = parse_field("0; x + 1").unwrap();
        assert!(f.p.is_zero());
        assert_eq!(f.q, &BivariatePoly::x() + &BivariatePoly::one());
    }

    #[test]
    fn precedence_and_rationals() {
        let p = parse_polynomial("-3/4*x^2*y + 2*(x - y)^2 - 1").unwrap();
        let expected = BivariatePoly::from_terms([
            (2, 1, ratio(-3, 4)),
            (2, 0, rat(2)),
            (1, 1, rat(-4)),
            (0, 2, rat(2)),
            (0, 0, rat(-1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn display_is_reparseable() {
        let p = parse_polynomial("6*x^2 + 8*x*y + 2*y^2 + 5*x + 1 - 1/3*y").unwrap();
        assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["2x", "x y", "x^", "(x", "x;", "1/0", "x + * y", "z"] {
            assert!(
                parse_field(&format!("{bad};1")).is_err() || bad == "x;",
                "{bad}"
            );
        }
        assert!(parse_field("x").is_err());
        assert!(parse_field("x;").is_err());
        match parse_field("x;y+2x") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 6),
            other => panic!("{other:?}"),
        }
    }
}
