use super::{Arrangement, Line};
use crate::error::{Error, Result};
use crate::poly::parse_rational;

/// Reads one line per row as three rationals `a b c` meaning `ax + by + c = 0`.
/// `#` starts a comment and blank rows are skipped.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut lines = Vec::new();
    let mut source_rows = Vec::new();
    for (row, raw) in text.lines().enumerate() {
        let row = row + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut values = Vec::with_capacity(3);
        for (column, token) in tokens(content) {
            let Some(v) = parse_rational(token) else {
                return Err(Error::Parse {
                    line: row,
                    column,
                    message: format!("malformed rational `{token}`"),
                });
            };
            values.push(v);
        }
        if values.len() != 3 {
            return Err(Error::Parse {
                line: row,
                column: 1,
                message: format!("expected 3 coefficients, found {}", values.len()),
            });
        }
        let line = Line::new(&values[0], &values[1], &values[2])
            .ok_or(Error::DegenerateLine { line: row })?;
        if let Some(k) = lines.iter().position(|l| *l == line) {
            return Err(Error::DuplicateLine {
                first: source_rows[k],
                second: row,
            });
        }
        lines.push(line);
        source_rows.push(row);
    }
    Arrangement::new(lines)
}

/// Whitespace-separated tokens with their 1-based starting column.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.char_indices()
        .filter(move |&(i, c)| {
            !c.is_whitespace() && (i == 0 || s[..i].chars().last().unwrap().is_whitespace())
        })
        .map(move |(i, _)| {
            let rest = &s[i..];
            let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
            (s[..i].chars().count() + 1, &rest[..end])
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pencil() {
        let a = parse_arrangement("1 0 0\n0 1 0\n1 -1 0").unwrap();
        assert_eq!(
            a.lines(),
            &[
                Line::from_ints(1, 0, 0),
                Line::from_ints(0, 1, 0),
                Line::from_ints(1, -1, 0)
            ]
        );
    }

    #[test]
    fn rational_entries_and_comments() {
        let a = parse_arrangement("# header\n\n2/1 1 1   # trailing\n 1/2 -1/3 3/4\n").unwrap();
        assert_eq!(a.lines()[0], Line::from_ints(2, 1, 1));
        assert_eq!(a.lines()[1], Line::from_ints(6, -4, 9));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_arrangement("1 0 0\n-1 0 0").unwrap_err(),
            Error::DuplicateLine {
                first: 1,
                second: 2
            }
        );
        assert_eq!(
            parse_arrangement("1 0 0\n0 0 5").unwrap_err(),
            Error::DegenerateLine { line: 2 }
        );
        assert_eq!(
            parse_arrangement("1 0 0\n1  x/2 0").unwrap_err(),
            Error::Parse {
                line: 2,
                column: 4,
                message: "malformed rational `x/2`".into()
            }
        );
        assert!(matches!(
            parse_arrangement("1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert_eq!(
            parse_arrangement("# nothing\n"),
            Err(Error::EmptyArrangement)
        );
    }
}
