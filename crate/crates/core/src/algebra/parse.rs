//! Textual CD-number grammar shared by the CLI and test fixtures:
//!
//! ```text
//! number := term (('+'|'-') term)*
//! term   := real | real? 'e' index
//! ```
//!
//! `index` ranges over `1..2^v - 1`; the aliases `i`, `j`, `k` stand for
//! `e1`, `e2`, `e3` at level 2. Reals are plain decimals — the character
//! `e` always introduces a basis unit, never scientific notation, so
//! `0.25e7` is `0.25 * e_7`.

use super::CDNumber;
use crate::error::{Error, Result};

/// Parses `input` at the given level. With `level = None` the smallest
/// level containing every referenced unit is inferred (at least 1).
pub fn parse_cd(input: &str, level: Option<u32>) -> Result<CDNumber> {
    let terms = scan_terms(input)?;
    let needed = terms
        .iter()
        .map(|t| match t.index {
            0 => 1,
            i => {
                let mut v = 1;
                while (1usize << v) <= i {
                    v += 1;
                }
                v
            }
        })
        .max()
        .unwrap_or(1);
    let level = match level {
        Some(v) => {
            if needed > v {
                let bad = terms.iter().find(|t| t.index >= (1 << v)).unwrap();
                return Err(Error::Parse {
                    position: bad.position,
                    message: format!(
                        "unit e{} does not exist at level {} (max index {})",
                        bad.index,
                        v,
                        (1usize << v) - 1
                    ),
                });
            }
            v
        }
        None => needed,
    };
    for t in &terms {
        if t.alias && level != 2 {
            return Err(Error::Parse {
                position: t.position,
                message: "aliases i, j, k are only accepted at level 2".into(),
            });
        }
    }
    let mut out = CDNumber::zero(level);
    let mut coords = out.into_coords();
    for t in &terms {
        coords[t.index] += t.value;
    }
    out = CDNumber::new(level, coords)?;
    Ok(out)
}

struct Term {
    value: f64,
    index: usize,
    position: usize,
    alias: bool,
}

fn scan_terms(input: &str) -> Result<Vec<Term>> {
    let bytes = input.as_bytes();
    let mut pos = 0;
    let mut terms = Vec::new();
    let mut sign = 1.0;
    let mut expect_term = true;

    skip_ws(bytes, &mut pos);
    if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
        if bytes[pos] == b'-' {
            sign = -1.0;
        }
        pos += 1;
        skip_ws(bytes, &mut pos);
    }

    loop {
        if expect_term {
            let term = scan_term(bytes, &mut pos, sign)?;
            terms.push(term);
            expect_term = false;
            skip_ws(bytes, &mut pos);
            continue;
        }
        if pos >= bytes.len() {
            break;
        }
        match bytes[pos] {
            b'+' => sign = 1.0,
            b'-' => sign = -1.0,
            other => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("expected '+' or '-', found {:?}", other as char),
                });
            }
        }
        pos += 1;
        skip_ws(bytes, &mut pos);
        expect_term = true;
    }
    Ok(terms)
}

fn scan_term(bytes: &[u8], pos: &mut usize, sign: f64) -> Result<Term> {
    let start = *pos;
    if *pos >= bytes.len() {
        return Err(Error::Parse {
            position: start,
            message: "expected a term".into(),
        });
    }
    // alias units
    if let Some(&c) = bytes.get(*pos) {
        if matches!(c, b'i' | b'j' | b'k') {
            *pos += 1;
            return Ok(Term {
                value: sign,
                index: (c - b'i' + 1) as usize,
                position: start,
                alias: true,
            });
        }
    }
    let coeff = scan_real(bytes, pos);
    let has_unit = bytes.get(*pos) == Some(&b'e');
    match (coeff, has_unit) {
        (Some(c), false) => Ok(Term {
            value: sign * c,
            index: 0,
            position: start,
            alias: false,
        }),
        (coeff, true) => {
            *pos += 1;
            let idx_start = *pos;
            let index = scan_uint(bytes, pos).ok_or_else(|| Error::Parse {
                position: idx_start,
                message: "expected a unit index after 'e'".into(),
            })?;
            if index == 0 {
                return Err(Error::Parse {
                    position: idx_start,
                    message: "unit index must be at least 1 (e0 is the real unit)".into(),
                });
            }
            Ok(Term {
                value: sign * coeff.unwrap_or(1.0),
                index,
                position: start,
                alias: false,
            })
        }
        (None, false) => Err(Error::Parse {
            position: start,
            message: format!(
                "expected a real number or unit, found {:?}",
                bytes[start] as char
            ),
        }),
    }
}

fn scan_real(bytes: &[u8], pos: &mut usize) -> Option<f64> {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if bytes.get(*pos) == Some(&b'.') {
        *pos += 1;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
    }
    if *pos == start {
        return None;
    }
    std::str::from_utf8(&bytes[start..*pos])
        .ok()
        .and_then(|s| s.parse().ok())
}

fn scan_uint(bytes: &[u8], pos: &mut usize) -> Option<usize> {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return None;
    }
    std::str::from_utf8(&bytes[start..*pos])
        .ok()
        .and_then(|s| s.parse().ok())
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_reference_example() {
        let z = parse_cd("1.5 - 2e1 + 0.25e7", None).unwrap();
        assert_eq!(z.level(), 3);
        assert_eq!(z.coord(0), 1.5);
        assert_eq!(z.coord(1), -2.0);
        assert_eq!(z.coord(7), 0.25);
    }

    #[test]
    fn e_is_a_unit_marker_not_scientific_notation() {
        let z = parse_cd("0.25e7", None).unwrap();
        assert_eq!(z.coord(7), 0.25);
        assert_eq!(z.coord(0), 0.0);
    }

    #[test]
    fn aliases_at_level_2() {
        let z = parse_cd("1 + i - 2j + 0.5k", Some(2)).unwrap();
        assert_eq!(z.coords(), &[1.0, 1.0, -2.0, 0.5]);
        assert!(parse_cd("i", Some(3)).is_err());
    }

    #[test]
    fn bare_unit_and_leading_sign() {
        let z = parse_cd("-e2", None).unwrap();
        assert_eq!(z.coord(2), -1.0);
        let z = parse_cd("e3 + e3", None).unwrap();
        assert_eq!(z.coord(3), 2.0);
    }

    #[test]
    fn plain_reals() {
        let z = parse_cd("5", Some(2)).unwrap();
        assert_eq!(z.coords(), &[5.0, 0.0, 0.0, 0.0]);
        let z = parse_cd("-1.25", Some(1)).unwrap();
        assert_eq!(z.coords(), &[-1.25, 0.0]);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_cd("1 + e9", Some(2)) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_cd("1 ++ 2", Some(2)) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_cd("1 + e0", Some(2)).is_err());
        assert!(parse_cd("", Some(2)).is_err());
    }
}
