//! Text formats. Lines starting with `#` are comments and blank lines are
//! ignored, except where a header is required.
//!
//! * Cayley table: `n`, then `n` rows of `n` 1-based entries; row `a`,
//!   column `b` holds `a*b`.
//! * Group: a `#group` header line, then a Cayley table of the product.
//! * Cocycle: `n m`, then `n` rows of `n` values mod `m`.
//! * Knot table: `name;strands;w1,w2,...` per line.

use std::fmt::Write as _;

use crate::cocycle::Cocycle2;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::knots::{parse_braid, BraidKnot};
use crate::quandle::Quandle;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers(line: usize, s: &str) -> Result<Vec<u64>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| parse_error(line, format!("not a nonnegative integer: {tok:?}")))
        })
        .collect()
}

/// Reads `n` and `n` rows of `n` 1-based indices, returning 0-based rows.
fn parse_square(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut lines = content_lines(text);
    let (l0, header) = lines.next().ok_or_else(|| parse_error(0, "missing order"))?;
    let head = parse_numbers(l0, header)?;
    if head.len() != 1 {
        return Err(parse_error(l0, "first line must hold the order alone"));
    }
    let n = head[0] as usize;
    let mut rows = Vec::with_capacity(n);
    for (line, s) in lines {
        if rows.len() == n {
            return Err(parse_error(line, "more rows than the order"));
        }
        let row = parse_numbers(line, s)?;
        if row.len() != n {
            return Err(parse_error(line, format!("expected {n} entries, found {}", row.len())));
        }
        let row = row
            .into_iter()
            .map(|v| {
                if v == 0 || v as usize > n {
                    Err(parse_error(line, format!("entry {v} outside 1..={n}")))
                } else {
                    Ok(v as usize - 1)
                }
            })
            .collect::<Result<Vec<usize>>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_error(0, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok(rows)
}

fn format_square(rows: &[Vec<usize>]) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| (v + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_cayley(text: &str) -> Result<Quandle> {
    Quandle::from_rows(&parse_square(text)?)
}

pub fn format_cayley(q: &Quandle) -> String {
    format_square(&q.rows())
}

pub fn parse_group(text: &str) -> Result<FiniteGroup> {
    let header = text
        .lines()
        .enumerate()
        .find(|(_, l)| !l.trim().is_empty());
    match header {
        Some((_, l)) if l.trim() == "#group" => {}
        Some((i, _)) => return Err(parse_error(i + 1, "expected a #group header")),
        None => return Err(parse_error(0, "empty group file")),
    }
    FiniteGroup::from_rows(&parse_square(text)?)
}

pub fn format_group(g: &FiniteGroup) -> String {
    format!("#group\n{}", format_square(&g.rows()))
}

pub fn parse_cocycle(text: &str, q: &Quandle) -> Result<Cocycle2> {
    let mut lines = content_lines(text);
    let (l0, header) = lines.next().ok_or_else(|| parse_error(0, "missing header"))?;
    let head = parse_numbers(l0, header)?;
    if head.len() != 2 {
        return Err(parse_error(l0, "header must be \"n m\""));
    }
    let (n, m) = (head[0] as usize, head[1]);
    if n != q.order() {
        return Err(parse_error(l0, format!("cocycle on {n} elements, quandle has {}", q.order())));
    }
    if m == 0 {
        return Err(parse_error(l0, "modulus must be positive"));
    }
    let mut values = Vec::with_capacity(n * n);
    let mut rows = 0;
    for (line, s) in lines {
        let row = parse_numbers(line, s)?;
        if row.len() != n {
            return Err(parse_error(line, format!("expected {n} values, found {}", row.len())));
        }
        if let Some(v) = row.iter().find(|&&v| v >= m) {
            return Err(parse_error(line, format!("value {v} not reduced mod {m}")));
        }
        values.extend(row);
        rows += 1;
    }
    if rows != n {
        return Err(parse_error(0, format!("expected {n} rows, found {rows}")));
    }
    Cocycle2::new(q, m, values)
}

pub fn format_cocycle(phi: &Cocycle2) -> String {
    let mut out = format!("{} {}\n", phi.order(), phi.modulus());
    for row in phi.rows() {
        let line: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_knot_table(text: &str) -> Result<Vec<BraidKnot>> {
    let mut knots = Vec::new();
    for (line, s) in content_lines(text) {
        let fields: Vec<&str> = s.split(';').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(parse_error(line, "expected name;strands;word"));
        }
        let strands: usize = fields[1]
            .parse()
            .map_err(|_| parse_error(line, format!("bad strand count {:?}", fields[1])))?;
        let word = if fields[2].is_empty() {
            Vec::new()
        } else {
            fields[2]
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i32>()
                        .map_err(|_| parse_error(line, format!("bad letter {t:?}")))
                })
                .collect::<Result<Vec<i32>>>()?
        };
        knots.push(parse_braid(fields[0], strands, &word)?);
    }
    Ok(knots)
}

pub fn format_knot_table(knots: &[BraidKnot]) -> String {
    let mut out = String::new();
    for k in knots {
        let word: Vec<String> = k.word().iter().map(i32::to_string).collect();
        let _ = writeln!(out, "{};{};{}", k.name(), k.strands(), word.join(","));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::dihedral;
    use crate::knots::bundled_presentations;

    #[test]
    fn cayley_round_trip() {
        let d5 = dihedral(5).unwrap();
        let text = format_cayley(&d5);
        assert!(text.starts_with("5\n"));
        assert_eq!(parse_cayley(&text).unwrap(), d5);
        let commented = "# dihedral 3\n3\n1 3 2\n\n3 2 1\n2 1 3\n";
        assert_eq!(parse_cayley(commented).unwrap(), dihedral(3).unwrap());
    }

    #[test]
    fn cayley_errors() {
        assert!(matches!(parse_cayley("2\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_cayley("2\n1 3\n2 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_cayley("2\n1 x\n2 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_cayley("2\n1 1\n1 2\n"), Err(Error::AxiomViolation { .. })));
    }

    #[test]
    fn group_round_trip() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let text = format_group(&s3);
        assert_eq!(parse_group(&text).unwrap(), s3);
        assert!(parse_group("1\n1\n").is_err());
    }

    #[test]
    fn cocycle_round_trip() {
        let q = Quandle::trivial(2).unwrap();
        let phi = Cocycle2::new(&q, 4, vec![0, 3, 1, 0]).unwrap();
        let text = format_cocycle(&phi);
        assert_eq!(text, "2 4\n0 3\n1 0\n");
        assert_eq!(parse_cocycle(&text, &q).unwrap(), phi);
        assert!(parse_cocycle("2 4\n0 5\n1 0\n", &q).is_err());
        assert!(matches!(
            parse_cocycle("2 4\n1 0\n0 0\n", &q),
            Err(Error::NotACocycle(_))
        ));
    }

    #[test]
    fn knot_table_round_trip() {
        let knots = bundled_presentations();
        let text = format_knot_table(&knots);
        assert!(text.starts_with("0_1;1;\n3_1;2;1,1,1\n"));
        assert_eq!(parse_knot_table(&text).unwrap(), knots);
        assert!(matches!(
            parse_knot_table("hopf;2;1,1"),
            Err(Error::NotAKnot { .. })
        ));
    }
}
