//! The NOP v1 text format for operation tables.
//!
//! ```text
//! NOP 1
//! k=<k> n=<n>
//! <k^n integers in 1..k, whitespace/newline separated, in code order>
//! ```
//!
//! Lines beginning with `#` are comments and ignored.

use crate::chain::FiniteChain;
use crate::error::{Error, Result};
use crate::table::{table_size, OpTable};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses NOP v1 text into a table.
pub fn parse(input: &str) -> Result<OpTable> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'));

    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "empty input, expected `NOP 1` header"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("NOP") {
        return Err(parse_err(line_no, 1, "expected `NOP 1` header"));
    }
    match parts.next() {
        Some("1") => {}
        Some(v) => {
            return Err(parse_err(
                line_no,
                1,
                format!("unknown NOP version `{v}`, expected 1"),
            ))
        }
        None => return Err(parse_err(line_no, 1, "missing NOP version")),
    }
    if parts.next().is_some() {
        return Err(parse_err(line_no, 1, "trailing tokens after NOP header"));
    }

    let (line_no, dims) = lines
        .next()
        .ok_or_else(|| parse_err(line_no + 1, 1, "expected `k=<k> n=<n>` line"))?;
    let (k, n) = parse_dims(line_no, dims)?;
    let chain = FiniteChain::new(k)
        .map_err(|_| parse_err(line_no, 1, "k must be at least 1"))?;
    let expected = table_size(chain, n)?;

    let mut values = Vec::with_capacity(expected);
    for (line_no, line) in lines {
        let mut column = 1usize;
        for token in line.split_whitespace() {
            // column of the token start within the raw line
            column = line[column - 1..]
                .find(token)
                .map(|off| column + off)
                .unwrap_or(column);
            let v: u32 = token.parse().map_err(|_| {
                parse_err(line_no, column, format!("expected an integer, got `{token}`"))
            })?;
            if !chain.contains(v) {
                return Err(parse_err(
                    line_no,
                    column,
                    format!("value {v} out of range 1..={k}"),
                ));
            }
            if values.len() == expected {
                return Err(parse_err(
                    line_no,
                    column,
                    format!("too many values, expected {expected}"),
                ));
            }
            values.push(v);
            column += token.len();
        }
    }
    if values.len() != expected {
        return Err(parse_err(
            input.lines().count().max(1),
            1,
            format!("expected {expected} values, got {}", values.len()),
        ));
    }
    OpTable::new(chain, n, values)
}

fn parse_dims(line_no: usize, line: &str) -> Result<(u32, usize)> {
    let mut k = None;
    let mut n = None;
    for part in line.split_whitespace() {
        if let Some(v) = part.strip_prefix("k=") {
            k = Some(v.parse::<u32>().map_err(|_| {
                parse_err(line_no, 1, format!("bad k value `{v}`"))
            })?);
        } else if let Some(v) = part.strip_prefix("n=") {
            n = Some(v.parse::<usize>().map_err(|_| {
                parse_err(line_no, 1, format!("bad n value `{v}`"))
            })?);
        } else {
            return Err(parse_err(
                line_no,
                1,
                format!("unexpected token `{part}` on dimensions line"),
            ));
        }
    }
    match (k, n) {
        (Some(k), Some(n)) if n >= 1 => Ok((k, n)),
        (Some(_), Some(_)) => Err(parse_err(line_no, 1, "n must be at least 1")),
        _ => Err(parse_err(line_no, 1, "expected `k=<k> n=<n>`")),
    }
}

/// Serializes a table as NOP v1, values chunked `k` per line so binary
/// tables read as row-major matrices (first argument = row).
pub fn write(op: &OpTable) -> String {
    let k = op.chain().k() as usize;
    let mut out = String::new();
    out.push_str("NOP 1\n");
    out.push_str(&format!("k={} n={}\n", op.chain().k(), op.arity()));
    for row in op.values().chunks(k) {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let chain = FiniteChain::new(2).unwrap();
        let op = OpTable::new(chain, 2, vec![1, 2, 2, 2]).unwrap();
        let text = write(&op);
        assert_eq!(text, "NOP 1\nk=2 n=2\n1 2\n2 2\n");
        assert_eq!(parse(&text).unwrap(), op);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let text = "# binary max on L_2\nNOP 1\n# dims\nk=2 n=2\n\n1 2\n# row two\n2 2\n";
        let op = parse(text).unwrap();
        assert_eq!(op.values(), &[1, 2, 2, 2]);
    }

    #[test]
    fn rejects_unknown_version() {
        let err = parse("NOP 2\nk=2 n=2\n1 2 2 2\n").unwrap_err();
        assert!(err.to_string().contains("unknown NOP version"));
    }

    #[test]
    fn rejects_wrong_counts() {
        assert!(parse("NOP 1\nk=2 n=2\n1 2 2\n").is_err());
        assert!(parse("NOP 1\nk=2 n=2\n1 2 2 2 1\n").is_err());
    }

    #[test]
    fn rejects_out_of_range_with_position() {
        let err = parse("NOP 1\nk=2 n=2\n1 2\n3 2\n").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (4, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_truncation() {
        assert!(parse("NOP 1\nk=2 n=2\n").is_err());
        assert!(parse("NOP 1\n").is_err());
        assert!(parse("").is_err());
    }
}
