//! The `.ist` and `.grp` table formats.
//!
//! Both are UTF-8 text. `#` starts a comment that runs to the end of the
//! line. The first non-blank line is the header `n <k>`; it is followed by
//! exactly `k` rows of `k` whitespace-separated entries, row `i` column `j`
//! holding the product `i*j`. `.ist` entries lie in `0..k`; `.grp` entries
//! may also be `-1`, meaning the product is undefined.

use std::fmt::Write as _;

use crate::error::ParseError;

/// Parses a table. With `allow_undefined`, `-1` entries become `None`.
pub(crate) fn parse_table(
    text: &str,
    allow_undefined: bool,
) -> Result<(usize, Vec<Option<usize>>), ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("")))
        .filter(|(_, line)| !line.trim().is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let size = match tokens.as_slice() {
        ["n", k] => k
            .parse::<usize>()
            .map_err(|_| ParseError::BadHeader { line: header_line })?,
        _ => return Err(ParseError::BadHeader { line: header_line }),
    };
    if size == 0 {
        return Err(ParseError::ZeroSize { line: header_line });
    }

    let mut table = Vec::with_capacity(size * size);
    for row in 0..size {
        let (line, content) = lines.next().ok_or(ParseError::MissingRows {
            expected: size,
            found: row,
        })?;
        let entries: Vec<&str> = content.split_whitespace().collect();
        if entries.len() != size {
            return Err(ParseError::RowLength {
                line,
                row,
                expected: size,
                found: entries.len(),
            });
        }
        for (col, token) in entries.into_iter().enumerate() {
            let value: i64 = token.parse().map_err(|_| ParseError::BadToken {
                line,
                token: token.to_string(),
            })?;
            let entry = if value == -1 && allow_undefined {
                None
            } else if (0..size as i64).contains(&value) {
                Some(value as usize)
            } else {
                return Err(ParseError::OutOfRange {
                    line,
                    row,
                    col,
                    value,
                });
            };
            table.push(entry);
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::TrailingData { line });
    }
    Ok((size, table))
}

/// Writes a table; `None` entries are written as `-1`.
pub(crate) fn write_table(size: usize, entry: impl Fn(usize, usize) -> Option<usize>) -> String {
    let width = if size > 1 { (size - 1).to_string().len() } else { 1 };
    let width = width.max(if (0..size).any(|i| (0..size).any(|j| entry(i, j).is_none())) {
        2
    } else {
        1
    });
    let mut out = format!("n {size}\n");
    for i in 0..size {
        for j in 0..size {
            if j > 0 {
                out.push(' ');
            }
            match entry(i, j) {
                Some(v) => write!(out, "{v:>width$}").unwrap(),
                None => write!(out, "{:>width$}", -1).unwrap(),
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blank_lines() {
        let text = "# chain\n\nn 2 # two elements\n0 0\n0 1\n# done\n";
        let (k, t) = parse_table(text, false).unwrap();
        assert_eq!(k, 2);
        assert_eq!(t, vec![Some(0), Some(0), Some(0), Some(1)]);
    }

    #[test]
    fn rejects_malformed_inputs() {
        assert_eq!(parse_table("", false), Err(ParseError::Empty));
        assert_eq!(parse_table("# only\n", false), Err(ParseError::Empty));
        assert_eq!(parse_table("m 1\n0\n", false), Err(ParseError::BadHeader { line: 1 }));
        assert_eq!(parse_table("n 0\n", false), Err(ParseError::ZeroSize { line: 1 }));
        assert!(matches!(parse_table("n 2\n0 0\n", false), Err(ParseError::MissingRows { .. })));
        assert!(matches!(parse_table("n 2\n0 0 0\n0 0\n", false), Err(ParseError::RowLength { row: 0, .. })));
        assert!(matches!(parse_table("n 1\nx\n", false), Err(ParseError::BadToken { .. })));
        assert!(matches!(parse_table("n 1\n1\n", false), Err(ParseError::OutOfRange { .. })));
        assert!(matches!(parse_table("n 1\n-1\n", false), Err(ParseError::OutOfRange { .. })));
        assert!(matches!(parse_table("n 1\n0\n0\n", false), Err(ParseError::TrailingData { line: 3 })));
    }

    #[test]
    fn undefined_entries_in_groupoid_tables() {
        let (_, t) = parse_table("n 2\n0 -1\n-1 1\n", true).unwrap();
        assert_eq!(t, vec![Some(0), None, None, Some(1)]);
    }

    #[test]
    fn write_then_parse() {
        let entries = [[Some(0), None], [None, Some(1)]];
        let text = write_table(2, |i, j| entries[i][j]);
        assert_eq!(text, "n 2\n 0 -1\n-1  1\n");
        let (_, t) = parse_table(&text, true).unwrap();
        assert_eq!(t, vec![Some(0), None, None, Some(1)]);
    }
}
