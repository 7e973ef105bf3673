//! `.cay` and `.perm` text formats.
//!
//! A `.cay` file holds the order `n` on its first line followed by `n` rows of
//! `n` whitespace-separated 0-based indices. A `.perm` file holds the degree
//! `d` on its first line; every further non-empty line is one generator given
//! as its `d` images.

use std::fmt::Write;

use super::perm::{closure_from_permutations, Permutation};
use super::{validate_table, GroupError, GroupTable};

fn parse_usize(tok: &str, line: usize) -> Result<usize, GroupError> {
    tok.parse()
        .map_err(|_| GroupError::Malformed(format!("line {}: '{tok}' is not a non-negative integer", line + 1)))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty())
}

/// Parses a `.cay` file and validates the table.
pub fn parse_cay(text: &str) -> Result<GroupTable, GroupError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| GroupError::Malformed("empty file".into()))?;
    let n = parse_usize(header.trim(), hl)?;
    let mut rows = Vec::with_capacity(n);
    for (ln, line) in lines {
        let row = line
            .split_whitespace()
            .map(|t| parse_usize(t, ln).map(|v| v as u32))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.len() != n {
        return Err(GroupError::Malformed(format!("expected {n} rows, found {}", rows.len())));
    }
    validate_table(&rows)
}

pub fn write_cay(group: &GroupTable) -> String {
    let n = group.order();
    let mut out = String::with_capacity(n * n * 3);
    writeln!(out, "{n}").unwrap();
    for a in 0..n {
        let row = group.row(a);
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parses a `.perm` file and closes the generated permutation group.
pub fn parse_perm(text: &str) -> Result<GroupTable, GroupError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| GroupError::Malformed("empty file".into()))?;
    let d = parse_usize(header.trim(), hl)?;
    let mut gens = Vec::new();
    for (ln, line) in lines {
        let images = line
            .split_whitespace()
            .map(|t| parse_usize(t, ln).map(|v| v as u32))
            .collect::<Result<Vec<_>, _>>()?;
        if images.len() != d {
            return Err(GroupError::Malformed(format!(
                "line {}: expected {d} images, found {}",
                ln + 1,
                images.len()
            )));
        }
        gens.push(Permutation::from_images(images)?);
    }
    closure_from_permutations(d, &gens)
}
