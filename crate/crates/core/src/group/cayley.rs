//! Cayley-table text ingestion.
//!
//! Format: first line `N`, then `N` lines of `N` whitespace-separated
//! element ids; row `g`, column `h` holds `g*h`. Blank lines and lines
//! starting with `#` are ignored.

use std::path::Path;
use std::sync::Arc;

use super::GroupSpec;
use crate::error::{CayleyViolation, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleySource {
    pub label: String,
    pub table: Arc<Vec<Vec<usize>>>,
}

pub fn parse_cayley_table(text: &str, label: &str) -> Result<GroupSpec> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first_line, header) = lines.next().ok_or(Error::CayleyParse {
        line: 1,
        message: "empty input".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::CayleyParse {
        line: first_line,
        message: format!("expected the group order, found {header:?}"),
    })?;
    if n == 0 {
        return Err(Error::CayleyParse {
            line: first_line,
            message: "group order must be positive".into(),
        });
    }

    let mut rows = Vec::with_capacity(n);
    for (line, text) in lines {
        if rows.len() == n {
            return Err(Error::CayleyParse {
                line,
                message: format!("more than {n} rows"),
            });
        }
        let row = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::CayleyParse {
                    line,
                    message: format!("not an element id: {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::CayleyParse {
                line,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::CayleyParse {
            line: text.lines().count(),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }

    let table = validate_table(rows)?;
    Ok(GroupSpec::Cayley(CayleySource {
        label: label.to_string(),
        table: Arc::new(table),
    }))
}

pub fn load_cayley_file(path: &Path) -> Result<GroupSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_cayley_table(&text, &path.display().to_string())
}

pub fn format_cayley_table(rows: &[Vec<usize>]) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Checks the group axioms and relabels so that element 0 is the identity.
pub(crate) fn validate_table(mut rows: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let n = rows.len();
    let invalid = |v| Err(Error::CayleyInvalid(v));

    for (row, cells) in rows.iter().enumerate() {
        if cells.len() != n {
            return Err(Error::CayleyParse {
                line: row + 2,
                message: format!("expected {n} entries, found {}", cells.len()),
            });
        }
        for (col, &value) in cells.iter().enumerate() {
            if value >= n {
                return invalid(CayleyViolation::OutOfRange { row, col, value });
            }
        }
    }

    // Latin square: every row and column is a permutation.
    for a in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for b in 0..n {
            if std::mem::replace(&mut seen_row[rows[a][b]], true) {
                return invalid(CayleyViolation::RepeatedEntry { row: a, col: b });
            }
            if std::mem::replace(&mut seen_col[rows[b][a]], true) {
                return invalid(CayleyViolation::RepeatedEntry { row: b, col: a });
            }
        }
    }

    let Some(e) = (0..n).find(|&e| (0..n).all(|g| rows[e][g] == g && rows[g][e] == g)) else {
        return invalid(CayleyViolation::NoIdentity);
    };

    if e != 0 {
        let swap = |x: usize| match x {
            0 => e,
            x if x == e => 0,
            x => x,
        };
        let old = rows.clone();
        for a in 0..n {
            for b in 0..n {
                rows[swap(a)][swap(b)] = swap(old[a][b]);
            }
        }
    }

    check_associative(&rows)?;
    Ok(rows)
}

/// Light's test: associativity only needs checking at the elements of a
/// generating set, since the set of "associative" middle elements is closed
/// under the product.
fn check_associative(rows: &[Vec<usize>]) -> Result<()> {
    let n = rows.len();
    let mut in_closure = vec![false; n];
    let mut closure = Vec::with_capacity(n);
    let mut generators = Vec::new();

    in_closure[0] = true;
    closure.push(0);
    for g in 0..n {
        if in_closure[g] {
            continue;
        }
        generators.push(g);
        let mut work = vec![g];
        in_closure[g] = true;
        closure.push(g);
        while let Some(x) = work.pop() {
            let mut i = 0;
            while i < closure.len() {
                let y = closure[i];
                for z in [rows[x][y], rows[y][x]] {
                    if !in_closure[z] {
                        in_closure[z] = true;
                        closure.push(z);
                        work.push(z);
                    }
                }
                i += 1;
            }
        }
    }

    for &b in &generators {
        for a in 0..n {
            let ab = rows[a][b];
            for c in 0..n {
                if rows[ab][c] != rows[a][rows[b][c]] {
                    return Err(Error::CayleyInvalid(CayleyViolation::NonAssociative {
                        a,
                        b,
                        c,
                    }));
                }
            }
        }
    }
    Ok(())
}
