//! Plain-text edge lists.
//!
//! Header line `n m`, then `m` lines `u v` with 0-based ids. Parallel edges
//! are repeated lines and a self-loop is `u u`. Blank lines and lines
//! starting with `#` are skipped.

use std::io::{BufRead, Write};

use super::MultiGraph;
use crate::error::{Error, Result};

pub fn write_edge_list<W: Write>(g: &MultiGraph, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn read_edge_list<R: BufRead>(input: R) -> Result<MultiGraph> {
    let Rows { n, rows } = read_owned_rows(input, 2)?;
    let edges: Vec<(usize, usize)> = rows
        .iter()
        .map(|(line, f)| Ok((parse_at(&f[0], *line)?, parse_at(&f[1], *line)?)))
        .collect::<Result<_>>()?;
    MultiGraph::from_edges(n, &edges)
}

pub(crate) struct Rows {
    pub n: usize,
    /// `(line number, fields)` for each edge row.
    pub rows: Vec<(usize, Vec<String>)>,
}

pub(crate) fn read_owned_rows<R: BufRead>(input: R, width: usize) -> Result<Rows> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| match l {
            Ok(s) => {
                let t = s.trim();
                !t.is_empty() && !t.starts_with('#')
            }
            Err(_) => true,
        });
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n m`".into(),
    })?;
    let header = header?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line: hline,
            msg: format!("expected header `n m`, got {header:?}"),
        });
    }
    let n = parse_at(fields[0], hline)?;
    let m: usize = parse_at(fields[1], hline)?;
    let mut rows = Vec::with_capacity(m);
    for (line, text) in lines {
        let text = text?;
        let f: Vec<String> = text.split_whitespace().map(str::to_owned).collect();
        if f.len() != width {
            return Err(Error::Parse {
                line,
                msg: format!("expected {width} fields, got {}", f.len()),
            });
        }
        rows.push((line, f));
    }
    if rows.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header promises {m} edges, found {}", rows.len()),
        });
    }
    Ok(Rows { n, rows })
}

pub(crate) fn parse_at<T: std::str::FromStr>(field: &str, line: usize) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    field.parse().map_err(|e: T::Err| Error::Parse {
        line,
        msg: format!("{field:?}: {e}"),
    })
}
