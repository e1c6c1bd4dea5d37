//! Plain-text file formats.
//!
//! * Edge list: `n m`, then `m` lines `u v`. Lines starting with `#` and
//!   blank lines are skipped.
//! * Coloring: `m k`, then `m` lines `edge_id color`, ids `0..m` in order,
//!   color `0` meaning uncolored.
//! * Edge set: ascending edge ids on one line, separated by spaces.
//! * DOT: undirected graph with color labels on edges.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("header announces {expected} entries, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("line {line}: edge id {found}, expected {expected}")]
    EdgeOrder {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: color {color} exceeds k = {k}")]
    ColorOutOfRange { line: usize, color: Color, k: Color },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize), FormatError> {
    let syntax = |msg: &str| FormatError::Syntax {
        line,
        msg: msg.to_string(),
    };
    let mut parts = s.split_whitespace();
    let mut next = || -> Result<usize, FormatError> {
        parts
            .next()
            .ok_or_else(|| syntax("expected two integers"))?
            .parse()
            .map_err(|_| syntax("not a non-negative integer"))
    };
    let a = next()?;
    let b = next()?;
    if parts.next().is_some() {
        return Err(syntax("trailing tokens"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let (n, m) = two_numbers(line, header)?;
    let edges = lines
        .map(|(line, s)| two_numbers(line, s))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(FormatError::CountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let (m, k) = two_numbers(line, header)?;
    let k = Color::try_from(k).map_err(|_| FormatError::Syntax {
        line,
        msg: "k too large".into(),
    })?;
    let mut assignment = Vec::with_capacity(m);
    for (line, s) in lines {
        let (id, color) = two_numbers(line, s)?;
        if id != assignment.len() {
            return Err(FormatError::EdgeOrder {
                line,
                expected: assignment.len(),
                found: id,
            });
        }
        let color = Color::try_from(color).unwrap_or(Color::MAX);
        if color > k {
            return Err(FormatError::ColorOutOfRange { line, color, k });
        }
        assignment.push((color > 0).then_some(color));
    }
    if assignment.len() != m {
        return Err(FormatError::CountMismatch {
            expected: m,
            found: assignment.len(),
        });
    }
    Ok(EdgeColoring::new(k, assignment).expect("colors checked against k"))
}

pub fn write_coloring(c: &EdgeColoring) -> String {
    let mut out = format!("{} {}\n", c.len(), c.k());
    for (e, color) in c.assignment().iter().enumerate() {
        writeln!(out, "{e} {}", color.unwrap_or(0)).unwrap();
    }
    out
}

pub fn parse_edge_set(text: &str) -> Result<Vec<usize>, FormatError> {
    let mut out = Vec::new();
    for (line, s) in content_lines(text) {
        for tok in s.split_whitespace() {
            out.push(tok.parse().map_err(|_| FormatError::Syntax {
                line,
                msg: format!("bad edge id {tok:?}"),
            })?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn write_edge_set(f: &[usize]) -> String {
    let mut sorted = f.to_vec();
    sorted.sort_unstable();
    let ids: Vec<String> = sorted.iter().map(usize::to_string).collect();
    format!("{}\n", ids.join(" "))
}

const PENS: [&str; 3] = ["red", "blue", "darkgreen"];

/// DOT with each edge labeled by its color. Colors 1 to 3 also get a pen
/// color; uncolored edges are dashed.
pub fn write_dot(g: &Graph, c: &EdgeColoring) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match c.get(e) {
            Some(col) if (col as usize) <= PENS.len() => {
                let pen = PENS[col as usize - 1];
                writeln!(out, "  {u} -- {v} [label=\"{col}\", color={pen}];").unwrap();
            }
            Some(col) => writeln!(out, "  {u} -- {v} [label=\"{col}\"];").unwrap(),
            None => writeln!(out, "  {u} -- {v} [style=dashed];").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
