//! Partial edge colorings and the conflict-free satisfaction check.
//!
//! An edge `uv` is satisfied when some color occurs exactly once among the
//! colored edges incident to `u` or `v` (the edge itself included).
//! Uncolored edges never count toward any color.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {coloring} entries but the graph has {graph} edges")]
    SizeMismatch { coloring: usize, graph: usize },
    #[error("edge {edge} has color {color}, outside 1..={k}")]
    ColorOutOfRange { edge: usize, color: Color, k: Color },
    #[error("edge id {0} is out of range")]
    EdgeOutOfRange(usize),
}

/// Per-edge assignment of colors `1..=k`, or `None` for uncolored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    k: Color,
    assignment: Vec<Option<Color>>,
}

impl EdgeColoring {
    pub fn new(k: Color, assignment: Vec<Option<Color>>) -> Result<Self, ColoringError> {
        for (edge, c) in assignment.iter().enumerate() {
            if let Some(color) = *c {
                if color == 0 || color > k {
                    return Err(ColoringError::ColorOutOfRange { edge, color, k });
                }
            }
        }
        Ok(EdgeColoring { k, assignment })
    }

    /// `m` uncolored edges with palette `1..=k`.
    pub fn uncolored(m: usize, k: Color) -> Self {
        EdgeColoring {
            k,
            assignment: vec![None; m],
        }
    }

    /// Total coloring from plain colors; the palette is the largest color.
    pub fn total(colors: &[Color]) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Self::new(k, colors.iter().map(|&c| Some(c)).collect())
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn get(&self, e: usize) -> Option<Color> {
        self.assignment[e]
    }

    pub fn assignment(&self) -> &[Option<Color>] {
        &self.assignment
    }

    /// Colors edge `e`, widening the palette if needed.
    pub fn set(&mut self, e: usize, color: Option<Color>) {
        if let Some(c) = color {
            assert!(c >= 1, "colors start at 1");
            self.k = self.k.max(c);
        }
        self.assignment[e] = color;
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn colored_count(&self) -> usize {
        self.assignment.iter().filter(|c| c.is_some()).count()
    }

    /// Number of distinct colors actually assigned.
    pub fn colors_used(&self) -> usize {
        self.distinct_colors().len()
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.assignment.iter().flatten().copied().collect()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.assignment.iter().flatten().copied().max()
    }

    /// Applies `f` to every assigned color.
    pub fn relabel(&self, f: impl Fn(Color) -> Color) -> EdgeColoring {
        let assignment: Vec<_> = self.assignment.iter().map(|c| c.map(&f)).collect();
        let k = assignment.iter().flatten().copied().max().unwrap_or(0).max(self.k);
        EdgeColoring { k, assignment }
    }

    fn check_size(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.assignment.len() != g.edge_count() {
            return Err(ColoringError::SizeMismatch {
                coloring: self.assignment.len(),
                graph: g.edge_count(),
            });
        }
        Ok(())
    }
}

/// Result of [`verify_cf`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatisfactionReport {
    /// Unsatisfied edge ids, ascending.
    pub unsatisfied: Vec<usize>,
    /// Smallest color occurring exactly once around each edge; `None` exactly
    /// for the unsatisfied edges.
    pub witness: Vec<Option<Color>>,
}

impl SatisfactionReport {
    pub fn all_satisfied(&self) -> bool {
        self.unsatisfied.is_empty()
    }
}

/// Edge ids incident to either endpoint of `e`, including `e`, ascending.
pub fn closed_neighborhood(g: &Graph, e: usize) -> Result<Vec<usize>, ColoringError> {
    if e >= g.edge_count() {
        return Err(ColoringError::EdgeOutOfRange(e));
    }
    let (u, v) = g.endpoints(e);
    let mut out: Vec<usize> = g
        .incident(u)
        .iter()
        .chain(g.incident(v))
        .map(|&(_, f)| f)
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Whether edge `e` is satisfied under the (possibly partial) coloring `c`.
pub fn is_satisfied(g: &Graph, c: &EdgeColoring, e: usize) -> Result<bool, ColoringError> {
    c.check_size(g)?;
    let hood = closed_neighborhood(g, e)?;
    let mut colors: Vec<Color> = hood.iter().filter_map(|&f| c.get(f)).collect();
    colors.sort_unstable();
    Ok(colors
        .chunk_by(|a, b| a == b)
        .any(|run| run.len() == 1))
}

/// Per-vertex `(color, multiplicity)` runs over the colored incident edges.
fn vertex_tables(g: &Graph, c: &EdgeColoring) -> Vec<Vec<(Color, u32)>> {
    (0..g.vertex_count())
        .map(|v| {
            let mut colors: Vec<Color> = g.incident(v).iter().filter_map(|&(_, e)| c.get(e)).collect();
            colors.sort_unstable();
            colors
                .chunk_by(|a, b| a == b)
                .map(|run| (run[0], run.len() as u32))
                .collect()
        })
        .collect()
}

/// Smallest color with multiplicity one in the union of two endpoint tables,
/// where the shared edge's color `own` is counted in both tables.
fn unique_color(a: &[(Color, u32)], b: &[(Color, u32)], own: Option<Color>) -> Option<Color> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (color, mut count) = match (a.get(i), b.get(j)) {
            (Some(&(ca, na)), Some(&(cb, nb))) if ca == cb => {
                i += 1;
                j += 1;
                (ca, na + nb)
            }
            (Some(&(ca, na)), Some(&(cb, _))) if ca < cb => {
                i += 1;
                (ca, na)
            }
            (Some(&(ca, na)), None) => {
                i += 1;
                (ca, na)
            }
            (_, Some(&(cb, nb))) => {
                j += 1;
                (cb, nb)
            }
            (None, None) => unreachable!(),
        };
        if own == Some(color) {
            count -= 1;
        }
        if count == 1 {
            return Some(color);
        }
    }
    None
}

/// Checks every edge, in `O(sum over edges of deg(u) + deg(v))`.
pub fn verify_cf(g: &Graph, c: &EdgeColoring) -> Result<SatisfactionReport, ColoringError> {
    c.check_size(g)?;
    let tables = vertex_tables(g, c);
    let mut unsatisfied = Vec::new();
    let witness = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            let w = unique_color(&tables[u], &tables[v], c.get(e));
            if w.is_none() {
                unsatisfied.push(e);
            }
            w
        })
        .collect();
    Ok(SatisfactionReport {
        unsatisfied,
        witness,
    })
}
