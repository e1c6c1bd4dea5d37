//! Conflict-free colorings of arbitrary graphs by halving a proper vertex
//! coloring.
//!
//! Given a proper coloring with `k` classes, let `t = ceil(log2 k)`. Classes
//! `1..=2^(t-1)` form side `A`, the rest side `B`. Edges between `A` and `B`
//! form a bipartite layer that gets a partial 2-coloring in colors
//! `2t-1, 2t`; edges inside `A` or inside `B` are colored recursively with
//! colors below `2t-1`. Since each layer owns its colors, a witness found
//! inside a layer stays unique in the whole graph.

use thiserror::Error;

use crate::bipartite::{bipartite_scf_coloring, extend_to_cf, BipartiteError};
use crate::coloring::{Color, EdgeColoring};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneralError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("vertex coloring is not proper on edge {0}")]
    ImproperColoring(usize),
    #[error("vertex {0} has a class outside 1..=k")]
    InvalidClass(usize),
    #[error("{classes} class labels for {vertices} vertices")]
    ClassCountMismatch { classes: usize, vertices: usize },
    #[error("cycle length {0} is below 3")]
    CycleTooShort(usize),
    #[error(transparent)]
    Bipartite(#[from] BipartiteError),
}

/// A proper vertex coloring with classes `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    k: u32,
    class_of: Vec<u32>,
}

impl VertexColoring {
    /// Validates that classes lie in `1..=k` and that `g`'s edges join
    /// different classes.
    pub fn new(g: &Graph, k: u32, class_of: Vec<u32>) -> Result<Self, GeneralError> {
        if class_of.len() != g.vertex_count() {
            return Err(GeneralError::ClassCountMismatch {
                classes: class_of.len(),
                vertices: g.vertex_count(),
            });
        }
        if let Some(v) = class_of.iter().position(|&c| c == 0 || c > k) {
            return Err(GeneralError::InvalidClass(v));
        }
        if let Some(e) = g.edges().iter().position(|&(u, v)| class_of[u] == class_of[v]) {
            return Err(GeneralError::ImproperColoring(e));
        }
        Ok(VertexColoring { k, class_of })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn class_of(&self, v: usize) -> u32 {
        self.class_of[v]
    }

    pub fn classes(&self) -> &[u32] {
        &self.class_of
    }
}

/// DSATUR: repeatedly color the vertex seeing the most distinct neighbor
/// classes (ties: larger degree, then smaller id) with the smallest class
/// not present among its neighbors.
pub fn greedy_vertex_coloring(g: &Graph) -> VertexColoring {
    let n = g.vertex_count();
    let mut class_of = vec![0u32; n];
    // seen[v] holds the distinct neighbor classes of v, sorted.
    let mut seen: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut k = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| class_of[v] == 0)
            .max_by(|&a, &b| {
                (seen[a].len(), g.degree(a))
                    .cmp(&(seen[b].len(), g.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        let mut c = 1;
        for &s in &seen[v] {
            if s == c {
                c += 1;
            } else if s > c {
                break;
            }
        }
        class_of[v] = c;
        k = k.max(c);
        for w in g.neighbors(v) {
            if let Err(pos) = seen[w].binary_search(&c) {
                seen[w].insert(pos, c);
            }
        }
    }
    VertexColoring { k, class_of }
}

/// `ceil(log2 k)` for `k >= 1`.
pub fn ceil_log2(k: u32) -> u32 {
    assert!(k >= 1);
    u32::BITS - (k - 1).leading_zeros()
}

/// Largest color count the recursive partial coloring may use for a proper
/// `k`-coloring: `2 * ceil(log2 k)`.
pub fn scf_bound(k: u32) -> u32 {
    2 * ceil_log2(k.max(1))
}

/// Partial coloring satisfying every edge of `g`, using colors from
/// `1..=2*ceil(log2 k)` where `k = vc.k()`.
pub fn recursive_scf_coloring(g: &Graph, vc: &VertexColoring) -> Result<EdgeColoring, GeneralError> {
    if let Some(v) = g.first_isolated_vertex() {
        return Err(GeneralError::IsolatedVertex(v));
    }
    let vc = VertexColoring::new(g, vc.k, vc.class_of.clone())?;
    let mut out = EdgeColoring::uncolored(g.edge_count(), scf_bound(vc.k));
    color_layers(g, &vc.class_of, vc.k, &mut out)?;
    Ok(out)
}

/// Colors `g` into `out` (same edge ids). `g` has no isolated vertices and
/// `classes` is proper with values in `1..=k`.
fn color_layers(g: &Graph, classes: &[u32], k: u32, out: &mut EdgeColoring) -> Result<(), GeneralError> {
    if g.edge_count() == 0 {
        return Ok(());
    }
    let t = ceil_log2(k);
    if t <= 1 {
        let b = g.bipartition().bipartite().ok_or(BipartiteError::NotBipartite)?;
        let (partial, _) = bipartite_scf_coloring(g, &b)?;
        for (e, c) in partial.assignment().iter().enumerate() {
            out.set(e, *c);
        }
        return Ok(());
    }
    let half = 1u32 << (t - 1);
    let in_a = |v: usize| classes[v] <= half;
    let (cross, inner): (Vec<usize>, Vec<usize>) =
        (0..g.edge_count()).partition(|&e| {
            let (u, v) = g.endpoints(e);
            in_a(u) != in_a(v)
        });

    if !cross.is_empty() {
        let (layer, _) = g.edge_subgraph(&cross);
        let b = layer.bipartition().bipartite().ok_or(BipartiteError::NotBipartite)?;
        let (partial, _) = bipartite_scf_coloring(&layer, &b)?;
        let offset: Color = 2 * t - 2;
        for (i, &e) in cross.iter().enumerate() {
            out.set(e, partial.get(i).map(|c| c + offset));
        }
    }

    if !inner.is_empty() {
        let (rest, old) = g.edge_subgraph(&inner);
        let renumbered: Vec<u32> = old
            .iter()
            .map(|&v| if classes[v] <= half { classes[v] } else { classes[v] - half })
            .collect();
        let mut sub = EdgeColoring::uncolored(rest.edge_count(), 2 * t - 2);
        color_layers(&rest, &renumbered, half, &mut sub)?;
        for (i, &e) in inner.iter().enumerate() {
            out.set(e, sub.get(i));
        }
    }
    Ok(())
}

/// Total conflict-free coloring with at most `2*ceil(log2 k)+1` colors, `k`
/// being the DSATUR class count.
pub fn general_cf_coloring(g: &Graph) -> Result<EdgeColoring, GeneralError> {
    if let Some(v) = g.first_isolated_vertex() {
        return Err(GeneralError::IsolatedVertex(v));
    }
    let vc = greedy_vertex_coloring(g);
    let partial = recursive_scf_coloring(g, &vc)?;
    Ok(extend_to_cf(g, &partial)?)
}

/// Alternating 1, 2 around the cycle `generators::cycle(n)`. No three
/// cyclically consecutive edges share a color, so every edge sees a
/// singleton color among itself and its two neighbors.
pub fn cycle_cf_coloring(n: usize) -> Result<EdgeColoring, GeneralError> {
    if n < 3 {
        return Err(GeneralError::CycleTooShort(n));
    }
    let colors: Vec<Color> = (0..n).map(|i| if i % 2 == 0 { 1 } else { 2 }).collect();
    Ok(EdgeColoring::total(&colors).expect("colors are 1 and 2"))
}
