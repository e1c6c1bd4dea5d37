//! Conflict-free colorings of bipartite graphs with at most three colors.
//!
//! The construction picks a minimal set `D ⊆ X` dominating `Y`, matches each
//! `x ∈ D` to one of its private neighbors (color 1), and gives every
//! unmatched `y ∈ Y` one edge of color 2 toward `D`. All other edges stay
//! uncolored. Every edge of the graph is then satisfied, and painting the
//! uncolored edges with a third color yields a total conflict-free coloring.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coloring::{verify_cf, Color, ColoringError, EdgeColoring};
use crate::graph::{Bipartition, Graph, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("vertex {0} on side Y has no neighbor and cannot be dominated")]
    IsolatedYVertex(usize),
    #[error("partial coloring leaves edge {0} unsatisfied")]
    PartialNotSatisfying(usize),
    #[error("extended coloring leaves edge {0} unsatisfied")]
    ExtensionUnsatisfied(usize),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// A minimal `Y`-dominating set with its private neighbors and a matching
/// of `D` into those private neighbors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DominationCertificate {
    /// The dominating set, ascending.
    pub dominators: Vec<usize>,
    /// Private neighbors of each dominator, ascending.
    pub private: BTreeMap<usize, Vec<usize>>,
    /// Matching edge ids, ascending.
    pub matching: Vec<usize>,
}

impl fmt::Display for DominationCertificate {
    /// Golden-file dump: `D:` line, one `P x:` line per dominator, `M:` line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D:")?;
        for x in &self.dominators {
            write!(f, " {x}")?;
        }
        writeln!(f)?;
        for (x, ys) in &self.private {
            write!(f, "P {x}:")?;
            for y in ys {
                write!(f, " {y}")?;
            }
            writeln!(f)?;
        }
        write!(f, "M:")?;
        for e in &self.matching {
            write!(f, " {e}")?;
        }
        writeln!(f)
    }
}

fn check_sides(g: &Graph, b: &Bipartition) -> Result<(), BipartiteError> {
    if b.sides().len() != g.vertex_count()
        || g.edges().iter().any(|&(u, v)| b.side(u) == b.side(v))
    {
        return Err(BipartiteError::NotBipartite);
    }
    Ok(())
}

/// Number of `D`-neighbors of every vertex, for membership mask `in_d`.
fn cover_counts(g: &Graph, in_d: &[bool]) -> Vec<usize> {
    (0..g.vertex_count())
        .map(|y| g.neighbors(y).filter(|&x| in_d[x]).count())
        .collect()
}

/// Prunes `X` down to a minimal `Y`-dominating set.
///
/// Starts from every `X` vertex with a neighbor and, in ascending id order,
/// drops a vertex whenever the rest still dominates `Y`. Passes repeat until
/// one removes nothing.
pub fn minimal_y_dominating_set(
    g: &Graph,
    b: &Bipartition,
) -> Result<DominationCertificate, BipartiteError> {
    check_sides(g, b)?;
    if let Some(y) = b.vertices_on(Side::Y).find(|&y| g.degree(y) == 0) {
        return Err(BipartiteError::IsolatedYVertex(y));
    }
    let n = g.vertex_count();
    let mut in_d: Vec<bool> = (0..n)
        .map(|v| b.side(v) == Side::X && g.degree(v) > 0)
        .collect();
    let mut cover = cover_counts(g, &in_d);
    loop {
        let mut removed = false;
        for (x, member) in in_d.iter_mut().enumerate() {
            if *member && g.neighbors(x).all(|y| cover[y] >= 2) {
                *member = false;
                for y in g.neighbors(x) {
                    cover[y] -= 1;
                }
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }

    let dominators: Vec<usize> = (0..n).filter(|&v| in_d[v]).collect();
    let mut private = BTreeMap::new();
    let mut matching = Vec::with_capacity(dominators.len());
    for &x in &dominators {
        let mut ys: Vec<usize> = g.neighbors(x).filter(|&y| cover[y] == 1).collect();
        ys.sort_unstable();
        let first = *ys.first().expect("a dominator of a minimal set has a private neighbor");
        matching.push(g.edge_between(x, first).unwrap());
        private.insert(x, ys);
    }
    matching.sort_unstable();
    Ok(DominationCertificate {
        dominators,
        private,
        matching,
    })
}

/// True iff `d` dominates `Y` and no single vertex of `d` can be dropped.
pub fn is_minimal_y_dominating(g: &Graph, b: &Bipartition, d: &[usize]) -> bool {
    let mut in_d = vec![false; g.vertex_count()];
    for &x in d {
        if x >= in_d.len() || b.side(x) != Side::X {
            return false;
        }
        in_d[x] = true;
    }
    let cover = cover_counts(g, &in_d);
    let dominates = b.vertices_on(Side::Y).all(|y| cover[y] >= 1);
    dominates && d.iter().all(|&x| g.neighbors(x).any(|y| cover[y] == 1))
}

/// Checks every structural claim a [`DominationCertificate`] makes about `g`:
/// `Y`-domination, nonempty and exact private-neighbor sets, their pairwise
/// disjointness, and a matching of `D` into those sets.
pub fn check_certificate(g: &Graph, b: &Bipartition, cert: &DominationCertificate) -> bool {
    let n = g.vertex_count();
    if check_sides(g, b).is_err() {
        return false;
    }
    let mut in_d = vec![false; n];
    for &x in &cert.dominators {
        if x >= n || b.side(x) != Side::X || in_d[x] {
            return false;
        }
        in_d[x] = true;
    }
    let cover = cover_counts(g, &in_d);
    if b.vertices_on(Side::Y).any(|y| cover[y] == 0) {
        return false;
    }

    if cert.private.len() != cert.dominators.len() {
        return false;
    }
    let mut owner = vec![usize::MAX; n];
    for &x in &cert.dominators {
        let Some(ys) = cert.private.get(&x) else {
            return false;
        };
        if ys.is_empty() {
            return false;
        }
        for &y in ys {
            if y >= n || owner[y] != usize::MAX {
                return false;
            }
            owner[y] = x;
            // y must be adjacent to x and to no other member of D.
            if g.edge_between(x, y).is_none() || cover[y] != 1 {
                return false;
            }
        }
        let mut expected: Vec<usize> = g.neighbors(x).filter(|&y| cover[y] == 1).collect();
        expected.sort_unstable();
        let mut listed = ys.clone();
        listed.sort_unstable();
        if listed != expected {
            return false;
        }
    }

    let mut touched = vec![false; n];
    let mut matched_d = 0;
    for &e in &cert.matching {
        if e >= g.edge_count() {
            return false;
        }
        let (u, v) = g.endpoints(e);
        if touched[u] || touched[v] {
            return false;
        }
        touched[u] = true;
        touched[v] = true;
        let (x, y) = if in_d[u] { (u, v) } else { (v, u) };
        if !in_d[x] || owner[y] != x {
            return false;
        }
        matched_d += 1;
    }
    matched_d == cert.dominators.len()
}

/// Partial coloring with colors 1 and 2 that satisfies every edge of `g`.
///
/// Matching edges get color 1; each `Y` vertex not covered by the matching
/// gets color 2 on its edge to the smallest-id dominator it sees. Each `Y`
/// vertex ends up on exactly one colored edge.
pub fn bipartite_scf_coloring(
    g: &Graph,
    b: &Bipartition,
) -> Result<(EdgeColoring, DominationCertificate), BipartiteError> {
    if let Some(v) = g.first_isolated_vertex() {
        return Err(BipartiteError::IsolatedVertex(v));
    }
    let cert = minimal_y_dominating_set(g, b)?;
    let n = g.vertex_count();
    let mut in_d = vec![false; n];
    for &x in &cert.dominators {
        in_d[x] = true;
    }
    let mut coloring = EdgeColoring::uncolored(g.edge_count(), 2);
    let mut matched = vec![false; n];
    for &e in &cert.matching {
        let (u, v) = g.endpoints(e);
        matched[u] = true;
        matched[v] = true;
        coloring.set(e, Some(1));
    }
    for y in b.vertices_on(Side::Y).filter(|&y| !matched[y]) {
        let (_, e) = g
            .incident(y)
            .iter()
            .filter(|&&(x, _)| in_d[x])
            .min()
            .copied()
            .expect("D dominates Y");
        coloring.set(e, Some(2));
    }
    Ok((coloring, cert))
}

/// Completes a satisfying partial coloring by painting every uncolored edge
/// with one fresh color, then re-verifies the result.
///
/// The fresh color is one above the largest color present. A coloring that is
/// already total comes back unchanged.
pub fn extend_to_cf(g: &Graph, partial: &EdgeColoring) -> Result<EdgeColoring, BipartiteError> {
    let report = verify_cf(g, partial)?;
    if let Some(&e) = report.unsatisfied.first() {
        return Err(BipartiteError::PartialNotSatisfying(e));
    }
    if partial.is_total() {
        return Ok(partial.clone());
    }
    let fresh: Color = partial.max_color().unwrap_or(0) + 1;
    let mut total = partial.clone();
    for e in 0..total.len() {
        if total.get(e).is_none() {
            total.set(e, Some(fresh));
        }
    }
    let report = verify_cf(g, &total)?;
    if let Some(&e) = report.unsatisfied.first() {
        return Err(BipartiteError::ExtensionUnsatisfied(e));
    }
    Ok(total)
}

/// Total conflict-free coloring of a bipartite graph with at most 3 colors.
pub fn bipartite_cf_coloring(g: &Graph) -> Result<EdgeColoring, BipartiteError> {
    let b = g
        .bipartition()
        .bipartite()
        .ok_or(BipartiteError::NotBipartite)?;
    let (partial, _) = bipartite_scf_coloring(g, &b)?;
    extend_to_cf(g, &partial)
}
