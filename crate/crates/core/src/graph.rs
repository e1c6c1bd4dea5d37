//! Simple undirected graphs with stable vertex and edge ids.
//!
//! Vertices are `0..n`; edge `i` is the `i`-th pair handed to [`Graph::new`].
//! Every coloring and certificate in this crate indexes edges by that id.

use std::collections::VecDeque;

use thiserror::Error;

/// Errors raised while building a [`Graph`]. Each variant names the offending
/// position in the input edge list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0} is a self-loop")]
    SelfLoop(usize),
    #[error("edge {0} duplicates an earlier edge")]
    DuplicateEdge(usize),
    #[error("edge {0} references a vertex outside the graph")]
    VertexOutOfRange(usize),
}

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edge ids follow input order and the
    /// endpoint order of each pair is kept as given.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(id));
            }
            if u == v {
                return Err(GraphError::SelfLoop(id));
            }
            // Scan the shorter list; degrees stay small for the inputs we care about.
            let (a, b) = if adjacency[u].len() <= adjacency[v].len() {
                (u, v)
            } else {
                (v, u)
            };
            if adjacency[a].iter().any(|&(w, _)| w == b) {
                return Err(GraphError::DuplicateEdge(id));
            }
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph {
            n,
            edges: edges.to_vec(),
            adjacency,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`, in input order.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// `(neighbor, edge id)` pairs incident to `v`, in edge-insertion order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Id of the edge joining `u` and `v`, if present.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.first_isolated_vertex().is_some()
    }

    pub fn first_isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adjacency[v].is_empty())
    }

    /// Connected components, each sorted ascending, listed by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True iff the graph is connected and acyclic (`n >= 1`).
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Subgraph spanned by the listed edges, with isolated vertices dropped.
    ///
    /// Surviving vertices are renumbered in ascending order of their original
    /// id, and edge `i` of the result is `edge_ids[i]` of `self`. Returns the
    /// subgraph together with the new-to-old vertex map.
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> (Graph, Vec<usize>) {
        let mut used = vec![false; self.n];
        for &e in edge_ids {
            let (u, v) = self.edges[e];
            used[u] = true;
            used[v] = true;
        }
        let mut new_id = vec![usize::MAX; self.n];
        let mut old_id = Vec::new();
        for v in (0..self.n).filter(|&v| used[v]) {
            new_id[v] = old_id.len();
            old_id.push(v);
        }
        let mut adjacency = vec![Vec::new(); old_id.len()];
        let mut edges = Vec::with_capacity(edge_ids.len());
        for (i, &e) in edge_ids.iter().enumerate() {
            let (u, v) = self.edges[e];
            let (a, b) = (new_id[u], new_id[v]);
            adjacency[a].push((b, i));
            adjacency[b].push((a, i));
            edges.push((a, b));
        }
        let sub = Graph {
            n: old_id.len(),
            edges,
            adjacency,
        };
        (sub, old_id)
    }

    /// Drops isolated vertices and compacts the remaining ids, keeping edge order.
    pub fn without_isolated(&self) -> Graph {
        let all: Vec<usize> = (0..self.edges.len()).collect();
        self.edge_subgraph(&all).0
    }

    /// Two-colors the graph by BFS, or returns an odd cycle.
    ///
    /// Components are visited from their smallest vertex, which is placed on
    /// side X. Isolated vertices land on X.
    pub fn bipartition(&self) -> TwoColoring {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::X);
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for w in self.neighbors(v) {
                    match side[w] {
                        None => {
                            side[w] = Some(sv.other());
                            parent[w] = v;
                            depth[w] = depth[v] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == sv => {
                            return TwoColoring::OddCycle(tree_cycle(&parent, &depth, v, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        TwoColoring::Bipartite(Bipartition {
            side: side.into_iter().map(Option::unwrap).collect(),
        })
    }
}

/// Closes the BFS-tree paths from `u` and `w` into a cycle through edge `uw`.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Assignment of every vertex to side X or Y.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    /// Wraps a side assignment, checking that every edge of `g` crosses.
    pub fn from_sides(g: &Graph, side: Vec<Side>) -> Option<Self> {
        if side.len() != g.vertex_count() {
            return None;
        }
        g.edges()
            .iter()
            .all(|&(u, v)| side[u] != side[v])
            .then_some(Bipartition { side })
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn vertices_on(&self, s: Side) -> impl Iterator<Item = usize> + '_ {
        self.side
            .iter()
            .enumerate()
            .filter(move |&(_, &t)| t == s)
            .map(|(v, _)| v)
    }
}

/// Outcome of [`Graph::bipartition`]. An odd cycle is a regular answer, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    Bipartite(Bipartition),
    /// Vertex sequence of an odd cycle; consecutive entries (and last/first) are adjacent.
    OddCycle(Vec<usize>),
}

impl TwoColoring {
    pub fn bipartite(self) -> Option<Bipartition> {
        match self {
            TwoColoring::Bipartite(b) => Some(b),
            TwoColoring::OddCycle(_) => None,
        }
    }
}
