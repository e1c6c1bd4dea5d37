//! Named graph families and seeded random instances.
//!
//! Random instances draw from [`SplitMix64`] so the same seed reproduces the
//! same instance in any language that implements the generator.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{family} needs size at least {min}, got {got}")]
    SizeTooSmall {
        family: &'static str,
        min: usize,
        got: usize,
    },
    #[error("labeled tree enumeration is limited to n <= {max}, got {got}")]
    EnumerationTooLarge { max: usize, got: usize },
}

/// Largest `n` accepted by [`all_labeled_trees`].
pub const MAX_ENUMERATED_TREE: usize = 9;

/// SplitMix64. Each step adds `0x9E3779B97F4A7C15` to the state and returns
/// the state mixed through
/// `z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;`
/// `z = (z ^ (z >> 27)) * 0x94D049BB133111EB;`
/// `z ^ (z >> 31)` (wrapping multiplication).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `floor(next_u64 * bound / 2^64)`, in `0..bound`.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        ((self.next_u64() as u128 * bound as u128) >> 64) as u64
    }
}

fn need(family: &'static str, min: usize, got: usize) -> Result<(), GenError> {
    if got < min {
        return Err(GenError::SizeTooSmall { family, min, got });
    }
    Ok(())
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generated edge lists are simple")
}

/// `K_{n,m}`: side X is `0..n`, side Y is `n..n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<Graph, GenError> {
    need("complete_bipartite", 1, n.min(m))?;
    let edges: Vec<_> = (0..n).flat_map(|i| (0..m).map(move |j| (i, n + j))).collect();
    Ok(build(n + m, &edges))
}

pub fn complete(n: usize) -> Result<Graph, GenError> {
    need("complete", 1, n)?;
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Ok(build(n, &edges))
}

/// `C_n` with edge `i` joining `i` and `i + 1 mod n`.
pub fn cycle(n: usize) -> Result<Graph, GenError> {
    need("cycle", 3, n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(build(n, &edges))
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph, GenError> {
    need("path", 1, n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(build(n, &edges))
}

/// `K_{1,leaves}` centered at vertex 0.
pub fn star(leaves: usize) -> Result<Graph, GenError> {
    need("star", 1, leaves)?;
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Ok(build(leaves + 1, &edges))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    build(10, &edges)
}

/// Each pair `(i, nx + j)` is kept with probability `p`, in lexicographic
/// order; isolated vertices are then dropped and ids compacted.
pub fn random_bipartite(nx: usize, ny: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for i in 0..nx {
        for j in 0..ny {
            if rng.next_f64() < p {
                edges.push((i, nx + j));
            }
        }
    }
    build(nx + ny, &edges).without_isolated()
}

/// `G(n, p)` over pairs `(i, j)`, `i < j`, in lexicographic order, with
/// isolated vertices dropped and ids compacted.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    build(n, &edges).without_isolated()
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a tree whose
/// edges are `(min, max)` pairs in lexicographic order.
pub fn tree_from_prufer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Smallest current leaf; `ptr` only moves forward.
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges.sort_unstable();
    build(n, &edges)
}

/// Uniformly random labeled tree on `n >= 2` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    Ok(random_tree_with_code(n, seed)?.1)
}

/// Like [`random_tree`], also returning the Prüfer sequence drawn.
pub fn random_tree_with_code(n: usize, seed: u64) -> Result<(Vec<usize>, Graph), GenError> {
    need("random_tree", 2, n)?;
    let mut rng = SplitMix64::new(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.next_below(n as u64) as usize).collect();
    let t = tree_from_prufer(&seq);
    Ok((seq, t))
}

/// Every labeled tree on `n` vertices, as `(Prüfer sequence, tree)` pairs in
/// lexicographic sequence order. There are `n^(n-2)` of them.
pub fn all_labeled_trees(n: usize) -> Result<LabeledTrees, GenError> {
    need("all_labeled_trees", 2, n)?;
    if n > MAX_ENUMERATED_TREE {
        return Err(GenError::EnumerationTooLarge {
            max: MAX_ENUMERATED_TREE,
            got: n,
        });
    }
    Ok(LabeledTrees {
        n,
        next: Some(vec![0; n - 2]),
    })
}

/// Iterator returned by [`all_labeled_trees`].
#[derive(Debug, Clone)]
pub struct LabeledTrees {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for LabeledTrees {
    type Item = (Vec<usize>, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        let seq = self.next.take()?;
        let mut succ = seq.clone();
        // Odometer increment; exhausting every position ends the stream.
        let mut i = succ.len();
        self.next = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            succ[i] += 1;
            if succ[i] < self.n {
                break Some(succ);
            }
            succ[i] = 0;
        };
        let tree = tree_from_prufer(&seq);
        Some((seq, tree))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn family_sizes() {
        assert_eq!(cycle(3).unwrap().edge_count(), 3);
        assert_eq!(complete_bipartite(3, 3).unwrap().edge_count(), 9);
        assert_eq!(complete(5).unwrap().edge_count(), 10);
        assert_eq!(star(3).unwrap().edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(path(4).unwrap().edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert!(matches!(cycle(2), Err(GenError::SizeTooSmall { .. })));
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert!(p.bipartition().bipartite().is_none());
    }

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 as published with the reference generator.
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(r.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn random_bipartite_extremes() {
        let full = random_bipartite(3, 4, 1.0, 7);
        assert_eq!(full, complete_bipartite(3, 4).unwrap());
        let none = random_bipartite(3, 4, 0.0, 7);
        assert_eq!(none.vertex_count(), 0);
        assert_eq!(none.edge_count(), 0);
    }

    #[test]
    fn random_instances_are_seed_stable() {
        let a = random_bipartite(20, 20, 0.2, 42);
        let b = random_bipartite(20, 20, 0.2, 42);
        assert_eq!(a, b);
        assert!(a.bipartition().bipartite().is_some());
        assert!(!a.has_isolated_vertex());
        // Frozen at first generation.
        assert_eq!(a.edge_count(), 81);
    }

    #[test]
    fn prufer_decoding() {
        // Sequence [3, 3, 3] is the star centered at 3 on 5 vertices.
        let t = tree_from_prufer(&[3, 3, 3]);
        assert_eq!(t.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4)]);
        // [3, 2] on 4 vertices: leaf 0 -> 3, leaf 1 -> 2, then (2, 3).
        let t = tree_from_prufer(&[3, 2]);
        assert_eq!(t.edges(), &[(0, 3), (1, 2), (2, 3)]);
        assert_eq!(tree_from_prufer(&[]).edges(), &[(0, 1)]);
    }

    #[test]
    fn enumeration_counts_and_distinctness() {
        for n in 2..=7 {
            let trees: Vec<_> = all_labeled_trees(n).unwrap().map(|(_, t)| t).collect();
            assert_eq!(trees.len(), n.pow(n as u32 - 2));
            assert!(trees.iter().all(Graph::is_tree));
            let distinct: HashSet<_> = trees.iter().map(|t| t.edges().to_vec()).collect();
            assert_eq!(distinct.len(), trees.len());
        }
        assert_eq!(all_labeled_trees(3).unwrap().count(), 3);
        assert_eq!(all_labeled_trees(4).unwrap().count(), 16);
        assert!(matches!(all_labeled_trees(10), Err(GenError::EnumerationTooLarge { .. })));
    }

    #[test]
    fn random_trees() {
        for seed in 0..100 {
            let t = random_tree(10, seed).unwrap();
            assert_eq!(t.edge_count(), 9);
            assert!(t.is_tree());
        }
    }
}
