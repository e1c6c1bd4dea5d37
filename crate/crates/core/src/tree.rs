//! Trees with conflict-free chromatic index 2.
//!
//! A tree with at least two edges has a conflict-free 2-coloring exactly when
//! some nonempty proper edge set `F` satisfies, for every edge `uv`:
//!
//! * `uv ∈ F`: `d_F(u) + d_F(v) = 2`, or `(d_T(u) - d_F(u)) + (d_T(v) - d_F(v)) = 1`;
//! * `uv ∉ F`: `d_F(u) + d_F(v) = 1`, or `(d_T(u) - d_F(u)) + (d_T(v) - d_F(v)) = 2`.
//!
//! `F` is the color class of color 1. For `uv ∈ F` color 1 occurs
//! `d_F(u) + d_F(v) - 1` times around `uv` and color 2 occurs
//! `(d_T(u) - d_F(u)) + (d_T(v) - d_F(v))` times; symmetrically for `uv ∉ F`.
//!
//! [`decide_tree_two`] searches for such an `F` with a dynamic program over
//! the rooted tree and always returns a checkable witness.

use std::collections::VecDeque;

use thiserror::Error;

use crate::coloring::{verify_cf, ColoringError, EdgeColoring};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("input graph is not a tree")]
    NotATree,
    #[error("tree has {0} edges; at least 2 are required")]
    TooFewEdges(usize),
    #[error("edge id {0} is out of range")]
    EdgeOutOfRange(usize),
    #[error("edge set is not a valid certificate")]
    CertificateRejected(FRejection),
    #[error("coloring leaves edges {0:?} unsatisfied")]
    NotConflictFree(Vec<usize>),
    #[error("coloring is not a total coloring using exactly colors 1 and 2")]
    NotTwoColors,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Which disjunct of an edge's condition holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    /// `d_F(u) + d_F(v)` is 2 (edge in `F`) or 1 (edge outside `F`).
    FDegree,
    /// The complementary degree sum is 1 (edge in `F`) or 2 (edge outside `F`).
    ComplementDegree,
    Violated,
}

/// An accepted edge set together with the clause each edge satisfies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeFCertificate {
    /// `F`, ascending.
    pub f: Vec<usize>,
    /// Clause per edge id; never [`Clause::Violated`].
    pub clauses: Vec<Clause>,
}

/// Why an edge set was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FRejection {
    /// Edges whose condition fails, ascending.
    pub violated: Vec<usize>,
    /// `F` was empty or all of `E(T)`.
    pub not_proper: bool,
}

/// Outcome of [`check_f_certificate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FVerdict {
    Accepted(TreeFCertificate),
    Rejected(FRejection),
}

impl FVerdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, FVerdict::Accepted(_))
    }
}

/// Evaluates one edge's condition from its membership, its `F`-degree sum
/// and its tree-degree sum.
pub fn edge_clause(in_f: bool, f_sum: usize, tree_sum: usize) -> Clause {
    let rest = tree_sum - f_sum;
    match (in_f, f_sum, rest) {
        (true, 2, _) | (false, 1, _) => Clause::FDegree,
        (true, _, 1) | (false, _, 2) => Clause::ComplementDegree,
        _ => Clause::Violated,
    }
}

fn clause_holds(in_f: bool, f_sum: usize, tree_sum: usize) -> bool {
    f_sum <= tree_sum && edge_clause(in_f, f_sum, tree_sum) != Clause::Violated
}

fn require_tree(t: &Graph) -> Result<(), TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    if t.edge_count() < 2 {
        return Err(TreeError::TooFewEdges(t.edge_count()));
    }
    Ok(())
}

fn membership(t: &Graph, f: &[usize]) -> Result<Vec<bool>, TreeError> {
    let mut in_f = vec![false; t.edge_count()];
    for &e in f {
        *in_f.get_mut(e).ok_or(TreeError::EdgeOutOfRange(e))? = true;
    }
    Ok(in_f)
}

/// Evaluates both conditions on every edge of `t` for the edge set `f`.
pub fn check_f_certificate(t: &Graph, f: &[usize]) -> Result<FVerdict, TreeError> {
    require_tree(t)?;
    let in_f = membership(t, f)?;
    let f_deg: Vec<usize> = (0..t.vertex_count())
        .map(|v| t.incident(v).iter().filter(|&&(_, e)| in_f[e]).count())
        .collect();
    let clauses: Vec<Clause> = t
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| edge_clause(in_f[e], f_deg[u] + f_deg[v], t.degree(u) + t.degree(v)))
        .collect();
    let size = in_f.iter().filter(|&&b| b).count();
    let not_proper = size == 0 || size == t.edge_count();
    let violated: Vec<usize> = (0..clauses.len())
        .filter(|&e| clauses[e] == Clause::Violated)
        .collect();
    if not_proper || !violated.is_empty() {
        return Ok(FVerdict::Rejected(FRejection {
            violated,
            not_proper,
        }));
    }
    let f = (0..in_f.len()).filter(|&e| in_f[e]).collect();
    Ok(FVerdict::Accepted(TreeFCertificate { f, clauses }))
}

/// Colors `F` with 1 and the rest with 2, after checking `F` is accepted.
/// The result is re-verified.
pub fn coloring_from_f(t: &Graph, f: &[usize]) -> Result<EdgeColoring, TreeError> {
    if let FVerdict::Rejected(r) = check_f_certificate(t, f)? {
        return Err(TreeError::CertificateRejected(r));
    }
    let in_f = membership(t, f)?;
    let colors: Vec<u32> = in_f.iter().map(|&b| if b { 1 } else { 2 }).collect();
    let c = EdgeColoring::total(&colors)?;
    let report = verify_cf(t, &c)?;
    if !report.all_satisfied() {
        return Err(TreeError::NotConflictFree(report.unsatisfied));
    }
    Ok(c)
}

/// The color-1 edges of a conflict-free total 2-coloring of `t`.
///
/// The returned set is checked to be an accepted certificate.
pub fn f_from_coloring(t: &Graph, c: &EdgeColoring) -> Result<Vec<usize>, TreeError> {
    require_tree(t)?;
    let report = verify_cf(t, c)?;
    let two_colors = c.is_total()
        && c.assignment().iter().all(|&x| matches!(x, Some(1) | Some(2)))
        && c.colors_used() == 2;
    if !two_colors {
        return Err(TreeError::NotTwoColors);
    }
    if !report.all_satisfied() {
        return Err(TreeError::NotConflictFree(report.unsatisfied));
    }
    let f: Vec<usize> = (0..c.len()).filter(|&e| c.get(e) == Some(1)).collect();
    match check_f_certificate(t, &f)? {
        FVerdict::Accepted(_) => Ok(f),
        FVerdict::Rejected(r) => Err(TreeError::CertificateRejected(r)),
    }
}

/// Rooted view of a tree: BFS order with parent links.
struct Rooted {
    order: Vec<usize>,
    parent: Vec<usize>,
}

impl Rooted {
    fn new(t: &Graph, root: usize) -> Self {
        let n = t.vertex_count();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        parent[root] = root;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in t.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        Rooted { order, parent }
    }

    fn children<'a>(&'a self, t: &'a Graph, v: usize) -> impl Iterator<Item = (usize, usize)> + 'a {
        t.incident(v)
            .iter()
            .copied()
            .filter(move |&(w, _)| self.parent[v] != w)
    }
}

/// For vertex `v` at `F`-degree `dv`, which memberships of the edge to child
/// `c` can be completed inside `c`'s subtree: bit `y` set iff some `dc` is
/// feasible for `c` with parent membership `y` and the edge clause holds.
fn child_options(t: &Graph, table: &[Vec<[bool; 2]>], v: usize, dv: usize, c: usize) -> [bool; 2] {
    let tree_sum = t.degree(v) + t.degree(c);
    let mut out = [false; 2];
    for (y, slot) in out.iter_mut().enumerate() {
        *slot = table[c]
            .iter()
            .enumerate()
            .any(|(dc, row)| row[y] && clause_holds(y == 1, dv + dc, tree_sum));
    }
    out
}

/// Forced-in count and free count over the children of `v` at `F`-degree
/// `dv`, or `None` when some child has no option.
fn child_summary(
    t: &Graph,
    rooted: &Rooted,
    table: &[Vec<[bool; 2]>],
    v: usize,
    dv: usize,
) -> Option<(usize, usize)> {
    let (mut forced, mut free) = (0, 0);
    for (c, _) in rooted.children(t, v) {
        match child_options(t, table, v, dv, c) {
            [true, true] => free += 1,
            [false, true] => forced += 1,
            [true, false] => {}
            [false, false] => return None,
        }
    }
    Some((forced, free))
}

/// Finds an accepted `F` for the tree `t`, or `None` when `t` has no
/// conflict-free 2-coloring.
///
/// `table[v][d][x]` records whether the subtree below `v` can be completed
/// when `v` has `F`-degree `d` and its parent edge has membership `x`. With
/// `d` fixed, each child allows membership 0, 1 or both, so the achievable
/// number of `F`-edges to children is an interval. Neither the empty set
/// nor the full edge set satisfies the conditions once the tree has two
/// adjacent edges, so any locally consistent assignment is already proper.
pub fn decide_tree_two(t: &Graph) -> Result<Option<Vec<usize>>, TreeError> {
    require_tree(t)?;
    let n = t.vertex_count();
    let leaf = (0..n).find(|&v| t.degree(v) == 1).expect("trees have leaves");
    let root = t.neighbors(leaf).next().unwrap();
    let rooted = Rooted::new(t, root);

    let mut table: Vec<Vec<[bool; 2]>> = vec![Vec::new(); n];
    for &v in rooted.order.iter().rev() {
        let deg = t.degree(v);
        let mut rows = vec![[false; 2]; deg + 1];
        for (dv, row) in rows.iter_mut().enumerate() {
            let Some((forced, free)) = child_summary(t, &rooted, &table, v, dv) else {
                continue;
            };
            for (x, cell) in row.iter_mut().enumerate() {
                if v == root && x == 1 {
                    continue;
                }
                *cell = dv >= x && (forced..=forced + free).contains(&(dv - x));
            }
        }
        table[v] = rows;
    }

    let Some(root_deg) = (0..=t.degree(root)).find(|&d| table[root][d][0]) else {
        return Ok(None);
    };

    let mut in_f = vec![false; t.edge_count()];
    let mut stack = vec![(root, 0usize, root_deg)];
    while let Some((v, x, dv)) = stack.pop() {
        let (forced, _) = child_summary(t, &rooted, &table, v, dv).expect("feasible state");
        let mut extra = dv - x - forced;
        for (c, e) in rooted.children(t, v) {
            let y = match child_options(t, &table, v, dv, c) {
                [false, true] => 1,
                [true, true] if extra > 0 => {
                    extra -= 1;
                    1
                }
                _ => 0,
            };
            in_f[e] = y == 1;
            let tree_sum = t.degree(v) + t.degree(c);
            let dc = (0..table[c].len())
                .find(|&dc| table[c][dc][y] && clause_holds(y == 1, dv + dc, tree_sum))
                .expect("child option is realizable");
            stack.push((c, y, dc));
        }
    }
    let f: Vec<usize> = (0..in_f.len()).filter(|&e| in_f[e]).collect();
    debug_assert!(check_f_certificate(t, &f).unwrap().is_accepted());
    Ok(Some(f))
}

/// Conflict-free chromatic index of a tree with at least one edge.
pub fn tree_cf_index(t: &Graph) -> Result<u8, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    match t.edge_count() {
        0 => Err(TreeError::TooFewEdges(0)),
        1 => Ok(1),
        _ => Ok(if decide_tree_two(t)?.is_some() { 2 } else { 3 }),
    }
}
