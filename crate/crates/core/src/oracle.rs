//! Exact conflict-free indices of small graphs by exhaustive search.
//!
//! Edges are colored in id order. Colorings equal up to renaming colors are
//! visited once: the first colored edge takes color 1, and a color `c` is
//! tried only after color `c - 1` has appeared. An edge is checked as soon
//! as every edge of its closed neighborhood has been decided.

use thiserror::Error;

use crate::coloring::{closed_neighborhood, Color, EdgeColoring};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("k_max must be at least 1")]
    ZeroColors,
    #[error("search budget exceeded")]
    Exceeded,
}

/// Cap on the number of search nodes (single edge assignments) per call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OracleBudget {
    max_states: u64,
}

impl OracleBudget {
    pub const DEFAULT_STATES: u64 = 100_000_000;

    pub fn new(max_states: u64) -> Option<Self> {
        (max_states >= 1).then_some(OracleBudget { max_states })
    }

    pub fn max_states(&self) -> u64 {
        self.max_states
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_states: Self::DEFAULT_STATES,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// The index, with a coloring attaining it.
    Exact { k: u32, witness: EdgeColoring },
    /// No coloring with at most `k_max` colors exists.
    AboveLimit,
    /// The budget ran out before the answer was settled.
    Exceeded,
}

impl OracleOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            OracleOutcome::Exact { k, .. } => Some(*k),
            _ => None,
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    k: usize,
    partial: bool,
    /// Edges to check right after edge `i` is decided.
    check_after: Vec<Vec<usize>>,
    /// Per-vertex color counts, `counts[v * (k + 1) + c]`; slot 0 is unused.
    counts: Vec<u32>,
    colors: Vec<Color>,
    states: u64,
    max_states: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn satisfied(&self, e: usize) -> bool {
        let (u, v) = self.g.endpoints(e);
        let stride = self.k + 1;
        let own = self.colors[e] as usize;
        (1..=self.k).any(|c| {
            let mut n = self.counts[u * stride + c] + self.counts[v * stride + c];
            if own == c {
                n -= 1;
            }
            n == 1
        })
    }

    fn paint(&mut self, e: usize, c: Color, add: bool) {
        if c == 0 {
            return;
        }
        let (u, v) = self.g.endpoints(e);
        let stride = self.k + 1;
        for w in [u, v] {
            let slot = &mut self.counts[w * stride + c as usize];
            if add {
                *slot += 1;
            } else {
                *slot -= 1;
            }
        }
    }

    fn run(&mut self, i: usize, highest: Color) -> Step {
        if i == self.colors.len() {
            return Step::Found;
        }
        let first = if self.partial { 0 } else { 1 };
        let last = (highest + 1).min(self.k as Color);
        for c in first..=last {
            self.states += 1;
            if self.states > self.max_states {
                return Step::OutOfBudget;
            }
            self.colors[i] = c;
            self.paint(i, c, true);
            let ok = self.check_after[i].iter().all(|&e| self.satisfied(e));
            if ok {
                match self.run(i + 1, highest.max(c)) {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
            self.paint(i, c, false);
        }
        self.colors[i] = 0;
        Step::Exhausted
    }
}

fn search(g: &Graph, k_max: u32, budget: OracleBudget, partial: bool) -> Result<OracleOutcome, OracleError> {
    if let Some(v) = g.first_isolated_vertex() {
        return Err(OracleError::IsolatedVertex(v));
    }
    if k_max == 0 {
        return Err(OracleError::ZeroColors);
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(OracleOutcome::Exact {
            k: 0,
            witness: EdgeColoring::uncolored(0, 0),
        });
    }
    let mut check_after = vec![Vec::new(); m];
    for e in 0..m {
        let hood = closed_neighborhood(g, e).expect("edge id in range");
        check_after[*hood.last().unwrap()].push(e);
    }
    let mut states = 0;
    for k in 1..=k_max {
        let mut s = Search {
            g,
            k: k as usize,
            partial,
            check_after: check_after.clone(),
            counts: vec![0; g.vertex_count() * (k as usize + 1)],
            colors: vec![0; m],
            states,
            max_states: budget.max_states,
        };
        match s.run(0, 0) {
            Step::Found => {
                let assignment = s.colors.iter().map(|&c| (c > 0).then_some(c)).collect();
                let witness = EdgeColoring::new(k, assignment).expect("colors within 1..=k");
                return Ok(OracleOutcome::Exact { k, witness });
            }
            Step::OutOfBudget => return Ok(OracleOutcome::Exceeded),
            Step::Exhausted => states = s.states,
        }
    }
    Ok(OracleOutcome::AboveLimit)
}

/// Least `k <= k_max` admitting a total conflict-free `k`-edge-coloring.
pub fn exact_cf_index(g: &Graph, k_max: u32, budget: OracleBudget) -> Result<OracleOutcome, OracleError> {
    search(g, k_max, budget, false)
}

/// Least `k <= k_max` such that coloring some edges with `1..=k` (leaving
/// the rest uncolored) satisfies every edge.
pub fn exact_scf_index(g: &Graph, k_max: u32, budget: OracleBudget) -> Result<OracleOutcome, OracleError> {
    search(g, k_max, budget, true)
}

/// Exact values of both indices, each searched up to `|E(g)|` colors
/// (giving every edge its own color is always conflict-free).
pub fn exact_indices(g: &Graph, budget: OracleBudget) -> Result<(u32, u32), OracleError> {
    let k_max = (g.edge_count() as u32).max(1);
    let get = |o: OracleOutcome| match o {
        OracleOutcome::Exact { k, .. } => Ok(k),
        OracleOutcome::Exceeded => Err(OracleError::Exceeded),
        OracleOutcome::AboveLimit => unreachable!("m colors always suffice"),
    };
    let scf = get(exact_scf_index(g, k_max, budget)?)?;
    let cf = get(exact_cf_index(g, k_max, budget)?)?;
    Ok((scf, cf))
}

/// Whether `scf <= cf <= scf + 1` holds for the exact values.
pub fn sandwich_check(g: &Graph, budget: OracleBudget) -> Result<bool, OracleError> {
    let (scf, cf) = exact_indices(g, budget)?;
    Ok(scf <= cf && cf <= scf + 1)
}
