//! Python bindings. Colorings cross the boundary as lists with one entry
//! per edge: a positive color, or `None` for an uncolored edge.

use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use cfcolor::format;
use cfcolor::generators::{self, GenError};
use cfcolor::oracle::{self, OracleBudget, OracleError, OracleOutcome};
use cfcolor::{bipartite, general, tree, Color, EdgeColoring, Side, TwoColoring};

create_exception!(cfcolor, BudgetExceeded, PyRuntimeError, "Oracle search budget exhausted.");

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_coloring(g: &cfcolor::Graph, colors: Vec<Option<Color>>) -> PyResult<EdgeColoring> {
    if colors.len() != g.edge_count() {
        return Err(PyValueError::new_err(format!(
            "coloring has {} entries, graph has {} edges",
            colors.len(),
            g.edge_count()
        )));
    }
    let k = colors.iter().flatten().copied().max().unwrap_or(0);
    EdgeColoring::new(k, colors).map_err(value_err)
}

fn from_coloring(c: &EdgeColoring) -> Vec<Option<Color>> {
    c.assignment().to_vec()
}

/// Simple undirected graph on vertices `0..n`. Edge ids follow input order.
#[pyclass(frozen, module = "cfcolor")]
struct Graph {
    inner: cfcolor::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = cfcolor::Graph::new(n, &edges).map_err(value_err)?;
        Ok(Graph { inner })
    }

    /// Parse the `n m` edge-list text format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        let inner = format::parse_edge_list(text).map_err(value_err)?;
        Ok(Graph { inner })
    }

    fn to_edge_list(&self) -> String {
        format::write_edge_list(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn is_tree(&self) -> bool {
        self.inner.is_tree()
    }

    fn has_isolated_vertex(&self) -> bool {
        self.inner.has_isolated_vertex()
    }

    /// Side of each vertex (0 or 1), or `None` when the graph has an odd cycle.
    fn bipartition(&self) -> Option<Vec<u32>> {
        self.inner.bipartition().bipartite().map(|b| {
            b.sides()
                .iter()
                .map(|s| match s {
                    Side::X => 0,
                    Side::Y => 1,
                })
                .collect()
        })
    }

    /// Vertices of an odd cycle, or `None` when the graph is bipartite.
    fn odd_cycle(&self) -> Option<Vec<usize>> {
        match self.inner.bipartition() {
            TwoColoring::OddCycle(c) => Some(c),
            TwoColoring::Bipartite(_) => None,
        }
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.vertex_count(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }
}

/// Dominating set, private neighbors and matching behind a bipartite coloring.
#[pyclass(frozen, module = "cfcolor")]
struct DominationCertificate {
    inner: bipartite::DominationCertificate,
}

#[pymethods]
impl DominationCertificate {
    #[getter]
    fn dominators(&self) -> Vec<usize> {
        self.inner.dominators.clone()
    }

    #[getter]
    fn private(&self) -> BTreeMap<usize, Vec<usize>> {
        self.inner.private.clone()
    }

    #[getter]
    fn matching(&self) -> Vec<usize> {
        self.inner.matching.clone()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "DominationCertificate(dominators={:?}, matching={:?})",
            self.inner.dominators, self.inner.matching
        )
    }
}

/// Edge ids whose closed neighborhood has no uniquely occurring color.
#[pyfunction]
fn unsatisfied_edges(g: &Graph, colors: Vec<Option<Color>>) -> PyResult<Vec<usize>> {
    let c = to_coloring(&g.inner, colors)?;
    let report = cfcolor::verify_cf(&g.inner, &c).map_err(value_err)?;
    Ok(report.unsatisfied)
}

#[pyfunction]
fn is_conflict_free(g: &Graph, colors: Vec<Option<Color>>) -> PyResult<bool> {
    Ok(unsatisfied_edges(g, colors)?.is_empty())
}

fn bipartition_of(g: &cfcolor::Graph) -> PyResult<cfcolor::Bipartition> {
    g.bipartition()
        .bipartite()
        .ok_or_else(|| PyValueError::new_err("graph is not bipartite"))
}

/// Partial coloring with colors 1 and 2, plus its certificate.
#[pyfunction]
fn bipartite_scf_coloring(g: &Graph) -> PyResult<(Vec<Option<Color>>, DominationCertificate)> {
    let b = bipartition_of(&g.inner)?;
    let (c, cert) = cfcolor::bipartite_scf_coloring(&g.inner, &b).map_err(value_err)?;
    Ok((from_coloring(&c), DominationCertificate { inner: cert }))
}

/// Total coloring with at most 3 colors.
#[pyfunction]
fn bipartite_cf_coloring(g: &Graph) -> PyResult<Vec<Option<Color>>> {
    let c = cfcolor::bipartite_cf_coloring(&g.inner).map_err(value_err)?;
    Ok(from_coloring(&c))
}

/// Paint every uncolored edge with one new color.
#[pyfunction]
fn extend_to_cf(g: &Graph, colors: Vec<Option<Color>>) -> PyResult<Vec<Option<Color>>> {
    let c = to_coloring(&g.inner, colors)?;
    let total = cfcolor::extend_to_cf(&g.inner, &c).map_err(value_err)?;
    Ok(from_coloring(&total))
}

/// Proper vertex coloring with classes `1..=k`.
#[pyfunction]
fn greedy_vertex_coloring(g: &Graph) -> Vec<u32> {
    cfcolor::greedy_vertex_coloring(&g.inner).classes().to_vec()
}

/// Total coloring with at most `2*ceil(log2 k)+1` colors, `k` from the
/// greedy vertex coloring.
#[pyfunction]
fn general_cf_coloring(g: &Graph) -> PyResult<Vec<Option<Color>>> {
    let c = cfcolor::general_cf_coloring(&g.inner).map_err(value_err)?;
    Ok(from_coloring(&c))
}

/// Two-color coloring of `cycle(n)`.
#[pyfunction]
fn cycle_cf_coloring(n: usize) -> PyResult<Vec<Option<Color>>> {
    let c = cfcolor::cycle_cf_coloring(n).map_err(value_err)?;
    Ok(from_coloring(&c))
}

#[pyfunction]
fn scf_bound(k: u32) -> u32 {
    general::scf_bound(k)
}

/// Conflict-free index of a tree: 1, 2 or 3.
#[pyfunction]
fn tree_cf_index(g: &Graph) -> PyResult<u8> {
    cfcolor::tree_cf_index(&g.inner).map_err(value_err)
}

/// Edge ids of a witness set when the tree admits 2 colors, else `None`.
#[pyfunction]
fn decide_tree_two(g: &Graph) -> PyResult<Option<Vec<usize>>> {
    cfcolor::decide_tree_two(&g.inner).map_err(value_err)
}

#[pyfunction]
fn check_tree_certificate(g: &Graph, f: Vec<usize>) -> PyResult<bool> {
    let verdict = cfcolor::check_f_certificate(&g.inner, &f).map_err(value_err)?;
    Ok(verdict.is_accepted())
}

#[pyfunction]
fn tree_coloring_from_f(g: &Graph, f: Vec<usize>) -> PyResult<Vec<Option<Color>>> {
    let c = tree::coloring_from_f(&g.inner, &f).map_err(value_err)?;
    Ok(from_coloring(&c))
}

fn run_oracle(
    g: &Graph,
    k_max: Option<u32>,
    budget: u64,
    partial: bool,
) -> PyResult<Option<(u32, Vec<Option<Color>>)>> {
    let budget = OracleBudget::new(budget).ok_or_else(|| PyValueError::new_err("budget must be positive"))?;
    let k_max = k_max.unwrap_or_else(|| g.inner.edge_count().max(1) as u32);
    let search = if partial { oracle::exact_scf_index } else { oracle::exact_cf_index };
    match search(&g.inner, k_max, budget) {
        Ok(OracleOutcome::Exact { k, witness }) => Ok(Some((k, from_coloring(&witness)))),
        Ok(OracleOutcome::AboveLimit) => Ok(None),
        Ok(OracleOutcome::Exceeded) | Err(OracleError::Exceeded) => {
            Err(BudgetExceeded::new_err("search budget exceeded"))
        }
        Err(e) => Err(value_err(e)),
    }
}

/// Least total color count and a witness, or `None` above `k_max`.
#[pyfunction]
#[pyo3(signature = (g, k_max=None, budget=OracleBudget::DEFAULT_STATES))]
fn exact_cf_index(g: &Graph, k_max: Option<u32>, budget: u64) -> PyResult<Option<(u32, Vec<Option<Color>>)>> {
    run_oracle(g, k_max, budget, false)
}

/// Least partial color count and a witness, or `None` above `k_max`.
#[pyfunction]
#[pyo3(signature = (g, k_max=None, budget=OracleBudget::DEFAULT_STATES))]
fn exact_scf_index(g: &Graph, k_max: Option<u32>, budget: u64) -> PyResult<Option<(u32, Vec<Option<Color>>)>> {
    run_oracle(g, k_max, budget, true)
}

#[pyfunction]
fn to_dot(g: &Graph, colors: Vec<Option<Color>>) -> PyResult<String> {
    let c = to_coloring(&g.inner, colors)?;
    Ok(format::write_dot(&g.inner, &c))
}

fn wrap(r: Result<cfcolor::Graph, GenError>) -> PyResult<Graph> {
    r.map(|inner| Graph { inner }).map_err(value_err)
}

#[pyfunction]
fn complete_bipartite(n: usize, m: usize) -> PyResult<Graph> {
    wrap(generators::complete_bipartite(n, m))
}

#[pyfunction]
fn complete(n: usize) -> PyResult<Graph> {
    wrap(generators::complete(n))
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<Graph> {
    wrap(generators::cycle(n))
}

#[pyfunction]
fn path(n: usize) -> PyResult<Graph> {
    wrap(generators::path(n))
}

#[pyfunction]
fn star(leaves: usize) -> PyResult<Graph> {
    wrap(generators::star(leaves))
}

#[pyfunction]
fn petersen() -> Graph {
    Graph { inner: generators::petersen() }
}

fn check_p(p: f64) -> PyResult<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(PyValueError::new_err("p must lie in [0, 1]"))
    }
}

#[pyfunction]
fn random_bipartite(nx: usize, ny: usize, p: f64, seed: u64) -> PyResult<Graph> {
    check_p(p)?;
    Ok(Graph { inner: generators::random_bipartite(nx, ny, p, seed) })
}

#[pyfunction]
fn random_gnp(n: usize, p: f64, seed: u64) -> PyResult<Graph> {
    check_p(p)?;
    Ok(Graph { inner: generators::random_gnp(n, p, seed) })
}

#[pyfunction]
fn random_tree(n: usize, seed: u64) -> PyResult<Graph> {
    wrap(generators::random_tree(n, seed))
}

#[pyfunction]
fn tree_from_prufer(code: Vec<usize>) -> PyResult<Graph> {
    let n = code.len() + 2;
    if let Some(&bad) = code.iter().find(|&&c| c >= n) {
        return Err(PyValueError::new_err(format!("entry {bad} must be below {n}")));
    }
    Ok(Graph { inner: generators::tree_from_prufer(&code) })
}

#[pymodule]
#[pyo3(name = "cfcolor")]
fn cfcolor_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    m.add_class::<Graph>()?;
    m.add_class::<DominationCertificate>()?;
    m.add_function(wrap_pyfunction!(unsatisfied_edges, m)?)?;
    m.add_function(wrap_pyfunction!(is_conflict_free, m)?)?;
    m.add_function(wrap_pyfunction!(bipartite_scf_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(bipartite_cf_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(extend_to_cf, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_vertex_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(general_cf_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_cf_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(scf_bound, m)?)?;
    m.add_function(wrap_pyfunction!(tree_cf_index, m)?)?;
    m.add_function(wrap_pyfunction!(decide_tree_two, m)?)?;
    m.add_function(wrap_pyfunction!(check_tree_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(tree_coloring_from_f, m)?)?;
    m.add_function(wrap_pyfunction!(exact_cf_index, m)?)?;
    m.add_function(wrap_pyfunction!(exact_scf_index, m)?)?;
    m.add_function(wrap_pyfunction!(to_dot, m)?)?;
    m.add_function(wrap_pyfunction!(complete_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(petersen, m)?)?;
    m.add_function(wrap_pyfunction!(random_bipartite, m)?)?;
    m.add_function(wrap_pyfunction!(random_gnp, m)?)?;
    m.add_function(wrap_pyfunction!(random_tree, m)?)?;
    m.add_function(wrap_pyfunction!(tree_from_prufer, m)?)?;
    Ok(())
}
