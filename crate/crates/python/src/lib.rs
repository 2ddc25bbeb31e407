//! Python bindings: a `Graph` and `SuffixIndex` class plus one function per
//! algorithm. Vertex sets come back as lists of ints.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

use kdegen::approx::{self, ExactSolver, GreedySolver, VertexCoverOptions};
use kdegen::biclique;
use kdegen::clique::{list_maximal_cliques_with, CliqueOptions};
use kdegen::fixed;
use kdegen::generate::{self as gen, Family, GenParams};
use kdegen::graph::write_graph;

fn py_err(e: kdegen::Error) -> PyErr {
    match e {
        kdegen::Error::Io(e) => PyIOError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn parse_format(format: &str) -> PyResult<kdegen::Format> {
    format.parse().map_err(py_err)
}

/// An undirected simple graph on vertices `0..n`.
#[pyclass(frozen, module = "pykdegen")]
struct Graph {
    inner: kdegen::Graph,
}

#[pymethods]
impl Graph {
    /// Self-loops and repeated edges are dropped.
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = kdegen::Graph::from_edges(n, edges).map_err(py_err)?;
        Ok(Graph { inner })
    }

    /// Parses an edge list or DIMACS text.
    #[staticmethod]
    #[pyo3(signature = (text, format="edgelist"))]
    fn parse(text: &str, format: &str) -> PyResult<Self> {
        let loaded = kdegen::load_graph(text.as_bytes(), parse_format(format)?).map_err(py_err)?;
        Ok(Graph {
            inner: loaded.graph,
        })
    }

    /// Generates a graph from a named family.
    #[staticmethod]
    #[pyo3(signature = (family, n=10, k=3, p=0.5, parts=None, seed=0))]
    fn generate(
        family: &str,
        n: usize,
        k: usize,
        p: f64,
        parts: Option<&str>,
        seed: u64,
    ) -> PyResult<Self> {
        let family: Family = family.parse().map_err(py_err)?;
        let parts = match parts {
            Some(s) => gen::parse_parts(s).map_err(py_err)?,
            None => Vec::new(),
        };
        let params = GenParams {
            n,
            k,
            p,
            parts,
            seed,
        };
        let inner = gen::generate(family, &params).map_err(py_err)?;
        Ok(Graph { inner })
    }

    #[pyo3(signature = (format="edgelist"))]
    fn to_text(&self, format: &str) -> PyResult<String> {
        let mut buf = Vec::new();
        write_graph(&self.inner, parse_format(format)?, &mut buf).map_err(py_err)?;
        Ok(String::from_utf8(buf).expect("writer emits ascii"))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.inner.has_edge(u, v))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

impl Graph {
    fn check(&self, v: usize) -> PyResult<()> {
        if v >= self.inner.n() {
            return Err(py_err(kdegen::Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.n(),
            }));
        }
        Ok(())
    }
}

/// Dictionary of all suffixes of inserted words over letters `0..alphabet`.
#[pyclass(module = "pykdegen")]
struct SuffixIndex {
    inner: kdegen::SuffixIndex,
}

#[pymethods]
impl SuffixIndex {
    #[new]
    fn new(alphabet: usize) -> Self {
        SuffixIndex {
            inner: kdegen::SuffixIndex::new(alphabet),
        }
    }

    fn insert(&mut self, word: Vec<usize>) -> PyResult<()> {
        self.inner.insert(&word).map_err(py_err)
    }

    fn is_suffix(&self, word: Vec<usize>) -> bool {
        self.inner.is_suffix(&word)
    }

    fn has_root_letter(&self, letter: usize) -> bool {
        self.inner.has_root_letter(letter)
    }

    #[getter]
    fn word_count(&self) -> usize {
        self.inner.word_count()
    }
}

/// `(k, ordering)`.
#[pyfunction]
fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let ord = kdegen::degeneracy_ordering(&g.inner);
    (ord.k(), ord.order().to_vec())
}

/// Maximal cliques, each in degeneracy-rank order.
#[pyfunction]
#[pyo3(signature = (g, parallel=false))]
fn maximal_cliques(py: Python<'_>, g: &Graph, parallel: bool) -> Vec<Vec<usize>> {
    let opts = CliqueOptions {
        parallel,
        ..CliqueOptions::default()
    };
    py.detach(|| list_maximal_cliques_with(&g.inner, opts).cliques)
}

#[pyfunction]
fn cliques(py: Python<'_>, g: &Graph, size: usize) -> PyResult<Vec<Vec<usize>>> {
    py.detach(|| fixed::list_l_cliques(&g.inner, size))
        .map_err(py_err)
}

#[pyfunction]
fn count_cliques(py: Python<'_>, g: &Graph, size: usize) -> PyResult<u64> {
    py.detach(|| fixed::count_l_cliques(&g.inner, size))
        .map_err(py_err)
}

#[pyfunction]
fn triangles(py: Python<'_>, g: &Graph) -> Vec<[usize; 3]> {
    py.detach(|| fixed::list_triangles(&g.inner))
}

#[pyfunction]
fn remove_triangles(py: Python<'_>, g: &Graph) -> Graph {
    Graph {
        inner: py.detach(|| fixed::remove_triangles(&g.inner)),
    }
}

/// Common neighbors of each vertex set.
#[pyfunction]
fn common_neighbors(g: &Graph, sets: Vec<Vec<usize>>) -> PyResult<Vec<Vec<usize>>> {
    let fam = kdegen::decompose(&g.inner);
    biclique::common_neighbors_batch(&fam, &sets).map_err(py_err)
}

/// Maximal bicliques as `(a, b)` pairs.
#[pyfunction]
fn maximal_bicliques(py: Python<'_>, g: &Graph) -> Vec<(Vec<usize>, Vec<usize>)> {
    py.detach(|| biclique::list_maximal_bicliques(&g.inner))
        .into_iter()
        .map(|b| (b.a, b.b))
        .collect()
}

/// A witness `(a, b)` with `|a| = r` and `|b| = l`, or `None`.
#[pyfunction]
#[pyo3(signature = (g, r, l, induced=false))]
fn find_biclique(
    py: Python<'_>,
    g: &Graph,
    r: usize,
    l: usize,
    induced: bool,
) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
    let found = py.detach(|| {
        if induced {
            biclique::solve_induced_rl_biclique(&g.inner, r, l)
        } else {
            biclique::solve_rl_biclique(&g.inner, r, l)
        }
    });
    Ok(found.map_err(py_err)?.map(|b| (b.a, b.b)))
}

/// `(cover, lp_lower_bound)`.
#[pyfunction]
#[pyo3(signature = (g, remove_triangles=false))]
fn vertex_cover(py: Python<'_>, g: &Graph, remove_triangles: bool) -> (Vec<usize>, f64) {
    let res = py.detach(|| {
        approx::vertex_cover_approx_with(&g.inner, VertexCoverOptions { remove_triangles })
    });
    let lp = res.lp_lower_bound();
    (res.cover, lp)
}

/// A maximum clique (`"exact"`) or a large one (`"greedy"`).
#[pyfunction]
#[pyo3(signature = (g, solver="exact"))]
fn max_clique(py: Python<'_>, g: &Graph, solver: &str) -> PyResult<Vec<usize>> {
    let result = match solver {
        "exact" => py.detach(|| approx::max_clique_approx(&g.inner, &ExactSolver)),
        "greedy" => py.detach(|| approx::max_clique_approx(&g.inner, &GreedySolver)),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown solver '{other}', expected exact or greedy"
            )))
        }
    };
    result.map_err(py_err)
}

#[pymodule]
fn pykdegen(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<SuffixIndex>()?;
    m.add_function(wrap_pyfunction!(degeneracy, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(cliques, m)?)?;
    m.add_function(wrap_pyfunction!(count_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(triangles, m)?)?;
    m.add_function(wrap_pyfunction!(remove_triangles, m)?)?;
    m.add_function(wrap_pyfunction!(common_neighbors, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_bicliques, m)?)?;
    m.add_function(wrap_pyfunction!(find_biclique, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_cover, m)?)?;
    m.add_function(wrap_pyfunction!(max_clique, m)?)?;
    Ok(())
}
