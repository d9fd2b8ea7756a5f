//! Python bindings for `wiener_core`.

use pyo3::create_exception;
use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use wiener_core::{self as core, generators, io, Error, Recognition};

create_exception!(wiener_cut, WienerError, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ArithmeticOverflow => PyOverflowError::new_err(e.to_string()),
        other => WienerError::new_err(other.to_string()),
    }
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object, module = "wiener_cut")]
#[derive(Clone)]
pub struct Graph {
    inner: core::Graph,
}

impl Graph {
    fn wrap(inner: core::Graph) -> Self {
        Graph { inner }
    }
}

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Graph::new(n, edges).map(Graph::wrap).map_err(to_py)
    }

    /// Parses the `n m` edge-list text format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        io::parse_edge_list(text).map(Graph::wrap).map_err(to_py)
    }

    fn to_edge_list(&self) -> String {
        io::write_edge_list(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(to_py(Error::VertexOutOfRange {
                vertex: v,
                n: self.inner.vertex_count(),
            }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn distances_from(&self, s: usize) -> PyResult<Vec<Option<u32>>> {
        self.inner.bfs_distances(s).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Outcome of partial-cube recognition.
#[pyclass(frozen, get_all, module = "wiener_cut")]
pub struct PartialCubeResult {
    is_partial_cube: bool,
    /// Failure kind, e.g. `"NotBipartite"`; `None` for partial cubes.
    reason: Option<String>,
    message: Option<String>,
    classes: Vec<Vec<usize>>,
    labels: Vec<String>,
    certificate_json: Option<String>,
}

#[pymethods]
impl PartialCubeResult {
    fn __bool__(&self) -> bool {
        self.is_partial_cube
    }

    fn __repr__(&self) -> String {
        match &self.message {
            None => format!("PartialCubeResult(k={})", self.classes.len()),
            Some(m) => format!("PartialCubeResult(not a partial cube: {m})"),
        }
    }
}

/// Outcome of validating a cut partition or scaled family.
#[pyclass(frozen, get_all, module = "wiener_cut")]
pub struct Validation {
    valid: bool,
    counterexample: Option<String>,
    /// Side sizes `(n1, n2)` per cut.
    side_sizes: Vec<(usize, usize)>,
}

#[pymethods]
impl Validation {
    fn __bool__(&self) -> bool {
        self.valid
    }

    fn __repr__(&self) -> String {
        match &self.counterexample {
            None => "Validation(valid)".to_string(),
            Some(c) => format!("Validation(invalid: {c})"),
        }
    }
}

#[pyfunction]
fn wiener_brute(g: &Graph) -> PyResult<u64> {
    core::wiener_brute(&g.inner).map(|w| w.get()).map_err(to_py)
}

/// Cut-method Wiener index for a partial cube, with its Θ-classes.
#[pyfunction]
#[pyo3(name = "wiener_cut")]
fn cut_method(g: &Graph) -> PyResult<(u64, Vec<Vec<usize>>)> {
    let (w, p) = core::wiener_cut(&g.inner).map_err(to_py)?;
    Ok((w.get(), p.classes().to_vec()))
}

#[pyfunction]
#[pyo3(signature = (g, threads = 1))]
fn theta_classes(g: &Graph, threads: usize) -> PyResult<Vec<Vec<usize>>> {
    let opts = core::DistanceOptions {
        threads,
        ..Default::default()
    };
    let d = core::all_pairs_with(&g.inner, &opts).map_err(to_py)?;
    let p = core::theta_classes(&g.inner, &d).map_err(to_py)?;
    Ok(p.classes().to_vec())
}

#[pyfunction]
fn is_partial_cube(g: &Graph) -> PyResult<PartialCubeResult> {
    let r = match core::is_partial_cube(&g.inner).map_err(to_py)? {
        Recognition::PartialCube {
            certificate,
            partition,
        } => PartialCubeResult {
            is_partial_cube: true,
            reason: None,
            message: None,
            classes: partition.classes().to_vec(),
            labels: (0..certificate.vertex_count())
                .map(|v| certificate.label(v))
                .collect(),
            certificate_json: Some(certificate.to_json(&partition)),
        },
        Recognition::NotPartialCube(why) => PartialCubeResult {
            is_partial_cube: false,
            reason: Some(why.kind().to_string()),
            message: Some(why.to_string()),
            classes: Vec::new(),
            labels: Vec::new(),
            certificate_json: None,
        },
    };
    Ok(r)
}

fn validation(report: &core::ValidationReport) -> Validation {
    Validation {
        valid: report.is_valid(),
        counterexample: report.first_counterexample().map(|c| c.to_string()),
        side_sizes: report.cuts.iter().map(|c| (c.n1, c.n2)).collect(),
    }
}

/// Checks that `cuts` (edge-index sets) form a valid scaled cut family.
#[pyfunction]
#[pyo3(signature = (g, cuts, scale = 1, check_iii = false))]
fn verify_partition(
    g: &Graph,
    cuts: Vec<Vec<usize>>,
    scale: usize,
    check_iii: bool,
) -> PyResult<Validation> {
    let fam = core::ScaledCutFamily::from_edge_sets(&g.inner, &cuts, scale).map_err(to_py)?;
    let d = core::all_pairs(&g.inner).map_err(to_py)?;
    Ok(validation(&core::verify_family(
        &g.inner, &d, &fam, check_iii,
    )))
}

/// `(1/scale) Σ n1·n2` over a validated family.
#[pyfunction]
#[pyo3(signature = (g, cuts, scale = 1))]
fn wiener_scaled(g: &Graph, cuts: Vec<Vec<usize>>, scale: usize) -> PyResult<u64> {
    let fam = core::ScaledCutFamily::from_edge_sets(&g.inner, &cuts, scale).map_err(to_py)?;
    core::wiener_scaled(&g.inner, &fam)
        .map(|w| w.get())
        .map_err(to_py)
}

/// Number of condition (iii) violations among cross pairs of a convex partition.
#[pyfunction]
fn redundancy_violations(g: &Graph, cuts: Vec<Vec<usize>>) -> PyResult<(u64, usize)> {
    let p = core::CutPartition::from_edge_sets(&g.inner, &cuts).map_err(to_py)?;
    let d = core::all_pairs(&g.inner).map_err(to_py)?;
    let r = core::condition_iii_implied(&g.inner, &d, &p).map_err(to_py)?;
    Ok((r.pairs_checked, r.violations.len()))
}

/// Scale-2 cut family of the odd cycle `C_n`, as edge-index sets.
#[pyfunction]
fn odd_cycle_cut_family(n: usize) -> PyResult<Vec<Vec<usize>>> {
    let fam = core::odd_cycle_cut_family(n).map_err(to_py)?;
    Ok(fam.cuts().iter().map(|c| c.edge_ids().to_vec()).collect())
}

#[pyfunction]
fn hypercube(d: usize) -> PyResult<Graph> {
    generators::hypercube(d).map(Graph::wrap).map_err(to_py)
}

#[pyfunction]
fn path(n: usize) -> PyResult<Graph> {
    generators::path(n).map(Graph::wrap).map_err(to_py)
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<Graph> {
    generators::cycle(n).map(Graph::wrap).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (n, seed = 0))]
fn random_tree(n: usize, seed: u64) -> PyResult<Graph> {
    generators::random_tree(n, seed)
        .map(Graph::wrap)
        .map_err(to_py)
}

#[pyfunction]
fn ladder(m: usize) -> PyResult<Graph> {
    generators::ladder(m).map(Graph::wrap).map_err(to_py)
}

#[pyfunction]
fn grid(m: usize, l: usize) -> PyResult<Graph> {
    generators::grid(m, l).map(Graph::wrap).map_err(to_py)
}

#[pyfunction]
fn cartesian_product(g: &Graph, h: &Graph) -> PyResult<Graph> {
    generators::cartesian_product(&g.inner, &h.inner)
        .map(Graph::wrap)
        .map_err(to_py)
}

#[pyfunction]
fn circumcoronene(k: usize) -> PyResult<Graph> {
    generators::circumcoronene(k)
        .map(Graph::wrap)
        .map_err(to_py)
}

/// Benzenoid graph from axial hexagon coordinates `(q, r)`.
#[pyfunction]
fn benzenoid(cells: Vec<(i32, i32)>) -> PyResult<Graph> {
    let system = generators::HexSystem::new(cells).map_err(to_py)?;
    generators::benzenoid(&system)
        .map(Graph::wrap)
        .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "wiener_cut")]
fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("WienerError", m.py().get_type::<WienerError>())?;
    m.add_class::<Graph>()?;
    m.add_class::<PartialCubeResult>()?;
    m.add_class::<Validation>()?;
    m.add_function(wrap_pyfunction!(wiener_brute, m)?)?;
    m.add_function(wrap_pyfunction!(cut_method, m)?)?;
    m.add_function(wrap_pyfunction!(theta_classes, m)?)?;
    m.add_function(wrap_pyfunction!(is_partial_cube, m)?)?;
    m.add_function(wrap_pyfunction!(verify_partition, m)?)?;
    m.add_function(wrap_pyfunction!(wiener_scaled, m)?)?;
    m.add_function(wrap_pyfunction!(redundancy_violations, m)?)?;
    m.add_function(wrap_pyfunction!(odd_cycle_cut_family, m)?)?;
    m.add_function(wrap_pyfunction!(hypercube, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(random_tree, m)?)?;
    m.add_function(wrap_pyfunction!(ladder, m)?)?;
    m.add_function(wrap_pyfunction!(grid, m)?)?;
    m.add_function(wrap_pyfunction!(cartesian_product, m)?)?;
    m.add_function(wrap_pyfunction!(circumcoronene, m)?)?;
    m.add_function(wrap_pyfunction!(benzenoid, m)?)?;
    Ok(())
}
