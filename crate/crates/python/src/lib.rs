//! Python module `permclass`.
//!
//! Permutations are exchanged as `Permutation` objects or lists of 1-based
//! images; exact integers become Python `int` and rational weights
//! `fractions.Fraction`.

use num_bigint::{BigInt, BigUint};
use permclass::partition::{self, format_real, precision_digits};
use permclass::{MonomialMatrix, Scalar, Similarity};
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyTuple;

fn value_error(e: permclass::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(
    name = "Permutation",
    module = "permclass",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyPermutation(permclass::Permutation);

impl From<permclass::Permutation> for PyPermutation {
    fn from(p: permclass::Permutation) -> Self {
        PyPermutation(p)
    }
}

#[pymethods]
impl PyPermutation {
    /// A permutation from its 1-based images `[σ(1), ..., σ(n)]`.
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        permclass::Permutation::new(images)
            .map(Self)
            .map_err(value_error)
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        Self(permclass::Permutation::identity(n))
    }

    /// Reads a dense 0-1 matrix given as a list of rows.
    #[staticmethod]
    fn from_matrix(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        permclass::perm_from_matrix(&rows)
            .map(Self)
            .map_err(value_error)
    }

    /// Parses the one-line text format or a dense 0-1 matrix.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        permclass::text::parse_permutation_input(text, &Default::default())
            .map(Self)
            .map_err(value_error)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn images(&self) -> Vec<usize> {
        self.0.images()
    }

    fn to_matrix(&self) -> Vec<Vec<u8>> {
        self.0.to_dense()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    /// Matrix product `self · other`.
    fn compose(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(value_error)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn pow(&self, m: u64) -> Self {
        Self(self.0.pow(m))
    }

    /// `t⁻¹ · self · t`.
    fn conjugate_by(&self, t: PyRef<'_, Self>) -> PyResult<Self> {
        self.0.conjugate_by(&t.0).map(Self).map_err(value_error)
    }

    fn __matmul__(&self, other: PyRef<'_, Self>) -> PyResult<Self> {
        self.compose(other)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    /// Image of the 1-based index `j`.
    fn __call__(&self, j: usize) -> PyResult<usize> {
        if j == 0 || j > self.0.n() {
            return Err(PyIndexError::new_err(format!(
                "index {j} outside 1..{}",
                self.0.n()
            )));
        }
        Ok(self.0.image(j))
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.images())
    }
}

fn perm(p: permclass::Permutation) -> PyPermutation {
    p.into()
}

fn cycle_type_tuple(ct: &permclass::CycleType) -> (usize, Vec<usize>) {
    (ct.fixed_points(), ct.lengths().to_vec())
}

/// `(t, [k1, ..., kr])`: fixed points and sorted cycle lengths.
#[pyfunction]
fn cycle_type(p: PyRef<'_, PyPermutation>) -> (usize, Vec<usize>) {
    cycle_type_tuple(&permclass::cycle_type(&p.0))
}

#[pyfunction]
fn orbit_partition(p: PyRef<'_, PyPermutation>) -> Vec<Vec<usize>> {
    permclass::orbit_partition(&p.0).into_orbits()
}

/// `(B, T, cycle_type)` with `T⁻¹ A T = B`.
#[pyfunction]
fn canonical_form(
    p: PyRef<'_, PyPermutation>,
) -> (PyPermutation, PyPermutation, (usize, Vec<usize>)) {
    let d = permclass::canonical_form(&p.0);
    (
        perm(d.canonical),
        perm(d.conjugator),
        cycle_type_tuple(&d.cycle_type),
    )
}

type Summand = (usize, Vec<(usize, usize)>);

/// `([(k, [(row, col), ...]), ...], fixed_points)`.
#[pyfunction]
fn cycle_summands(p: PyRef<'_, PyPermutation>) -> (Vec<Summand>, Vec<usize>) {
    let d = permclass::cycle_summands(&p.0);
    let summands = d
        .orders
        .iter()
        .zip(&d.summands)
        .map(|(&k, q)| (k, q.entries()))
        .collect();
    let fixed = d
        .fixed_diagonal
        .entries()
        .into_iter()
        .map(|(_, c)| c)
        .collect();
    (summands, fixed)
}

/// `[(k, P), ...]` with commuting single-cycle factors whose product is `A`.
#[pyfunction]
fn cycle_factors(p: PyRef<'_, PyPermutation>) -> Vec<(usize, PyPermutation)> {
    let f = permclass::cycle_factors(&p.0);
    f.orders
        .into_iter()
        .zip(f.factors.into_iter().map(perm))
        .collect()
}

/// A witness `W` with `W⁻¹ A W = B`, or `None` when the two are not similar.
#[pyfunction]
fn similarity_witness(
    a: PyRef<'_, PyPermutation>,
    b: PyRef<'_, PyPermutation>,
) -> PyResult<Option<PyPermutation>> {
    match permclass::are_permutation_similar(&a.0, &b.0).map_err(value_error)? {
        Similarity::Similar { witness } => Ok(Some(perm(witness))),
        Similarity::NotSimilar => Ok(None),
    }
}

#[pyfunction]
fn partition_exact(n: u64) -> BigUint {
    permclass::partition_exact(n)
}

/// Decimal string of the Hardy-Ramanujan estimate.
#[pyfunction]
#[pyo3(signature = (n, digits = None))]
fn hr_estimate(n: u64, digits: Option<usize>) -> PyResult<String> {
    let digits = digits.unwrap_or_else(precision_digits);
    let x = partition::hr_estimate_with(n, digits).map_err(value_error)?;
    Ok(format_real(&x, digits))
}

#[pyfunction]
#[pyo3(signature = (n, digits = None))]
fn modified_estimate_small(n: u64, digits: Option<usize>) -> PyResult<BigUint> {
    partition::modified_estimate_small_with(n, digits.unwrap_or_else(precision_digits))
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (n, digits = None))]
fn modified_estimate_large(n: u64, digits: Option<usize>) -> PyResult<BigUint> {
    partition::modified_estimate_large_with(n, digits.unwrap_or_else(precision_digits))
        .map_err(value_error)
}

#[pyfunction]
fn class_representatives(n: usize) -> Vec<PyPermutation> {
    permclass::enumerate_class_representatives(n)
        .map(perm)
        .collect()
}

fn fraction<'py>(py: Python<'py>, x: &Scalar) -> PyResult<Bound<'py, PyAny>> {
    let cls = py.import("fractions")?.getattr("Fraction")?;
    cls.call1((x.numer().clone(), x.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, xs: &[Scalar]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    xs.iter().map(|x| fraction(py, x)).collect()
}

/// Accepts rows of `int`, `Fraction`, or strings such as `"3/2"` and `"-0.5"`.
fn monomial_arg(rows: &Bound<'_, PyAny>) -> PyResult<MonomialMatrix> {
    let mut dense = Vec::new();
    for row in rows.try_iter()? {
        let mut out = Vec::new();
        for x in row?.try_iter()? {
            let x = x?;
            let text = match x.extract::<BigInt>() {
                Ok(i) => i.to_string(),
                Err(_) => x.str()?.to_string(),
            };
            let value = text
                .parse::<Scalar>()
                .map_err(|_| PyValueError::new_err(format!("not a rational number: {text:?}")))?;
            out.push(value);
        }
        dense.push(out);
    }
    permclass::monomial_from_matrix(&dense).map_err(value_error)
}

/// `(P, D1, D2)` with `M = P·diag(D2) = diag(D1)·P`.
#[pyfunction]
fn monomial_split<'py>(py: Python<'py>, rows: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyTuple>> {
    let s = permclass::monomial_split(&monomial_arg(rows)?);
    (
        perm(s.perm),
        fractions(py, &s.row_diag)?,
        fractions(py, &s.col_diag)?,
    )
        .into_pyobject(py)
}

/// `(T, Y, D3, D4)` with `T⁻¹ M T = diag(D3)·Y = Y·diag(D4)`.
#[pyfunction]
fn monomial_canonical<'py>(
    py: Python<'py>,
    rows: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyTuple>> {
    let c = permclass::monomial_canonical(&monomial_arg(rows)?);
    (
        perm(c.conjugator),
        perm(c.canonical_perm),
        fractions(py, &c.left_diag)?,
        fractions(py, &c.right_diag)?,
    )
        .into_pyobject(py)
}

#[pymodule(name = "permclass")]
fn permclass_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_function(wrap_pyfunction!(cycle_type, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_partition, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_summands, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_factors, m)?)?;
    m.add_function(wrap_pyfunction!(similarity_witness, m)?)?;
    m.add_function(wrap_pyfunction!(partition_exact, m)?)?;
    m.add_function(wrap_pyfunction!(hr_estimate, m)?)?;
    m.add_function(wrap_pyfunction!(modified_estimate_small, m)?)?;
    m.add_function(wrap_pyfunction!(modified_estimate_large, m)?)?;
    m.add_function(wrap_pyfunction!(class_representatives, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_split, m)?)?;
    m.add_function(wrap_pyfunction!(monomial_canonical, m)?)?;
    Ok(())
}
