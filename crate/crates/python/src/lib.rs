//! Python bindings: E-polynomials, Hodge diamonds, toric bases, the family
//! catalog and LTP verdicts.

use ltp_hodge::bases::BaseSpace;
use ltp_hodge::catalog::{self, find_family};
use ltp_hodge::ltp;
use ltp_hodge::motive::{self, EPolynomial, HodgeDiamond};
use ltp_hodge::toric;
use num_bigint::BigInt;
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Hodge–Deligne polynomial with integer coefficients.
#[pyclass(
    name = "EPolynomial",
    module = "ltp_hodge",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyEPolynomial(EPolynomial);

#[pymethods]
impl PyEPolynomial {
    /// Build from `(p, q, coefficient)` triples; repeated monomials add up.
    #[new]
    #[pyo3(signature = (terms = Vec::new()))]
    fn new(terms: Vec<(u32, u32, BigInt)>) -> Self {
        PyEPolynomial(EPolynomial::from_terms(terms))
    }

    fn coefficient(&self, p: u32, q: u32) -> BigInt {
        self.0.coefficient(p, q)
    }

    fn terms(&self) -> Vec<(u32, u32, BigInt)> {
        self.0.terms().map(|(p, q, c)| (p, q, c.clone())).collect()
    }

    fn euler_char(&self) -> BigInt {
        self.0.euler_char()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyEPolynomial(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyEPolynomial(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyEPolynomial(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        PyEPolynomial(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("EPolynomial({})", self.0)
    }
}

#[pyclass(
    name = "HodgeDiamond",
    module = "ltp_hodge",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
struct PyHodgeDiamond(HodgeDiamond);

#[pymethods]
impl PyHodgeDiamond {
    #[new]
    fn new(dim: usize, rows: Vec<Vec<u64>>) -> PyResult<Self> {
        HodgeDiamond::new(dim, rows)
            .map(PyHodgeDiamond)
            .map_err(value_err)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u64>> {
        self.0.rows().to_vec()
    }

    fn h(&self, p: usize, q: usize) -> u64 {
        self.0.h(p, q)
    }

    fn euler_char(&self) -> i64 {
        self.0.euler_char()
    }

    fn to_e_polynomial(&self) -> PyEPolynomial {
        PyEPolynomial(self.0.to_e_polynomial())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "HodgeDiamond(dim={}, rows={:?})",
            self.0.dim(),
            self.0.rows()
        )
    }
}

#[pyfunction]
fn e_projective(n: u32) -> PyEPolynomial {
    PyEPolynomial(motive::e_projective(n))
}

#[pyfunction]
fn e_curve(g: u32) -> PyEPolynomial {
    PyEPolynomial(motive::e_curve(g))
}

#[pyfunction]
fn e_k3() -> PyEPolynomial {
    PyEPolynomial(motive::e_k3())
}

#[pyfunction]
fn e_projective_bundle(base: &PyEPolynomial, fiber_rank: u32) -> PyResult<PyEPolynomial> {
    if fiber_rank == 0 {
        return Err(PyValueError::new_err("fiber_rank must be >= 1"));
    }
    Ok(PyEPolynomial(motive::e_projective_bundle(
        &base.0, fiber_rank,
    )))
}

#[pyfunction]
fn e_blowup(
    ambient: &PyEPolynomial,
    center: &PyEPolynomial,
    codim: u32,
) -> PyResult<PyEPolynomial> {
    motive::e_blowup(&ambient.0, &center.0, codim)
        .map(PyEPolynomial)
        .map_err(value_err)
}

#[pyfunction]
fn diamond_from_e(e: &PyEPolynomial, dim: usize) -> PyResult<PyHodgeDiamond> {
    motive::diamond_from_e(&e.0, dim)
        .map(PyHodgeDiamond)
        .map_err(value_err)
}

type FanTuple = (String, Vec<[i64; 3]>, Vec<[usize; 3]>);
type Table3Row = (String, usize, String, i64, i64, i64, i64);

fn fan(id: usize) -> PyResult<toric::Fan3> {
    toric::builtin_fan(id).map_err(|e| PyKeyError::new_err(e.to_string()))
}

/// `(name, rays, cones)` of a built-in toric Fano 3-fold.
#[pyfunction]
fn toric_fan(id: usize) -> PyResult<FanTuple> {
    let f = fan(id)?;
    Ok((f.name, f.rays, f.cones))
}

#[pyfunction]
fn anticanonical_degree(id: usize) -> PyResult<i64> {
    toric::anticanonical_degree(&fan(id)?).map_err(value_err)
}

#[pyfunction]
fn toric_hodge(id: usize) -> PyResult<PyHodgeDiamond> {
    toric::toric_hodge(&fan(id)?)
        .map(PyHodgeDiamond)
        .map_err(value_err)
}

#[pyfunction]
fn weierstrass_anticanonical_h0(id: usize) -> PyResult<u64> {
    toric::weierstrass_anticanonical_h0(&fan(id)?).map_err(value_err)
}

fn parse_base(descriptor: &str) -> PyResult<BaseSpace> {
    descriptor.parse().map_err(value_err)
}

#[pyclass(name = "Verdict", module = "ltp_hodge", frozen)]
struct PyVerdict(ltp::LtpVerdict);

#[pymethods]
impl PyVerdict {
    #[getter]
    fn family(&self) -> &str {
        &self.0.family
    }

    #[getter]
    fn base(&self) -> &str {
        &self.0.base
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.total_dim
    }

    #[getter]
    fn holds(&self) -> bool {
        self.0.holds
    }

    #[getter]
    fn designated_counterexample(&self) -> bool {
        self.0.designated_counterexample
    }

    /// `(p, q, lhs, rhs)` for every compared entry.
    #[getter]
    fn comparisons(&self) -> Vec<(u32, u32, u64, u64)> {
        self.0
            .compared
            .iter()
            .map(|c| (c.p, c.q, c.lhs, c.rhs))
            .collect()
    }

    #[getter]
    fn caveats(&self) -> Vec<String> {
        self.0.caveats.iter().map(ToString::to_string).collect()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Verdict(family={:?}, base={:?}, holds={})",
            self.0.family, self.0.base, self.0.holds
        )
    }
}

/// LTP verdict for `family` over `base` (the family's default base if omitted).
#[pyfunction]
#[pyo3(signature = (family, base = None))]
fn verify(family: &str, base: Option<&str>) -> PyResult<PyVerdict> {
    let f = find_family(family).map_err(|e| PyKeyError::new_err(e.to_string()))?;
    let b = match base {
        Some(d) => parse_base(d)?,
        None => f.default_base(),
    };
    ltp::verdict(&f, &b).map(PyVerdict).map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (base = "rational:K2=9"))]
fn table1_sweep(base: &str) -> PyResult<Vec<PyVerdict>> {
    let b = parse_base(base)?;
    ltp::table1_sweep(&b)
        .map(|vs| vs.into_iter().map(PyVerdict).collect())
        .map_err(value_err)
}

/// Rows `(kind, base_id, base_name, h11, h31, h22, chi)`.
#[pyfunction]
fn table3() -> PyResult<Vec<Table3Row>> {
    let cells = ltp::table3().map_err(value_err)?;
    Ok(cells
        .into_iter()
        .map(|c| (c.kind, c.base_id, c.base_name, c.h11, c.h31, c.h22, c.chi))
        .collect())
}

/// `(h11, h12, h13, h22, chi)` of an E8/E7/E6 4-fold over a 3-dimensional base.
#[pyfunction]
fn fourfold_hodge(family: &str, base: &str) -> PyResult<(i64, i64, i64, i64, i64)> {
    let f = find_family(family).map_err(|e| PyKeyError::new_err(e.to_string()))?;
    let h = catalog::fourfold_hodge(&f, &parse_base(base)?).map_err(value_err)?;
    Ok((h.h11, h.h12, h.h13, h.h22, h.chi))
}

#[pyfunction]
fn family_ids() -> Vec<String> {
    catalog::families().into_iter().map(|f| f.id).collect()
}

/// Registry records as a JSON array.
#[pyfunction]
fn families_json() -> PyResult<String> {
    let records: Vec<_> = catalog::families().iter().map(|f| f.record()).collect();
    serde_json::to_string(&records).map_err(value_err)
}

#[pymodule]
#[pyo3(name = "ltp_hodge")]
fn ltp_hodge_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyEPolynomial>()?;
    m.add_class::<PyHodgeDiamond>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(e_projective, m)?)?;
    m.add_function(wrap_pyfunction!(e_curve, m)?)?;
    m.add_function(wrap_pyfunction!(e_k3, m)?)?;
    m.add_function(wrap_pyfunction!(e_projective_bundle, m)?)?;
    m.add_function(wrap_pyfunction!(e_blowup, m)?)?;
    m.add_function(wrap_pyfunction!(diamond_from_e, m)?)?;
    m.add_function(wrap_pyfunction!(toric_fan, m)?)?;
    m.add_function(wrap_pyfunction!(anticanonical_degree, m)?)?;
    m.add_function(wrap_pyfunction!(toric_hodge, m)?)?;
    m.add_function(wrap_pyfunction!(weierstrass_anticanonical_h0, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(table1_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(table3, m)?)?;
    m.add_function(wrap_pyfunction!(fourfold_hodge, m)?)?;
    m.add_function(wrap_pyfunction!(family_ids, m)?)?;
    m.add_function(wrap_pyfunction!(families_json, m)?)?;
    Ok(())
}
