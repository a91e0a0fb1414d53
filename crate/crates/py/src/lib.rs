//! Python bindings: exact polynomials with Gröbner/subalgebra operations,
//! nilpotent-orbit combinatorics, the abelianized algebra reports, and the
//! modular checks. Structured reports are returned as JSON strings so the
//! Python side can `json.loads` them.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use walg::abelian::{build_ab_algebra, center_image_proper, z_series, Convention};
use walg::modular::{
    build_gl3, build_sl2, build_sl3, qeta_report, theorem_d_check, NilpotentKind,
};
use walg::orbits::{self, LeviDescriptor, Partition};
use walg::poly::{self, MonomialOrder, MultiPoly, Rat};
use walg::suite::{run_suite, SuiteConfig};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(&parts).map_err(err)
}

fn convention(name: &str) -> PyResult<Convention> {
    match name {
        "printed" => Ok(Convention::Printed),
        "worked" => Ok(Convention::WorkedExample),
        _ => Err(err(format!("unknown convention {name:?}"))),
    }
}

/// Exact multivariate polynomial over the rationals.
#[pyclass(name = "Poly", from_py_object)]
#[derive(Clone)]
struct PyPoly {
    inner: MultiPoly,
}

#[pymethods]
impl PyPoly {
    /// The variable `vars[idx]` as a polynomial.
    #[staticmethod]
    fn var(vars: Vec<String>, idx: usize) -> PyResult<Self> {
        if idx >= vars.len() {
            return Err(err("variable index out of range"));
        }
        Ok(PyPoly { inner: MultiPoly::var(&vars, idx) })
    }

    /// An integer constant in the given variable set.
    #[staticmethod]
    fn constant(vars: Vec<String>, value: i64) -> Self {
        PyPoly { inner: MultiPoly::from_int(&vars, value) }
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<Self> {
        if self.inner.vars() != other.inner.vars() {
            return Err(err("polynomials live in different variable sets"));
        }
        Ok(PyPoly { inner: self.inner.add(&other.inner) })
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<Self> {
        if self.inner.vars() != other.inner.vars() {
            return Err(err("polynomials live in different variable sets"));
        }
        Ok(PyPoly { inner: self.inner.sub(&other.inner) })
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<Self> {
        if self.inner.vars() != other.inner.vars() {
            return Err(err("polynomials live in different variable sets"));
        }
        Ok(PyPoly { inner: self.inner.mul(&other.inner) })
    }

    fn __pow__(&self, exp: u32, _mod: Option<u32>) -> Self {
        PyPoly { inner: self.inner.pow(exp) }
    }

    fn __eq__(&self, other: &PyPoly) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.inner)
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }

    /// Evaluate at integer values of the variables; returns "num/den".
    fn eval(&self, values: Vec<i64>) -> PyResult<String> {
        if values.len() != self.inner.vars().len() {
            return Err(err("one value per variable required"));
        }
        let vals: Vec<Rat> = values.into_iter().map(|v| Rat::from_integer(v.into())).collect();
        Ok(self.inner.eval(&vals).to_string())
    }

    /// The canonical JSON encoding, as a string.
    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("serializable")
    }
}

fn monomial_order(name: &str) -> PyResult<MonomialOrder> {
    match name {
        "lex" => Ok(MonomialOrder::Lex),
        "degrevlex" => Ok(MonomialOrder::DegRevLex),
        _ => Err(err(format!("unknown monomial order {name:?}"))),
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
#[pyfunction]
#[pyo3(signature = (gens, order = "degrevlex"))]
fn groebner_basis(gens: Vec<PyPoly>, order: &str) -> PyResult<Vec<PyPoly>> {
    let gens: Vec<MultiPoly> = gens.into_iter().map(|p| p.inner).collect();
    let gb = poly::groebner(&gens, monomial_order(order)?).map_err(err)?;
    Ok(gb.elements().iter().map(|p| PyPoly { inner: p.clone() }).collect())
}

/// Whether `f` lies in the ideal generated by `gens`.
#[pyfunction]
#[pyo3(signature = (f, gens, order = "degrevlex"))]
fn ideal_contains(f: &PyPoly, gens: Vec<PyPoly>, order: &str) -> PyResult<bool> {
    let gens: Vec<MultiPoly> = gens.into_iter().map(|p| p.inner).collect();
    let gb = poly::groebner(&gens, monomial_order(order)?).map_err(err)?;
    gb.contains(&f.inner).map_err(err)
}

/// Whether `f` lies in the unital subalgebra generated by `gens`.
#[pyfunction]
fn subalgebra_contains(f: &PyPoly, gens: Vec<PyPoly>) -> PyResult<bool> {
    let gens: Vec<MultiPoly> = gens.into_iter().map(|p| p.inner).collect();
    poly::subalgebra_contains(&f.inner, &gens).map_err(err)
}

/// Orbit dimension data: (orbit_dim, d_e, r).
#[pyfunction]
fn orbit_profile(parts: Vec<u32>) -> PyResult<(u32, u32, u32)> {
    let p = orbits::orbit_profile(&partition(parts)?);
    Ok((p.orbit_dim, p.d_e, p.r))
}

#[pyfunction]
fn conjugate(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(partition(parts)?.conjugate().parts().to_vec())
}

/// Lusztig-Spaltenstein induction from the Levi with the given block sizes.
#[pyfunction]
fn induce(levi: Vec<u32>, orbit_list: Vec<Vec<u32>>) -> PyResult<Vec<u32>> {
    let levi = LeviDescriptor::new(&levi).map_err(err)?;
    let orbit_list: Vec<Partition> = orbit_list
        .into_iter()
        .map(partition)
        .collect::<PyResult<_>>()?;
    Ok(orbits::induce(&levi, &orbit_list).map_err(err)?.parts().to_vec())
}

#[pyfunction]
fn richardson(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(orbits::richardson(&partition(parts)?).parts().to_vec())
}

#[pyfunction]
fn is_rigid(parts: Vec<u32>) -> PyResult<bool> {
    Ok(orbits::is_rigid(&partition(parts)?))
}

#[pyfunction]
fn krull_dim(parts: Vec<u32>) -> PyResult<u32> {
    Ok(orbits::krull_dim_ab(&partition(parts)?))
}

/// Free generators of the abelianized algebra, as strings.
#[pyfunction]
#[pyo3(signature = (parts, order = 10, conv = "printed"))]
fn free_generators(parts: Vec<u32>, order: usize, conv: &str) -> PyResult<Vec<String>> {
    let alg = build_ab_algebra(&partition(parts)?, order, convention(conv)?).map_err(err)?;
    Ok(alg.free_gens().iter().map(|g| g.to_string()).collect())
}

/// Coefficients of z(u) as Poly objects; index k is the coefficient of
/// u^{N-k}.
#[pyfunction]
#[pyo3(signature = (parts, order = 10, conv = "printed"))]
fn zpoly(parts: Vec<u32>, order: usize, conv: &str) -> PyResult<Vec<PyPoly>> {
    let alg = build_ab_algebra(&partition(parts)?, order, convention(conv)?).map_err(err)?;
    let z = z_series(&alg).map_err(err)?;
    Ok(z.z_polys.into_iter().map(|p| PyPoly { inner: p }).collect())
}

/// (proper, witness): whether the centre lands in a proper subalgebra.
#[pyfunction]
#[pyo3(signature = (parts, order = 10, conv = "printed"))]
fn center_test(parts: Vec<u32>, order: usize, conv: &str) -> PyResult<(bool, Option<String>)> {
    let alg = build_ab_algebra(&partition(parts)?, order, convention(conv)?).map_err(err)?;
    let (proper, witness) = center_image_proper(&alg).map_err(err)?;
    Ok((proper, witness.map(|g| g.to_string())))
}

/// Modular report as a JSON string; check is "qeta" or "theoremD".
#[pyfunction]
#[pyo3(signature = (algebra, p, check = "qeta", nilpotent = "regular"))]
fn modular_report(algebra: &str, p: u64, check: &str, nilpotent: &str) -> PyResult<String> {
    let l = match algebra {
        "sl2" => build_sl2(p),
        "gl3" => build_gl3(p),
        "sl3" => build_sl3(p),
        _ => return Err(err(format!("unknown algebra {algebra:?}"))),
    }
    .map_err(err)?;
    let kind = match nilpotent {
        "regular" => NilpotentKind::Regular,
        "minimal" => NilpotentKind::Minimal,
        _ => return Err(err(format!("unknown nilpotent class {nilpotent:?}"))),
    };
    let rep = match check {
        "qeta" => qeta_report(&l, kind),
        "theoremD" | "theoremd" => theorem_d_check(&l, kind),
        _ => return Err(err(format!("unknown check {check:?}"))),
    }
    .map_err(err)?;
    Ok(serde_json::to_string(&rep).expect("serializable"))
}

/// Full regression-suite report as a JSON string.
#[pyfunction]
#[pyo3(signature = (seed = 0, only = None, max_n = None))]
fn suite(seed: u64, only: Option<String>, max_n: Option<u32>) -> String {
    let report = run_suite(&SuiteConfig { seed, max_n, only });
    serde_json::to_string(&report).expect("serializable")
}

#[pymodule]
fn walg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_contains, m)?)?;
    m.add_function(wrap_pyfunction!(subalgebra_contains, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_profile, m)?)?;
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(induce, m)?)?;
    m.add_function(wrap_pyfunction!(richardson, m)?)?;
    m.add_function(wrap_pyfunction!(is_rigid, m)?)?;
    m.add_function(wrap_pyfunction!(krull_dim, m)?)?;
    m.add_function(wrap_pyfunction!(free_generators, m)?)?;
    m.add_function(wrap_pyfunction!(zpoly, m)?)?;
    m.add_function(wrap_pyfunction!(center_test, m)?)?;
    m.add_function(wrap_pyfunction!(modular_report, m)?)?;
    m.add_function(wrap_pyfunction!(suite, m)?)?;
    Ok(())
}
