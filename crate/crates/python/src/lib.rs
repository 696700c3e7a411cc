//! Python bindings: field elements, instances, Moufang points, blocks and
//! the verifier.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use f4moufang::blocks::{tau_prime, Block};
use f4moufang::parse::{parse_instance, parse_k, parse_l};
use f4moufang::uinf::UInfElem;
use f4moufang::validate::{validate, Outcome};
use f4moufang::verify::{run, Suite, SuiteConfig};
use f4moufang::{Eq3Slot, Error, FieldInstance, KElem, MoufangPoint, R1Coord, R2Coord, Relations};

fn err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::Instance(_) | Error::Precondition(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

/// An element of `GF(2)(s, t)`.
#[pyclass(name = "K", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyK(KElem);

#[pymethods]
impl PyK {
    #[new]
    fn new(src: &str) -> PyResult<Self> {
        parse_k(src).map(PyK).map_err(err)
    }

    fn __add__(&self, o: &PyK) -> PyK {
        PyK(self.0.add(&o.0))
    }

    fn __mul__(&self, o: &PyK) -> PyK {
        PyK(self.0.mul(&o.0))
    }

    fn __truediv__(&self, o: &PyK) -> PyResult<PyK> {
        self.0.div(&o.0).map(PyK).map_err(err)
    }

    fn phi(&self) -> PyK {
        PyK(self.0.phi())
    }

    fn theta(&self) -> PyResult<PyK> {
        self.0.theta().map(PyK).map_err(err)
    }

    fn in_kprime(&self) -> bool {
        self.0.in_kprime()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("K('{}')", self.0)
    }
}

/// `delta`, `phi(e)`, `beta` and `alpha`.
#[pyclass(name = "Instance", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyInstance(FieldInstance);

#[pymethods]
impl PyInstance {
    #[staticmethod]
    fn default() -> Self {
        PyInstance(FieldInstance::default())
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_instance(text).map(PyInstance).map_err(err)
    }

    /// `(name, outcome, detail)` for each instance check.
    #[pyo3(signature = (seed=0, samples=100, max_degree=3))]
    fn validate(
        &self,
        seed: u64,
        samples: usize,
        max_degree: usize,
    ) -> Vec<(String, String, String)> {
        validate(&self.0, seed, samples, max_degree)
            .checks
            .into_iter()
            .map(|c| {
                let o = match c.outcome {
                    Outcome::Pass => "pass",
                    Outcome::Fail => "fail",
                    Outcome::Inconclusive => "inconclusive",
                };
                (c.name.to_string(), o.to_string(), c.detail)
            })
            .collect()
    }

    fn __str__(&self) -> String {
        let i = &self.0;
        format!(
            "delta = {}, phiE = {}, beta = {}, alpha = {}",
            i.delta, i.phi_e, i.beta, i.alpha
        )
    }
}

/// `inf` or a label `[(x,y,a),(u,v,b)]`.
#[pyclass(name = "Point", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPoint(MoufangPoint);

#[pymethods]
impl PyPoint {
    #[staticmethod]
    fn inf() -> Self {
        PyPoint(MoufangPoint::Inf)
    }

    /// Coordinates as expressions in `s`, `t` and `e`.
    #[staticmethod]
    #[pyo3(signature = (x, y, a, u, v, b, instance=None))]
    #[allow(clippy::too_many_arguments)]
    fn label(
        x: &str,
        y: &str,
        a: &str,
        u: &str,
        v: &str,
        b: &str,
        instance: Option<&PyInstance>,
    ) -> PyResult<Self> {
        let inst = instance.map_or_else(FieldInstance::default, |i| i.0.clone());
        let l = |src: &str| parse_l(src, &inst.delta).map_err(err);
        let r1 = R1Coord::new(l(x)?, l(y)?, parse_k(a).map_err(err)?);
        let r2 = R2Coord::new(l(u)?, l(v)?, parse_k(b).map_err(err)?);
        if !r1.is_member(&inst) || !r2.is_member() {
            return Err(PyValueError::new_err(format!(
                "[{r1}, {r2}] is not a label"
            )));
        }
        Ok(PyPoint(MoufangPoint::Label(r1, r2)))
    }

    fn is_inf(&self) -> bool {
        self.0.is_inf()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Point({})", self.0)
    }
}

fn uinf(p: &PyPoint) -> PyResult<UInfElem> {
    p.0.as_uinf()
        .ok_or_else(|| PyValueError::new_err("inf is not an element of U_inf"))
}

/// The Moufang set with `U_inf` acting on the right.
#[pyclass(name = "MoufangSet", frozen)]
struct PyMoufangSet(f4moufang::MoufangSet);

#[pymethods]
impl PyMoufangSet {
    #[new]
    #[pyo3(signature = (instance=None))]
    fn new(instance: Option<&PyInstance>) -> Self {
        let inst = instance.map_or_else(FieldInstance::default, |i| i.0.clone());
        PyMoufangSet(f4moufang::MoufangSet::new(Relations::new(inst)))
    }

    /// `p^g`, with `g` given by its label.
    fn act(&self, p: &PyPoint, g: &PyPoint) -> PyResult<PyPoint> {
        self.0.act(&p.0, &uinf(g)?).map(PyPoint).map_err(err)
    }

    /// The label of the element carrying `p` to `q`.
    fn divide(&self, p: &PyPoint, q: &PyPoint) -> PyResult<PyPoint> {
        self.0
            .divide(&p.0, &q.0)
            .map(|g| PyPoint(g.into()))
            .map_err(err)
    }

    /// The absolute flag as `(point, line)` strings.
    fn flag(&self, p: &PyPoint) -> PyResult<(String, String)> {
        let f = self.0.flag(&p.0).map_err(err)?;
        Ok((f.p.to_string(), f.l.to_string()))
    }

    fn sphere_contains(&self, gnarl: &PyPoint, base: &PyPoint, p: &PyPoint) -> PyResult<bool> {
        let b = Block::sphere(gnarl.0.clone(), base.0.clone()).map_err(err)?;
        self.0.contains(&b, &p.0).map_err(err)
    }

    fn circle_contains(&self, gnarl: &PyPoint, base: &PyPoint, p: &PyPoint) -> PyResult<bool> {
        let b = Block::circle(gnarl.0.clone(), base.0.clone()).map_err(err)?;
        self.0.contains(&b, &p.0).map_err(err)
    }

    fn tau_prime(&self, p: &PyPoint) -> PyResult<PyPoint> {
        tau_prime(&self.0, &p.0).map(PyPoint).map_err(err)
    }
}

/// One verifier record.
#[pyclass(name = "Record", frozen, get_all)]
struct PyRecord {
    suite: String,
    name: String,
    anchor: String,
    status: String,
    survey: bool,
    counterexample: Option<String>,
    detail: String,
    millis: u64,
}

fn suite(name: &str) -> PyResult<Suite> {
    Suite::ALL
        .into_iter()
        .find(|s| s.name() == name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown suite '{name}'")))
}

/// Run the verifier and return its records.
#[pyfunction]
#[pyo3(signature = (suites=None, seed=0, samples=100, max_degree=3, eq3_slot=3, survey=false, instance=None))]
fn verify(
    suites: Option<Vec<String>>,
    seed: u64,
    samples: usize,
    max_degree: usize,
    eq3_slot: u8,
    survey: bool,
    instance: Option<&PyInstance>,
) -> PyResult<Vec<PyRecord>> {
    let suites = match suites {
        None => Suite::ALL.to_vec(),
        Some(v) => v.iter().map(|s| suite(s)).collect::<PyResult<_>>()?,
    };
    let eq3_slot = match eq3_slot {
        2 => Eq3Slot::Two,
        3 => Eq3Slot::Three,
        _ => return Err(PyValueError::new_err("eq3_slot must be 2 or 3")),
    };
    let cfg = SuiteConfig {
        seed,
        samples,
        max_degree,
        suites,
        eq3_slot,
        survey,
        instance: instance.map_or_else(FieldInstance::default, |i| i.0.clone()),
    };
    Ok(run(&cfg)
        .records
        .into_iter()
        .map(|r| PyRecord {
            suite: r.suite.into(),
            name: r.name.into(),
            anchor: r.anchor.into(),
            status: status_name(r.status),
            survey: r.survey,
            counterexample: r.counterexample,
            detail: r.detail,
            millis: r.millis,
        })
        .collect())
}

fn status_name(s: f4moufang::verify::Status) -> String {
    use f4moufang::verify::Status::*;
    match s {
        Pass => "pass",
        Fail => "fail",
        Skip => "skip",
    }
    .into()
}

#[pymodule(name = "f4moufang")]
fn f4moufang_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyK>()?;
    m.add_class::<PyInstance>()?;
    m.add_class::<PyPoint>()?;
    m.add_class::<PyMoufangSet>()?;
    m.add_class::<PyRecord>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
