//! Python bindings: delta-complexes, canonical Steenrod diagonals,
//! homology, 2-skeleton reconstruction and fundamental-group data.
//!
//! Build and use (see python/smoke_test.py for a working example):
//!
//!     cargo build --release -p steenrod-py
//!     cp target/release/libsteenrod_py.so steenrod_chains.so
//!     python3 -c "import steenrod_chains as sc; print(sc.standard_simplex(2).counts())"

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use steenrod_chains as core;
use steenrod_chains::io;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite delta-complex (immutable once built).
#[pyclass(name = "DeltaComplex", frozen)]
struct PyDeltaComplex {
    inner: core::DeltaComplex,
}

#[pymethods]
impl PyDeltaComplex {
    /// Parse and validate a complex from its JSON file format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let spec = io::parse_complex(text).map_err(value_err)?;
        let report = spec.validate();
        if !report.is_valid() {
            return Err(value_err(format!("invalid complex:\n{report}")));
        }
        Ok(PyDeltaComplex { inner: spec.build().map_err(value_err)? })
    }

    fn to_json(&self) -> String {
        io::complex_to_json(&self.inner)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Simplex counts per dimension.
    fn counts(&self) -> Vec<usize> {
        self.inner.simplex_counts()
    }

    /// Simplex ids in one dimension, in construction order.
    fn simplices(&self, dim: usize) -> Vec<String> {
        self.inner.ids(dim).to_vec()
    }

    /// The id of `F_i(simplex)`.
    fn face(&self, simplex: &str, i: usize) -> PyResult<String> {
        let r = self
            .inner
            .lookup(simplex)
            .ok_or_else(|| PyKeyError::new_err(simplex.to_string()))?;
        if r.0 == 0 || i > r.0 {
            return Err(value_err(format!("no face F_{i} on `{simplex}`")));
        }
        Ok(self.inner.id(self.inner.face(r, i)).to_string())
    }

    fn skeleton(&self, k: usize) -> PyDeltaComplex {
        PyDeltaComplex { inner: core::skeleton(&self.inner, k) }
    }

    /// Betti numbers and torsion per degree: list of (rank, [t1, t2, ...]).
    fn homology(&self) -> Vec<(usize, Vec<i64>)> {
        let h = core::homology(&core::normalized_chains(&self.inner));
        h.groups
            .into_iter()
            .map(|g| (g.betti, g.torsion.into_iter().map(|t| t as i64).collect()))
            .collect()
    }

    /// ξ(e_i ⊗ simplex) as a list of (coefficient, left id, right id).
    fn diagonal(&self, simplex: &str, i: usize) -> PyResult<Vec<(i64, String, String)>> {
        let r = self
            .inner
            .lookup(simplex)
            .ok_or_else(|| PyKeyError::new_err(simplex.to_string()))?;
        let s = core::canonical_structure(&self.inner);
        let sigma = core::Chain::generator(r.0, simplex.to_string());
        let value = s.evaluate(i, false, &sigma).map_err(value_err)?;
        Ok(value.terms().map(|(t, c)| (c, t.left.clone(), t.right.clone())).collect())
    }

    /// Number of simplices of 𝔡(X) in each dimension up to max_dim.
    fn free_simplicial_counts(&self, max_dim: usize) -> Vec<usize> {
        let s = core::freely_degenerate(&self.inner, max_dim);
        (0..=max_dim).map(|m| s.simplex_count(m)).collect()
    }

    /// Reconstruct the 2-skeleton from the canonical coalgebra alone.
    fn reconstruct(&self) -> PyResult<PyReconstruction> {
        let c = core::normalized_chains(&self.inner);
        let s = core::canonical_structure(&self.inner);
        let r = core::reconstruct_2_skeleton(&c, &s).map_err(value_err)?;
        Ok(PyReconstruction { inner: r })
    }

    /// Check that reconstruction is the identity on the 2-skeleton; returns
    /// the list of violations (empty = theorem holds on this complex).
    fn unit_comparison(&self) -> PyResult<Vec<String>> {
        let report = core::unit_comparison(&self.inner).map_err(value_err)?;
        Ok(report.violations.iter().map(|v| v.to_string()).collect())
    }

    /// Verify the canonical structure's contracts up to i_max; returns
    /// violations (always empty for canonical structures).
    fn verify_structure(&self, i_max: usize) -> Vec<String> {
        let s = core::canonical_structure(&self.inner);
        core::verify_structure(&s, i_max).violations.iter().map(|v| v.to_string()).collect()
    }

    /// Edge-path π₁ data: (generators, relators, rank, torsion).
    #[pyo3(signature = (base=None))]
    fn pi1(&self, base: Option<&str>) -> PyResult<(Vec<String>, Vec<String>, usize, Vec<i64>)> {
        if self.inner.size(0) == 0 {
            return Err(value_err("complex has no vertices"));
        }
        let base = base.map(str::to_string).unwrap_or_else(|| self.inner.ids(0)[0].clone());
        let p = core::presentation(&self.inner, &base).map_err(value_err)?;
        let inv = core::abelianization(&p);
        Ok((
            p.generators.clone(),
            p.relators.iter().map(|r| r.to_string()).collect(),
            inv.rank,
            inv.torsion.into_iter().map(|t| t as i64).collect(),
        ))
    }

    fn __repr__(&self) -> String {
        format!("DeltaComplex(name={:?}, counts={:?})", self.inner.name(), self.inner.simplex_counts())
    }
}

/// Outcome of reconstructing hom(★, N(X)) in dimensions <= 2.
#[pyclass(name = "Reconstruction", frozen)]
struct PyReconstruction {
    inner: core::ReconstructedComplex,
}

#[pymethods]
impl PyReconstruction {
    fn witness_counts(&self) -> Vec<usize> {
        self.inner.witness_counts()
    }

    /// Witness labels per dimension.
    fn witnesses(&self, dim: usize) -> Vec<String> {
        self.inner.witnesses[dim].witnesses.iter().map(|w| w.label()).collect()
    }

    /// Rejected signed candidates per dimension as (target, sign, reason).
    fn rejected(&self, dim: usize) -> Vec<(String, i64, String)> {
        self.inner.witnesses[dim]
            .rejected
            .iter()
            .map(|r| (r.target.clone(), r.sign, r.reason.to_string()))
            .collect()
    }

    fn issues(&self) -> Vec<String> {
        self.inner.issues.iter().map(|i| i.to_string()).collect()
    }

    /// The reconstructed complex itself (raises if issues were reported).
    fn complex(&self) -> PyResult<PyDeltaComplex> {
        match &self.inner.complex {
            Some(c) => Ok(PyDeltaComplex { inner: c.clone() }),
            None => Err(value_err("reconstruction reported issues; no complex available")),
        }
    }

    fn __repr__(&self) -> String {
        format!("Reconstruction(witness_counts={:?})", self.inner.witness_counts())
    }
}

/// The standard n-simplex as a delta-complex.
#[pyfunction]
fn standard_simplex(n: usize) -> PyDeltaComplex {
    PyDeltaComplex { inner: core::standard_simplex(n) }
}

/// Built-in fixture by name: point, circle, circle2, circle2_chain,
/// disjoint_edges, torus, klein, rp2, boundary_delta3.
#[pyfunction]
fn fixture(name: &str) -> PyResult<PyDeltaComplex> {
    use core::fixtures as fx;
    let inner = match name {
        "point" => fx::point(),
        "circle" => fx::circle(),
        "circle2" => fx::two_edge_circle(),
        "circle2_chain" => fx::chain_circle(),
        "disjoint_edges" => fx::disjoint_edges(),
        "torus" => fx::torus(),
        "klein" => fx::klein_bottle(),
        "rp2" => fx::projective_plane(),
        "boundary_delta3" => fx::boundary_delta3(),
        _ => return Err(PyKeyError::new_err(name.to_string())),
    };
    Ok(PyDeltaComplex { inner })
}

/// d(e_i) in the bar resolution as a list of (twisted, degree, coefficient).
#[pyfunction]
fn bar_differential(i: usize) -> Vec<(bool, usize, i64)> {
    core::bar_differential(i).into_iter().map(|(b, c)| (b.twisted, b.degree, c)).collect()
}

/// Verify a chain-map JSON file (the `maps` format) between two complexes
/// as a Steenrod morphism; returns the violation list (empty = morphism).
#[pyfunction]
#[pyo3(signature = (src, tgt, chain_map_json, i_max=None))]
fn verify_morphism_json(
    src: &PyDeltaComplex,
    tgt: &PyDeltaComplex,
    chain_map_json: &str,
    i_max: Option<usize>,
) -> PyResult<Vec<String>> {
    let file = io::parse_chain_map(chain_map_json).map_err(value_err)?;
    let cs = core::normalized_chains(&src.inner);
    let ct = core::normalized_chains(&tgt.inner);
    let f = io::build_chain_map(&file, &cs, &ct).map_err(value_err)?;
    let mut violations: Vec<String> = core::verify_chain_map(&f)
        .violations
        .iter()
        .map(|v| v.to_string())
        .collect();
    if violations.is_empty() {
        let cert = core::verify_morphism(
            &f,
            &core::canonical_structure(&src.inner),
            &core::canonical_structure(&tgt.inner),
            i_max.unwrap_or(src.inner.dim() + 1),
        )
        .map_err(value_err)?;
        violations.extend(cert.violations.iter().map(|v| v.to_string()));
    }
    Ok(violations)
}

#[pymodule(name = "steenrod_chains")]
fn pymodule(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDeltaComplex>()?;
    m.add_class::<PyReconstruction>()?;
    m.add_function(wrap_pyfunction!(standard_simplex, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(bar_differential, m)?)?;
    m.add_function(wrap_pyfunction!(verify_morphism_json, m)?)?;
    Ok(())
}
