//! Python bindings for the main types and operations: thermal pair
//! states, Wootters concurrence, the closed forms, boundary solvers,
//! sweeps, and the N-spin pair reduction.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dipolar::analytic;
use dipolar::entanglement;
use dipolar::matrix::ComplexMatrix;
use dipolar::spin::{pair_hamiltonian, total_hamiltonian, ReducedParams, SpinGeometry};
use dipolar::sweep;
use dipolar::thermal;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn matrix_from_rows(rows: Vec<Vec<Complex64>>) -> PyResult<ComplexMatrix> {
    let dim = rows.len();
    if dim == 0 || rows.iter().any(|r| r.len() != dim) {
        return Err(PyValueError::new_err("expected a square matrix"));
    }
    let mut m = ComplexMatrix::zeros(dim);
    for (i, row) in rows.iter().enumerate() {
        for (j, &z) in row.iter().enumerate() {
            m[(i, j)] = z;
        }
    }
    Ok(m)
}

/// Numeric concurrence and magnetization of the thermal two-spin state.
#[pyfunction]
#[pyo3(signature = (beta, d, theta=None, phi=0.0))]
fn thermal_point(beta: f64, d: f64, theta: Option<f64>, phi: f64) -> PyResult<(f64, f64)> {
    let theta = theta.unwrap_or(std::f64::consts::FRAC_PI_2);
    let params = ReducedParams::new(beta, d, theta, phi).map_err(err)?;
    let state = thermal::gibbs(&pair_hamiltonian(&params)).map_err(err)?;
    let c = entanglement::concurrence(&state.rho)
        .map_err(err)?
        .concurrence;
    let m = thermal::magnetization(&state.rho, 2).map_err(err)?;
    Ok((c, m))
}

/// Wootters concurrence of an arbitrary 4x4 density matrix
/// (list of rows of complex numbers).
#[pyfunction]
fn concurrence(rho: Vec<Vec<Complex64>>) -> PyResult<f64> {
    let m = matrix_from_rows(rho)?;
    Ok(entanglement::concurrence(&m).map_err(err)?.concurrence)
}

/// The four Wootters lambda values, descending.
#[pyfunction]
fn concurrence_lambdas(rho: Vec<Vec<Complex64>>) -> PyResult<[f64; 4]> {
    let m = matrix_from_rows(rho)?;
    Ok(entanglement::concurrence(&m).map_err(err)?.lambdas)
}

/// Closed-form X-state concurrence of a 4x4 density matrix.
#[pyfunction]
fn concurrence_x_state(rho: Vec<Vec<Complex64>>) -> PyResult<f64> {
    let m = matrix_from_rows(rho)?;
    entanglement::concurrence_x_state(&m).map_err(err)
}

/// Closed-form concurrence at theta=pi/2, phi=0.
#[pyfunction]
fn concurrence_closed(beta: f64, d: f64) -> PyResult<f64> {
    analytic::concurrence_closed(beta, d).map_err(err)
}

/// Closed-form magnetization (oracle-selected denominator reading).
#[pyfunction]
fn magnetization_closed(beta: f64, d: f64) -> PyResult<f64> {
    analytic::magnetization_closed(beta, d).map_err(err)
}

/// Critical beta of the entanglement boundary at coupling d.
#[pyfunction]
#[pyo3(signature = (d, method="analytic"))]
fn boundary_beta(d: f64, method: &str) -> PyResult<f64> {
    let pt = match method {
        "analytic" => analytic::boundary_beta_analytic(d).map_err(err)?,
        "numeric" => analytic::boundary_beta_numeric(d).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("unknown method '{other}'"))),
    };
    Ok(pt.beta_c)
}

/// Least-squares fit C = a(M+b) over a uniform beta sample; returns
/// (a, b, residual_rms, n_entangled).
#[pyfunction]
#[pyo3(signature = (d, beta_max, n_points=100))]
fn fit_concurrence_vs_magnetization(
    d: f64,
    beta_max: f64,
    n_points: usize,
) -> PyResult<(f64, f64, f64, usize)> {
    let fit = sweep::fit_concurrence_vs_magnetization(d, beta_max, n_points).map_err(err)?;
    Ok((fit.a, fit.b, fit.residual_rms, fit.n_entangled))
}

/// Thermal N-spin state from Cartesian sites (units of the reference
/// distance), reduced to the 1-based pair (j, k); returns
/// (concurrence, total magnetization).
#[pyfunction]
#[pyo3(signature = (sites, beta, d_ref, pair=(1, 2)))]
fn nspin_pair(
    sites: Vec<(f64, f64, f64)>,
    beta: f64,
    d_ref: f64,
    pair: (usize, usize),
) -> PyResult<(f64, f64)> {
    let coords: Vec<[f64; 3]> = sites.iter().map(|&(x, y, z)| [x, y, z]).collect();
    let n = coords.len();
    if n > 14 {
        return Err(PyValueError::new_err(format!(
            "{n} spins exceed the resource guard of 14"
        )));
    }
    let geom = SpinGeometry::from_sites(&coords).map_err(err)?;
    let (theta, phi) = if n == 2 {
        let pc = geom.pair_coords()[0];
        (pc.theta, pc.phi)
    } else {
        (0.0, 0.0)
    };
    let params = ReducedParams::new(beta, d_ref, theta, phi).map_err(err)?;
    let h = total_hamiltonian(&geom, &params).map_err(err)?;
    let state = thermal::gibbs(&h).map_err(err)?;
    let reduced = thermal::partial_trace_pair(&state.rho, n, pair.0, pair.1).map_err(err)?;
    let c = entanglement::concurrence(&reduced)
        .map_err(err)?
        .concurrence;
    let m = thermal::magnetization(&state.rho, n).map_err(err)?;
    Ok((c, m))
}

/// Rows of a transverse-orientation sweep as (beta, d, concurrence,
/// magnetization) tuples.
#[pyfunction]
#[pyo3(signature = (beta_axis, d_axis, method="numeric"))]
fn sweep_transverse(
    beta_axis: Vec<f64>,
    d_axis: Vec<f64>,
    method: &str,
) -> PyResult<Vec<(f64, f64, f64, f64)>> {
    let method = match method {
        "numeric" => sweep::SweepMethod::Numeric,
        "analytic" => sweep::SweepMethod::Analytic,
        other => return Err(PyValueError::new_err(format!("unknown method '{other}'"))),
    };
    let grid = sweep::SweepGrid {
        beta_axis,
        d_axis,
        theta_axis: vec![std::f64::consts::FRAC_PI_2],
        phi_axis: vec![0.0],
        method,
    };
    let table = sweep::run_sweep(&grid).map_err(err)?;
    table
        .rows
        .into_iter()
        .map(|row| match (row.concurrence, row.magnetization) {
            (Some(c), Some(m)) => Ok((row.beta, row.d, c, m)),
            _ => Err(PyValueError::new_err(
                row.error.unwrap_or_else(|| "grid point failed".to_string()),
            )),
        })
        .collect()
}

#[pymodule]
fn dipolar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(thermal_point, m)?)?;
    m.add_function(wrap_pyfunction!(concurrence, m)?)?;
    m.add_function(wrap_pyfunction!(concurrence_lambdas, m)?)?;
    m.add_function(wrap_pyfunction!(concurrence_x_state, m)?)?;
    m.add_function(wrap_pyfunction!(concurrence_closed, m)?)?;
    m.add_function(wrap_pyfunction!(magnetization_closed, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_beta, m)?)?;
    m.add_function(wrap_pyfunction!(fit_concurrence_vs_magnetization, m)?)?;
    m.add_function(wrap_pyfunction!(nspin_pair, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_transverse, m)?)?;
    Ok(())
}
