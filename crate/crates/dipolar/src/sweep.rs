//! Grid evaluation over (β, d, θ, φ), figure datasets, boundary tracing,
//! and the concurrence-vs-magnetization fit.
//!
//! Grid points are independent work items evaluated in parallel; rows
//! come back in the lexicographic order of the axes (β outermost, φ
//! innermost), so identical inputs serialize to identical bytes.

use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

use crate::analytic::{
    boundary_beta_analytic, boundary_beta_numeric, boundary_residual, concurrence_closed,
    magnetization_closed, selected_magnetization_variant,
};
use crate::entanglement::{concurrence, concurrence_signed};
use crate::error::{Error, Result};
use crate::spin::{pair_hamiltonian, ReducedParams};
use crate::thermal::{gibbs, magnetization};

/// Evaluation route for a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMethod {
    Numeric,
    Analytic,
    Both,
}

impl SweepMethod {
    pub fn name(self) -> &'static str {
        match self {
            SweepMethod::Numeric => "numeric",
            SweepMethod::Analytic => "analytic",
            SweepMethod::Both => "both",
        }
    }
}

/// Cartesian parameter grid. The analytic route only exists for the
/// transverse orientation, so `Analytic`/`Both` require
/// theta = {π/2} and phi = {0} exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    pub beta_axis: Vec<f64>,
    pub d_axis: Vec<f64>,
    pub theta_axis: Vec<f64>,
    pub phi_axis: Vec<f64>,
    pub method: SweepMethod,
}

fn check_axis(name: &str, axis: &[f64]) -> Result<()> {
    if axis.is_empty() {
        return Err(Error::DomainError(format!("{name} axis is empty")));
    }
    for w in axis.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::DomainError(format!(
                "{name} axis must be strictly increasing"
            )));
        }
    }
    Ok(())
}

impl SweepGrid {
    pub fn validate(&self) -> Result<()> {
        check_axis("beta", &self.beta_axis)?;
        check_axis("d", &self.d_axis)?;
        check_axis("theta", &self.theta_axis)?;
        check_axis("phi", &self.phi_axis)?;
        if self.beta_axis[0] < 0.0 {
            return Err(Error::DomainError("beta axis must be nonnegative".into()));
        }
        if self.d_axis[0] < 0.0 {
            return Err(Error::DomainError("d axis must be nonnegative".into()));
        }
        if self.method != SweepMethod::Numeric
            && (self.theta_axis != [FRAC_PI_2] || self.phi_axis != [0.0])
        {
            return Err(Error::DomainError(
                "analytic evaluation requires theta = pi/2 and phi = 0 exactly".into(),
            ));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.beta_axis.len() * self.d_axis.len() * self.theta_axis.len() * self.phi_axis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One evaluated grid point. `concurrence`/`magnetization` hold the
/// primary route (numeric unless the method is pure analytic); the
/// `_alt` fields carry the analytic pairing when method = both.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub beta: f64,
    pub d: f64,
    pub theta: f64,
    pub phi: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concurrence: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub magnetization: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concurrence_analytic: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub magnetization_analytic: Option<f64>,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Deterministic metadata serialized with every table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableMeta {
    pub tool_version: &'static str,
    pub grid: String,
    pub method: &'static str,
    pub magnetization_variant: &'static str,
    pub closed_form_note: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_concurrence_diff: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_magnetization_diff: Option<f64>,
    pub error_rows: usize,
}

pub const CLOSED_FORM_NOTE: &str =
    "analytic branch term uses sinh(S/4); the sinh(S/2) transcription is rejected by validation";

/// Ordered rows plus metadata, ready for CSV/JSON emission.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepTable {
    pub meta: TableMeta,
    pub rows: Vec<SweepRow>,
}

fn axis_echo(name: &str, axis: &[f64]) -> String {
    if axis.len() == 1 {
        format!("{name}={}", axis[0])
    } else {
        format!("{name}={}:{}:{}", axis[0], axis[axis.len() - 1], axis.len())
    }
}

fn grid_echo(grid: &SweepGrid) -> String {
    format!(
        "{} {} {} {}",
        axis_echo("beta", &grid.beta_axis),
        axis_echo("d", &grid.d_axis),
        axis_echo("theta", &grid.theta_axis),
        axis_echo("phi", &grid.phi_axis),
    )
}

fn numeric_point(beta: f64, d: f64, theta: f64, phi: f64) -> Result<(f64, f64)> {
    let params = ReducedParams::new(beta, d, theta, phi)?;
    let state = gibbs(&pair_hamiltonian(&params))?;
    let c = concurrence(&state.rho)?.concurrence;
    let m = magnetization(&state.rho, 2)?;
    Ok((c, m))
}

fn analytic_point(beta: f64, d: f64) -> Result<(f64, f64)> {
    let c = concurrence_closed(beta, d)?;
    // the closed magnetization needs d > 0; the d = 0 limit is exactly
    // the bare Zeeman pair, M = −tanh(β/2)·sech-free expression below
    let m = if d > 0.0 {
        magnetization_closed(beta, d)?
    } else {
        -(0.5 * beta).tanh()
    };
    Ok((c, m))
}

fn evaluate_point(beta: f64, d: f64, theta: f64, phi: f64, method: SweepMethod) -> SweepRow {
    let mut row = SweepRow {
        beta,
        d,
        theta,
        phi,
        concurrence: None,
        magnetization: None,
        concurrence_analytic: None,
        magnetization_analytic: None,
        method: method.name(),
        error: None,
    };
    let outcome = match method {
        SweepMethod::Numeric => numeric_point(beta, d, theta, phi).map(|v| (v, None)),
        SweepMethod::Analytic => analytic_point(beta, d).map(|v| (v, None)),
        SweepMethod::Both => numeric_point(beta, d, theta, phi)
            .and_then(|num| analytic_point(beta, d).map(|alt| (num, Some(alt)))),
    };
    match outcome {
        Ok(((c, m), alt)) => {
            row.concurrence = Some(c);
            row.magnetization = Some(m);
            if let Some((ca, ma)) = alt {
                row.concurrence_analytic = Some(ca);
                row.magnetization_analytic = Some(ma);
            }
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// Evaluate every grid point; failed points are tagged in their row
/// rather than aborting the sweep.
pub fn run_sweep(grid: &SweepGrid) -> Result<SweepTable> {
    grid.validate()?;
    let nb = grid.beta_axis.len();
    let nd = grid.d_axis.len();
    let nt = grid.theta_axis.len();
    let np = grid.phi_axis.len();
    let rows: Vec<SweepRow> = (0..grid.len())
        .into_par_iter()
        .map(|flat| {
            let phi_i = flat % np;
            let theta_i = (flat / np) % nt;
            let d_i = (flat / (np * nt)) % nd;
            let beta_i = flat / (np * nt * nd);
            debug_assert!(beta_i < nb);
            evaluate_point(
                grid.beta_axis[beta_i],
                grid.d_axis[d_i],
                grid.theta_axis[theta_i],
                grid.phi_axis[phi_i],
                grid.method,
            )
        })
        .collect();

    let (mut max_c_diff, mut max_m_diff) = (None, None);
    if grid.method == SweepMethod::Both {
        let mut cd: f64 = 0.0;
        let mut md: f64 = 0.0;
        for row in &rows {
            if let (Some(c), Some(ca)) = (row.concurrence, row.concurrence_analytic) {
                cd = cd.max((c - ca).abs());
            }
            if let (Some(m), Some(ma)) = (row.magnetization, row.magnetization_analytic) {
                md = md.max((m - ma).abs());
            }
        }
        max_c_diff = Some(cd);
        max_m_diff = Some(md);
    }
    let error_rows = rows.iter().filter(|r| r.error.is_some()).count();
    Ok(SweepTable {
        meta: TableMeta {
            tool_version: env!("CARGO_PKG_VERSION"),
            grid: grid_echo(grid),
            method: grid.method.name(),
            magnetization_variant: selected_magnetization_variant().name(),
            closed_form_note: CLOSED_FORM_NOTE,
            max_concurrence_diff: max_c_diff,
            max_magnetization_diff: max_m_diff,
            error_rows,
        },
        rows,
    })
}

/// Boundary method selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryMethod {
    Analytic,
    Numeric,
}

impl BoundaryMethod {
    pub fn name(self) -> &'static str {
        match self {
            BoundaryMethod::Analytic => "analytic",
            BoundaryMethod::Numeric => "numeric",
        }
    }
}

/// One traced boundary point; `residual` is the closed-form boundary
/// equation evaluated at the root (analytic method) or the Wootters sum
/// there (numeric method).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryRow {
    pub d: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Boundary rows plus metadata.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryTable {
    pub meta: TableMeta,
    pub rows: Vec<BoundaryRow>,
}

/// Trace the entanglement boundary over a coupling axis; per-point
/// failures are recorded, not fatal.
pub fn trace_boundary(d_axis: &[f64], method: BoundaryMethod) -> Result<BoundaryTable> {
    check_axis("d", d_axis)?;
    if !(d_axis[0] > 0.0) {
        return Err(Error::DomainError("boundary tracing needs d > 0".into()));
    }
    let rows: Vec<BoundaryRow> = d_axis
        .par_iter()
        .map(|&d| {
            let solved = match method {
                BoundaryMethod::Analytic => boundary_beta_analytic(d),
                BoundaryMethod::Numeric => boundary_beta_numeric(d),
            };
            match solved {
                Ok(pt) => {
                    let residual = match method {
                        BoundaryMethod::Analytic => boundary_residual(pt.beta_c, d),
                        BoundaryMethod::Numeric => {
                            let params = ReducedParams::transverse(pt.beta_c, d)
                                .expect("solved beta is nonnegative");
                            let state = gibbs(&pair_hamiltonian(&params))
                                .expect("Hermitian by construction");
                            concurrence_signed(&state.rho).expect("thermal state is valid")
                        }
                    };
                    BoundaryRow {
                        d,
                        beta_c: Some(pt.beta_c),
                        residual: Some(residual),
                        error: None,
                    }
                }
                Err(e) => BoundaryRow {
                    d,
                    beta_c: None,
                    residual: None,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect();
    let error_rows = rows.iter().filter(|r| r.error.is_some()).count();
    Ok(BoundaryTable {
        meta: TableMeta {
            tool_version: env!("CARGO_PKG_VERSION"),
            grid: axis_echo("d", d_axis),
            method: method.name(),
            magnetization_variant: selected_magnetization_variant().name(),
            closed_form_note: CLOSED_FORM_NOTE,
            max_concurrence_diff: None,
            max_magnetization_diff: None,
            error_rows,
        },
        rows,
    })
}

/// Least-squares fit of C = a·(M + b) over the entangled part of a β
/// sample at fixed coupling.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearFit {
    pub a: f64,
    pub b: f64,
    pub residual_rms: f64,
    pub beta_min: f64,
    pub beta_max: f64,
    pub n_points: usize,
    pub n_entangled: usize,
}

/// Sample β uniformly on [0, beta_max], keep the points with C > 0, and
/// fit C = a(M + b). The flat C = 0 region would bias the slope, so it
/// stays out of the fit.
pub fn fit_concurrence_vs_magnetization(
    d: f64,
    beta_max: f64,
    n_points: usize,
) -> Result<LinearFit> {
    if !(d > 0.0) {
        return Err(Error::DomainError(format!("fit needs d > 0, got {d}")));
    }
    if !(beta_max > 0.0) {
        return Err(Error::DomainError(format!(
            "fit needs beta_max > 0, got {beta_max}"
        )));
    }
    if n_points < 10 {
        return Err(Error::DomainError(format!(
            "fit needs at least 10 sample points, got {n_points}"
        )));
    }
    let points: Vec<(f64, f64)> = (0..n_points)
        .into_par_iter()
        .map(|i| {
            let beta = beta_max * i as f64 / (n_points - 1) as f64;
            numeric_point(beta, d, FRAC_PI_2, 0.0).expect("transverse grid point is valid")
        })
        .collect();
    let entangled: Vec<(f64, f64)> = points.iter().copied().filter(|&(c, _)| c > 0.0).collect();
    if entangled.len() < 3 {
        return Err(Error::InsufficientEntangledPoints {
            found: entangled.len(),
        });
    }
    let n = entangled.len() as f64;
    let mean_m = entangled.iter().map(|&(_, m)| m).sum::<f64>() / n;
    let mean_c = entangled.iter().map(|&(c, _)| c).sum::<f64>() / n;
    let cov: f64 = entangled
        .iter()
        .map(|&(c, m)| (m - mean_m) * (c - mean_c))
        .sum();
    let var: f64 = entangled
        .iter()
        .map(|&(_, m)| (m - mean_m) * (m - mean_m))
        .sum();
    let a = cov / var;
    let intercept = mean_c - a * mean_m;
    let b = intercept / a;
    let ss: f64 = entangled
        .iter()
        .map(|&(c, m)| {
            let r = c - (a * m + intercept);
            r * r
        })
        .sum();
    Ok(LinearFit {
        a,
        b,
        residual_rms: (ss / n).sqrt(),
        beta_min: 0.0,
        beta_max,
        n_points,
        n_entangled: entangled.len(),
    })
}

/// Dataset behind one of the five study figures.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum FigureData {
    Sweep(SweepTable),
    Boundary(BoundaryTable),
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (i as f64 / (n - 1) as f64) * (hi - lo))
        .collect()
}

/// The parameters behind each figure:
/// 1 — concurrence over (β, θ) at φ=0, d=3;
/// 2 — the entanglement boundary in the (β, d) plane;
/// 3 — concurrence over (β, d) at θ=π/2, φ=0;
/// 4 — concurrence vs field at constant temperature (d ∈ {0.5, 2, 10},
///     β sweeping) and vs inverse temperature along rays d/β ∈ {3, 5, 10};
/// 5 — concurrence and magnetization vs β at d=3 for the linear fit.
pub fn figure_data(figure_id: u32) -> Result<FigureData> {
    match figure_id {
        1 => run_sweep(&SweepGrid {
            beta_axis: linspace(0.0, 10.0, 101),
            d_axis: vec![3.0],
            theta_axis: linspace(0.0, std::f64::consts::PI, 41),
            phi_axis: vec![0.0],
            method: SweepMethod::Numeric,
        })
        .map(FigureData::Sweep),
        2 => trace_boundary(&linspace(0.1, 10.0, 100), BoundaryMethod::Analytic)
            .map(FigureData::Boundary),
        3 => run_sweep(&SweepGrid {
            beta_axis: linspace(0.0, 10.0, 101),
            d_axis: linspace(0.0, 10.0, 101),
            theta_axis: vec![FRAC_PI_2],
            phi_axis: vec![0.0],
            method: SweepMethod::Numeric,
        })
        .map(FigureData::Sweep),
        4 => {
            // part (a): field sweep at constant temperature, one curve per coupling
            let mut rows = Vec::new();
            for &d in &[0.5, 2.0, 10.0] {
                let table = run_sweep(&SweepGrid {
                    beta_axis: linspace(0.0, 20.0, 201),
                    d_axis: vec![d],
                    theta_axis: vec![FRAC_PI_2],
                    phi_axis: vec![0.0],
                    method: SweepMethod::Numeric,
                })?;
                rows.extend(table.rows);
            }
            // part (b): cooling rays at constant field, d/β fixed
            for &ratio in &[3.0, 5.0, 10.0] {
                let inverse_t = linspace(0.0, 20.0, 201);
                let ray_rows: Vec<SweepRow> = inverse_t
                    .par_iter()
                    .map(|&d| evaluate_point(d / ratio, d, FRAC_PI_2, 0.0, SweepMethod::Numeric))
                    .collect();
                rows.extend(ray_rows);
            }
            let error_rows = rows.iter().filter(|r| r.error.is_some()).count();
            Ok(FigureData::Sweep(SweepTable {
                meta: TableMeta {
                    tool_version: env!("CARGO_PKG_VERSION"),
                    grid: "field curves d={0.5,2,10} beta=0:20:201; cooling rays d/beta={3,5,10} d=0:20:201".into(),
                    method: SweepMethod::Numeric.name(),
                    magnetization_variant: selected_magnetization_variant().name(),
                    closed_form_note: CLOSED_FORM_NOTE,
                    max_concurrence_diff: None,
                    max_magnetization_diff: None,
                    error_rows,
                },
                rows,
            }))
        }
        5 => run_sweep(&SweepGrid {
            beta_axis: linspace(0.0, 6.0, 121),
            d_axis: vec![3.0],
            theta_axis: vec![FRAC_PI_2],
            phi_axis: vec![0.0],
            method: SweepMethod::Numeric,
        })
        .map(FigureData::Sweep),
        other => Err(Error::UnknownFigure(other)),
    }
}
