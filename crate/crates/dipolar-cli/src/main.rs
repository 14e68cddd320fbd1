//! Command-line front end: point evaluation, physical-unit conversion,
//! parameter sweeps, boundary tracing, figure datasets, the
//! concurrence-vs-magnetization fit, and N-spin pair reduction.
//!
//! Exit codes: 0 success, 2 flag parse errors (clap), 3 domain errors,
//! 4 unwritable output, 5 too many spins.

// domain checks use `!(x > 0.0)` so NaN inputs are rejected as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dipolar::analytic::{boundary_beta_analytic, concurrence_closed};
use dipolar::entanglement::concurrence;
use dipolar::spin::{total_hamiltonian, ReducedParams, SpinGeometry};
use dipolar::sweep::{
    figure_data, fit_concurrence_vs_magnetization, run_sweep, trace_boundary, BoundaryMethod,
    FigureData, SweepGrid, SweepMethod, SweepTable,
};
use dipolar::thermal::{gibbs, magnetization, partial_trace_pair};

use dipolar_cli::error::MAX_SPINS;
use dipolar_cli::output::OutputFormat;
use dipolar_cli::{axis, output, units, CliError};

#[derive(Parser)]
#[command(
    name = "dipolar",
    version,
    about = "Thermal entanglement and magnetization of dipolar-coupled spin-1/2 systems in low field"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Concurrence and magnetization at a single parameter point
    Point(PointArgs),
    /// Convert lab parameters (kHz/G, gauss, nm, microkelvin) to (beta, d)
    FromPhysical(FromPhysicalArgs),
    /// Evaluate a (beta, d, theta, phi) grid and write a table
    Sweep(SweepArgs),
    /// Trace the entanglement boundary over a coupling axis
    Boundary(BoundaryArgs),
    /// Write the dataset behind one of the five study figures
    Figure(FigureArgs),
    /// Fit C = a(M + b) over a beta sample at fixed coupling
    Fit(FitArgs),
    /// N-spin thermal state from a geometry file, reduced to one pair
    Nspin(NspinArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Numeric,
    Analytic,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundaryMethodArg {
    Analytic,
    Numeric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Args)]
struct PointArgs {
    /// Zeeman energy over k_B T
    #[arg(long, allow_hyphen_values = true)]
    beta: f64,
    /// Dipolar coupling over k_B T
    #[arg(long, allow_hyphen_values = true)]
    d: f64,
    /// Field polar angle (decimal radians or pi, pi/2, pi/4)
    #[arg(long, value_parser = axis::parse_angle, default_value = "pi/2")]
    theta: f64,
    /// Field azimuthal angle
    #[arg(long, value_parser = axis::parse_angle, default_value = "0")]
    phi: f64,
    /// Evaluation route; the closed forms exist only at theta=pi/2, phi=0
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
}

#[derive(Args)]
struct FromPhysicalArgs {
    /// Gyromagnetic ratio, kHz per gauss
    #[arg(long, allow_hyphen_values = true)]
    gamma: f64,
    /// Magnetic field, gauss
    #[arg(long, allow_hyphen_values = true)]
    field: f64,
    /// Temperature, microkelvin
    #[arg(long, allow_hyphen_values = true)]
    temperature: f64,
    /// Inter-spin distance, nanometers
    #[arg(long, conflicts_with = "dipolar_khz", allow_hyphen_values = true)]
    distance: Option<f64>,
    /// Dipolar coupling as an ordinary frequency, kHz
    #[arg(long, allow_hyphen_values = true)]
    dipolar_khz: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Beta axis: value or min:max:count
    #[arg(long, value_parser = axis::parse_axis_arg)]
    beta: axis::AxisValues,
    /// Coupling axis: value or min:max:count
    #[arg(long, value_parser = axis::parse_axis_arg)]
    d: axis::AxisValues,
    /// Theta axis (symbolic pi tokens allowed)
    #[arg(long, value_parser = axis::parse_angle_axis_arg, default_value = "pi/2")]
    theta: axis::AxisValues,
    /// Phi axis (symbolic pi tokens allowed)
    #[arg(long, value_parser = axis::parse_angle_axis_arg, default_value = "0")]
    phi: axis::AxisValues,
    #[arg(long, value_enum, default_value_t = MethodArg::Numeric)]
    method: MethodArg,
    /// Output file path
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct BoundaryArgs {
    /// Coupling axis: value or min:max:count
    #[arg(long, value_parser = axis::parse_axis_arg)]
    d: axis::AxisValues,
    #[arg(long, value_enum, default_value_t = BoundaryMethodArg::Analytic)]
    method: BoundaryMethodArg,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure id, 1..=5
    figure_id: u32,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct FitArgs {
    /// Dipolar coupling over k_B T
    #[arg(long)]
    d: f64,
    /// Upper end of the sampled beta interval
    #[arg(long)]
    beta_max: f64,
    /// Number of uniform beta samples
    #[arg(long, default_value_t = 100)]
    n_points: usize,
    /// Optional output file for the fit record
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct NspinArgs {
    /// Site coordinate file: one 'x y z' triple per line, units of the
    /// reference distance, '#' comments
    #[arg(long)]
    geometry: PathBuf,
    #[arg(long)]
    beta: f64,
    /// Dipolar coupling over k_B T at the reference distance
    #[arg(long)]
    d_ref: f64,
    /// Pair of 1-based site indices to reduce to
    #[arg(long, num_args = 2, value_names = ["J", "K"])]
    pair: Vec<usize>,
    /// Optional output file (JSON); default prints to stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct PointInputs {
    beta: f64,
    d: f64,
    theta: f64,
    phi: f64,
}

#[derive(Serialize)]
struct PointReport {
    inputs: PointInputs,
    concurrence_numeric: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    concurrence_analytic: Option<f64>,
    magnetization: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundary_beta_at_d: Option<f64>,
}

#[derive(Serialize)]
struct PhysicalInputs {
    gamma_khz_per_gauss: f64,
    field_gauss: f64,
    temperature_uk: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    distance_nm: Option<f64>,
}

#[derive(Serialize)]
struct PhysicalReport {
    inputs: PhysicalInputs,
    omega0_khz: f64,
    dipolar_khz: f64,
    beta: f64,
    d: f64,
}

#[derive(Serialize)]
struct NspinReport {
    n_spins: usize,
    pair: [usize; 2],
    beta: f64,
    d_ref: f64,
    concurrence: f64,
    lambdas: [f64; 4],
    magnetization: f64,
    log_z: f64,
}

fn main() {
    if let Ok(v) = std::env::var("DIPOLAR_WORKERS") {
        if let Ok(n) = v.parse::<usize>() {
            if n >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
    let cli = Cli::parse();
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Point(args) => cmd_point(args),
        Command::FromPhysical(args) => cmd_from_physical(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Boundary(args) => cmd_boundary(args),
        Command::Figure(args) => cmd_figure(args),
        Command::Fit(args) => cmd_fit(args),
        Command::Nspin(args) => cmd_nspin(args),
    }
}

fn transverse_orientation(theta: f64, phi: f64) -> bool {
    theta == std::f64::consts::FRAC_PI_2 && phi == 0.0
}

fn cmd_point(args: PointArgs) -> Result<(), CliError> {
    let params = ReducedParams::new(args.beta, args.d, args.theta, args.phi)?;
    let state = gibbs(&dipolar::spin::pair_hamiltonian(&params))?;
    let c_numeric = concurrence(&state.rho)?.concurrence;
    let m = magnetization(&state.rho, 2)?;

    let analytic_eligible = transverse_orientation(args.theta, args.phi);
    if args.method == MethodArg::Analytic && !analytic_eligible {
        return Err(CliError::Domain(
            "analytic method requires --theta pi/2 and --phi 0".into(),
        ));
    }
    let c_analytic = if args.method != MethodArg::Numeric && analytic_eligible {
        concurrence_closed(args.beta, args.d).ok()
    } else {
        None
    };
    let boundary = if args.d > 0.0 {
        boundary_beta_analytic(args.d).ok().map(|p| p.beta_c)
    } else {
        None
    };
    let report = PointReport {
        inputs: PointInputs {
            beta: args.beta,
            d: args.d,
            theta: args.theta,
            phi: args.phi,
        },
        concurrence_numeric: c_numeric,
        concurrence_analytic: c_analytic,
        magnetization: m,
        boundary_beta_at_d: boundary,
    };
    print!("{}", output::to_json(&report)?);
    Ok(())
}

fn cmd_from_physical(args: FromPhysicalArgs) -> Result<(), CliError> {
    for (name, v) in [
        ("--gamma", args.gamma),
        ("--field", args.field),
        ("--temperature", args.temperature),
    ] {
        if !(v > 0.0) {
            return Err(CliError::Domain(format!(
                "{name} must be positive, got {v}"
            )));
        }
    }
    let dipolar_khz = match (args.distance, args.dipolar_khz) {
        (Some(r), None) => {
            if !(r > 0.0) {
                return Err(CliError::Domain(format!(
                    "--distance must be positive, got {r}"
                )));
            }
            units::dipolar_frequency_khz(args.gamma, r)
        }
        (None, Some(f)) => {
            if !(f > 0.0) {
                return Err(CliError::Domain(format!(
                    "--dipolar-khz must be positive, got {f}"
                )));
            }
            f
        }
        _ => {
            return Err(CliError::Domain(
                "provide exactly one of --distance or --dipolar-khz".into(),
            ))
        }
    };
    let omega0_khz = args.gamma * args.field;
    let report = PhysicalReport {
        inputs: PhysicalInputs {
            gamma_khz_per_gauss: args.gamma,
            field_gauss: args.field,
            temperature_uk: args.temperature,
            distance_nm: args.distance,
        },
        omega0_khz,
        dipolar_khz,
        beta: units::reduced_energy(omega0_khz, args.temperature),
        d: units::reduced_energy(dipolar_khz, args.temperature),
    };
    print!("{}", output::to_json(&report)?);
    Ok(())
}

fn sweep_summary(table: &SweepTable) -> String {
    let ok_rows: Vec<_> = table.rows.iter().filter(|r| r.error.is_none()).collect();
    let entangled = ok_rows
        .iter()
        .filter(|r| r.concurrence.map(|c| c > 0.0).unwrap_or(false))
        .count();
    let fraction = if ok_rows.is_empty() {
        0.0
    } else {
        entangled as f64 / ok_rows.len() as f64
    };
    format!(
        "{} rows, entangled fraction {:.6}",
        table.rows.len(),
        fraction
    )
}

fn write_sweep(table: &SweepTable, out: &Path, format: OutputFormat) -> Result<(), CliError> {
    let contents = match format {
        OutputFormat::Csv => output::sweep_csv(table),
        OutputFormat::Json => output::to_json(table)?,
    };
    output::atomic_write(out, &contents)?;
    println!("wrote {}: {}", out.display(), sweep_summary(table));
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), CliError> {
    let method = match args.method {
        MethodArg::Numeric => SweepMethod::Numeric,
        MethodArg::Analytic => SweepMethod::Analytic,
        MethodArg::Both => SweepMethod::Both,
    };
    let grid = SweepGrid {
        beta_axis: args.beta.0,
        d_axis: args.d.0,
        theta_axis: args.theta.0,
        phi_axis: args.phi.0,
        method,
    };
    let table = run_sweep(&grid)?;
    write_sweep(&table, &args.out, args.format.into())
}

fn cmd_boundary(args: BoundaryArgs) -> Result<(), CliError> {
    let method = match args.method {
        BoundaryMethodArg::Analytic => BoundaryMethod::Analytic,
        BoundaryMethodArg::Numeric => BoundaryMethod::Numeric,
    };
    let table = trace_boundary(&args.d.0, method)?;
    let contents = match OutputFormat::from(args.format) {
        OutputFormat::Csv => output::boundary_csv(&table),
        OutputFormat::Json => output::to_json(&table)?,
    };
    output::atomic_write(&args.out, &contents)?;
    println!(
        "wrote {}: {} boundary points",
        args.out.display(),
        table.rows.len()
    );
    Ok(())
}

fn cmd_figure(args: FigureArgs) -> Result<(), CliError> {
    match figure_data(args.figure_id)? {
        FigureData::Sweep(table) => write_sweep(&table, &args.out, args.format.into()),
        FigureData::Boundary(table) => {
            let contents = match OutputFormat::from(args.format) {
                OutputFormat::Csv => output::boundary_csv(&table),
                OutputFormat::Json => output::to_json(&table)?,
            };
            output::atomic_write(&args.out, &contents)?;
            println!(
                "wrote {}: {} boundary points",
                args.out.display(),
                table.rows.len()
            );
            Ok(())
        }
    }
}

fn cmd_fit(args: FitArgs) -> Result<(), CliError> {
    let fit = fit_concurrence_vs_magnetization(args.d, args.beta_max, args.n_points)?;
    println!(
        "a={:.6} b={:.6} residual_rms={:.6e} n_points={} n_entangled={}",
        fit.a, fit.b, fit.residual_rms, fit.n_points, fit.n_entangled
    );
    if let Some(out) = args.out {
        let contents = match OutputFormat::from(args.format) {
            OutputFormat::Csv => output::fit_csv(&fit),
            OutputFormat::Json => output::to_json(&fit)?,
        };
        output::atomic_write(&out, &contents)?;
        println!("wrote {}", out.display());
    }
    Ok(())
}

fn read_geometry(path: &Path) -> Result<Vec<[f64; 3]>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read geometry {}: {e}", path.display())))?;
    let mut sites = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let nums: Result<Vec<f64>, _> = line.split_whitespace().map(str::parse::<f64>).collect();
        let nums = nums.map_err(|_| {
            CliError::Domain(format!(
                "geometry {} line {}: expected three numeric coordinates",
                path.display(),
                lineno + 1
            ))
        })?;
        if nums.len() != 3 {
            return Err(CliError::Domain(format!(
                "geometry {} line {}: expected three coordinates, got {}",
                path.display(),
                lineno + 1,
                nums.len()
            )));
        }
        sites.push([nums[0], nums[1], nums[2]]);
    }
    if sites.len() < 2 {
        return Err(CliError::Domain(format!(
            "geometry {} needs at least two sites, found {}",
            path.display(),
            sites.len()
        )));
    }
    Ok(sites)
}

fn cmd_nspin(args: NspinArgs) -> Result<(), CliError> {
    let sites = read_geometry(&args.geometry)?;
    let n = sites.len();
    if n > MAX_SPINS {
        return Err(CliError::TooManySpins(n));
    }
    let [site_a, site_b] = match args.pair.as_slice() {
        [a, b] => [*a, *b],
        _ => {
            return Err(CliError::Domain(
                "--pair needs exactly two site indices".into(),
            ))
        }
    };
    if site_a < 1 || site_b <= site_a || site_b > n {
        return Err(CliError::Domain(format!(
            "pair ({site_a}, {site_b}) must satisfy 1 <= j < k <= {n}"
        )));
    }
    let geom = SpinGeometry::from_sites(&sites)?;
    // for a bare pair the orientation comes from the parameter block, so
    // lift it from the stored pair coordinates to stay consistent
    let (theta, phi) = if n == 2 {
        let pc = geom.pair_coords()[0];
        (pc.theta, pc.phi)
    } else {
        (0.0, 0.0)
    };
    let params = ReducedParams::new(args.beta, args.d_ref, theta, phi)?;
    let h = total_hamiltonian(&geom, &params)?;
    let state = gibbs(&h)?;
    let reduced = partial_trace_pair(&state.rho, n, site_a, site_b)?;
    let result = concurrence(&reduced)?;
    let m = magnetization(&state.rho, n)?;
    let report = NspinReport {
        n_spins: n,
        pair: [site_a, site_b],
        beta: args.beta,
        d_ref: args.d_ref,
        concurrence: result.concurrence,
        lambdas: result.lambdas,
        magnetization: m,
        log_z: state.log_z,
    };
    let json = output::to_json(&report)?;
    match args.out {
        Some(out) => {
            output::atomic_write(&out, &json)?;
            println!("wrote {}", out.display());
        }
        None => print!("{json}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_cli() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn transverse_check_is_exact() {
        assert!(transverse_orientation(std::f64::consts::FRAC_PI_2, 0.0));
        assert!(!transverse_orientation(1.5, 0.0));
    }
}
