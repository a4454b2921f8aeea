//! `bhe` command-line front end.
//!
//! Exit codes: 0 success, 2 bad flags or config, 3 physics/domain error,
//! 4 I/O error, 5 oracle mismatch or truncation failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::channels::{fidelity_boson_construction, log_negativity_boson_params};
use crate::error::Error;
use crate::estimates::{
    coupling_time, coupling_time_at_temperature, hawking_temperature_si, radiation_density,
    CavitySpec, SI, UNIVERSE_AGE_S,
};
use crate::fock_oracle::{
    bob_post_state_bosonic, bob_post_state_fermionic, teleportation_fidelity, DualRailQubit,
    Outcome, DEFAULT_TRUNCATION,
};
use crate::geometry::{tev_scales, RotatingBH, SchwarzschildBH, HBAR_C_M_TEV};
use crate::modes::{SqueezingParams, Statistics};
use crate::report::{oracle_comparison, OracleConfig};
use crate::sweep::{self, evaluate, Evaluation, Param, Point, SweepSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PHYSICS: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_ORACLE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "bhe", version, about = "Entanglement and teleportation near higher-dimensional black holes")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Horizon, surface gravity, angular velocity, temperature, mass, spin.
    Geom(GeomArgs),
    /// Squeezing, occupation and logarithmic negativity of one mode.
    Entangle(PointArgs),
    /// Teleportation fidelity of one mode.
    Teleport(TeleportArgs),
    /// Grid sweep written as CSV.
    Sweep(SweepArgs),
    /// Compare closed forms with the truncated Fock oracle.
    OracleCheck(OracleArgs),
    /// SI estimates.
    #[command(subcommand)]
    Estimate(EstimateCommand),
    /// TeV-gravity length scales.
    Tev(TevArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Units {
    Natural,
    Si,
}

#[derive(Debug, Args)]
struct GeomArgs {
    /// Spacetime dimension (Schwarzschild).
    #[arg(long, conflicts_with = "n", required_unless_present = "n")]
    d: Option<u32>,
    /// Extra dimensions (rotating, total dimension 4+n).
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, group = "size")]
    mass: Option<f64>,
    #[arg(long, group = "size")]
    rh: Option<f64>,
    #[arg(long, group = "size", requires = "n")]
    mu: Option<f64>,
    #[arg(long, group = "spin", requires = "n")]
    a: Option<f64>,
    #[arg(long = "a-star", group = "spin", requires = "n")]
    a_star: Option<f64>,
    #[arg(long, value_enum, default_value = "natural")]
    units: Units,
    /// Fundamental scale M_* in TeV, for `--units si`.
    #[arg(long, required_if_eq("units", "si"))]
    mstar: Option<f64>,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[arg(long, value_parser = parse_statistics, default_value = "boson")]
    statistics: Statistics,
    /// Mode frequency.
    #[arg(long, group = "freq")]
    omega: Option<f64>,
    /// Mode frequency in units of 1/r_h.
    #[arg(long = "omega-rh", group = "freq")]
    omega_rh: Option<f64>,
    /// Surface gravity, bypassing the geometry.
    #[arg(long, conflicts_with_all = ["d", "n", "mass", "rh", "mu", "a", "a_star", "r"])]
    kappa: Option<f64>,
    /// Squeezing parameter, bypassing geometry and frequency.
    #[arg(long, conflicts_with_all = ["d", "n", "mass", "rh", "mu", "a", "a_star", "omega", "omega_rh", "m"])]
    r: Option<f64>,
    #[arg(long, conflicts_with = "n")]
    d: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, group = "size")]
    mass: Option<f64>,
    #[arg(long, group = "size")]
    rh: Option<f64>,
    #[arg(long, group = "size")]
    mu: Option<f64>,
    #[arg(long, group = "spin")]
    a: Option<f64>,
    #[arg(long = "a-star", group = "spin")]
    a_star: Option<f64>,
    /// Azimuthal number.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i32>,
    /// Series tolerance (default 1e-10 or BHE_DEFAULT_TOL).
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct TeleportArgs {
    #[command(flatten)]
    point: PointArgs,
    /// Also build Bob's state in a truncated Fock basis and report its fidelity.
    #[arg(long)]
    oracle: bool,
    /// Input qubit cos θ |0⟩ + sin θ |1⟩.
    #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
    theta: f64,
    /// Measurement outcome, e.g. 01.
    #[arg(long, default_value = "00", value_parser = parse_outcome)]
    outcome: Outcome,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    trunc: usize,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// key = value config file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Axis `name min max count [linear|log]`, repeatable.
    #[arg(long)]
    axis: Vec<String>,
    /// Fixed parameter `name=value`, repeatable.
    #[arg(long = "set")]
    set: Vec<String>,
    /// Comma-separated outputs from kappa, Omega, r, N_occ, E_N, F.
    #[arg(long)]
    outputs: Option<String>,
    #[arg(long)]
    statistics: Option<String>,
    #[arg(long)]
    tol: Option<f64>,
    /// CSV destination; standard output if absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Comma-separated values of t = exp(-pi w/kappa).
    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.3, 0.5, 0.7])]
    t: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    trunc: usize,
    #[arg(long, default_value_t = 0.3, allow_hyphen_values = true)]
    theta: f64,
    #[arg(long, default_value = "11", value_parser = parse_outcome)]
    outcome: Outcome,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum EstimateCommand {
    /// Hawking temperature in kelvin.
    HawkingTemperature {
        #[arg(long, group = "m")]
        msun: Option<f64>,
        #[arg(long, group = "m")]
        kg: Option<f64>,
    },
    /// Black-body energy density in J/m^3.
    RadiationDensity {
        /// Temperature in kelvin.
        #[arg(long)]
        t: f64,
    },
    /// Time for the cavity to register the gravitational redshift.
    CouplingTime {
        #[arg(long, default_value_t = 1.0)]
        msun: f64,
        /// Wall thickness, m.
        #[arg(long, default_value_t = 1.0)]
        dl: f64,
        /// Cavity volume, m^3.
        #[arg(long, default_value_t = 1.0)]
        vc: f64,
        /// Override the bath temperature (K).
        #[arg(long)]
        tbh: Option<f64>,
    },
}

#[derive(Debug, Args)]
struct TevArgs {
    #[arg(long)]
    n: u32,
    /// M_* in TeV.
    #[arg(long)]
    mstar: f64,
    /// Black hole mass in TeV.
    #[arg(long)]
    mbh: f64,
}

fn parse_statistics(s: &str) -> Result<Statistics, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_outcome(s: &str) -> Result<Outcome, String> {
    let b = s.as_bytes();
    if b.len() != 2 {
        return Err(format!("outcome '{s}' must be two bits, e.g. 01"));
    }
    let bit = |c: u8| match c {
        b'0' => Ok(0),
        b'1' => Ok(1),
        _ => Err(format!("outcome '{s}' must be two bits, e.g. 01")),
    };
    Ok(Outcome(bit(b[0])?, bit(b[1])?))
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Physics(Error),
    Io(PathBuf, io::Error),
    Oracle(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Physics(Error::Truncation { .. }) => EXIT_ORACLE,
            CliError::Physics(_) => EXIT_PHYSICS,
            CliError::Io(..) => EXIT_IO,
            CliError::Oracle(_) => EXIT_ORACLE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Physics(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Oracle(m) => write!(f, "oracle check failed: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Physics(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

/// Run with explicit arguments and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "bhe: {e}");
            e.code()
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let stdout = PathBuf::from("<stdout>");
    let io = |e| CliError::Io(stdout.clone(), e);
    match cmd {
        Command::Geom(a) => geom(&a, out).map_err(io).and_then(|r| r),
        Command::Entangle(a) => entangle(&a, out).map_err(io).and_then(|r| r),
        Command::Teleport(a) => teleport(&a, out).map_err(io).and_then(|r| r),
        Command::Sweep(a) => sweep_cmd(&a, out),
        Command::OracleCheck(a) => oracle_check(&a, out, err),
        Command::Estimate(e) => estimate(&e, out).map_err(io).and_then(|r| r),
        Command::Tev(a) => tev(&a, out).map_err(io).and_then(|r| r),
    }
}

fn kv(out: &mut dyn Write, key: &str, value: f64) -> io::Result<()> {
    writeln!(out, "{key} = {value:.10e}")
}

fn geom(a: &GeomArgs, out: &mut dyn Write) -> io::Result<CliResult<()>> {
    let res = (|| -> CliResult<(f64, f64, f64, f64, f64, f64, Option<f64>)> {
        if let Some(d) = a.d {
            let bh = match (a.mass, a.rh) {
                (Some(m), _) => SchwarzschildBH::from_mass(d, m)?,
                (None, Some(r)) => SchwarzschildBH::new(d, r)?,
                (None, None) => return Err(CliError::Usage("give --mass or --rh".into())),
            };
            Ok((bh.horizon_radius(), bh.surface_gravity(), 0.0, bh.temperature(), bh.mass(), 0.0, None))
        } else {
            let n = a.n.expect("clap enforces d or n");
            let bh = match (a.mass, a.rh, a.mu) {
                (_, Some(r), _) => RotatingBH::from_horizon(n, r, a.a_star.or(a.a.map(|x| x / r)).unwrap_or(0.0))?,
                (m, None, mu) => {
                    let mu = match (m, mu) {
                        (Some(m), _) => crate::geometry::mu_from_mass(n, m)?,
                        (None, Some(mu)) => mu,
                        _ => return Err(CliError::Usage("give --mass, --rh or --mu".into())),
                    };
                    match a.a_star {
                        Some(s) => {
                            let r_h = (mu / (1.0 + s * s)).powf(1.0 / (n + 1) as f64);
                            RotatingBH::from_horizon(n, r_h, s)?
                        }
                        None => RotatingBH::new(n, mu, a.a.unwrap_or(0.0))?,
                    }
                }
            };
            let (m, j) = bh.mass_and_angular_momentum();
            Ok((
                bh.horizon_radius(),
                bh.surface_gravity(),
                bh.angular_velocity(),
                bh.temperature(),
                m,
                j,
                Some(bh.a_star()),
            ))
        }
    })();
    let (r_h, kappa, omega, t, m, j, a_star) = match res {
        Ok(v) => v,
        Err(e) => return Ok(Err(e)),
    };
    kv(out, "r_h", r_h)?;
    if let Some(s) = a_star {
        kv(out, "a_star", s)?;
    }
    kv(out, "kappa", kappa)?;
    kv(out, "Omega", omega)?;
    kv(out, "T", t)?;
    kv(out, "M", m)?;
    kv(out, "J", j)?;
    if let (Units::Si, Some(mstar)) = (a.units, a.mstar) {
        if !(mstar > 0.0) {
            return Ok(Err(CliError::Usage("--mstar must be positive".into())));
        }
        // lengths in units of 1/M_*
        kv(out, "r_h_m", r_h * HBAR_C_M_TEV / mstar)?;
        kv(out, "M_TeV", m * mstar)?;
    }
    Ok(Ok(()))
}

fn default_tol(explicit: Option<f64>) -> CliResult<f64> {
    match explicit {
        Some(t) => Ok(t),
        None => sweep::default_tol_from_env().map_err(usage),
    }
}

fn point_from_args(a: &PointArgs) -> Point {
    let mut p = Point::new(a.statistics);
    let mut put = |param, v: Option<f64>| {
        if let Some(v) = v {
            p.values.insert(param, v);
        }
    };
    put(Param::Omega, a.omega);
    put(Param::OmegaRh, a.omega_rh);
    put(Param::Kappa, a.kappa);
    put(Param::R, a.r);
    put(Param::D, a.d.map(f64::from));
    put(Param::N, a.n.map(f64::from));
    put(Param::Mass, a.mass);
    put(Param::RH, a.rh);
    put(Param::Mu, a.mu);
    put(Param::A, a.a);
    put(Param::AStar, a.a_star);
    put(Param::M, a.m.map(f64::from));
    p
}

fn evaluate_args(a: &PointArgs) -> CliResult<(Evaluation, f64)> {
    let tol = default_tol(a.tol)?;
    Ok((evaluate(&point_from_args(a), tol)?, tol))
}

fn print_common(ev: &Evaluation, out: &mut dyn Write) -> io::Result<()> {
    if let Some(k) = ev.kappa {
        kv(out, "kappa", k)?;
    }
    if let Some(o) = ev.angular_velocity {
        kv(out, "Omega", o)?;
    }
    if let Some(w) = ev.omega_eff {
        kv(out, "omega_eff", w)?;
    }
    kv(out, "r", ev.squeezing.r())?;
    kv(out, "N_occ", ev.occupation)
}

fn entangle(a: &PointArgs, out: &mut dyn Write) -> io::Result<CliResult<()>> {
    let (ev, tol) = match evaluate_args(a) {
        Ok(v) => v,
        Err(e) => return Ok(Err(e)),
    };
    print_common(&ev, out)?;
    kv(out, "E_N", ev.log_negativity)?;
    if let SqueezingParams::Boson { .. } = ev.squeezing {
        if let Ok(res) = log_negativity_boson_params(&ev.squeezing, tol) {
            writeln!(out, "terms = {}", res.terms_used)?;
            kv(out, "tail_bound", res.tail_bound)?;
        }
    }
    Ok(Ok(()))
}

fn teleport(a: &TeleportArgs, out: &mut dyn Write) -> io::Result<CliResult<()>> {
    let (ev, _) = match evaluate_args(&a.point) {
        Ok(v) => v,
        Err(e) => return Ok(Err(e)),
    };
    print_common(&ev, out)?;
    kv(out, "F", ev.fidelity)?;
    if let SqueezingParams::Boson { .. } = ev.squeezing {
        if let Ok(f) = fidelity_boson_construction(&ev.squeezing) {
            kv(out, "F_cosh6", f)?;
        }
    }
    if a.oracle {
        let qubit = DualRailQubit::from_angle(a.theta);
        let r = ev.squeezing.r();
        let rho = match ev.squeezing.statistics() {
            Statistics::Boson => bob_post_state_bosonic(r, &qubit, a.outcome, a.trunc),
            Statistics::Fermion => bob_post_state_fermionic(r, &qubit, a.outcome),
        };
        let f = match rho.and_then(|rho| teleportation_fidelity(&rho, &qubit, a.outcome).map(|f| (f, rho.trace_deficit()))) {
            Ok(v) => v,
            Err(e) => return Ok(Err(e.into())),
        };
        kv(out, "F_oracle", f.0)?;
        kv(out, "trace_deficit", f.1)?;
    }
    Ok(Ok(()))
}

fn build_sweep_spec(a: &SweepArgs) -> CliResult<SweepSpec> {
    let mut spec = match &a.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.clone(), e))?;
            SweepSpec::parse_config(&text).map_err(usage)?
        }
        None => SweepSpec::default(),
    };
    for ax in &a.axis {
        spec.set("axis", ax).map_err(usage)?;
    }
    for kvs in &a.set {
        let (k, v) = kvs
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--set '{kvs}' must read name=value")))?;
        spec.set(k.trim(), v.trim()).map_err(usage)?;
    }
    if let Some(o) = &a.outputs {
        spec.set("outputs", o).map_err(usage)?;
    }
    if let Some(s) = &a.statistics {
        spec.set("statistics", s).map_err(usage)?;
    }
    if let Some(t) = a.tol {
        spec.fixed.insert(Param::Tol, t);
    }
    if let Some(o) = &a.out {
        spec.out = Some(o.to_string_lossy().into_owned());
    }
    spec.validate().map_err(usage)?;
    Ok(spec)
}

fn write_to<F>(path: Option<&PathBuf>, out: &mut dyn Write, f: F) -> CliResult<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| CliError::Io(p.clone(), e))?;
            let mut w = BufWriter::new(file);
            f(&mut w).and_then(|_| w.flush()).map_err(|e| CliError::Io(p.clone(), e))
        }
        None => f(out).map_err(|e| CliError::Io(PathBuf::from("<stdout>"), e)),
    }
}

fn sweep_cmd(a: &SweepArgs, out: &mut dyn Write) -> CliResult<()> {
    let spec = build_sweep_spec(a)?;
    let tol = default_tol(None)?;
    let rows = sweep::run_sweep(&spec, tol).map_err(usage)?;
    let path = spec.out.as_ref().map(PathBuf::from);
    write_to(path.as_ref(), out, |w| sweep::write_csv(w, &spec, &rows))
}

fn oracle_check(a: &OracleArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let cfg = OracleConfig {
        t_values: a.t.clone(),
        trunc: a.trunc,
        qubit: DualRailQubit::from_angle(a.theta),
        outcome: a.outcome,
    };
    let report = oracle_comparison(&cfg)?;
    write_to(a.out.as_ref(), out, |w| report.write_csv(w))?;
    let _ = writeln!(err, "bosonic fidelity construction matches: {}", report.bosonic_fidelity_verdict());
    if !report.contract_ok() {
        let bad: Vec<String> = report
            .rows
            .iter()
            .filter(|r| matches!(r.status, crate::report::RowStatus::Fail | crate::report::RowStatus::Truncation))
            .map(|r| format!("{} at t = {} ({})", r.quantity, r.t, r.status))
            .collect();
        return Err(CliError::Oracle(bad.join("; ")));
    }
    Ok(())
}

fn estimate(cmd: &EstimateCommand, out: &mut dyn Write) -> io::Result<CliResult<()>> {
    match *cmd {
        EstimateCommand::HawkingTemperature { msun, kg } => {
            let mass = kg.unwrap_or_else(|| msun.unwrap_or(1.0) * SI.m_sun);
            match hawking_temperature_si(mass) {
                Ok(t) => kv(out, "T_bh_K", t)?,
                Err(e) => return Ok(Err(e.into())),
            }
        }
        EstimateCommand::RadiationDensity { t } => match radiation_density(t) {
            Ok(rho) => kv(out, "rho_J_per_m3", rho)?,
            Err(e) => return Ok(Err(e.into())),
        },
        EstimateCommand::CouplingTime { msun, dl, vc, tbh } => {
            let est = CavitySpec::new(dl, vc).and_then(|cav| match tbh {
                Some(t) => coupling_time_at_temperature(t, &cav),
                None => coupling_time(msun * SI.m_sun, &cav),
            });
            let est = match est {
                Ok(e) => e,
                Err(e) => return Ok(Err(e.into())),
            };
            kv(out, "T_K", est.temperature)?;
            kv(out, "kappa_m_per_s2", est.kappa)?;
            kv(out, "dnu_over_nu", est.redshift)?;
            kv(out, "dE_J", est.energy)?;
            kv(out, "t_s", est.time)?;
            kv(out, "t_over_universe_age", est.time / UNIVERSE_AGE_S)?;
        }
    }
    Ok(Ok(()))
}

fn tev(a: &TevArgs, out: &mut dyn Write) -> io::Result<CliResult<()>> {
    let s = match tev_scales(a.n, a.mstar, a.mbh) {
        Ok(s) => s,
        Err(e) => return Ok(Err(e.into())),
    };
    kv(out, "R_m", s.extra_dimension_size_m)?;
    kv(out, "r_h_4n_m", s.horizon_4n_m)?;
    kv(out, "r_h_4_m", s.horizon_4_m)?;
    kv(out, "ratio", s.ratio_4_over_4n)?;
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("bhe").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn value(text: &str, key: &str) -> f64 {
        text.lines()
            .find_map(|l| l.strip_prefix(&format!("{key} = ")))
            .unwrap_or_else(|| panic!("{key} missing in {text}"))
            .parse()
            .unwrap()
    }

    #[test]
    fn geom_examples() {
        let (c, o, _) = call(&["geom", "--d", "4", "--mass", "1"]);
        assert_eq!(c, 0);
        assert!((value(&o, "r_h") - 2.0).abs() < 1e-9);
        assert!((value(&o, "kappa") - 0.25).abs() < 1e-9);
        let (c, o, _) = call(&["geom", "--n", "1", "--mu", "2", "--a", "1"]);
        assert_eq!(c, 0);
        assert!((value(&o, "r_h") - 1.0).abs() < 1e-9);
        assert!((value(&o, "kappa") - 0.5).abs() < 1e-9);
        assert!((value(&o, "Omega") - 0.5).abs() < 1e-9);
        let (c, _, e) = call(&["geom", "--n", "1", "--mu", "1", "--a", "1"]);
        assert_eq!(c, 3);
        assert!(e.contains("naked singularity"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["geom", "--mass", "1"]).0, 2);
        assert_eq!(call(&["geom", "--d", "4", "--n", "1", "--mass", "1"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["entangle", "--omega", "x"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn entangle_and_teleport() {
        let (c, o, _) = call(&["entangle", "--kappa", "3.141592653589793", "--omega", "0.6931471805599453"]);
        assert_eq!(c, 0);
        assert!((value(&o, "E_N") - 0.98373).abs() < 1e-4);
        let (c, o, _) = call(&["teleport", "--statistics", "fermion", "--r", "0.7853981633974483", "--oracle"]);
        assert_eq!(c, 0);
        assert!((value(&o, "F") - 0.5).abs() < 1e-9);
        assert!((value(&o, "F_oracle") - 0.5).abs() < 1e-9);
        let (c, _, _) = call(&["teleport", "--n", "1", "--mu", "2", "--a", "1", "--m", "1", "--omega", "0.3"]);
        assert_eq!(c, 3);
    }

    #[test]
    fn estimates_and_tev() {
        let (c, o, _) = call(&["estimate", "coupling-time", "--msun", "1", "--dl", "1", "--vc", "1", "--tbh", "1e-8"]);
        assert_eq!(c, 0);
        assert!((value(&o, "t_s").log10() - 19.0).abs() <= 1.0);
        let (c, o, _) = call(&["tev", "--n", "2", "--mstar", "1", "--mbh", "5"]);
        assert_eq!(c, 0);
        let r = value(&o, "r_h_4n_m");
        assert!(r > 2.6e-19 / 3.0 && r < 2.6e-19 * 3.0);
        assert_eq!(call(&["estimate", "radiation-density", "--t=-1"]).0, 3);
    }

    #[test]
    fn oracle_exit_codes() {
        assert_eq!(call(&["oracle-check", "--t", "0.3"]).0, 0);
        let (c, _, e) = call(&["oracle-check", "--t", "0.5", "--trunc", "2"]);
        assert_eq!(c, 5);
        assert!(e.contains("truncation"));
    }

    #[test]
    fn sweep_to_stdout_and_bad_path() {
        let (c, o, _) = call(&["sweep", "--axis", "kappa 0.5 1 2", "--set", "omega=1", "--outputs", "E_N"]);
        assert_eq!(c, 0);
        assert_eq!(o.lines().count(), 3);
        let (c, _, _) = call(&["sweep", "--axis", "kappa 0.5 1 2", "--set", "omega=1", "--outputs", "E_N", "--out", "/nonexistent/dir/x.csv"]);
        assert_eq!(c, 4);
        assert_eq!(call(&["sweep", "--axis", "kappa 0.5 1 1", "--outputs", "E_N"]).0, 2);
    }
}
