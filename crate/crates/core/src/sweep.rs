//! Parameter points, grid sweeps and their CSV output.
//!
//! A point is a set of named parameters from a fixed vocabulary. Geometry is
//! resolved as follows:
//! - `r` given: the squeezing parameter is used directly, no geometry;
//! - `kappa` given: κ is used directly, Ω = 0;
//! - `d` given: Schwarzschild in d dimensions, sized by `r_h` or `M`;
//! - otherwise a (4+n)-dimensional rotating hole (n defaults to 0), sized by
//!   one of `r_h`, `M`, `mu` and spun by `a` or `a_star` (default 0).
//!
//! The mode frequency is `omega`, or `omega_rh` in units of 1/r_h.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::channels::{
    fidelity_boson, fidelity_boson_params, fidelity_fermion_params, log_negativity_boson_params,
    log_negativity_fermion_params, DEFAULT_SERIES_TOL,
};
use crate::error::{domain, Error, Result};
use crate::geometry::{mu_from_mass, RotatingBH, SchwarzschildBH};
use crate::modes::{squeeze, SqueezingParams, Statistics};

pub const MAX_AXES: usize = 3;

/// Input parameter names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    D,
    N,
    Mass,
    Mu,
    RH,
    A,
    AStar,
    Omega,
    OmegaRh,
    M,
    Statistics,
    Tol,
    Kappa,
    R,
}

impl Param {
    pub const ALL: [Param; 14] = [
        Param::D,
        Param::N,
        Param::Mass,
        Param::Mu,
        Param::RH,
        Param::A,
        Param::AStar,
        Param::Omega,
        Param::OmegaRh,
        Param::M,
        Param::Statistics,
        Param::Tol,
        Param::Kappa,
        Param::R,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::D => "d",
            Param::N => "n",
            Param::Mass => "M",
            Param::Mu => "mu",
            Param::RH => "r_h",
            Param::A => "a",
            Param::AStar => "a_star",
            Param::Omega => "omega",
            Param::OmegaRh => "omega_rh",
            Param::M => "m",
            Param::Statistics => "statistics",
            Param::Tol => "tol",
            Param::Kappa => "kappa",
            Param::R => "r",
        }
    }

    fn is_integer(self) -> bool {
        matches!(self, Param::D | Param::N | Param::M)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown parameter '{s}'")))
    }
}

/// Output column names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Output {
    Kappa,
    Omega,
    R,
    NOcc,
    EN,
    F,
}

impl Output {
    pub const ALL: [Output; 6] =
        [Output::Kappa, Output::Omega, Output::R, Output::NOcc, Output::EN, Output::F];

    pub fn name(self) -> &'static str {
        match self {
            Output::Kappa => "kappa",
            Output::Omega => "Omega",
            Output::R => "r",
            Output::NOcc => "N_occ",
            Output::EN => "E_N",
            Output::F => "F",
        }
    }
}

impl FromStr for Output {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Output::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown output '{s}'")))
    }
}

/// Parse a comma- or space-separated output list.
pub fn parse_outputs(s: &str) -> Result<Vec<Output>> {
    let outs: Vec<Output> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    if outs.is_empty() {
        return domain("at least one output is required");
    }
    Ok(outs)
}

/// A single parameter point.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub values: BTreeMap<Param, f64>,
    pub statistics: Statistics,
}

impl Point {
    pub fn new(statistics: Statistics) -> Self {
        Self { values: BTreeMap::new(), statistics }
    }

    pub fn with(mut self, p: Param, v: f64) -> Self {
        self.values.insert(p, v);
        self
    }

    fn get(&self, p: Param) -> Option<f64> {
        self.values.get(&p).copied()
    }

    fn get_int(&self, p: Param) -> Result<Option<i64>> {
        match self.get(p) {
            None => Ok(None),
            Some(v) if v.fract() == 0.0 && v.abs() < 1e9 => Ok(Some(v as i64)),
            Some(v) => domain(format!("{p} = {v} must be an integer")),
        }
    }
}

/// Everything computed at one point. Geometric fields are `None` when the
/// point bypasses geometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub kappa: Option<f64>,
    pub angular_velocity: Option<f64>,
    pub horizon_radius: Option<f64>,
    pub omega_eff: Option<f64>,
    pub squeezing: SqueezingParams,
    pub occupation: f64,
    pub log_negativity: f64,
    pub fidelity: f64,
}

impl Evaluation {
    pub fn output(&self, o: Output) -> Result<f64> {
        let missing = || Error::Domain(format!("{} is undefined when r is given directly", o.name()));
        match o {
            Output::Kappa => self.kappa.ok_or_else(missing),
            Output::Omega => self.angular_velocity.ok_or_else(missing),
            Output::R => Ok(self.squeezing.r()),
            Output::NOcc => Ok(self.occupation),
            Output::EN => Ok(self.log_negativity),
            Output::F => Ok(self.fidelity),
        }
    }
}

struct Geometry {
    kappa: f64,
    angular_velocity: f64,
    horizon_radius: Option<f64>,
}

fn resolve_geometry(p: &Point) -> Result<Geometry> {
    if let Some(kappa) = p.get(Param::Kappa) {
        return Ok(Geometry { kappa, angular_velocity: 0.0, horizon_radius: None });
    }
    let sizes = [Param::RH, Param::Mass, Param::Mu].into_iter().filter(|&q| p.get(q).is_some()).count();
    if sizes > 1 {
        return domain("give at most one of r_h, M, mu");
    }
    if p.get(Param::A).is_some() && p.get(Param::AStar).is_some() {
        return domain("give at most one of a, a_star");
    }
    if let Some(d) = p.get_int(Param::D)? {
        if p.get(Param::N).is_some() || p.get(Param::Mu).is_some() {
            return domain("d cannot be combined with n or mu");
        }
        if p.get(Param::A).unwrap_or(0.0) != 0.0 || p.get(Param::AStar).unwrap_or(0.0) != 0.0 {
            return domain("rotation needs n instead of d");
        }
        if d < 4 || d > 64 {
            return domain(format!("d = {d} must lie in [4, 64]"));
        }
        let bh = match p.get(Param::Mass) {
            Some(m) => SchwarzschildBH::from_mass(d as u32, m)?,
            None => SchwarzschildBH::new(d as u32, p.get(Param::RH).unwrap_or(1.0))?,
        };
        return Ok(Geometry {
            kappa: bh.surface_gravity(),
            angular_velocity: 0.0,
            horizon_radius: Some(bh.horizon_radius()),
        });
    }
    let n = p.get_int(Param::N)?.unwrap_or(0);
    if !(0..=60).contains(&n) {
        return domain(format!("n = {n} must lie in [0, 60]"));
    }
    let n = n as u32;
    let bh = if let Some(r_h) = p.get(Param::RH).or(if sizes == 0 { Some(1.0) } else { None }) {
        let a_star = match p.get(Param::A) {
            Some(a) => a / r_h,
            None => p.get(Param::AStar).unwrap_or(0.0),
        };
        RotatingBH::from_horizon(n, r_h, a_star)?
    } else {
        let mu = match p.get(Param::Mass) {
            Some(m) => mu_from_mass(n, m)?,
            None => p.get(Param::Mu).expect("one size given"),
        };
        match p.get(Param::AStar) {
            Some(a_star) => {
                if !(a_star >= 0.0 && a_star.is_finite()) || !(mu > 0.0) {
                    return domain("a_star must be non-negative and mu positive");
                }
                // Δ(r_h) = 0 with a = a_* r_h
                let r_h = (mu / (1.0 + a_star * a_star)).powf(1.0 / (n + 1) as f64);
                RotatingBH::from_horizon(n, r_h, a_star)?
            }
            None => RotatingBH::new(n, mu, p.get(Param::A).unwrap_or(0.0))?,
        }
    };
    let (kappa, angular_velocity) = bh.kappa_omega();
    Ok(Geometry { kappa, angular_velocity, horizon_radius: Some(bh.horizon_radius()) })
}

/// Evaluate a point. `default_tol` applies when `tol` is not set.
pub fn evaluate(p: &Point, default_tol: f64) -> Result<Evaluation> {
    let tol = p.get(Param::Tol).unwrap_or(default_tol);
    let stats = p.statistics;
    if let Some(r) = p.get(Param::R) {
        let squeezing = match stats {
            Statistics::Boson => SqueezingParams::boson_from_r(r)?,
            Statistics::Fermion => SqueezingParams::fermion_from_r(r)?,
        };
        let (log_negativity, fidelity) = match stats {
            Statistics::Boson => (
                log_negativity_boson_params(&squeezing, tol)?.value,
                fidelity_boson_params(&squeezing)?,
            ),
            Statistics::Fermion => (
                log_negativity_fermion_params(&squeezing)?,
                fidelity_fermion_params(&squeezing)?,
            ),
        };
        return Ok(Evaluation {
            kappa: None,
            angular_velocity: None,
            horizon_radius: None,
            omega_eff: None,
            occupation: squeezing.occupation(),
            squeezing,
            log_negativity,
            fidelity,
        });
    }

    let g = resolve_geometry(p)?;
    let omega = match (p.get(Param::Omega), p.get(Param::OmegaRh)) {
        (Some(_), Some(_)) => return domain("give one of omega, omega_rh"),
        (Some(w), None) => w,
        (None, Some(x)) => match g.horizon_radius {
            Some(r_h) => x / r_h,
            None => return domain("omega_rh needs a horizon radius; use omega with kappa"),
        },
        (None, None) => return domain("a mode frequency (omega or omega_rh) is required"),
    };
    if !(omega > 0.0 && omega.is_finite()) {
        return domain(format!("omega = {omega} must be positive"));
    }
    let m = p.get_int(Param::M)?.unwrap_or(0);
    let omega_eff = omega - m as f64 * g.angular_velocity;
    if !(omega_eff > 0.0) {
        return Err(Error::Superradiant { omega_eff });
    }
    let squeezing = squeeze(omega_eff, g.kappa, stats)?;
    let (log_negativity, fidelity) = match stats {
        Statistics::Boson => (
            log_negativity_boson_params(&squeezing, tol)?.value,
            fidelity_boson(omega_eff, g.kappa)?,
        ),
        Statistics::Fermion => (
            log_negativity_fermion_params(&squeezing)?,
            fidelity_fermion_params(&squeezing)?,
        ),
    };
    Ok(Evaluation {
        kappa: Some(g.kappa),
        angular_velocity: Some(g.angular_velocity),
        horizon_radius: g.horizon_radius,
        omega_eff: Some(omega_eff),
        occupation: squeezing.occupation(),
        squeezing,
        log_negativity,
        fidelity,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub param: Param,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub scale: Scale,
}

impl Axis {
    pub fn new(param: Param, min: f64, max: f64, count: usize, scale: Scale) -> Result<Self> {
        if param == Param::Statistics {
            return domain("statistics cannot be swept");
        }
        if count < 2 {
            return domain(format!("axis {param} needs at least 2 points"));
        }
        if !(min.is_finite() && max.is_finite()) {
            return domain(format!("axis {param} bounds must be finite"));
        }
        if scale == Scale::Log && !(min > 0.0 && max > 0.0) {
            return domain(format!("log axis {param} needs positive bounds"));
        }
        Ok(Self { param, min, max, count, scale })
    }

    pub fn values(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                let s = i as f64 / last;
                let v = match self.scale {
                    Scale::Linear => self.min + (self.max - self.min) * s,
                    Scale::Log => (self.min.ln() + (self.max.ln() - self.min.ln()) * s).exp(),
                };
                if i == self.count - 1 {
                    self.max
                } else if self.param.is_integer() {
                    v.round()
                } else {
                    v
                }
            })
            .collect()
    }
}

/// `name min max count [linear|log]`
impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        if !(4..=5).contains(&parts.len()) {
            return domain(format!("axis '{s}' must read 'name min max count [linear|log]'"));
        }
        let num = |t: &str| t.parse::<f64>().map_err(|_| Error::Domain(format!("bad number '{t}' in axis")));
        let count = parts[3]
            .parse::<usize>()
            .map_err(|_| Error::Domain(format!("bad count '{}' in axis", parts[3])))?;
        let scale = match parts.get(4).copied().unwrap_or("linear") {
            "linear" | "lin" => Scale::Linear,
            "log" => Scale::Log,
            other => return domain(format!("unknown axis scale '{other}'")),
        };
        Axis::new(parts[0].parse()?, num(parts[1])?, num(parts[2])?, count, scale)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axes: Vec<Axis>,
    pub fixed: BTreeMap<Param, f64>,
    pub statistics: Statistics,
    pub outputs: Vec<Output>,
    pub out: Option<String>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        Self {
            axes: Vec::new(),
            fixed: BTreeMap::new(),
            statistics: Statistics::Boson,
            outputs: Vec::new(),
            out: None,
        }
    }
}

impl SweepSpec {
    /// Parse `key = value` lines; `#` starts a comment. Keys: `axis`
    /// (repeatable), `outputs`, `statistics`, `out`, or any parameter name.
    pub fn parse_config(text: &str) -> Result<Self> {
        let mut spec = SweepSpec::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Domain(format!("line {}: expected key = value", lineno + 1)))?;
            spec.set(key.trim(), value.trim())
                .map_err(|e| Error::Domain(format!("line {}: {e}", lineno + 1)))?;
        }
        Ok(spec)
    }

    /// Apply one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "axis" => {
                let axis: Axis = value.parse()?;
                self.axes.retain(|a| a.param != axis.param);
                self.axes.push(axis);
            }
            "outputs" => self.outputs = parse_outputs(value)?,
            "statistics" => self.statistics = value.parse()?,
            "out" => self.out = Some(value.to_string()),
            _ => {
                let p: Param = key.parse()?;
                let v = value
                    .parse::<f64>()
                    .map_err(|_| Error::Domain(format!("bad value '{value}' for {key}")))?;
                self.fixed.insert(p, v);
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > MAX_AXES {
            return domain(format!("a sweep needs 1 to {MAX_AXES} axes"));
        }
        for (i, a) in self.axes.iter().enumerate() {
            if self.axes[..i].iter().any(|b| b.param == a.param) {
                return domain(format!("axis {} given twice", a.param));
            }
            if self.fixed.contains_key(&a.param) {
                return domain(format!("{} is both an axis and fixed", a.param));
            }
        }
        if self.outputs.is_empty() {
            return domain("at least one output is required");
        }
        Ok(())
    }

    pub fn header(&self) -> Vec<&'static str> {
        self.axes
            .iter()
            .map(|a| a.param.name())
            .chain(self.outputs.iter().map(|o| o.name()))
            .collect()
    }

    /// Grid points in row-major order (last axis fastest).
    pub fn points(&self) -> Vec<Vec<f64>> {
        let values: Vec<Vec<f64>> = self.axes.iter().map(Axis::values).collect();
        let mut out = vec![Vec::new()];
        for vs in &values {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    vs.iter().map(move |&v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out
    }
}

/// One CSV cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Value(f64),
    Na(&'static str),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Value(v) => write!(f, "{v:.16e}"),
            Cell::Na(reason) => write!(f, "NA:{reason}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub inputs: Vec<f64>,
    pub outputs: Vec<Cell>,
}

pub fn run_sweep(spec: &SweepSpec, default_tol: f64) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let rows = spec
        .points()
        .into_par_iter()
        .map(|inputs| {
            let mut point = Point { values: spec.fixed.clone(), statistics: spec.statistics };
            for (axis, &v) in spec.axes.iter().zip(&inputs) {
                point.values.insert(axis.param, v);
            }
            let outputs = match evaluate(&point, default_tol) {
                Ok(ev) => spec
                    .outputs
                    .iter()
                    .map(|&o| match ev.output(o) {
                        Ok(v) => Cell::Value(v),
                        Err(e) => Cell::Na(e.token()),
                    })
                    .collect(),
                Err(e) => vec![Cell::Na(e.token()); spec.outputs.len()],
            };
            SweepRow { inputs, outputs }
        })
        .collect();
    Ok(rows)
}

pub fn write_csv<W: Write + ?Sized>(w: &mut W, spec: &SweepSpec, rows: &[SweepRow]) -> std::io::Result<()> {
    writeln!(w, "{}", spec.header().join(","))?;
    for row in rows {
        let cells: Vec<String> = row
            .inputs
            .iter()
            .map(|&v| Cell::Value(v).to_string())
            .chain(row.outputs.iter().map(Cell::to_string))
            .collect();
        writeln!(w, "{}", cells.join(","))?;
    }
    Ok(())
}

/// Default series tolerance, overridable with `BHE_DEFAULT_TOL`.
pub fn default_tol_from_env() -> Result<f64> {
    match std::env::var("BHE_DEFAULT_TOL") {
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .map_err(|_| Error::Domain(format!("BHE_DEFAULT_TOL = '{s}' is not a number"))),
        Err(_) => Ok(DEFAULT_SERIES_TOL),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn kappa_point() {
        let p = Point::new(Statistics::Boson).with(Param::Kappa, PI).with(Param::Omega, LN_2);
        let ev = evaluate(&p, 1e-12).unwrap();
        assert!((ev.squeezing.r() - 0.5_f64.atanh()).abs() < 1e-15);
        assert!((ev.log_negativity - 0.983_73).abs() < 1e-4);
        assert!((ev.fidelity - 0.125).abs() < 1e-15);
    }

    #[test]
    fn geometry_routes_agree() {
        // d = 5 Schwarzschild equals the non-rotating n = 1 hole
        let s = Point::new(Statistics::Fermion).with(Param::D, 5.0).with(Param::RH, 2.0).with(Param::Omega, 0.3);
        let r = Point::new(Statistics::Fermion).with(Param::N, 1.0).with(Param::RH, 2.0).with(Param::Omega, 0.3);
        let a = evaluate(&s, 1e-10).unwrap();
        let b = evaluate(&r, 1e-10).unwrap();
        assert!((a.kappa.unwrap() - b.kappa.unwrap()).abs() < 1e-15);
        assert!((a.log_negativity - b.log_negativity).abs() < 1e-15);

        let by_mass = Point::new(Statistics::Boson).with(Param::D, 4.0).with(Param::Mass, 1.0).with(Param::Omega, 0.1);
        assert!((evaluate(&by_mass, 1e-10).unwrap().kappa.unwrap() - 0.25).abs() < 1e-15);

        // (mu, a_star) and (mu, a) land on the same hole
        let n1 = Point::new(Statistics::Boson).with(Param::N, 1.0).with(Param::Mu, 2.0).with(Param::Omega, 0.5);
        let via_a = evaluate(&n1.clone().with(Param::A, 1.0), 1e-10).unwrap();
        let via_star = evaluate(&n1.with(Param::AStar, 1.0), 1e-10).unwrap();
        assert!((via_a.kappa.unwrap() - 0.5).abs() < 1e-12);
        assert!((via_star.kappa.unwrap() - 0.5).abs() < 1e-12);
        assert!((via_star.angular_velocity.unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn point_errors() {
        let sr = Point::new(Statistics::Boson)
            .with(Param::N, 1.0)
            .with(Param::Mu, 2.0)
            .with(Param::A, 1.0)
            .with(Param::M, 1.0)
            .with(Param::Omega, 0.3);
        assert!(matches!(evaluate(&sr, 1e-10), Err(Error::Superradiant { .. })));
        let naked = Point::new(Statistics::Boson).with(Param::N, 1.0).with(Param::Mu, 1.0).with(Param::A, 1.0).with(Param::Omega, 0.3);
        assert!(matches!(evaluate(&naked, 1e-10), Err(Error::NakedSingularity { .. })));
        let frac = Point::new(Statistics::Boson).with(Param::N, 1.5).with(Param::Omega, 0.3);
        assert!(evaluate(&frac, 1e-10).is_err());
        assert!(evaluate(&Point::new(Statistics::Boson).with(Param::RH, 1.0), 1e-10).is_err());
    }

    #[test]
    fn direct_r() {
        let p = Point::new(Statistics::Fermion).with(Param::R, PI / 4.0);
        let ev = evaluate(&p, 1e-10).unwrap();
        assert!((ev.fidelity - 0.5).abs() < 1e-15);
        assert!((ev.log_negativity - 1.5_f64.log2()).abs() < 1e-15);
        assert!(ev.output(Output::Kappa).is_err());
    }

    #[test]
    fn axis_values() {
        let a: Axis = "omega 1 100 3 log".parse().unwrap();
        assert_eq!(a.values(), vec![1.0, 10.000000000000002, 100.0]);
        let n: Axis = "n 0 7 8".parse().unwrap();
        assert_eq!(n.values(), (0..8).map(f64::from).collect::<Vec<_>>());
        assert!("omega 1 2 1".parse::<Axis>().is_err());
        assert!("omega 0 2 5 log".parse::<Axis>().is_err());
        assert!("statistics 0 1 2".parse::<Axis>().is_err());
        assert!("bogus 0 1 2".parse::<Axis>().is_err());
    }

    #[test]
    fn config_parse_and_order() {
        let spec = SweepSpec::parse_config(
            "# comment\naxis = kappa 0.1 1 2\naxis = omega 1 3 3 # trailing\nstatistics = fermion\noutputs = E_N, F\nm = 0\n",
        )
        .unwrap();
        assert_eq!(spec.header(), vec!["kappa", "omega", "E_N", "F"]);
        assert_eq!(spec.statistics, Statistics::Fermion);
        let pts = spec.points();
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[0], vec![0.1, 1.0]);
        assert_eq!(pts[1], vec![0.1, 2.0]);
        assert_eq!(pts[3], vec![1.0, 1.0]);
        assert!(SweepSpec::parse_config("axis kappa").is_err());
        assert!(SweepSpec::parse_config("foo = 1").is_err());
    }

    #[test]
    fn sweep_cells_and_csv() {
        let mut spec = SweepSpec::parse_config(
            "axis = m 0 1 2\nn = 1\nmu = 2\na = 1\nomega = 0.3\noutputs = kappa, E_N\n",
        )
        .unwrap();
        let rows = run_sweep(&spec, 1e-10).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(matches!(rows[0].outputs[1], Cell::Value(_)));
        assert_eq!(rows[1].outputs[1], Cell::Na("superradiant"));
        let mut buf = Vec::new();
        write_csv(&mut buf, &spec, &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "m,kappa,E_N");
        assert_eq!(lines[2], "1.0000000000000000e0,NA:superradiant,NA:superradiant");
        assert!(!text.contains('\r'));
        spec.fixed.insert(Param::M, 0.0);
        assert!(run_sweep(&spec, 1e-10).is_err());
    }

    #[test]
    fn csv_values_round_trip() {
        for &v in &[0.1_f64, 1.0 / 3.0, 2.0_f64.sqrt(), 1e-300, 123456.789] {
            let s = Cell::Value(v).to_string();
            assert_eq!(s.parse::<f64>().unwrap(), v);
        }
    }
}
