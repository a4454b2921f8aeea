//! Closed-form figures of merit for the shared Bell resource: logarithmic
//! negativity and teleportation fidelity, for bosonic and fermionic modes.

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::geometry::rotating_kappa_omega;
use crate::modes::{squeeze, SqueezingParams, Statistics};
use crate::special::{gamma_half, zeta};

/// Upper end of the tolerance range accepted by the series.
pub const MAX_SERIES_TOL: f64 = 1e-3;
/// Default series tolerance when none is configured.
pub const DEFAULT_SERIES_TOL: f64 = 1e-10;

/// Above this value of tanh²r the direct sum needs thousands of terms and the
/// polylogarithm expansion around tanh²r = 1 takes over.
const POLYLOG_SWITCH: f64 = 0.99;

/// Published mini black hole extrema (E_N max, F max) for comparison.
pub const PUBLISHED_BOSON_BOUNDS: (f64, f64) = (0.77, 0.25);
pub const PUBLISHED_FERMION_BOUNDS: (f64, f64) = (0.73, 0.65);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesMethod {
    /// Term-by-term sum with a geometric tail certificate.
    Direct,
    /// Expansion of Li_{−1/2}(tanh²r) about tanh²r = 1.
    Polylog,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityResult {
    /// Logarithmic negativity E_N.
    pub value: f64,
    pub terms_used: usize,
    /// Bound on the neglected part of the negativity sum.
    pub tail_bound: f64,
    pub method: SeriesMethod,
}

impl NegativityResult {
    /// E_N clamped to [0, 1] for display; computations keep `value`.
    pub fn reported(&self) -> f64 {
        self.value.clamp(0.0, 1.0)
    }
}

/// λ_n = −tanh^{2n}r √(n+1) / (2 cosh³r), the negative eigenvalue of the
/// partially transposed n-th block of the bosonic state.
pub fn neg_eigenvalue_boson(r: f64, n: u32) -> Result<f64> {
    if !(r >= 0.0 && r.is_finite()) {
        return domain(format!("squeezing r = {r} must be finite and non-negative"));
    }
    let c = r.cosh();
    if c.is_infinite() {
        return Ok(-0.0);
    }
    Ok(-r.tanh().powi(2 * n as i32) * ((n + 1) as f64).sqrt() / (2.0 * c * c * c))
}

fn check_tol(tol: f64) -> Result<()> {
    if !(tol > 0.0 && tol <= MAX_SERIES_TOL) {
        return domain(format!("series tolerance {tol} must lie in (0, {MAX_SERIES_TOL}]"));
    }
    Ok(())
}

/// E_N = log₂(1 + Σ_n tanh^{2n}r √(n+1) / cosh³r).
pub fn log_negativity_boson(r: f64, tol: f64) -> Result<NegativityResult> {
    let p = SqueezingParams::boson_from_r(r)?;
    log_negativity_boson_params(&p, tol)
}

pub fn log_negativity_boson_params(p: &SqueezingParams, tol: f64) -> Result<NegativityResult> {
    check_tol(tol)?;
    let SqueezingParams::Boson { tanh, cosh, .. } = *p else {
        return domain("bosonic negativity needs bosonic squeezing parameters");
    };
    let x = tanh * tanh;
    let (sum, terms_used, tail_bound, method) = if x <= POLYLOG_SWITCH {
        let (s, n, t) = direct_series(x, cosh, tol);
        (s, n, t, SeriesMethod::Direct)
    } else {
        let (s, n, t) = polylog_series(x, cosh, tol);
        (s, n, t, SeriesMethod::Polylog)
    };
    Ok(NegativityResult { value: sum.ln_1p() / std::f64::consts::LN_2, terms_used, tail_bound, method })
}

/// Σ x^n √(n+1) / c³ summed until the remainder is certified below `tol`.
///
/// For n ≥ N the term ratio x √((n+2)/(n+1)) is decreasing, so once it drops
/// below one the remainder is bounded by a geometric majorant.
fn direct_series(x: f64, cosh: f64, tol: f64) -> (f64, usize, f64) {
    let c3 = cosh * cosh * cosh;
    let mut sum = 0.0;
    let mut xn = 1.0;
    let mut n = 0usize;
    loop {
        let term = xn * ((n + 1) as f64).sqrt();
        sum += term;
        let next = xn * x * ((n + 2) as f64).sqrt();
        let q = x * (((n + 3) as f64) / ((n + 2) as f64)).sqrt();
        n += 1;
        if q < 1.0 {
            let tail = next / (1.0 - q) / c3;
            if term / c3 < tol && tail < tol {
                return (sum / c3, n, tail);
            }
        }
        xn *= x;
    }
}

/// Σ x^n √(n+1) = Li_{−1/2}(x)/x with
/// Li_s(e^μ) = Γ(1−s)(−μ)^{s−1} + Σ_k ζ(s−k) μ^k / k!,  |μ| < 2π.
fn polylog_series(x: f64, cosh: f64, tol: f64) -> (f64, usize, f64) {
    // u = 1 − x = sech²r, kept separate from x to avoid cancellation
    let u = (cosh * cosh).recip();
    let neg_mu = -(-u).ln_1p();
    let u32_ = u * u.sqrt();
    // Γ(3/2) (−μ)^{−3/2} u^{3/2}
    let singular = if u == 0.0 {
        gamma_half(3).unwrap()
    } else {
        gamma_half(3).unwrap() * (u / neg_mu).powf(1.5)
    };
    let mu = -neg_mu;
    let mut sum = singular;
    let mut pow = 1.0; // μ^k / k!
    let mut k = 0usize;
    let tail = loop {
        sum += zeta_neg_half(k) * pow * u32_;
        k += 1;
        pow *= mu / k as f64;
        // successive ratios are below |μ|(k+1.5)/(2π k) < 1/2 here
        let next = (zeta_neg_half(k) * pow * u32_).abs();
        if next < 1e-3 * tol || k >= 60 {
            break 2.0 * next;
        }
    };
    (sum / x, k + 1, tail / x)
}

/// ζ(−1/2 − k) from the functional equation
/// ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s).
fn zeta_neg_half(k: usize) -> f64 {
    use std::f64::consts::PI;
    let s = -0.5 - k as f64;
    2f64.powf(s)
        * PI.powf(s - 1.0)
        * (PI * s / 2.0).sin()
        * gamma_half(2 * k as u32 + 3).unwrap()
        * zeta(1.5 + k as f64)
}

/// E_N = log₂(1 + cos²r) for the fermionic resource.
pub fn log_negativity_fermion(r: f64) -> Result<f64> {
    let p = SqueezingParams::fermion_from_r(r)?;
    log_negativity_fermion_params(&p)
}

pub fn log_negativity_fermion_params(p: &SqueezingParams) -> Result<f64> {
    let SqueezingParams::Fermion { cos, .. } = *p else {
        return domain("fermionic negativity needs fermionic squeezing parameters");
    };
    Ok((cos * cos).ln_1p() / std::f64::consts::LN_2)
}

/// λ₁ = −cos²r / 2 for the fermionic resource.
pub fn neg_eigenvalue_fermion(r: f64) -> Result<f64> {
    let p = SqueezingParams::fermion_from_r(r)?;
    let SqueezingParams::Fermion { cos, .. } = p else { unreachable!() };
    Ok(-0.5 * cos * cos)
}

/// F = (1 − e^{−π ω̃/κ})³, the published bosonic teleportation fidelity.
pub fn fidelity_boson(omega_eff: f64, kappa: f64) -> Result<f64> {
    if !(kappa > 0.0) {
        return domain(format!("surface gravity kappa = {kappa} must be positive"));
    }
    if !(omega_eff > 0.0) {
        return Err(Error::Superradiant { omega_eff });
    }
    let x = std::f64::consts::PI * omega_eff / kappa;
    Ok((-(-x).exp_m1()).powi(3))
}

/// The published form in terms of r: (1 − tanh r)³.
pub fn fidelity_boson_params(p: &SqueezingParams) -> Result<f64> {
    let SqueezingParams::Boson { tanh, .. } = *p else {
        return domain("bosonic fidelity needs bosonic squeezing parameters");
    };
    Ok((1.0 - tanh).powi(3))
}

/// cosh⁻⁶r = (1 − e^{−2π ω̃/κ})³: the overlap obtained by expanding both
/// dual-rail modes and keeping the vacuum sector of region II.
pub fn fidelity_boson_construction(p: &SqueezingParams) -> Result<f64> {
    let SqueezingParams::Boson { cosh, .. } = *p else {
        return domain("bosonic fidelity needs bosonic squeezing parameters");
    };
    Ok(cosh.powi(-6))
}

/// F = cos²r.
pub fn fidelity_fermion(r: f64) -> Result<f64> {
    let p = SqueezingParams::fermion_from_r(r)?;
    fidelity_fermion_params(&p)
}

pub fn fidelity_fermion_params(p: &SqueezingParams) -> Result<f64> {
    let SqueezingParams::Fermion { cos, .. } = *p else {
        return domain("fermionic fidelity needs fermionic squeezing parameters");
    };
    Ok(cos * cos)
}

/// E_N and F for one mode of a given statistics, from ω̃ and κ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelFigures {
    pub squeezing: SqueezingParams,
    pub log_negativity: f64,
    pub fidelity: f64,
}

pub fn channel_figures(
    omega_eff: f64,
    kappa: f64,
    statistics: Statistics,
    tol: f64,
) -> Result<ChannelFigures> {
    let squeezing = squeeze(omega_eff, kappa, statistics)?;
    let (log_negativity, fidelity) = match statistics {
        Statistics::Boson => (
            log_negativity_boson_params(&squeezing, tol)?.value,
            fidelity_boson(omega_eff, kappa)?,
        ),
        Statistics::Fermion => (
            log_negativity_fermion_params(&squeezing)?,
            fidelity_fermion_params(&squeezing)?,
        ),
    };
    Ok(ChannelFigures { squeezing, log_negativity, fidelity })
}

/// Grid of mini black hole configurations, with r_h as the unit of length.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MiniBhGrid {
    pub omega_rh: Vec<f64>,
    pub extra_dimensions: Vec<u32>,
    pub a_star: Vec<f64>,
    pub m: i32,
}

impl MiniBhGrid {
    /// `count` evenly spaced frequencies over 0.05 ≤ ω r_h ≤ 0.5.
    pub fn standard(count: usize, extra_dimensions: Vec<u32>, a_star: Vec<f64>) -> Self {
        let (lo, hi) = MINI_BH_FREQUENCY_RANGE;
        let omega_rh = (0..count)
            .map(|i| lo + (hi - lo) * i as f64 / (count.max(2) - 1) as f64)
            .collect();
        Self { omega_rh, extra_dimensions, a_star, m: 0 }
    }

    fn points(&self) -> Vec<MiniBhPoint> {
        let mut out = Vec::new();
        for &n in &self.extra_dimensions {
            for &a_star in &self.a_star {
                for &omega_rh in &self.omega_rh {
                    out.push(MiniBhPoint { omega_rh, n, a_star });
                }
            }
        }
        out
    }
}

pub const MINI_BH_FREQUENCY_RANGE: (f64, f64) = (0.05, 0.5);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiniBhPoint {
    pub omega_rh: f64,
    pub n: u32,
    pub a_star: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiniBhBounds {
    pub statistics: Statistics,
    pub en_max: f64,
    pub en_argmax: MiniBhPoint,
    pub f_max: f64,
    pub f_argmax: MiniBhPoint,
    pub evaluated: usize,
    pub skipped: usize,
}

/// Largest E_N and F over the grid. Cells that are superradiant or have no
/// horizon are skipped and counted.
pub fn minibh_bounds(statistics: Statistics, grid: &MiniBhGrid, tol: f64) -> Result<MiniBhBounds> {
    let points = grid.points();
    if points.is_empty() {
        return domain("mini black hole grid is empty");
    }
    let (lo, hi) = MINI_BH_FREQUENCY_RANGE;
    if let Some(p) = points.iter().find(|p| !(lo..=hi).contains(&p.omega_rh)) {
        return domain(format!("omega r_h = {} outside [{lo}, {hi}]", p.omega_rh));
    }
    check_tol(tol)?;
    let m = grid.m;
    let cells: Vec<Option<(f64, f64)>> = points
        .par_iter()
        .map(|p| {
            if p.n == 0 && p.a_star > 1.0 {
                return None;
            }
            let (kappa, omega) = rotating_kappa_omega(p.n, 1.0, p.a_star).ok()?;
            let w = p.omega_rh - m as f64 * omega;
            let f = channel_figures(w, kappa, statistics, tol).ok()?;
            Some((f.log_negativity, f.fidelity))
        })
        .collect();

    let mut best: Option<MiniBhBounds> = None;
    let mut skipped = 0;
    for (p, cell) in points.iter().zip(&cells) {
        let Some((en, f)) = *cell else {
            skipped += 1;
            continue;
        };
        let b = best.get_or_insert(MiniBhBounds {
            statistics,
            en_max: en,
            en_argmax: *p,
            f_max: f,
            f_argmax: *p,
            evaluated: 0,
            skipped: 0,
        });
        if en > b.en_max {
            b.en_max = en;
            b.en_argmax = *p;
        }
        if f > b.f_max {
            b.f_max = f;
            b.f_argmax = *p;
        }
        b.evaluated += 1;
    }
    let mut b = best.ok_or_else(|| Error::Domain("no grid point could be evaluated".into()))?;
    b.skipped = skipped;
    Ok(b)
}
