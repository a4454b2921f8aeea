//! Field modes and their Hawking-Unruh squeezing.
//!
//! All quantities depend on the dimensionless ratio x = π ω̃ / κ, where
//! ω̃ = ω − mΩ. Bosons: tanh r = e^{−x}. Fermions: tan r = e^{−x}.
//! Exponentials are formed as e^{−x} with `expm1`/`ln_1p` so that both the
//! κ → 0 and κ → ∞ limits stay finite.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Particle statistics of the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistics {
    Boson,
    Fermion,
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistics::Boson => "boson",
            Statistics::Fermion => "fermion",
        })
    }
}

impl FromStr for Statistics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "boson" | "bosons" | "scalar" => Ok(Statistics::Boson),
            "fermion" | "fermions" | "dirac" => Ok(Statistics::Fermion),
            other => domain(format!("unknown statistics '{other}'")),
        }
    }
}

/// A single field mode seen by the near-horizon observer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSpec {
    pub omega: f64,
    /// Azimuthal number; zero for non-rotating holes.
    pub m: i32,
    pub statistics: Statistics,
}

impl ModeSpec {
    pub fn new(omega: f64, m: i32, statistics: Statistics) -> Result<Self> {
        if !(omega > 0.0 && omega.is_finite()) {
            return domain(format!("mode frequency omega = {omega} must be positive"));
        }
        Ok(Self { omega, m, statistics })
    }
}

/// ω̃ = ω − mΩ, rejecting superradiant modes.
pub fn effective_frequency(mode: &ModeSpec, angular_velocity: f64) -> Result<f64> {
    if !(mode.omega > 0.0) {
        return domain("mode frequency must be positive");
    }
    let w = mode.omega - mode.m as f64 * angular_velocity;
    if !(w > 0.0) {
        return Err(Error::Superradiant { omega_eff: w });
    }
    Ok(w)
}

fn ratio(omega_eff: f64, kappa: f64) -> Result<f64> {
    if !(kappa > 0.0) || kappa.is_nan() {
        return domain(format!("surface gravity kappa = {kappa} must be positive"));
    }
    if !(omega_eff > 0.0) || omega_eff.is_nan() {
        return Err(Error::Superradiant { omega_eff });
    }
    // kappa = +inf is the infinite-temperature limit, x = 0
    Ok(std::f64::consts::PI * omega_eff / kappa)
}

/// Bogoliubov squeezing parameter with its cached trigonometric or
/// hyperbolic functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SqueezingParams {
    /// tanh r ∈ [0, 1), cosh r ≥ 1.
    Boson { r: f64, tanh: f64, cosh: f64 },
    /// r ∈ [0, π/4].
    Fermion { r: f64, cos: f64, sin: f64 },
}

impl SqueezingParams {
    pub fn boson_from_r(r: f64) -> Result<Self> {
        if !(r >= 0.0 && r.is_finite()) {
            return domain(format!("squeezing r = {r} must be finite and non-negative"));
        }
        Ok(SqueezingParams::Boson { r, tanh: r.tanh(), cosh: r.cosh() })
    }

    /// Boson parameters from t = tanh r ∈ [0, 1).
    pub fn boson_from_tanh(t: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&t) {
            return domain(format!("tanh r = {t} must lie in [0, 1)"));
        }
        let cosh = 1.0 / ((1.0 - t) * (1.0 + t)).sqrt();
        Ok(SqueezingParams::Boson { r: t.atanh(), tanh: t, cosh })
    }

    pub fn fermion_from_r(r: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::FRAC_PI_4).contains(&r) {
            return domain(format!("fermionic r = {r} must lie in [0, pi/4]"));
        }
        Ok(SqueezingParams::Fermion { r, cos: r.cos(), sin: r.sin() })
    }

    pub fn r(&self) -> f64 {
        match *self {
            SqueezingParams::Boson { r, .. } | SqueezingParams::Fermion { r, .. } => r,
        }
    }

    pub fn statistics(&self) -> Statistics {
        match self {
            SqueezingParams::Boson { .. } => Statistics::Boson,
            SqueezingParams::Fermion { .. } => Statistics::Fermion,
        }
    }

    /// Mean thermal occupation of region I: sinh²r or sin²r.
    pub fn occupation(&self) -> f64 {
        match *self {
            SqueezingParams::Boson { tanh, cosh, .. } => (tanh * cosh).powi(2),
            SqueezingParams::Fermion { sin, .. } => sin * sin,
        }
    }
}

/// tanh r = e^{−π ω̃/κ}.
pub fn squeeze_boson(omega_eff: f64, kappa: f64) -> Result<SqueezingParams> {
    let x = ratio(omega_eff, kappa)?;
    let e = (-x).exp();
    // 1 − e^{−2x} without cancellation
    let one_minus_t2 = -(-2.0 * x).exp_m1();
    if one_minus_t2 == 0.0 {
        return domain("squeezing diverges: omega_eff/kappa underflows to zero");
    }
    // r = atanh(e^{−x}) = ½ [ln(1 + e^{−x}) − ln(1 − e^{−x})]
    let r = 0.5 * (e.ln_1p() - (-(-x).exp_m1()).ln());
    Ok(SqueezingParams::Boson { r, tanh: e, cosh: one_minus_t2.sqrt().recip() })
}

/// cos r = (1 + e^{−2π ω̃/κ})^{−1/2}, sin r = e^{−π ω̃/κ} cos r.
pub fn squeeze_fermion(omega_eff: f64, kappa: f64) -> Result<SqueezingParams> {
    let x = ratio(omega_eff, kappa)?;
    let e = (-x).exp();
    let cos = (1.0 + e * e).sqrt().recip();
    let sin = e * cos;
    Ok(SqueezingParams::Fermion { r: e.atan(), cos, sin })
}

pub fn squeeze(omega_eff: f64, kappa: f64, statistics: Statistics) -> Result<SqueezingParams> {
    match statistics {
        Statistics::Boson => squeeze_boson(omega_eff, kappa),
        Statistics::Fermion => squeeze_fermion(omega_eff, kappa),
    }
}

/// N² = 1 / (e^{2π ω̃/κ} ∓ 1), minus for bosons, plus for fermions.
pub fn occupation(omega_eff: f64, kappa: f64, statistics: Statistics) -> Result<f64> {
    let x = ratio(omega_eff, kappa)?;
    Ok(match statistics {
        Statistics::Boson => (2.0 * x).exp_m1().recip(),
        Statistics::Fermion => {
            let e = (-2.0 * x).exp();
            e / (1.0 + e)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn effective_frequency_examples() {
        let m = ModeSpec::new(2.0, 0, Statistics::Boson).unwrap();
        assert_eq!(effective_frequency(&m, 123.0).unwrap(), 2.0);
        let m = ModeSpec::new(1.0, 1, Statistics::Boson).unwrap();
        assert!((effective_frequency(&m, 0.4).unwrap() - 0.6).abs() < 1e-15);
        let m = ModeSpec::new(0.3, 1, Statistics::Fermion).unwrap();
        assert!(matches!(effective_frequency(&m, 0.5), Err(Error::Superradiant { .. })));
        assert!(ModeSpec::new(0.0, 0, Statistics::Boson).is_err());
    }

    #[test]
    fn boson_examples() {
        // π ω̃/κ = ln 2
        let p = squeeze_boson(LN_2, PI).unwrap();
        let SqueezingParams::Boson { r, tanh, cosh } = p else { panic!() };
        assert!((tanh - 0.5).abs() < 1e-15);
        assert!((r - 0.5_f64.atanh()).abs() < 1e-15);
        assert!((r - 0.549_306_144_334_054_8).abs() < 1e-15);
        assert!((cosh * cosh * (1.0 - tanh * tanh) - 1.0).abs() < 1e-14);

        let cold = squeeze_boson(1.0, 1e-6).unwrap();
        assert_eq!(cold.r(), 0.0);
        let hot = squeeze_boson(1.0, 1e6).unwrap();
        // r ≈ ½ ln(2/x) for small x = π ω̃/κ
        assert!((hot.r() - 0.5 * (2.0e6 / PI).ln()).abs() < 1e-5);
        let SqueezingParams::Boson { tanh, .. } = hot else { panic!() };
        assert!(tanh < 1.0);

        assert!(squeeze_boson(1.0, 0.0).is_err());
        assert!(squeeze_boson(-1.0, 1.0).is_err());
        assert!(squeeze_boson(1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn fermion_examples() {
        let cold = squeeze_fermion(1.0, 1e-6).unwrap();
        let SqueezingParams::Fermion { cos, .. } = cold else { panic!() };
        assert_eq!(cos, 1.0);
        let hot = squeeze_fermion(1.0, 1e12).unwrap();
        let SqueezingParams::Fermion { cos, r, .. } = hot else { panic!() };
        assert!((cos * cos - 0.5).abs() < 1e-11);
        assert!(r <= PI / 4.0);
        // 2π ω̃/κ = ln 4
        let p = squeeze_fermion(4.0_f64.ln(), 2.0 * PI).unwrap();
        let SqueezingParams::Fermion { cos, sin, .. } = p else { panic!() };
        assert!((cos * cos - 0.8).abs() < 1e-15);
        assert!((cos * cos + sin * sin - 1.0).abs() < 1e-15);
        let inf = squeeze_fermion(1.0, f64::INFINITY).unwrap();
        assert_eq!(inf.r(), PI / 4.0);
    }

    #[test]
    fn occupation_examples() {
        // 2π ω̃/κ = ln 2
        assert!((occupation(LN_2, 2.0 * PI, Statistics::Boson).unwrap() - 1.0).abs() < 1e-14);
        assert_eq!(occupation(1.0, 1e-4, Statistics::Boson).unwrap(), 0.0);
        assert_eq!(occupation(1.0, 1e-4, Statistics::Fermion).unwrap(), 0.0);
        let near_zero = occupation(1e-12, 1.0, Statistics::Fermion).unwrap();
        assert!((near_zero - 0.5).abs() < 1e-11);
    }

    #[test]
    fn occupation_matches_squeezing() {
        for &w in &[1e-6, 1e-3, 0.1, 1.0, 5.0, 50.0, 300.0, 1e3] {
            for &k in &[0.05, 0.3, 1.0, 4.0] {
                for stats in [Statistics::Boson, Statistics::Fermion] {
                    let n2 = occupation(w, k, stats).unwrap();
                    let via_r = squeeze(w, k, stats).unwrap().occupation();
                    let err = (n2 - via_r).abs() / n2.max(f64::MIN_POSITIVE);
                    assert!(n2 == via_r || err < 1e-12, "{stats} w={w} k={k}: {n2} {via_r}");
                }
            }
        }
    }

    #[test]
    fn large_ratio_returns_limits() {
        for stats in [Statistics::Boson, Statistics::Fermion] {
            let p = squeeze(800.0, 1.0, stats).unwrap();
            assert_eq!(p.r(), 0.0);
            assert_eq!(occupation(800.0, 1.0, stats).unwrap(), 0.0);
        }
    }

    #[test]
    fn statistics_parse() {
        assert_eq!("boson".parse::<Statistics>().unwrap(), Statistics::Boson);
        assert_eq!("Fermion".parse::<Statistics>().unwrap(), Statistics::Fermion);
        assert!("anyon".parse::<Statistics>().is_err());
    }
}
