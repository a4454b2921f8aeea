//! SI order-of-magnitude estimates: Hawking temperature of an astrophysical
//! hole, black-body energy density, and the time for a cavity parked near the
//! horizon to pick up a gravitational redshift signal.

use std::f64::consts::PI;

use crate::error::{domain, Result};

/// CODATA 2018 exact/recommended values, SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SIConstants {
    /// m s⁻¹
    pub c: f64,
    /// J s
    pub h: f64,
    /// J s
    pub hbar: f64,
    /// J K⁻¹
    pub k_b: f64,
    /// m³ kg⁻¹ s⁻²
    pub g: f64,
    /// kg
    pub m_sun: f64,
}

pub const SI: SIConstants = SIConstants {
    c: 299_792_458.0,
    h: 6.626_070_15e-34,
    hbar: 6.626_070_15e-34 / (2.0 * PI),
    k_b: 1.380_649e-23,
    g: 6.674_30e-11,
    m_sun: 1.988_47e30,
};

/// Age of the universe used for comparison, seconds.
pub const UNIVERSE_AGE_S: f64 = 4e17;

impl SIConstants {
    /// Radiation constant α = π² k_B⁴ / (15 ħ³ c³), J m⁻³ K⁻⁴.
    pub fn radiation_constant(&self) -> f64 {
        PI * PI * self.k_b.powi(4) / (15.0 * self.hbar.powi(3) * self.c.powi(3))
    }
}

/// Cavity resting near the horizon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavitySpec {
    /// Thickness Δl of the bottom wall, m.
    pub wall_thickness: f64,
    /// Volume V_c, m³.
    pub volume: f64,
}

impl CavitySpec {
    pub fn new(wall_thickness: f64, volume: f64) -> Result<Self> {
        if !(wall_thickness > 0.0 && wall_thickness.is_finite()) {
            return domain(format!("wall thickness {wall_thickness} m must be positive"));
        }
        if !(volume > 0.0 && volume.is_finite()) {
            return domain(format!("cavity volume {volume} m^3 must be positive"));
        }
        Ok(Self { wall_thickness, volume })
    }
}

impl Default for CavitySpec {
    /// 1 m wall, 1 m³ box.
    fn default() -> Self {
        Self { wall_thickness: 1.0, volume: 1.0 }
    }
}

/// ρ = α T⁴, J m⁻³.
pub fn radiation_density(temperature: f64) -> Result<f64> {
    if !(temperature >= 0.0 && temperature.is_finite()) {
        return domain(format!("temperature {temperature} K must be non-negative"));
    }
    Ok(SI.radiation_constant() * temperature.powi(4))
}

/// T_bh = ħ c³ / (8π G M k_B), kelvin.
pub fn hawking_temperature_si(mass_kg: f64) -> Result<f64> {
    if !(mass_kg > 0.0) || mass_kg.is_nan() {
        return domain(format!("mass {mass_kg} kg must be positive"));
    }
    Ok(SI.hbar * SI.c.powi(3) / (8.0 * PI * SI.g * mass_kg * SI.k_b))
}

/// Intermediate and final numbers of the coupling-time estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingEstimate {
    /// Bath temperature, K.
    pub temperature: f64,
    /// κ = 2π c k_B T / ħ, m s⁻².
    pub kappa: f64,
    /// Δν/ν₀ = κ Δl / c².
    pub redshift: f64,
    /// ΔE = α T⁴ V_c, J.
    pub energy: f64,
    /// t = h / (Δν/ν₀ · ΔE), s.
    pub time: f64,
}

/// Coupling time with T_bh taken from the hole's mass.
pub fn coupling_time(mass_kg: f64, cavity: &CavitySpec) -> Result<CouplingEstimate> {
    coupling_time_at_temperature(hawking_temperature_si(mass_kg)?, cavity)
}

/// Coupling time for a given bath temperature (K).
pub fn coupling_time_at_temperature(temperature: f64, cavity: &CavitySpec) -> Result<CouplingEstimate> {
    if !(temperature > 0.0 && temperature.is_finite()) {
        return domain(format!("temperature {temperature} K must be positive"));
    }
    let cavity = CavitySpec::new(cavity.wall_thickness, cavity.volume)?;
    let kappa = 2.0 * PI * SI.c * SI.k_b * temperature / SI.hbar;
    let redshift = kappa * cavity.wall_thickness / (SI.c * SI.c);
    let energy = radiation_density(temperature)? * cavity.volume;
    Ok(CouplingEstimate { temperature, kappa, redshift, energy, time: SI.h / (redshift * energy) })
}
