//! Black hole backgrounds: d-dimensional Schwarzschild and (4+n)-dimensional
//! singly-rotating holes.
//!
//! Everything here is in natural units, G_d = c = ħ = k_B = 1, except
//! [`tev_scales`], which converts to metres.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::special::sphere_volume;

/// M_pl in TeV.
pub const PLANCK_MASS_TEV: f64 = 1.22e16;
/// ħc in metre·TeV, i.e. the length of 1 TeV⁻¹.
pub const HBAR_C_M_TEV: f64 = 1.9733e-19;

fn check_dim(d: u32) -> Result<()> {
    if d < 4 {
        return domain(format!("spacetime dimension d = {d} must be >= 4"));
    }
    Ok(())
}

fn check_positive(name: &str, x: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return domain(format!("{name} = {x} must be positive and finite"));
    }
    Ok(())
}

/// Mass of a d-dimensional Schwarzschild hole with horizon radius `r_h`
/// (G_d = 1).
pub fn mass_from_horizon(d: u32, r_h: f64) -> Result<f64> {
    check_dim(d)?;
    check_positive("r_h", r_h)?;
    let omega = sphere_volume(d - 2)?;
    Ok((d - 2) as f64 * r_h.powi(d as i32 - 3) * omega / (16.0 * PI))
}

/// Inverse of [`mass_from_horizon`].
pub fn horizon_from_mass(d: u32, mass: f64) -> Result<f64> {
    check_dim(d)?;
    check_positive("M", mass)?;
    let omega = sphere_volume(d - 2)?;
    Ok((16.0 * PI * mass / ((d - 2) as f64 * omega)).powf(1.0 / (d - 3) as f64))
}

/// f(r) = 1 − (r_h/r)^{d−3}.
pub fn lapse(d: u32, r_h: f64, r: f64) -> Result<f64> {
    check_dim(d)?;
    check_positive("r_h", r_h)?;
    if !(r > 0.0) {
        return domain(format!("lapse: r = {r} must be positive"));
    }
    Ok(1.0 - (r_h / r).powi(d as i32 - 3))
}

/// κ = (d − 3) / (2 r_h).
pub fn surface_gravity_schw(d: u32, r_h: f64) -> Result<f64> {
    check_dim(d)?;
    check_positive("r_h", r_h)?;
    Ok((d - 3) as f64 / (2.0 * r_h))
}

/// Complex partial-fraction form of the tortoise coordinate,
///
/// r_* = r + (r_h/p) Σ_k ω_k ln(r/r_h − ω_k),  ω_k = e^{−2πik/p},  p = d − 3,
///
/// whose imaginary part cancels pairwise for r > r_h.
pub fn tortoise_complex(d: u32, r_h: f64, r: f64) -> Result<Complex64> {
    check_dim(d)?;
    check_positive("r_h", r_h)?;
    if !(r > r_h) {
        return domain(format!("tortoise: r = {r} must lie outside r_h = {r_h}"));
    }
    let p = d - 3;
    let x = r / r_h;
    let sum: Complex64 = (0..p)
        .map(|k| {
            let root = Complex64::from_polar(1.0, -2.0 * PI * k as f64 / p as f64);
            root * (Complex64::new(x, 0.0) - root).ln()
        })
        .sum();
    Ok(Complex64::new(r, 0.0) + sum * (r_h / p as f64))
}

/// Real tortoise coordinate, dr_*/dr = 1/f(r), exterior region only.
pub fn tortoise(d: u32, r_h: f64, r: f64) -> Result<f64> {
    tortoise_complex(d, r_h, r).map(|z| z.re)
}

/// Temperature measured by a static observer at radius r: T_bh / √f(r).
pub fn local_temperature(t_bh: f64, d: u32, r_h: f64, r: f64) -> Result<f64> {
    if !(t_bh >= 0.0) {
        return domain("local_temperature: T_bh must be non-negative");
    }
    if !(r > r_h) {
        return domain(format!("local_temperature: r = {r} must lie outside r_h = {r_h}"));
    }
    Ok(t_bh / lapse(d, r_h, r)?.sqrt())
}

/// d-dimensional Schwarzschild black hole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchwarzschildBH {
    d: u32,
    r_h: f64,
}

impl SchwarzschildBH {
    pub fn new(d: u32, r_h: f64) -> Result<Self> {
        check_dim(d)?;
        check_positive("r_h", r_h)?;
        Ok(Self { d, r_h })
    }

    pub fn from_mass(d: u32, mass: f64) -> Result<Self> {
        Self::new(d, horizon_from_mass(d, mass)?)
    }

    pub fn dimension(&self) -> u32 {
        self.d
    }

    pub fn extra_dimensions(&self) -> u32 {
        self.d - 4
    }

    pub fn horizon_radius(&self) -> f64 {
        self.r_h
    }

    pub fn mass(&self) -> f64 {
        mass_from_horizon(self.d, self.r_h).expect("validated at construction")
    }

    pub fn surface_gravity(&self) -> f64 {
        (self.d - 3) as f64 / (2.0 * self.r_h)
    }

    /// Hawking temperature κ/2π.
    pub fn temperature(&self) -> f64 {
        self.surface_gravity() / (2.0 * PI)
    }

    /// β = 2π/κ.
    pub fn inverse_temperature(&self) -> f64 {
        2.0 * PI / self.surface_gravity()
    }

    pub fn lapse(&self, r: f64) -> Result<f64> {
        lapse(self.d, self.r_h, r)
    }

    pub fn tortoise(&self, r: f64) -> Result<f64> {
        tortoise(self.d, self.r_h, r)
    }

    pub fn local_temperature(&self, r: f64) -> Result<f64> {
        local_temperature(self.temperature(), self.d, self.r_h, r)
    }
}

/// Δ(r) = r² + a² − μ r^{1−n}.
pub fn delta(n: u32, mu: f64, a: f64, r: f64) -> f64 {
    r * r + a * a - mu * r.powi(1 - n as i32)
}

/// Outer horizon of the (4+n)-dimensional singly-rotating hole: the largest
/// positive root of Δ(r), found by bisection.
pub fn rotating_horizon(n: u32, mu: f64, a: f64) -> Result<f64> {
    check_positive("mu", mu)?;
    if !(a >= 0.0 && a.is_finite()) {
        return domain(format!("spin a = {a} must be non-negative"));
    }
    let naked = || Error::NakedSingularity { n, mu, a };
    let mut hi = 10.0 * mu.powf(1.0 / (n + 1) as f64).max(a);
    // For n = 0 Δ is a parabola with its minimum at μ/2; for n ≥ 1 it is
    // increasing on r > 0.
    let mut lo = if n == 0 { 0.5 * mu } else { 0.0 };
    let f_lo = delta(n, mu, a, lo);
    if f_lo > 0.0 || (n > 0 && f_lo == 0.0) {
        return Err(naked());
    }
    if f_lo == 0.0 {
        return Ok(lo);
    }
    while delta(n, mu, a, hi) <= 0.0 {
        hi *= 2.0;
        if !hi.is_finite() {
            return Err(naked());
        }
    }
    for _ in 0..2000 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if delta(n, mu, a, mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // Pick whichever end of the final bracket has the smaller residual.
    Ok(if delta(n, mu, a, lo).abs() <= delta(n, mu, a, hi).abs() {
        lo
    } else {
        hi
    })
}

/// Surface gravity and horizon angular velocity of the rotating hole.
pub fn rotating_kappa_omega(n: u32, r_h: f64, a_star: f64) -> Result<(f64, f64)> {
    check_positive("r_h", r_h)?;
    if !(a_star >= 0.0 && a_star.is_finite()) {
        return domain(format!("a_* = {a_star} must be non-negative"));
    }
    let s = 1.0 + a_star * a_star;
    let kappa = ((n + 1) as f64 + (n as f64 - 1.0) * a_star * a_star) / (2.0 * s * r_h);
    let omega = a_star / (s * r_h);
    Ok((kappa, omega))
}

/// Mass and angular momentum (G_{4+n} = 1).
pub fn rotating_mass_j(n: u32, mu: f64, a: f64) -> Result<(f64, f64)> {
    check_positive("mu", mu)?;
    if !(a >= 0.0) {
        return domain("spin a must be non-negative");
    }
    let area = sphere_volume(n + 2)?;
    let m = (n + 2) as f64 * area * mu / (16.0 * PI);
    let j = m * 2.0 * a / (n + 2) as f64;
    Ok((m, j))
}

/// μ for a given mass (inverse of the mass formula in [`rotating_mass_j`]).
pub fn mu_from_mass(n: u32, mass: f64) -> Result<f64> {
    check_positive("M", mass)?;
    let area = sphere_volume(n + 2)?;
    Ok(16.0 * PI * mass / ((n + 2) as f64 * area))
}

/// (4+n)-dimensional black hole with a single rotation parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatingBH {
    n: u32,
    mu: f64,
    a: f64,
    r_h: f64,
}

impl RotatingBH {
    pub fn new(n: u32, mu: f64, a: f64) -> Result<Self> {
        let r_h = rotating_horizon(n, mu, a)?;
        Ok(Self { n, mu, a, r_h })
    }

    /// Build from the horizon radius and a_* = a/r_h, which is always regular.
    pub fn from_horizon(n: u32, r_h: f64, a_star: f64) -> Result<Self> {
        check_positive("r_h", r_h)?;
        if !(a_star >= 0.0 && a_star.is_finite()) {
            return domain("a_* must be non-negative");
        }
        let a = a_star * r_h;
        let mu = (1.0 + a_star * a_star) * r_h.powi(n as i32 + 1);
        if n == 0 && a_star > 1.0 {
            // Δ(r_h) = 0 still holds, but r_h is the inner horizon.
            return Err(Error::NakedSingularity { n, mu, a });
        }
        Ok(Self { n, mu, a, r_h })
    }

    pub fn extra_dimensions(&self) -> u32 {
        self.n
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn spin(&self) -> f64 {
        self.a
    }

    pub fn horizon_radius(&self) -> f64 {
        self.r_h
    }

    pub fn a_star(&self) -> f64 {
        self.a / self.r_h
    }

    pub fn delta(&self, r: f64) -> f64 {
        delta(self.n, self.mu, self.a, r)
    }

    /// Σ(r, θ) = r² + a² cos²θ.
    pub fn sigma(&self, r: f64, theta: f64) -> f64 {
        r * r + self.a * self.a * theta.cos().powi(2)
    }

    pub fn surface_gravity(&self) -> f64 {
        self.kappa_omega().0
    }

    pub fn angular_velocity(&self) -> f64 {
        self.kappa_omega().1
    }

    pub fn kappa_omega(&self) -> (f64, f64) {
        rotating_kappa_omega(self.n, self.r_h, self.a_star()).expect("validated at construction")
    }

    pub fn temperature(&self) -> f64 {
        self.surface_gravity() / (2.0 * PI)
    }

    pub fn mass_and_angular_momentum(&self) -> (f64, f64) {
        rotating_mass_j(self.n, self.mu, self.a).expect("validated at construction")
    }
}

/// Length scales of a TeV-gravity black hole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TevScales {
    pub n: u32,
    pub m_star_tev: f64,
    pub m_bh_tev: f64,
    /// Size of the extra dimensions, metres.
    pub extra_dimension_size_m: f64,
    /// (4+n)-dimensional horizon radius, metres.
    pub horizon_4n_m: f64,
    /// Ordinary 4D horizon radius 2 M / M_pl², metres.
    pub horizon_4_m: f64,
    /// r_h(4)/r_h(4+n) estimated as (r_h(4+n)/R)^n.
    pub ratio_4_over_4n: f64,
}

pub fn tev_scales(n: u32, m_star_tev: f64, m_bh_tev: f64) -> Result<TevScales> {
    if n < 1 {
        return domain("tev_scales requires n >= 1");
    }
    check_positive("M_*", m_star_tev)?;
    check_positive("M_bh", m_bh_tev)?;
    let np2 = n as i32 + 2;
    // M_pl² = R^n M_*^{n+2}, in TeV⁻¹
    let r_size = (PLANCK_MASS_TEV.powi(2) / m_star_tev.powi(np2)).powf(1.0 / n as f64);
    // G_{4+n} = M_*^{-(n+2)}
    let d = n + 4;
    let g = m_star_tev.powi(-np2);
    let omega = sphere_volume(d - 2)?;
    let r_h_4n = (16.0 * PI * g * m_bh_tev / ((d - 2) as f64 * omega)).powf(1.0 / (d - 3) as f64);
    let r_h_4 = 2.0 * m_bh_tev / PLANCK_MASS_TEV.powi(2);
    Ok(TevScales {
        n,
        m_star_tev,
        m_bh_tev,
        extra_dimension_size_m: r_size * HBAR_C_M_TEV,
        horizon_4n_m: r_h_4n * HBAR_C_M_TEV,
        horizon_4_m: r_h_4 * HBAR_C_M_TEV,
        ratio_4_over_4n: (r_h_4n / r_size).powi(n as i32),
    })
}
