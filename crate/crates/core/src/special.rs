//! Gamma function at integer and half-integer arguments, and the unit-sphere
//! volumes built from it.
//!
//! Only arguments of the form k/2 ever occur, so Γ is evaluated by the exact
//! upward recursion Γ(x + 1) = x Γ(x) from Γ(1/2) = √π and Γ(1) = 1.

use std::f64::consts::PI;

use crate::error::{domain, Result};

/// Γ(k/2) for k ≥ 1.
pub fn gamma_half(k: u32) -> Result<f64> {
    if k == 0 {
        return domain("gamma_half: Γ(0) is a pole");
    }
    let (mut x, mut g) = if k % 2 == 0 {
        (1.0, 1.0)
    } else {
        (0.5, PI.sqrt())
    };
    let target = k as f64 / 2.0;
    while x < target {
        g *= x;
        x += 1.0;
    }
    Ok(g)
}

/// Surface volume of the unit k-sphere embedded in R^{k+1}:
/// 2π^{(k+1)/2} / Γ((k+1)/2).
pub fn sphere_volume(k: u32) -> Result<f64> {
    if k < 1 {
        return domain("sphere_volume requires k >= 1");
    }
    let half = (k + 1) as f64 / 2.0;
    Ok(2.0 * PI.powf(half) / gamma_half(k + 1)?)
}

/// Riemann ζ(s) for real s > 1 by Euler-Maclaurin summation.
///
/// Accurate to a few ulps for s ≥ 1.5, which is all the polylog expansion in
/// `channels` needs.
pub(crate) fn zeta(s: f64) -> f64 {
    debug_assert!(s > 1.0);
    const N: usize = 16;
    // B_{2j} / (2j)!
    const BERN: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30240.0,
        -1.0 / 1209600.0,
        1.0 / 47900160.0,
        -691.0 / 1307674368000.0,
    ];
    let n = N as f64;
    let mut sum: f64 = (1..N).map(|k| (k as f64).powf(-s)).sum();
    sum += n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);
    // s (s+1) ... (s+2j-2) n^{-s-2j+1}
    let mut rising = s;
    let mut npow = n.powf(-s - 1.0);
    for (j, b) in BERN.iter().enumerate() {
        sum += b * rising * npow;
        let m = (2 * j + 1) as f64;
        rising *= (s + m) * (s + m + 1.0);
        npow /= n * n;
    }
    sum
}
