//! Brute-force reference: build the shared and post-measurement states in a
//! truncated two-party Fock basis, then compute partial transposes, spectra,
//! negativities and fidelities numerically.
//!
//! Every state here is assembled from the mode expansions of Bob's Minkowski
//! vacuum and one-particle states in terms of region I / region II
//! occupations, followed by an explicit trace over region II. All amplitudes
//! are real, so density matrices are real symmetric.

use std::collections::BTreeMap;

use crate::error::{domain, Error, Result};
use crate::linalg::{eigenvalues_symmetric, DenseMatrix};
use crate::modes::SqueezingParams;

/// Default truncation (number of region II occupations kept per mode).
pub const DEFAULT_TRUNCATION: usize = 40;
/// Constructions refuse to run when more weight than this is lost.
pub const MAX_TRACE_DEFICIT: f64 = 0.01;
pub const MIN_TRUNCATION: usize = 2;
pub const MAX_TRUNCATION: usize = 200;

/// Label of a product basis state |a, b⟩.
pub type Label = (u32, u32);

/// Real symmetric matrix on a product basis {|a, b⟩}, a ∈ `a_levels`,
/// b ∈ `b_levels`, ordered with b running fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedDensityMatrix {
    a_levels: Vec<u32>,
    b_levels: Vec<u32>,
    matrix: DenseMatrix,
    trace_deficit: f64,
}

impl TruncatedDensityMatrix {
    pub fn new(a_levels: Vec<u32>, b_levels: Vec<u32>, matrix: DenseMatrix, trace_deficit: f64) -> Result<Self> {
        if a_levels.len() * b_levels.len() != matrix.dim() {
            return domain("basis size does not match matrix dimension");
        }
        Ok(Self { a_levels, b_levels, matrix, trace_deficit })
    }

    fn zeros(a_levels: Vec<u32>, b_levels: Vec<u32>) -> Self {
        let n = a_levels.len() * b_levels.len();
        Self { a_levels, b_levels, matrix: DenseMatrix::zeros(n), trace_deficit: 0.0 }
    }

    pub fn basis(&self) -> Vec<Label> {
        self.a_levels
            .iter()
            .flat_map(|&a| self.b_levels.iter().map(move |&b| (a, b)))
            .collect()
    }

    pub fn index_of(&self, (a, b): Label) -> Option<usize> {
        let ia = self.a_levels.iter().position(|&x| x == a)?;
        let ib = self.b_levels.iter().position(|&x| x == b)?;
        Some(ia * self.b_levels.len() + ib)
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// ⟨a,b|ρ|a',b'⟩
    pub fn element(&self, bra: Label, ket: Label) -> f64 {
        match (self.index_of(bra), self.index_of(ket)) {
            (Some(i), Some(j)) => self.matrix[(i, j)],
            _ => 0.0,
        }
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace()
    }

    /// Weight dropped by the truncation, computed analytically.
    pub fn trace_deficit(&self) -> f64 {
        self.trace_deficit
    }

    fn add_outer(&mut self, v: &[(usize, f64)]) {
        for &(i, x) in v {
            for &(j, y) in v {
                self.matrix[(i, j)] += x * y;
            }
        }
    }
}

/// Transpose on the first party: ⟨a,b|ρ^{T_A}|a',b'⟩ = ⟨a',b|ρ|a,b'⟩.
pub fn partial_transpose(rho: &TruncatedDensityMatrix) -> TruncatedDensityMatrix {
    let na = rho.a_levels.len();
    let nb = rho.b_levels.len();
    let mut out = DenseMatrix::zeros(rho.dim());
    for ia in 0..na {
        for ib in 0..nb {
            for ja in 0..na {
                for jb in 0..nb {
                    out[(ia * nb + ib, ja * nb + jb)] = rho.matrix[(ja * nb + ib, ia * nb + jb)];
                }
            }
        }
    }
    TruncatedDensityMatrix {
        a_levels: rho.a_levels.clone(),
        b_levels: rho.b_levels.clone(),
        matrix: out,
        trace_deficit: rho.trace_deficit,
    }
}

/// N(ρ) and E_N(ρ) from the spectrum of the partial transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct NegativityNumeric {
    pub negativity: f64,
    pub log_negativity: f64,
    /// Negative eigenvalues of ρ^{T_A}, ascending.
    pub negative_eigenvalues: Vec<f64>,
}

pub fn negativity_numeric(rho: &TruncatedDensityMatrix) -> Result<NegativityNumeric> {
    let spectrum = eigenvalues_symmetric(partial_transpose(rho).matrix())?;
    let negative_eigenvalues: Vec<f64> = spectrum.into_iter().filter(|&l| l < 0.0).collect();
    let negativity: f64 = negative_eigenvalues.iter().map(|l| (l.abs() - l) / 2.0).sum();
    Ok(NegativityNumeric {
        negativity,
        log_negativity: (2.0 * negativity + 1.0).log2(),
        negative_eigenvalues,
    })
}

/// Fock expansion of one Minkowski mode state: (region I occupation,
/// region II occupation, amplitude).
type Expansion = Vec<(u32, u32, f64)>;

fn boson_parts(r: f64) -> Result<(f64, f64)> {
    match SqueezingParams::boson_from_r(r)? {
        SqueezingParams::Boson { tanh, cosh, .. } if cosh.is_finite() => Ok((tanh, cosh)),
        _ => domain(format!("squeezing r = {r} is too large to represent")),
    }
}

/// |0⟩_M = Σ_k tanh^k r / cosh r |k⟩_I |k⟩_II and
/// |1⟩_M = Σ_k tanh^k r √(k+1) / cosh²r |k+1⟩_I |k⟩_II, for k < n_trunc.
fn boson_expansions(t: f64, c: f64, n_trunc: usize) -> (Expansion, Expansion) {
    let vac = (0..n_trunc as u32).map(|k| (k, k, t.powi(k as i32) / c)).collect();
    let one = (0..n_trunc as u32)
        .map(|k| (k + 1, k, t.powi(k as i32) * ((k + 1) as f64).sqrt() / (c * c)))
        .collect();
    (vac, one)
}

/// |0⟩_M = cos r |0⟩_I|0⟩_II + sin r |1⟩_I|1⟩_II,  |1⟩_M = |1⟩_I|0⟩_II.
fn fermion_expansions(r: f64) -> Result<(Expansion, Expansion)> {
    let SqueezingParams::Fermion { cos, sin, .. } = SqueezingParams::fermion_from_r(r)? else {
        unreachable!()
    };
    Ok((vec![(0, 0, cos), (1, 1, sin)], vec![(1, 0, 1.0)]))
}

fn check_truncation(n_trunc: usize) -> Result<()> {
    if !(MIN_TRUNCATION..=MAX_TRUNCATION).contains(&n_trunc) {
        return domain(format!(
            "truncation {n_trunc} outside [{MIN_TRUNCATION}, {MAX_TRUNCATION}]"
        ));
    }
    Ok(())
}

fn check_deficit(deficit: f64, n_trunc: usize) -> Result<()> {
    if deficit > MAX_TRACE_DEFICIT {
        return Err(Error::Truncation { deficit, limit: MAX_TRACE_DEFICIT, n_trunc });
    }
    Ok(())
}

/// Alice's Minkowski qubit entangled with Bob's mode,
/// (|0⟩_A|0⟩_B + |1⟩_A|1⟩_B)/√2, traced over region II.
fn bell_state(vac: &Expansion, one: &Expansion, b_levels: Vec<u32>) -> TruncatedDensityMatrix {
    let mut rho = TruncatedDensityMatrix::zeros(vec![0, 1], b_levels);
    let mut by_region_ii: BTreeMap<u32, Vec<(usize, f64)>> = BTreeMap::new();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    for (alice, exp) in [(0u32, vac), (1u32, one)] {
        for &(i, ii, amp) in exp {
            let idx = rho.index_of((alice, i)).expect("level present");
            by_region_ii.entry(ii).or_default().push((idx, s * amp));
        }
    }
    for v in by_region_ii.values() {
        rho.add_outer(v);
    }
    rho
}

/// ρ_AB for a bosonic mode, with region II occupations k < n_trunc.
pub fn bell_state_bosonic(r: f64, n_trunc: usize) -> Result<TruncatedDensityMatrix> {
    check_truncation(n_trunc)?;
    let (t, c) = boson_parts(r)?;
    let deficit = bell_bosonic_deficit(t, c, n_trunc);
    check_deficit(deficit, n_trunc)?;
    let (vac, one) = boson_expansions(t, c, n_trunc);
    let mut rho = bell_state(&vac, &one, (0..=n_trunc as u32).collect());
    rho.trace_deficit = deficit;
    Ok(rho)
}

/// ½ x^N [1 + (N+1)/cosh²r + x] with x = tanh²r.
fn bell_bosonic_deficit(t: f64, c: f64, n_trunc: usize) -> f64 {
    let x = t * t;
    let n = n_trunc as f64;
    0.5 * x.powi(n_trunc as i32) * (1.0 + (n + 1.0) / (c * c) + x)
}

/// Exact 4×4 ρ_AB for a fermionic mode, basis {00, 01, 10, 11}.
pub fn bell_state_fermionic(r: f64) -> Result<TruncatedDensityMatrix> {
    let (vac, one) = fermion_expansions(r)?;
    Ok(bell_state(&vac, &one, vec![0, 1]))
}

/// The n-th term of the bosonic ρ_AB on its own, in the basis
/// {|0,n⟩, |0,n+1⟩, |1,n⟩, |1,n+1⟩}:
/// tanh^{2n}r / (2cosh²r) (|0,n⟩⟨0,n| + √(n+1)/cosh r (|0,n⟩⟨1,n+1| + h.c.)
/// + (n+1)/cosh²r |1,n+1⟩⟨1,n+1|).
pub fn bosonic_block(r: f64, n: u32) -> Result<TruncatedDensityMatrix> {
    let (t, c) = boson_parts(r)?;
    let w = t.powi(2 * n as i32) / (2.0 * c * c);
    let mut rho = TruncatedDensityMatrix::zeros(vec![0, 1], vec![n, n + 1]);
    let i0 = rho.index_of((0, n)).unwrap();
    let i1 = rho.index_of((1, n + 1)).unwrap();
    let off = w * ((n + 1) as f64).sqrt() / c;
    rho.matrix[(i0, i0)] = w;
    rho.matrix[(i0, i1)] = off;
    rho.matrix[(i1, i0)] = off;
    rho.matrix[(i1, i1)] = w * (n + 1) as f64 / (c * c);
    rho.trace_deficit = 1.0 - rho.trace();
    Ok(rho)
}

/// Negativity obtained by partially transposing each term of ρ_AB separately
/// and summing the negative eigenvalues of the blocks, n < n_trunc.
///
/// This is not the negativity of ρ_AB: the transposed blocks overlap on the
/// states |1,n⟩ and |0,n+1⟩. It reproduces the closed-form series in
/// `channels::log_negativity_boson`.
pub fn negativity_blockwise(r: f64, n_trunc: usize) -> Result<NegativityNumeric> {
    check_truncation(n_trunc)?;
    let mut negative_eigenvalues = Vec::new();
    for n in 0..n_trunc as u32 {
        let block = bosonic_block(r, n)?;
        negative_eigenvalues.extend(negativity_numeric(&block)?.negative_eigenvalues);
    }
    negative_eigenvalues.sort_by(f64::total_cmp);
    let negativity: f64 = negative_eigenvalues.iter().map(|l| (l.abs() - l) / 2.0).sum();
    Ok(NegativityNumeric {
        negativity,
        log_negativity: (2.0 * negativity + 1.0).log2(),
        negative_eigenvalues,
    })
}

/// Teleportation outcome (i, j) of Alice's joint measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outcome(pub u8, pub u8);

impl Outcome {
    pub const ALL: [Outcome; 4] = [Outcome(0, 0), Outcome(0, 1), Outcome(1, 0), Outcome(1, 1)];

    pub fn new(i: u8, j: u8) -> Result<Self> {
        if i > 1 || j > 1 {
            return domain(format!("outcome ({i}, {j}) must have i, j in {{0, 1}}"));
        }
        Ok(Outcome(i, j))
    }
}

/// Dual-rail qubit α|0⟩ + β|1⟩ with |0⟩ = |1,0⟩ and |1⟩ = |0,1⟩ on two modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualRailQubit {
    pub alpha: f64,
    pub beta: f64,
}

impl DualRailQubit {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if ((alpha * alpha + beta * beta) - 1.0).abs() > 1e-12 {
            return domain(format!("qubit ({alpha}, {beta}) is not normalized"));
        }
        Ok(Self { alpha, beta })
    }

    /// cos θ |0⟩ + sin θ |1⟩
    pub fn from_angle(theta: f64) -> Self {
        Self { alpha: theta.cos(), beta: theta.sin() }
    }

    /// Amplitudes (x_ij, y_ij) of Bob's conditional state for outcome (i, j).
    pub fn conditional(&self, outcome: Outcome) -> (f64, f64) {
        let (a, b) = (self.alpha, self.beta);
        match outcome {
            Outcome(0, 0) => (a, b),
            Outcome(0, 1) => (b, a),
            Outcome(1, 0) => (a, -b),
            _ => (-b, a),
        }
    }

    /// Bob's correction U_ij, acting on (x, y), with U_ij (x_ij, y_ij) = (α, β).
    pub fn correction(outcome: Outcome) -> [[f64; 2]; 2] {
        match outcome {
            Outcome(0, 0) => [[1.0, 0.0], [0.0, 1.0]],
            Outcome(0, 1) => [[0.0, 1.0], [1.0, 0.0]],
            Outcome(1, 0) => [[1.0, 0.0], [0.0, -1.0]],
            _ => [[0.0, 1.0], [-1.0, 0.0]],
        }
    }

    /// The dual-rail state x|1,0⟩ + y|0,1⟩ as a sparse vector.
    pub fn dual_rail(x: f64, y: f64) -> Vec<(Label, f64)> {
        vec![((1, 0), x), ((0, 1), y)]
    }
}

/// Bob's two dual-rail modes carrying x|0⟩_L + y|1⟩_L, each mode expanded in
/// region I/II occupations, with both region II modes traced out.
fn dual_rail_post_state(
    x: f64,
    y: f64,
    vac: &Expansion,
    one: &Expansion,
    levels: Vec<u32>,
) -> TruncatedDensityMatrix {
    let mut rho = TruncatedDensityMatrix::zeros(levels.clone(), levels);
    let mut by_region_ii: BTreeMap<(u32, u32), Vec<(usize, f64)>> = BTreeMap::new();
    // |0⟩_L = |1⟩|0⟩, |1⟩_L = |0⟩|1⟩
    for (coef, first, second) in [(x, one, vac), (y, vac, one)] {
        for &(i1, ii1, a1) in first {
            for &(i2, ii2, a2) in second {
                let idx = rho.index_of((i1, i2)).expect("level present");
                by_region_ii.entry((ii1, ii2)).or_default().push((idx, coef * a1 * a2));
            }
        }
    }
    for v in by_region_ii.values_mut() {
        v.sort_by_key(|&(i, _)| i);
        // merge repeated indices
        let mut merged: Vec<(usize, f64)> = Vec::with_capacity(v.len());
        for &(i, a) in v.iter() {
            match merged.last_mut() {
                Some((j, b)) if *j == i => *b += a,
                _ => merged.push((i, a)),
            }
        }
        rho.add_outer(&merged);
    }
    rho
}

/// ρ^(I) received by Bob for outcome (i, j) with bosonic modes, region II
/// occupations k < n_trunc per mode. Basis labels are the region I
/// occupations of Bob's two modes.
pub fn bob_post_state_bosonic(
    r: f64,
    qubit: &DualRailQubit,
    outcome: Outcome,
    n_trunc: usize,
) -> Result<TruncatedDensityMatrix> {
    check_truncation(n_trunc)?;
    let (t, c) = boson_parts(r)?;
    // kept weight factorizes as A_N B_N:
    // B_N = 1 − x^N,  A_N = 1 − x^N (1 + N/cosh²r)
    let x2 = t * t;
    let xn = x2.powi(n_trunc as i32);
    let kept = (1.0 - xn) * (1.0 - xn * (1.0 + n_trunc as f64 / (c * c)));
    let deficit = 1.0 - kept;
    check_deficit(deficit, n_trunc)?;
    let (vac, one) = boson_expansions(t, c, n_trunc);
    let (x, y) = qubit.conditional(outcome);
    let mut rho = dual_rail_post_state(x, y, &vac, &one, (0..=n_trunc as u32).collect());
    rho.trace_deficit = deficit;
    Ok(rho)
}

/// ρ^(I) for fermionic modes (exact, 4×4).
pub fn bob_post_state_fermionic(
    r: f64,
    qubit: &DualRailQubit,
    outcome: Outcome,
) -> Result<TruncatedDensityMatrix> {
    let (vac, one) = fermion_expansions(r)?;
    let (x, y) = qubit.conditional(outcome);
    Ok(dual_rail_post_state(x, y, &vac, &one, vec![0, 1]))
}

/// ⟨ψ|ρ|ψ⟩ for a normalized sparse target state.
pub fn fidelity_numeric(rho: &TruncatedDensityMatrix, target: &[(Label, f64)]) -> Result<f64> {
    let norm: f64 = target.iter().map(|(_, a)| a * a).sum();
    if (norm - 1.0).abs() > 1e-12 {
        return domain(format!("target state has norm² {norm}"));
    }
    let mut idx = Vec::with_capacity(target.len());
    for &(label, amp) in target {
        let i = rho
            .index_of(label)
            .ok_or_else(|| Error::Domain(format!("label {label:?} not in basis")))?;
        idx.push((i, amp));
    }
    let mut f = 0.0;
    for &(i, a) in &idx {
        for &(j, b) in &idx {
            f += a * rho.matrix[(i, j)] * b;
        }
    }
    Ok(f)
}

/// Fidelity of the teleported state after Bob's correction, which equals the
/// overlap of ρ^(I) with the uncorrected conditional state |φ_ij⟩.
pub fn teleportation_fidelity(rho: &TruncatedDensityMatrix, qubit: &DualRailQubit, outcome: Outcome) -> Result<f64> {
    let (x, y) = qubit.conditional(outcome);
    fidelity_numeric(rho, &DualRailQubit::dual_rail(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atanh(t: f64) -> f64 {
        t.atanh()
    }

    #[test]
    fn bell_projector_at_zero_squeezing() {
        let rho = bell_state_bosonic(0.0, 5).unwrap();
        assert!((rho.trace() - 1.0).abs() < 1e-15);
        assert!((rho.element((0, 0), (0, 0)) - 0.5).abs() < 1e-15);
        assert!((rho.element((0, 0), (1, 1)) - 0.5).abs() < 1e-15);
        assert!((rho.element((1, 1), (1, 1)) - 0.5).abs() < 1e-15);
        let ev = eigenvalues_symmetric(rho.matrix()).unwrap();
        assert!((ev.last().unwrap() - 1.0).abs() < 1e-14);
        assert!(ev[..ev.len() - 1].iter().all(|l| l.abs() < 1e-14));

        let pt = partial_transpose(&rho);
        let ev = eigenvalues_symmetric(pt.matrix()).unwrap();
        let nonzero: Vec<f64> = ev.into_iter().filter(|l| l.abs() > 1e-14).collect();
        assert_eq!(nonzero.len(), 4);
        assert!((nonzero[0] + 0.5).abs() < 1e-15);
        assert!(nonzero[1..].iter().all(|l| (l - 0.5).abs() < 1e-15));
        let n = negativity_numeric(&rho).unwrap();
        assert!((n.negativity - 0.5).abs() < 1e-15 && (n.log_negativity - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bosonic_block_structure() {
        let r = atanh(0.5);
        let (t, c) = (0.5_f64, r.cosh());
        let rho = bell_state_bosonic(r, 30).unwrap();
        for n in 0..5u32 {
            let w = t.powi(2 * n as i32) / (2.0 * c * c);
            let nn = (n + 1) as f64;
            assert!((rho.element((0, n), (0, n)) - w).abs() < 1e-15);
            assert!((rho.element((0, n), (1, n + 1)) - w * nn.sqrt() / c).abs() < 1e-15);
            // |1,n+1⟩ diagonal collects only term n
            assert!((rho.element((1, n + 1), (1, n + 1)) - w * nn / (c * c)).abs() < 1e-15);
        }
        assert_eq!(rho.element((1, 0), (1, 0)), 0.0);
    }

    #[test]
    fn trace_deficit_matches_tail() {
        for &t in &[0.1, 0.5, 0.7, 0.9] {
            for &n in &[5usize, 20, 40] {
                let Ok(rho) = bell_state_bosonic(atanh(t), n) else { continue };
                assert!((rho.trace() + rho.trace_deficit() - 1.0).abs() < 1e-13, "t={t} n={n}");
                assert!(rho.trace() <= 1.0 + 1e-15);
            }
        }
    }

    #[test]
    fn truncation_errors() {
        assert!(matches!(bell_state_bosonic(atanh(0.9), 5), Err(Error::Truncation { .. })));
        assert!(bell_state_bosonic(0.1, 1).is_err());
        assert!(bell_state_bosonic(0.1, 201).is_err());
        assert!(bell_state_bosonic(-0.1, 10).is_err());
    }

    #[test]
    fn partial_transpose_is_involution() {
        let rho = bell_state_bosonic(atanh(0.6), 12).unwrap();
        let back = partial_transpose(&partial_transpose(&rho));
        assert_eq!(back, rho);
        let pt = partial_transpose(&rho);
        assert!((pt.trace() - rho.trace()).abs() < 1e-15);
        assert!((pt.matrix().frobenius_norm() - rho.matrix().frobenius_norm()).abs() < 1e-15);
    }

    #[test]
    fn diagonal_unchanged_by_partial_transpose() {
        let mut m = DenseMatrix::zeros(4);
        for (i, x) in [0.1, 0.2, 0.3, 0.4].iter().enumerate() {
            m[(i, i)] = *x;
        }
        let rho = TruncatedDensityMatrix::new(vec![0, 1], vec![0, 1], m, 0.0).unwrap();
        assert_eq!(partial_transpose(&rho), rho);
        assert_eq!(negativity_numeric(&rho).unwrap().negativity, 0.0);
    }

    #[test]
    fn printed_block_partial_transpose() {
        let r = atanh(0.4);
        let c = r.cosh();
        let n = 3u32;
        let block = bosonic_block(r, n).unwrap();
        let pt = partial_transpose(&block);
        let w = 0.4_f64.powi(6) / (2.0 * c * c);
        let off = w * 2.0 / c;
        // the coherence moves to |0,n+1⟩ ↔ |1,n⟩
        assert!((pt.element((0, n + 1), (1, n)) - off).abs() < 1e-16);
        assert_eq!(pt.element((0, n), (1, n + 1)), 0.0);
        assert_eq!(pt.element((0, n + 1), (0, n + 1)), 0.0);
        assert_eq!(pt.element((1, n), (1, n)), 0.0);
        let lam = negativity_numeric(&block).unwrap().negative_eigenvalues;
        assert_eq!(lam.len(), 1);
        let want = crate::channels::neg_eigenvalue_boson(r, n).unwrap();
        assert!((lam[0] - want).abs() < 1e-15);
    }

    #[test]
    fn fermionic_state_exact() {
        let r = 0.4;
        let rho = bell_state_fermionic(r).unwrap();
        let (c, s) = (r.cos(), r.sin());
        assert!((rho.element((0, 0), (0, 0)) - c * c / 2.0).abs() < 1e-16);
        assert!((rho.element((0, 1), (0, 1)) - s * s / 2.0).abs() < 1e-16);
        assert!((rho.element((0, 0), (1, 1)) - c / 2.0).abs() < 1e-16);
        assert!((rho.element((1, 1), (1, 1)) - 0.5).abs() < 1e-15);
        assert_eq!(rho.element((1, 0), (1, 0)), 0.0);
        assert!((rho.trace() - 1.0).abs() < 1e-15);
        let ev = eigenvalues_symmetric(partial_transpose(&rho).matrix()).unwrap();
        let s2 = s * s;
        let want_neg = (s2 - (s2 * s2 + 4.0 * c * c).sqrt()) / 4.0;
        assert!((ev[0] - want_neg).abs() < 1e-15);
        assert!((ev[0] + c * c / 2.0).abs() < 1e-15);
        assert!(bell_state_fermionic(1.0).is_err());
    }

    #[test]
    fn outcome_table() {
        let q = DualRailQubit::new(0.6, 0.8).unwrap();
        assert_eq!(q.conditional(Outcome(0, 0)), (0.6, 0.8));
        assert_eq!(q.conditional(Outcome(0, 1)), (0.8, 0.6));
        assert_eq!(q.conditional(Outcome(1, 0)), (0.6, -0.8));
        assert_eq!(q.conditional(Outcome(1, 1)), (-0.8, 0.6));
        for o in Outcome::ALL {
            let (x, y) = q.conditional(o);
            let u = DualRailQubit::correction(o);
            let fixed = (u[0][0] * x + u[0][1] * y, u[1][0] * x + u[1][1] * y);
            assert_eq!(fixed, (0.6, 0.8));
        }
        assert!(DualRailQubit::new(1.0, 1.0).is_err());
        assert!(Outcome::new(2, 0).is_err());
    }

    #[test]
    fn bosonic_post_state_at_zero_is_pure() {
        let q = DualRailQubit::new(0.6, 0.8).unwrap();
        for o in Outcome::ALL {
            let rho = bob_post_state_bosonic(0.0, &q, o, 4).unwrap();
            assert!((rho.trace() - 1.0).abs() < 1e-15);
            assert!((teleportation_fidelity(&rho, &q, o).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn bosonic_post_state_fidelity_is_cosh_minus_six() {
        let q = DualRailQubit::from_angle(0.37);
        for &t in &[0.1, 0.3, 0.5] {
            let r = atanh(t);
            let rho = bob_post_state_bosonic(r, &q, Outcome(1, 1), 20).unwrap();
            let f = teleportation_fidelity(&rho, &q, Outcome(1, 1)).unwrap();
            assert!((f - r.cosh().powi(-6)).abs() < 1e-14);
            assert!((rho.trace() + rho.trace_deficit() - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn small_squeezing_fidelity_continuity() {
        let q = DualRailQubit::from_angle(1.1);
        let r = 1e-3;
        let rho = bob_post_state_bosonic(r, &q, Outcome(0, 1), 6).unwrap();
        let f = teleportation_fidelity(&rho, &q, Outcome(0, 1)).unwrap();
        assert!((1.0 - f) < 4.0 * r * r);
    }

    #[test]
    fn fermionic_post_state() {
        let r = (0.8_f64).sqrt().acos();
        let q = DualRailQubit::from_angle(0.9);
        for o in Outcome::ALL {
            let rho = bob_post_state_fermionic(r, &q, o).unwrap();
            assert!((rho.trace() - 1.0).abs() < 1e-15);
            assert!((rho.element((1, 1), (1, 1)) - 0.2).abs() < 1e-15);
            let f = teleportation_fidelity(&rho, &q, o).unwrap();
            assert!((f - 0.8).abs() < 1e-12);
        }
        let rho0 = bob_post_state_fermionic(0.0, &q, Outcome(0, 0)).unwrap();
        assert_eq!(rho0.element((1, 1), (1, 1)), 0.0);
    }

    #[test]
    fn fidelity_numeric_edges() {
        let q = DualRailQubit::new(1.0, 0.0).unwrap();
        let rho = bob_post_state_fermionic(0.0, &q, Outcome(0, 0)).unwrap();
        assert!((fidelity_numeric(&rho, &[((1, 0), 1.0)]).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(fidelity_numeric(&rho, &[((0, 1), 1.0)]).unwrap(), 0.0);
        assert!(fidelity_numeric(&rho, &[((0, 1), 0.5)]).is_err());
        assert!(fidelity_numeric(&rho, &[((7, 1), 1.0)]).is_err());
    }

    #[test]
    fn blockwise_reproduces_series() {
        for &t in &[0.1, 0.3, 0.5, 0.7] {
            let r = atanh(t);
            let b = negativity_blockwise(r, 60).unwrap();
            let s = crate::channels::log_negativity_boson(r, 1e-13).unwrap();
            assert!((b.log_negativity - s.value).abs() < 1e-12, "t={t}");
        }
    }
}
