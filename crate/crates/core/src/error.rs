use thiserror::Error;

/// Errors raised by the physics and oracle layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Δ(r) has no positive root for the requested (n, μ, a).
    #[error("naked singularity: no horizon for n = {n}, mu = {mu}, a = {a}")]
    NakedSingularity { n: u32, mu: f64, a: f64 },

    /// ω − mΩ ≤ 0; the squeezing parameters are undefined there.
    #[error("superradiant mode: effective frequency {omega_eff} <= 0")]
    Superradiant { omega_eff: f64 },

    /// The truncated Fock construction dropped more weight than allowed.
    #[error("truncation error: trace deficit {deficit:e} exceeds {limit:e} at truncation {n_trunc}")]
    Truncation { deficit: f64, limit: f64, n_trunc: usize },

    /// Eigensolver input was not symmetric.
    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}

impl Error {
    /// Short machine token, used for `NA:<reason>` cells in sweep output.
    pub fn token(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::NakedSingularity { .. } => "naked_singularity",
            Error::Superradiant { .. } => "superradiant",
            Error::Truncation { .. } => "truncation",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::NoConvergence { .. } => "no_convergence",
        }
    }

    /// True for errors that come from the physics of the configuration
    /// rather than from a malformed request.
    pub fn is_physics(&self) -> bool {
        matches!(
            self,
            Error::NakedSingularity { .. } | Error::Superradiant { .. } | Error::Domain(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
