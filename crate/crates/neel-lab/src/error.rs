use thiserror::Error;

/// Errors raised by the solvers.
///
/// Variants split into two families: domain errors (bad input, a point where
/// the quantity is undefined, a violated precondition) and convergence errors
/// (the numerics could not reach the requested accuracy). The command-line
/// front end maps them to different exit codes via [`Error::is_domain`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("{function} has a pole at {x}")]
    Pole { function: &'static str, x: f64 },

    #[error("singular point: {0}")]
    Singularity(String),

    #[error(
        "quadrature did not converge after {subdivisions} subdivisions \
         (partial estimate {estimate:e}, error estimate {error:e})"
    )]
    Quadrature {
        estimate: f64,
        error: f64,
        subdivisions: usize,
    },

    #[error("invalid bracket [{lo:e}, {hi:e}] with f = ({f_lo:e}, {f_hi:e})")]
    InvalidBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("function is not monotone on the bracket (detected at x = {x:e})")]
    NotMonotone { x: f64 },

    #[error("root finding failed: {0}")]
    NoConvergence(String),

    #[error("U = {u} is below the underflow guard U_min = {u_min} for t_z = {t_z}")]
    UnderflowGuard { u: f64, t_z: f64, u_min: f64 },

    #[error("interpolant sup-error {sup_error:e} exceeds {limit:e}; increase the node count")]
    Fit { sup_error: f64, limit: f64 },
}

impl Error {
    /// True for input/precondition failures, false for numerical failures.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::Pole { .. }
                | Error::Singularity(_)
                | Error::InvalidBracket { .. }
                | Error::UnderflowGuard { .. }
        )
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
