//! Quadrature, root finding, Chebyshev fitting and the Γ/ψ functions.
//!
//! Nothing in here knows about the lattice model; every routine is generic
//! over [`Real`](crate::Real) so the same code runs in `f64` and in
//! double-double.

pub mod cheb;
mod gk;
pub mod quad;
pub mod roots;
pub mod special;

pub use cheb::Chebyshev;
pub use quad::{
    integrate, integrate_breaks, integrate_to_infinity, try_integrate_breaks, Endpoint, Ends,
    Estimate, QuadValue, QuadratureSettings,
};
pub use roots::{find_root_monotone, solve_monotone, RootBracket, RootOutcome};
pub use special::{digamma_fn, gamma_fn, EulerGamma, EULER_GAMMA};
