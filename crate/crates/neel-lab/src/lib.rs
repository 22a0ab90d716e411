//! Hartree–Fock theory of the half-filled Hubbard model on the anisotropic
//! cubic lattice: densities of states, the Néel temperature, the
//! antiferromagnetic gap, the BCS universal function and the small-`U`
//! asymptotic formulas.
//!
//! Numerical kernels in [`numerics`], the square-lattice density and the
//! series in [`asymptotics::series`] are generic over [`Real`]; the aliases
//! below fix the scalar to `f64` or [`DoubleDouble`].

// `!(x > 0.0)` is used on purpose so that NaN arguments are rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod bcs;
pub mod dd;
pub mod dos;
pub mod error;
pub mod gap;
pub mod neel;
pub mod numerics;
pub mod scalar;

pub use dd::DoubleDouble;
pub use error::{Error, Result};
pub use scalar::Real;

pub type Dd = DoubleDouble;

pub type Settings = numerics::QuadratureSettings<f64>;
pub type SettingsDd = numerics::QuadratureSettings<Dd>;

pub type Bracket = numerics::RootBracket<f64>;
pub type BracketDd = numerics::RootBracket<Dd>;

pub type Cheb = numerics::Chebyshev<f64>;
pub type ChebDd = numerics::Chebyshev<Dd>;

pub type Series = asymptotics::SeriesSpec<f64>;
pub type SeriesDd = asymptotics::SeriesSpec<Dd>;
