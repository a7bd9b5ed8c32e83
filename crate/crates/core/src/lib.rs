//! Exact arithmetic in the Grothendieck ring of degree-zero vector bundles on
//! an elliptic curve.
//!
//! Every indecomposable degree-zero bundle is `L^e ⊗ F_r` for a degree-zero
//! line bundle `L` and the Atiyah bundle `F_r`. This crate works inside a fixed
//! [`TorsionContext`] (the order of `L`) and provides:
//!
//! * [`bundle`]: tensor products, duals, powers, rank and determinant;
//! * [`kring`]: signed combinations of bundle classes;
//! * [`oracle`]: an independent character-based decomposition used to check
//!   the multiplication rule;
//! * [`classify`]: the closure set `S(E)`, the ring it generates, its Krull
//!   dimension and the smallest trivializing group scheme.

pub mod bundle;
pub mod classify;
pub mod context;
mod error;
pub mod kring;
pub mod oracle;

pub use bundle::{BundleSum, IndecomposableBundle};
pub use context::TorsionContext;
pub use error::{Error, Result};
pub use kring::KRingElement;
