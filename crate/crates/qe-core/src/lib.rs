#![cfg_attr(not(feature = "std"), no_std)]

//! Frame-level Riemannian computations for invariant metrics on
//! low-dimensional homogeneous spaces.
//!
//! A space is presented by a [`frame::LieFrame`]: a basis `e_1, ..., e_d` of
//! invariant vector fields with constant structure coefficients
//! `[e_i, e_j] = sum_k c_ijk e_k`. An invariant metric is a constant Gram
//! matrix `g_ij = g(e_i, e_j)`. Every curvature quantity of such a metric
//! reduces to finite-dimensional linear algebra on `(c, g)`: there are no
//! charts, no discretization, and no symbolic differentiation anywhere.
//!
//! The toolkit is organized around the quasi-Einstein equation
//!
//! ```text
//! Ric + (1/2) L_X g - (1/m) Xb (x) Xb  =  lambda g,        Xb = g(X, .)
//! ```
//!
//! for an invariant field `X`, a nonzero constant `m`, and a constant
//! `lambda`. The modules build on each other roughly in this order:
//!
//! * [`frame`], [`curvature`]: frames, metrics, Koszul connection, curvature
//!   tensor, sectional curvature, Lie derivatives, Killing tests.
//! * [`quasi_einstein`]: the defining residual, trace-fitted `lambda`,
//!   Bochner-type diagnostics, Ricci eigenstructure.
//! * [`sasaki`]: three-dimensional Sasakian detection, rescaling of solutions
//!   to the Sasakian normalization, eta-Einstein fits, D-homotheties, and the
//!   Thurston-geometry classifier.
//! * [`submersion`]: circle fibrations over a quotient base, the O'Neill
//!   A-tensor, Yang-Mills and curvature-form reformulations of the
//!   quasi-Einstein conditions, almost-Kaehler structure on the base.
//! * [`variation`]: the canonical variation `g_t` of a fibration and the
//!   one-parameter family of quasi-Einstein solutions along it.
//! * [`solver`]: damped Gauss-Newton discovery of solutions from multistart
//!   seeds, with scale-aware deduplication.
//! * [`catalog`]: built-in example spaces with verified solutions.
//!
//! All tolerances flow through a single [`policy::NumericPolicy`] value.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature to use it in that configuration.

extern crate alloc;

pub mod catalog;
pub mod curvature;
pub mod error;
pub mod frame;
pub mod linalg;
pub mod policy;
pub mod quasi_einstein;
pub mod sasaki;
pub mod solver;
pub mod submersion;
pub mod variation;

mod fmath;

pub use error::{GeomError, Result};
pub use policy::NumericPolicy;
