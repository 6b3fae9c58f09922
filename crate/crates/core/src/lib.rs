//! Exact computer algebra for algebraic curves over finite fields.
//!
//! The crate classifies embedded curves by their order sequences, Frobenius
//! order sequences and strict Gauss-map structure (dual curve, separable and
//! inseparable degree, strangeness), entirely with exact arithmetic: prime
//! power fields and their extension towers, sparse multivariate polynomials,
//! function fields of plane models, Hasse derivatives via truncated Newton
//! lifting, and Wronskian rank profiles.

pub mod algebra;
pub mod funcfield;
pub mod gauss;
pub mod orders;
pub mod theorems;

pub use algebra::field::{FiniteField, FqElement};
pub use algebra::sparse::SparsePoly;
pub use algebra::tower::ExtensionTower;
pub use funcfield::{FunctionField, FunctionFieldElement, PlaneCurve, RationalFunction, TaylorLift};
pub use gauss::{GaussMap, GaussReport};
pub use orders::{EmbeddedCurve, OrderData};
