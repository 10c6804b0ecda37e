//! Exact supercharacter arithmetic for the periplectic supergroup `P(n)`.
//!
//! Supercharacters live in the ring `J_n` of symmetric Laurent polynomials
//! in `x_1, …, x_n` whose restriction to `x_i = t, x_j = t^{-1}` does not
//! depend on `t`. The crate provides the polynomial arithmetic, the
//! Duflo–Serganova map `ds_n`, thin Kac supercharacters, translation
//! functors on their classes, Euler characteristics of line bundles and a
//! constructive lift that writes every element of `J_n` as a lift of its
//! `ds`-image plus a kernel part.

pub mod cli;
pub mod dsmap;
pub mod error;
pub mod euler;
pub mod json;
pub mod laurent;
pub mod lift;
pub mod schur;
pub mod thinkac;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use laurent::{ExponentVector, LaurentPoly};
pub use schur::SchurExpansion;
pub use thinkac::KClass;
pub use weights::{DominantWeight, WeightDiagram};
