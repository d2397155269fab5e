//! Exact linear and exterior algebra for G2- and Spin(7)-structures.
//!
//! The crate mechanically verifies the finite-dimensional facts behind the
//! classification of non-orientable three-submanifolds of G2-manifolds:
//! orbit invariants of 3- and 4-planes of R^7 (including the φ-plane orbit
//! reversed by G2), the reduced-tableau codimension bookkeeping of the
//! Cartan–Kähler argument, the torsion identities of the model examples, and
//! the homogeneous orbit computation on the round seven-sphere.
//!
//! Everything polynomial is computed over exact rationals; floating point
//! appears only in exponential-map sampling and finite-difference checks.

pub mod cartan;
pub mod coframe;
pub mod error;
pub mod form;
pub mod g2;
pub mod json;
pub mod matrix;
pub mod metric;
pub mod orbits;
pub mod scalar;
pub mod spin7;

pub use error::{G2Error, Result};
pub use form::{Form, MultiIndex, Multivector};
pub use g2::G2Data;
pub use matrix::Matrix;
pub use metric::Metric;
pub use scalar::{Quad, Rat, Scalar};
