//! Gauss–Laguerre, Gauss–Jacobi and Gauss–Hermite rules in O(n) time.
//!
//! Nodes and weights are evaluated directly from asymptotic expansions near
//! the hard edges, in the bulk and near the soft edge, with one independent
//! closed-form evaluation per node. A Golub–Welsch eigen-solver followed by
//! Newton refinement on the three-term recurrence serves as the reference for
//! small n and for testing.
//!
//! ```
//! use fastgauss::{gauss_laguerre, LaguerreOptions};
//!
//! let rule = gauss_laguerre(200, 0.7, LaguerreOptions::default()).unwrap();
//! let mass: f64 = rule.weights().iter().sum();
//! assert!((mass - 0.9086387328532904).abs() < 1e-12);
//! ```

mod dd;
pub mod error;
pub mod format;
pub mod hermite;
pub mod jacobi;
pub mod laguerre;
pub mod oracle;
mod par;
pub mod rule;
pub mod specfun;

pub use error::{Error, Result};
pub use hermite::{gauss_hermite, HermiteOptions};
pub use jacobi::{gauss_jacobi, gauss_jacobi_modified, JacobiOptions, Modifier};
pub use laguerre::{gauss_laguerre, LaguerreOptions};
pub use par::current_threads;
pub use rule::{Family, Method, Point, QuadratureRule, Warning, WeightFunction};
