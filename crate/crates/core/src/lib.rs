//! k-Struve functions and fractional kinetic equations.
//!
//! The crate is split into four layers:
//!
//! - [`specfun`]: Gamma, k-Gamma, Struve, k-Struve, Mittag-Leffler and
//!   Fox–Wright kernels, all summed as guarded truncated series.
//! - [`transforms`]: the Sumudu transform (quadrature and closed form), the
//!   Riemann–Liouville fractional integral on a uniform grid, and the
//!   algebraic transform rules.
//! - [`kinetics`]: closed-form solutions of
//!   `N(t) = N0·f(t) − d^ν·₀D_t^{−ν} N(t)` for k-Struve forcings, plus a
//!   direct product-integration Volterra solver used to adjudicate them.
//! - [`cli`]: the `kstruve` command-line front end (CSV and SVG output).
//!
//! ```
//! use kstruve::specfun::{k_struve, struve_h, KStruveParams, TruncationPolicy};
//!
//! let pol = TruncationPolicy::default();
//! let params = KStruveParams::new(1.0, 0.0, 1.0).unwrap();
//! let a = k_struve(&params, 1.5, &pol).unwrap().value;
//! let b = struve_h(0.0, 1.5, &pol).unwrap().value;
//! assert!((a - b).abs() < 1e-14);
//! ```

pub mod cli;
pub mod error;
pub mod kinetics;
pub mod specfun;
pub mod transforms;

pub use error::{Error, Result};
