//! Scalar special functions, all evaluated as guarded truncated series.
//!
//! Every term is built as `sign · exp(log-magnitude)` so Gamma products
//! never overflow on their own, and terms are accumulated with compensated
//! summation.

mod fox_wright;
mod gamma;
mod mittag_leffler;
mod series;
mod struve;

pub use fox_wright::{fox_wright, fox_wright_accelerated, WrightParams};
pub use gamma::{gamma, k_gamma, ln_gamma_signed, log_gamma, log_k_gamma};
pub use mittag_leffler::{mittag_leffler, mittag_leffler_scaled};
pub use series::{wynn_epsilon, NeumaierSum, SeriesValue, TruncationPolicy};
pub use struve::{k_struve, struve_h, KStruveParams};

pub(crate) use series::{Step, Summation};
