//! Sumudu transform, Riemann–Liouville fractional integral and the transform
//! rules connecting them.

mod grid;
mod quadrature;
mod rl;
mod sumudu;

pub use grid::TimeGrid;
pub use quadrature::{adaptive_kronrod, GaussLaguerre, QuadratureScheme, QuadratureSpec};
pub use rl::{rl_fractional_integral, ProductTrapezoid, StartingWeights};
pub(crate) use rl::Lu;
pub use sumudu::{
    inverse_sumudu_kstruve, inverse_sumudu_power, sumudu_kstruve_closed, sumudu_numeric,
    sumudu_power_rule, sumudu_rl_rule, InverseRule,
};
