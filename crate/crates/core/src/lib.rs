//! Fuzzy leakage inventory model without shortages.
//!
//! Demand and leakage rates are modelled as triangular fuzzy numbers,
//! defuzzified by signed distance, and fed into a closed-form optimal lot
//! size. Every closed form has an independent adaptive-quadrature path so
//! the two can be checked against each other.
//!
//! * [`fuzzy`]: triangular fuzzy numbers, α-cuts, interval arithmetic and
//!   signed distance (closed form and quadrature).
//! * [`defuzzify`]: the model-specific defuzzified demand `δ` and leakage
//!   fraction `ζ`.
//! * [`model`]: crisp and fuzzy cost functions and their optimal solutions.
//! * [`sensitivity`]: batch sweeps over spread grids and the audit against
//!   the published reference table.
//! * [`cli`]: the `leakage-eoq` command-line front end.

pub mod cli;
pub mod defuzzify;
mod error;
pub mod fuzzy;
pub mod model;
pub mod sensitivity;

pub use defuzzify::{Bounds, FuzzySpreads, Zeta, ZetaMethod};
pub use error::{Error, Result};
pub use fuzzy::{AlphaLevel, Interval, TriangularFuzzyNumber};
pub use model::{Baseline, CrispParams, CycleQuantities, RelMetrics, SolutionRecord};
