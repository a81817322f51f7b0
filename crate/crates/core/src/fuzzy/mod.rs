//! Triangular fuzzy numbers and the interval arithmetic of their α-cuts.
//!
//! A fuzzy number is handled entirely through its family of α-cuts: every
//! operation here either acts on a single cut ([`Interval`]) or on the three
//! defining points of a [`TriangularFuzzyNumber`], whose cuts are linear in α.

mod alpha;
mod interval;
pub mod quadrature;
mod tfn;

pub use alpha::AlphaLevel;
pub use interval::Interval;
pub use quadrature::{adaptive_simpson, signed_distance_quadrature};
pub use tfn::TriangularFuzzyNumber;
