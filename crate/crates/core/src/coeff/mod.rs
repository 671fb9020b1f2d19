//! Exact coefficient arithmetic: rationals, Laurent polynomials, rational
//! functions and truncated Puiseux series, all ordered by the sign of the
//! lowest coefficient.

pub mod laurent;
pub mod puiseux;
pub mod ratfunc;
pub mod rational;
pub mod sign;
pub(crate) mod text;

pub use laurent::LaurentPoly;
pub use puiseux::{evaluate_at_monomial, PuiseuxSeries};
pub use ratfunc::RationalFunction;
pub use rational::{int, rat, Rational};
pub use sign::{DegMin, Sign, Valued};
