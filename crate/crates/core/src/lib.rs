//! Exact Burau spectra, Puiseux-series signs and order-preservation verdicts
//! for braids.
//!
//! Conventions used throughout:
//! - braid words compose left to right, and the Burau matrices act on row
//!   vectors from the right, so `burau(αβ) = burau(α)·burau(β)`;
//! - the Artin action applies the leftmost braid letter first;
//! - `t` is a positive infinitesimal: an element is positive exactly when the
//!   coefficient of its lowest power of `t` is positive.

pub mod braids;
pub mod coeff;
pub mod error;
pub mod exec;
pub mod harness;
pub mod spectral;
pub mod threebraid;

pub use error::{Error, Result};
