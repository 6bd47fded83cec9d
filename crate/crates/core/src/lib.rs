//! Copula-linked compound (frequency-severity) regression.
//!
//! A compound loss `S = Y_1 + ... + Y_N` couples a claim count `N` with
//! per-claim severities `Y_j`. This crate links the two components through a
//! bivariate copula so that the count and the individual claim sizes may be
//! dependent, and provides:
//!
//! * marginal count and severity regression families ([`marginals`]),
//! * bivariate copulas with h-functions and conditional sampling ([`copulas`]),
//! * the joint likelihood for complete, censored, and truncated claim data
//!   ([`compound`]),
//! * two-stage and full maximum-likelihood estimation ([`estimation`]),
//! * seeded Monte Carlo simulation of aggregate losses ([`simulation`]),
//! * decision-support metrics: VaR, ordered Lorenz/Gini, CRPS ([`riskmetrics`]),
//! * goodness-of-fit diagnostics ([`diagnostics`]).

pub mod compound;
pub mod copulas;
pub mod diagnostics;
pub mod error;
pub mod estimation;
pub mod marginals;
pub mod numeric;
pub mod riskmetrics;
pub mod simulation;

pub use error::{Error, Result};
