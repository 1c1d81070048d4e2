//! Exact verification of q-supercongruences for multidimensional
//! truncated series modulo powers of cyclotomic polynomials, the
//! parametric congruences behind them, and their p-adic corollaries.
//!
//! Every claim is checked by exact rational arithmetic: q-series identities
//! as equalities of reduced rational functions, congruences as polynomial
//! divisibility, and corollaries as residues modulo `p^N`.

pub mod error;
pub mod exact;
pub mod congruence;
pub mod qseries;
pub mod theorems;
pub mod padic;

pub use error::{Error, Result};
