//! Exact residues modulo `p^N`, Morita's `Γ_p`, and the `q → 1`
//! corollaries and classical supercongruences.

pub mod gamma;
pub mod num;
pub mod verify;

pub use gamma::{integer_lift, morita_gamma, morita_gamma_int, HEAVY_FACTORS};
pub use num::{is_odd_prime, prime_power, to_padic, valuation, PadicNum, RationalResidue};
pub use verify::{
    classical_term, cor_rhs, displayed_precision, harmonic2, pochhammer_rat, sigma_at_one, verify_classical,
    verify_cor, verify_harmonic_identity, verify_padic,
};
