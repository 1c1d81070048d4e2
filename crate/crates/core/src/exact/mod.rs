//! Exact arithmetic kernel: rationals, dense polynomials in `q`, reduced
//! rational functions, cyclotomic polynomials, gcd/CRT and ε-jets.

pub mod crt;
pub mod cyclotomic;
pub mod gcd;
pub mod jet;
pub mod poly;
pub mod ratfun;

pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;

pub use crt::poly_crt;
pub use cyclotomic::{cyclotomic, divisors};
pub use gcd::{ext_gcd, gcd, inverse_mod, lcm};
pub use jet::{EpsJet, PoleOrder};
pub use poly::QPoly;
pub use ratfun::RatFun;

/// Shorthand for the rational `n/d`.
///
/// # Panics
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}
