//! Morita's p-adic Gamma function.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::BigRat;
use crate::padic::num::{prime_power, PadicNum};

/// Products with more factors than this are only run when explicitly
/// allowed.
pub const HEAVY_FACTORS: u64 = 1_000_000;

/// `Γ_p(m) = (−1)^m ∏_{0<j<m, p∤j} j (mod p^N)` for an integer `m ≥ 0`.
pub fn morita_gamma_int<const N: u32>(p: u64, m: u64) -> Result<PadicNum<N>> {
    let modulus = prime_power(p, N)? as u128;
    let mut acc: u128 = 1 % modulus;
    for j in 1..m {
        if j % p != 0 {
            acc = acc * (j as u128 % modulus) % modulus;
        }
    }
    let v = PadicNum::<N>::new(p, acc as i128)?;
    Ok(if m % 2 == 1 { -v } else { v })
}

/// The integer `0 ≤ m < p^N` with `m ≡ x (mod p^N)`.
pub fn integer_lift(p: u64, n: u32, x: &BigRat) -> Result<u64> {
    let modulus = prime_power(p, n)?;
    let m = BigInt::from(modulus);
    let den = x.denom().mod_floor(&m);
    if (&den % BigInt::from(p)) == BigInt::from(0) {
        return Err(Error::NotAUnit { p });
    }
    let inv = den.extended_gcd(&m).x.mod_floor(&m);
    Ok((x.numer().mod_floor(&m) * inv).mod_floor(&m).to_u64().expect("below p^N"))
}

/// `Γ_p(x) mod p^N` for a `p`-integral rational, through the integer lift
/// (`Γ_p` is 1-Lipschitz, so `Γ_p(x) ≡ Γ_p(m)` whenever `x ≡ m mod p^N`).
/// The product has up to `p^N` factors; beyond [`HEAVY_FACTORS`] it needs
/// `heavy_ok`.
pub fn morita_gamma<const N: u32>(p: u64, x: &BigRat, heavy_ok: bool) -> Result<PadicNum<N>> {
    let m = integer_lift(p, N, x)?;
    if m > HEAVY_FACTORS && !heavy_ok {
        return Err(Error::Precondition(format!(
            "Γ_{p} at precision {N} needs a product of {m} factors; pass --heavy-ok"
        )));
    }
    morita_gamma_int(p, m)
}
