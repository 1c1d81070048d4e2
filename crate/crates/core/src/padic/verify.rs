//! The `q → 1` corollaries, the harmonic-sum reduction and the classical
//! supercongruences, checked in `Z/p^N`.
//!
//! Sums are formed exactly over `Q` and reduced once at the end.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, rat, BigRat};
use crate::padic::gamma::morita_gamma;
use crate::padic::num::{is_odd_prime, PadicNum};
use crate::qseries::simplex_sum_with;
use crate::theorems::{Check, StatementId};

/// `(x)_k = x(x+1)…(x+k−1)`.
pub fn pochhammer_rat(x: &BigRat, k: u32) -> BigRat {
    (0..k).fold(BigRat::one(), |acc, i| acc * (x + int(i as i64)))
}

/// `H_m^{(2)} = ∑_{r=1}^{m} 1/r²`.
pub fn harmonic2(m: u32) -> BigRat {
    (1..=m as i64).map(|r| rat(1, r * r)).sum()
}

/// `(6k+1)((1/3)_k/(1)_k)⁶`.
pub fn classical_term(k: u32) -> BigRat {
    let ratio = pochhammer_rat(&rat(1, 3), k) / pochhammer_rat(&int(1), k);
    int(6 * k as i64 + 1) * num_traits::pow(ratio, 6)
}

/// `∑_{r=1}^{m}(1/(3r−1)² − 1/(3r)²)`.
pub fn sigma_at_one(m: u32) -> BigRat {
    (1..=m as i64).map(|r| rat(1, (3 * r - 1).pow(2)) - rat(1, (3 * r).pow(2))).sum()
}

/// `((2/3)_m/(1)_m)`.
fn p_at_one(m: u32) -> BigRat {
    pochhammer_rat(&rat(2, 3), m) / pochhammer_rat(&int(1), m)
}

fn require_one_mod_six(p: u64) -> Result<u32> {
    if !is_odd_prime(p) || p % 6 != 1 {
        return Err(Error::Precondition(format!("{p} is not a prime = 1 mod 6")));
    }
    Ok(((p - 1) / 3) as u32)
}

fn residue<const N: u32>(p: u64, r: &BigRat) -> Result<PadicNum<N>> {
    PadicNum::from_rational(p, r)
}

/// `∑(1/(3r−1)² − 1/(3r)²) ≡ −(1/3)H^{(2)}_{(p−1)/3} (mod p)`.
pub fn verify_harmonic_identity(p: u64) -> Result<bool> {
    let m = require_one_mod_six(p)?;
    let lhs = residue::<1>(p, &sigma_at_one(m))?;
    let rhs = residue::<1>(p, &(-harmonic2(m) / int(3)))?;
    Ok(lhs == rhs)
}

/// The `dim`-fold simplex sum of classical terms over `k_1+…+k_dim ≤ p−1`.
pub fn classical_simplex(p: u64, dim: u32) -> BigRat {
    let bound = (p - 1) as usize;
    let terms: Vec<BigRat> = (0..=bound as u32).map(classical_term).collect();
    simplex_sum_with(&terms, dim, bound, BigRat::zero(), |a, b| a + b, |a, b| a * b)
}

/// The right-hand side of the double (`cor-a`) or triple (`cor-aa`)
/// corollary, as an exact rational.
pub fn cor_rhs(id: StatementId, p: u64) -> Result<BigRat> {
    let m = require_one_mod_six(p)?;
    let pp = int(p as i64);
    match id {
        StatementId::CorA => {
            let bracket = pp.pow(2) + int(2) * pp.pow(4) * sigma_at_one(m);
            Ok(num_traits::pow(p_at_one(m), 6) * bracket)
        }
        StatementId::CorAa => {
            let bracket = pp.pow(3) - pp.pow(5) * harmonic2(m);
            Ok(num_traits::pow(p_at_one(m), 9) * bracket)
        }
        other => Err(Error::Precondition(format!("{other} is not a corollary"))),
    }
}

/// The corollary at precision `N` (displayed: 6).
pub fn verify_cor_at<const N: u32>(id: StatementId, p: u64) -> Result<bool> {
    let dim = match id {
        StatementId::CorA => 2,
        StatementId::CorAa => 3,
        other => return Err(Error::Precondition(format!("{other} is not a corollary"))),
    };
    if p < 7 {
        return Err(Error::Precondition(format!("p = {p} < 7")));
    }
    let rhs = cor_rhs(id, p)?;
    let lhs = classical_simplex(p, dim);
    Ok(residue::<N>(p, &lhs)? == residue::<N>(p, &rhs)?)
}

pub fn verify_cor(id: StatementId, p: u64) -> Result<bool> {
    verify_cor_at::<6>(id, p)
}

/// `−p Γ_p(1/3)⁹` or, for `p ≡ 5 (mod 6)`, `−(10/27)p⁴ Γ_p(1/3)⁹`, at
/// precision `N`.
fn gamma_rhs<const N: u32>(p: u64, second_branch: bool, heavy_ok: bool) -> Result<PadicNum<N>> {
    let g9 = morita_gamma::<N>(p, &rat(1, 3), heavy_ok)?.pow(9);
    let scalar = if second_branch { rat(-10, 27) * int(p as i64).pow(4) } else { -int(p as i64) };
    Ok(residue::<N>(p, &scalar)? * g9)
}

/// The classical supercongruence at precision `N`: `vanhamme-D2` truncates
/// at `(p−1)/3` (displayed precision 4), `long-ramakrishna` at `p − 1`
/// (displayed precision 6, branch chosen by `p mod 6`).
pub fn verify_classical_at<const N: u32>(id: StatementId, p: u64, heavy_ok: bool) -> Result<bool> {
    if !is_odd_prime(p) || p == 3 {
        return Err(Error::Precondition(format!("{p} is not an odd prime other than 3")));
    }
    let (bound, second_branch) = match id {
        StatementId::VanhammeD2 => ((require_one_mod_six(p)?) as u64, false),
        StatementId::LongRamakrishna => (p - 1, p % 6 == 5),
        other => return Err(Error::Precondition(format!("{other} is not a classical supercongruence"))),
    };
    let lhs: BigRat = (0..=bound as u32).map(classical_term).sum();
    Ok(residue::<N>(p, &lhs)? == gamma_rhs::<N>(p, second_branch, heavy_ok)?)
}

pub fn verify_classical(id: StatementId, p: u64, heavy_ok: bool) -> Result<bool> {
    match id {
        StatementId::VanhammeD2 => verify_classical_at::<4>(id, p, heavy_ok),
        _ => verify_classical_at::<6>(id, p, heavy_ok),
    }
}

/// The displayed precision of a p-adic statement.
pub fn displayed_precision(id: StatementId) -> Result<u32> {
    match id {
        StatementId::Harmonic => Ok(1),
        StatementId::VanhammeD2 => Ok(4),
        StatementId::CorA | StatementId::CorAa | StatementId::LongRamakrishna => Ok(6),
        other => Err(Error::Precondition(format!("{other} is not a p-adic statement"))),
    }
}

/// Runs a p-adic statement at precision `precision` (default: displayed).
/// Lower precisions are weaker but valid checks; higher ones are refused.
/// The report's `modulus_degree` is the precision exponent.
pub fn verify_padic(id: StatementId, p: u64, precision: Option<u32>, heavy_ok: bool) -> Result<Check> {
    let shown = displayed_precision(id)?;
    let n = precision.unwrap_or(shown);
    if n == 0 || n > shown {
        return Err(Error::Precondition(format!("{id} is stated modulo p^{shown}; precision {n} is out of range")));
    }
    macro_rules! at {
        ($f:ident, $($arg:expr),*) => {
            match n {
                1 => $f::<1>($($arg),*),
                2 => $f::<2>($($arg),*),
                3 => $f::<3>($($arg),*),
                4 => $f::<4>($($arg),*),
                5 => $f::<5>($($arg),*),
                _ => $f::<6>($($arg),*),
            }
        };
    }
    let ok = match id {
        StatementId::Harmonic => verify_harmonic_identity(p)?,
        StatementId::CorA | StatementId::CorAa => at!(verify_cor_at, id, p)?,
        _ => at!(verify_classical_at, id, p, heavy_ok)?,
    };
    Ok(Check::modulo(ok, n as usize))
}

impl StatementId {
    /// The primes exercised by `verify all --small`.
    pub fn small_ps(self) -> &'static [u64] {
        match self {
            StatementId::CorA => &[7, 13],
            StatementId::CorAa => &[7],
            StatementId::Harmonic => &[7, 13, 19, 31],
            StatementId::VanhammeD2 => &[7],
            StatementId::LongRamakrishna => &[5, 7],
            _ => &[],
        }
    }
}
