//! The `a → 1` limits of the `b = 1` brackets, evaluated with ε-jets at
//! `a = 1 + ε`.
//!
//! The bracket has a double pole `1/(1−a)²`, so the jet is formed for
//! `(1−a)²` times it (that is, without the denominator) and the limit is
//! read off the ε² coefficient after checking the lower two vanish.

use crate::error::{Error, Result};
use crate::exact::{int, EpsJet, PoleOrder, QPoly, RatFun};
use crate::qseries::QProduct;
use crate::theorems::forms::{harmonic_sigma, p_ratio, third};
use crate::theorems::statement::Check;

fn qe(e: u32) -> RatFun {
    RatFun::from(QPoly::monomial(int(1), e as usize))
}

/// `1 − a q^e`.
fn one_minus_a(e: u32) -> EpsJet {
    EpsJet::new(&RatFun::one() - &qe(e), -qe(e), RatFun::zero())
}

/// `1 − q^e / a`.
fn one_minus_over_a(e: u32) -> EpsJet {
    EpsJet::new(&RatFun::one() - &qe(e), qe(e), -qe(e))
}

/// `(aq², q²/a; q³)_m / (q³/a, aq³; q³)_m` as a jet.
fn y_jet(m: u32) -> Result<EpsJet> {
    let mut num = EpsJet::one();
    let mut den = EpsJet::one();
    for j in 0..m {
        num = &(&num * &one_minus_a(2 + 3 * j)) * &one_minus_over_a(2 + 3 * j);
        den = &(&den * &one_minus_over_a(3 + 3 * j)) * &one_minus_a(3 + 3 * j);
    }
    num.checked_div(&den)
}

fn dim_ok(dim: u32) -> Result<()> {
    if matches!(dim, 2 | 3) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("dimension {dim} is not 2 or 3")))
    }
}

/// `(1−a)²` times the bracket
/// `a(1−q^n)²P^{2d}/(1−a)² − (1−aq^n)(a−q^n)Y^d/(1−a)²`.
pub fn limit_jet(dim: u32, n: u32) -> Result<EpsJet> {
    dim_ok(dim)?;
    let m = third(n)?;
    let p = p_ratio(m).pow(2 * dim as i32)?.to_ratfun();
    let one_minus_qn = &RatFun::one() - &qe(n);
    let first = EpsJet::a().scale(&(&(&one_minus_qn * &one_minus_qn) * &p));
    let a_minus_qn = EpsJet::new(one_minus_qn.clone(), RatFun::one(), RatFun::zero());
    let second = &(&one_minus_a(n) * &a_minus_qn) * &y_jet(m)?.pow(dim);
    Ok(&first - &second)
}

/// `P^{2d} (q^n + d[n]² ∑_{r=1}^{m}(q^{3r−1}/[3r−1]² − q^{3r}/[3r]²))`,
/// with the exponent read as `3r − 1`.
pub fn limit_closed_form(dim: u32, n: u32) -> Result<RatFun> {
    dim_ok(dim)?;
    let m = third(n)?;
    let p = p_ratio(m).pow(2 * dim as i32)?.to_ratfun();
    let nn = QProduct::q_integer(n as i64).pow(2)?.to_ratfun();
    let sigma = harmonic_sigma(m).to_ratfun();
    let inner = &qe(n) + &(&nn * &sigma).scale(&int(dim as i64));
    Ok(&p * &inner)
}

pub fn verify_limit(dim: u32, n: u32) -> Result<Check> {
    let limit = limit_jet(dim, n)?.extract_limit(PoleOrder::Two)?;
    Ok(Check::identity(limit == limit_closed_form(dim, n)?))
}
