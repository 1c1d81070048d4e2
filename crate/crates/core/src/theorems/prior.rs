//! The earlier single- and double-sum congruences the main theorems
//! strengthen.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exact::{int, QPoly};
use crate::qseries::{ProductSum, QProduct, TermSpec};
use crate::theorems::forms::{harmonic_sigma, lin_qn, p_ratio, phi_pow, q_int_poly, third};
use crate::theorems::parametric::staged_simplex_check;
use crate::theorems::statement::{Check, StatementId};

fn single_sum(terms: &[QProduct], bound: u32, rhs: &ProductSum, modulus: QPoly) -> Result<Check> {
    staged_simplex_check(terms, 1, bound as usize, rhs, &[modulus])
}

/// `∑_{k=0}^{n−1} A(k) ≡ 0`, modulo `[n]` for `n ≡ 1` and `[n]Φ_n` for
/// `n ≡ 2 (mod 3)`.
pub fn verify_vanhamme_partial(n: u32) -> Result<Check> {
    let modulus = match n % 3 {
        1 => q_int_poly(n),
        2 => &q_int_poly(n) * &phi_pow(n, 1),
        _ => return Err(Error::Precondition(format!("n = {n} is divisible by 3"))),
    };
    let terms = TermSpec::A.products_upto(n - 1)?;
    single_sum(&terms, n - 1, &ProductSum::default(), modulus)
}

/// `∑_{k ≤ (n−1)/3} A(k) ≡ [n]P³{1 + [n]²(2−q^n)Σ} (mod [n]Φ_n⁴)`.
pub fn verify_wei_a(n: u32) -> Result<Check> {
    let m = third(n)?;
    let nn = QProduct::q_integer(n as i64);
    let base = &nn * &p_ratio(m).pow(3)?;
    let coef = &nn.pow(2)? * &lin_qn(&int(2), &int(-1), n);
    let mut rhs = ProductSum::single(base.clone());
    rhs.extend(harmonic_sigma(m).times(&(&base * &coef)));
    let terms = TermSpec::A.products_upto(m)?;
    single_sum(&terms, m, &rhs, &q_int_poly(n) * &phi_pow(n, 4))
}

/// `∑_{k ≤ bound} A(k) ≡ 5[2n](q²;q³)³_{(2n−1)/3}/(q³;q³)³_{(2n−1)/3}
/// (mod [n]Φ_n⁵)` for `n ≡ 2 (mod 3)`. The truncation is an explicit
/// input; the natural candidates are `(2n−1)/3` and `n − 1`.
pub fn verify_wei_b(n: u32, bound: u32) -> Result<Check> {
    if n % 3 != 2 {
        return Err(Error::Precondition(format!("n = {n} is not 2 mod 3")));
    }
    let m = (2 * n - 1) / 3;
    let rhs = (&QProduct::q_integer(2 * n as i64) * &p_ratio(m).pow(3)?).scaled(&int(5));
    let terms = TermSpec::A.products_upto(bound)?;
    single_sum(&terms, bound, &ProductSum::single(rhs), &q_int_poly(n) * &phi_pow(n, 5))
}

/// `∑_{i+j ≤ n−1} A(i)A(j) ≡ q[n]² (mod [n]Φ_n²)` for the `[8k+1]` series,
/// `gcd(n, 6) = 1`.
pub fn verify_bachraoui_double(n: u32) -> Result<Check> {
    if n == 0 || n.gcd(&6) != 1 {
        return Err(Error::Precondition(format!("gcd({n}, 6) != 1")));
    }
    let rhs = &QProduct::q_pow(1) * &QProduct::q_integer(n as i64).pow(2)?;
    let terms = TermSpec::Bachraoui.products_upto(n - 1)?;
    let modulus = &q_int_poly(n) * &phi_pow(n, 2);
    staged_simplex_check(&terms, 2, n as usize - 1, &ProductSum::single(rhs), &[modulus])
}

/// Dispatch for the four earlier results; `wei-b` uses the truncation
/// `(2n−1)/3`.
pub fn verify_prior(id: StatementId, n: u32) -> Result<Check> {
    match id {
        StatementId::VanhammeQPartial => verify_vanhamme_partial(n),
        StatementId::WeiA => verify_wei_a(n),
        StatementId::WeiB => verify_wei_b(n, (2 * n - 1) / 3),
        StatementId::BachraouiDouble => verify_bachraoui_double(n),
        other => Err(Error::Precondition(format!("{other} is not an earlier result"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanhamme_partial() {
        assert!(verify_vanhamme_partial(4).unwrap().ok);
        assert!(verify_vanhamme_partial(5).unwrap().ok);
        assert!(verify_vanhamme_partial(7).unwrap().ok);
    }

    #[test]
    fn wei_a() {
        assert!(verify_wei_a(4).unwrap().ok);
        assert!(verify_wei_a(7).unwrap().ok);
    }

    #[test]
    fn wei_b_bounds() {
        for n in [2, 5, 8] {
            assert!(verify_wei_b(n, (2 * n - 1) / 3).unwrap().ok, "n={n}, M=(2n-1)/3");
            assert!(verify_wei_b(n, n - 1).unwrap().ok, "n={n}, M=n-1");
        }
    }

    #[test]
    fn bachraoui() {
        for n in [5, 7] {
            assert!(verify_bachraoui_double(n).unwrap().ok, "n={n}");
        }
    }
}
