//! Closed forms and moduli, built as factored products.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{cyclotomic, int, BigRat, QPoly};
use crate::qseries::{ProductSum, QMonomial, QProduct};

/// `(n − 1)/3`, for `n ≡ 1 (mod 3)`.
pub fn third(n: u32) -> Result<u32> {
    if n == 0 || n % 3 != 1 {
        return Err(Error::Precondition(format!("n = {n} is not 1 mod 3")));
    }
    Ok((n - 1) / 3)
}

pub(crate) fn mono(s: &BigRat, power: i64) -> QMonomial {
    QMonomial::new(s.clone(), power)
}

pub(crate) fn qm(power: i64) -> QMonomial {
    QMonomial::q_pow(power)
}

/// `(x_1, …, x_r; q³)_m` over `(y_1, …, y_s; q³)_m`.
pub(crate) fn ratio3(num: &[QMonomial], den: &[QMonomial], m: u32) -> Result<QProduct> {
    let mut out = QProduct::one();
    for x in num {
        out = &out * &QProduct::pochhammer(x, 3, m);
    }
    for y in den {
        out = out.checked_div(&QProduct::pochhammer(y, 3, m))?;
    }
    Ok(out)
}

/// `(q²; q³)_m / (q³; q³)_m`.
pub fn p_ratio(m: u32) -> QProduct {
    ratio3(&[qm(2)], &[qm(3)], m).expect("(q^3; q^3)_m is nonzero")
}

/// `∑_{r=1}^{m} (q^{3r−1}/[3r−1]² − q^{3r}/[3r]²)`.
pub fn harmonic_sigma(m: u32) -> ProductSum {
    let mut out = ProductSum::default();
    for r in 1..=m as i64 {
        for (e, sign) in [(3 * r - 1, 1), (3 * r, -1)] {
            let t = &QProduct::q_pow(e) * &QProduct::q_integer(e).pow(-2).expect("[e] is nonzero");
            out.push(t.scaled(&int(sign)));
        }
    }
    out
}

/// `1 − s·q^n`.
pub fn one_minus_sqn(s: &BigRat, n: u32) -> QProduct {
    QProduct::one_minus(&mono(s, n as i64))
}

/// `s − q^n`.
pub fn s_minus_qn(s: &BigRat, n: u32) -> QProduct {
    QProduct::linear(s, &-BigRat::one(), n)
}

/// `c0 + c1·q^n`.
pub fn lin_qn(c0: &BigRat, c1: &BigRat, n: u32) -> QProduct {
    QProduct::linear(c0, c1, n)
}

/// `(1 − s q^n)(s − q^n)` as a polynomial.
pub fn pair_modulus(s: &BigRat, n: u32) -> QPoly {
    (&one_minus_sqn(s, n) * &s_minus_qn(s, n)).to_ratfun().num().clone()
}

pub fn phi_pow(n: u32, e: u32) -> QPoly {
    cyclotomic(n).pow(e)
}

/// `[n] = ∏_{d | n, d > 1} Φ_d`.
pub fn q_int_poly(n: u32) -> QPoly {
    QProduct::q_integer(n as i64).to_ratfun().num().clone()
}

pub fn product_poly(parts: &[QPoly]) -> QPoly {
    parts.iter().fold(QPoly::one(), |acc, p| &acc * p)
}

/// `(s q², q²/s, q²; q³)_m / (q³/s, s q³, q³; q³)_m`.
pub fn q_ratio(s: &BigRat, m: u32) -> Result<QProduct> {
    let inv = s.recip();
    ratio3(&[mono(s, 2), mono(&inv, 2), qm(2)], &[mono(&inv, 3), mono(s, 3), qm(3)], m)
}

/// `(s q², q²/s; q³)_m / (q³/s, s q³; q³)_m`, the `a`-dependent part of
/// [`q_ratio`].
pub fn y_ratio(s: &BigRat, m: u32) -> Result<QProduct> {
    let inv = s.recip();
    ratio3(&[mono(s, 2), mono(&inv, 2)], &[mono(&inv, 3), mono(s, 3)], m)
}
