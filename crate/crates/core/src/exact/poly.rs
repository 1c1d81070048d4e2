//! Dense univariate polynomials in `q` over the rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::BigRat;

/// Dense polynomial `∑ coeffs[i]·q^i`. The coefficient vector never has a
/// trailing zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn q() -> Self {
        Self::monomial(BigRat::one(), 1)
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRat, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); degree + 1];
        coeffs[degree] = c;
        QPoly { coeffs }
    }

    /// `1 - s·q^e`.
    pub fn binomial(s: &BigRat, e: usize) -> Self {
        Self::one() - Self::monomial(s.clone(), e)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect())
    }

    pub(crate) fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(BigRat::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Monic associate; the zero polynomial maps to itself.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(q^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRat::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        QPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        if let Some(out) = self.divrem_integral(divisor, dd, nd) {
            return Ok(out);
        }
        let lc_inv = divisor.coeffs[dd].recip();
        let monic_divisor = lc_inv.is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut rem[i + dd]);
            if top.is_zero() {
                continue;
            }
            let c = if monic_divisor { top } else { top * &lc_inv };
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    // Division by an integer polynomial with leading coefficient ±1 never
    // leaves the integers once the dividend's denominators are cleared, so
    // it runs on BigInt without per-step normalization.
    fn divrem_integral(&self, divisor: &QPoly, dd: usize, nd: usize) -> Option<(QPoly, QPoly)> {
        if divisor.coeffs.iter().any(|c| !c.is_integer()) {
            return None;
        }
        let lead = divisor.coeffs[dd].numer();
        let negate = if lead.is_one() {
            false
        } else if (-lead).is_one() {
            true
        } else {
            return None;
        };
        let dv: Vec<BigInt> = divisor.coeffs.iter().map(|c| c.numer().clone()).collect();
        let (mut rem, den) = self.to_int_form();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut rem[i + dd]);
            if top.is_zero() {
                continue;
            }
            let c = if negate { -top } else { top };
            for (j, d) in dv[..dd].iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Some((Self::from_int_form(quot, &den), Self::from_int_form(rem, &den)))
    }

    pub fn rem(&self, divisor: &QPoly) -> Result<QPoly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// `self / divisor` when the division is exact.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (quot, rem) = self.divrem(divisor)?;
        if !rem.is_zero() {
            return Err(Error::Precondition("inexact polynomial division".into()));
        }
        Ok(quot)
    }

    pub fn divides(&self, other: &QPoly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Writes `self = ints / den` with integer coefficients and `den > 0`
    /// the lcm of the coefficient denominators.
    pub(crate) fn to_int_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom() == &den {
                    c.numer().clone()
                } else {
                    c.numer() * (&den / c.denom())
                }
            })
            .collect();
        (ints, den)
    }

    pub(crate) fn from_int_form(ints: Vec<BigInt>, den: &BigInt) -> Self {
        if den.is_one() {
            return Self::from_bigints(ints);
        }
        Self::from_coeffs(
            ints.into_iter()
                .map(|c| BigRat::new(c, den.clone()))
                .collect(),
        )
    }
}

pub(crate) fn int_convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                if abs.is_integer() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "({abs})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "{}q", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}q^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigRat::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if self.is_constant() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_constant() {
            return self.scale(&rhs.coeffs[0]);
        }
        // Integer convolution avoids a gcd per coefficient product.
        let (a, da) = self.to_int_form();
        let (b, db) = rhs.to_int_form();
        QPoly::from_int_form(int_convolve(&a, &b), &(da * db))
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QPoly> for QPoly {
            type Output = QPoly;
            fn $m(self, rhs: &QPoly) -> QPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<QPoly> for &QPoly {
            type Output = QPoly;
            fn $m(self, rhs: QPoly) -> QPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self = &*self - rhs;
    }
}

impl From<BigRat> for QPoly {
    fn from(c: BigRat) -> Self {
        QPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn difference_of_squares() {
        let a = QPoly::from_ints(&[1, 1]);
        let b = QPoly::from_ints(&[1, -1]);
        assert_eq!(&a * &b, QPoly::from_ints(&[1, 0, -1]));
    }

    #[test]
    fn divrem_geometric() {
        let (quot, rem) = QPoly::from_ints(&[-1, 0, 0, 1])
            .divrem(&QPoly::from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(quot, QPoly::from_ints(&[1, 1, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divrem_q4_plus_1_by_q2_plus_1() {
        // q^4 + 1 = (q^2 + 1)(q^2 - 1) + 2
        let (quot, rem) = QPoly::from_ints(&[1, 0, 0, 0, 1])
            .divrem(&QPoly::from_ints(&[1, 0, 1]))
            .unwrap();
        assert_eq!(quot, QPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(rem, QPoly::from_ints(&[2]));
    }

    #[test]
    fn divrem_by_zero_is_an_error() {
        assert_eq!(QPoly::one().divrem(&QPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_coefficients_multiply_exactly() {
        let a = QPoly::from_coeffs(vec![rat(1, 2), rat(-2, 3)]);
        let b = QPoly::from_coeffs(vec![rat(3, 4), rat(1, 5)]);
        let c = &a * &b;
        assert_eq!(c.coeffs(), &[rat(3, 8), rat(1, 10) - rat(1, 2), rat(-2, 15)]);
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let p = QPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_ints(&[1, -1, 1]).to_string(), "q^2 - q + 1");
        assert_eq!(QPoly::from_coeffs(vec![rat(1, 2), rat(-3, 1)]).to_string(), "-3*q + (1/2)");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn compose_power_and_eval() {
        let p = QPoly::from_ints(&[1, 2, 3]);
        let p3 = p.compose_power(3);
        assert_eq!(p3, QPoly::from_ints(&[1, 0, 0, 2, 0, 0, 3]));
        assert_eq!(p.eval(&rat(2, 1)), rat(17, 1));
    }
}
