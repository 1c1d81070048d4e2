//! Factored products `c·q^k·∏ f_i^{m_i}`.
//!
//! Every q-series term and closed form in this crate is a product of
//! binomials `1 - s·q^e`. Binomials with `s = ±1` are split into cyclotomic
//! factors on entry, so q-factorial cancellations become integer exponent
//! arithmetic; the remaining binomials carry a rational `s ∉ {0, ±1}` and
//! have no root on the unit circle.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::cyclotomic::{cyclotomic, divisors, plus_one_indices};
use crate::exact::{BigRat, QPoly, RatFun};
use crate::qseries::monomial::QMonomial;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Factor {
    /// Φ_d(q).
    Cyclo(u32),
    /// `1 - s·q^e` with `e ≥ 1` and `s ∉ {0, 1, -1}`.
    Binom { s: BigRat, e: u32 },
}

impl Factor {
    pub fn poly(&self) -> QPoly {
        match self {
            Factor::Cyclo(d) => cyclotomic(*d),
            Factor::Binom { s, e } => QPoly::binomial(s, *e as usize),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Cyclo(d) => write!(f, "Φ{d}"),
            Factor::Binom { s, e } => write!(f, "(1 - {s}q^{e})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QProduct {
    scale: BigRat,
    qpow: i64,
    factors: BTreeMap<Factor, i32>,
}

impl QProduct {
    pub fn one() -> Self {
        Self::scalar(BigRat::one())
    }

    pub fn zero() -> Self {
        Self::scalar(BigRat::zero())
    }

    pub fn scalar(scale: BigRat) -> Self {
        QProduct { scale, qpow: 0, factors: BTreeMap::new() }
    }

    pub fn q_pow(k: i64) -> Self {
        QProduct { scale: BigRat::one(), qpow: k, factors: BTreeMap::new() }
    }

    pub fn monomial(x: &QMonomial) -> Self {
        if x.is_zero() {
            return Self::zero();
        }
        QProduct { scale: x.scale.clone(), qpow: x.power, factors: BTreeMap::new() }
    }

    pub fn factor(f: Factor) -> Self {
        let mut p = Self::one();
        p.factors.insert(f, 1);
        p
    }

    /// `1 - x`.
    pub fn one_minus(x: &QMonomial) -> Self {
        let mut p = Self::one();
        p.mul_one_minus(x, 1).expect("positive multiplicity never divides by zero");
        p
    }

    /// `c0 + c1·q^e` for `e ≥ 1`.
    pub fn linear(c0: &BigRat, c1: &BigRat, e: u32) -> Self {
        if c0.is_zero() {
            return Self::monomial(&QMonomial::new(c1.clone(), e as i64));
        }
        let mut p = Self::scalar(c0.clone());
        p.mul_one_minus(&QMonomial::new(-(c1 / c0), e as i64), 1)
            .expect("positive multiplicity");
        p
    }

    /// The q-integer `[s] = (1 - q^s)/(1 - q)` for any integer `s`.
    pub fn q_integer(s: i64) -> Self {
        if s == 0 {
            return Self::zero();
        }
        let mut p = Self::one();
        p.mul_one_minus(&QMonomial::q_pow(s), 1).expect("positive multiplicity");
        p.mul_one_minus(&QMonomial::q_pow(1), -1).expect("1 - q is nonzero");
        p
    }

    /// `(x; q^step)_count = ∏_{k<count} (1 - x·q^{step·k})`.
    pub fn pochhammer(x: &QMonomial, step: u32, count: u32) -> Self {
        let mut p = Self::one();
        for k in 0..count {
            p.mul_one_minus(&x.shift(step as i64 * k as i64), 1).expect("positive multiplicity");
            if p.is_zero() {
                break;
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    pub fn scale(&self) -> &BigRat {
        &self.scale
    }

    pub fn q_power(&self) -> i64 {
        self.qpow
    }

    /// Nonzero factor exponents; negative entries belong to the denominator.
    pub fn factors(&self) -> &BTreeMap<Factor, i32> {
        &self.factors
    }

    /// Multiplies in `(1 - x)^mult`.
    pub fn mul_one_minus(&mut self, x: &QMonomial, mult: i32) -> Result<()> {
        if mult == 0 || x.is_zero() || self.is_zero() && mult > 0 {
            return Ok(());
        }
        let (s, e) = (&x.scale, x.power);
        if e == 0 {
            let c = BigRat::one() - s;
            if c.is_zero() {
                if mult < 0 {
                    return Err(Error::VanishingFactor);
                }
                *self = Self::zero();
                return Ok(());
            }
            self.scale *= pow_rat(&c, mult);
            return Ok(());
        }
        if self.is_zero() {
            return Ok(());
        }
        if e < 0 {
            // 1 - s·q^e = -s·q^e·(1 - q^{-e}/s)
            self.scale *= pow_rat(&-s, mult);
            self.qpow += e * mult as i64;
            return self.mul_one_minus(&QMonomial::new(s.recip(), -e), mult);
        }
        let e = u32::try_from(e).expect("exponent fits u32");
        if s.is_one() {
            // 1 - q^e = -∏_{d|e} Φ_d
            if mult % 2 != 0 {
                self.scale = -&self.scale;
            }
            for d in divisors(e) {
                self.bump(Factor::Cyclo(d), mult);
            }
        } else if (-s).is_one() {
            for d in plus_one_indices(e) {
                self.bump(Factor::Cyclo(d), mult);
            }
        } else {
            self.bump(Factor::Binom { s: s.clone(), e }, mult);
        }
        Ok(())
    }

    fn bump(&mut self, f: Factor, mult: i32) {
        let entry = self.factors.entry(f).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.factors.retain(|_, m| *m != 0);
        }
    }

    pub fn checked_div(&self, rhs: &QProduct) -> Result<QProduct> {
        Ok(self * &rhs.recip()?)
    }

    pub fn recip(&self) -> Result<QProduct> {
        if self.is_zero() {
            return Err(Error::VanishingFactor);
        }
        Ok(QProduct {
            scale: self.scale.recip(),
            qpow: -self.qpow,
            factors: self.factors.iter().map(|(f, m)| (f.clone(), -m)).collect(),
        })
    }

    pub fn pow(&self, e: i32) -> Result<QProduct> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        if self.is_zero() {
            return Ok(if e == 0 { Self::one() } else { Self::zero() });
        }
        Ok(QProduct {
            scale: pow_rat(&self.scale, e),
            qpow: self.qpow * e as i64,
            factors: self
                .factors
                .iter()
                .filter(|_| e != 0)
                .map(|(f, m)| (f.clone(), m * e))
                .collect(),
        })
    }

    pub fn scaled(&self, c: &BigRat) -> QProduct {
        if c.is_zero() {
            return Self::zero();
        }
        QProduct { scale: &self.scale * c, ..self.clone() }
    }

    /// True when every factor exponent and the q-power are nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.qpow >= 0 && self.factors.values().all(|&m| m > 0)
    }

    /// Exponent of Φ_d (negative when it sits in the denominator).
    pub fn cyclotomic_exponent(&self, d: u32) -> i32 {
        self.factors.get(&Factor::Cyclo(d)).copied().unwrap_or(0)
    }

    /// Denominator factors with their (positive) multiplicities.
    pub fn denominator_factors(&self) -> impl Iterator<Item = (&Factor, u32)> {
        self.factors.iter().filter(|(_, &m)| m < 0).map(|(f, &m)| (f, m.unsigned_abs()))
    }

    /// Smallest monic product `D` (no scalar) such that `x·D` is polynomial
    /// for every `x` in `items`.
    pub fn common_denominator<'a>(items: impl IntoIterator<Item = &'a QProduct>) -> QProduct {
        let mut den = QProduct::one();
        for item in items {
            if item.is_zero() {
                continue;
            }
            den.qpow = den.qpow.max(-item.qpow);
            for (f, m) in item.denominator_factors() {
                let entry = den.factors.entry(f.clone()).or_insert(0);
                *entry = (*entry).max(m as i32);
            }
        }
        den
    }

    /// Expands the numerator and denominator and reduces.
    pub fn to_ratfun(&self) -> RatFun {
        if self.is_zero() {
            return RatFun::zero();
        }
        let mut num = QPoly::constant(self.scale.clone());
        let mut den = QPoly::one();
        for (f, &m) in &self.factors {
            let p = f.poly().pow(m.unsigned_abs());
            if m > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        if self.qpow >= 0 {
            num = num.shift(self.qpow as usize);
        } else {
            den = den.shift(self.qpow.unsigned_abs() as usize);
        }
        RatFun::new(num, den).expect("factors are nonzero")
    }

    /// Value at `q = 1`, when the product has no net pole or zero of `Φ_1`
    /// left unresolved. Every other factor is finite and nonzero at `q = 1`
    /// except Φ_1 itself.
    pub fn eval_at_one(&self) -> Option<BigRat> {
        if self.is_zero() {
            return Some(BigRat::zero());
        }
        let m1 = self.cyclotomic_exponent(1);
        if m1 < 0 {
            return None;
        }
        if m1 > 0 {
            return Some(BigRat::zero());
        }
        let one = BigRat::one();
        let mut v = self.scale.clone();
        for (f, &m) in &self.factors {
            let x = f.poly().eval(&one);
            v *= pow_rat(&x, m);
        }
        Some(v)
    }
}

pub(crate) fn pow_rat(x: &BigRat, e: i32) -> BigRat {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), e.unsigned_abs() as usize)
    }
}

impl std::ops::Mul<&QProduct> for &QProduct {
    type Output = QProduct;
    fn mul(self, rhs: &QProduct) -> QProduct {
        if self.is_zero() || rhs.is_zero() {
            return QProduct::zero();
        }
        let mut out = self.clone();
        out.scale *= &rhs.scale;
        out.qpow += rhs.qpow;
        for (f, &m) in &rhs.factors {
            out.bump(f.clone(), m);
        }
        out
    }
}

impl std::ops::Mul<QProduct> for QProduct {
    type Output = QProduct;
    fn mul(self, rhs: QProduct) -> QProduct {
        &self * &rhs
    }
}

impl std::ops::Neg for &QProduct {
    type Output = QProduct;
    fn neg(self) -> QProduct {
        QProduct { scale: -&self.scale, ..self.clone() }
    }
}

impl fmt::Display for QProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scale)?;
        if self.qpow != 0 {
            write!(f, "·q^{}", self.qpow)?;
        }
        for (fac, m) in &self.factors {
            if *m == 1 {
                write!(f, "·{fac}")?;
            } else {
                write!(f, "·{fac}^{m}")?;
            }
        }
        Ok(())
    }
}

/// A finite sum of factored products.
#[derive(Clone, Debug, Default)]
pub struct ProductSum {
    pub terms: Vec<QProduct>,
}

impl ProductSum {
    pub fn new(terms: Vec<QProduct>) -> Self {
        ProductSum { terms: terms.into_iter().filter(|t| !t.is_zero()).collect() }
    }

    /// A polynomial as the sum of its monomials.
    pub fn from_poly(p: &QPoly) -> Self {
        ProductSum::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| QProduct::monomial(&QMonomial::new(c.clone(), k as i64)))
                .collect(),
        )
    }

    pub fn single(t: QProduct) -> Self {
        Self::new(vec![t])
    }

    pub fn push(&mut self, t: QProduct) {
        if !t.is_zero() {
            self.terms.push(t);
        }
    }

    pub fn extend(&mut self, other: ProductSum) {
        self.terms.extend(other.terms);
    }

    /// Multiplies every summand by `p`.
    pub fn times(&self, p: &QProduct) -> ProductSum {
        ProductSum::new(self.terms.iter().map(|t| t * p).collect())
    }

    pub fn negated(&self) -> ProductSum {
        ProductSum { terms: self.terms.iter().map(|t| -t).collect() }
    }

    /// Distributes the product of two sums.
    pub fn product(&self, other: &ProductSum) -> ProductSum {
        let mut out = ProductSum::default();
        for a in &self.terms {
            for b in &other.terms {
                out.push(a * b);
            }
        }
        out
    }

    pub fn to_ratfun(&self) -> RatFun {
        self.terms.iter().map(QProduct::to_ratfun).sum()
    }
}

impl From<QProduct> for ProductSum {
    fn from(t: QProduct) -> Self {
        ProductSum::single(t)
    }
}

impl fmt::Display for ProductSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn q_integer_expands() {
        assert!(QProduct::q_integer(1).to_ratfun().is_one());
        assert_eq!(QProduct::q_integer(3).to_ratfun(), RatFun::from(QPoly::from_ints(&[1, 1, 1])));
        // [-2] = (1 - q^-2)/(1 - q) = -q^-2 (1 + q)
        let neg = QProduct::q_integer(-2).to_ratfun();
        let expect = RatFun::new(QPoly::from_ints(&[-1, -1]), QPoly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(neg, expect);
        assert!(QProduct::q_integer(0).is_zero());
    }

    #[test]
    fn cyclotomic_split_cancels() {
        // (1 - q^6)/((1 - q^2)(1 - q^3)) = Φ6 / Φ1
        let mut p = QProduct::one_minus(&QMonomial::q_pow(6));
        p.mul_one_minus(&QMonomial::q_pow(2), -1).unwrap();
        p.mul_one_minus(&QMonomial::q_pow(3), -1).unwrap();
        assert_eq!(p.cyclotomic_exponent(6), 1);
        assert_eq!(p.cyclotomic_exponent(1), -1);
        assert_eq!(p.cyclotomic_exponent(2), 0);
        assert_eq!(p.factors().len(), 2);
    }

    #[test]
    fn negative_power_binomial() {
        // 1 - 2q^{-3} = -2 q^{-3} (1 - q^3/2)
        let p = QProduct::one_minus(&QMonomial::new(int(2), -3));
        let expect = RatFun::new(QPoly::from_ints(&[-2, 0, 0, 1]), QPoly::from_ints(&[0, 0, 0, 1])).unwrap();
        assert_eq!(p.to_ratfun(), expect);
    }

    #[test]
    fn vanishing_factor() {
        let mut p = QProduct::one();
        p.mul_one_minus(&QMonomial::q_pow(0), 1).unwrap();
        assert!(p.is_zero());
        let mut p = QProduct::one();
        assert_eq!(p.mul_one_minus(&QMonomial::q_pow(0), -1), Err(Error::VanishingFactor));
    }

    #[test]
    fn linear_forms() {
        // 2 - q^4
        let p = QProduct::linear(&int(2), &int(-1), 4);
        assert_eq!(p.to_ratfun(), RatFun::from(QPoly::from_ints(&[2, 0, 0, 0, -1])));
        let p = QProduct::linear(&int(0), &rat(3, 2), 2);
        assert_eq!(p.to_ratfun(), RatFun::from(QPoly::monomial(rat(3, 2), 2)));
    }

    #[test]
    fn common_denominator_clears_all() {
        let a = QProduct::q_integer(3).recip().unwrap();
        let b = &QProduct::q_pow(-2) * &QProduct::one_minus(&QMonomial::new(int(5), 1)).recip().unwrap();
        let d = QProduct::common_denominator([&a, &b]);
        assert!((&a * &d).is_polynomial());
        assert!((&b * &d).is_polynomial());
        assert!(d.is_polynomial());
    }

    #[test]
    fn eval_at_one_of_q_factorial_ratio() {
        // (q;q^3)_2 / (q^3;q^3)_2 at q = 1 is (1·4)/(3·6)
        let num = QProduct::pochhammer(&QMonomial::q_pow(1), 3, 2);
        let den = QProduct::pochhammer(&QMonomial::q_pow(3), 3, 2);
        let r = num.checked_div(&den).unwrap();
        assert_eq!(r.eval_at_one(), Some(rat(4, 18)));
    }
}
