//! Residues modulo `p^N` with the precision in the type.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::BigRat;

/// Largest supported precision; `p^N` must also fit comfortably in 63 bits.
pub const MAX_PRECISION: u32 = 12;

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^N`, checked to be an odd prime power that fits in 63 bits.
pub fn prime_power(p: u64, n: u32) -> Result<u64> {
    if !is_odd_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    if n == 0 || n > MAX_PRECISION {
        return Err(Error::Precondition(format!("precision {n} outside 1..={MAX_PRECISION}")));
    }
    p.checked_pow(n)
        .filter(|m| *m < 1 << 62)
        .ok_or_else(|| Error::Precondition(format!("{p}^{n} is too large")))
}

/// An element of `Z/p^N`. Values of different precision have different
/// types and cannot be mixed; mixing primes panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicNum<const N: u32> {
    p: u64,
    modulus: u64,
    value: u64,
}

impl<const N: u32> PadicNum<N> {
    pub fn new(p: u64, value: i128) -> Result<Self> {
        let modulus = prime_power(p, N)?;
        Ok(Self::raw(p, modulus, value.rem_euclid(modulus as i128) as u64))
    }

    fn raw(p: u64, modulus: u64, value: u64) -> Self {
        PadicNum { p, modulus, value }
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::new(p, 0)
    }

    pub fn one(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn from_bigint(p: u64, x: &BigInt) -> Result<Self> {
        let modulus = prime_power(p, N)?;
        let r = x.mod_floor(&BigInt::from(modulus)).to_u64().expect("residue fits");
        Ok(Self::raw(p, modulus, r))
    }

    /// `num · den⁻¹ mod p^N`; fails when `p` divides the denominator.
    pub fn from_rational(p: u64, r: &BigRat) -> Result<Self> {
        let num = Self::from_bigint(p, r.numer())?;
        let den = Self::from_bigint(p, r.denom())?;
        num.checked_div(&den)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        N
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The representative in `[0, p^N)`.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_unit(&self) -> bool {
        self.value % self.p != 0
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit { p: self.p });
        }
        let g = (self.value as i128).extended_gcd(&(self.modulus as i128));
        debug_assert_eq!(g.gcd, 1);
        Ok(Self::raw(self.p, self.modulus, g.x.rem_euclid(self.modulus as i128) as u64))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(*self * rhs.inverse()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::raw(self.p, self.modulus, 1 % self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// The same residue at a lower precision `M ≤ N`.
    pub fn truncate<const M: u32>(&self) -> Result<PadicNum<M>> {
        if M > N {
            return Err(Error::Precondition(format!("cannot raise precision {N} to {M}")));
        }
        PadicNum::<M>::new(self.p, self.value as i128)
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.p, rhs.p, "mixing residues modulo different primes");
    }
}

impl<const N: u32> Add for PadicNum<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        let v = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        Self::raw(self.p, self.modulus, v as u64)
    }
}

impl<const N: u32> Sub for PadicNum<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const N: u32> Neg for PadicNum<N> {
    type Output = Self;
    fn neg(self) -> Self {
        let v = if self.value == 0 { 0 } else { self.modulus - self.value };
        Self::raw(self.p, self.modulus, v)
    }
}

impl<const N: u32> Mul for PadicNum<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        let v = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        Self::raw(self.p, self.modulus, v as u64)
    }
}

impl<const N: u32> fmt::Debug for PadicNum<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.p, N)
    }
}

impl<const N: u32> fmt::Display for PadicNum<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A rational together with the prime and precision it is to be read at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalResidue {
    pub r: BigRat,
    pub p: u64,
    pub n: u32,
}

impl RationalResidue {
    pub fn new(r: BigRat, p: u64, n: u32) -> Self {
        RationalResidue { r, p, n }
    }

    pub fn is_integral(&self) -> bool {
        !(self.r.denom() % BigInt::from(self.p)).is_zero()
    }

    /// The `p`-adic valuation of the rational; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        valuation(&self.r, self.p)
    }
}

pub fn valuation(r: &BigRat, p: u64) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let count = |x: &BigInt| {
        let mut x = x.abs();
        let mut v = 0;
        while (&x % &p).is_zero() {
            x /= &p;
            v += 1;
        }
        v
    };
    Some(count(r.numer()) - count(r.denom()))
}

/// Reads the rational as an element of `Z/p^N`; the precision recorded in
/// the residue must match `N`.
pub fn to_padic<const N: u32>(r: &RationalResidue) -> Result<PadicNum<N>> {
    if r.n != N {
        return Err(Error::Precondition(format!("residue has precision {}, expected {N}", r.n)));
    }
    PadicNum::from_rational(r.p, &r.r)
}
