//! Second-order ε-jets with rational-function coefficients.
//!
//! A jet `c0 + c1·ε + c2·ε²` is a power series truncated after ε². With
//! `a = 1 + ε`, an expression whose only singularity at `a = 1` is a double
//! pole in `(1 - a)` is evaluated by multiplying it through by `(1 - a)² = ε²`
//! and reading the limit off `c2`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::ratfun::RatFun;
use crate::exact::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsJet {
    pub c0: RatFun,
    pub c1: RatFun,
    pub c2: RatFun,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleOrder {
    /// The expression is regular at ε = 0; its value is `c0`.
    Zero,
    /// The jet is ε² times the expression; its limit is `c2`.
    Two,
}

impl EpsJet {
    pub fn new(c0: RatFun, c1: RatFun, c2: RatFun) -> Self {
        EpsJet { c0, c1, c2 }
    }

    pub fn constant(c: RatFun) -> Self {
        EpsJet { c0: c, c1: RatFun::zero(), c2: RatFun::zero() }
    }

    pub fn zero() -> Self {
        Self::constant(RatFun::zero())
    }

    pub fn one() -> Self {
        Self::constant(RatFun::one())
    }

    /// The parameter `a = 1 + ε`.
    pub fn a() -> Self {
        EpsJet::new(RatFun::one(), RatFun::one(), RatFun::zero())
    }

    /// `1/a = 1 - ε + ε²`, truncated.
    pub fn a_inv() -> Self {
        EpsJet::new(RatFun::one(), -RatFun::one(), RatFun::one())
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        EpsJet::new(&self.c0 * c, &self.c1 * c, &self.c2 * c)
    }

    pub fn scale_rat(&self, c: &BigRat) -> Self {
        EpsJet::new(self.c0.scale(c), self.c1.scale(c), self.c2.scale(c))
    }

    pub fn checked_div(&self, rhs: &EpsJet) -> Result<Self> {
        if rhs.c0.is_zero() {
            return Err(Error::JetDivision);
        }
        let inv0 = rhs.c0.recip()?;
        let z0 = &self.c0 * &inv0;
        let z1 = &(&self.c1 - &(&z0 * &rhs.c1)) * &inv0;
        let z2 = &(&(&self.c2 - &(&z0 * &rhs.c2)) - &(&z1 * &rhs.c1)) * &inv0;
        Ok(EpsJet::new(z0, z1, z2))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(EpsJet::one(), |acc, _| &acc * self)
    }

    /// The `a → 1` limit encoded by this jet.
    pub fn extract_limit(&self, pole: PoleOrder) -> Result<RatFun> {
        match pole {
            PoleOrder::Zero => Ok(self.c0.clone()),
            PoleOrder::Two => {
                if !self.c0.is_zero() {
                    return Err(Error::NoFiniteLimit { order: 0 });
                }
                if !self.c1.is_zero() {
                    return Err(Error::NoFiniteLimit { order: 1 });
                }
                Ok(self.c2.clone())
            }
        }
    }
}

impl Add<&EpsJet> for &EpsJet {
    type Output = EpsJet;
    fn add(self, rhs: &EpsJet) -> EpsJet {
        EpsJet::new(&self.c0 + &rhs.c0, &self.c1 + &rhs.c1, &self.c2 + &rhs.c2)
    }
}

impl Sub<&EpsJet> for &EpsJet {
    type Output = EpsJet;
    fn sub(self, rhs: &EpsJet) -> EpsJet {
        EpsJet::new(&self.c0 - &rhs.c0, &self.c1 - &rhs.c1, &self.c2 - &rhs.c2)
    }
}

impl Mul<&EpsJet> for &EpsJet {
    type Output = EpsJet;
    fn mul(self, rhs: &EpsJet) -> EpsJet {
        let c0 = &self.c0 * &rhs.c0;
        let c1 = &(&self.c0 * &rhs.c1) + &(&self.c1 * &rhs.c0);
        let c2 = &(&(&self.c0 * &rhs.c2) + &(&self.c1 * &rhs.c1)) + &(&self.c2 * &rhs.c0);
        EpsJet::new(c0, c1, c2)
    }
}

impl Neg for &EpsJet {
    type Output = EpsJet;
    fn neg(self) -> EpsJet {
        EpsJet::new(-&self.c0, -&self.c1, -&self.c2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::QPoly;
    use crate::exact::rat;

    fn eps() -> EpsJet {
        EpsJet::new(RatFun::zero(), RatFun::one(), RatFun::zero())
    }

    #[test]
    fn one_plus_eps_times_one_minus_eps() {
        let p = &(&EpsJet::one() + &eps()) * &(&EpsJet::one() - &eps());
        assert_eq!(p, EpsJet::new(RatFun::one(), RatFun::zero(), -RatFun::one()));
    }

    #[test]
    fn geometric_series() {
        let inv = EpsJet::one().checked_div(&(&EpsJet::one() - &eps())).unwrap();
        assert_eq!(inv, EpsJet::new(RatFun::one(), RatFun::one(), RatFun::one()));
        assert_eq!(EpsJet::one().checked_div(&eps()), Err(Error::JetDivision));
    }

    #[test]
    fn one_minus_a_squared() {
        let d = &EpsJet::one() - &EpsJet::a();
        let sq = &d * &d;
        assert_eq!(sq, EpsJet::new(RatFun::zero(), RatFun::zero(), RatFun::one()));
        assert!(sq.extract_limit(PoleOrder::Two).unwrap().is_one());
    }

    #[test]
    fn a_times_a_inv() {
        let p = &EpsJet::a() * &EpsJet::a_inv();
        assert_eq!(p, EpsJet::one());
    }

    #[test]
    fn extraction() {
        let five_q = RatFun::from(QPoly::monomial(rat(5, 1), 1));
        let jet = EpsJet::new(RatFun::zero(), RatFun::zero(), five_q.clone());
        assert_eq!(jet.extract_limit(PoleOrder::Two).unwrap(), five_q);

        let three = RatFun::constant(rat(3, 1));
        let jet = EpsJet::new(three.clone(), five_q.clone(), RatFun::zero());
        assert_eq!(jet.extract_limit(PoleOrder::Zero).unwrap(), three);
        assert_eq!(jet.extract_limit(PoleOrder::Two), Err(Error::NoFiniteLimit { order: 0 }));

        let jet = EpsJet::new(RatFun::zero(), five_q, RatFun::zero());
        assert_eq!(jet.extract_limit(PoleOrder::Two), Err(Error::NoFiniteLimit { order: 1 }));
    }
}
