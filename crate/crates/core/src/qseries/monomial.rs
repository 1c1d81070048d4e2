use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::exact::BigRat;

/// `scale·q^power`, the shape of every q-Pochhammer argument (`aq`, `q/a`,
/// `bcq`, `q^{1-n}`, ...). The power may be negative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QMonomial {
    pub scale: BigRat,
    pub power: i64,
}

impl QMonomial {
    pub fn new(scale: BigRat, power: i64) -> Self {
        QMonomial { scale, power }
    }

    pub fn scalar(scale: BigRat) -> Self {
        QMonomial { scale, power: 0 }
    }

    /// `q^power`.
    pub fn q_pow(power: i64) -> Self {
        QMonomial { scale: BigRat::one(), power }
    }

    pub fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QMonomial { scale: self.scale.clone(), power: self.power + k }
    }

    /// `None` for the zero monomial.
    pub fn recip(&self) -> Option<Self> {
        if self.scale.is_zero() {
            None
        } else {
            Some(QMonomial { scale: self.scale.recip(), power: -self.power })
        }
    }
}

impl Mul<&QMonomial> for &QMonomial {
    type Output = QMonomial;
    fn mul(self, rhs: &QMonomial) -> QMonomial {
        QMonomial { scale: &self.scale * &rhs.scale, power: self.power + rhs.power }
    }
}

impl From<BigRat> for QMonomial {
    fn from(scale: BigRat) -> Self {
        QMonomial::scalar(scale)
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.scale.is_one(), self.power) {
            (_, 0) => write!(f, "{}", self.scale),
            (true, 1) => write!(f, "q"),
            (true, p) => write!(f, "q^{p}"),
            (false, 1) => write!(f, "{}q", self.scale),
            (false, p) => write!(f, "{}q^{p}", self.scale),
        }
    }
}
