//! q-integers, q-shifted factorials and the series terms.

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::{BigRat, QPoly, RatFun};
use crate::qseries::monomial::QMonomial;
use crate::qseries::product::QProduct;

/// `[s] = 1 + q + … + q^{s-1}`.
pub fn q_integer(s: u32) -> QPoly {
    QPoly::from_coeffs(vec![BigRat::one(); s as usize])
}

/// `(x; q^step)_count` as a reduced rational function.
pub fn q_pochhammer(x: &QMonomial, step: u32, count: u32) -> RatFun {
    QProduct::pochhammer(x, step, count).to_ratfun()
}

/// Which series a term belongs to. Parameters are monomials so that the
/// specializations `a = q^{±n}`, `b = q^n`, `bc = q^{-n}` are exact power
/// shifts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum TermSpec {
    /// `[6k+1] (q;q³)_k⁶ / (q³;q³)_k⁶ · q^{3k}`.
    A,
    /// `[6k+1] (aq,q/a,bq,q/b;q³)_k (q;q³)_k² / ((q³/a,aq³,q³/b,bq³;q³)_k (q³;q³)_k²) · q^{3k}`.
    B { a: QMonomial, b: QMonomial },
    /// `[6k+1] (aq,q/a,q/b,q/c,bcq,q;q³)_k / (q³/a,aq³,bq³,cq³,q³/bc,q³;q³)_k · q^{3k}`.
    Beta { a: QMonomial, b: QMonomial, c: QMonomial },
    /// `B` with `b = 1`.
    BStar { a: QMonomial },
    /// The terminating summand
    /// `[6k+1-n] (aq,q/a,q/b,q/c,bcq,q^{1-n};q³)_k / (q^{3-n}/a,aq^{3-n},bq^{3-n},cq^{3-n},q^{3-n}/bc,q³;q³)_k · q^{(3-2n)k}`,
    /// which sums to zero over `0 ≤ k ≤ (n-1)/3`.
    BaseA { a: QMonomial, b: QMonomial, c: QMonomial, n: u32 },
    /// `[8k+1] (q;q²)_k² (q;q²)_{2k} / ((q²;q²)_{2k} (q⁶;q⁶)_k²) · q^{2k²}`.
    Bachraoui,
}

impl TermSpec {
    pub fn b(a: BigRat, b: BigRat) -> Self {
        TermSpec::B { a: a.into(), b: b.into() }
    }

    pub fn beta(a: BigRat, b: BigRat, c: BigRat) -> Self {
        TermSpec::Beta { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn base_a(a: BigRat, b: BigRat, c: BigRat, n: u32) -> Self {
        TermSpec::BaseA { a: a.into(), b: b.into(), c: c.into(), n }
    }

    fn params(&self) -> Vec<&QMonomial> {
        match self {
            TermSpec::A | TermSpec::Bachraoui => vec![],
            TermSpec::B { a, b } => vec![a, b],
            TermSpec::Beta { a, b, c } | TermSpec::BaseA { a, b, c, .. } => vec![a, b, c],
            TermSpec::BStar { a } => vec![a],
        }
    }

    /// The k-th term in factored form.
    pub fn product(&self, k: u32) -> Result<QProduct> {
        if self.params().iter().any(|p| p.is_zero()) {
            return Err(Error::Degenerate("series parameter is zero".into()));
        }
        let q = |p: i64| QMonomial::q_pow(p);
        let up = |x: &QMonomial| QProduct::pochhammer(x, 3, k);
        let down = |x: &QMonomial| QProduct::pochhammer(x, 3, k).recip();
        let inv = |x: &QMonomial| x.recip().expect("nonzero parameter");
        let k64 = k as i64;
        let base = &QProduct::q_integer(6 * k64 + 1) * &QProduct::q_pow(3 * k64);
        let out = match self {
            TermSpec::A => {
                let ratio = up(&q(1)).checked_div(&up(&q(3)))?;
                &base * &ratio.pow(6)?
            }
            TermSpec::B { a, b } => {
                let num = [a.shift(1), inv(a).shift(1), b.shift(1), inv(b).shift(1)]
                    .iter()
                    .fold(up(&q(1)).pow(2)?, |acc, x| &acc * &up(x));
                let den = [inv(a).shift(3), a.shift(3), inv(b).shift(3), b.shift(3)]
                    .iter()
                    .fold(up(&q(3)).pow(2)?, |acc, x| &acc * &up(x));
                &base * &num.checked_div(&den)?
            }
            TermSpec::BStar { a } => {
                return TermSpec::B { a: a.clone(), b: QMonomial::q_pow(0) }.product(k)
            }
            TermSpec::Beta { a, b, c } => {
                let bc = b * c;
                let num = [
                    a.shift(1),
                    inv(a).shift(1),
                    inv(b).shift(1),
                    inv(c).shift(1),
                    bc.shift(1),
                    q(1),
                ]
                .iter()
                .fold(QProduct::one(), |acc, x| &acc * &up(x));
                let mut out = &base * &num;
                for x in [inv(a).shift(3), a.shift(3), b.shift(3), c.shift(3), inv(&bc).shift(3), q(3)] {
                    out = &out * &down(&x)?;
                }
                out
            }
            TermSpec::BaseA { a, b, c, n } => {
                let n = *n as i64;
                let bc = b * c;
                let num = [
                    a.shift(1),
                    inv(a).shift(1),
                    inv(b).shift(1),
                    inv(c).shift(1),
                    bc.shift(1),
                    q(1 - n),
                ]
                .iter()
                .fold(QProduct::one(), |acc, x| &acc * &up(x));
                let mut out = &(&QProduct::q_integer(6 * k64 + 1 - n) * &QProduct::q_pow((3 - 2 * n) * k64))
                    * &num;
                for x in [
                    inv(a).shift(3 - n),
                    a.shift(3 - n),
                    b.shift(3 - n),
                    c.shift(3 - n),
                    inv(&bc).shift(3 - n),
                    q(3),
                ] {
                    out = &out * &down(&x)?;
                }
                out
            }
            TermSpec::Bachraoui => {
                let num = &QProduct::pochhammer(&q(1), 2, k).pow(2)? * &QProduct::pochhammer(&q(1), 2, 2 * k);
                let den = &QProduct::pochhammer(&q(2), 2, 2 * k) * &QProduct::pochhammer(&q(6), 6, k).pow(2)?;
                &(&QProduct::q_integer(8 * k64 + 1) * &QProduct::q_pow(2 * k64 * k64))
                    * &num.checked_div(&den)?
            }
        };
        Ok(out)
    }

    /// The k-th term as a reduced rational function.
    pub fn term(&self, k: u32) -> Result<RatFun> {
        Ok(self.product(k)?.to_ratfun())
    }

    /// Terms `0..=bound` in factored form, each computed once.
    pub fn products_upto(&self, bound: u32) -> Result<Vec<QProduct>> {
        (0..=bound).map(|k| self.product(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn bin(s: BigRat, e: usize) -> QPoly {
        QPoly::binomial(&s, e)
    }

    #[test]
    fn q_integers() {
        assert!(q_integer(1).is_one());
        assert_eq!(q_integer(3), QPoly::from_ints(&[1, 1, 1]));
        let telescoped = &QPoly::from_ints(&[1, -1]) * &q_integer(7);
        assert_eq!(telescoped, QPoly::binomial(&int(1), 7));
    }

    #[test]
    fn pochhammer_examples() {
        assert!(q_pochhammer(&QMonomial::new(int(5), 2), 3, 0).is_one());
        let p = q_pochhammer(&QMonomial::q_pow(1), 3, 2);
        assert_eq!(p, RatFun::from(&bin(int(1), 1) * &bin(int(1), 4)));
        let p = q_pochhammer(&QMonomial::new(int(2), 1), 3, 1);
        assert_eq!(p, RatFun::from(QPoly::from_ints(&[1, -2])));
    }

    #[test]
    fn term_a_first_values() {
        assert!(TermSpec::A.term(0).unwrap().is_one());
        // [7] (1-q)^6 q^3 / (1-q^3)^6
        let expect = RatFun::new(
            (&q_integer(7) * &bin(int(1), 1).pow(6)).shift(3),
            bin(int(1), 3).pow(6),
        )
        .unwrap();
        assert_eq!(TermSpec::A.term(1).unwrap(), expect);
    }

    #[test]
    fn term_b_at_two_three() {
        let two = int(2);
        let three = int(3);
        let half = two.recip();
        let third = three.recip();
        let num = [
            q_integer(7),
            bin(two.clone(), 1),
            bin(half.clone(), 1),
            bin(three.clone(), 1),
            bin(third.clone(), 1),
            bin(int(1), 1).pow(2),
        ]
        .iter()
        .fold(QPoly::one(), |acc, p| &acc * p)
        .shift(3);
        let den = [bin(half, 3), bin(two, 3), bin(third, 3), bin(three, 3), bin(int(1), 3).pow(2)]
            .iter()
            .fold(QPoly::one(), |acc, p| &acc * p);
        let expect = RatFun::new(num, den).unwrap();
        assert_eq!(TermSpec::b(int(2), int(3)).term(1).unwrap(), expect);
    }

    #[test]
    fn zero_parameter_rejected() {
        let spec = TermSpec::b(int(0), int(3));
        assert!(matches!(spec.term(1), Err(Error::Degenerate(_))));
    }

    #[test]
    fn a_is_b_at_one_one() {
        let b11 = TermSpec::b(int(1), int(1));
        for k in 0..5 {
            assert_eq!(TermSpec::A.term(k).unwrap(), b11.term(k).unwrap());
        }
    }

    #[test]
    fn base_a_first_summand_vanishes_at_n_one() {
        let spec = TermSpec::base_a(int(2), int(3), int(5), 1);
        assert!(spec.term(0).unwrap().is_zero());
    }

    #[test]
    fn base_a_terminates() {
        // the q^{1-n} factor kills every k > (n-1)/3
        let spec = TermSpec::base_a(int(2), int(3), int(5), 7);
        assert!(!spec.term(2).unwrap().is_zero());
        for k in 3..7 {
            assert!(spec.term(k).unwrap().is_zero());
        }
    }

    #[test]
    fn base_a_sums_to_zero() {
        for n in [1, 4, 7] {
            let spec = TermSpec::base_a(int(2), int(3), int(5), n);
            let s: RatFun = (0..=(n - 1) / 3).map(|k| spec.term(k).unwrap()).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }
}
