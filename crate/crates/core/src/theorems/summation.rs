//! The exact summation inputs: the simplex-factorization lemma, the
//! terminating zero sum, Jackson's terminating very-well-poised sum and its
//! two closed-form specializations.

use num_traits::{One, Zero};

use crate::congruence::ParamPoint;
use crate::error::{Error, Result};
use crate::exact::{BigRat, RatFun};
use crate::qseries::{simplex_sum_with, ProductSum, QMonomial, QProduct, TermSpec};
use crate::theorems::forms::{mono, qm, ratio3, third};
use crate::theorems::statement::Check;

/// Checks the simplex factorization for an explicit sequence `lam[0..n]`:
/// if `lam(k) = 0` for `(n+m−1)/m ≤ k ≤ n−1` then the `t`-dimensional
/// simplex sum to `n−1` equals `(∑_{k ≤ (n−1)/m} lam(k))^t`.
pub fn verify_lemma_a(m: u32, t: u32, n: u32, lam: &[RatFun]) -> Result<bool> {
    if m < t || t < 2 {
        return Err(Error::Precondition(format!("need m >= t >= 2, got m={m} t={t}")));
    }
    if n == 0 || n % m != 1 % m {
        return Err(Error::Precondition(format!("n = {n} is not 1 mod {m}")));
    }
    let n = n as usize;
    if lam.len() < n {
        return Err(Error::Precondition(format!("sequence has {} of {n} values", lam.len())));
    }
    let window = (n + m as usize - 1).div_ceil(m as usize);
    if let Some(k) = (window..n).find(|&k| !lam[k].is_zero()) {
        return Err(Error::Precondition(format!("lam({k}) is nonzero inside the vanishing window")));
    }
    let brute = simplex_sum_with(&lam[..n], t, n - 1, RatFun::zero(), |a, b| a + b, |a, b| a * b);
    let head: RatFun = lam[..=(n - 1) / m as usize].iter().cloned().sum();
    Ok(brute == head.pow(t as i32)?)
}

/// The terminating summand of the zero sum sums to exactly zero.
pub fn verify_base_a(n: u32, p: &ParamPoint) -> Result<Check> {
    let m = third(n)?;
    let spec = TermSpec::base_a(p.a.clone(), p.b.clone(), p.c.clone(), n);
    let sum = ProductSum::new(spec.products_upto(m)?).to_ratfun();
    Ok(Check::identity(sum.is_zero()))
}

/// Parameters of a terminating very-well-poised `₈φ₇` with `n` terms past
/// the first; all are monomials so that the balancing parameter can carry
/// a power of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacksonParams {
    pub a: QMonomial,
    pub b: QMonomial,
    pub c: QMonomial,
    pub d: QMonomial,
    pub e: QMonomial,
    pub n: u32,
}

impl JacksonParams {
    /// Solves the balancing condition `a²q = bcde·q^{−n}` for `e`.
    pub fn balanced(a: BigRat, b: BigRat, c: BigRat, d: BigRat, n: u32) -> Result<Self> {
        let bcd = &(&b * &c) * &d;
        if bcd.is_zero() || a.is_zero() {
            return Err(Error::Degenerate("zero parameter".into()));
        }
        let e = QMonomial::new(&a * &a / bcd, n as i64 + 1);
        Ok(JacksonParams { a: a.into(), b: b.into(), c: c.into(), d: d.into(), e, n })
    }

    pub fn is_balanced(&self) -> bool {
        let lhs = &(&self.a * &self.a) * &qm(1);
        let rhs = &(&(&(&self.b * &self.c) * &self.d) * &self.e) * &qm(-(self.n as i64));
        lhs == rhs
    }
}

fn poch1(x: &QMonomial, k: u32) -> QProduct {
    QProduct::pochhammer(x, 1, k)
}

fn jackson_sides(p: &JacksonParams) -> Result<(RatFun, RatFun)> {
    let JacksonParams { a, b, c, d, e, n } = p;
    let n = *n;
    let aq = a.shift(1);
    let over = |x: &QMonomial, y: &QMonomial| -> Result<QMonomial> {
        let inv = y.recip().ok_or_else(|| Error::Degenerate("zero parameter".into()))?;
        Ok(x * &inv)
    };
    let vanishing = |_| Error::Degenerate("a denominator vanishes".into());
    let mut lhs = ProductSum::default();
    for k in 0..=n {
        let k64 = k as i64;
        let mut t = QProduct::one_minus(&a.shift(2 * k64))
            .checked_div(&QProduct::one_minus(a))
            .map_err(vanishing)?;
        for x in [a, b, c, d, e, &qm(-(n as i64))] {
            t = &t * &poch1(x, k);
        }
        for y in [
            qm(1),
            over(&aq, b)?,
            over(&aq, c)?,
            over(&aq, d)?,
            over(&aq, e)?,
            a.shift(n as i64 + 1),
        ] {
            t = t.checked_div(&poch1(&y, k)).map_err(vanishing)?;
        }
        lhs.push(&t * &QProduct::q_pow(k64));
    }
    let bc = b * c;
    let num = [aq.clone(), over(&aq, &bc)?, over(&aq, &(b * d))?, over(&aq, &(c * d))?];
    let den = [over(&aq, b)?, over(&aq, c)?, over(&aq, d)?, over(&aq, &(&bc * d))?];
    let mut rhs = QProduct::one();
    for x in &num {
        rhs = &rhs * &poch1(x, n);
    }
    for y in &den {
        rhs = rhs.checked_div(&poch1(y, n)).map_err(vanishing)?;
    }
    Ok((lhs.to_ratfun(), rhs.to_ratfun()))
}

/// The terminating `₈φ₇` sum equals its product form.
pub fn verify_jackson(p: &JacksonParams) -> Result<Check> {
    if !p.is_balanced() {
        return Err(Error::Unbalanced(format!("a^2 q != bcde q^-{}", p.n)));
    }
    let (lhs, rhs) = jackson_sides(p)?;
    Ok(Check::identity(lhs == rhs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseWhich {
    /// `a = q^n` and `a = q^{−n}`.
    B,
    /// `b = q^n` and `bc = q^{−n}`.
    C,
}

/// The closed forms of the specialized sums, all four specializations.
pub fn verify_base_bc(n: u32, p: &ParamPoint, which: BaseWhich) -> Result<Check> {
    let m = third(n)?;
    let ni = n as i64;
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let one = BigRat::one();
    let (specs, closed) = match which {
        BaseWhich::B => {
            let bc = b * c;
            let specs = [qm(ni), qm(-ni)].map(|a| TermSpec::Beta { a, b: b.clone().into(), c: c.clone().into() });
            let closed = ratio3(
                &[qm(4), mono(&b.recip(), 2), mono(&c.recip(), 2), mono(&bc, 2)],
                &[qm(1), mono(b, 3), mono(c, 3), mono(&bc.recip(), 3)],
                m,
            )?;
            (specs, closed)
        }
        BaseWhich::C => {
            let ac = a * c;
            let b_values = [qm(ni), mono(&(&one / c), -ni)];
            let specs = b_values.map(|b| TermSpec::Beta { a: a.clone().into(), b, c: c.clone().into() });
            let closed = ratio3(
                &[qm(4), qm(2), mono(&ac, 2), mono(&(c / a), 2)],
                &[mono(c, 1), mono(c, 3), mono(a, 3), mono(&a.recip(), 3)],
                m,
            )?;
            (specs, closed)
        }
    };
    let closed = closed.to_ratfun();
    for spec in &specs {
        let sum = ProductSum::new(spec.products_upto(m)?).to_ratfun();
        if sum != closed {
            return Ok(Check::identity(false));
        }
    }
    Ok(Check::identity(true))
}
