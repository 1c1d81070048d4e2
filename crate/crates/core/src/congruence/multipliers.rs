//! The CRT multiplier identities: the two-modulus relations, the
//! three-modulus lemma with its multipliers `x, y, u, v`, and the
//! simplifications that turn the `c = 1` chain into the parametric theorem.
//!
//! Every polynomial here is a polynomial in `z = q^n`; the parameters are
//! specialized rationals.

use num_traits::{One, Zero};

use crate::congruence::params::ParamPoint;
use crate::congruence::{congruent_mod, CongruenceClaim};
use crate::error::{Error, Result};
use crate::exact::{gcd, poly_crt, BigRat, QPoly, RatFun};

/// `c0 + c1·z` with `z` given (usually `q^n`).
fn lin(c0: &BigRat, c1: &BigRat, z: &QPoly) -> QPoly {
    &QPoly::constant(c0.clone()) + &z.scale(c1)
}

fn qn(n: u32) -> QPoly {
    QPoly::monomial(BigRat::one(), n as usize)
}

fn one() -> BigRat {
    BigRat::one()
}

/// `(1 − s·z)(s − z)`, the modulus attached to a parameter `s`.
fn pair_modulus(s: &BigRat, z: &QPoly) -> QPoly {
    &lin(&one(), &-s, z) * &lin(s, &-one(), z)
}

fn ratio(num: QPoly, den: &BigRat) -> Result<RatFun> {
    if den.is_zero() {
        return Err(Error::Degenerate("multiplier denominator vanishes".into()));
    }
    Ok(RatFun::from(num.scale(&den.recip())))
}

/// `(1 − b z)(b − z)(−1 − a² + a z) / ((a − b)(1 − ab))`.
fn relation_multiplier(a: &BigRat, b: &BigRat, z: &QPoly) -> Result<RatFun> {
    let num = &pair_modulus(b, z) * &lin(&(-one() - a * a), a, z);
    ratio(num, &((a - b) * (one() - a * b)))
}

/// Both two-modulus relations at `z = q^{tn}`.
pub fn verify_relations(a: &BigRat, b: &BigRat, t: u32, n: u32) -> Result<bool> {
    if !(1..=2).contains(&t) {
        return Err(Error::Precondition(format!("t = {t} not in {{1, 2}}")));
    }
    if a == b || (a * b).is_one() {
        return Err(Error::Degenerate("a = b or ab = 1".into()));
    }
    let z = qn(t * n);
    for (s, r) in [(a, b), (b, a)] {
        let claim = CongruenceClaim::new(relation_multiplier(s, r, &z)?, RatFun::one(), pair_modulus(s, &z));
        if !congruent_mod(&claim)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The scalar coefficients of the linear factors `x − y z` and `u − v z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multipliers {
    pub x: BigRat,
    pub y: BigRat,
    pub u: BigRat,
    pub v: BigRat,
}

/// `∑ k·b^i·c^j` over the listed `(k, i, j)`.
fn poly_bc(terms: &[(i64, usize, usize)], b: &BigRat, c: &BigRat) -> BigRat {
    terms
        .iter()
        .map(|&(k, i, j)| BigRat::from_integer(k.into()) * num_traits::pow(b.clone(), i) * num_traits::pow(c.clone(), j))
        .fold(BigRat::zero(), |acc, t| acc + t)
}

/// `x, y, u, v` transcribed from their displayed forms.
pub fn lemma22_multipliers(p: &ParamPoint) -> Multipliers {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let sq = |x: &BigRat| x * x;
    let pw = |x: &BigRat, k: usize| num_traits::pow(x.clone(), k);
    let (a2, a3, a4, a6) = (sq(a), pw(a, 3), pw(a, 4), pw(a, 6));
    let bc = b * c;
    let s = one() + sq(b) * c + b * sq(c);
    let t = b + c + &bc + sq(&bc);
    let x = a * (one() + &a2 + &a4) * &s - &a2 * (one() + &a2) * &t - &bc * (one() - &a3 + &a6);
    let y = &a2 * (one() + &a2) * &s - &a3 * &t - a * &bc * (one() + &a4);

    let inner = poly_bc(
        &[(1, 1, 0), (-1, 0, 1), (1, 1, 1), (1, 3, 1), (-1, 2, 2), (1, 3, 2), (1, 5, 2), (-1, 2, 3), (-1, 4, 3)],
        b,
        c,
    );
    let w = one() + sq(b) * c - b * sq(c) + pw(b, 4) * sq(c) - pw(b, 3) * pw(c, 3);
    let u = -(a * (one() + &bc * inner)) + &bc * (one() + &a2) * &w;
    let w2 = one() + sq(b) * c - b * sq(c) + sq(&bc) + pw(b, 4) * sq(c) - pw(b, 3) * pw(c, 3);
    let v = -(a * &bc * w2) + sq(&bc) * (one() + &a2) * (one() + sq(b) * c - b * sq(c));
    Multipliers { x, y, u, v }
}

/// The three moduli and their multipliers at `z = q^n`. Multiplier `i` is
/// `≡ 1` modulo modulus `i` and divisible by the other two.
pub struct Lemma22System {
    pub moduli: [QPoly; 3],
    pub multipliers: [QPoly; 3],
}

pub fn lemma22_system(p: &ParamPoint, n: u32) -> Result<Lemma22System> {
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let z = qn(n);
    let bc = b * c;
    let m1 = pair_modulus(a, &z);
    let m2 = &lin(b, &-one(), &z) * &lin(&one(), &-&bc, &z);
    let m3 = lin(c, &-one(), &z);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let ms = [&m1, &m2, &m3];
        if !gcd(ms[i], ms[j]).is_one() {
            return Err(Error::NotCoprime);
        }
    }
    let Multipliers { x, y, u, v } = lemma22_multipliers(p);
    let d1 = (a - b) * (a - c) * (a - &bc) * (one() - a * b) * (one() - a * c) * (one() - a * &bc);
    let d2 = (a - b) * (b - c) * (a - &bc) * (one() - a * b) * (one() - a * &bc) * (one() - &bc * c);
    let d3 = (a - c) * (b - c) * (one() - a * c) * (one() - &bc * c);
    let mult = |num: QPoly, d: &BigRat| -> Result<QPoly> {
        if d.is_zero() {
            return Err(Error::Degenerate("multiplier denominator vanishes".into()));
        }
        Ok(num.scale(&d.recip()))
    };
    let k1 = mult(&(&m2 * &m3) * &lin(&x, &-&y, &z), &d1)?;
    let k2 = mult(&(&m1 * &m3) * &lin(&u, &-&v, &z), &d2)?;
    let k3 = mult(&m1 * &m2, &d3)?;
    Ok(Lemma22System { moduli: [m1, m2, m3], multipliers: [k1, k2, k3] })
}

/// The three displayed multiplier congruences.
pub fn verify_lemma22(p: &ParamPoint, n: u32) -> Result<bool> {
    let sys = lemma22_system(p, n)?;
    for (k, m) in sys.multipliers.iter().zip(&sys.moduli) {
        let claim = CongruenceClaim::new(RatFun::from(k.clone()), RatFun::one(), m.clone());
        if !congruent_mod(&claim)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Recombines `residues` (one per modulus) with the multipliers and checks
/// that the result reduces back to each residue and agrees with the
/// Bézout-based reconstruction.
pub fn crt_certificate(p: &ParamPoint, n: u32, residues: &[QPoly; 3]) -> Result<bool> {
    let sys = lemma22_system(p, n)?;
    let mut combined = QPoly::zero();
    for (k, r) in sys.multipliers.iter().zip(residues) {
        combined += &(k * r);
    }
    for (m, r) in sys.moduli.iter().zip(residues) {
        if combined.rem(m)? != r.rem(m)? {
            return Ok(false);
        }
    }
    let product = sys.moduli.iter().fold(QPoly::one(), |acc, m| &acc * m);
    let rebuilt = poly_crt(residues, &sys.moduli)?;
    Ok(rebuilt == combined.rem(&product)?)
}

/// The three lines of the `a`-side simplification, as polynomials in `z`:
/// the left numerator, its rewriting, and its reduction.
pub fn base_d_lines(a: &BigRat, z: &QPoly) -> [QPoly; 3] {
    let sq = |x: &BigRat| x * x;
    let a2 = sq(a);
    let a3 = &a2 * a;
    let a4 = &a2 * &a2;
    let left = &lin(&one(), &-one(), z) * &lin(&(-one() + a - &a2 + &a3 - &a4), &(a * (one() - a + &a2)), z);
    let one_minus_a_sq = QPoly::constant(sq(&(one() - a)));
    let a_minus_z = lin(a, &-one(), z);
    let rewritten = &-&one_minus_a_sq + &(&a_minus_z * &lin(&(-one() + &a2 - &a3), &(a - &a2 + &a3), z));
    let reduced = &-&one_minus_a_sq - &(&one_minus_a_sq.scale(a) * &a_minus_z);
    [left, rewritten, reduced]
}

/// One side of the simplification, for parameter `s` against `r`.
fn base_side(s: &BigRat, r: &BigRat, n: u32) -> Result<bool> {
    let z = qn(n);
    let [left, rewritten, reduced] = base_d_lines(s, &z);
    let modulus = pair_modulus(s, &z);
    if left != rewritten {
        return Ok(false);
    }
    let den = (one() - s) * (one() - s) * (s - r) * (one() - s * r);
    let target = ratio(lin(&(-one() - s * s), s, &z), &((s - r) * (one() - s * r)))?;
    if ratio(reduced.clone(), &den)? != target {
        return Ok(false);
    }
    let step = CongruenceClaim::new(RatFun::from(rewritten), RatFun::from(reduced), modulus.clone());
    let whole = CongruenceClaim::new(ratio(left, &den)?, target, modulus);
    Ok(congruent_mod(&step)? && congruent_mod(&whole)?)
}

/// The `a`-side and `b`-side simplifications of the `c = 1` chain.
pub fn verify_base_de(a: &BigRat, b: &BigRat, n: u32) -> Result<bool> {
    if a == b || (a * b).is_one() || a.is_one() || b.is_one() {
        return Err(Error::Degenerate("need a != b, ab != 1, a, b != 1".into()));
    }
    Ok(base_side(a, b, n)? && base_side(b, a, n)?)
}
