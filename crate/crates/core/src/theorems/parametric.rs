//! Simplex-sum congruences: the two main theorems, their parametric
//! generalizations, the `b = 1` forms and the congruence chain.
//!
//! Every left-hand side is the brute-force simplex sum of the factored
//! terms; the right-hand sides are built as sums of factored products and
//! the comparison runs in the residue ring of the modulus.

use num_traits::{One, Zero};

use crate::congruence::multipliers::lemma22_system;
use crate::congruence::params::pair_degeneracy;
use crate::congruence::{congruent_mod, crt_certificate, reduce_mod, verify_lemma22, CongruenceClaim, ParamPoint, SimplexClaim};
use crate::error::{Error, Result};
use crate::exact::{gcd, int, BigRat, QPoly, RatFun};
use crate::qseries::{ProductSum, QProduct, TermSpec};
use crate::theorems::forms::{
    harmonic_sigma, lin_qn, mono, one_minus_sqn, p_ratio, pair_modulus, phi_pow, product_poly, q_int_poly, q_ratio,
    qm, ratio3, s_minus_qn, third,
};
use crate::theorems::statement::{Check, StatementId};

fn degree(p: &QPoly) -> usize {
    p.degree().unwrap_or(0)
}

/// Checks `∑_{k_1+…+k_dim ≤ bound} T(k_1)…T(k_dim) ≡ rhs` against each
/// modulus in turn, stopping at the first that fails. The moduli are
/// expected to be listed from cheapest to strongest.
pub fn staged_simplex_check(
    terms: &[QProduct],
    dim: u32,
    bound: usize,
    rhs: &ProductSum,
    moduli: &[QPoly],
) -> Result<Check> {
    let mut last = Check::identity(true);
    for modulus in moduli {
        let claim = SimplexClaim { terms, dim, bound, rhs, modulus };
        let ok = claim.difference_residue()?.is_zero();
        last = Check::modulo(ok, degree(modulus));
        if !ok {
            break;
        }
    }
    Ok(last)
}

/// Checks the congruence modulo the product of `pieces`. When the pieces
/// are pairwise coprime this is decided one piece at a time (the product
/// divides a polynomial iff each piece does), in the order given and
/// stopping at the first failure; otherwise the product is used whole.
pub fn split_simplex_check(
    terms: &[QProduct],
    dim: u32,
    bound: usize,
    rhs: &ProductSum,
    pieces: &[QPoly],
) -> Result<Check> {
    let full = product_poly(pieces);
    let coprime = (0..pieces.len()).all(|i| (i + 1..pieces.len()).all(|j| gcd(&pieces[i], &pieces[j]).is_one()));
    let check = if coprime {
        staged_simplex_check(terms, dim, bound, rhs, pieces)?
    } else {
        staged_simplex_check(terms, dim, bound, rhs, &[full.clone()])?
    };
    Ok(Check::modulo(check.ok, degree(&full)))
}

/// The right-hand side of the main double (`dim = 2`) or triple
/// (`dim = 3`) congruence.
pub fn main_rhs(n: u32, dim: u32) -> Result<ProductSum> {
    let m = third(n)?;
    let nn = QProduct::q_integer(n as i64);
    let base = &nn.pow(dim as i32)? * &p_ratio(m).pow(3 * dim as i32)?;
    let coef = match dim {
        2 => &(&nn.pow(2)? * &lin_qn(&int(2), &-BigRat::one(), n)).scaled(&int(2)),
        3 => &nn.pow(2)?.scaled(&int(3)),
        _ => return Err(Error::Precondition(format!("dimension {dim} is not 2 or 3"))),
    };
    let mut rhs = ProductSum::single(base.clone());
    rhs.extend(harmonic_sigma(m).times(&(&base * coef)));
    Ok(rhs)
}

/// The main congruence against an arbitrary right-hand side, checked
/// modulo `Φ_n` and then `Φ_n⁶`.
pub fn check_main(n: u32, dim: u32, rhs: &ProductSum) -> Result<Check> {
    third(n)?;
    let terms = TermSpec::A.products_upto(n - 1)?;
    staged_simplex_check(&terms, dim, n as usize - 1, rhs, &[phi_pow(n, 1), phi_pow(n, 6)])
}

pub fn verify_thm_a(n: u32) -> Result<Check> {
    check_main(n, 2, &main_rhs(n, 2)?)
}

/// The triple congruence together with the final reduction step. At
/// `n = 1` the reduction step does not apply (`[1] = 1` carries no `Φ_1`)
/// and only the congruence itself is checked.
pub fn verify_thm_aa(n: u32) -> Result<Check> {
    let main = check_main(n, 3, &main_rhs(n, 3)?)?;
    if n == 1 {
        return Ok(main);
    }
    Ok(main.and(verify_final_reduction(n)?))
}

/// `[n]⁵(2 − q^n) ≡ [n]⁵ (mod Φ_n⁶)`; false at `n = 1`.
pub fn verify_final_reduction(n: u32) -> Result<Check> {
    let n5 = q_int_poly(n).pow(5);
    let two_minus = QPoly::from_ints(&[2]) - QPoly::monomial(BigRat::one(), n as usize);
    let modulus = phi_pow(n, 6);
    let claim = CongruenceClaim::new(RatFun::from(&n5 * &two_minus), RatFun::from(n5), modulus.clone());
    Ok(Check::modulo(congruent_mod(&claim)?, degree(&modulus)))
}

/// Whether the double-sum difference is divisible by `Φ_n⁷` as well. No
/// claim is made either way.
pub fn thm_a_phi7(n: u32) -> Result<bool> {
    let terms = TermSpec::A.products_upto(n - 1)?;
    let rhs = main_rhs(n, 2)?;
    let modulus = phi_pow(n, 7);
    let claim = SimplexClaim { terms: &terms, dim: 2, bound: n as usize - 1, rhs: &rhs, modulus: &modulus };
    Ok(claim.difference_residue()?.is_zero())
}

fn nondegenerate_pair(a: &BigRat, b: &BigRat) -> Result<()> {
    match pair_degeneracy(a, b) {
        Some(why) => Err(Error::Degenerate(why.into())),
        None => Ok(()),
    }
}

/// One half of the parametric right-hand side:
/// `[n]^t (1−s q^n)(s−q^n)(−1−r²+r q^n)/((r−s)(1−rs)) · Q_s^t`.
fn cd_half(n: u32, s: &BigRat, r: &BigRat, dim: u32) -> Result<QProduct> {
    let m = third(n)?;
    let scalar = ((r - s) * (BigRat::one() - r * s)).recip();
    let lin = lin_qn(&(-BigRat::one() - r * r), r, n);
    let out = &(&(&one_minus_sqn(s, n) * &s_minus_qn(s, n)) * &lin) * &q_ratio(s, m)?.pow(dim as i32)?;
    Ok((&QProduct::q_integer(n as i64).pow(dim as i32)? * &out).scaled(&scalar))
}

/// The right-hand side of the parametric congruence in dimension `dim`.
pub fn thm_cd_rhs(n: u32, a: &BigRat, b: &BigRat, dim: u32) -> Result<ProductSum> {
    nondegenerate_pair(a, b)?;
    Ok(ProductSum::new(vec![cd_half(n, a, b, dim)?, cd_half(n, b, a, dim)?]))
}

fn thm_cd_moduli(n: u32, a: &BigRat, b: &BigRat) -> [QPoly; 3] {
    [phi_pow(n, 2), pair_modulus(a, n), pair_modulus(b, n)]
}

fn verify_thm_cd(n: u32, a: &BigRat, b: &BigRat, dim: u32) -> Result<Check> {
    let rhs = thm_cd_rhs(n, a, b, dim)?;
    let terms = TermSpec::b(a.clone(), b.clone()).products_upto(n - 1)?;
    split_simplex_check(&terms, dim, n as usize - 1, &rhs, &thm_cd_moduli(n, a, b))
}

pub fn verify_thm_c(n: u32, a: &BigRat, b: &BigRat) -> Result<Check> {
    verify_thm_cd(n, a, b, 2)
}

pub fn verify_thm_d(n: u32, a: &BigRat, b: &BigRat) -> Result<Check> {
    verify_thm_cd(n, a, b, 3)
}

/// The `b = 1` right-hand side
/// `[n]^t(1−q^n)²P^{3t} + [n]^t(2−q^n){a(1−q^n)²P^{3t} − (1−aq^n)(a−q^n)Q_a^t}/(1−a)²`.
pub fn b_star_rhs(n: u32, a: &BigRat, dim: u32) -> Result<ProductSum> {
    let m = third(n)?;
    let one = BigRat::one();
    if a.is_zero() || a.is_one() || *a == -&one {
        return Err(Error::Degenerate("a must avoid 0 and ±1".into()));
    }
    let t = dim as i32;
    let nt = QProduct::q_integer(n as i64).pow(t)?;
    let p3t = p_ratio(m).pow(3 * t)?;
    let one_minus_qn_sq = one_minus_sqn(&one, n).pow(2)?;
    let first = &(&nt * &one_minus_qn_sq) * &p3t;
    let w = &nt * &lin_qn(&int(2), &-&one, n);
    let inv = (&one - a).pow(2).recip();
    let second = (&(&w * &one_minus_qn_sq) * &p3t).scaled(&(a * &inv));
    let pair = &one_minus_sqn(a, n) * &s_minus_qn(a, n);
    let third_term = (&(&w * &pair) * &q_ratio(a, m)?.pow(t)?).scaled(&-inv);
    Ok(ProductSum::new(vec![first, second, third_term]))
}

fn verify_b_star(n: u32, a: &BigRat, dim: u32) -> Result<Check> {
    let rhs = b_star_rhs(n, a, dim)?;
    let terms = TermSpec::BStar { a: a.clone().into() }.products_upto(n - 1)?;
    split_simplex_check(&terms, dim, n as usize - 1, &rhs, &[phi_pow(n, 4), pair_modulus(a, n)])
}

pub fn verify_wei_gg(n: u32, a: &BigRat) -> Result<Check> {
    verify_b_star(n, a, 2)
}

pub fn verify_wei_hhh(n: u32, a: &BigRat) -> Result<Check> {
    verify_b_star(n, a, 3)
}

/// The closed forms reached modulo `(1−aq^n)(a−q^n)`, `(b−q^n)(1−bcq^n)`
/// and `(c−q^n)`, in that order.
pub fn chain_closed_forms(n: u32, p: &ParamPoint) -> Result<[QProduct; 3]> {
    let m = third(n)?;
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let inv = |x: &BigRat| x.recip();
    let bc = b * c;
    let r_cc = ratio3(
        &[qm(4), mono(&inv(b), 2), mono(&inv(c), 2), mono(&bc, 2)],
        &[qm(1), mono(b, 3), mono(c, 3), mono(&inv(&bc), 3)],
        m,
    )?;
    let side = |s: &BigRat| {
        ratio3(
            &[qm(4), qm(2), mono(&(a * s), 2), mono(&(s / a), 2)],
            &[mono(s, 1), mono(s, 3), mono(a, 3), mono(&inv(a), 3)],
            m,
        )
    };
    Ok([r_cc, side(c)?, side(b)?])
}

fn chain_moduli(n: u32, p: &ParamPoint) -> [QPoly; 3] {
    let bc = &p.b * &p.c;
    let m2 = (&s_minus_qn(&p.b, n) * &one_minus_sqn(&bc, n)).to_ratfun().num().clone();
    let m3 = s_minus_qn(&p.c, n).to_ratfun().num().clone();
    [pair_modulus(&p.a, n), m2, m3]
}

/// `T_s` of the `c = 1` simplification: the `s`-side term with the other
/// parameter `r`.
fn c1_term(n: u32, s: &BigRat, r: &BigRat, dim: u32) -> Result<QProduct> {
    let m = third(n)?;
    let one = BigRat::one();
    let s2 = s * s;
    let s3 = &s2 * s;
    let c0 = -&one + s - &s2 + &s3 - &s3 * s;
    let c1 = s * (&one - s + &s2);
    let scalar = ((&one - s).pow(2) * (s - r) * (&one - s * r)).recip();
    let f = ratio3(&[qm(4), qm(2), mono(&r.recip(), 2), mono(r, 2)], &[qm(1), qm(3), mono(r, 3), mono(&r.recip(), 3)], m)?;
    let out = &(&(&(&s_minus_qn(r, n) * &one_minus_sqn(r, n)) * &one_minus_sqn(&one, n)) * &lin_qn(&c0, &c1, n))
        * &f.pow(dim as i32)?;
    Ok(out.scaled(&scalar))
}

/// One link of the congruence chain for the three-parameter series.
pub fn verify_chain(id: StatementId, n: u32, p: &ParamPoint) -> Result<Check> {
    use StatementId::*;
    if !id.is_chain() {
        return Err(Error::Precondition(format!("{id} is not a chain statement")));
    }
    third(n)?;
    let dim = id.dim();
    let bound = n as usize - 1;
    let t = dim as i32;
    if matches!(id, WeiFf | WeiGgg) {
        let (a, b) = (&p.a, &p.b);
        nondegenerate_pair(a, b)?;
        let rhs = ProductSum::new(vec![c1_term(n, a, b, dim)?, c1_term(n, b, a, dim)?]);
        let terms = TermSpec::b(a.clone(), b.clone()).products_upto(n - 1)?;
        return split_simplex_check(&terms, dim, bound, &rhs, &thm_cd_moduli(n, a, b));
    }
    let terms = TermSpec::beta(p.a.clone(), p.b.clone(), p.c.clone()).products_upto(n - 1)?;
    let closed = chain_closed_forms(n, p)?;
    let moduli = chain_moduli(n, p);
    let (rhs, modulus) = match id {
        WeiBb | WeiBbb => (ProductSum::default(), phi_pow(n, 1)),
        WeiCc | WeiCcc => (ProductSum::single(closed[0].pow(t)?), moduli[0].clone()),
        WeiDd | WeiDdd => (ProductSum::single(closed[1].pow(t)?), moduli[1].clone()),
        WeiEe | WeiEee => (ProductSum::single(closed[2].pow(t)?), moduli[2].clone()),
        WeiEf | WeiFff => {
            let sys = lemma22_system(p, n)?;
            let mut rhs = ProductSum::default();
            for (k, r) in sys.multipliers.iter().zip(&closed) {
                rhs.extend(ProductSum::from_poly(k).times(&r.pow(t)?));
            }
            let mut parts = vec![phi_pow(n, 1)];
            parts.extend(sys.moduli.iter().cloned());
            return split_simplex_check(&terms, dim, bound, &rhs, &parts);
        }
        _ => unreachable!("c = 1 links handled above"),
    };
    staged_simplex_check(&terms, dim, bound, &rhs, &[modulus])
}

/// The multiplier congruences, plus a CRT round trip of the three chain
/// residues of the double sum.
pub fn verify_lemma_b(n: u32, p: &ParamPoint) -> Result<Check> {
    if !verify_lemma22(p, n)? {
        return Ok(Check::identity(false));
    }
    let closed = chain_closed_forms(n, p)?;
    let moduli = chain_moduli(n, p);
    let mut residues: [QPoly; 3] = Default::default();
    for i in 0..3 {
        residues[i] = reduce_mod(&closed[i].pow(2)?.to_ratfun(), &moduli[i])?;
    }
    let ok = crt_certificate(p, n, &residues)?;
    Ok(Check::modulo(ok, moduli.iter().map(degree).sum()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> ParamPoint {
        ParamPoint::new(int(2), int(3), int(5)).unwrap()
    }

    #[test]
    fn main_theorems_small() {
        for n in [1, 4] {
            assert!(verify_thm_a(n).unwrap().ok, "thm-a n={n}");
            assert!(verify_thm_aa(n).unwrap().ok, "thm-aa n={n}");
        }
        assert_eq!(verify_thm_a(4).unwrap().modulus_degree, 12);
    }

    #[test]
    fn perturbed_rhs_fails() {
        let mut rhs = main_rhs(4, 2).unwrap();
        rhs.push(QProduct::q_pow(1));
        assert!(!check_main(4, 2, &rhs).unwrap().ok);
    }

    #[test]
    fn perturbed_parametric_rhs_fails() {
        let (a, b) = (int(2), int(3));
        let mut rhs = thm_cd_rhs(4, &a, &b, 2).unwrap();
        let terms = TermSpec::b(a.clone(), b.clone()).products_upto(3).unwrap();
        let pieces = thm_cd_moduli(4, &a, &b);
        assert!(split_simplex_check(&terms, 2, 3, &rhs, &pieces).unwrap().ok);
        // a multiple of Φ_4² passes the first piece and must be caught later
        rhs.extend(ProductSum::from_poly(&pieces[0]));
        assert!(!split_simplex_check(&terms, 2, 3, &rhs, &pieces).unwrap().ok);
    }

    #[test]
    fn parametric_small() {
        let (a, b) = (int(2), int(3));
        assert!(verify_thm_c(4, &a, &b).unwrap().ok);
        assert!(verify_thm_d(4, &a, &b).unwrap().ok);
        assert!(verify_wei_gg(4, &a).unwrap().ok);
        assert!(verify_wei_hhh(4, &a).unwrap().ok);
    }

    #[test]
    fn behaviour_at_one() {
        let (a, b) = (int(2), int(3));
        assert!(verify_thm_c(1, &a, &b).unwrap().ok);
        assert!(verify_thm_d(1, &a, &b).unwrap().ok);
        assert!(verify_wei_gg(1, &a).unwrap().ok);
        // With m = 0 the links that lean on Φ_1 ∤ (1 − q) or on the
        // (1 − q^n)² from (q⁴; q³)_m break down.
        let p = point();
        for id in StatementId::ALL.into_iter().filter(|id| id.is_chain()) {
            let expect = !matches!(id, StatementId::WeiBb | StatementId::WeiBbb | StatementId::WeiFf | StatementId::WeiGgg);
            assert_eq!(verify_chain(id, 1, &p).unwrap().ok, expect, "{id}");
        }
    }

    #[test]
    fn chain_small() {
        let p = point();
        for id in StatementId::ALL.into_iter().filter(|id| id.is_chain()) {
            assert!(verify_chain(id, 4, &p).unwrap().ok, "{id}");
        }
    }

    #[test]
    fn lemma_b_small() {
        assert!(verify_lemma_b(4, &point()).unwrap().ok);
    }

    #[test]
    fn final_reduction() {
        assert!(verify_final_reduction(4).unwrap().ok);
        assert!(verify_final_reduction(7).unwrap().ok);
        assert!(!verify_final_reduction(1).unwrap().ok);
    }
}
