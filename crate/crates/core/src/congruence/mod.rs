//! Congruences of rational functions modulo polynomials.
//!
//! `A/B ≡ C/D (mod P)` means `P | AD − CB` with `BD` coprime to `P`. A
//! claim whose denominators share a factor with the modulus is
//! *undecidable*, which is reported as an error and never as `false`.

pub mod multipliers;
pub mod params;
pub mod residue;

use crate::error::{Error, Result};
use crate::exact::{gcd, inverse_mod, QPoly, RatFun};

pub use multipliers::{
    crt_certificate, lemma22_multipliers, verify_base_de, verify_lemma22, verify_relations, Multipliers,
};
pub use params::{sample_pair, sample_point, sample_rational, trial_rng, ParamPoint};
pub use residue::{check_simplex_congruence, ResidueRing, SimplexClaim};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClaim {
    pub lhs: RatFun,
    pub rhs: RatFun,
    pub modulus: QPoly,
}

impl CongruenceClaim {
    pub fn new(lhs: RatFun, rhs: RatFun, modulus: QPoly) -> Self {
        CongruenceClaim { lhs, rhs, modulus }
    }
}

fn ensure_coprime(den: &QPoly, modulus: &QPoly, side: &str) -> Result<()> {
    if gcd(den, modulus).is_one() {
        Ok(())
    } else {
        Err(Error::Undecidable(format!("{side} denominator shares a factor with the modulus")))
    }
}

/// Decides the claim by the definition: the modulus divides the numerator
/// of `lhs − rhs`.
pub fn congruent_mod(claim: &CongruenceClaim) -> Result<bool> {
    if claim.modulus.is_zero() {
        return Err(Error::DivisionByZero);
    }
    ensure_coprime(claim.lhs.den(), &claim.modulus, "lhs")?;
    ensure_coprime(claim.rhs.den(), &claim.modulus, "rhs")?;
    let diff = &claim.lhs - &claim.rhs;
    claim.modulus.divides(diff.num())
}

/// The representative of `f` of degree below the modulus.
pub fn reduce_mod(f: &RatFun, modulus: &QPoly) -> Result<QPoly> {
    if modulus.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let num = f.num().rem(modulus)?;
    if f.is_polynomial() {
        return Ok(num);
    }
    let inv = inverse_mod(&f.den().rem(modulus)?, modulus).ok_or(Error::NotCoprime)?;
    (&num * &inv).rem(modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{cyclotomic, rat};

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn q2p1() -> QPoly {
        p(&[1, 0, 1])
    }

    #[test]
    fn examples() {
        let q4 = RatFun::from(QPoly::monomial(rat(1, 1), 4));
        assert!(congruent_mod(&CongruenceClaim::new(q4, RatFun::one(), cyclotomic(4))).unwrap());

        let inv = RatFun::new(QPoly::one(), p(&[1, -1])).unwrap();
        let half = RatFun::from(p(&[1, 1]).scale(&rat(1, 2)));
        assert!(congruent_mod(&CongruenceClaim::new(inv, half, q2p1())).unwrap());

        let q = RatFun::from(QPoly::q());
        assert!(!congruent_mod(&CongruenceClaim::new(q, RatFun::one(), q2p1())).unwrap());
    }

    #[test]
    fn undecidable_is_an_error() {
        let bad = RatFun::new(QPoly::one(), p(&[1, 0, 1])).unwrap();
        let claim = CongruenceClaim::new(bad, RatFun::zero(), q2p1());
        assert!(matches!(congruent_mod(&claim), Err(Error::Undecidable(_))));
    }

    #[test]
    fn reductions() {
        let q5 = RatFun::from(QPoly::monomial(rat(1, 1), 5));
        assert_eq!(reduce_mod(&q5, &q2p1()).unwrap(), QPoly::q());
        let inv = RatFun::new(QPoly::one(), p(&[1, -1])).unwrap();
        assert_eq!(reduce_mod(&inv, &q2p1()).unwrap(), p(&[1, 1]).scale(&rat(1, 2)));
        let small = RatFun::from(p(&[3, 7]));
        assert_eq!(reduce_mod(&small, &q2p1()).unwrap(), p(&[3, 7]));
        let bad = RatFun::new(QPoly::one(), p(&[1, 0, 1])).unwrap();
        assert_eq!(reduce_mod(&bad, &q2p1()), Err(Error::NotCoprime));
    }
}
