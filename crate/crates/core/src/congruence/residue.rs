//! Arithmetic in `Q[q]/(M)` for factored products.
//!
//! A congruence between sums of factored products is decided without ever
//! expanding a rational function: both sides are multiplied by a common
//! denominator `W` (itself a product of known factors), every product
//! becomes a polynomial that is reduced factor by factor, and the claim
//! holds iff the two residues agree. This is equivalent to the definition
//! exactly when every factor of `W` is a unit modulo `M`, which is checked
//! one factor at a time.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{gcd, QPoly};
use crate::qseries::{simplex_sum_with, Factor, ProductSum, QProduct};

pub struct ResidueRing {
    modulus: QPoly,
    residues: RefCell<HashMap<Factor, QPoly>>,
    units: RefCell<HashMap<Factor, bool>>,
}

impl ResidueRing {
    pub fn new(modulus: &QPoly) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(ResidueRing {
            modulus: modulus.monic(),
            residues: RefCell::default(),
            units: RefCell::default(),
        })
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn reduce(&self, p: &QPoly) -> QPoly {
        match p.degree() {
            Some(d) if d >= self.modulus.degree().unwrap_or(0) => {
                p.rem(&self.modulus).expect("modulus is nonzero")
            }
            _ => p.clone(),
        }
    }

    pub fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.reduce(&(a * b))
    }

    pub fn pow(&self, base: &QPoly, mut e: u64) -> QPoly {
        let mut base = self.reduce(base);
        let mut acc = self.reduce(&QPoly::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn q_pow(&self, k: u64) -> QPoly {
        self.pow(&QPoly::q(), k)
    }

    fn factor_residue(&self, f: &Factor) -> QPoly {
        if let Some(r) = self.residues.borrow().get(f) {
            return r.clone();
        }
        let r = self.reduce(&f.poly());
        self.residues.borrow_mut().insert(f.clone(), r.clone());
        r
    }

    /// Whether the factor is invertible modulo `M`.
    pub fn is_unit(&self, f: &Factor) -> bool {
        if let Some(&u) = self.units.borrow().get(f) {
            return u;
        }
        let u = gcd(&f.poly(), &self.modulus).is_one();
        self.units.borrow_mut().insert(f.clone(), u);
        u
    }

    /// Checks that every factor of the (polynomial) product is a unit.
    pub fn ensure_unit(&self, p: &QProduct) -> Result<()> {
        if p.is_zero() {
            return Err(Error::Undecidable("zero multiplier".into()));
        }
        if p.q_power() > 0 && self.modulus.coeff(0).is_zero() {
            return Err(Error::Undecidable("q divides the modulus".into()));
        }
        for (f, _) in p.factors().iter().filter(|(_, &m)| m > 0) {
            if !self.is_unit(f) {
                return Err(Error::Undecidable(format!("denominator factor {f} shares a root with the modulus")));
            }
        }
        Ok(())
    }

    /// Residue of a product with no denominator.
    pub fn eval(&self, p: &QProduct) -> Result<QPoly> {
        if p.is_zero() {
            return Ok(QPoly::zero());
        }
        if !p.is_polynomial() {
            return Err(Error::Precondition(format!("product {p} still has a denominator")));
        }
        let mut acc = self.reduce(&QPoly::constant(p.scale().clone()));
        if p.q_power() > 0 {
            acc = self.mul(&acc, &self.q_pow(p.q_power() as u64));
        }
        for (f, &m) in p.factors() {
            let r = self.factor_residue(f);
            acc = self.mul(&acc, &self.pow(&r, m as u64));
        }
        Ok(acc)
    }

    /// Residue of `W·s` for a sum whose summands all become polynomial
    /// after multiplication by `w`.
    pub fn eval_sum_times(&self, s: &ProductSum, w: &QProduct) -> Result<QPoly> {
        let mut acc = QPoly::zero();
        for t in &s.terms {
            acc += &self.eval(&(t * w))?;
        }
        Ok(self.reduce(&acc))
    }
}

/// `∑_{k_1+…+k_dim ≤ bound} T(k_1)…T(k_dim) ≡ rhs (mod modulus)`.
pub struct SimplexClaim<'a> {
    /// `T(0), …, T(bound)`.
    pub terms: &'a [QProduct],
    pub dim: u32,
    pub bound: usize,
    pub rhs: &'a ProductSum,
    pub modulus: &'a QPoly,
}

impl SimplexClaim<'_> {
    /// `(lhs − rhs)·W mod M` for the unit multiplier `W`; zero iff the
    /// claim holds.
    pub fn difference_residue(&self) -> Result<QPoly> {
        if self.terms.len() <= self.bound {
            return Err(Error::Precondition("not enough terms for the simplex bound".into()));
        }
        let ring = ResidueRing::new(self.modulus)?;
        let terms = &self.terms[..=self.bound];
        let d = QProduct::common_denominator(terms);
        let dt = d.pow(self.dim as i32)?;
        let scaled: Vec<QProduct> = self.rhs.terms.iter().map(|s| s * &dt).collect();
        let e = QProduct::common_denominator(&scaled);
        ring.ensure_unit(&d)?;
        ring.ensure_unit(&e)?;

        let residues = terms.iter().map(|t| ring.eval(&(t * &d))).collect::<Result<Vec<_>>>()?;
        let lhs = simplex_sum_with(&residues, self.dim, self.bound, QPoly::zero(), |a, b| a + b, |a, b| ring.mul(a, b));
        let lhs = ring.mul(&lhs, &ring.eval(&e)?);
        let rhs = ring.eval_sum_times(&ProductSum::new(scaled), &e)?;
        Ok(ring.reduce(&(&lhs - &rhs)))
    }
}

pub fn check_simplex_congruence(claim: &SimplexClaim<'_>) -> Result<bool> {
    Ok(claim.difference_residue()?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{congruent_mod, CongruenceClaim};
    use crate::exact::{cyclotomic, int};
    use crate::qseries::{simplex_sum, QMonomial, TermSpec};

    #[test]
    fn eval_matches_expansion() {
        let m = cyclotomic(4).pow(3);
        let ring = ResidueRing::new(&m).unwrap();
        let mut p = QProduct::pochhammer(&QMonomial::new(int(3), 1), 3, 4);
        p = &p * &QProduct::q_integer(9).pow(2).unwrap();
        p = &p * &QProduct::q_pow(5);
        let direct = p.to_ratfun().num().rem(&m).unwrap();
        assert_eq!(ring.eval(&p).unwrap(), direct);
    }

    #[test]
    fn agrees_with_definition_route() {
        // the double sum of A-terms at n = 4 against an arbitrary rhs
        let n = 4u32;
        let modulus = cyclotomic(n).pow(3);
        let terms = TermSpec::A.products_upto(n - 1).unwrap();
        let lhs = simplex_sum(&TermSpec::A, 2, n - 1, None).unwrap();
        for rhs in [ProductSum::single(QProduct::q_integer(4).pow(2).unwrap()), ProductSum::default()] {
            let claim = SimplexClaim { terms: &terms, dim: 2, bound: 3, rhs: &rhs, modulus: &modulus };
            let fast = check_simplex_congruence(&claim).unwrap();
            let slow = congruent_mod(&CongruenceClaim::new(lhs.clone(), rhs.to_ratfun(), modulus.clone())).unwrap();
            assert_eq!(fast, slow);
        }
        // the expanded simplex is congruent to itself
        let mut expanded = ProductSum::default();
        for i in 0..4 {
            for j in 0..4 - i {
                expanded.push(&terms[i] * &terms[j]);
            }
        }
        let claim = SimplexClaim { terms: &terms, dim: 2, bound: 3, rhs: &expanded, modulus: &modulus };
        assert!(check_simplex_congruence(&claim).unwrap());
        assert_eq!(expanded.to_ratfun(), lhs);
    }

    #[test]
    fn shared_root_is_undecidable() {
        let modulus = cyclotomic(3);
        let terms = vec![QProduct::one(), QProduct::q_integer(3).recip().unwrap()];
        let rhs = ProductSum::default();
        let claim = SimplexClaim { terms: &terms, dim: 1, bound: 1, rhs: &rhs, modulus: &modulus };
        assert!(matches!(claim.difference_residue(), Err(Error::Undecidable(_))));
    }
}
