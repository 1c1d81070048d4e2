//! Rational parameter points and their seeded sampling.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::BigRat;

/// A point `(a, b, c)` at which the multipliers of the three-modulus CRT
/// identity have nonzero denominators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamPoint {
    pub a: BigRat,
    pub b: BigRat,
    pub c: BigRat,
}

fn is_unit_sign(x: &BigRat) -> bool {
    x.is_zero() || x.is_one() || (-x).is_one()
}

impl ParamPoint {
    pub fn new(a: BigRat, b: BigRat, c: BigRat) -> Result<Self> {
        match Self::degeneracy(&a, &b, &c) {
            Some(why) => Err(Error::Degenerate(why.into())),
            None => Ok(ParamPoint { a, b, c }),
        }
    }

    /// The first condition of the degeneracy set that the point meets.
    pub fn degeneracy(a: &BigRat, b: &BigRat, c: &BigRat) -> Option<&'static str> {
        let one = BigRat::one();
        let bc = b * c;
        let checks = [
            (is_unit_sign(a), "a in {0, 1, -1}"),
            (is_unit_sign(b), "b in {0, 1, -1}"),
            (is_unit_sign(c), "c in {0, 1, -1}"),
            (a == b, "a = b"),
            (a == c, "a = c"),
            (b == c, "b = c"),
            (a * b == one, "ab = 1"),
            (a * c == one, "ac = 1"),
            (bc == one, "bc = 1"),
            (a * &bc == one, "abc = 1"),
            (a == &bc, "a = bc"),
            (&bc * c == one, "bc^2 = 1"),
        ];
        checks.into_iter().find(|(hit, _)| *hit).map(|(_, why)| why)
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={} b={} c={}", self.a, self.b, self.c)
    }
}

/// Degeneracy for the two-parameter statements: `a, b ∉ {0, ±1}`, `a ≠ b`,
/// `ab ≠ 1`.
pub fn pair_degeneracy(a: &BigRat, b: &BigRat) -> Option<&'static str> {
    if is_unit_sign(a) {
        Some("a in {0, 1, -1}")
    } else if is_unit_sign(b) {
        Some("b in {0, 1, -1}")
    } else if a == b {
        Some("a = b")
    } else if (a * b).is_one() {
        Some("ab = 1")
    } else {
        None
    }
}

/// A generator keyed by `(seed, label, trial)`: each trial of each
/// statement gets its own stream, independent of scheduling.
pub fn trial_rng(seed: u64, label: &str, trial: u64) -> ChaCha8Rng {
    // FNV-1a folds the label into the key
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in label.bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
    rng.set_stream(trial);
    rng
}

/// `n/d` with `n, d` uniform on `{-9..9} \ {0}`.
pub fn sample_rational(rng: &mut impl Rng) -> BigRat {
    let mut draw = || loop {
        let v: i64 = rng.gen_range(-9..=9);
        if v != 0 {
            return v;
        }
    };
    let n = draw();
    let d = draw();
    BigRat::new(n.into(), d.into())
}

/// Rejection-samples a nondegenerate `(a, b, c)`.
pub fn sample_point(rng: &mut impl Rng) -> ParamPoint {
    loop {
        let (a, b, c) = (sample_rational(rng), sample_rational(rng), sample_rational(rng));
        if let Ok(p) = ParamPoint::new(a, b, c) {
            return p;
        }
    }
}

/// Rejection-samples a nondegenerate `(a, b)`.
pub fn sample_pair(rng: &mut impl Rng) -> (BigRat, BigRat) {
    loop {
        let (a, b) = (sample_rational(rng), sample_rational(rng));
        if pair_degeneracy(&a, &b).is_none() {
            return (a, b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn degeneracy_set() {
        assert!(ParamPoint::new(int(2), int(3), int(5)).is_ok());
        assert!(ParamPoint::new(int(2), int(2), int(5)).is_err());
        assert!(ParamPoint::new(int(6), int(2), int(3)).is_err()); // a = bc
        assert!(ParamPoint::new(int(2), int(4), rat(1, 2)).is_err()); // bc^2 = 1
        assert!(ParamPoint::new(rat(1, 30), int(2), int(3)).is_ok());
        assert!(ParamPoint::new(rat(1, 6), int(2), int(3)).is_err()); // abc = 1
        assert!(pair_degeneracy(&int(2), &rat(1, 2)).is_some());
    }

    #[test]
    fn sampling_is_reproducible() {
        let a: Vec<_> = (0..5).map(|t| sample_point(&mut trial_rng(42, "lemma-b", t))).collect();
        let b: Vec<_> = (0..5).map(|t| sample_point(&mut trial_rng(42, "lemma-b", t))).collect();
        assert_eq!(a, b);
        let c = sample_point(&mut trial_rng(42, "thm-c", 0));
        let d = sample_point(&mut trial_rng(43, "lemma-b", 0));
        assert!(c != a[0] || d != a[0]);
    }

    #[test]
    fn sampled_heights_are_small() {
        let mut rng = trial_rng(7, "x", 0);
        for _ in 0..200 {
            let r = sample_rational(&mut rng);
            assert!(!r.is_zero());
            assert!(r.numer().magnitude() <= &9u32.into() && r.denom() <= &9.into());
        }
    }
}
