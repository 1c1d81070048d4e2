//! Cyclotomic polynomials by recursive division of `q^n - 1`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::One;

use crate::exact::poly::QPoly;
use crate::exact::BigRat;

fn cache() -> &'static Mutex<HashMap<u32, QPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, QPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `q^n - 1`.
pub fn q_power_minus_one(n: u32) -> QPoly {
    QPoly::monomial(BigRat::one(), n as usize) - QPoly::one()
}

/// The n-th cyclotomic polynomial Φ_n(q).
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic(n: u32) -> QPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().expect("cyclotomic cache").get(&n) {
        return p.clone();
    }
    let mut result = q_power_minus_one(n);
    for d in divisors(n) {
        if d < n {
            result = result
                .exact_div(&cyclotomic(d))
                .expect("Φ_d divides q^n - 1 for d | n");
        }
    }
    cache().lock().expect("cyclotomic cache").insert(n, result.clone());
    result
}

/// Indices `d` with Φ_d dividing `1 + q^e`: divisors of `2e` that do not divide `e`.
pub fn plus_one_indices(e: u32) -> Vec<u32> {
    divisors(2 * e).into_iter().filter(|d| e % d != 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_indices() {
        assert_eq!(cyclotomic(1), QPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic(2), QPoly::from_ints(&[1, 1]));
        assert_eq!(cyclotomic(4), QPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), QPoly::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn twelfth() {
        // q^12 - 1 divided by Φ1 Φ2 Φ3 Φ4 Φ6 by hand
        let mut rest = q_power_minus_one(12);
        for d in [1, 2, 3, 4, 6] {
            rest = rest.exact_div(&cyclotomic(d)).unwrap();
        }
        assert_eq!(rest, QPoly::from_ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(12), rest);
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn one_plus_q_power() {
        // 1 + q^3 = Φ2 Φ6
        assert_eq!(plus_one_indices(3), vec![2, 6]);
        let prod = plus_one_indices(6)
            .into_iter()
            .fold(QPoly::one(), |acc, d| &acc * &cyclotomic(d));
        assert_eq!(prod, QPoly::from_ints(&[1, 0, 0, 0, 0, 0, 1]));
    }
}
