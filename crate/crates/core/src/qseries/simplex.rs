//! Brute-force sums over the simplex `k_1 + … + k_t ≤ bound`.
//!
//! These are the oracle side of every multidimensional claim: each tuple is
//! visited and its product formed (prefix products are shared between
//! tuples, nothing else is).

use crate::error::{Error, Result};
use crate::exact::RatFun;
use crate::qseries::terms::TermSpec;

/// `∑_{k_1+…+k_t ≤ bound} v[k_1]·…·v[k_t]` over an arbitrary ring, given by
/// its zero, addition and multiplication.
pub fn simplex_sum_with<T, A, M>(values: &[T], t: u32, bound: usize, zero: T, add: A, mul: M) -> T
where
    T: Clone,
    A: Fn(&T, &T) -> T,
    M: Fn(&T, &T) -> T,
{
    assert!(t >= 1, "simplex dimension must be positive");
    assert!(values.len() > bound, "need values for indices 0..=bound");
    let mut acc = zero;
    walk(values, t, bound, None, &mut acc, &add, &mul);
    acc
}

fn walk<T: Clone>(
    values: &[T],
    left: u32,
    budget: usize,
    prefix: Option<&T>,
    acc: &mut T,
    add: &impl Fn(&T, &T) -> T,
    mul: &impl Fn(&T, &T) -> T,
) {
    for (k, v) in values.iter().enumerate().take(budget + 1) {
        let p = match prefix {
            Some(pre) => mul(pre, v),
            None => v.clone(),
        };
        if left == 1 {
            *acc = add(acc, &p);
        } else {
            walk(values, left - 1, budget - k, Some(&p), acc, add, mul);
        }
    }
}

/// The same two-dimensional sum, organised as `∑_s ∑_{i+j=s}` (Cauchy
/// product order). Used to cross-check [`simplex_sum_with`].
pub fn cauchy_sum_with<T, A, M>(values: &[T], bound: usize, zero: T, add: A, mul: M) -> T
where
    T: Clone,
    A: Fn(&T, &T) -> T,
    M: Fn(&T, &T) -> T,
{
    let mut acc = zero;
    for s in 0..=bound {
        for i in 0..=s {
            acc = add(&acc, &mul(&values[i], &values[s - i]));
        }
    }
    acc
}

/// Optional per-index transform applied to each term before summing.
pub type Weight<'a> = &'a dyn Fn(u32, &RatFun) -> RatFun;

/// Exact simplex sum of the series terms of `spec`.
pub fn simplex_sum(spec: &TermSpec, t: u32, bound: u32, weight: Option<Weight<'_>>) -> Result<RatFun> {
    if !(1..=3).contains(&t) {
        return Err(Error::Precondition(format!("simplex dimension {t} not in 1..=3")));
    }
    let values = spec
        .products_upto(bound)?
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let v = p.to_ratfun();
            match weight {
                Some(w) => w(k as u32, &v),
                None => v,
            }
        })
        .collect::<Vec<_>>();
    Ok(simplex_sum_with(&values, t, bound as usize, RatFun::zero(), |a, b| a + b, |a, b| a * b))
}

/// Number of tuples in the `t`-dimensional simplex of the given bound.
pub fn simplex_size(t: u32, bound: u64) -> u64 {
    // C(bound + t, t)
    (1..=t as u64).fold(1, |acc, i| acc * (bound + i) / i)
}
