//! Polynomial gcd over the rationals.
//!
//! The plain gcd works on primitive integer associates: a heuristic gcd
//! (evaluation at a large integer, integer gcd, balanced-digit
//! reconstruction) answers most inputs in one shot; a primitive
//! pseudo-remainder sequence is the fallback. The extended variant runs the
//! Euclidean remainder sequence over Q because it needs Bézout cofactors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::poly::QPoly;

/// Monic gcd. `gcd(0, 0)` is the zero polynomial.
pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return QPoly::one();
    }
    let za = primitive(&a.to_int_form().0);
    let zb = primitive(&b.to_int_form().0);
    let g = heuristic_gcd(&za, &zb).unwrap_or_else(|| prs_gcd(za, zb));
    QPoly::from_bigints(g).monic()
}

/// Monic gcd `g` together with cofactors `s, t` such that `s·a + t·b = g`.
pub fn ext_gcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (QPoly::one(), QPoly::zero());
    let (mut t0, mut t1) = (QPoly::zero(), QPoly::one());
    while !r1.is_zero() {
        let (quot, rem) = r0.divrem(&r1).expect("nonzero divisor");
        let s2 = &s0 - &(&quot * &s1);
        let t2 = &t0 - &(&quot * &t1);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
        // Keep the remainder sequence monic to curb coefficient growth.
        if let Some(lc) = r1.leading().cloned() {
            if !lc.is_one() {
                let inv = lc.recip();
                r1 = r1.scale(&inv);
                s1 = s1.scale(&inv);
                t1 = t1.scale(&inv);
            }
        }
    }
    match r0.leading().cloned() {
        None => (QPoly::zero(), QPoly::zero(), QPoly::zero()),
        Some(lc) => {
            let inv = lc.recip();
            (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
        }
    }
}

/// Inverse of `f` modulo `m`, if `gcd(f, m) = 1`.
pub fn inverse_mod(f: &QPoly, m: &QPoly) -> Option<QPoly> {
    let (g, s, _) = ext_gcd(&f.rem(m).ok()?, m);
    if g.is_one() {
        Some(s.rem(m).ok()?)
    } else {
        None
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with a positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = p.to_vec();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    let Some(lead) = out.last() else {
        return out;
    };
    let mut c = content(&out);
    if lead.is_negative() {
        c = -c;
    }
    if !c.is_one() {
        for x in out.iter_mut() {
            *x = &*x / &c;
        }
    }
    out
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn eval_int(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// True when `d` divides `p` in Z[q].
fn int_divides(d: &[BigInt], p: &[BigInt]) -> bool {
    let dd = d.len() - 1;
    if p.len() < d.len() {
        return p.iter().all(|c| c.is_zero());
    }
    let lead = &d[dd];
    let mut rem = p.to_vec();
    for i in (0..=p.len() - d.len()).rev() {
        let top = std::mem::take(&mut rem[i + dd]);
        if top.is_zero() {
            continue;
        }
        let (quot, r) = top.div_rem(lead);
        if !r.is_zero() {
            return false;
        }
        for (j, c) in d[..dd].iter().enumerate() {
            rem[i + j] -= &quot * c;
        }
    }
    rem.iter().all(|c| c.is_zero())
}

// Evaluation sizes beyond this many bits are handed to the PRS fallback.
const HEU_MAX_BITS: u64 = 400_000;

fn heuristic_gcd(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let bound = max_norm(a).min(max_norm(b));
    let mut xi: BigInt = bound * 2u32 + 29u32;
    let deg = (a.len().max(b.len()) - 1) as u64;
    for _ in 0..6 {
        if xi.bits() * (deg + 1) > HEU_MAX_BITS {
            return None;
        }
        let gamma = eval_int(a, &xi).gcd(&eval_int(b, &xi));
        let candidate = primitive(&balanced_digits(gamma, &xi));
        if !candidate.is_empty() && int_divides(&candidate, a) && int_divides(&candidate, b) {
            return Some(candidate);
        }
        xi = xi * 73794u32 / 27011u32;
    }
    None
}

/// Digits of `n` in base `xi` taken in the symmetric range (-xi/2, xi/2].
fn balanced_digits(mut n: BigInt, xi: &BigInt) -> Vec<BigInt> {
    let half = xi / 2u32;
    let mut digits = Vec::new();
    while !n.is_zero() {
        let mut d = n.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        n = (n - &d) / xi;
        digits.push(d);
    }
    digits
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.to_vec();
    while rem.len() > db && !rem.is_empty() {
        let top = rem.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let shift = rem.len() - db;
        let g = top.gcd(lead);
        let (mul_rem, mul_b) = (lead / &g, top / &g);
        for c in rem.iter_mut() {
            *c *= &mul_rem;
        }
        for (j, c) in b[..db].iter().enumerate() {
            rem[shift + j] -= &mul_b * c;
        }
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
    }
    rem
}

fn prs_gcd(mut a: Vec<BigInt>, mut b: Vec<BigInt>) -> Vec<BigInt> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = primitive(&pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    if a.len() == 1 {
        return vec![BigInt::one()];
    }
    primitive(&a)
}

/// Least common multiple, monic.
pub fn lcm(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return QPoly::zero();
    }
    let g = gcd(a, b);
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}
