use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use supercong::exact::{int, rat, BigRat};
use supercong::padic::classical_term;
use supercong::qseries::{q_integer, q_pochhammer, QMonomial, QProduct, TermSpec};

fn nonzero_rat() -> impl Strategy<Value = BigRat> {
    (-9i64..=9, 1i64..=9).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig { rng_seed: RngSeed::Fixed(20240601), ..ProptestConfig::default() })]

    /// `(x; q^s)_{m+k} = (x; q^s)_m (x q^{sm}; q^s)_k`.
    #[test]
    fn pochhammer_splitting(c in nonzero_rat(), e in -3i64..=3, s in 1u32..=3, m in 0u32..=5, k in 0u32..=5) {
        let x = QMonomial::new(c, e);
        let whole = q_pochhammer(&x, s, m + k);
        let parts = &q_pochhammer(&x, s, m) * &q_pochhammer(&x.shift((s * m) as i64), s, k);
        prop_assert_eq!(&whole, &parts);
        let factored = &QProduct::pochhammer(&x, s, m) * &QProduct::pochhammer(&x.shift((s * m) as i64), s, k);
        prop_assert_eq!(factored.to_ratfun(), whole);
    }

    #[test]
    fn q_integer_at_one(s in 1u32..=30) {
        prop_assert_eq!(q_integer(s).eval(&int(1)), int(s as i64));
        prop_assert_eq!(QProduct::q_integer(s as i64).eval_at_one(), Some(int(s as i64)));
    }

    /// Factored products agree with their expanded rational functions.
    #[test]
    fn factored_matches_expanded(c in nonzero_rat(), m in 0u32..=4, e in -2i64..=2) {
        let x = QMonomial::new(c, e);
        let p = &QProduct::pochhammer(&x, 3, m) * &QProduct::q_pow(e);
        let y = rat(2, 5);
        let direct = q_pochhammer(&x, 3, m).eval(&y).unwrap() * pow_i(&y, e);
        prop_assert_eq!(p.to_ratfun().eval(&y), Some(direct));
    }
}

fn pow_i(y: &BigRat, e: i64) -> BigRat {
    let base = if e < 0 { y.recip() } else { y.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// The main term tends to `(6k+1)((1/3)_k/k!)⁶` as `q → 1`.
#[test]
fn bridge_to_q_one() {
    for k in 0..=8 {
        let t = TermSpec::A.product(k).unwrap();
        assert_eq!(t.eval_at_one(), Some(classical_term(k)), "k={k}");
    }
}

/// The terminating summand vanishes past `(n−1)/3`, where `(q^{1−n}; q³)_k`
/// picks up the factor `1 − q⁰`.
#[test]
fn base_a_terminates() {
    for n in [4u32, 7, 10] {
        let spec = TermSpec::base_a(int(2), int(3), int(5), n);
        let m = (n - 1) / 3;
        assert!(!spec.term(0).unwrap().is_zero());
        for k in m + 1..n {
            assert!(spec.term(k).unwrap().is_zero(), "n={n} k={k}");
        }
    }
}
