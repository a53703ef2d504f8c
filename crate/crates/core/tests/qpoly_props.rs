use krfusion_core::{gamma_binomial, q_binomial, LaurentPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
}

/// Coefficients of `∏_{i=1}^{n} (1 + q^i t)` read off at `t^m`; an
/// independent route to `q^{m(m+1)/2} [n, m]_q`.
fn via_generating_function(n: i64, m: i64) -> LaurentPoly {
    // rows[k] = coefficient of t^k as a polynomial in q
    let mut rows = vec![LaurentPoly::one()];
    for i in 1..=n {
        let mut next = rows.clone();
        next.push(LaurentPoly::zero());
        for k in 0..rows.len() {
            next[k + 1] = &next[k + 1] + &rows[k].shift(i);
        }
        rows = next;
    }
    rows[m as usize].shift(-(m * (m + 1) / 2))
}

proptest! {
    #[test]
    fn symmetry(n in 0i64..=18, k in 0i64..=18) {
        let m = k.min(n);
        prop_assert_eq!(q_binomial(n, m), q_binomial(n, n - m));
    }

    #[test]
    fn pascal_recurrences(n in 1i64..=18, k in 0i64..=18) {
        let m = k.min(n);
        let b = q_binomial(n, m);
        prop_assert_eq!(&b, &(&q_binomial(n - 1, m - 1) + &q_binomial(n - 1, m).shift(m)));
        prop_assert_eq!(&b, &(&q_binomial(n - 1, m - 1).shift(n - m) + &q_binomial(n - 1, m)));
    }

    #[test]
    fn value_at_one_is_the_binomial(n in 0i64..=30, k in 0i64..=30) {
        let m = k.min(n);
        prop_assert_eq!(q_binomial(n, m).eval_at_one(), gamma_binomial(n, m));
    }

    #[test]
    fn degree_and_unimodality(n in 0i64..=18, k in 0i64..=18) {
        let m = k.min(n);
        let b = q_binomial(n, m);
        prop_assert_eq!(b.min_exponent(), Some(0));
        prop_assert_eq!(b.max_exponent(), Some(m * (n - m)));
        let (_, c) = b.to_dense();
        prop_assert!(c.iter().all(|x| *x > BigInt::from(0)));
        let rising = c.windows(2).take_while(|w| w[0] <= w[1]).count();
        prop_assert!(c[rising..].windows(2).all(|w| w[0] >= w[1]));
        // palindromic
        let rev: Vec<_> = c.iter().rev().cloned().collect();
        prop_assert_eq!(c, rev);
    }

    #[test]
    fn agrees_with_generating_function(n in 0i64..=12, k in 0i64..=12) {
        let m = k.min(n);
        prop_assert_eq!(q_binomial(n, m), via_generating_function(n, m));
    }

    #[test]
    fn outside_range_is_zero(n in -10i64..=10, m in -10i64..=10) {
        prop_assume!(m < 0 || m > n);
        prop_assert!(q_binomial(n, m).is_zero());
    }

    #[test]
    fn inverse_substitution_is_an_involutive_ring_map(a in poly(), b in poly()) {
        prop_assert_eq!(a.substitute_inverse().substitute_inverse(), a.clone());
        prop_assert_eq!((&a * &b).substitute_inverse(), &a.substitute_inverse() * &b.substitute_inverse());
        prop_assert_eq!((&a + &b).substitute_inverse(), &a.substitute_inverse() + &b.substitute_inverse());
        prop_assert_eq!(a.substitute_inverse().eval_at_one(), a.eval_at_one());
    }

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, LaurentPoly::zero());
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }

    #[test]
    fn text_form_round_trips(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn shift_is_multiplication_by_a_monomial(a in poly(), k in -8i64..=8) {
        prop_assert_eq!(a.shift(k), &a * &LaurentPoly::q_pow(k));
    }
}

#[test]
fn zero_and_canonical_forms() {
    assert_eq!(LaurentPoly::zero().to_string(), "0");
    assert_eq!(LaurentPoly::from_terms([(3, 0)]), LaurentPoly::zero());
    assert_eq!(LaurentPoly::from_terms([(1, 2), (1, -2)]), LaurentPoly::zero());
    assert_eq!(LaurentPoly::from_terms([(-1, 1), (0, 2), (2, 1)]).to_string(), "1*q^-1 + 2 + 1*q^2");
}

#[test]
fn gamma_binomial_large_values_are_exact() {
    let b = gamma_binomial(100, 50);
    assert_eq!(b.to_string(), "100891344545564193334812497256");
    assert_eq!(q_binomial(40, 20).eval_at_one(), gamma_binomial(40, 20));
}
