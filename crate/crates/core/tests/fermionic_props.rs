use krfusion_core::{
    build_algebra, enumerate_mconfigs, fermionic_polynomial, kr1_count, kr1_polynomial, kr1_polynomial_with, kr2_value,
    quadratic_exponent, support_weights, total_m, vacancy_numbers, AlgebraData, AlgebraType, DominantWeight, Family,
    FermionicValue, KRWeightSpec, KrFactor, MConfig, Positivity, Variant,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn alg(f: Family, r: usize) -> AlgebraData {
    build_algebra(AlgebraType::new(f, r).unwrap())
}

fn algebras() -> Vec<AlgebraData> {
    use Family::*;
    [(A, 1), (A, 2), (A, 3), (B, 2), (B, 3), (C, 2), (C, 3), (D, 4), (G, 2)]
        .into_iter()
        .map(|(f, r)| alg(f, r))
        .collect()
}

/// Partition numbers by Euler's pentagonal recurrence.
fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for k in 1..=n {
        let mut acc = 0i64;
        for j in 1i64.. {
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > k {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[k - g1];
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= k {
                acc += sign * p[k - g2];
            }
        }
        p[k] = acc;
    }
    p[n] as u64
}

fn factors(rank: usize, max_n: usize, max_level: u32) -> impl Strategy<Value = Vec<KrFactor>> {
    prop::collection::vec((0..rank, 1..=max_level).prop_map(|(node, level)| KrFactor { node, level }), 1..=max_n)
}

/// An algebra index, a factor list sized for it, and a choice of support weight.
fn instance() -> impl Strategy<Value = (usize, Vec<KrFactor>, usize)> {
    (0usize..9).prop_flat_map(|idx| {
        let rank = algebras()[idx].rank();
        let (n, l) = if rank >= 3 { (2, 2) } else { (3, 2) };
        (Just(idx), factors(rank, n, l), any::<usize>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn order_of_factors_is_irrelevant((idx, fs, pick) in instance()) {
        let a = &algebras()[idx];
        let r = KRWeightSpec::new(a.rank(), fs.clone()).unwrap();
        let mut rev = fs;
        rev.reverse();
        let r2 = KRWeightSpec::new(a.rank(), rev).unwrap();
        prop_assert_eq!(&r, &r2);
        let support = support_weights(a, &r);
        let lam = &support[pick % support.len()];
        prop_assert_eq!(kr1_polynomial(a, &r, lam), kr1_polynomial(a, &r2, lam));
    }

    #[test]
    fn integer_count_is_the_value_at_one((idx, fs, pick) in instance()) {
        let a = &algebras()[idx];
        let r = KRWeightSpec::new(a.rank(), fs).unwrap();
        let support = support_weights(a, &r);
        let lam = &support[pick % support.len()];
        let m = kr1_polynomial(a, &r, lam);
        prop_assert_eq!(kr1_count(a, &r, lam), m.eval_at_one());
        prop_assert!(m.has_nonnegative_coefficients());
        prop_assert_eq!(fermionic_polynomial(a, &r, lam, Variant::Kr1Graded), FermionicValue::Graded(m));
        prop_assert_eq!(fermionic_polynomial(a, &r, lam, Variant::Kr2AtOne), FermionicValue::AtOne(kr2_value(a, &r, lam)));
    }

    #[test]
    fn stricter_filters_only_drop_terms((idx, fs, pick) in instance()) {
        let a = &algebras()[idx];
        let r = KRWeightSpec::new(a.rank(), fs).unwrap();
        let support = support_weights(a, &r);
        let lam = &support[pick % support.len()];
        let loose = kr1_polynomial_with(a, &r, lam, Positivity::Off);
        let default = kr1_polynomial_with(a, &r, lam, Positivity::Occupied);
        let strict = kr1_polynomial_with(a, &r, lam, Positivity::Everywhere);
        prop_assert_eq!(&loose, &default);
        prop_assert!((&default - &strict).has_nonnegative_coefficients());
    }

    #[test]
    fn top_weight_and_gate((idx, fs, bump) in instance()) {
        let a = &algebras()[idx];
        let r = KRWeightSpec::new(a.rank(), fs).unwrap();
        let top = DominantWeight::new(r.total_weight()).unwrap();
        prop_assert_eq!(kr1_polynomial(a, &r, &top).to_string(), "1");
        prop_assert_eq!(kr2_value(a, &r, &top), BigInt::from(1));
        let mut above = r.total_weight();
        above[bump % a.rank()] += 1;
        let above = DominantWeight::new(above).unwrap();
        prop_assert!(total_m(a, &r, &above).is_none());
        prop_assert!(kr1_polynomial(a, &r, &above).is_zero());
        prop_assert_eq!(kr2_value(a, &r, &above), BigInt::from(0));
    }

    #[test]
    fn configuration_count_is_a_product_of_partition_numbers(totals in prop::collection::vec(0u64..=9, 1..=3)) {
        let configs: Vec<MConfig> = enumerate_mconfigs(&totals).collect();
        let want: u64 = totals.iter().map(|&t| partition_count(t as usize)).product();
        prop_assert_eq!(configs.len() as u64, want);
        prop_assert_eq!(enumerate_mconfigs(&totals).total() as u64, want);
        for mc in &configs {
            for (i, &t) in totals.iter().enumerate() {
                prop_assert_eq!(mc.node_total(i), t);
            }
        }
        let keys: Vec<Vec<u32>> = configs
            .iter()
            .map(|mc| (0..totals.len()).flat_map(|i| (1..=9).map(move |a| (i, a))).map(|(i, a)| mc.get(i, a)).collect())
            .collect();
        prop_assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn a1_vacancy_and_quadratic_closed_forms(
        ns in prop::collection::vec(1u32..=3, 1..=4),
        ms in prop::collection::vec((1u32..=4, 1u32..=2), 0..=3),
    ) {
        let a1 = alg(Family::A, 1);
        let r = KRWeightSpec::new(1, ns.iter().map(|&level| KrFactor { node: 0, level })).unwrap();
        let mc = MConfig::from_triples(1, ms.iter().map(|&(a, m)| (0, a, m)));
        let min = |a: u32, b: u32| i64::from(a.min(b));
        let vac = vacancy_numbers(&a1, &r, &mc);
        for (&(_, a), &p) in &vac {
            let want: i64 = ns.iter().map(|&b| min(a, b)).sum::<i64>()
                - 2 * mc.iter().map(|(_, b, m)| min(a, b) * i64::from(m)).sum::<i64>();
            prop_assert_eq!(p, want);
        }
        let q: i64 = mc.iter().flat_map(|(_, a, ma)| mc.iter().map(move |(_, b, mb)| min(a, b) * i64::from(ma * mb))).sum::<i64>()
            - mc.iter().map(|(_, a, ma)| ns.iter().map(|&b| min(a, b)).sum::<i64>() * i64::from(ma)).sum::<i64>();
        prop_assert_eq!(quadratic_exponent(&a1, &r, &mc), q);
    }

    #[test]
    fn diagram_automorphisms_preserve_multiplicities(fs in factors(3, 3, 2), pick in any::<usize>()) {
        let a3 = alg(Family::A, 3);
        let r = KRWeightSpec::new(3, fs.clone()).unwrap();
        let flipped = KRWeightSpec::new(3, fs.iter().map(|f| KrFactor { node: 2 - f.node, level: f.level })).unwrap();
        let support = support_weights(&a3, &r);
        let lam = &support[pick % support.len()];
        let flam = DominantWeight::new(lam.coords().iter().rev().copied().collect()).unwrap();
        prop_assert_eq!(kr1_polynomial(&a3, &r, lam), kr1_polynomial(&a3, &flipped, &flam));
    }

    #[test]
    fn d4_triality(fs in factors(4, 2, 1), pick in any::<usize>()) {
        let d4 = alg(Family::D, 4);
        // nodes 1, 3, 4 are the outer nodes around the central node 2
        let sigma = [2usize, 1, 3, 0];
        let r = KRWeightSpec::new(4, fs.clone()).unwrap();
        let moved = KRWeightSpec::new(4, fs.iter().map(|f| KrFactor { node: sigma[f.node], level: f.level })).unwrap();
        let support = support_weights(&d4, &r);
        let lam = &support[pick % support.len()];
        let mut mlam = vec![0; 4];
        for (i, &c) in lam.coords().iter().enumerate() {
            mlam[sigma[i]] = c;
        }
        let mlam = DominantWeight::new(mlam).unwrap();
        prop_assert_eq!(kr1_polynomial(&d4, &r, lam), kr1_polynomial(&d4, &moved, &mlam));
    }
}

#[test]
fn partition_numbers() {
    let want = [1u64, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for (n, &p) in want.iter().enumerate() {
        assert_eq!(partition_count(n), p);
    }
}

#[test]
fn support_weights_are_exactly_the_dominant_weights_below_the_top() {
    for a in algebras() {
        let rank = a.rank();
        let r = KRWeightSpec::new(rank, (0..rank).map(|node| KrFactor { node, level: 1 })).unwrap();
        let top = r.total_weight();
        let below = |w: &[i64]| {
            let diff: Vec<i64> = top.iter().zip(w).map(|(t, c)| t - c).collect();
            a.to_root_coords(&diff).is_some_and(|k| k.iter().all(|&x| x >= 0))
        };
        // (w, ρ) ≤ (top, ρ) bounds every coordinate of a weight below the top
        let height = a.scaled_inner_product(&top, a.rho());
        let bounds: Vec<i64> = (0..rank)
            .map(|i| {
                let mut w = vec![0; rank];
                w[i] = 1;
                height / a.scaled_inner_product(&w, a.rho())
            })
            .collect();
        let mut brute = Vec::new();
        let mut c = vec![0i64; rank];
        loop {
            if below(&c) {
                brute.push(c.clone());
            }
            match (0..rank).position(|k| c[k] < bounds[k]) {
                None => break,
                Some(k) => {
                    c[k] += 1;
                    c[..k].iter_mut().for_each(|x| *x = 0);
                }
            }
        }
        let mut got: Vec<Vec<i64>> = support_weights(&a, &r).into_iter().map(DominantWeight::into_inner).collect();
        got.sort();
        brute.sort();
        assert_eq!(got, brute, "{}", a.algebra_type());
    }
}
