mod common;

use common::{coprime_pairs, exact, power_sum};
use frobenius::closed_form::{count_k, frobenius_k, power_sum_k, structured_r_k, sum_k};
use frobenius::genfun::{denham_term_count, numerator_h, p_k_poly, s_k_indicator};
use frobenius::oracle::{enumerate_exact_k, rep_table};
use frobenius::{IntPoly, Limits, PairParams, Params, Rat};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;

#[test]
fn power_sum_degenerates_to_count_and_sum() {
    for p in coprime_pairs(25) {
        for k in 1..=6 {
            assert_eq!(power_sum_k(&p, k, 0).unwrap().value, count_k(&p, k).value);
            assert_eq!(power_sum_k(&p, k, 1).unwrap().value, sum_k(&p, k).value);
        }
    }
}

#[test]
fn structured_enumeration_has_exactly_k_representations() {
    let limits = Limits::default();
    for p in coprime_pairs(15) {
        for k in 1..=3u64 {
            let s = structured_r_k(&p, k);
            assert_eq!(s.len() as u64, p.ab());
            assert_eq!(s.elements, exact(&p, k).elements, "{p:?} k={k}");
            let top = *s.elements.last().unwrap();
            let table = rep_table(&p.to_params(), top, &limits).unwrap();
            assert!(s.elements.iter().all(|&j| *table.count(j) == BigUint::from(k)));
        }
    }
}

/// Forward differences of `values` taken `order` times.
fn differences(values: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut cur = values.to_vec();
    for _ in 0..order {
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}

#[test]
fn power_sums_are_polynomials_in_k() {
    // A degree-m polynomial in k has constant m-th differences equal to
    // m! * leading coefficient and vanishing (m+1)-th differences.
    for (a, b) in [(2, 3), (3, 5), (4, 7), (5, 9), (1, 4)] {
        let p = PairParams::new(a, b).unwrap();
        for m in 0..=5u32 {
            let values: Vec<BigInt> = (1..=m as u64 + 4)
                .map(|k| power_sum_k(&p, k, m).unwrap().value.unwrap())
                .collect();
            let fact: BigInt = (1..=m).map(BigInt::from).product();
            let lead = num_traits::Pow::pow(BigInt::from(a * b), m + 1);
            assert!(differences(&values, m as usize).iter().all(|d| *d == &fact * &lead));
            assert!(differences(&values, m as usize + 1).iter().all(Zero::is_zero));
        }
    }
}

#[test]
fn p_k_support_degree_and_value_at_one() {
    let limits = Limits::default();
    for p in coprime_pairs(20) {
        let p1 = p_k_poly(&p, 1, &limits).unwrap();
        for k in 0..=4u64 {
            let poly = p_k_poly(&p, k, &limits).unwrap();
            let rk = exact(&p, k);
            assert!(poly.is_zero_one());
            assert_eq!(poly.support(), rk.elements);
            assert_eq!(
                poly.degree().map(BigInt::from),
                frobenius_k(&p, k).value,
                "{p:?} k={k}"
            );
            assert_eq!(Some(poly.eval(&BigInt::one())), count_k(&p, k).value);
            if k >= 1 {
                assert_eq!(poly, p1.shifted(p.ab() * (k - 1)));
            }
        }
    }
}

#[test]
fn indicator_matches_oracle_counts() {
    let limits = Limits::default();
    for p in coprime_pairs(20) {
        let bound = 5 * p.ab();
        let table = rep_table(&p.to_params(), bound, &limits).unwrap();
        for k in 0..=4u64 {
            let ind = s_k_indicator(&p, k, bound).unwrap();
            assert_eq!(ind.bits.len() as u64, bound + 1);
            for (j, &bit) in ind.bits.iter().enumerate() {
                assert_eq!(bit, *table.count(j as u64) > BigUint::from(k), "{p:?} k={k} j={j}");
            }
            let g = frobenius_k(&p, k).numeric();
            let first_full = u64::try_from(g + 1).unwrap();
            assert!(ind.bits[first_full as usize..].iter().all(|&b| b));
        }
    }
}

#[test]
fn exact_k_sets_partition_the_table() {
    // Every j <= bound with r(j) <= K lies in exactly one of R_0, ..., R_K.
    let limits = Limits::default();
    for p in coprime_pairs(12) {
        let kmax = 4;
        let polys: Vec<IntPoly> = (0..=kmax).map(|k| p_k_poly(&p, k, &limits).unwrap()).collect();
        let bound = (kmax + 1) * p.ab();
        let table = rep_table(&p.to_params(), bound, &limits).unwrap();
        for j in 0..=bound {
            let hits: BigInt = polys.iter().map(|q| q.coeff(j)).sum();
            let expected = u8::from(*table.count(j) <= BigUint::from(kmax));
            assert_eq!(hits, BigInt::from(expected), "{p:?} j={j}");
        }
    }
}

#[test]
fn non_minimal_triples_lose_terms_only_at_products() {
    // Among non-minimal triples the redundant entry makes h a product of two
    // binomials; it collapses to three terms exactly when that entry is the
    // product of the other two.
    let limits = Limits::default();
    for (raw, expected) in [
        (&[2i64, 3, 6][..], 3),
        (&[3, 4, 12], 3),
        (&[2, 5, 10], 3),
        (&[2, 3, 5], 4),
        (&[2, 3, 7], 4),
        (&[3, 5, 9], 4),
        (&[1, 2, 3], 4),
    ] {
        let params = Params::new(raw).unwrap();
        assert_eq!(denham_term_count(&params, &limits), Ok(expected), "{raw:?}");
    }
}

fn small_params() -> impl Strategy<Value = Params> {
    prop::collection::vec(1i64..25, 1..5)
        .prop_filter_map("coprime", |raw| Params::new(&raw).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn numerator_reexpands_to_semigroup(params in small_params()) {
        // numerator_h verifies its own re-expansion; here also h(1) = 0 as
        // soon as the denominator has a double pole at z = 1.
        let h = numerator_h(&params, &Limits::default()).unwrap();
        if params.len() >= 2 {
            prop_assert!(h.eval(&BigInt::one()).is_zero());
        }
        prop_assert_eq!(h.coeff(0), BigInt::one());
    }

    #[test]
    fn membership_shifts_by_ab(a in 1u64..15, b in 1u64..15, k in 1u64..4) {
        prop_assume!(num_integer::gcd(a, b) == 1);
        let p = PairParams::new(a, b).unwrap();
        let ab = a * b;
        let bound = (k + 3) * ab;
        let table = rep_table(&p.to_params(), bound, &Limits::default()).unwrap();
        for j in ab..=bound {
            let in_sk = *table.count(j) > BigUint::from(k);
            let in_prev = *table.count(j - ab) > BigUint::from(k - 1);
            prop_assert_eq!(in_sk, in_prev);
        }
    }

    #[test]
    fn oracle_power_sums_match_closed_form(a in 1u64..12, b in 1u64..12, k in 1u64..4, m in 0u32..6) {
        prop_assume!(num_integer::gcd(a, b) == 1);
        let p = PairParams::new(a, b).unwrap();
        let rk = enumerate_exact_k(&p.to_params(), k, None, &Limits::default()).unwrap();
        prop_assert_eq!(power_sum_k(&p, k, m).unwrap().value, Some(power_sum(&rk, m)));
    }
}

#[test]
fn k0_sum_formula_is_exact_rational() {
    // The 1/12 in s_0 always divides out.
    for p in coprime_pairs(40) {
        let (a, b) = (BigInt::from(p.a()), BigInt::from(p.b()));
        let raw = Rat::new(
            (&a - 1u32) * (&b - 1u32) * (2u32 * &a * &b - &a - &b - 1u32),
            BigInt::from(12),
        );
        assert!(raw.is_integer());
        assert_eq!(sum_k(&p, 0).value, Some(raw.to_integer()));
    }
}
