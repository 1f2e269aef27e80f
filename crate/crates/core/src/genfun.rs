//! Generating-function polynomials.
//!
//! For coprime `a`, `b` the integers with more than `k` representations have
//! generating function `z^{abk} (1 - z^{ab}) / ((1 - z^a)(1 - z^b))`, and those
//! with exactly `k >= 1` representations form the support of
//! `p_k(z) = z^{ab(k-1)} (1 + z^a + ... + z^{(b-1)a}) (1 + z^b + ... + z^{(a-1)b})`.
//! For any number of denominations the representable integers have
//! generating function `h(z) / prod (1 - z^{a_i})` for a polynomial `h`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::closed_form::PairParams;
use crate::error::{Error, Result};
use crate::exact::{cyclotomic, IntPoly};
use crate::oracle::{enumerate_exact_k, rep_table, Limits, Params};

/// The polynomial whose support is `R_k(a, b)`.
///
/// `k >= 1` expands the product form directly; `k = 0` is read off the
/// oracle's gap set.
pub fn p_k_poly(p: &PairParams, k: u64, limits: &Limits) -> Result<IntPoly> {
    if k == 0 {
        let gaps = enumerate_exact_k(&p.to_params(), 0, None, limits)?;
        return Ok(IntPoly::indicator(gaps.elements));
    }
    let along_a = IntPoly::geometric(p.a(), p.b());
    let along_b = IntPoly::geometric(p.b(), p.a());
    Ok((&along_a * &along_b).shifted(p.ab() * (k - 1)))
}

/// `bits[j]` is true iff `j` has more than `k` representations, `j <= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndicatorSeries {
    pub params: Vec<u64>,
    pub k: u64,
    pub bound: u64,
    #[serde(with = "bitstring")]
    pub bits: Vec<bool>,
}

impl IndicatorSeries {
    /// `"0110..."`, index 0 first.
    pub fn to_bitstring(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

mod bitstring {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(bits: &[bool], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&bits.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<bool>, D::Error> {
        String::deserialize(d)?
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(D::Error::custom(format!("invalid bit {other:?}"))),
            })
            .collect()
    }
}

/// Indicator of `S_k(a, b)` up to `bound`. The `k = 0` indicator comes from
/// expanding `(1 - z^{ab}) / ((1 - z^a)(1 - z^b))`; higher `k` shift it by
/// `abk`, since `j` has more than `k` representations exactly when `j - ab`
/// has more than `k - 1`.
pub fn s_k_indicator(p: &PairParams, k: u64, bound: u64) -> Result<IndicatorSeries> {
    let shift = p.ab().checked_mul(k).unwrap_or(u64::MAX);
    let len = usize::try_from(bound).expect("bound fits in memory") + 1;
    let mut bits = vec![false; len];
    if bound >= shift {
        let base_len = (bound - shift) as usize + 1;
        let den = &IntPoly::one_minus_z_pow(p.a()) * &IntPoly::one_minus_z_pow(p.b());
        let series = IntPoly::one_minus_z_pow(p.ab()).series_div(&den, base_len)?;
        for (j, c) in series.iter().enumerate() {
            bits[shift as usize + j] = if c.is_one() {
                true
            } else if c.is_zero() {
                false
            } else {
                return Err(Error::IdentityViolation(format!(
                    "coefficient {c} at z^{j} of the S_0 series is not 0/1"
                )));
            };
        }
    }
    Ok(IndicatorSeries {
        params: vec![p.a(), p.b()],
        k,
        bound,
        bits,
    })
}

/// `prod_i (1 - z^{a_i})`.
pub fn denominator(params: &Params) -> IntPoly {
    params
        .denominations()
        .iter()
        .map(|&a| IntPoly::one_minus_z_pow(a))
        .product()
}

/// The numerator `h(z)` with `sum_{j in S_0} z^j = h(z) / prod (1 - z^{a_i})`.
///
/// Since `S_0 = Z>=0 minus R_0`, the series is `1/(1-z) - p_0(z)`, hence
/// `h = (1 + z + ... + z^{a_1 - 1}) prod_{i>=2} (1 - z^{a_i}) - p_0 prod_i (1 - z^{a_i})`.
/// The result is re-expanded against the oracle before being returned.
pub fn numerator_h(params: &Params, limits: &Limits) -> Result<IntPoly> {
    let gaps = enumerate_exact_k(params, 0, None, limits)?;
    let p0 = IntPoly::indicator(gaps.elements.iter().copied());
    let den = denominator(params);
    let first = params.smallest();
    let rest: IntPoly = params.denominations()[1..]
        .iter()
        .map(|&a| IntPoly::one_minus_z_pow(a))
        .product();
    let h = &(&IntPoly::geometric(1, first) * &rest) - &(&p0 * &den);

    // Compare through g_0 + sum(a_i), where g_0 = -1 when nothing is missing.
    let g0 = gaps.elements.last().map_or(0, |&g| g + 1);
    let check = g0 + params.sum() - 1;
    let series = h.series_div(&den, check as usize + 1)?;
    let table = rep_table(params, check, limits)?;
    for (j, c) in series.iter().enumerate() {
        let member = !table.count(j as u64).is_zero();
        if *c != BigInt::from(u8::from(member)) {
            return Err(Error::IdentityViolation(format!(
                "h(z)/prod(1 - z^a_i) has coefficient {c} at z^{j}, oracle membership {member}"
            )));
        }
    }
    Ok(h)
}

/// Number of nonzero terms of `h(z)` for three denominations; 4 or 6 for
/// minimally generated triples.
pub fn denham_term_count(params: &Params, limits: &Limits) -> Result<usize> {
    if params.len() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            found: params.len(),
        });
    }
    Ok(numerator_h(params, limits)?.term_count())
}

/// Whether the three denominations generate a semigroup that no two of them
/// already generate, i.e. none is a nonnegative combination of the others.
pub fn is_minimally_generated(params: &Params, limits: &Limits) -> Result<bool> {
    let den = params.denominations();
    for i in 0..den.len() {
        let others: Vec<u64> = den
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| v)
            .collect();
        if others.is_empty() {
            continue;
        }
        let g = others.iter().fold(0u64, |g, &v| num_integer::gcd(g, v));
        if den[i] % g != 0 {
            continue;
        }
        let scaled: Vec<u64> = others.iter().map(|v| v / g).collect();
        let sub = Params::from_unsigned(&scaled)?;
        let table = rep_table(&sub, den[i] / g, limits)?;
        if !table.count(den[i] / g).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Checks `sum_{j in S_0} z^j = Phi_{ab}(z) / (1 - z)` for distinct primes
/// `a`, `b`: both the polynomial identity
/// `Phi_{ab}(z) (1 - z^a)(1 - z^b) = (1 - z^{ab})(1 - z)` and the series of
/// `Phi_{ab}/(1 - z)` against the oracle through degree `g_0 + 1`.
pub fn cyclotomic_identity_check(p: &PairParams, limits: &Limits) -> Result<bool> {
    for v in [p.a(), p.b()] {
        if !is_prime(v) {
            return Err(Error::NotPrime(v));
        }
    }
    let phi = cyclotomic(p.ab());
    let lhs = &phi * &(&IntPoly::one_minus_z_pow(p.a()) * &IntPoly::one_minus_z_pow(p.b()));
    let rhs = &IntPoly::one_minus_z_pow(p.ab()) * &IntPoly::one_minus_z_pow(1);
    if lhs != rhs {
        return Ok(false);
    }

    let g0 = crate::closed_form::frobenius_k(p, 0).numeric();
    let top = u64::try_from(g0 + 1).expect("g_0 >= -1");
    let series = phi.series_div(&IntPoly::one_minus_z_pow(1), top as usize + 1)?;
    let table = rep_table(&p.to_params(), top, limits)?;
    Ok(series.iter().enumerate().all(|(j, c)| {
        let member = !table.count(j as u64).is_zero();
        *c == BigInt::from(u8::from(member))
    }))
}
