//! Exact formulas for two coprime denominations `a`, `b`.
//!
//! | statistic            | `k = 0`                                   | `k >= 1`                 |
//! |----------------------|-------------------------------------------|--------------------------|
//! | `g_k` (max of `R_k`) | `ab - a - b`                              | `(k+1)ab - a - b`        |
//! | `c_k` (size)         | `(a-1)(b-1)/2`                            | `ab`                     |
//! | `s_k` (sum)          | `(a-1)(b-1)(2ab-a-b-1)/12`                | `ab(2abk - a - b)/2`     |
//!
//! Higher power sums for `k >= 1` come from the factorization
//! `p_k(z) = z^{ab(k-1)} (sum_{j<b} z^{ja}) (sum_{j<a} z^{jb})`: applying
//! `(z d/dz)^m` and the product rule turns each factor into a power sum,
//! which is a Bernoulli-polynomial difference.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{beta_poly, Rat};
use crate::oracle::{GapSet, Params};
use crate::report::{Provenance, Stat, StatReport};

/// Two coprime positive denominations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairParams {
    a: u64,
    b: u64,
}

impl PairParams {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        for v in [a, b] {
            if v == 0 {
                return Err(Error::NonPositive(0));
            }
        }
        let g = a.gcd(&b);
        if g != 1 {
            return Err(Error::NotCoprime(g));
        }
        Ok(PairParams { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn ab(&self) -> u64 {
        self.a * self.b
    }

    pub fn to_params(&self) -> Params {
        Params::from_unsigned(&[self.a, self.b]).expect("validated pair")
    }

    fn big(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.a), BigInt::from(self.b))
    }

    fn report(&self, stat: Stat, k: u64, m: Option<u32>, value: Option<BigInt>) -> StatReport {
        StatReport {
            stat,
            params: vec![self.a, self.b],
            k,
            m,
            value,
            provenance: Provenance::ClosedForm,
        }
    }
}

impl TryFrom<&Params> for PairParams {
    type Error = Error;
    fn try_from(p: &Params) -> Result<Self> {
        match p.denominations() {
            &[a, b] => PairParams::new(a, b),
            other => Err(Error::WrongArity {
                expected: 2,
                found: other.len(),
            }),
        }
    }
}

fn exact_quotient(num: BigInt, den: i64) -> BigInt {
    let (q, r) = num.div_rem(&BigInt::from(den));
    assert!(r.is_zero(), "closed form must be integral");
    q
}

fn max_value(p: &PairParams, k: u64) -> Option<BigInt> {
    let (a, b) = p.big();
    let g = BigInt::from(k + 1) * &a * &b - &a - &b;
    // Negative only for k = 0 with a unit coin, where nothing is missing.
    (!g.is_negative()).then_some(g)
}

/// `g_k(a, b) = (k+1)ab - a - b`; empty when that is negative.
pub fn frobenius_k(p: &PairParams, k: u64) -> StatReport {
    p.report(Stat::Max, k, None, max_value(p, k))
}

/// `c_0 = (a-1)(b-1)/2`, `c_k = ab` for `k >= 1`.
pub fn count_k(p: &PairParams, k: u64) -> StatReport {
    let (a, b) = p.big();
    let value = if k == 0 {
        exact_quotient((&a - 1) * (&b - 1), 2)
    } else {
        a * b
    };
    p.report(Stat::Count, k, None, Some(value))
}

/// `s_0 = (a-1)(b-1)(2ab-a-b-1)/12`, `s_k = ab(2abk - a - b)/2`.
pub fn sum_k(p: &PairParams, k: u64) -> StatReport {
    let (a, b) = p.big();
    let ab = &a * &b;
    let value = if k == 0 {
        exact_quotient((&a - 1) * (&b - 1) * (2 * &ab - &a - &b - 1), 12)
    } else {
        exact_quotient(&ab * (2 * &ab * BigInt::from(k) - &a - &b), 2)
    };
    p.report(Stat::Sum, k, None, Some(value))
}

fn factorials(n: u32) -> Vec<BigInt> {
    let mut f = vec![BigInt::one()];
    for i in 1..=n {
        let next = &f[i as usize - 1] * BigInt::from(i);
        f.push(next);
    }
    f
}

/// `s_k^m(a, b) = sum_{j in R_k} j^m` for `k >= 1`:
///
/// `sum_{l+u+v=m} m!/(l! u! v!) a^{l+u} b^{l+v} (k-1)^l beta_{v+1}(a) beta_{u+1}(b)`
///
/// with `0^0 = 1`. For `k = 0` only `m <= 1` is available (count and sum).
pub fn power_sum_k(p: &PairParams, k: u64, m: u32) -> Result<StatReport> {
    if k == 0 {
        let value = match m {
            0 => count_k(p, 0).value,
            1 => sum_k(p, 0).value,
            _ => return Err(Error::UnsupportedK { k, m }),
        };
        return Ok(p.report(Stat::PowerSum, k, Some(m), value));
    }
    let (a, b) = p.big();
    let fact = factorials(m);
    let beta_a: Vec<Rat> = (1..=m as usize + 1).map(|i| beta_poly(i).eval_int(&a)).collect();
    let beta_b: Vec<Rat> = (1..=m as usize + 1).map(|i| beta_poly(i).eval_int(&b)).collect();
    let km1 = BigInt::from(k - 1);

    let mut total = Rat::zero();
    for l in 0..=m {
        for u in 0..=m - l {
            let v = m - l - u;
            let multinomial =
                &fact[m as usize] / (&fact[l as usize] * &fact[u as usize] * &fact[v as usize]);
            let scalar = multinomial
                * Pow::pow(&a, l + u)
                * Pow::pow(&b, l + v)
                * Pow::pow(&km1, l);
            total += Rat::from_integer(scalar) * &beta_a[v as usize] * &beta_b[u as usize];
        }
    }
    if !total.is_integer() {
        return Err(Error::IdentityViolation(format!(
            "power sum evaluated to non-integer {total}"
        )));
    }
    Ok(p.report(Stat::PowerSum, k, Some(m), Some(total.to_integer())))
}

/// `(g_{<=k}, c_{<=k}, s_{<=k})`, the maximum, count and sum of integers
/// with at most `k` representations.
pub fn at_most_stats(p: &PairParams, k: u64) -> [StatReport; 3] {
    let (a, b) = p.big();
    let ab = &a * &b;
    let kk = BigInt::from(k);
    let c = exact_quotient((&a - 1) * (&b - 1), 2) + &ab * &kk;

    let r = |n: BigInt, d: i64| Rat::new(n, BigInt::from(d));
    let ab2 = &ab * &ab;
    let s = r(&ab2 * &kk * &kk, 2)
        + r((&ab - &a - &b) * &ab * &kk, 2)
        + r(ab2.clone(), 6)
        - r((&a + &b - 1) * &ab, 4)
        + r(&a * &a + &b * &b - 1, 12);
    assert!(s.is_integer(), "at-most sum must be integral");

    [
        p.report(Stat::MaxAtMost, k, None, max_value(p, k)),
        p.report(Stat::CountAtMost, k, None, Some(c)),
        p.report(Stat::SumAtMost, k, None, Some(s.to_integer())),
    ]
}

/// `R_k = ab(k-1) + {0, a, ..., (b-1)a} + {0, b, ..., (a-1)b}` for `k >= 1`.
///
/// # Panics
///
/// Panics if `k == 0`, or if two of the `ab` sums coincide (which coprimality
/// rules out).
pub fn structured_r_k(p: &PairParams, k: u64) -> GapSet {
    assert!(k >= 1, "structured enumeration needs k >= 1");
    let base = p.ab() * (k - 1);
    let mut elements: Vec<u64> = (0..p.b)
        .flat_map(|i| (0..p.a).map(move |j| base + i * p.a + j * p.b))
        .collect();
    elements.sort_unstable();
    let before = elements.len();
    elements.dedup();
    assert_eq!(before, elements.len(), "sums must be pairwise distinct");
    GapSet {
        params: p.to_params(),
        k,
        complete: true,
        elements,
    }
}
