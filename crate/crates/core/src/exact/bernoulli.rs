//! Bernoulli numbers and polynomials, with the convention fixed by
//! `z e^{xz} / (e^z - 1) = sum_n B_n(x) z^n / n!`, so that `B_1(0) = -1/2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rat, RatPoly};

fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// `B_0, ..., B_n` from `sum_{k=0}^{n} C(n+1, k) B_k = 0` for `n >= 1`.
fn bernoulli_numbers(n: usize) -> Vec<Rat> {
    let mut nums = vec![Rat::one()];
    for m in 1..=n {
        let row = binomial_row(m + 1);
        let acc = nums
            .iter()
            .zip(&row)
            .fold(Rat::zero(), |acc, (b, c)| acc + b * Rat::from_integer(c.clone()));
        nums.push(-acc / Rat::from_integer(BigInt::from(m + 1)));
    }
    nums
}

/// The Bernoulli number `B_n = B_n(0)`.
pub fn bernoulli_number(n: usize) -> Rat {
    bernoulli_numbers(n).pop().expect("nonempty")
}

/// `B_n(x) = sum_k C(n, k) B_{n-k} x^k`.
pub fn bernoulli_poly(n: usize) -> RatPoly {
    let nums = bernoulli_numbers(n);
    let row = binomial_row(n);
    RatPoly::from_coeffs(
        (0..=n)
            .map(|k| Rat::from_integer(row[k].clone()) * &nums[n - k])
            .collect(),
    )
}

/// `beta_k(x) = (B_k(x) - B_k(0)) / k`. At a positive integer `x` this is
/// the power sum `0^{k-1} + 1^{k-1} + ... + (x-1)^{k-1}`.
///
/// # Panics
///
/// Panics if `k == 0`.
pub fn beta_poly(k: usize) -> RatPoly {
    assert!(k >= 1, "beta_poly requires k >= 1");
    let b = bernoulli_poly(k);
    let constant = RatPoly::from_coeffs(vec![b.coeff(0)]);
    (&b - &constant).scale(&Rat::new(BigInt::one(), BigInt::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    fn table() -> Vec<RatPoly> {
        // B_0 .. B_6 as listed, lowest exponent first.
        vec![
            RatPoly::from_fracs(&[(1, 1)]),
            RatPoly::from_fracs(&[(-1, 2), (1, 1)]),
            RatPoly::from_fracs(&[(1, 6), (-1, 1), (1, 1)]),
            RatPoly::from_fracs(&[(0, 1), (1, 2), (-3, 2), (1, 1)]),
            RatPoly::from_fracs(&[(-1, 30), (0, 1), (1, 1), (-2, 1), (1, 1)]),
            RatPoly::from_fracs(&[(0, 1), (-1, 6), (0, 1), (5, 3), (-5, 2), (1, 1)]),
            RatPoly::from_fracs(&[(1, 42), (0, 1), (-1, 2), (0, 1), (5, 2), (-3, 1), (1, 1)]),
        ]
    }

    #[test]
    fn matches_reference_table() {
        for (n, expected) in table().into_iter().enumerate() {
            assert_eq!(bernoulli_poly(n), expected, "B_{n}");
        }
    }

    #[test]
    fn b1_convention() {
        assert_eq!(bernoulli_number(1), Rat::new((-1).into(), 2.into()));
        assert_eq!(bernoulli_poly(6).to_string(), "1/42 - 1/2*x^2 + 5/2*x^4 - 3*x^5 + x^6");
    }

    #[test]
    fn odd_constant_terms_vanish() {
        for n in (3..30).step_by(2) {
            assert!(bernoulli_poly(n).coeff(0).is_zero(), "B_{n}(0)");
        }
    }

    #[test]
    fn small_betas() {
        assert_eq!(beta_poly(1), RatPoly::from_fracs(&[(0, 1), (1, 1)]));
        assert_eq!(beta_poly(2).eval_int(&3.into()), Rat::from_integer(3.into()));
        assert_eq!(beta_poly(3).eval_int(&5.into()), Rat::from_integer(30.into()));
    }

    #[test]
    fn beta_is_power_sum() {
        for k in 1..=8usize {
            let beta = beta_poly(k);
            for x in 1..=50u32 {
                let direct: BigInt = (0..x)
                    .map(|j| Pow::pow(BigInt::from(j), (k - 1) as u32))
                    .sum();
                assert_eq!(beta.eval_int(&x.into()), Rat::from_integer(direct), "k={k} x={x}");
            }
        }
    }

    #[test]
    #[should_panic]
    fn beta_zero_rejected() {
        beta_poly(0);
    }
}
