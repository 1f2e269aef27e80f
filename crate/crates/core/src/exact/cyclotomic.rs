//! Cyclotomic polynomials by exact division:
//! `Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d`.

use std::collections::HashMap;

use super::IntPoly;

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn cyclotomic_memo(n: u64, memo: &mut HashMap<u64, IntPoly>) -> IntPoly {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut acc = IntPoly::z_pow_minus_one(n);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_memo(d, memo);
        acc = acc
            .exact_div(&phi_d)
            .expect("Phi_d divides z^n - 1 for every d | n");
    }
    memo.insert(n, acc.clone());
    acc
}

/// The `n`th cyclotomic polynomial `Phi_n(z)`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    cyclotomic_memo(n, &mut HashMap::new())
}
