//! Exact integer helpers shared by the counting formulas.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(2m-1)!!`, the product of the odd integers up to `2m-1`.
pub fn odd_double_factorial(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * (2 * k - 1))
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Binomial coefficient over signed arguments; zero outside `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    binomial(n as usize, k as usize)
}

/// The Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

pub fn pow2(e: usize) -> BigUint {
    BigUint::one() << e
}
