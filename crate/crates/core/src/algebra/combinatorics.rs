use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn factorial_rational(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn binomial_rational(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// `n! / (k_1! ... k_m!)` where `n = sum(k_i)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut total = 0;
    let mut acc = BigInt::one();
    for &k in parts {
        total += k;
        acc *= binomial(total, k);
    }
    acc
}
