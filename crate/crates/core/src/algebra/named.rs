//! Named series used throughout the examples and the command line.

use num_traits::{One, Zero};

use super::{binomial_rational, factorial_rational, Polynomial, Rational, Series};
use crate::error::{Error, Result};

/// `e^z`.
pub fn exp(order: usize) -> Series {
    Series::from_fn(order, |k| factorial_rational(k).recip().unwrap())
}

/// `e^z - 1`.
pub fn exp_minus_one(order: usize) -> Series {
    Series::from_fn(order, |k| {
        if k == 0 {
            Rational::zero()
        } else {
            factorial_rational(k).recip().unwrap()
        }
    })
}

/// `(e^z - 1)/z = sum z^n/(n+1)!`.
pub fn expm1_over_z(order: usize) -> Series {
    Series::from_fn(order, |k| factorial_rational(k + 1).recip().unwrap())
}

/// `z/(e^z - 1)`, the Bernoulli generating function.
pub fn bernoulli_gf(order: usize) -> Series {
    expm1_over_z(order)
        .reciprocal()
        .expect("constant term is 1")
}

/// `z/(1 - z)`.
pub fn geometric(order: usize) -> Series {
    Series::from_fn(order, |k| {
        if k == 0 {
            Rational::zero()
        } else {
            Rational::one()
        }
    })
}

/// `log(1 + z)`.
pub fn log1p(order: usize) -> Series {
    Series::from_fn(order, |k| {
        if k == 0 {
            Rational::zero()
        } else {
            Rational::sign_power(k + 1) * Rational::new(1, k as i64)
        }
    })
}

/// `log(1 + z)/z = sum (-1)^n z^n/(n+1)`.
pub fn log1p_over_z(order: usize) -> Series {
    Series::from_fn(order, |k| {
        Rational::sign_power(k) * Rational::new(1, k as i64 + 1)
    })
}

/// `(1 - sqrt(1 - 4z))/2`, computed from `y = z + y^2` so that every
/// coefficient stays rational: `y_1 = 1`, `y_n = sum_{k=1}^{n-1} y_k y_{n-k}`.
pub fn catalan_gf(order: usize) -> Series {
    let mut y = vec![Rational::zero(); order + 1];
    if order >= 1 {
        y[1] = Rational::one();
    }
    for n in 2..=order {
        let mut acc = Rational::zero();
        for k in 1..n {
            acc += &y[k] * &y[n - k];
        }
        y[n] = acc;
    }
    Series::new(y, order)
}

/// `(1 - z)^(-q) - 1 = sum_{k>=1} binom(k+q-1, q-1) z^k`.
pub fn inverse_power_minus_one(q: usize, order: usize) -> Series {
    Series::from_fn(order, |k| {
        if k == 0 || q == 0 {
            Rational::zero()
        } else {
            binomial_rational(k + q - 1, q - 1)
        }
    })
}

/// Rising factorial `(a)_n`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (a + &Rational::from(i)))
}

/// Confluent hypergeometric series `1F1(a; c; z)`.
pub fn hypergeometric_1f1(a: &Rational, c: &Rational, order: usize) -> Series {
    Series::from_fn(order, |n| {
        pochhammer(a, n) / pochhammer(c, n) / factorial_rational(n)
    })
}

/// `e^{zx}` with polynomial coefficients `x^n/n!`.
pub fn exp_xz(order: usize) -> Series<Polynomial> {
    Series::from_fn(order, |n| {
        Polynomial::monomial(factorial_rational(n).recip().unwrap(), n)
    })
}

/// Lifts a rational series to polynomial coefficients.
pub fn lift(s: &Series) -> Series<Polynomial> {
    s.map(|c| Polynomial::constant(c.clone()))
}

/// Names accepted by [`parse`], with a short description each.
pub const CATALOG: &[(&str, &str)] = &[
    ("z", "the identity series z"),
    ("exp", "e^z"),
    ("expm1", "e^z - 1"),
    ("expm1_over_z", "(e^z - 1)/z"),
    ("bernoulli", "z/(e^z - 1)"),
    ("geometric", "z/(1 - z)"),
    ("log1p", "log(1 + z)"),
    ("log1p_over_z", "log(1 + z)/z"),
    ("catalan", "(1 - sqrt(1 - 4z))/2"),
    ("invpow:q", "(1 - z)^(-q) - 1"),
    ("coeffs:c0,c1,...", "explicit rational coefficients"),
];

/// Parses a series description such as `log1p`, `invpow:2` or
/// `coeffs:0,1,1/2`.
pub fn parse(spec: &str, order: usize) -> Result<Series> {
    let err = || Error::Parse {
        what: "series name",
        input: spec.to_string(),
    };
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n.trim(), Some(a.trim())),
        None => (spec.trim(), None),
    };
    let series = match (name, arg) {
        ("z", None) => Series::identity(order),
        ("exp", None) => exp(order),
        ("expm1", None) => exp_minus_one(order),
        ("expm1_over_z", None) => expm1_over_z(order),
        ("bernoulli", None) => bernoulli_gf(order),
        ("geometric", None) => geometric(order),
        ("log1p", None) => log1p(order),
        ("log1p_over_z", None) => log1p_over_z(order),
        ("catalan", None) => catalan_gf(order),
        ("invpow", Some(q)) => {
            let q: usize = q.parse().map_err(|_| err())?;
            inverse_power_minus_one(q, order)
        }
        ("coeffs", Some(list)) => {
            let coeffs = list
                .split(',')
                .map(|c| c.parse::<Rational>())
                .collect::<Result<Vec<_>>>()?;
            Series::new(coeffs, order)
        }
        _ => return Err(err()),
    };
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn catalan_series_matches_closed_values() {
        let c = catalan_gf(7);
        let expect = [0, 1, 1, 2, 5, 14, 42, 132];
        for (k, &v) in expect.iter().enumerate() {
            assert_eq!(c.coeff(k), rat(v, 1));
        }
        // y = z + y^2
        let y2 = c.mul(&c);
        assert_eq!(c, Series::identity(7).add(&y2));
    }

    #[test]
    fn log_and_exp_are_inverse_functions() {
        let back = log1p(10).compose(&exp_minus_one(10)).unwrap();
        assert_eq!(back, Series::identity(10));
    }

    #[test]
    fn parse_names() {
        assert_eq!(parse("geometric", 4).unwrap(), geometric(4));
        assert_eq!(parse("invpow:1", 5).unwrap(), geometric(5));
        assert_eq!(
            parse("coeffs:0,1,1/2", 3).unwrap(),
            Series::new(vec![rat(0, 1), rat(1, 1), rat(1, 2)], 3)
        );
        assert!(parse("nope", 3).is_err());
        assert!(parse("invpow:x", 3).is_err());
    }
}
