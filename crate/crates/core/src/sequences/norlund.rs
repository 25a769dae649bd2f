//! Higher-order (Norlund) and hypergeometric Bernoulli numbers.

use num_traits::{One, Zero};

use super::{scale_by_factorial, stirling2, Stirling2Table};
use crate::algebra::{binomial_rational, factorial_rational, named, Polynomial, Rational, Series};
use crate::error::{guard, Error, Result};
use crate::pitree::{self, InputSequence};

/// `(z/(e^z - 1))^p`; for `p < 0` this is a power of `(e^z - 1)/z`, whose
/// constant term is one, so no reciprocal is needed.
fn norlund_gf(n_max: usize, p: i64) -> Series {
    if p >= 0 {
        named::bernoulli_gf(n_max).pow(p).unwrap()
    } else {
        named::expm1_over_z(n_max).pow(-p).unwrap()
    }
}

/// `B_0^(p), ..., B_N^(p)`, the coefficients of `(z/(e^z - 1))^p` times `n!`.
pub fn norlund_numbers(n_max: usize, p: i64) -> Vec<Rational> {
    scale_by_factorial(norlund_gf(n_max, p).into_coeffs())
}

/// `B_0^(p)(x), ..., B_N^(p)(x)` from `e^{zx} (z/(e^z - 1))^p`.
pub fn norlund_polynomials(n_max: usize, p: i64) -> Vec<Polynomial> {
    let s = named::lift(&norlund_gf(n_max, p)).mul(&named::exp_xz(n_max));
    scale_by_factorial(s.into_coeffs())
}

/// `g_n = -p! {n+p, p} / (n+p)!`; its PI-tree row sums are `B_n^(p)/n!`.
pub fn norlund_input(p: usize) -> Result<InputSequence> {
    guard("p", p, 1, usize::MAX, "")?;
    Ok(InputSequence::new(format!("norlund(p={p})"), move |n| {
        let s = Rational::from_integer(stirling2(n + p, p).unwrap());
        -(factorial_rational(p) * s / factorial_rational(n + p))
    }))
}

/// `n!` times the PI-tree row sums on [`norlund_input`], with `B_0^(p) = 1`.
pub fn norlund_via_tree(n_max: usize, p: usize) -> Result<Vec<Rational>> {
    let g = norlund_input(p)?;
    let mut xs = vec![Rational::one()];
    xs.extend(pitree::row_sums(&g, n_max));
    Ok(scale_by_factorial(xs))
}

/// `B_n^(q) = binom(n+q, q-1) sum_p (-1)^p {n+p, p}/binom(n+p, p)
/// (n+1)/(p+q) binom(n, p)`.
pub fn norlund_via_stirling(n_max: usize, q: usize) -> Result<Vec<Rational>> {
    guard("q", q, 1, usize::MAX, "")?;
    let table = Stirling2Table::new(2 * n_max);
    Ok((0..=n_max)
        .map(|n| {
            let inner: Rational = (0..=n)
                .map(|p| {
                    let s = Rational::from_integer(table.get(n + p, p).unwrap().clone());
                    Rational::sign_power(p) * s / binomial_rational(n + p, p)
                        * Rational::new(n as i64 + 1, (p + q) as i64)
                        * binomial_rational(n, p)
                })
                .sum();
            binomial_rational(n + q, q - 1) * inner
        })
        .collect())
}

fn check_positive(name: &'static str, v: &Rational) -> Result<()> {
    if v.is_negative() || v.is_zero() {
        return Err(Error::RangeError {
            what: name,
            value: v.to_string(),
            range: "(0, inf)".into(),
        });
    }
    Ok(())
}

/// `B_n^(a,b)`: coefficients of `1/1F1(a; a+b; z)` times `n!`.
pub fn hypergeometric_bernoulli(n_max: usize, a: &Rational, b: &Rational) -> Result<Vec<Rational>> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    let f = named::hypergeometric_1f1(a, &(a + b), n_max);
    Ok(scale_by_factorial(f.reciprocal()?.into_coeffs()))
}

/// `g_n = -(a)_n / ((a+b)_n n!)`; row sums are `B_n^(a,b)/n!`.
pub fn hypergeometric_input(a: &Rational, b: &Rational) -> Result<InputSequence> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    let (a, c) = (a.clone(), a + b);
    Ok(InputSequence::new(
        format!("hypergeometric(a={a}, b={b})"),
        move |n| -(named::pochhammer(&a, n) / named::pochhammer(&c, n) / factorial_rational(n)),
    ))
}

/// `n!` times the row sums on [`hypergeometric_input`].
pub fn hypergeometric_via_tree(n_max: usize, a: &Rational, b: &Rational) -> Result<Vec<Rational>> {
    let g = hypergeometric_input(a, b)?;
    let mut xs = vec![Rational::one()];
    xs.extend(pitree::row_sums(&g, n_max));
    Ok(scale_by_factorial(xs))
}
