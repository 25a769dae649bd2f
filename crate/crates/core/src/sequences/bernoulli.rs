//! Bernoulli numbers and polynomials, each by several independent routes.

use std::str::FromStr;

use num_traits::{One, Zero};

use super::{norlund_polynomials, scale_by_factorial, Stirling2Table};
use crate::algebra::{binomial_rational, factorial_rational, named, Polynomial, Rational, Ring};
use crate::compsum::{self, sum_over_compositions};
use crate::error::{guard, Error, Result};
use crate::pitree::{self, InputSequence};
use crate::verify::IdentityReport;

pub const MAX_EXPANSION_N: usize = 10;

/// `B_0, ..., B_N` from the generating function `z/(e^z - 1)`.
pub fn bernoulli_numbers(n_max: usize) -> Vec<Rational> {
    scale_by_factorial(named::bernoulli_gf(n_max).into_coeffs())
}

/// The two composition-sum representations of `B_n/n!`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BernoulliForm {
    /// `sum_pi (-1)^|pi| / (pi + 1)!`
    InverseFactorial,
    /// `sum_pi (-1)^|pi| / ((|pi| + 1) pi!)`
    StirlingWeighted,
}

impl FromStr for BernoulliForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inverse_factorial" | "1" => Ok(BernoulliForm::InverseFactorial),
            "stirling_weighted" | "2" => Ok(BernoulliForm::StirlingWeighted),
            _ => Err(Error::Parse {
                what: "bernoulli form",
                input: s.into(),
            }),
        }
    }
}

/// `B_0, ..., B_N` by literally summing over every composition of each `n`.
pub fn bernoulli_via_compositions(n_max: usize, form: BernoulliForm) -> Result<Vec<Rational>> {
    guard(
        "N",
        n_max,
        0,
        compsum::MAX_BRUTE,
        "MAX_BRUTE: 2^(n-1) compositions per n",
    )?;
    let mut out = vec![Rational::one()];
    for n in 1..=n_max {
        let s = sum_over_compositions(n, |pi| {
            let denom = match form {
                BernoulliForm::InverseFactorial => {
                    Rational::from_integer(pi.shifted_factorial_product())
                }
                BernoulliForm::StirlingWeighted => {
                    Rational::from(pi.len() + 1) * Rational::from_integer(pi.factorial_product())
                }
            };
            Rational::sign_power(pi.len()) / denom
        })?;
        out.push(s * factorial_rational(n));
    }
    Ok(out)
}

/// `B_n = sum_p (-1)^p {n+p, p} / binom(n+p, p) * binom(n+1, p+1)`.
pub fn bernoulli_via_stirling(n_max: usize) -> Vec<Rational> {
    let table = Stirling2Table::new(2 * n_max);
    (0..=n_max)
        .map(|n| {
            (0..=n)
                .map(|p| {
                    let s = Rational::from_integer(table.get(n + p, p).unwrap().clone());
                    Rational::sign_power(p) * s / binomial_rational(n + p, p)
                        * binomial_rational(n + 1, p + 1)
                })
                .sum()
        })
        .collect()
}

/// `(-1)^n n!` times the row sums of Woon's tree, with `B_0 = 1`.
pub fn bernoulli_via_woon(n_max: usize) -> Vec<Rational> {
    let rows = pitree::row_sums(&InputSequence::woon(), n_max);
    std::iter::once(Rational::one())
        .chain(rows.into_iter().enumerate().map(|(i, x)| {
            let n = i + 1;
            x * Rational::sign_power(n) * factorial_rational(n)
        }))
        .collect()
}

/// `B_0(x), ..., B_N(x)` from `z e^{zx}/(e^z - 1)`.
pub fn bernoulli_polynomials(n_max: usize) -> Vec<Polynomial> {
    norlund_polynomials(n_max, 1)
}

/// `B_0(x), ..., B_N(x)` as `n!` times the PI-tree row sums on
/// `g_n = (-1)^(n+1)/(n+1)! [x^(n+1) - (x-1)^(n+1)]`.
pub fn bernoulli_polynomials_by_tree(n_max: usize) -> Vec<Polynomial> {
    let mut xs = vec![Polynomial::one()];
    xs.extend(pitree::row_sums(
        &InputSequence::bernoulli_polynomial(),
        n_max,
    ));
    scale_by_factorial(xs)
}

/// Checks `B_n(x) = sum_{p=0}^n binom(n+1, p+1) (-1)^p B_n^(-p)(-p x)` as a
/// polynomial identity.
pub fn bernoulli_poly_expansion(n: usize) -> Result<IdentityReport> {
    guard(
        "n",
        n,
        1,
        MAX_EXPANSION_N,
        "MAX_EXPANSION_N: the check builds n+1 Norlund polynomial tables",
    )?;
    let lhs = bernoulli_polynomials(n).pop().unwrap();
    let rhs = bernoulli_expansion_rhs(n);
    Ok(IdentityReport::single(
        "bernoulli_expansion",
        n,
        format!("n={n}"),
        lhs,
        rhs,
    ))
}

/// Right-hand side of the Bernoulli expansion at degree `n`.
pub fn bernoulli_expansion_rhs(n: usize) -> Polynomial {
    let mut acc = Polynomial::zero();
    for p in 0..=n {
        let b = norlund_polynomials(n, -(p as i64)).pop().unwrap();
        let shifted = b.scale_variable(&-Rational::from(p));
        let c = binomial_rational(n + 1, p + 1) * Rational::sign_power(p);
        acc = acc.add_ref(&shifted.scale(&c));
    }
    acc
}
