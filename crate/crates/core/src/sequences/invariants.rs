//! Sequences left invariant by the PI tree (Catalan, Hermite) and the
//! linear recurrences behind restricted compositions.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::algebra::{factorial_rational, Polynomial, Rational, Series};
use crate::compositions::{self, PartSet};
use crate::compsum::{self, MAX_BRUTE};
use crate::error::{guard, Result};
use crate::pitree::{self, InputSequence};
use crate::verify::IdentityReport;

pub const MAX_HERMITE_N: usize = 10;

/// `C_0, ..., C_N` from `C_n = sum_{k=0}^{n-1} C_k C_{n-1-k}`.
pub fn catalan(n_max: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for n in 1..=n_max {
        let s = (0..n).map(|k| &c[k] * &c[n - 1 - k]).sum();
        c.push(s);
    }
    c
}

/// Checks, for `1 <= n <= N` and by enumerating compositions,
/// `C_n = sum_pi C_{k_1 - 1} ... C_{k_m - 1}` and
/// `C_{n-1} = sum_pi (-1)^(m+1) C_{k_1} ... C_{k_m}`.
pub fn catalan_invariance(n_max: usize) -> Result<Vec<IdentityReport>> {
    guard(
        "N",
        n_max,
        1,
        MAX_BRUTE,
        "MAX_BRUTE: 2^(n-1) compositions per n",
    )?;
    let c: Vec<Rational> = catalan(n_max)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    let shifted = InputSequence::from_table("C_{n-1}", c[..n_max].to_vec());
    let plain = InputSequence::from_table("C_n", c[1..].to_vec());

    let mut forward = Vec::new();
    let mut inverse = Vec::new();
    for n in 1..=n_max {
        forward.push((n, compsum::comp_sum_brute(&shifted, n)?, c[n].clone()));
        inverse.push((
            n,
            compsum::comp_sum_inverse_brute(&plain, n)?,
            c[n - 1].clone(),
        ));
    }
    Ok(vec![
        IdentityReport::compare(
            "catalan_sum_over_compositions",
            (1, n_max),
            "g_n = C_{n-1}",
            forward,
        ),
        IdentityReport::compare(
            "catalan_inverse_sum_over_compositions",
            (1, n_max),
            "x_n = C_n",
            inverse,
        ),
    ])
}

/// Physicists' Hermite polynomials `H_0, ..., H_N` by
/// `H_n = 2x H_{n-1} - 2(n-1) H_{n-2}`.
pub fn hermite_polynomials(n_max: usize) -> Vec<Polynomial> {
    two_term(n_max, Rational::from(2), Rational::from(-2))
}

/// `G_n = i^n H_n(ix)`, real: `G_n = -2x G_{n-1} + 2(n-1) G_{n-2}`.
pub fn hermite_rotated(n_max: usize) -> Vec<Polynomial> {
    two_term(n_max, Rational::from(-2), Rational::from(2))
}

// P_0 = 1, P_1 = a x, P_n = a x P_{n-1} + b (n-1) P_{n-2}
fn two_term(n_max: usize, a: Rational, b: Rational) -> Vec<Polynomial> {
    let ax = Polynomial::monomial(a, 1);
    let mut out = vec![Polynomial::one()];
    if n_max >= 1 {
        out.push(ax.clone());
    }
    for n in 2..=n_max {
        let next = &(&ax * &out[n - 1]) + &out[n - 2].scale(&(&b * &Rational::from(n - 1)));
        out.push(next);
    }
    out
}

/// `g_n = -i^n H_n(ix)/n!`, as real polynomials in `x`.
pub fn hermite_input() -> InputSequence<Polynomial> {
    InputSequence::new("hermite", |n| {
        let g = hermite_rotated(n).pop().unwrap();
        g.scale(&-factorial_rational(n).recip().unwrap())
    })
}

/// Checks that the row sums on [`hermite_input`] are `H_n(x)/n!`, both by
/// the tree recurrence and by enumerating compositions.
pub fn hermite_invariance(n_max: usize) -> Result<IdentityReport> {
    guard(
        "N",
        n_max,
        1,
        MAX_HERMITE_N,
        "MAX_HERMITE_N: polynomial products over 2^(n-1) compositions",
    )?;
    let g = hermite_input();
    let h = hermite_polynomials(n_max);
    let target = |n: usize| h[n].scale(&factorial_rational(n).recip().unwrap());
    let mut pairs = Vec::new();
    for (i, x) in pitree::row_sums(&g, n_max).into_iter().enumerate() {
        pairs.push((i + 1, x, target(i + 1)));
    }
    for n in 1..=n_max {
        pairs.push((n, compsum::comp_sum_brute(&g, n)?, target(n)));
    }
    Ok(IdentityReport::compare(
        "hermite_invariance",
        (1, n_max),
        "g_n = -i^n H_n(ix)/n!",
        pairs,
    ))
}

/// `x_1, ..., x_N` with `x_n = sum_{j in J} x_{n-j}` and `x_0 = 1`: the
/// number of compositions of `n` with parts in `J`.
pub fn linear_recurrence(parts: &PartSet, n_max: usize) -> Vec<BigUint> {
    compositions::restricted_counts(n_max, parts).split_off(1)
}

/// `(sum_{j in J} z^j) / (1 - sum_{j in J} z^j)`.
pub fn restricted_gf(parts: &PartSet, n_max: usize) -> Series {
    let g = InputSequence::indicator(parts).series(n_max);
    let denom = Series::one(n_max).sub(&g);
    g.mul(&denom.reciprocal().expect("constant term is 1"))
}

/// Recurrence, enumeration and generating function agree for `n <= N`.
pub fn linear_recurrence_report(parts: &PartSet, n_max: usize) -> Result<IdentityReport> {
    guard(
        "N",
        n_max,
        1,
        compositions::MAX_ENUMERATE,
        "MAX_ENUMERATE: enumeration grows like the count itself",
    )?;
    let rec = linear_recurrence(parts, n_max);
    let gf = restricted_gf(parts, n_max);
    let mut pairs = Vec::new();
    for n in 1..=n_max {
        let counted = BigUint::from(compositions::enumerate_restricted(n, parts).count());
        let x = Rational::from_integer(BigInt::from(rec[n - 1].clone()));
        pairs.push((n, x.clone(), Rational::from_integer(BigInt::from(counted))));
        pairs.push((n, x, gf.coeff(n)));
    }
    Ok(IdentityReport::compare(
        "restricted_linear_recurrence",
        (1, n_max),
        &format!("J = {parts}"),
        pairs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn catalan_values() {
        let c: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(catalan(6), c);
        // 2 + 1 + 1 + 1 over the compositions 3, 2+1, 1+2, 1+1+1
        assert_eq!(
            compsum::comp_sum_brute(&InputSequence::catalan_shifted(), 3).unwrap(),
            rat(5, 1)
        );
        // C_2 - C_1^2 = C_1
        assert_eq!(rat(2, 1) - rat(1, 1), rat(1, 1));
    }

    #[test]
    fn catalan_identities() {
        for r in catalan_invariance(12).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn hermite() {
        let h = hermite_polynomials(3);
        assert_eq!(
            h[2],
            Polynomial::new(vec![rat(-2, 1), rat(0, 1), rat(4, 1)])
        );
        let g = hermite_input();
        assert_eq!(g.term(1), Polynomial::monomial(rat(2, 1), 1));
        // g_2 = -(4x^2 + 2)/2
        assert_eq!(
            g.term(2),
            Polynomial::new(vec![rat(-1, 1), rat(0, 1), rat(-2, 1)])
        );
        assert!(hermite_invariance(8).unwrap().passed());
        assert!(hermite_invariance(11).is_err());
    }

    #[test]
    fn restricted() {
        let fib = PartSet::new(vec![1, 2]).unwrap();
        let x = linear_recurrence(&fib, 5);
        assert_eq!(x, [1u32, 2, 3, 5, 8].map(BigUint::from).to_vec());
        assert_eq!(
            restricted_gf(&fib, 5).coeffs(),
            &[
                rat(0, 1),
                rat(1, 1),
                rat(2, 1),
                rat(3, 1),
                rat(5, 1),
                rat(8, 1)
            ]
        );
        let ones = PartSet::new(vec![1]).unwrap();
        assert!(linear_recurrence(&ones, 10)
            .iter()
            .all(|v| v == &BigUint::one()));
        let trib = PartSet::new(vec![1, 2, 3]).unwrap();
        assert!(linear_recurrence_report(&trib, 12).unwrap().passed());
        assert!(linear_recurrence_report(&fib, 16).unwrap().passed());
    }
}
