//! Sums over compositions and their generating-function counterparts.
//!
//! Every transform here has at least two evaluation routes: a literal sum
//! over all compositions of `n` (`*_brute`), and a route through series
//! algebra or a convolution formula. The routes are meant to be compared.
//!
//! ## Complete sums and `g_0`
//!
//! The convolution forms sum over tuples `k_1 + ... + k_p = n` with
//! `k_i >= 0`, which needs a value for `g_0`. Writing `g_n = -w_n/n!`, the
//! binomial relation between complete and incomplete sums holds when
//! `w_0 = 1`, i.e. `g_0 = -1`; the convolution forms are exact identities
//! for every `g` at that value and fail for any other. Callers pass `g_0`
//! explicitly; [`CONVOLUTION_G0`] is the value the identities need (it is
//! also the `n = 0` value of the Bernoulli input `-1/(n+1)!`). On the
//! inverse side the row sums are extended by `x_0 = 1`.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::{
    binomial_rational, factorial_rational, multinomial, named, Rational, Ring, Series,
};
use crate::compositions::{self, Composition};
use crate::error::{guard, Result};
use crate::pitree::InputSequence;

/// The `g_0` under which the convolution forms agree with plain
/// composition sums.
pub fn convolution_g0<C: Ring>() -> C {
    C::one().neg_ref()
}

/// `g_0 = -1` over the rationals.
pub const CONVOLUTION_G0: i64 = -1;

/// Ceiling for literal enumeration helpers used by verification.
pub const MAX_BRUTE: usize = 24;

type Generator<C> = Arc<dyn Fn(usize) -> C + Send + Sync>;

/// Outer weights `f_0, f_1, ...` of `f(z) = sum f_n z^n`.
#[derive(Clone)]
pub struct WeightSequence<C = Rational> {
    name: String,
    f0: C,
    generator: Generator<C>,
}

impl<C: Ring> WeightSequence<C> {
    pub fn new(
        name: impl Into<String>,
        f0: C,
        f: impl Fn(usize) -> C + Send + Sync + 'static,
    ) -> Self {
        WeightSequence {
            name: name.into(),
            f0,
            generator: Arc::new(f),
        }
    }

    /// Weights read off a series; terms past its order are zero.
    pub fn from_series(name: impl Into<String>, s: &Series<C>) -> Self {
        let coeffs = s.coeffs().to_vec();
        WeightSequence::new(name, coeffs[0].clone(), move |n| {
            coeffs.get(n).cloned().unwrap_or_else(C::zero)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn f0(&self) -> &C {
        &self.f0
    }

    /// `f_n`; `f_0` for `n = 0`.
    pub fn term(&self, n: usize) -> C {
        if n == 0 {
            self.f0.clone()
        } else {
            (self.generator)(n)
        }
    }

    pub fn series(&self, order: usize) -> Series<C> {
        Series::from_fn(order, |n| self.term(n))
    }
}

impl<C> fmt::Debug for WeightSequence<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightSequence({})", self.name)
    }
}

impl WeightSequence<Rational> {
    /// `z/(1-z)`: every `f_n = 1`, reducing to plain composition sums.
    pub fn geometric() -> Self {
        WeightSequence::new("geometric", Rational::from(0), |_| Rational::one())
    }

    /// `log(1+z)`.
    pub fn log1p() -> Self {
        WeightSequence::new("log1p", Rational::from(0), |n| {
            Rational::sign_power(n + 1) * Rational::new(1, n as i64)
        })
    }

    /// `log(1+z)/z`.
    pub fn log1p_over_z() -> Self {
        WeightSequence::new("log1p_over_z", Rational::one(), |n| {
            Rational::sign_power(n) * Rational::new(1, n as i64 + 1)
        })
    }

    /// `e^z - 1`.
    pub fn exp_minus_one() -> Self {
        WeightSequence::new("expm1", Rational::from(0), |n| {
            factorial_rational(n).recip().unwrap()
        })
    }

    /// `(1-z)^(-q) - 1`, i.e. `f_k = binom(k+q-1, q-1)`.
    pub fn inverse_power(q: usize) -> Self {
        WeightSequence::new(format!("invpow:{q}"), Rational::from(0), move |k| {
            if q == 0 {
                Rational::from(0)
            } else {
                binomial_rational(k + q - 1, q - 1)
            }
        })
    }

    /// Only `f_k = 1`: counts compositions with exactly `k` parts.
    pub fn single(k: usize) -> Self {
        WeightSequence::new(format!("single:{k}"), Rational::from(0), move |n| {
            if n == k {
                Rational::one()
            } else {
                Rational::from(0)
            }
        })
    }
}

/// Coefficient list `[0, c_1, ..., c_n]` indexed by degree, lifted to `C`.
fn table<C: Ring>(g: &InputSequence<C>, n: usize) -> Vec<C> {
    g.table(n)
}

fn product_over<C: Ring>(table: &[C], parts: &[usize]) -> C {
    let mut acc = C::one();
    for &k in parts {
        if table[k].is_zero() {
            return C::zero();
        }
        acc = acc.mul_ref(&table[k]);
    }
    acc
}

/// Sum of `weight(pi)` over every composition `pi` of `n`.
pub fn sum_over_compositions<C: Ring>(n: usize, weight: impl Fn(&Composition) -> C) -> Result<C> {
    guard("n", n, 1, MAX_BRUTE, "MAX_BRUTE: 2^(n-1) terms")?;
    Ok(compositions::enumerate(n)?.fold(C::zero(), |acc, pi| acc.add_ref(&weight(&pi))))
}

/// `x_1, ..., x_N` with `x_n = sum_{pi in C(n)} g_pi`, computed as the
/// coefficients of `g/(1-g)`.
pub fn comp_sum<C: Ring>(g: &InputSequence<C>, n_max: usize) -> Vec<C> {
    let gs = g.series(n_max);
    let outer = named::geometric(n_max).map(|c| C::from_rational(c.clone()));
    let x = outer.compose(&gs).expect("g has zero constant term");
    x.into_coeffs().into_iter().skip(1).collect()
}

/// `x_n` by enumerating all `2^(n-1)` compositions.
pub fn comp_sum_brute<C: Ring>(g: &InputSequence<C>, n: usize) -> Result<C> {
    let t = table(g, n);
    sum_over_compositions(n, |pi| product_over(&t, pi.parts()))
}

/// Complete sums `sum_{k_1+...+k_p = n, k_i >= 0} g_{k_1}...g_{k_p}` for
/// `p = 0..=n_max` (rows) and `n = 0..=n_max` (columns), with `g_0` given.
pub fn complete_sums<C: Ring>(g: &InputSequence<C>, g0: &C, n_max: usize) -> Vec<Vec<C>> {
    let mut gs = g.series(n_max).into_coeffs();
    gs[0] = g0.clone();
    let base = Series::new(gs, n_max);
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut power = Series::one(n_max);
    for _ in 0..=n_max {
        rows.push(power.coeffs().to_vec());
        power = power.mul(&base);
    }
    rows
}

/// `x_n = sum_p binom(n+1, p+1) sum_{k_i >= 0} g_{k_1}...g_{k_p}`.
///
/// Agrees with [`comp_sum`] exactly when `g0` is [`convolution_g0`].
pub fn comp_sum_convolution<C: Ring>(g: &InputSequence<C>, g0: &C, n_max: usize) -> Vec<C> {
    let s = complete_sums(g, g0, n_max);
    (1..=n_max)
        .map(|n| {
            (1..=n).fold(C::zero(), |acc, p| {
                acc.add_ref(&s[p][n].scale(&binomial_rational(n + 1, p + 1)))
            })
        })
        .collect()
}

/// `g_1, ..., g_N` recovered from row sums: coefficients of `x/(1+x)`.
pub fn comp_sum_inverse<C: Ring>(x: &InputSequence<C>, n_max: usize) -> Vec<C> {
    let xs = x.series(n_max);
    let denom = Series::one(n_max).add(&xs);
    let g = xs.mul(&denom.reciprocal().expect("constant term is 1"));
    g.into_coeffs().into_iter().skip(1).collect()
}

/// `g_n = sum_{pi in C(n)} (-1)^(|pi|+1) x_pi` by enumeration.
pub fn comp_sum_inverse_brute<C: Ring>(x: &InputSequence<C>, n: usize) -> Result<C> {
    let t = table(x, n);
    sum_over_compositions(n, |pi| {
        let v = product_over(&t, pi.parts());
        if pi.len() % 2 == 0 {
            v.neg_ref()
        } else {
            v
        }
    })
}

/// `g_n = sum_p (-1)^(p+1) binom(n+1, p+1) sum_{k_i >= 0} x_{k_1}...x_{k_p}`
/// with the row sums extended by `x_0`; exact at `x_0 = 1`.
pub fn comp_sum_inverse_convolution<C: Ring>(x: &InputSequence<C>, x0: &C, n_max: usize) -> Vec<C> {
    let s = complete_sums(x, x0, n_max);
    (1..=n_max)
        .map(|n| {
            (1..=n).fold(C::zero(), |acc, p| {
                let term = s[p][n].scale(&binomial_rational(n + 1, p + 1));
                if p % 2 == 1 {
                    acc.add_ref(&term)
                } else {
                    acc.sub_ref(&term)
                }
            })
        })
        .collect()
}

/// All `m`-tuples of integers `>= min_part` summing to `n`.
pub(crate) fn tuples(m: usize, n: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, n: usize, min: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            if n == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if n < min * m {
            return;
        }
        for k in min..=n - min * (m - 1) {
            prefix.push(k);
            go(m - 1, n - k, min, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, n, min_part, &mut Vec::with_capacity(m), &mut out);
    out
}

/// `sum binom(n; k_1..k_m) w_{k_1}...w_{k_m}` over `k_1+...+k_m = n` with
/// `k_i >= 1` (incomplete) or `k_i >= 0` (complete). `w` is indexed from 0.
pub fn multinomial_sum<C: Ring>(w: &[C], m: usize, n: usize, complete: bool) -> C {
    let min = if complete { 0 } else { 1 };
    tuples(m, n, min).iter().fold(C::zero(), |acc, ks| {
        let coeff = Rational::from_integer(multinomial(ks));
        acc.add_ref(&product_over(w, ks).scale(&coeff))
    })
}

/// `sum_{pi in C(n)} f_{|pi|} g_pi` for `n = 0..=N` (with `a_0 = f_0`),
/// as the coefficients of `f(g(z))`.
pub fn weighted_comp_sum<C: Ring>(
    f: &WeightSequence<C>,
    g: &InputSequence<C>,
    n_max: usize,
) -> Vec<C> {
    f.series(n_max)
        .compose(&g.series(n_max))
        .expect("g has zero constant term")
        .into_coeffs()
}

/// `a_n` by enumerating compositions (`a_0 = f_0`).
pub fn weighted_comp_sum_brute<C: Ring>(
    f: &WeightSequence<C>,
    g: &InputSequence<C>,
    n: usize,
) -> Result<C> {
    if n == 0 {
        return Ok(f.f0().clone());
    }
    let t = table(g, n);
    let fs: Vec<C> = (0..=n).map(|m| f.term(m)).collect();
    sum_over_compositions(n, |pi| {
        let fm = &fs[pi.len()];
        if fm.is_zero() {
            C::zero()
        } else {
            fm.mul_ref(&product_over(&t, pi.parts()))
        }
    })
}

/// `sum_{m=p}^{n} f_m binom(m, p)`.
pub fn convolution_weight<C: Ring>(f: &WeightSequence<C>, p: usize, n: usize) -> C {
    (p..=n).fold(C::zero(), |acc, m| {
        acc.add_ref(&f.term(m).scale(&binomial_rational(m, p)))
    })
}

/// `a_n = sum_p (sum_{m=p}^n f_m binom(m,p)) sum_{k_i >= 0} g_{k_1}...g_{k_p}`
/// for `n = 0..=N` (`a_0 = f_0`). Exact at `g0 = convolution_g0()`.
pub fn weighted_convolution<C: Ring>(
    f: &WeightSequence<C>,
    g: &InputSequence<C>,
    g0: &C,
    n_max: usize,
) -> Vec<C> {
    let s = complete_sums(g, g0, n_max);
    let mut out = vec![f.f0().clone()];
    for n in 1..=n_max {
        let mut acc = C::zero();
        for p in 1..=n {
            if !s[p][n].is_zero() {
                acc = acc.add_ref(&convolution_weight(f, p, n).mul_ref(&s[p][n]));
            }
        }
        out.push(acc);
    }
    out
}

/// `sum_{pi in C(n)} f_{|pi|} sum_{k in pi} g_k` for `n = 1..=N`, from the
/// generating function `f'(z/(1-z)) g(z)`.
pub fn parts_sum<C: Ring>(f: &WeightSequence<C>, g: &InputSequence<C>, n_max: usize) -> Vec<C> {
    // f' truncated at N is enough: z/(1-z) has valuation 1.
    let fprime = f.series(n_max + 1).derivative();
    let w = named::geometric(n_max).map(|c| C::from_rational(c.clone()));
    let outer = fprime.compose(&w).expect("z/(1-z) has zero constant term");
    let gf = outer.mul(&g.series(n_max));
    gf.into_coeffs().into_iter().skip(1).collect()
}

/// Brute-force counterpart of [`parts_sum`] at a single `n`.
pub fn parts_sum_brute<C: Ring>(
    f: &WeightSequence<C>,
    g: &InputSequence<C>,
    n: usize,
) -> Result<C> {
    let t = table(g, n);
    sum_over_compositions(n, |pi| {
        let inner = pi
            .parts()
            .iter()
            .fold(C::zero(), |acc, &k| acc.add_ref(&t[k]));
        f.term(pi.len()).mul_ref(&inner)
    })
}

/// `sum_{pi in C(n)} sum_{k in pi} g_k` for `n = 1..=N`, from
/// `((1-z)/(1-2z))^2 g(z)`.
pub fn parts_total<C: Ring>(g: &InputSequence<C>, n_max: usize) -> Vec<C> {
    // (1-z)/(1-2z) = 1 + sum_{k>=1} 2^(k-1) z^k
    let ratio = Series::from_fn(n_max, |k| {
        if k == 0 {
            C::one()
        } else {
            C::from_rational(Rational::from(2).pow(k as i32 - 1))
        }
    });
    let gf = ratio.mul(&ratio).mul(&g.series(n_max));
    gf.into_coeffs().into_iter().skip(1).collect()
}

/// Exponential coefficients `[1, c_1/1!, ..., c_N/N!]`.
fn egf(values: &[Rational]) -> Series {
    let n = values.len();
    Series::from_fn(n, |k| {
        if k == 0 {
            Rational::one()
        } else {
            &values[k - 1] / &factorial_rational(k)
        }
    })
}

fn from_egf(s: &Series) -> Vec<Rational> {
    (1..=s.order())
        .map(|k| s.coeff(k) * factorial_rational(k))
        .collect()
}

/// Raw moments `mu_1..mu_N` (with `mu_0 = 1`) to cumulants `kappa_1..kappa_N`
/// via `log` of the moment generating function.
pub fn moments_to_cumulants(moments: &[Rational]) -> Vec<Rational> {
    let m = egf(moments);
    from_egf(&m.log().expect("constant term is 1"))
}

/// Cumulants `kappa_1..kappa_N` to raw moments `mu_1..mu_N` via `exp`.
pub fn cumulants_to_moments(cumulants: &[Rational]) -> Vec<Rational> {
    let mut k = egf(cumulants);
    let mut c = k.coeffs().to_vec();
    c[0] = Rational::from(0);
    k = Series::new(c, k.order());
    from_egf(&k.exp().expect("constant term is 0"))
}

/// `kappa_n = n! sum_{pi in C(n)} (-1)^(|pi|+1)/|pi| mu_pi/pi!`.
pub fn moments_to_cumulants_brute(moments: &[Rational], n: usize) -> Result<Rational> {
    let s = sum_over_compositions(n, |pi| {
        let mu: Rational = pi.parts().iter().map(|&k| moments[k - 1].clone()).product();
        let sign = Rational::sign_power(pi.len() + 1);
        sign * mu / Rational::from(pi.len()) / Rational::from_integer(pi.factorial_product())
    })?;
    Ok(s * factorial_rational(n))
}

/// `mu_n = n! sum_{pi in C(n)} 1/|pi|! kappa_pi/pi!`.
pub fn cumulants_to_moments_brute(cumulants: &[Rational], n: usize) -> Result<Rational> {
    let s = sum_over_compositions(n, |pi| {
        let k: Rational = pi
            .parts()
            .iter()
            .map(|&j| cumulants[j - 1].clone())
            .product();
        k / factorial_rational(pi.len()) / Rational::from_integer(pi.factorial_product())
    })?;
    Ok(s * factorial_rational(n))
}

pub const MAX_DIGIT_SUM: usize = 24;

/// `sum_{k=0}^{2^(n-1)-1} f_{s_2(k)+1}` by direct summation over `k`.
pub fn digit_sum_transform<C: Ring>(f: &WeightSequence<C>, n: usize) -> Result<C> {
    guard("n", n, 1, MAX_DIGIT_SUM, "MAX_DIGIT_SUM: 2^(n-1) terms")?;
    let fs: Vec<C> = (0..=n).map(|m| f.term(m)).collect();
    Ok((0..1u64 << (n - 1)).fold(C::zero(), |acc, k| {
        acc.add_ref(&fs[compositions::digit_sum_s2(k) as usize + 1])
    }))
}

/// `[z^n] f(z/(1-z))`.
pub fn digit_sum_by_series<C: Ring>(f: &WeightSequence<C>, n: usize) -> Result<C> {
    guard("n", n, 1, usize::MAX, "")?;
    let w = named::geometric(n).map(|c| C::from_rational(c.clone()));
    let mut fs = f.series(n).into_coeffs();
    fs[0] = C::zero();
    Ok(Series::new(fs, n).compose(&w)?.coeff(n))
}

/// `sum_{k=1}^{n} f_k binom(n-1, n-k)`.
pub fn digit_sum_by_binomial<C: Ring>(f: &WeightSequence<C>, n: usize) -> Result<C> {
    guard("n", n, 1, usize::MAX, "")?;
    Ok((1..=n).fold(C::zero(), |acc, k| {
        acc.add_ref(&f.term(k).scale(&binomial_rational(n - 1, n - k)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Polynomial};
    use crate::compositions::PartSet;
    use crate::pitree;

    fn r(v: i64) -> Rational {
        rat(v, 1)
    }

    #[test]
    fn catalan_comp_sum() {
        let g = InputSequence::catalan_shifted();
        assert_eq!(comp_sum_brute(&g, 3).unwrap(), r(5));
        assert_eq!(comp_sum(&g, 6), [1, 2, 5, 14, 42, 132].map(r).to_vec());
    }

    #[test]
    fn bernoulli_comp_sum() {
        let g = InputSequence::bernoulli();
        assert_eq!(comp_sum_brute(&g, 4).unwrap(), rat(-1, 720));
        assert_eq!(comp_sum(&InputSequence::woon(), 4)[3], rat(-1, 720));
        assert_eq!(comp_sum(&g, 1)[0], rat(-1, 2));
    }

    #[test]
    fn fibonacci_comp_sum() {
        let g = InputSequence::indicator(&PartSet::new(vec![1, 2]).unwrap());
        assert_eq!(comp_sum(&g, 8), [1, 2, 3, 5, 8, 13, 21, 34].map(r).to_vec());
    }

    #[test]
    fn convolution_form_needs_g0_minus_one() {
        let g = InputSequence::bernoulli();
        let conv = comp_sum_convolution(&g, &r(-1), 8);
        assert_eq!(conv, comp_sum(&g, 8));
        assert_eq!(conv[0], rat(-1, 2));
        assert_eq!(conv[1], rat(1, 12));
        // Any other g0 breaks the identity.
        assert_ne!(comp_sum_convolution(&g, &r(1), 4), comp_sum(&g, 4));
        let cat = InputSequence::catalan_shifted();
        assert_eq!(
            comp_sum_convolution(&cat, &convolution_g0(), 10),
            comp_sum(&cat, 10)
        );
    }

    #[test]
    fn complete_vs_incomplete_multinomial_sums() {
        // w_n = -n! g_n for the Bernoulli input, so w_0 = 1 there.
        let w: Vec<Rational> = (0..=8).map(|n| rat(1, n as i64 + 1)).collect();
        assert_eq!(w[0], r(1));
        for n in 1..=8 {
            for m in 1..=n {
                let lhs = multinomial_sum(&w, m, n, false);
                let rhs = (1..=m).fold(r(0), |acc, p| {
                    acc + Rational::sign_power(m - p)
                        * binomial_rational(m, p)
                        * multinomial_sum(&w, p, n, true)
                });
                assert_eq!(lhs, rhs, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn tuples_enumerate_weak_compositions() {
        assert_eq!(tuples(2, 2, 0), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(tuples(3, 2, 1), Vec::<Vec<usize>>::new());
        assert_eq!(tuples(0, 0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn inverse_examples() {
        let x = InputSequence::from_table("catalan", [1, 2, 5, 14, 42, 132].map(r).to_vec());
        let g = comp_sum_inverse(&x, 6);
        assert_eq!(g, [1, 1, 2, 5, 14, 42].map(r).to_vec());
        assert_eq!(comp_sum_inverse_brute(&x, 2).unwrap(), r(1));

        let fib = InputSequence::from_table("fib", [1, 2, 3, 5, 8, 13, 21].map(r).to_vec());
        assert_eq!(
            comp_sum_inverse(&fib, 7),
            [1, 1, 0, 0, 0, 0, 0].map(r).to_vec()
        );

        let woon = InputSequence::woon();
        let x = InputSequence::from_table("x", comp_sum(&woon, 10));
        assert_eq!(comp_sum_inverse(&x, 10), woon.table(10)[1..].to_vec());
        assert_eq!(
            comp_sum_inverse_convolution(&x, &r(1), 10),
            woon.table(10)[1..].to_vec()
        );
    }

    #[test]
    fn weighted_examples() {
        let g = InputSequence::catalan_shifted();
        assert_eq!(
            weighted_comp_sum(&WeightSequence::geometric(), &g, 6)[1..],
            comp_sum(&g, 6)[..]
        );

        let e = InputSequence::from_series("expm1", &named::exp_minus_one(8));
        let b = weighted_comp_sum(&WeightSequence::log1p_over_z(), &e, 8);
        assert_eq!(b[3], r(0));
        assert_eq!(b[2], rat(1, 12));
        assert_eq!(
            weighted_comp_sum_brute(&WeightSequence::log1p_over_z(), &e, 3).unwrap(),
            r(0)
        );

        let ones = InputSequence::from_series("geometric", &named::geometric(10));
        let two_parts = weighted_comp_sum(&WeightSequence::single(2), &ones, 10);
        for n in 1..=10 {
            assert_eq!(two_parts[n], r(n as i64 - 1));
        }
    }

    #[test]
    fn weighted_convolution_examples() {
        let g = InputSequence::bernoulli();
        let f = WeightSequence::inverse_power(2);
        let a = weighted_convolution(&f, &g, &r(-1), 6);
        assert_eq!(a[2], rat(5, 12));
        assert_eq!(a, weighted_comp_sum(&f, &g, 6));

        let q1 = weighted_convolution(&WeightSequence::inverse_power(1), &g, &r(-1), 8);
        assert_eq!(q1[1..], comp_sum_convolution(&g, &r(-1), 8)[..]);
    }

    #[test]
    fn norlund_inner_weight_closed_form() {
        for q in 1..=4 {
            let f = WeightSequence::inverse_power(q);
            for n in 1..=8 {
                for p in 1..=n {
                    let closed = rat((n - p + 1) as i64, (p + q) as i64)
                        * binomial_rational(n + 1, p)
                        * binomial_rational(n + q, q - 1);
                    assert_eq!(convolution_weight(&f, p, n), closed, "q={q} n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn parts_sum_examples() {
        let z = InputSequence::from_table("z", vec![r(1)]);
        let f = WeightSequence::geometric();
        let ps = parts_sum(&f, &z, 6);
        assert_eq!(ps[2], r(5));
        assert_eq!(ps[0], r(1));
        assert_eq!(parts_sum_brute(&f, &z, 3).unwrap(), r(5));

        let g = InputSequence::catalan_shifted();
        assert_eq!(parts_total(&g, 10), parts_sum(&f, &g, 10));
    }

    #[test]
    fn moments_and_cumulants() {
        let (m, s2) = (rat(3, 2), rat(5, 7));
        let mu = vec![m.clone(), &m * &m + &s2];
        let k = moments_to_cumulants(&mu);
        assert_eq!(k, vec![m.clone(), s2.clone()]);
        assert_eq!(moments_to_cumulants_brute(&mu, 2).unwrap(), s2);

        let kappa = vec![r(0), r(1), r(0), r(0), r(0), r(0)];
        assert_eq!(
            cumulants_to_moments(&kappa),
            [0, 1, 0, 3, 0, 15].map(r).to_vec()
        );
        assert_eq!(cumulants_to_moments_brute(&kappa, 6).unwrap(), r(15));
    }

    #[test]
    fn digit_sum_examples() {
        let log = WeightSequence::log1p();
        assert_eq!(digit_sum_transform(&log, 3).unwrap(), rat(1, 3));
        let f = WeightSequence::geometric();
        assert_eq!(digit_sum_transform(&f, 5).unwrap(), r(16));
        assert_eq!(digit_sum_transform(&log, 1).unwrap(), log.term(1));
        assert!(digit_sum_transform(&log, 25).is_err());
        for n in 1..=10 {
            assert_eq!(digit_sum_by_series(&log, n).unwrap(), rat(1, n as i64));
            assert_eq!(digit_sum_by_binomial(&log, n).unwrap(), rat(1, n as i64));
        }
    }

    #[test]
    fn polynomial_ring_comp_sum() {
        let g = InputSequence::bernoulli_polynomial();
        let x = comp_sum(&g, 3);
        assert_eq!(x, pitree::row_sums(&g, 3));
        assert_eq!(comp_sum_brute(&g, 3).unwrap(), x[2]);
        assert_eq!(x[0], Polynomial::linear(r(1), rat(-1, 2)));
    }
}
