//! Exact coefficient rings and truncated power series.
//!
//! Everything downstream computes over [`Rational`] or over [`Polynomial`]
//! (rational polynomials in a single indeterminate `x`). Both implement
//! [`Ring`], which is what [`Series`] is generic over.

mod combinatorics;
pub mod named;
mod polynomial;
mod rational;
mod series;

use std::fmt;

use num_traits::{One, Zero};

pub use combinatorics::{binomial, binomial_rational, factorial, factorial_rational, multinomial};
pub use polynomial::Polynomial;
pub use rational::{rat, Rational};
pub use series::Series;

/// A commutative ring with exact arithmetic that admits scaling by
/// rationals (a `Q`-algebra).
pub trait Ring:
    Clone + PartialEq + Zero + One + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse when the element is a unit.
    fn try_inverse(&self) -> Option<Self>;
    fn from_rational(r: Rational) -> Self;
}

impl Ring for Rational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_inverse(&self) -> Option<Self> {
        self.recip()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

/// Product of ring elements (one for the empty product).
pub fn product<'a, C: Ring>(items: impl IntoIterator<Item = &'a C>) -> C {
    items.into_iter().fold(C::one(), |acc, x| acc.mul_ref(x))
}

/// Sum of ring elements.
pub fn sum<C: Ring>(items: impl IntoIterator<Item = C>) -> C {
    items.into_iter().fold(C::zero(), |acc, x| acc.add_ref(&x))
}
