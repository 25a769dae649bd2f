use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, Ring};

/// Univariate polynomial in `x` with exact rational coefficients.
///
/// Coefficients are stored by ascending degree with trailing zeros trimmed,
/// so the zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Polynomial {
        Polynomial::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Polynomial {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial::new(coeffs)
    }

    /// `a x + b`.
    pub fn linear(a: Rational, b: Rational) -> Polynomial {
        Polynomial::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut out = Polynomial::constant(Rational::one());
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// `p(c x)`.
    pub fn scale_variable(&self, c: &Rational) -> Polynomial {
        let mut factor = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &factor);
            factor *= c;
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

/// `c0 + c1 x + c2 x^2 + ...`, zero terms omitted.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} x")?,
                _ => write!(f, "{c} x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<'a> Add for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Polynomial::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::constant(Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Ring for Polynomial {
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
        Polynomial::scale(self, r)
    }
    /// Only nonzero constants are units of `Q[x]`.
    fn try_inverse(&self) -> Option<Self> {
        if self.is_constant() {
            self.coeffs.first()?.recip().map(Polynomial::constant)
        } else {
            None
        }
    }
    fn from_rational(r: Rational) -> Self {
        Polynomial::constant(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(cs: &[(i64, i64)]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&(a, b)| rat(a, b)).collect())
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Polynomial::new(vec![rat(0, 1), rat(0, 1)]).degree(), None);
        assert_eq!(Polynomial::x().degree(), Some(1));
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn display_skips_zero_terms() {
        assert_eq!(p(&[(-1, 2), (1, 1)]).to_string(), "-1/2 + 1 x");
        assert_eq!(
            p(&[(1, 6), (-1, 1), (1, 1)]).to_string(),
            "1/6 + -1 x + 1 x^2"
        );
        assert_eq!(p(&[(0, 1), (0, 1), (3, 4)]).to_string(), "3/4 x^2");
    }

    #[test]
    fn evaluation_and_products() {
        // (x - 1)^3 = x^3 - 3x^2 + 3x - 1
        let xm1 = p(&[(-1, 1), (1, 1)]);
        assert_eq!(xm1.pow(3), p(&[(-1, 1), (3, 1), (-3, 1), (1, 1)]));
        assert_eq!(xm1.pow(3).eval(&rat(3, 1)), rat(8, 1));
        assert_eq!(
            p(&[(1, 2), (1, 1)]).scale_variable(&rat(-2, 1)),
            p(&[(1, 2), (-2, 1)])
        );
    }

    #[test]
    fn only_constants_invert() {
        assert_eq!(p(&[(2, 3)]).try_inverse(), Some(p(&[(3, 2)])));
        assert!(Polynomial::x().try_inverse().is_none());
        assert!(Polynomial::zero().try_inverse().is_none());
    }
}
