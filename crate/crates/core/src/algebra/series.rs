//! Dense truncated formal power series.

use std::fmt;

use serde_json::Value;

use super::{Rational, Ring};
use crate::error::{Error, Result};

/// A power series `c_0 + c_1 z + ... + c_N z^N  (mod z^(N+1))`.
///
/// The truncation order `N` is fixed at construction; binary operations on
/// series of different orders truncate to the smaller one.
#[derive(Clone, PartialEq)]
pub struct Series<C = Rational> {
    coeffs: Vec<C>,
}

impl<C: Ring> Series<C> {
    /// Builds a series of order `order`, zero-padding or truncating `coeffs`.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Series<C> {
        coeffs.resize(order + 1, C::zero());
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Series<C> {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Series<C> {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Series<C> {
        Series::new(vec![C::one()], order)
    }

    pub fn constant(c: C, order: usize) -> Series<C> {
        Series::new(vec![c], order)
    }

    /// The series `z`.
    pub fn identity(order: usize) -> Series<C> {
        Series::from_fn(order, |k| if k == 1 { C::one() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero past the truncation order.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Series<C> {
        Series::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Series<C>) -> Series<C> {
        let n = self.order().min(rhs.order());
        Series::from_fn(n, |k| self.coeffs[k].add_ref(&rhs.coeffs[k]))
    }

    pub fn sub(&self, rhs: &Series<C>) -> Series<C> {
        let n = self.order().min(rhs.order());
        Series::from_fn(n, |k| self.coeffs[k].sub_ref(&rhs.coeffs[k]))
    }

    pub fn neg(&self) -> Series<C> {
        self.map(|c| c.neg_ref())
    }

    pub fn scale(&self, r: &Rational) -> Series<C> {
        self.map(|c| c.scale(r))
    }

    /// Cauchy product modulo `z^(min order + 1)`.
    pub fn mul(&self, rhs: &Series<C>) -> Series<C> {
        let n = self.order().min(rhs.order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        Series { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Series<C>> {
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonUnitConstantTerm)?;
        let n = self.order();
        let mut out: Vec<C> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = C::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add_ref(&self.coeffs[j].mul_ref(&out[k - j]));
                }
            }
            out.push(acc.mul_ref(&inv0).neg_ref());
        }
        Ok(Series { coeffs: out })
    }

    /// `self(inner(z))` by Horner's rule in the truncated ring.
    pub fn compose(&self, inner: &Series<C>) -> Result<Series<C>> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionAtNonzeroPoint(
                inner.coeffs[0].to_string(),
            ));
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].add_ref(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Formal derivative; the result has order `N - 1` (order 0 stays 0).
    pub fn derivative(&self) -> Series<C> {
        let n = self.order();
        if n == 0 {
            return Series::zero(0);
        }
        Series::from_fn(n - 1, |k| self.coeffs[k + 1].scale(&Rational::from(k + 1)))
    }

    /// Formal exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Series<C>> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTermError {
                op: "exp",
                expected: "0",
                found: self.coeffs[0].to_string(),
            });
        }
        // b' = a' b, so n b_n = sum_{k=1}^{n} k a_k b_{n-k}
        let n = self.order();
        let mut out = vec![C::one()];
        for m in 1..=n {
            let mut acc = C::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    let term = self.coeffs[k]
                        .mul_ref(&out[m - k])
                        .scale(&Rational::from(k));
                    acc = acc.add_ref(&term);
                }
            }
            out.push(acc.scale(&Rational::new(1, m as i64)));
        }
        Ok(Series { coeffs: out })
    }

    /// Formal logarithm of a series with constant term one.
    pub fn log(&self) -> Result<Series<C>> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermError {
                op: "log",
                expected: "1",
                found: self.coeffs[0].to_string(),
            });
        }
        // a l' = a', so n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
        let n = self.order();
        let mut out = vec![C::zero()];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&Rational::from(m));
            for k in 1..m {
                if !out[k].is_zero() {
                    let term = out[k]
                        .mul_ref(&self.coeffs[m - k])
                        .scale(&Rational::from(k));
                    acc = acc.sub_ref(&term);
                }
            }
            out.push(acc.scale(&Rational::new(1, m as i64)));
        }
        Ok(Series { coeffs: out })
    }

    /// Integer power by repeated squaring; negative powers need a unit
    /// constant term.
    pub fn pow(&self, p: i64) -> Result<Series<C>> {
        let base = if p < 0 {
            self.reciprocal()?
        } else {
            self.clone()
        };
        let mut e = p.unsigned_abs();
        let mut acc = Series::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// JSON array of coefficient strings, index = degree.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    }
}

impl Series<Rational> {
    pub fn from_json(value: &Value) -> Result<Series<Rational>> {
        let err = || Error::Parse {
            what: "series",
            input: value.to_string(),
        };
        let items = value.as_array().ok_or_else(err)?;
        if items.is_empty() {
            return Err(err());
        }
        let coeffs = items
            .iter()
            .map(|v| v.as_str().ok_or_else(err)?.parse())
            .collect::<Result<Vec<Rational>>>()?;
        let order = coeffs.len() - 1;
        Ok(Series::new(coeffs, order))
    }
}

impl<C: Ring> fmt::Debug for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "] + O(z^{})", self.order() + 1)
    }
}
