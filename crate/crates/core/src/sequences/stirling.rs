use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Triangle of Stirling numbers of the second kind `{n, k}`, `0 <= k <= n <= max`.
#[derive(Clone, Debug, PartialEq)]
pub struct Stirling2Table {
    rows: Vec<Vec<BigInt>>,
}

impl Stirling2Table {
    pub fn new(max: usize) -> Stirling2Table {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                let stay = if k < n { &prev[k] * k } else { BigInt::zero() };
                row[k] = stay + &prev[k - 1];
            }
            rows.push(row);
        }
        Stirling2Table { rows }
    }

    pub fn max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&BigInt> {
        if n > self.max() || k > n {
            return Err(Error::RangeError {
                what: "stirling index",
                value: format!("({n}, {k})"),
                range: format!("0 <= k <= n <= {}", self.max()),
            });
        }
        Ok(&self.rows[n][k])
    }

    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }
}

/// `{n, k}`, the number of partitions of an `n`-set into `k` blocks.
pub fn stirling2(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::RangeError {
            what: "k",
            value: k.to_string(),
            range: format!("[0, {n}]"),
        });
    }
    Stirling2Table::new(n).get(n, k).cloned()
}
