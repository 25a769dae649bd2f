//! Integer compositions.
//!
//! A composition of `n` is an ordered tuple of positive parts summing to
//! `n`. Writing `n` as a row of dots, each composition is a choice of bars
//! in the `n - 1` gaps, which gives the bijection with masks in
//! `[0, 2^(n-1))` used for the canonical enumeration order.
//!
//! Mask convention: bit `i` set means a bar in the `i`-th gap counted from
//! the right end. With this convention the compositions of 3 come out as
//! `3, 2+1, 1+2, 1+1+1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::algebra::factorial;
use crate::error::{guard, Error, Result};

/// Largest `n` accepted by [`enumerate`] (there are `2^(n-1)` compositions).
pub const MAX_ENUMERATE: usize = 30;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "a composition needs at least one part and all parts >= 1, got {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `|pi|`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The integer being composed.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `pi! = k_1! ... k_m!`.
    pub fn factorial_product(&self) -> BigInt {
        self.parts.iter().map(|&k| factorial(k)).product()
    }

    /// `(pi+1)! = (k_1+1)! ... (k_m+1)!`.
    pub fn shifted_factorial_product(&self) -> BigInt {
        self.parts.iter().map(|&k| factorial(k + 1)).product()
    }

    /// Inverse of [`from_mask`].
    pub fn mask(&self) -> u64 {
        let n = self.total();
        let mut mask = 0u64;
        let mut dots = 0;
        for &k in &self.parts[..self.parts.len() - 1] {
            dots += k;
            // bar after dot `dots` sits in gap `n - 1 - dots` from the right
            mask |= 1 << (n - 1 - dots);
        }
        mask
    }
}

/// `k1+k2+...+km`.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Decodes `mask` into a composition of `n`.
pub fn from_mask(n: usize, mask: u64) -> Result<Composition> {
    guard("n", n, 1, 63, "mask width is 64 bits")?;
    let limit = 1u64 << (n - 1);
    if mask >= limit {
        return Err(Error::RangeError {
            what: "mask",
            value: mask.to_string(),
            range: format!("[0, {limit})"),
        });
    }
    Ok(decode(n, mask))
}

fn decode(n: usize, mask: u64) -> Composition {
    let mut parts = Vec::with_capacity(mask.count_ones() as usize + 1);
    let mut run = 1;
    for gap in (0..n - 1).rev() {
        if mask >> gap & 1 == 1 {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition { parts }
}

/// Lazy iterator over all compositions of `n` in increasing mask order.
#[derive(Clone, Debug)]
pub struct Compositions {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.next >= self.end {
            return None;
        }
        let c = decode(self.n, self.next);
        self.next += 1;
        Some(c)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Compositions {}

/// All `2^(n-1)` compositions of `n`, for `1 <= n <= 30`.
pub fn enumerate(n: usize) -> Result<Compositions> {
    guard(
        "n",
        n,
        1,
        MAX_ENUMERATE,
        "MAX_ENUMERATE: 2^(n-1) compositions",
    )?;
    Ok(Compositions {
        n,
        next: 0,
        end: 1u64 << (n - 1),
    })
}

/// Number of ones in the binary expansion of `k`.
pub fn digit_sum_s2(k: u64) -> u32 {
    k.count_ones()
}

/// A non-empty set of allowed part sizes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PartSet {
    members: Vec<usize>,
}

impl PartSet {
    pub fn new(mut members: Vec<usize>) -> Result<PartSet> {
        members.sort_unstable();
        members.dedup();
        if members.is_empty() || members[0] == 0 {
            return Err(Error::InvalidArgument(
                "a part set must be non-empty with positive members".into(),
            ));
        }
        Ok(PartSet { members })
    }

    /// Odd numbers up to and including `max`.
    pub fn odd_up_to(max: usize) -> Result<PartSet> {
        PartSet::new((1..=max).step_by(2).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, k: usize) -> bool {
        self.members.binary_search(&k).is_ok()
    }

    pub fn max(&self) -> usize {
        *self.members.last().unwrap()
    }
}

impl FromStr for PartSet {
    type Err = Error;

    /// Comma-separated list, e.g. `1,2`.
    fn from_str(s: &str) -> Result<PartSet> {
        let members = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::Parse {
                    what: "part set",
                    input: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PartSet::new(members)
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.members.iter().map(|k| k.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Number of compositions of `n` with every part in `parts`, from the
/// recurrence `x_n = sum_{j in J} x_{n-j}` seeded with `x_0 = 1`.
pub fn count_restricted(n: usize, parts: &PartSet) -> BigUint {
    restricted_counts(n, parts).pop().unwrap()
}

/// `[x_0, ..., x_n]` for the restricted recurrence.
pub fn restricted_counts(n: usize, parts: &PartSet) -> Vec<BigUint> {
    let mut x: Vec<BigUint> = Vec::with_capacity(n + 1);
    x.push(BigUint::one());
    for m in 1..=n {
        let mut acc = BigUint::zero();
        for &j in parts.members() {
            if j <= m {
                acc += &x[m - j];
            }
        }
        x.push(acc);
    }
    x
}

/// Lazy iterator over compositions of `n` with parts in a [`PartSet`], in
/// the same (mask) order as [`enumerate`]: first part descending, then
/// recursively on the remainder.
#[derive(Clone, Debug)]
pub struct RestrictedCompositions {
    n: usize,
    desc: Vec<usize>,
    reachable: Vec<bool>,
    choices: Vec<usize>,
    current: Vec<usize>,
    remaining: usize,
    pending: bool,
}

impl RestrictedCompositions {
    fn fits(&self, idx: usize, remaining: usize) -> bool {
        let p = self.desc[idx];
        p <= remaining && self.reachable[remaining - p]
    }

    /// Extends the current prefix greedily until it sums to `n`.
    fn descend(&mut self) {
        while self.remaining > 0 {
            let idx = (0..self.desc.len())
                .find(|&i| self.fits(i, self.remaining))
                .expect("remaining total is reachable");
            self.push(idx);
        }
    }

    fn push(&mut self, idx: usize) {
        self.choices.push(idx);
        self.current.push(self.desc[idx]);
        self.remaining -= self.desc[idx];
    }

    /// Moves to the next leaf; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(idx) = self.choices.pop() {
            let p = self.current.pop().unwrap();
            self.remaining += p;
            if let Some(next) = (idx + 1..self.desc.len()).find(|&i| self.fits(i, self.remaining)) {
                self.push(next);
                self.descend();
                return true;
            }
        }
        false
    }
}

impl Iterator for RestrictedCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if !self.pending {
            return None;
        }
        let out = Composition {
            parts: self.current.clone(),
        };
        self.pending = self.advance();
        Some(out)
    }
}

pub fn enumerate_restricted(n: usize, parts: &PartSet) -> RestrictedCompositions {
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for m in 1..=n {
        reachable[m] = parts.members().iter().any(|&j| j <= m && reachable[m - j]);
    }
    let mut desc = parts.members().to_vec();
    desc.reverse();
    let mut it = RestrictedCompositions {
        n,
        desc,
        pending: n >= 1 && reachable[n],
        reachable,
        choices: Vec::new(),
        current: Vec::new(),
        remaining: n,
    };
    if it.pending {
        it.descend();
    }
    it
}

impl RestrictedCompositions {
    pub fn target(&self) -> usize {
        self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn comps(list: &[&[usize]]) -> Vec<Composition> {
        list.iter()
            .map(|p| Composition::new(p.to_vec()).unwrap())
            .collect()
    }

    #[test]
    fn compositions_of_three_in_mask_order() {
        let all: Vec<_> = enumerate(3).unwrap().collect();
        assert_eq!(all, comps(&[&[3], &[2, 1], &[1, 2], &[1, 1, 1]]));
        assert_eq!(enumerate(1).unwrap().collect::<Vec<_>>(), comps(&[&[1]]));
    }

    #[test]
    fn five_has_sixteen_with_eight_in_one_two() {
        let all: Vec<_> = enumerate(5).unwrap().collect();
        assert_eq!(all.len(), 16);
        let small = all
            .iter()
            .filter(|c| c.parts().iter().all(|&k| k <= 2))
            .count();
        assert_eq!(small, 8);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(enumerate(0), Err(Error::RangeError { .. })));
        assert!(matches!(
            enumerate(31),
            Err(Error::SizeGuard { limit: 30, .. })
        ));
        assert_eq!(enumerate(30).unwrap().len(), 1 << 29);
    }

    #[test]
    fn mask_examples() {
        assert_eq!(from_mask(3, 0).unwrap(), comps(&[&[3]])[0]);
        assert_eq!(from_mask(3, 3).unwrap(), comps(&[&[1, 1, 1]])[0]);
        assert!(matches!(from_mask(3, 4), Err(Error::RangeError { .. })));
        for n in 1..=10 {
            for k in 0..1u64 << (n - 1) {
                let c = from_mask(n, k).unwrap();
                assert_eq!(c.len() as u32, digit_sum_s2(k) + 1);
                assert_eq!(c.mask(), k);
                assert_eq!(c.total(), n);
            }
        }
    }

    #[test]
    fn from_mask_is_a_bijection() {
        for n in 1..=12 {
            let set: HashSet<_> = (0..1u64 << (n - 1))
                .map(|k| from_mask(n, k).unwrap())
                .collect();
            assert_eq!(set.len(), 1 << (n - 1));
            assert!(enumerate(n).unwrap().all(|c| set.contains(&c)));
        }
    }

    #[test]
    fn digit_sums() {
        assert_eq!([0, 1, 2, 3].map(digit_sum_s2), [0, 1, 1, 2]);
        for t in 0..=20 {
            assert_eq!(digit_sum_s2(1 << t), 1);
        }
    }

    #[test]
    fn restricted_examples() {
        let one_two: PartSet = "1,2".parse().unwrap();
        let four: Vec<_> = enumerate_restricted(4, &one_two).collect();
        assert_eq!(
            four,
            comps(&[&[2, 2], &[2, 1, 1], &[1, 2, 1], &[1, 1, 2], &[1, 1, 1, 1]])
        );
        assert_eq!(
            enumerate_restricted(3, &PartSet::new(vec![2]).unwrap()).count(),
            0
        );
        assert_eq!(count_restricted(5, &one_two), BigUint::from(8u32));
        assert_eq!(count_restricted(0, &one_two), BigUint::from(1u32));
        assert_eq!(count_restricted(12, &one_two), BigUint::from(233u32));
    }

    #[test]
    fn restricted_order_matches_mask_order() {
        for set in ["1,2", "1,3", "2,3", "1,2,3", "3"] {
            let j: PartSet = set.parse().unwrap();
            for n in 1..=12 {
                let filtered: Vec<_> = enumerate(n)
                    .unwrap()
                    .filter(|c| c.parts().iter().all(|&k| j.contains(k)))
                    .collect();
                let direct: Vec<_> = enumerate_restricted(n, &j).collect();
                assert_eq!(direct, filtered, "J={set} n={n}");
            }
        }
    }

    #[test]
    fn odd_parts_match_series_coefficient() {
        use crate::algebra::{named, rat, Series};
        let j = PartSet::odd_up_to(6).unwrap();
        let g = Series::new(
            vec![
                rat(0, 1),
                rat(1, 1),
                rat(0, 1),
                rat(1, 1),
                rat(0, 1),
                rat(1, 1),
            ],
            6,
        );
        let x = named::geometric(6).compose(&g).unwrap();
        let count = enumerate_restricted(6, &j).count();
        assert_eq!(rat(count as i64, 1), x.coeff(6));
        assert_eq!(count, 8);
    }

    #[test]
    fn part_set_validation() {
        assert!(PartSet::new(vec![]).is_err());
        assert!(PartSet::new(vec![0, 1]).is_err());
        assert_eq!(PartSet::new(vec![3, 1, 3]).unwrap().members(), &[1, 3]);
        assert!("1,x".parse::<PartSet>().is_err());
    }

    #[test]
    fn factorial_products() {
        let c = Composition::new(vec![2, 1, 3]).unwrap();
        assert_eq!(c.factorial_product(), BigInt::from(12));
        assert_eq!(c.shifted_factorial_product(), BigInt::from(2 * 6 * 24));
        assert_eq!(c.to_string(), "2+1+3");
    }
}
