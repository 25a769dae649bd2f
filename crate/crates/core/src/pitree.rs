//! Woon's tree and Fuchs' general PI tree.
//!
//! Each node carries a multi-index `(i_1, ..., i_k)` and the value
//! `g_{i_1} ... g_{i_k}`. A node spawns a left child by prepending `1`
//! (operator P) and a right child by incrementing the first index
//! (operator I). Starting from `(1)`, row `n` holds every composition of
//! `n` exactly once, so its row sum is the composition sum of `g`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::One;

use crate::algebra::{factorial_rational, Polynomial, Rational, Ring, Series};
use crate::compositions::{Composition, PartSet};
use crate::error::{guard, Error, Result};

pub const MAX_ROW: usize = 24;
pub const MAX_DOT_DEPTH: usize = 8;

type Generator<C> = Arc<dyn Fn(usize) -> C + Send + Sync>;

/// A sequence `g_1, g_2, ...` feeding a PI tree.
#[derive(Clone)]
pub struct InputSequence<C = Rational> {
    name: String,
    generator: Generator<C>,
}

impl<C: Ring> InputSequence<C> {
    pub fn new(name: impl Into<String>, f: impl Fn(usize) -> C + Send + Sync + 'static) -> Self {
        InputSequence {
            name: name.into(),
            generator: Arc::new(f),
        }
    }

    /// Table-backed sequence: `values[0]` is `g_1`; later terms are zero.
    pub fn from_table(name: impl Into<String>, values: Vec<C>) -> Self {
        InputSequence::new(name, move |n| {
            values
                .get(n.wrapping_sub(1))
                .cloned()
                .unwrap_or_else(C::zero)
        })
    }

    /// Reads `g_n` off the coefficients of a series (constant term ignored).
    pub fn from_series(name: impl Into<String>, s: &Series<C>) -> Self {
        InputSequence::from_table(name, s.coeffs()[1..].to_vec())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `g_n` for `n >= 1`.
    pub fn term(&self, n: usize) -> C {
        (self.generator)(n)
    }

    /// `[0, g_1, ..., g_n]`, indexed by `n`.
    pub fn table(&self, n: usize) -> Vec<C> {
        std::iter::once(C::zero())
            .chain((1..=n).map(|k| self.term(k)))
            .collect()
    }

    /// `g(z) = sum_{n>=1} g_n z^n` truncated at `order`.
    pub fn series(&self, order: usize) -> Series<C> {
        Series::new(self.table(order), order)
    }

    /// The sequence `{-g_n}`.
    pub fn negated(&self) -> InputSequence<C> {
        let g = self.generator.clone();
        InputSequence::new(format!("-({})", self.name), move |n| g(n).neg_ref())
    }

    /// `g_pi = g_{k_1} ... g_{k_m}`.
    pub fn multi_index_value(&self, index: &[usize]) -> C {
        index
            .iter()
            .fold(C::one(), |acc, &k| acc.mul_ref(&self.term(k)))
    }
}

impl<C> fmt::Debug for InputSequence<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InputSequence({})", self.name)
    }
}

impl InputSequence<Rational> {
    /// Woon's tree exactly as drawn, signs included:
    /// `g_n = (-1)^(n+1)/(n+1)!`. Row sums are `(-1)^n B_n/n!`.
    pub fn woon() -> Self {
        InputSequence::new("woon", |n| {
            Rational::sign_power(n + 1) / factorial_rational(n + 1)
        })
    }

    /// `g_n = -1/(n+1)!`, i.e. `g(z) = 1 - (e^z - 1)/z`. Row sums are
    /// `B_n/n!`.
    pub fn bernoulli() -> Self {
        InputSequence::new("bernoulli", |n| {
            -(factorial_rational(n + 1).recip().unwrap())
        })
    }

    /// `g_n = 1` for `n` in `parts`, zero otherwise.
    pub fn indicator(parts: &PartSet) -> Self {
        let parts = parts.clone();
        InputSequence::new(format!("indicator{parts}"), move |n| {
            if parts.contains(n) {
                Rational::one()
            } else {
                Rational::from(0)
            }
        })
    }

    /// Indicator of `{1, 2}`; row sums are Fibonacci numbers.
    pub fn fibonacci() -> Self {
        let mut g = InputSequence::indicator(&PartSet::new(vec![1, 2]).unwrap());
        g.name = "fibonacci".into();
        g
    }

    /// `g_n = C_{n-1}` (Catalan numbers shifted by one).
    pub fn catalan_shifted() -> Self {
        InputSequence::new("catalan", |n| crate::algebra::named::catalan_gf(n).coeff(n))
    }
}

impl InputSequence<Polynomial> {
    /// `g_n = (-1)^(n+1)/(n+1)! [x^(n+1) - (x-1)^(n+1)]`; row sums are
    /// `B_n(x)/n!`.
    pub fn bernoulli_polynomial() -> Self {
        InputSequence::new("bernoulli_polynomial", |n| {
            let x = Polynomial::x();
            let xm1 = Polynomial::linear(Rational::one(), -Rational::one());
            let diff = &x.pow(n as u32 + 1) - &xm1.pow(n as u32 + 1);
            diff.scale(&(Rational::sign_power(n + 1) / factorial_rational(n + 1)))
        })
    }
}

/// One node of a PI tree.
#[derive(Clone, PartialEq, Debug)]
pub struct PiNode<C = Rational> {
    pub multi_index: Vec<usize>,
    pub value: C,
}

impl<C> PiNode<C> {
    /// Row number, equal to the sum of the multi-index.
    pub fn depth(&self) -> usize {
        self.multi_index.iter().sum()
    }

    /// Mask of the composition this node encodes.
    pub fn mask(&self) -> u64 {
        Composition::new(self.multi_index.clone())
            .expect("multi-index parts are positive")
            .mask()
    }
}

fn put_one(index: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(index.len() + 1);
    out.push(1);
    out.extend_from_slice(index);
    out
}

fn increase(index: &[usize]) -> Vec<usize> {
    let mut out = index.to_vec();
    out[0] += 1;
    out
}

fn node<C: Ring>(table: &[C], multi_index: Vec<usize>) -> PiNode<C> {
    let value = multi_index
        .iter()
        .fold(C::one(), |acc, &k| acc.mul_ref(&table[k]));
    PiNode { multi_index, value }
}

/// Multi-indices of row `n`, left to right (P child before I child).
fn row_indices(n: usize) -> Vec<Vec<usize>> {
    let mut row = vec![vec![1]];
    for _ in 1..n {
        row = row
            .iter()
            .flat_map(|ix| [put_one(ix), increase(ix)])
            .collect();
    }
    row
}

/// Row `n` of the PI tree built on `g` (`2^(n-1)` nodes).
pub fn build_row<C: Ring>(g: &InputSequence<C>, n: usize) -> Result<Vec<PiNode<C>>> {
    guard("row", n, 1, MAX_ROW, "MAX_ROW: a row holds 2^(n-1) nodes")?;
    let table = g.table(n);
    Ok(row_indices(n)
        .into_iter()
        .map(|ix| node(&table, ix))
        .collect())
}

/// Row sums `[x_1, ..., x_n]` from `x_n = sum_{j=1}^n g_j x_{n-j}`, `x_0 = 1`.
pub fn row_sums<C: Ring>(g: &InputSequence<C>, n: usize) -> Vec<C> {
    let table = g.table(n);
    let mut x = vec![C::one()];
    for m in 1..=n {
        let mut acc = C::zero();
        for j in 1..=m {
            if !table[j].is_zero() {
                acc = acc.add_ref(&table[j].mul_ref(&x[m - j]));
            }
        }
        x.push(acc);
    }
    x.remove(0);
    x
}

/// `x_n`, by the convolution recurrence.
pub fn row_sum<C: Ring>(g: &InputSequence<C>, n: usize) -> Result<C> {
    guard("row", n, 1, usize::MAX, "")?;
    Ok(row_sums(g, n).pop().unwrap())
}

/// `x_n`, by materializing row `n` and adding its node values.
pub fn row_sum_from_tree<C: Ring>(g: &InputSequence<C>, n: usize) -> Result<C> {
    Ok(build_row(g, n)?
        .iter()
        .fold(C::zero(), |acc, nd| acc.add_ref(&nd.value)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labeling {
    Value,
    MultiIndex,
    Both,
}

impl FromStr for Labeling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Labeling> {
        match s {
            "value" => Ok(Labeling::Value),
            "multi_index" | "index" => Ok(Labeling::MultiIndex),
            "both" => Ok(Labeling::Both),
            _ => Err(Error::Parse {
                what: "labeling",
                input: s.into(),
            }),
        }
    }
}

fn node_id(row: usize, mask: u64) -> String {
    format!("n{row}_m{mask}")
}

fn index_label(ix: &[usize]) -> String {
    let items: Vec<String> = ix.iter().map(|k| k.to_string()).collect();
    format!("({})", items.join(","))
}

/// Renders the first `depth` rows as a Graphviz digraph. Node ids are
/// `n<row>_m<mask>`; P edges go left, I edges go right.
pub fn export_dot<C: Ring>(
    g: &InputSequence<C>,
    depth: usize,
    labeling: Labeling,
) -> Result<String> {
    guard(
        "depth",
        depth,
        1,
        MAX_DOT_DEPTH,
        "MAX_DOT_DEPTH: the tree has 2^depth - 1 nodes",
    )?;
    let table = g.table(depth);
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", g.name().replace('"', "'")));
    out.push_str("  node [shape=box];\n");
    let mut row = vec![vec![1usize]];
    for r in 1..=depth {
        for ix in &row {
            let nd = node(&table, ix.clone());
            let label = match labeling {
                Labeling::Value => nd.value.to_string(),
                Labeling::MultiIndex => index_label(ix),
                Labeling::Both => format!("{}\\n{}", index_label(ix), nd.value),
            };
            out.push_str(&format!(
                "  {} [label=\"{}\"];\n",
                node_id(r, nd.mask()),
                label
            ));
        }
        if r < depth {
            let mut next = Vec::with_capacity(row.len() * 2);
            for ix in &row {
                let from = node_id(
                    r,
                    PiNode {
                        multi_index: ix.clone(),
                        value: (),
                    }
                    .mask(),
                );
                for (op, child) in [("P", put_one(ix)), ("I", increase(ix))] {
                    let to = node_id(
                        r + 1,
                        PiNode {
                            multi_index: child.clone(),
                            value: (),
                        }
                        .mask(),
                    );
                    out.push_str(&format!("  {from} -> {to} [label=\"{op}\"];\n"));
                    next.push(child);
                }
            }
            row = next;
        }
    }
    out.push_str("}\n");
    Ok(out)
}
