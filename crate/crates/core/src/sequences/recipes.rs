//! One table binding each named sequence to its closed form and to the
//! composition-sum route that reproduces it. Tests, `verify` and the
//! `sequence` subcommand all read from here.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde_json::{json, Value};

use super::*;
use crate::algebra::{named, Polynomial, Rational, Series};
use crate::compositions::PartSet;
use crate::compsum::{self, WeightSequence};
use crate::error::{guard, Error, Result};
use crate::pitree::{self, InputSequence};
use crate::verify::IdentityReport;

/// Largest order accepted by the registry.
pub const MAX_ORDER: usize = 200;

/// Which composition sum reproduces a recipe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// PI-tree row sums `sum_pi g_pi`, i.e. `g/(1-g)`.
    RowSums,
    /// Weighted sums `sum_pi f_|pi| g_pi`, i.e. `f(g)`.
    Weighted,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::RowSums => "row_sums",
            Relation::Weighted => "weighted",
        })
    }
}

/// Values at indices `0..=N`.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceValues {
    Rational(Vec<Rational>),
    Polynomial(Vec<Polynomial>),
}

impl SequenceValues {
    pub fn len(&self) -> usize {
        match self {
            SequenceValues::Rational(v) => v.len(),
            SequenceValues::Polynomial(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn strings(&self) -> Vec<String> {
        match self {
            SequenceValues::Rational(v) => v.iter().map(|c| c.to_string()).collect(),
            SequenceValues::Polynomial(v) => v.iter().map(|c| c.to_string()).collect(),
        }
    }
}

/// `key=value` parameters, kept sorted so output is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Params {
        Params::default()
    }

    /// Parses `["p=2", "a=1/2"]`.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Params> {
        let mut map = BTreeMap::new();
        for item in items {
            let item = item.as_ref();
            let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse {
                what: "parameter (expected key=value)",
                input: item.to_string(),
            })?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Params(map))
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Params {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    fn raw(&self, key: &str) -> &str {
        self.get(key)
            .expect("resolved params carry every declared key")
    }

    fn rational(&self, key: &'static str) -> Result<Rational> {
        self.raw(key).parse().map_err(|_| Error::Parse {
            what: key,
            input: self.raw(key).to_string(),
        })
    }

    fn int(&self, key: &'static str) -> Result<i64> {
        self.raw(key).parse().map_err(|_| Error::Parse {
            what: key,
            input: self.raw(key).to_string(),
        })
    }

    fn parts(&self, key: &'static str) -> Result<PartSet> {
        self.raw(key).parse()
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.0.iter().map(|(k, v)| (k.clone(), json!(v))).collect())
    }
}

type Realization = fn(&Params, usize) -> Result<SequenceValues>;

/// A named sequence with two independent realizations.
pub struct SequenceRecipe {
    pub name: &'static str,
    pub description: &'static str,
    /// Declared parameters with their defaults.
    pub params: &'static [(&'static str, &'static str)],
    pub relation: Relation,
    closed: Realization,
    composition: Realization,
}

impl fmt::Debug for SequenceRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SequenceRecipe({})", self.name)
    }
}

impl SequenceRecipe {
    /// Fills in defaults and rejects undeclared keys.
    pub fn resolve(&self, given: &Params) -> Result<Params> {
        for key in given.0.keys() {
            if !self.params.iter().any(|(k, _)| k == key) {
                return Err(Error::InvalidArgument(format!(
                    "sequence '{}' has no parameter '{key}'",
                    self.name
                )));
            }
        }
        let mut out = Params::new();
        for (k, default) in self.params {
            out = out.with(k, given.get(k).unwrap_or(default));
        }
        Ok(out)
    }

    /// Values `0..=N` from the closed-form generating function.
    pub fn closed_form(&self, params: &Params, order: usize) -> Result<SequenceValues> {
        guard("order", order, 0, MAX_ORDER, "MAX_ORDER: registry limit")?;
        (self.closed)(&self.resolve(params)?, order)
    }

    /// Values `0..=N` from the composition sum named by [`Self::relation`].
    pub fn composition_path(&self, params: &Params, order: usize) -> Result<SequenceValues> {
        guard("order", order, 0, MAX_ORDER, "MAX_ORDER: registry limit")?;
        (self.composition)(&self.resolve(params)?, order)
    }

    /// Compares both realizations index by index.
    pub fn check(&self, params: &Params, order: usize) -> Result<IdentityReport> {
        let resolved = self.resolve(params)?;
        let inputs = format!("{} {}", self.name, resolved.to_json());
        let a = self.closed_form(&resolved, order)?;
        let b = self.composition_path(&resolved, order)?;
        let identity = format!("recipe:{}", self.name);
        let range = (0, order);
        Ok(match (a, b) {
            (SequenceValues::Rational(a), SequenceValues::Rational(b)) => {
                IdentityReport::compare(&identity, range, &inputs, zip(a, b))
            }
            (SequenceValues::Polynomial(a), SequenceValues::Polynomial(b)) => {
                IdentityReport::compare(&identity, range, &inputs, zip(a, b))
            }
            _ => unreachable!("both realizations share a coefficient ring"),
        })
    }
}

fn zip<T>(a: Vec<T>, b: Vec<T>) -> Vec<(usize, T, T)> {
    a.into_iter()
        .zip(b)
        .enumerate()
        .map(|(n, (x, y))| (n, x, y))
        .collect()
}

/// `[1, x_1, ..., x_N]` from PI-tree row sums.
fn row_sums_from_one<C: crate::algebra::Ring>(g: &InputSequence<C>, order: usize) -> Vec<C> {
    let mut out = vec![C::one()];
    out.extend(pitree::row_sums(g, order));
    out
}

fn unsigned(params: &Params, key: &'static str) -> Result<usize> {
    let v = params.int(key)?;
    usize::try_from(v).map_err(|_| Error::RangeError {
        what: key,
        value: v.to_string(),
        range: "[1, inf)".into(),
    })
}

fn bernoulli_closed(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(bernoulli_numbers(n)))
}

// z/(e^z - 1) = L(e^z - 1) with L(w) = log(1+w)/w
fn bernoulli_weighted(_: &Params, n: usize) -> Result<SequenceValues> {
    let f = WeightSequence::log1p_over_z();
    let g = InputSequence::from_series("e^z - 1", &named::exp_minus_one(n));
    Ok(SequenceValues::Rational(scale_by_factorial(
        compsum::weighted_comp_sum(&f, &g, n),
    )))
}

fn woon_closed(_: &Params, n: usize) -> Result<SequenceValues> {
    let b = bernoulli_numbers(n);
    Ok(SequenceValues::Rational(
        b.into_iter()
            .enumerate()
            .map(|(k, v)| v * Rational::sign_power(k) / crate::algebra::factorial_rational(k))
            .collect(),
    ))
}

fn woon_tree(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(row_sums_from_one(
        &InputSequence::woon(),
        n,
    )))
}

fn norlund_closed(p: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(norlund_numbers(n, p.int("p")?)))
}

fn norlund_tree(p: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(norlund_via_tree(
        n,
        unsigned(p, "p")?,
    )?))
}

fn hypergeometric_closed(p: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(hypergeometric_bernoulli(
        n,
        &p.rational("a")?,
        &p.rational("b")?,
    )?))
}

fn hypergeometric_tree(p: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(hypergeometric_via_tree(
        n,
        &p.rational("a")?,
        &p.rational("b")?,
    )?))
}

fn catalan_closed(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(
        catalan(n).into_iter().map(Rational::from_integer).collect(),
    ))
}

fn catalan_tree(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(row_sums_from_one(
        &InputSequence::catalan_shifted(),
        n,
    )))
}

// 1/(1 - sum_{j in J} z^j)
fn restricted_series(parts: &PartSet, n: usize) -> Vec<Rational> {
    Series::one(n).add(&restricted_gf(parts, n)).into_coeffs()
}

fn fibonacci_closed(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(restricted_series(
        &PartSet::new(vec![1, 2])?,
        n,
    )))
}

fn fibonacci_tree(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(row_sums_from_one(
        &InputSequence::fibonacci(),
        n,
    )))
}

fn restricted_closed(p: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Rational(restricted_series(
        &p.parts("parts")?,
        n,
    )))
}

fn restricted_tree(p: &Params, n: usize) -> Result<SequenceValues> {
    let g = InputSequence::indicator(&p.parts("parts")?);
    Ok(SequenceValues::Rational(row_sums_from_one(&g, n)))
}

// e^{2xz - z^2}
fn hermite_closed(_: &Params, n: usize) -> Result<SequenceValues> {
    let mut c = vec![Polynomial::default(); n + 1];
    if n >= 1 {
        c[1] = Polynomial::monomial(Rational::from(2), 1);
    }
    if n >= 2 {
        c[2] = Polynomial::constant(-Rational::one());
    }
    let e = Series::new(c, n).exp()?;
    Ok(SequenceValues::Polynomial(scale_by_factorial(
        e.into_coeffs(),
    )))
}

fn hermite_tree(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Polynomial(scale_by_factorial(
        row_sums_from_one(&hermite_input(), n),
    )))
}

fn bernoulli_polynomial_closed(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Polynomial(bernoulli_polynomials(n)))
}

fn bernoulli_polynomial_tree(_: &Params, n: usize) -> Result<SequenceValues> {
    Ok(SequenceValues::Polynomial(bernoulli_polynomials_by_tree(n)))
}

pub static RECIPES: &[SequenceRecipe] = &[
    SequenceRecipe {
        name: "bernoulli",
        description: "Bernoulli numbers B_n, coefficients of z/(e^z-1) times n!",
        params: &[],
        relation: Relation::Weighted,
        closed: bernoulli_closed,
        composition: bernoulli_weighted,
    },
    SequenceRecipe {
        name: "woon",
        description: "row sums of Woon's tree, (-1)^n B_n/n!",
        params: &[],
        relation: Relation::RowSums,
        closed: woon_closed,
        composition: woon_tree,
    },
    SequenceRecipe {
        name: "norlund",
        description: "Norlund numbers B_n^(p), coefficients of (z/(e^z-1))^p times n!",
        params: &[("p", "2")],
        relation: Relation::RowSums,
        closed: norlund_closed,
        composition: norlund_tree,
    },
    SequenceRecipe {
        name: "hypergeometric",
        description: "hypergeometric Bernoulli numbers B_n^(a,b), from 1/1F1(a; a+b; z)",
        params: &[("a", "1"), ("b", "1")],
        relation: Relation::RowSums,
        closed: hypergeometric_closed,
        composition: hypergeometric_tree,
    },
    SequenceRecipe {
        name: "catalan",
        description: "Catalan numbers C_n",
        params: &[],
        relation: Relation::RowSums,
        closed: catalan_closed,
        composition: catalan_tree,
    },
    SequenceRecipe {
        name: "fibonacci",
        description: "compositions into parts 1 and 2, F_(n+1)",
        params: &[],
        relation: Relation::RowSums,
        closed: fibonacci_closed,
        composition: fibonacci_tree,
    },
    SequenceRecipe {
        name: "restricted",
        description: "number of compositions of n with parts in a set J",
        params: &[("parts", "1,2")],
        relation: Relation::RowSums,
        closed: restricted_closed,
        composition: restricted_tree,
    },
    SequenceRecipe {
        name: "hermite",
        description: "Hermite polynomials H_n(x), from e^(2xz - z^2)",
        params: &[],
        relation: Relation::RowSums,
        closed: hermite_closed,
        composition: hermite_tree,
    },
    SequenceRecipe {
        name: "bernoulli_polynomial",
        description: "Bernoulli polynomials B_n(x), from z e^(zx)/(e^z-1)",
        params: &[],
        relation: Relation::RowSums,
        closed: bernoulli_polynomial_closed,
        composition: bernoulli_polynomial_tree,
    },
];

/// Looks up a recipe by name.
pub fn find(name: &str) -> Result<&'static SequenceRecipe> {
    RECIPES.iter().find(|r| r.name == name).ok_or_else(|| {
        let known: Vec<&str> = RECIPES.iter().map(|r| r.name).collect();
        Error::InvalidArgument(format!(
            "unknown sequence '{name}' (known: {})",
            known.join(", ")
        ))
    })
}
