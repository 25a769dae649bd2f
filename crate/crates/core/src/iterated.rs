//! Iterated composition sums: `f1 ∘ f2 ∘ ... ∘ fn` under every
//! parenthesization.
//!
//! A shape is a full binary tree whose leaves are the functions in order.
//! Each internal node gets one composition variable, numbered in preorder
//! (the root is `π1 ⊨ n`). A node hanging off the *left* of its parent
//! `π_j` sums over `π ⊨ |π_j|`; one hanging off the *right* sums over
//! `π ⊨ π_j`. A leaf on the left contributes `f_{|π_j|}`, on the right
//! `f_{π_j}`.
//!
//! Variables are compositions of compositions: a list of groups. `π ⊨ π_j`
//! picks one composition per (flattened) part of `π_j`; `π ⊨ |π_j|` picks
//! one composition per group length of `π_j`. Subscripting multiplies:
//! `f_π` over all parts, `f_{|π|}` over all group lengths.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{Rational, Series};
use crate::compositions;
use crate::compsum::{self, WeightSequence};
use crate::error::{guard, Error, Result};
use crate::pitree::InputSequence;

pub const MAX_SHAPE_LEAVES: usize = 8;
pub const MAX_LITERAL_FUNCTIONS: usize = 5;
pub const MAX_LITERAL_ORDER: usize = 10;

/// A full binary tree; leaves are numbered `1..n` left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParenShape {
    Leaf,
    Node(Box<ParenShape>, Box<ParenShape>),
}

impl ParenShape {
    pub fn node(left: ParenShape, right: ParenShape) -> ParenShape {
        ParenShape::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            ParenShape::Leaf => 1,
            ParenShape::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        self.leaves() - 1
    }

    /// `f1 ∘ (f2 ∘ f3)`-style rendering with the given leaf names.
    pub fn render(&self, names: &[String]) -> String {
        fn go(s: &ParenShape, names: &[String], next: &mut usize, top: bool) -> String {
            match s {
                ParenShape::Leaf => {
                    *next += 1;
                    names[*next - 1].clone()
                }
                ParenShape::Node(l, r) => {
                    let a = go(l, names, next, false);
                    let b = go(r, names, next, false);
                    if top {
                        format!("{a}∘{b}")
                    } else {
                        format!("({a}∘{b})")
                    }
                }
            }
        }
        go(self, names, &mut 0, true)
    }
}

impl fmt::Display for ParenShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.leaves()).map(|i| i.to_string()).collect();
        f.write_str(&self.render(&names))
    }
}

fn shapes(n: usize) -> Vec<ParenShape> {
    if n == 1 {
        return vec![ParenShape::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..n {
        let rights = shapes(n - k);
        for l in shapes(k) {
            for r in &rights {
                out.push(ParenShape::node(l.clone(), r.clone()));
            }
        }
    }
    out
}

/// All shapes with `n` leaves, ordered by left-subtree size, recursively.
pub fn enumerate_shapes(n: usize) -> Result<Vec<ParenShape>> {
    guard(
        "functions",
        n,
        2,
        MAX_SHAPE_LEAVES,
        "MAX_SHAPE_LEAVES: shape count grows like Catalan(n-1)",
    )?;
    Ok(shapes(n))
}

/// `π_j` (all parts) or `|π_j|` (group lengths); `j` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    Parts(usize),
    Length(usize),
}

impl Selector {
    pub fn var(&self) -> usize {
        match *self {
            Selector::Parts(j) | Selector::Length(j) => j,
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Parts(j) => write!(f, "π{j}"),
            Selector::Length(j) => write!(f, "|π{j}|"),
        }
    }
}

/// The range of summation variable `var`: `⊨ n` at the root, else `⊨ over`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub var: usize,
    pub over: Option<Selector>,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.over {
            None => write!(f, "π{} ⊨ n", self.var),
            Some(s) => write!(f, "π{} ⊨ {s}", self.var),
        }
    }
}

/// Nested summation read off a shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummationPlan {
    /// One per internal node, in preorder; a constraint only refers to
    /// earlier variables.
    pub constraints: Vec<Constraint>,
    /// Subscript of `f^(i)`, for `i = 1..n`.
    pub subscripts: Vec<Selector>,
}

impl fmt::Display for SummationPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.constraints.iter().map(|c| c.to_string()).collect();
        let fs: Vec<String> = self
            .subscripts
            .iter()
            .enumerate()
            .map(|(i, s)| format!("f{}_{{{s}}}", i + 1))
            .collect();
        write!(f, "{}; {}", cs.join(", "), fs.join(" "))
    }
}

pub fn plan_from_shape(shape: &ParenShape) -> SummationPlan {
    fn go(s: &ParenShape, over: Option<Selector>, plan: &mut SummationPlan) {
        match s {
            ParenShape::Leaf => plan.subscripts.push(over.expect("a lone leaf has no plan")),
            ParenShape::Node(l, r) => {
                let var = plan.constraints.len() + 1;
                plan.constraints.push(Constraint { var, over });
                go(l, Some(Selector::Length(var)), plan);
                go(r, Some(Selector::Parts(var)), plan);
            }
        }
    }
    let mut plan = SummationPlan {
        constraints: Vec::new(),
        subscripts: Vec::new(),
    };
    if matches!(shape, ParenShape::Node(..)) {
        go(shape, None, &mut plan);
    }
    plan
}

/// DOT rendering with edges labelled by the selector each child uses.
pub fn shape_to_dot(shape: &ParenShape, names: Option<&[String]>) -> String {
    let default: Vec<String> = (1..=shape.leaves()).map(|i| format!("f{i}")).collect();
    let names = names.unwrap_or(&default);

    struct Dot<'a> {
        names: &'a [String],
        nodes: Vec<String>,
        edges: Vec<String>,
        vars: usize,
        leaf: usize,
    }

    impl Dot<'_> {
        fn go(&mut self, s: &ParenShape) {
            let id = self.nodes.len();
            let label = s.render(&self.names[self.leaf..self.leaf + s.leaves()]);
            self.nodes.push(format!("  s{id} [label=\"{label}\"];"));
            match s {
                ParenShape::Leaf => self.leaf += 1,
                ParenShape::Node(l, r) => {
                    self.vars += 1;
                    let var = self.vars;
                    for (child, sel) in [(l, Selector::Length(var)), (r, Selector::Parts(var))] {
                        let c = self.nodes.len();
                        self.edges
                            .push(format!("  s{id} -> s{c} [label=\"{sel}\"];"));
                        self.go(child);
                    }
                }
            }
        }
    }

    let mut dot = Dot {
        names,
        nodes: Vec::new(),
        edges: Vec::new(),
        vars: 0,
        leaf: 0,
    };
    dot.go(shape);
    let mut out = String::from("digraph shape {\n  node [shape=box];\n");
    for line in dot.nodes.iter().chain(&dot.edges) {
        out.push_str(line);
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

fn check_functions(fs: &[Series], shape: &ParenShape, order: usize) -> Result<()> {
    if fs.len() != shape.leaves() {
        return Err(Error::InvalidArgument(format!(
            "shape has {} leaves but {} functions were given",
            shape.leaves(),
            fs.len()
        )));
    }
    if let Some(f) = fs.iter().find(|f| f.order() < order) {
        return Err(Error::InvalidArgument(format!(
            "series of order {} cannot give coefficients up to {order}",
            f.order()
        )));
    }
    for f in &fs[1..] {
        if !f.constant_term().is_zero() {
            return Err(Error::ConstantTermError {
                op: "compose",
                expected: "0",
                found: f.constant_term().to_string(),
            });
        }
    }
    Ok(())
}

type Multi = Vec<Vec<usize>>;

fn select(m: &Multi, s: Selector) -> Vec<usize> {
    match s {
        Selector::Parts(_) => m.iter().flatten().copied().collect(),
        Selector::Length(_) => m.iter().map(Vec::len).collect(),
    }
}

struct Literal<'a> {
    plan: &'a SummationPlan,
    coeffs: Vec<Vec<Rational>>,
    /// `by_var[i]`: functions whose subscript uses variable `i + 1`.
    by_var: Vec<Vec<usize>>,
    comps: Vec<Vec<Vec<usize>>>,
}

impl Literal<'_> {
    fn factor(&self, var: usize, m: &Multi) -> Rational {
        let mut acc = Rational::from(1);
        for &i in &self.by_var[var - 1] {
            for k in select(m, self.plan.subscripts[i]) {
                let c = &self.coeffs[i][k];
                if c.is_zero() {
                    return Rational::zero();
                }
                acc *= c;
            }
        }
        acc
    }

    fn level(&self, i: usize, vals: &mut Vec<Multi>, acc: &Rational, total: &mut Rational) {
        if i == self.plan.constraints.len() {
            *total += acc;
            return;
        }
        let c = self.plan.constraints[i];
        let targets = match c.over {
            None => unreachable!("root handled by caller"),
            Some(s) => select(&vals[s.var() - 1], s),
        };
        self.choose(i, &targets, &mut Vec::new(), vals, acc, total);
    }

    fn choose(
        &self,
        i: usize,
        targets: &[usize],
        groups: &mut Multi,
        vals: &mut Vec<Multi>,
        acc: &Rational,
        total: &mut Rational,
    ) {
        if groups.len() == targets.len() {
            let f = self.factor(i + 1, groups);
            if f.is_zero() {
                return;
            }
            vals.push(groups.clone());
            self.level(i + 1, vals, &(acc * &f), total);
            vals.pop();
            return;
        }
        for comp in &self.comps[targets[groups.len()]] {
            groups.push(comp.clone());
            self.choose(i, targets, groups, vals, acc, total);
            groups.pop();
        }
    }
}

/// Coefficients `0..=N` of the composed function, by summing the shape's
/// [`SummationPlan`] literally over chains of compositions.
pub fn evaluate_iterated(fs: &[Series], shape: &ParenShape, order: usize) -> Result<Vec<Rational>> {
    guard(
        "functions",
        fs.len(),
        2,
        MAX_LITERAL_FUNCTIONS,
        "MAX_LITERAL_FUNCTIONS: chain sums grow super-exponentially",
    )?;
    guard(
        "order",
        order,
        0,
        MAX_LITERAL_ORDER,
        "MAX_LITERAL_ORDER: chain sums grow super-exponentially",
    )?;
    check_functions(fs, shape, order)?;
    let plan = plan_from_shape(shape);
    let mut by_var = vec![Vec::new(); plan.constraints.len()];
    for (i, s) in plan.subscripts.iter().enumerate() {
        by_var[s.var() - 1].push(i);
    }
    let comps = (0..=order)
        .map(|k| {
            if k == 0 {
                Vec::new()
            } else {
                compositions::enumerate(k)
                    .expect("k is within the enumeration guard")
                    .map(|c| c.parts().to_vec())
                    .collect()
            }
        })
        .collect();
    let lit = Literal {
        plan: &plan,
        coeffs: fs.iter().map(|f| f.coeffs().to_vec()).collect(),
        by_var,
        comps,
    };

    let mut out = vec![fs[0].coeff(0)];
    for n in 1..=order {
        let mut total = Rational::zero();
        // the root variable ranges over compositions of n
        lit.choose(
            0,
            &[n],
            &mut Vec::new(),
            &mut Vec::new(),
            &Rational::from(1),
            &mut total,
        );
        out.push(total);
    }
    Ok(out)
}

/// Same coefficients, computed bottom-up: each internal node's value at
/// `m` is the composition sum `sum_{π ⊨ m} L_{|π|} R_π` over its
/// children's (memoized) values.
pub fn evaluate_iterated_memo(
    fs: &[Series],
    shape: &ParenShape,
    order: usize,
) -> Result<Vec<Rational>> {
    guard(
        "order",
        order,
        0,
        compsum::MAX_BRUTE,
        "MAX_BRUTE: 2^(m-1) compositions per coefficient",
    )?;
    check_functions(fs, shape, order)?;
    fn go(s: &ParenShape, fs: &[Series], next: &mut usize, order: usize) -> Result<Series> {
        match s {
            ParenShape::Leaf => {
                *next += 1;
                Ok(fs[*next - 1].truncate(order))
            }
            ParenShape::Node(l, r) => {
                let outer = go(l, fs, next, order)?;
                let inner = go(r, fs, next, order)?;
                let f = WeightSequence::from_series("outer", &outer);
                let g = InputSequence::from_series("inner", &inner);
                let mut c = vec![outer.coeff(0)];
                for m in 1..=order {
                    c.push(compsum::weighted_comp_sum_brute(&f, &g, m)?);
                }
                Ok(Series::new(c, order))
            }
        }
    }
    Ok(go(shape, fs, &mut 0, order)?.into_coeffs())
}

/// Oracle: nested series composition in the shape's grouping.
pub fn evaluate_nested_series(
    fs: &[Series],
    shape: &ParenShape,
    order: usize,
) -> Result<Vec<Rational>> {
    check_functions(fs, shape, order)?;
    fn go(s: &ParenShape, fs: &[Series], next: &mut usize, order: usize) -> Result<Series> {
        match s {
            ParenShape::Leaf => {
                *next += 1;
                Ok(fs[*next - 1].truncate(order))
            }
            ParenShape::Node(l, r) => {
                let outer = go(l, fs, next, order)?;
                let inner = go(r, fs, next, order)?;
                outer.compose(&inner)
            }
        }
    }
    Ok(go(shape, fs, &mut 0, order)?.into_coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{named, rat};
    use crate::sequences::catalan;
    use num_bigint::BigInt;

    fn show(shapes: &[ParenShape]) -> Vec<String> {
        shapes.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn shape_counts() {
        assert_eq!(show(&enumerate_shapes(2).unwrap()), ["1∘2"]);
        assert_eq!(
            show(&enumerate_shapes(4).unwrap()),
            [
                "1∘(2∘(3∘4))",
                "1∘((2∘3)∘4)",
                "(1∘2)∘(3∘4)",
                "(1∘(2∘3))∘4",
                "((1∘2)∘3)∘4"
            ]
        );
        assert_eq!(enumerate_shapes(6).unwrap().len(), 42);
        let c = catalan(7);
        for n in 2..=8 {
            assert_eq!(BigInt::from(enumerate_shapes(n).unwrap().len()), c[n - 1]);
        }
        assert!(enumerate_shapes(1).is_err());
        assert!(matches!(enumerate_shapes(9), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn plans() {
        let four = enumerate_shapes(4).unwrap();
        assert_eq!(
            plan_from_shape(&four[3]).to_string(),
            "π1 ⊨ n, π2 ⊨ |π1|, π3 ⊨ π2; f1_{|π2|} f2_{|π3|} f3_{π3} f4_{π1}"
        );
        assert_eq!(
            plan_from_shape(&four[0]).to_string(),
            "π1 ⊨ n, π2 ⊨ π1, π3 ⊨ π2; f1_{|π1|} f2_{|π2|} f3_{|π3|} f4_{π3}"
        );
        assert_eq!(
            plan_from_shape(&four[2]).to_string(),
            "π1 ⊨ n, π2 ⊨ |π1|, π3 ⊨ π1; f1_{|π2|} f2_{π2} f3_{|π3|} f4_{π3}"
        );
        let two = &enumerate_shapes(2).unwrap()[0];
        assert_eq!(
            plan_from_shape(two).to_string(),
            "π1 ⊨ n; f1_{|π1|} f2_{π1}"
        );
    }

    #[test]
    fn dot_labels() {
        let four = enumerate_shapes(4).unwrap();
        let dot = shape_to_dot(&four[3], None);
        let labels: Vec<&str> = dot
            .lines()
            .filter(|l| l.contains("->"))
            .map(|l| l.split("label=\"").nth(1).unwrap().trim_end_matches("\"];"))
            .collect();
        assert_eq!(labels, ["|π1|", "|π2|", "π2", "|π3|", "π3", "π1"]);
        for n in 2..=6 {
            for s in enumerate_shapes(n).unwrap() {
                assert_eq!(shape_to_dot(&s, None).matches("->").count(), 2 * (n - 1));
            }
        }
        let two = shape_to_dot(&enumerate_shapes(2).unwrap()[0], None);
        assert!(two.contains("label=\"f1∘f2\""));
    }

    #[test]
    fn two_functions_is_weighted_sum() {
        let f = named::log1p(8);
        let g = named::geometric(8);
        let shape = &enumerate_shapes(2).unwrap()[0];
        let lit = evaluate_iterated(&[f.clone(), g.clone()], shape, 8).unwrap();
        let w = compsum::weighted_comp_sum(
            &WeightSequence::from_series("f", &f),
            &InputSequence::from_series("g", &g),
            8,
        );
        assert_eq!(lit, w);
    }

    #[test]
    fn triple_geometric() {
        // z/(1-z) three times is z/(1-3z)
        let g = named::geometric(6);
        for s in enumerate_shapes(3).unwrap() {
            let v = evaluate_iterated(&[g.clone(), g.clone(), g.clone()], &s, 6).unwrap();
            assert_eq!(v[3], rat(9, 1));
            assert_eq!(
                v,
                evaluate_nested_series(&[g.clone(), g.clone(), g.clone()], &s, 6).unwrap()
            );
        }
    }

    #[test]
    fn all_shapes_agree_with_the_oracle() {
        let fs = vec![
            named::exp(8),
            named::geometric(8),
            named::log1p(8).add(&Series::from_fn(8, |k| {
                if k == 2 {
                    rat(1, 1)
                } else {
                    rat(0, 1)
                }
            })),
            named::catalan_gf(8),
        ];
        let shapes = enumerate_shapes(4).unwrap();
        let oracle = evaluate_nested_series(&fs, &shapes[0], 8).unwrap();
        for s in &shapes {
            assert_eq!(evaluate_iterated(&fs, s, 8).unwrap(), oracle, "{s}");
            assert_eq!(evaluate_iterated_memo(&fs, s, 8).unwrap(), oracle, "{s}");
            assert_eq!(evaluate_nested_series(&fs, s, 8).unwrap(), oracle, "{s}");
        }
    }

    #[test]
    fn rejects_non_composable() {
        let shape = &enumerate_shapes(2).unwrap()[0];
        let e = evaluate_iterated(&[named::exp(4), named::exp(4)], shape, 4);
        assert!(matches!(e, Err(Error::ConstantTermError { .. })));
        assert!(evaluate_iterated(&[named::exp(4)], shape, 4).is_err());
    }
}
