//! Cross-path identity checks and their reports.
//!
//! Every check evaluates the same quantity along independent routes
//! (brute-force enumeration, series algebra, convolution formulas, closed
//! forms) and demands exact equality. A failed check keeps the mismatch
//! with the smallest `n` as its witness.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::algebra::{binomial_rational, named, rat, Rational, Series};
use crate::compositions::{self, PartSet};
use crate::compsum::{self, WeightSequence};
use crate::error::{guard, Error, Result};
use crate::iterated;
use crate::pitree::{self, InputSequence};
use crate::sequences::{self, BernoulliForm, SequenceValues};

pub const MAX_VERIFY_N: usize = 20;

/// A concrete disagreement between two evaluation paths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub inputs: String,
    pub left: String,
    pub right: String,
}

/// Outcome of checking one identity over a range of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub n_range: (usize, usize),
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub fn pass(identity: &str, n_range: (usize, usize)) -> IdentityReport {
        IdentityReport {
            identity: identity.to_string(),
            n_range,
            witness: None,
        }
    }

    pub fn fail(identity: &str, n_range: (usize, usize), witness: Witness) -> IdentityReport {
        IdentityReport {
            identity: identity.to_string(),
            n_range,
            witness: Some(witness),
        }
    }

    /// Compares `(n, left, right)` triples; the witness is the mismatch with
    /// the smallest `n`.
    pub fn compare<T: PartialEq + fmt::Display>(
        identity: &str,
        n_range: (usize, usize),
        inputs: &str,
        pairs: impl IntoIterator<Item = (usize, T, T)>,
    ) -> IdentityReport {
        let witness = pairs
            .into_iter()
            .filter(|(_, a, b)| a != b)
            .min_by_key(|(n, _, _)| *n)
            .map(|(n, a, b)| Witness {
                n,
                inputs: inputs.to_string(),
                left: a.to_string(),
                right: b.to_string(),
            });
        IdentityReport {
            identity: identity.to_string(),
            n_range,
            witness,
        }
    }

    /// A check at a single `n`.
    pub fn single<T: PartialEq + fmt::Display>(
        identity: &str,
        n: usize,
        inputs: String,
        left: T,
        right: T,
    ) -> IdentityReport {
        IdentityReport::compare(identity, (n, n), &inputs, [(n, left, right)])
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "identity": self.identity,
            "n_range": [self.n_range.0, self.n_range.1],
            "status": self.status(),
        });
        if let Some(w) = &self.witness {
            v["witness"] = json!({
                "n": w.n,
                "inputs": w.inputs,
                "left": w.left,
                "right": w.right,
            });
        }
        v
    }
}

/// Accumulates comparisons for one identity, keeping the smallest-`n`
/// mismatch.
struct Check {
    identity: String,
    range: (usize, usize),
    witness: Option<Witness>,
}

impl Check {
    fn new(identity: &str, lo: usize, hi: usize) -> Check {
        Check {
            identity: identity.to_string(),
            range: (lo, hi),
            witness: None,
        }
    }

    fn record(&mut self, n: usize, inputs: &str, left: String, right: String) {
        if self.witness.as_ref().is_none_or(|w| n < w.n) {
            self.witness = Some(Witness {
                n,
                inputs: inputs.to_string(),
                left,
                right,
            });
        }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, n: usize, inputs: &str, left: &T, right: &T) {
        if left != right {
            self.record(n, inputs, left.to_string(), right.to_string());
        }
    }

    fn ok<T>(&mut self, n: usize, inputs: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.record(n, inputs, format!("error: {e}"), "a value".into());
                None
            }
        }
    }

    fn truth(&mut self, n: usize, inputs: &str, holds: bool, what: &str) {
        if !holds {
            self.record(n, inputs, what.to_string(), "holds".into());
        }
    }

    fn merge(&mut self, r: IdentityReport) {
        if let Some(w) = r.witness {
            self.record(w.n, &w.inputs, w.left, w.right);
        }
    }

    fn done(self) -> IdentityReport {
        IdentityReport {
            identity: self.identity,
            n_range: self.range,
            witness: self.witness,
        }
    }
}

/// A group of identity checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Compositions,
    Pitree,
    Compsum,
    Sequences,
    Iterated,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "compositions",
        "pitree",
        "compsum",
        "sequences",
        "iterated",
        "all",
    ];
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Ok(match s {
            "compositions" => Suite::Compositions,
            "pitree" => Suite::Pitree,
            "compsum" => Suite::Compsum,
            "sequences" => Suite::Sequences,
            "iterated" => Suite::Iterated,
            "all" => Suite::All,
            _ => {
                return Err(Error::Parse {
                    what: "suite",
                    input: s.into(),
                })
            }
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = *self as usize;
        f.write_str(Suite::NAMES[i])
    }
}

/// Runs a suite with every range capped at `max_n`.
pub fn run_suite(suite: Suite, max_n: usize) -> Result<Vec<IdentityReport>> {
    guard(
        "max-n",
        max_n,
        2,
        MAX_VERIFY_N,
        "MAX_VERIFY_N: brute-force paths enumerate 2^(n-1) compositions",
    )?;
    Ok(match suite {
        Suite::Compositions => compositions_suite(max_n),
        Suite::Pitree => pitree_suite(max_n),
        Suite::Compsum => compsum_suite(max_n),
        Suite::Sequences => sequences_suite(max_n),
        Suite::Iterated => iterated_suite(max_n),
        Suite::All => {
            let mut out = compositions_suite(max_n);
            out.extend(pitree_suite(max_n));
            out.extend(compsum_suite(max_n));
            out.extend(sequences_suite(max_n));
            out.extend(iterated_suite(max_n));
            out
        }
    })
}

/// Deterministic small rationals with mixed signs and zeros.
pub fn mixed_rationals() -> InputSequence {
    InputSequence::new("mixed", |n| {
        let num = (7 * n as i64 + 3) % 5 - 2;
        let den = (n as i64 % 3) + 1;
        rat(num, den)
    })
}

/// The input sequences every compsum check runs over.
pub fn input_battery() -> Vec<InputSequence> {
    vec![
        InputSequence::woon(),
        InputSequence::bernoulli(),
        InputSequence::catalan_shifted(),
        InputSequence::fibonacci(),
        InputSequence::indicator(&PartSet::new(vec![1, 3, 5, 7, 9, 11, 13, 15, 17, 19]).unwrap()),
        mixed_rationals(),
    ]
}

/// The weights every weighted check runs over.
pub fn weight_battery() -> Vec<WeightSequence> {
    vec![
        WeightSequence::geometric(),
        WeightSequence::log1p(),
        WeightSequence::exp_minus_one(),
        WeightSequence::inverse_power(2),
    ]
}

fn part_sets(n: usize) -> Vec<PartSet> {
    let mut v: Vec<PartSet> = [[1, 2], [1, 3], [2, 3]]
        .iter()
        .map(|p| PartSet::new(p.to_vec()).unwrap())
        .collect();
    v.push(PartSet::odd_up_to(n.max(1)).unwrap());
    v
}

fn compositions_suite(max_n: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();

    let hi = max_n.min(20);
    let mut c = Check::new("compositions_count_2^(n-1)", 1, hi);
    for n in 1..=hi {
        let count = compositions::enumerate(n).unwrap().count();
        c.eq(n, "", &count, &(1usize << (n - 1)));
    }
    out.push(c.done());

    let hi = max_n.min(16);
    let mut c = Check::new("from_mask_bijection", 1, hi);
    for n in 1..=hi {
        let listed: Vec<_> = compositions::enumerate(n).unwrap().collect();
        for (mask, pi) in listed.iter().enumerate() {
            let back = compositions::from_mask(n, mask as u64).unwrap();
            c.eq(n, &format!("mask={mask}"), &back, pi);
            c.eq(n, &format!("composition {pi}"), &pi.mask(), &(mask as u64));
        }
        let mut sorted: Vec<Vec<usize>> = listed.iter().map(|p| p.parts().to_vec()).collect();
        sorted.sort();
        sorted.dedup();
        c.eq(n, "distinct compositions", &sorted.len(), &listed.len());
    }
    out.push(c.done());

    let mut c = Check::new("part_count_is_s2(mask)+1", 1, hi);
    for n in 1..=hi {
        for pi in compositions::enumerate(n).unwrap() {
            let s = compositions::digit_sum_s2(pi.mask()) as usize + 1;
            c.eq(n, &format!("composition {pi}"), &pi.len(), &s);
        }
    }
    out.push(c.done());

    let mut c = Check::new("restricted_count", 1, hi);
    for n in 1..=hi {
        for j in part_sets(n) {
            let inputs = format!("J={j}");
            let filtered = compositions::enumerate(n)
                .unwrap()
                .filter(|pi| pi.parts().iter().all(|&k| j.contains(k)))
                .count();
            let lazy = compositions::enumerate_restricted(n, &j).count();
            let counted = compositions::count_restricted(n, &j);
            c.eq(n, &inputs, &BigInt::from(filtered), &BigInt::from(counted));
            c.eq(n, &inputs, &lazy, &filtered);
        }
    }
    out.push(c.done());
    out
}

fn pitree_suite(max_n: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let hi = max_n.min(14);

    let mut c = Check::new("pi_tree_rows_are_compositions", 1, hi);
    let g = InputSequence::woon();
    for n in 1..=hi {
        let Some(row) = c.ok(n, "", pitree::build_row(&g, n)) else {
            continue;
        };
        let mut ix: Vec<Vec<usize>> = row.iter().map(|nd| nd.multi_index.clone()).collect();
        let mut comps: Vec<Vec<usize>> = compositions::enumerate(n)
            .unwrap()
            .map(|p| p.parts().to_vec())
            .collect();
        ix.sort();
        comps.sort();
        c.truth(n, "", ix == comps, "row multi-indices = compositions");
        c.truth(
            n,
            "",
            row.iter().all(|nd| nd.depth() == n),
            "node index sums equal the row",
        );
    }
    out.push(c.done());

    let mut c = Check::new("row_sum_tree=recursion=g/(1-g)", 1, hi);
    for g in input_battery() {
        let rec = pitree::row_sums(&g, hi);
        let series = compsum::comp_sum(&g, hi);
        for n in 1..=hi {
            if let Some(t) = c.ok(n, g.name(), pitree::row_sum_from_tree(&g, n)) {
                c.eq(n, g.name(), &t, &rec[n - 1]);
            }
            c.eq(n, g.name(), &rec[n - 1], &series[n - 1]);
        }
    }
    out.push(c.done());

    let hi12 = max_n.min(12);
    let mut c = Check::new("woon_row_sums=(-1)^n B_n/n!", 1, hi12);
    let rows = pitree::row_sums(&InputSequence::woon(), hi12);
    let shown = [rat(1, 2), rat(1, 12), rat(0, 1), rat(-1, 720)];
    for (n, v) in shown.iter().enumerate().take(hi12) {
        c.eq(n + 1, "woon", &rows[n], v);
    }
    let b = sequences::bernoulli_numbers(hi12);
    for n in 1..=hi12 {
        let target = &b[n] * &Rational::sign_power(n) / crate::algebra::factorial_rational(n);
        c.eq(n, "woon", &rows[n - 1], &target);
    }
    out.push(c.done());
    out
}

fn compsum_suite(max_n: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let hi = max_n.min(14);
    let g0 = compsum::convolution_g0::<Rational>();
    let gs = input_battery();

    let mut c = Check::new("comp_sum_brute=series=convolution", 1, hi);
    for g in &gs {
        let series = compsum::comp_sum(g, hi);
        let conv = compsum::comp_sum_convolution(g, &g0, hi);
        for n in 1..=hi {
            if let Some(b) = c.ok(n, g.name(), compsum::comp_sum_brute(g, n)) {
                c.eq(n, g.name(), &b, &series[n - 1]);
            }
            c.eq(n, g.name(), &conv[n - 1], &series[n - 1]);
        }
    }
    out.push(c.done());

    let mut c = Check::new("comp_sum_inverse_brute=series=convolution", 1, hi);
    for g in &gs {
        let x = InputSequence::from_table(g.name(), compsum::comp_sum(g, hi));
        let series = compsum::comp_sum_inverse(&x, hi);
        let conv = compsum::comp_sum_inverse_convolution(&x, &Rational::one(), hi);
        for n in 1..=hi {
            if let Some(b) = c.ok(n, g.name(), compsum::comp_sum_inverse_brute(&x, n)) {
                c.eq(n, g.name(), &b, &series[n - 1]);
            }
            c.eq(n, g.name(), &conv[n - 1], &series[n - 1]);
        }
    }
    out.push(c.done());

    let hi12 = max_n.min(12);
    let mut c = Check::new("inversion_round_trip", 1, hi12);
    for g in &gs {
        let x = compsum::comp_sum(g, hi12);
        let back = compsum::comp_sum_inverse(&InputSequence::from_table("x", x.clone()), hi12);
        let again = compsum::comp_sum(&InputSequence::from_table("g", back.clone()), hi12);
        for n in 1..=hi12 {
            c.eq(n, g.name(), &back[n - 1], &g.term(n));
            c.eq(n, g.name(), &again[n - 1], &x[n - 1]);
        }
        // and from the other side: x -> g -> x with x taken as the input
        let fwd = compsum::comp_sum(
            &InputSequence::from_table("g'", compsum::comp_sum_inverse(g, hi12)),
            hi12,
        );
        for n in 1..=hi12 {
            c.eq(n, g.name(), &fwd[n - 1], &g.term(n));
        }
    }
    out.push(c.done());

    let mut c = Check::new("sign_exchange", 1, hi12);
    for g in &gs {
        let x = compsum::comp_sum(g, hi12);
        let minus_x = InputSequence::from_table("-x", x.iter().map(|v| -v).collect());
        let y = compsum::comp_sum(&minus_x, hi12);
        for n in 1..=hi12 {
            c.eq(n, g.name(), &y[n - 1], &-g.term(n));
        }
    }
    out.push(c.done());

    let mut c = Check::new("complete_vs_incomplete_sums", 1, max_n.min(8));
    let w: Vec<Rational> = (0..=8)
        .map(|k| {
            if k == 0 {
                Rational::one()
            } else {
                rat(k as i64 % 3 - 1, k as i64)
            }
        })
        .collect();
    for n in 1..=max_n.min(8) {
        for m in 1..=n {
            let lhs = compsum::multinomial_sum(&w, m, n, false);
            let rhs: Rational = (1..=m)
                .map(|p| {
                    Rational::sign_power(m - p)
                        * binomial_rational(m, p)
                        * compsum::multinomial_sum(&w, p, n, true)
                })
                .sum();
            c.eq(n, &format!("m={m}"), &lhs, &rhs);
        }
    }
    out.push(c.done());

    let mut c = Check::new("weighted_brute=series=convolution", 0, hi);
    for f in weight_battery() {
        for g in &gs {
            let inputs = format!("f={}, g={}", f.name(), g.name());
            let series = compsum::weighted_comp_sum(&f, g, hi);
            let conv = compsum::weighted_convolution(&f, g, &g0, hi);
            for n in 0..=hi {
                if let Some(b) = c.ok(n, &inputs, compsum::weighted_comp_sum_brute(&f, g, n)) {
                    c.eq(n, &inputs, &b, &series[n]);
                }
                c.eq(n, &inputs, &conv[n], &series[n]);
            }
        }
    }
    out.push(c.done());

    let mut c = Check::new("norlund_inner_weight", 0, max_n.min(8));
    for q in 1..=4usize {
        for n in 0..=max_n.min(8) {
            for p in 0..=n {
                let lhs: Rational = (p..=n)
                    .map(|m| binomial_rational(m, p) * binomial_rational(m + q - 1, q - 1))
                    .sum();
                let rhs = Rational::new((n - p + 1) as i64, (p + q) as i64)
                    * binomial_rational(n + 1, p)
                    * binomial_rational(n + q, q - 1);
                c.eq(n, &format!("q={q}, p={p}"), &lhs, &rhs);
            }
        }
    }
    out.push(c.done());

    let mut c = Check::new("parts_sum_brute=series", 1, hi);
    for f in weight_battery() {
        for g in &gs {
            let inputs = format!("f={}, g={}", f.name(), g.name());
            let series = compsum::parts_sum(&f, g, hi);
            for n in 1..=hi {
                if let Some(b) = c.ok(n, &inputs, compsum::parts_sum_brute(&f, g, n)) {
                    c.eq(n, &inputs, &b, &series[n - 1]);
                }
            }
        }
    }
    for g in &gs {
        let total = compsum::parts_total(g, hi);
        let series = compsum::parts_sum(&WeightSequence::geometric(), g, hi);
        for n in 1..=hi {
            c.eq(n, g.name(), &total[n - 1], &series[n - 1]);
        }
    }
    out.push(c.done());

    let hi10 = max_n.min(10);
    let mut c = Check::new("moments_cumulants_round_trip", 1, hi10);
    let lists: Vec<(&str, Vec<Rational>)> = vec![
        (
            "integers",
            (1..=hi10).map(|k| rat((k * k % 7) as i64 - 2, 1)).collect(),
        ),
        ("gaussian m=1 s2=2", cumulant_gaussian(hi10)),
        ("halves", (1..=hi10).map(|k| rat(1, k as i64 + 1)).collect()),
    ];
    for (name, mu) in &lists {
        let kappa = compsum::moments_to_cumulants(mu);
        let back = compsum::cumulants_to_moments(&kappa);
        for n in 1..=hi10 {
            c.eq(n, name, &back[n - 1], &mu[n - 1]);
            if let Some(b) = c.ok(n, name, compsum::moments_to_cumulants_brute(mu, n)) {
                c.eq(n, name, &b, &kappa[n - 1]);
            }
            if let Some(b) = c.ok(n, name, compsum::cumulants_to_moments_brute(&kappa, n)) {
                c.eq(n, name, &b, &mu[n - 1]);
            }
        }
    }
    out.push(c.done());

    let hi16 = max_n.min(16);
    let mut c = Check::new("digit_sum_three_paths", 1, hi16);
    let mut fs = weight_battery();
    fs.push(WeightSequence::log1p_over_z());
    for f in &fs {
        for n in 1..=hi16 {
            let direct = c.ok(n, f.name(), compsum::digit_sum_transform(f, n));
            let series = c.ok(n, f.name(), compsum::digit_sum_by_series(f, n));
            let binom = c.ok(n, f.name(), compsum::digit_sum_by_binomial(f, n));
            if let (Some(a), Some(b), Some(d)) = (direct, series, binom) {
                c.eq(n, f.name(), &a, &b);
                c.eq(n, f.name(), &d, &b);
                if f.name() == WeightSequence::log1p().name() {
                    c.eq(n, f.name(), &a, &rat(1, n as i64));
                }
            }
        }
    }
    out.push(c.done());
    out
}

/// Moments of a normal law with mean 1 and variance 2, built from its
/// cumulants by the exponential formula.
fn cumulant_gaussian(n: usize) -> Vec<Rational> {
    let mut kappa = vec![Rational::zero(); n];
    kappa[0] = rat(1, 1);
    if n >= 2 {
        kappa[1] = rat(2, 1);
    }
    compsum::cumulants_to_moments(&kappa)
}

fn sequences_suite(max_n: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();

    let mut c = Check::new("recipes_dual_realization", 0, max_n.min(14));
    for r in sequences::RECIPES {
        let params = sequences::Params::new();
        let order = match r.closed_form(&params, 0) {
            Ok(SequenceValues::Polynomial(_)) => max_n.min(10),
            _ => max_n.min(14),
        };
        if let Some(rep) = c.ok(0, r.name, r.check(&params, order)) {
            c.merge(rep);
        }
    }
    out.push(c.done());

    let hi = max_n.min(12);
    let mut c = Check::new("bernoulli_five_paths", 0, hi);
    let b = sequences::bernoulli_numbers(hi);
    let paths: Vec<(&str, Result<Vec<Rational>>)> = vec![
        (
            "inverse_factorial",
            sequences::bernoulli_via_compositions(hi, BernoulliForm::InverseFactorial),
        ),
        (
            "stirling_weighted",
            sequences::bernoulli_via_compositions(hi, BernoulliForm::StirlingWeighted),
        ),
        (
            "stirling_closed_form",
            Ok(sequences::bernoulli_via_stirling(hi)),
        ),
        ("woon_row_sums", Ok(sequences::bernoulli_via_woon(hi))),
        ("norlund_p=1", Ok(sequences::norlund_numbers(hi, 1))),
        (
            "hypergeometric_a=b=1",
            sequences::hypergeometric_bernoulli(hi, &Rational::one(), &Rational::one()),
        ),
    ];
    for (name, p) in paths {
        if let Some(v) = c.ok(0, name, p) {
            for n in 0..=hi {
                c.eq(n, name, &v[n], &b[n]);
            }
        }
    }
    out.push(c.done());

    let hi10 = max_n.min(10);
    let mut c = Check::new("norlund_gf=tree=stirling", 0, hi10);
    for q in 1..=4usize {
        let inputs = format!("q={q}");
        let gf = sequences::norlund_numbers(hi10, q as i64);
        let tree = c.ok(0, &inputs, sequences::norlund_via_tree(hi10, q));
        let st = c.ok(0, &inputs, sequences::norlund_via_stirling(hi10, q));
        for n in 0..=hi10 {
            if let Some(t) = &tree {
                c.eq(n, &inputs, &t[n], &gf[n]);
            }
            if let Some(s) = &st {
                c.eq(n, &inputs, &s[n], &gf[n]);
            }
        }
    }
    out.push(c.done());

    let mut c = Check::new("hypergeometric_gf=tree", 0, hi10);
    for (a, b) in [
        (rat(1, 1), rat(1, 1)),
        (rat(2, 1), rat(1, 1)),
        (rat(1, 2), rat(3, 2)),
    ] {
        let inputs = format!("a={a}, b={b}");
        let gf = c.ok(
            0,
            &inputs,
            sequences::hypergeometric_bernoulli(hi10, &a, &b),
        );
        let tree = c.ok(0, &inputs, sequences::hypergeometric_via_tree(hi10, &a, &b));
        if let (Some(gf), Some(tree)) = (gf, tree) {
            for n in 0..=hi10 {
                c.eq(n, &inputs, &tree[n], &gf[n]);
            }
        }
    }
    out.push(c.done());

    let mut c = Check::new("bernoulli_polynomials_gf=tree", 0, hi10);
    let gf = sequences::bernoulli_polynomials(hi10);
    let tree = sequences::bernoulli_polynomials_by_tree(hi10);
    let bn = sequences::bernoulli_numbers(hi10);
    for n in 0..=hi10 {
        c.eq(n, "", &tree[n], &gf[n]);
        c.eq(n, "x=0", &gf[n].eval(&Rational::zero()), &bn[n]);
    }
    out.push(c.done());

    let hi8 = max_n.min(8);
    let mut c = Check::new("bernoulli_polynomial_expansion", 1, hi8);
    for n in 1..=hi8 {
        if let Some(r) = c.ok(n, "", sequences::bernoulli_poly_expansion(n)) {
            c.merge(r);
        }
    }
    out.push(c.done());

    let mut c = Check::new("catalan_convolution_and_composition_sums", 1, hi);
    let cat = sequences::catalan(hi);
    let gf = named::catalan_gf(hi + 1);
    for n in 1..=hi {
        c.eq(
            n,
            "C_n vs [z^(n+1)] (1-sqrt(1-4z))/2",
            &Rational::from_integer(cat[n].clone()),
            &gf.coeff(n + 1),
        );
    }
    if let Some(reps) = c.ok(1, "", sequences::catalan_invariance(hi)) {
        for r in reps {
            c.merge(r);
        }
    }
    out.push(c.done());

    let mut c = Check::new("hermite_invariance", 1, hi8);
    if let Some(r) = c.ok(1, "", sequences::hermite_invariance(hi8)) {
        c.merge(r);
    }
    let h = sequences::hermite_polynomials(hi8);
    let closed =
        sequences::find("hermite").and_then(|r| r.closed_form(&sequences::Params::new(), hi8));
    if let Some(SequenceValues::Polynomial(v)) = c.ok(0, "e^(2xz-z^2)", closed) {
        for n in 0..=hi8 {
            c.eq(n, "recurrence vs e^(2xz-z^2)", &h[n], &v[n]);
        }
    }
    out.push(c.done());

    let hi16 = max_n.min(16);
    let mut c = Check::new("restricted_recurrence=enumeration=gf", 1, hi16);
    for j in part_sets(hi16)
        .into_iter()
        .chain([PartSet::new(vec![1, 2, 3]).unwrap()])
    {
        if let Some(r) = c.ok(
            1,
            &format!("J={j}"),
            sequences::linear_recurrence_report(&j, hi16),
        ) {
            c.merge(r);
        }
    }
    out.push(c.done());

    let mut c = Check::new("stirling_multinomial_identity", 0, max_n.min(6));
    let table = sequences::Stirling2Table::new(12);
    for p in 1..=3usize {
        for n in 0..=max_n.min(6) {
            let lhs: Rational = compsum::tuples(p, n, 0)
                .iter()
                .map(|ks| {
                    let d: usize = ks.iter().map(|k| k + 1).product();
                    Rational::new(crate::algebra::multinomial(ks), BigInt::from(d))
                })
                .sum();
            let rhs = Rational::new(
                crate::algebra::factorial(n)
                    * crate::algebra::factorial(p)
                    * table.get(n + p, p).unwrap(),
                crate::algebra::factorial(n + p),
            );
            c.eq(n, &format!("p={p}"), &lhs, &rhs);
        }
    }
    out.push(c.done());
    out
}

/// Functions fed to the iterated checks: `f1 = e^z` may have a constant
/// term; the rest are composable.
pub fn iterated_battery(order: usize) -> Vec<Series> {
    vec![
        named::exp(order),
        named::geometric(order),
        named::log1p(order).add(&Series::from_fn(order, |k| {
            if k == 2 {
                rat(1, 1)
            } else {
                rat(0, 1)
            }
        })),
        named::catalan_gf(order),
    ]
}

fn iterated_suite(max_n: usize) -> Vec<IdentityReport> {
    let mut out = Vec::new();

    let mut c = Check::new("shape_count=catalan(n-1)", 2, 8);
    let cat = sequences::catalan(7);
    for n in 2..=8 {
        if let Some(s) = c.ok(n, "", iterated::enumerate_shapes(n)) {
            c.eq(n, "", &BigInt::from(s.len()), &cat[n - 1]);
            for shape in &s {
                let dot = iterated::shape_to_dot(shape, None);
                c.eq(
                    n,
                    &format!("dot {shape}"),
                    &dot.matches("->").count(),
                    &(2 * (n - 1)),
                );
            }
        }
    }
    out.push(c.done());

    let order = max_n.min(8);
    let mut c = Check::new("iterated_all_shapes=nested_series", 0, order);
    let battery = iterated_battery(order);
    for k in 2..=4 {
        let fs: Vec<Series> = battery[..k].to_vec();
        let shapes = iterated::enumerate_shapes(k).unwrap();
        let Some(oracle) = c.ok(
            0,
            "",
            iterated::evaluate_nested_series(&fs, &shapes[0], order),
        ) else {
            continue;
        };
        for s in &shapes {
            let inputs = format!("{k} functions, shape {s}");
            for v in [
                iterated::evaluate_iterated(&fs, s, order),
                iterated::evaluate_iterated_memo(&fs, s, order),
                iterated::evaluate_nested_series(&fs, s, order),
            ] {
                if let Some(v) = c.ok(0, &inputs, v) {
                    for n in 0..=order {
                        c.eq(n, &inputs, &v[n], &oracle[n]);
                    }
                }
            }
        }
    }
    out.push(c.done());
    out
}
