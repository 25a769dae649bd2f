//! Command-line front end. [`run`] does all the work and returns the exit
//! status with the text to print, so the binary stays a one-liner and the
//! output can be tested byte for byte.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{CommandFactory, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{named, Polynomial, Rational, Ring, Series};
use crate::compositions::{self, PartSet};
use crate::compsum::{self, WeightSequence};
use crate::error::{Error, Result};
use crate::iterated::{self, ParenShape};
use crate::pitree::{self, InputSequence, Labeling};
use crate::sequences::{self, Params};
use crate::verify::{self, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "compsums",
    version,
    about = "Exact sums over integer compositions, PI trees and power-series composition"
)]
struct Cli {
    /// Write the output to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the compositions of n in mask order
    Compositions {
        n: usize,
        /// Only parts from this set, e.g. 1,2
        #[arg(long, value_name = "J")]
        parts: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the rows of a PI tree, or export it as Graphviz DOT
    Tree {
        /// Input sequence: woon, bernoulli, catalan, fibonacci, parts, norlund,
        /// hypergeometric, mixed, series, bernoulli_polynomial, hermite
        #[arg(long, default_value = "woon")]
        input: String,
        /// Number of rows
        #[arg(short = 'N', long, default_value_t = 4)]
        order: usize,
        /// Input parameters, e.g. parts=1,3 or p=2 or f=log1p
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Node labels in DOT output: value, multi_index or both
        #[arg(long, default_value = "both")]
        label: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print a named sequence (`sequence list` shows the registry)
    Sequence {
        name: String,
        #[arg(short = 'N', long, default_value_t = 10)]
        order: usize,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Also compare with the composition-sum realization
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients of f(g(z)) for two named series
    Compose {
        /// Outer series f
        outer: String,
        /// Inner series g (zero constant term)
        inner: String,
        #[arg(short = 'N', long, default_value_t = 8)]
        order: usize,
        /// Also show the brute-force and convolution evaluations
        #[arg(long)]
        paths: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run the cross-path identity battery
    Verify {
        #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
        suite: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Sum of f_{s2(k)+1} over k < 2^(n-1), three ways
    Digitsum {
        /// Weight series f
        f: String,
        #[arg(short = 'N', long, default_value_t = 10)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Iterated composition f1∘f2∘...∘fn under each parenthesization
    Iterated {
        /// Comma-separated series, outermost first
        #[arg(long)]
        functions: String,
        #[arg(short = 'N', long, default_value_t = 6)]
        order: usize,
        /// Shape index (see --all-shapes for the numbering)
        #[arg(long, conflicts_with = "all_shapes")]
        shape: Option<usize>,
        #[arg(long)]
        all_shapes: bool,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Compositions { .. } => "compositions",
            Command::Tree { .. } => "tree",
            Command::Sequence { .. } => "sequence",
            Command::Compose { .. } => "compose",
            Command::Verify { .. } => "verify",
            Command::Digitsum { .. } => "digitsum",
            Command::Iterated { .. } => "iterated",
        }
    }
}

/// Runs one command; `args` excludes the program name. Returns the exit
/// status (0 ok, 1 failed verification, 2 usage error) and the output.
pub fn run<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(
        std::iter::once("compsums".to_string()).chain(args.iter().cloned()),
    ) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, text),
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => (2, text),
                _ => (
                    2,
                    format!("{text}\n{}", help_for(args.first().map(String::as_str))),
                ),
            };
        }
    };
    let name = cli.command.name();
    match execute(cli.command) {
        Ok((code, text)) => match cli.out {
            Some(path) => match std::fs::write(&path, &text) {
                Ok(()) => (code, String::new()),
                Err(e) => (2, format!("error: cannot write {}: {e}\n", path.display())),
            },
            None => (code, text),
        },
        Err(e) => (2, format!("error: {e}\n\n{}", help_for(Some(name)))),
    }
}

fn help_for(sub: Option<&str>) -> String {
    let mut cmd = Cli::command();
    cmd.build();
    match sub.and_then(|s| cmd.find_subcommand_mut(s)) {
        Some(sc) => sc.render_help().to_string(),
        None => cmd.render_help().to_string(),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn execute(cmd: Command) -> Result<(i32, String)> {
    match cmd {
        Command::Compositions { n, parts, json } => compositions_cmd(n, parts.as_deref(), json),
        Command::Tree {
            input,
            order,
            params,
            label,
            dot,
            json,
        } => tree_cmd(
            &input,
            order,
            &Params::parse(&params)?,
            label.parse()?,
            dot,
            json,
        ),
        Command::Sequence {
            name,
            order,
            params,
            check,
            json,
        } => sequence_cmd(&name, order, &Params::parse(&params)?, check, json),
        Command::Compose {
            outer,
            inner,
            order,
            paths,
            json,
        } => compose_cmd(&outer, &inner, order, paths, json),
        Command::Verify { suite, max_n, json } => verify_cmd(suite.parse()?, max_n, json),
        Command::Digitsum { f, order, json } => digitsum_cmd(&f, order, json),
        Command::Iterated {
            functions,
            order,
            shape,
            all_shapes,
            dot,
            json,
        } => iterated_cmd(&functions, order, shape, all_shapes, dot, json),
    }
}

fn compositions_cmd(n: usize, parts: Option<&str>, json: bool) -> Result<(i32, String)> {
    let list: Vec<Vec<usize>> = match parts {
        None => compositions::enumerate(n)?
            .map(|c| c.parts().to_vec())
            .collect(),
        Some(j) => {
            compositions::enumerate(n)?;
            let j: PartSet = j.parse()?;
            compositions::enumerate_restricted(n, &j)
                .map(|c| c.parts().to_vec())
                .collect()
        }
    };
    if json {
        return Ok((0, pretty(&json!(list))));
    }
    let mut out = String::new();
    for c in list {
        out.push_str(&strings(&c).join("+"));
        out.push('\n');
    }
    Ok((0, out))
}

enum AnyInput {
    Rational(InputSequence),
    Polynomial(InputSequence<Polynomial>),
}

fn param<'a>(params: &'a Params, key: &str, default: &'a str) -> &'a str {
    params.get(key).unwrap_or(default)
}

fn input_sequence(name: &str, params: &Params, order: usize) -> Result<AnyInput> {
    let r = |v: &str, what: &'static str| -> Result<Rational> {
        v.parse().map_err(|_| Error::Parse {
            what,
            input: v.into(),
        })
    };
    Ok(AnyInput::Rational(match name {
        "woon" => InputSequence::woon(),
        "bernoulli" => InputSequence::bernoulli(),
        "catalan" => InputSequence::catalan_shifted(),
        "fibonacci" => InputSequence::fibonacci(),
        "mixed" => verify::mixed_rationals(),
        "parts" => InputSequence::indicator(&param(params, "parts", "1,2").parse()?),
        "norlund" => {
            let p = param(params, "p", "2");
            sequences::norlund_input(p.parse().map_err(|_| Error::Parse {
                what: "p",
                input: p.into(),
            })?)?
        }
        "hypergeometric" => sequences::hypergeometric_input(
            &r(param(params, "a", "1"), "a")?,
            &r(param(params, "b", "1"), "b")?,
        )?,
        "series" => {
            let f = param(params, "f", "log1p");
            InputSequence::from_series(f, &named::parse(f, order)?)
        }
        "bernoulli_polynomial" => {
            return Ok(AnyInput::Polynomial(InputSequence::bernoulli_polynomial()))
        }
        "hermite" => return Ok(AnyInput::Polynomial(sequences::hermite_input())),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unknown tree input '{name}'"
            )));
        }
    }))
}

fn tree_cmd(
    input: &str,
    order: usize,
    params: &Params,
    label: Labeling,
    dot: bool,
    json: bool,
) -> Result<(i32, String)> {
    fn render<C: Ring>(
        g: &InputSequence<C>,
        order: usize,
        label: Labeling,
        dot: bool,
        json: bool,
    ) -> Result<String> {
        if dot {
            return pitree::export_dot(g, order, label);
        }
        let mut rows = Vec::new();
        for n in 1..=order {
            rows.push((n, pitree::build_row(g, n)?));
        }
        let sums = pitree::row_sums(g, order);
        if json {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(n, nodes)| {
                    json!({
                        "row": n,
                        "sum": sums[n - 1].to_string(),
                        "nodes": nodes.iter().map(|nd| json!({
                            "index": nd.multi_index,
                            "value": nd.value.to_string(),
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            return Ok(pretty(&json!({ "input": g.name(), "rows": rows })));
        }
        let mut out = String::new();
        for (n, nodes) in rows {
            let _ = writeln!(out, "row {n}  sum {}", sums[n - 1]);
            for nd in nodes {
                let _ = writeln!(
                    out,
                    "  ({})  {}",
                    strings(&nd.multi_index).join(","),
                    nd.value
                );
            }
        }
        Ok(out)
    }
    let text = match input_sequence(input, params, order)? {
        AnyInput::Rational(g) => render(&g, order, label, dot, json)?,
        AnyInput::Polynomial(g) => render(&g, order, label, dot, json)?,
    };
    Ok((0, text))
}

fn sequence_cmd(
    name: &str,
    order: usize,
    params: &Params,
    check: bool,
    json: bool,
) -> Result<(i32, String)> {
    if name == "list" {
        let mut out = String::new();
        for r in sequences::RECIPES {
            let ps: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "{:<22} {:<9} {:<14} {}",
                r.name,
                r.relation,
                ps.join(","),
                r.description
            );
        }
        return Ok((0, out));
    }
    let recipe = sequences::find(name)?;
    let resolved = recipe.resolve(params)?;
    let values = recipe.closed_form(&resolved, order)?;
    let report = if check {
        Some(recipe.check(&resolved, order)?)
    } else {
        None
    };
    let code = i32::from(report.as_ref().is_some_and(|r| !r.passed()));
    if json {
        let mut v = json!({
            "name": recipe.name,
            "params": resolved.to_json(),
            "values": values.strings(),
        });
        if let Some(r) = &report {
            v["check"] = r.to_json();
        }
        return Ok((code, pretty(&v)));
    }
    let mut out = String::new();
    for (n, v) in values.strings().iter().enumerate() {
        let _ = writeln!(out, "{n:>3}  {v}");
    }
    if let Some(r) = report {
        let _ = writeln!(out, "check ({} path): {}", recipe.relation, r.status());
        if let Some(w) = r.witness {
            let _ = writeln!(
                out,
                "  n={} closed form {} vs composition sum {}",
                w.n, w.left, w.right
            );
        }
    }
    Ok((code, out))
}

fn compose_cmd(
    outer: &str,
    inner: &str,
    order: usize,
    paths: bool,
    json: bool,
) -> Result<(i32, String)> {
    let f = named::parse(outer, order)?;
    let g = named::parse(inner, order)?;
    let coeffs = f.compose(&g)?.into_coeffs();
    let (brute, conv) = if paths {
        let fw = WeightSequence::from_series(outer, &f);
        let gi = InputSequence::from_series(inner, &g);
        let brute = (0..=order)
            .map(|n| compsum::weighted_comp_sum_brute(&fw, &gi, n))
            .collect::<Result<Vec<_>>>()?;
        let conv = compsum::weighted_convolution(&fw, &gi, &compsum::convolution_g0(), order);
        (Some(brute), Some(conv))
    } else {
        (None, None)
    };
    if json {
        let mut v = json!({
            "outer": outer,
            "inner": inner,
            "order": order,
            "coefficients": strings(&coeffs),
        });
        if let (Some(b), Some(c)) = (&brute, &conv) {
            v["brute_force"] = json!(strings(b));
            v["convolution"] = json!(strings(c));
        }
        return Ok((0, pretty(&v)));
    }
    let mut out = String::new();
    match (&brute, &conv) {
        (Some(b), Some(c)) => {
            let _ = writeln!(out, "  n  series  brute_force  convolution");
            for n in 0..=order {
                let _ = writeln!(out, "{n:>3}  {}  {}  {}", coeffs[n], b[n], c[n]);
            }
        }
        _ => {
            for (n, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{n:>3}  {c}");
            }
        }
    }
    Ok((0, out))
}

fn verify_cmd(suite: Suite, max_n: usize, json: bool) -> Result<(i32, String)> {
    let reports = verify::run_suite(suite, max_n)?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    let code = i32::from(passed != reports.len());
    if json {
        let v = json!({
            "suite": suite.to_string(),
            "max_n": max_n,
            "passed": passed == reports.len(),
            "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        });
        return Ok((code, pretty(&v)));
    }
    let width = reports.iter().map(|r| r.identity.len()).max().unwrap_or(0);
    let mut out = String::new();
    for r in &reports {
        let (lo, hi) = r.n_range;
        let _ = writeln!(
            out,
            "{}  {:<width$}  n={lo}..{hi}",
            r.status().to_uppercase(),
            r.identity
        );
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "      witness: n={} inputs: {}", w.n, w.inputs);
            let _ = writeln!(out, "      left:  {}", w.left);
            let _ = writeln!(out, "      right: {}", w.right);
        }
    }
    let _ = writeln!(out, "{passed}/{} identities passed", reports.len());
    Ok((code, out))
}

fn digitsum_cmd(f: &str, order: usize, json: bool) -> Result<(i32, String)> {
    let s = named::parse(f, order)?;
    let w = WeightSequence::from_series(f, &s);
    let mut rows = Vec::new();
    for n in 1..=order {
        rows.push((
            n,
            compsum::digit_sum_transform(&w, n)?,
            compsum::digit_sum_by_series(&w, n)?,
            compsum::digit_sum_by_binomial(&w, n)?,
        ));
    }
    if json {
        let values: Vec<Value> = rows
            .iter()
            .map(|(n, a, b, c)| json!({"n": n, "direct": a.to_string(), "series": b.to_string(), "binomial": c.to_string()}))
            .collect();
        return Ok((0, pretty(&json!({ "f": f, "values": values }))));
    }
    let mut out = String::from("  n  direct  series  binomial\n");
    for (n, a, b, c) in rows {
        let _ = writeln!(out, "{n:>3}  {a}  {b}  {c}");
    }
    Ok((0, out))
}

/// Splits `a,b,coeffs:0,1,1/2` into series specs: bare numbers continue
/// the preceding `coeffs:` list.
fn split_functions(list: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for tok in list.split(',').map(str::trim) {
        let continues = tok.parse::<Rational>().is_ok()
            && out.last().is_some_and(|prev| prev.starts_with("coeffs:"));
        match out.last_mut() {
            Some(prev) if continues => {
                prev.push(',');
                prev.push_str(tok);
            }
            _ => out.push(tok.to_string()),
        }
    }
    out
}

fn iterated_cmd(
    functions: &str,
    order: usize,
    shape: Option<usize>,
    all_shapes: bool,
    dot: bool,
    json: bool,
) -> Result<(i32, String)> {
    let names = split_functions(functions);
    let fs = names
        .iter()
        .map(|n| named::parse(n, order))
        .collect::<Result<Vec<Series>>>()?;
    let shapes = iterated::enumerate_shapes(fs.len())?;
    let selected: Vec<(usize, &ParenShape)> = if all_shapes {
        shapes.iter().enumerate().collect()
    } else {
        let i = shape.unwrap_or(0);
        let s = shapes.get(i).ok_or_else(|| Error::RangeError {
            what: "shape",
            value: i.to_string(),
            range: format!("[0, {}]", shapes.len() - 1),
        })?;
        vec![(i, s)]
    };
    if dot {
        let mut out = String::new();
        for (_, s) in &selected {
            out.push_str(&iterated::shape_to_dot(s, Some(&names)));
        }
        return Ok((0, out));
    }
    let literal =
        fs.len() <= iterated::MAX_LITERAL_FUNCTIONS && order <= iterated::MAX_LITERAL_ORDER;
    let mut results = Vec::new();
    for (i, s) in &selected {
        let v = if literal {
            iterated::evaluate_iterated(&fs, s, order)?
        } else {
            iterated::evaluate_iterated_memo(&fs, s, order)?
        };
        results.push((*i, *s, iterated::plan_from_shape(s), v));
    }
    let agree = results.windows(2).all(|w| w[0].3 == w[1].3);
    let code = i32::from(!agree);
    let method = if literal { "literal" } else { "memoized" };
    if json {
        let shapes: Vec<Value> = results
            .iter()
            .map(|(i, s, p, v)| {
                json!({
                    "index": i,
                    "shape": s.render(&names),
                    "plan": p.to_string(),
                    "coefficients": strings(v),
                })
            })
            .collect();
        let v = json!({
            "functions": names,
            "order": order,
            "method": method,
            "agree": agree,
            "shapes": shapes,
        });
        return Ok((code, pretty(&v)));
    }
    let mut out = String::new();
    for (i, s, p, v) in &results {
        let _ = writeln!(out, "shape {i}: {}", s.render(&names));
        let _ = writeln!(out, "  plan: {p}");
        let _ = writeln!(out, "  coefficients: {}", strings(v).join(", "));
    }
    if results.len() > 1 {
        let verdict = if agree { "agree" } else { "DISAGREE" };
        let _ = writeln!(
            out,
            "all {} shapes {verdict} ({method} chain sums)",
            results.len()
        );
    }
    Ok((code, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_of_three() {
        assert_eq!(
            run(["compositions", "3"]),
            (0, "3\n2+1\n1+2\n1+1+1\n".to_string())
        );
        let (code, out) = run(["compositions", "4", "--parts", "1,2", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 5);
    }

    #[test]
    fn bernoulli_json() {
        let (code, out) = run(["sequence", "bernoulli", "--order", "4", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["values"], json!(["1", "-1/2", "1/6", "0", "-1/30"]));
        assert_eq!(v["name"], "bernoulli");
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, out) = run(["compositions", "--bogus"]);
        assert_eq!(code, 2);
        assert!(out.contains("--bogus"));
        assert!(out.contains("Usage: compsums compositions"));
        let (code, out) = run(["compositions", "40"]);
        assert_eq!(code, 2);
        assert!(out.contains("MAX_ENUMERATE"));
        assert_eq!(run(["sequence", "nope"]).0, 2);
        assert_eq!(run(["tree", "--input", "nope"]).0, 2);
        assert_eq!(run(Vec::<String>::new()).0, 2);
        assert_eq!(run(["--help"]).0, 0);
        assert_eq!(run(["iterated", "--functions", "exp,exp", "-N", "3"]).0, 2);
    }

    #[test]
    fn function_lists() {
        assert_eq!(
            split_functions("exp,coeffs:0,1,1/2,geometric"),
            ["exp", "coeffs:0,1,1/2", "geometric"]
        );
    }

    #[test]
    fn iterated_triple() {
        let (code, out) = run([
            "iterated",
            "--functions",
            "geometric,geometric,geometric",
            "-N",
            "3",
            "--all-shapes",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("coefficients: 0, 1, 3, 9"));
        assert!(out.contains("all 2 shapes agree"));
    }

    #[test]
    fn verify_small() {
        let (code, out) = run(["verify", "--suite", "compositions", "--max-n", "6"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("4/4 identities passed\n"));
    }

    #[test]
    fn deterministic() {
        let args = ["tree", "--input", "hermite", "-N", "3", "--json"];
        assert_eq!(run(args), run(args));
    }
}
