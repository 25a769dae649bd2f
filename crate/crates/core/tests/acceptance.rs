//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//!
//! Reference values come either from the printed examples or from small
//! oracles defined here that share no code with the library (the classical
//! Bernoulli recurrence, closed-form Catalan numbers, a Fibonacci loop,
//! Gaussian moments).

use std::path::Path;
use std::time::{Duration, Instant};

use compsums::algebra::{named, rat, Polynomial};
use compsums::compositions::{self, PartSet};
use compsums::compsum::{self, WeightSequence};
use compsums::iterated;
use compsums::sequences::{self, BernoulliForm};
use compsums::verify;
use compsums::{pitree, InputSequence, Rational, Series};
use num_bigint::BigInt;
use num_traits::{One, Zero};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, left: &T, right: &T) -> Result<(), String> {
    ensure(left == right, || format!("{what}: {left:?} != {right:?}"))
}

fn within(what: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:?}, limit {limit:?}")
    })
}

fn err(e: compsums::Error) -> String {
    e.to_string()
}

// B_0 = 1, sum_{k=0}^{n} binom(n+1, k) B_k = 0.
fn bernoulli_oracle(n_max: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![Rational::one()];
    for n in 1..=n_max {
        let mut acc = Rational::zero();
        let mut binom = BigInt::one(); // binom(n+1, k)
        for (k, bk) in b.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * bk.clone();
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        b.push(-(acc / Rational::from(n + 1)));
    }
    b
}

fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * Rational::from(k))
}

fn binom(n: usize, k: usize) -> Rational {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn catalan_oracle(n: usize) -> u128 {
    // binom(2n, n)/(n+1)
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let woon = InputSequence::woon();
    let sums = pitree::row_sums(&woon, 12);
    eq(
        "rows 1..4",
        &sums[..4].to_vec(),
        &vec![rat(1, 2), rat(1, 12), rat(0, 1), rat(-1, 720)],
    )?;
    let b = bernoulli_oracle(12);
    for n in 1..=12 {
        let expected = Rational::sign_power(n) * b[n].clone() / factorial(n);
        eq(&format!("row {n}"), &sums[n - 1], &expected)?;
        eq(
            &format!("tree walk row {n}"),
            &pitree::row_sum_from_tree(&woon, n).map_err(err)?,
            &expected,
        )?;
    }
    // the unsigned input -1/(n+1)! gives B_n/n! instead
    let plain = pitree::row_sums(&InputSequence::bernoulli(), 12);
    for n in 1..=12 {
        eq(
            &format!("unsigned row {n}"),
            &plain[n - 1],
            &(b[n].clone() / factorial(n)),
        )?;
    }
    let t = start.elapsed();
    within("criterion 1", t, Duration::from_secs(1))?;
    Ok(format!("rows 1..12 exact, {t:.2?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let n_max = 14;
    let g0 = compsum::convolution_g0::<Rational>();
    let (inputs, weights) = (verify::input_battery(), verify::weight_battery());
    let mut pairs = 0;
    for g in &inputs {
        for f in &weights {
            let series = compsum::weighted_comp_sum(f, g, n_max);
            let conv = compsum::weighted_convolution(f, g, &g0, n_max);
            for n in 1..=n_max {
                let brute = compsum::weighted_comp_sum_brute(f, g, n).map_err(err)?;
                let ctx = format!("f={} g={} n={n}", f.name(), g.name());
                eq(&format!("{ctx} brute vs series"), &brute, &series[n])?;
                eq(&format!("{ctx} brute vs convolution"), &brute, &conv[n])?;
            }
            pairs += 1;
        }
    }
    let t = start.elapsed();
    within("criterion 2", t, Duration::from_secs(10))?;
    Ok(format!("{pairs} (g, f) pairs, n <= {n_max}, {t:.2?}"))
}

fn criterion_3() -> Outcome {
    let n_max = 12;
    for g in verify::input_battery() {
        let x = compsum::comp_sum(&g, n_max);
        let back = compsum::comp_sum_inverse(&InputSequence::from_table("x", x.clone()), n_max);
        eq(
            &format!("{} forward then inverse", g.name()),
            &back,
            &g.table(n_max)[1..].to_vec(),
        )?;
        let y = compsum::comp_sum_inverse(&g, n_max);
        let fwd = compsum::comp_sum(&InputSequence::from_table("y", y), n_max);
        eq(
            &format!("{} inverse then forward", g.name()),
            &fwd,
            &g.table(n_max)[1..].to_vec(),
        )?;
        for n in 1..=8 {
            eq(
                &format!("{} brute inverse n={n}", g.name()),
                &compsum::comp_sum_inverse_brute(&InputSequence::from_table("x", x.clone()), n)
                    .map_err(err)?,
                &g.term(n),
            )?;
        }
    }
    Ok(format!("6 inputs, N = {n_max}"))
}

fn criterion_4() -> Outcome {
    for r in sequences::catalan_invariance(12).map_err(err)? {
        ensure(r.passed(), || format!("{}: {:?}", r.identity, r.witness))?;
    }
    let c = sequences::catalan(12);
    for (n, cn) in c.iter().enumerate() {
        eq(&format!("C_{n}"), cn, &BigInt::from(catalan_oracle(n)))?;
    }
    let first: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132]
        .into_iter()
        .map(BigInt::from)
        .collect();
    eq("C_0..C_6", &c[..7].to_vec(), &first)?;
    Ok("forward and inverse, n <= 12".into())
}

fn criterion_5() -> Outcome {
    let r = sequences::hermite_invariance(8).map_err(err)?;
    ensure(r.passed(), || format!("{:?}", r.witness))?;
    // H_3 = 8x^3 - 12x, H_4 = 16x^4 - 48x^2 + 12
    let h = sequences::hermite_polynomials(4);
    eq(
        "H_3",
        &h[3],
        &Polynomial::new(vec![rat(0, 1), rat(-12, 1), rat(0, 1), rat(8, 1)]),
    )?;
    eq(
        "H_4",
        &h[4],
        &Polynomial::new(vec![
            rat(12, 1),
            rat(0, 1),
            rat(-48, 1),
            rat(0, 1),
            rat(16, 1),
        ]),
    )?;
    Ok("polynomial identities, n <= 8".into())
}

fn criterion_6() -> Outcome {
    let n = 12;
    let oracle = bernoulli_oracle(n);
    let paths = [
        ("generating function", sequences::bernoulli_numbers(n)),
        (
            "compositions, inverse factorial",
            sequences::bernoulli_via_compositions(n, BernoulliForm::InverseFactorial)
                .map_err(err)?,
        ),
        (
            "compositions, Stirling weighted",
            sequences::bernoulli_via_compositions(n, BernoulliForm::StirlingWeighted)
                .map_err(err)?,
        ),
        ("Stirling closed form", sequences::bernoulli_via_stirling(n)),
        ("Woon row sums", sequences::bernoulli_via_woon(n)),
    ];
    for (name, values) in &paths {
        eq(name, values, &oracle)?;
    }
    eq("B_12", &oracle[12], &rat(-691, 2730))?;
    Ok("5 paths, n <= 12".into())
}

fn criterion_7() -> Outcome {
    for n in 1..=8 {
        let r = sequences::bernoulli_poly_expansion(n).map_err(err)?;
        ensure(r.passed(), || format!("n={n}: {:?}", r.witness))?;
    }
    Ok("n <= 8".into())
}

fn criterion_8() -> Outcome {
    let b = bernoulli_oracle(10);
    for q in 1..=4usize {
        let gf = sequences::norlund_numbers(10, q as i64);
        eq(
            &format!("q={q} tree"),
            &sequences::norlund_via_tree(10, q).map_err(err)?,
            &gf,
        )?;
        eq(
            &format!("q={q} Stirling"),
            &sequences::norlund_via_stirling(10, q).map_err(err)?,
            &gf,
        )?;
        if q == 2 {
            // B^(2)_n = sum_k binom(n, k) B_k B_{n-k}
            for n in 0..=10 {
                let conv: Rational = (0..=n)
                    .map(|k| binom(n, k) * b[k].clone() * b[n - k].clone())
                    .sum();
                eq(&format!("B_{n}^(2)"), &gf[n], &conv)?;
            }
            eq("B_2^(2)", &gf[2], &rat(5, 6))?;
        }
    }
    Ok("q <= 4, n <= 10".into())
}

fn criterion_9() -> Outcome {
    let one = rat(1, 1);
    let b = bernoulli_oracle(12);
    eq(
        "gf",
        &sequences::hypergeometric_bernoulli(12, &one, &one).map_err(err)?,
        &b,
    )?;
    eq(
        "tree",
        &sequences::hypergeometric_via_tree(12, &one, &one).map_err(err)?,
        &b,
    )?;
    Ok("a = b = 1, n <= 12".into())
}

fn criterion_10() -> Outcome {
    let j = PartSet::new(vec![1, 2]).map_err(err)?;
    eq(
        "count(5, {1,2})",
        &compositions::count_restricted(5, &j),
        &8u32.into(),
    )?;
    let mut fib: Vec<u64> = vec![1, 1];
    while fib.len() <= 21 {
        fib.push(fib[fib.len() - 1] + fib[fib.len() - 2]);
    }
    for n in 1..=16 {
        let listed = compositions::enumerate_restricted(n, &j).count();
        eq(
            &format!("enumeration n={n}"),
            &compositions::count_restricted(n, &j),
            &listed.into(),
        )?;
    }
    let gf = sequences::restricted_gf(&j, 20);
    for (n, &fib_n) in fib.iter().enumerate().take(21).skip(1) {
        eq(
            &format!("gf coefficient n={n}"),
            &gf.coeff(n),
            &Rational::from(fib_n),
        )?;
        eq(
            &format!("count n={n}"),
            &compositions::count_restricted(n, &j),
            &fib_n.into(),
        )?;
    }
    Ok("F_5 = 8, enumeration n <= 16, gf n <= 20".into())
}

fn criterion_11() -> Outcome {
    let n_max = 16;
    let weights = [
        ("log(1+z)", named::log1p(n_max)),
        ("z/(1-z)", named::geometric(n_max)),
        ("(1-z)^-2 - 1", named::inverse_power_minus_one(2, n_max)),
    ];
    for (name, s) in &weights {
        let f = WeightSequence::from_series(*name, s);
        for n in 1..=n_max {
            let direct = compsum::digit_sum_transform(&f, n).map_err(err)?;
            eq(
                &format!("{name} n={n} series"),
                &compsum::digit_sum_by_series(&f, n).map_err(err)?,
                &direct,
            )?;
            eq(
                &format!("{name} n={n} binomial"),
                &compsum::digit_sum_by_binomial(&f, n).map_err(err)?,
                &direct,
            )?;
            if *name == "log(1+z)" {
                eq(&format!("log n={n}"), &direct, &rat(1, n as i64))?;
            }
        }
    }
    Ok("3 weights, n <= 16".into())
}

fn criterion_12() -> Outcome {
    let n_max = 10;
    // N(1, 2): mu_n = mu_{n-1} + 2(n-1) mu_{n-2}
    let mut mu = vec![Rational::one(), Rational::one()];
    for n in 2..=n_max {
        let next = mu[n - 1].clone() + Rational::from(2 * (n - 1)) * mu[n - 2].clone();
        mu.push(next);
    }
    let moments = mu[1..].to_vec();
    let kappa = compsum::moments_to_cumulants(&moments);
    eq("kappa_1", &kappa[0], &rat(1, 1))?;
    eq(
        "kappa_2 = mu_2 - mu_1^2",
        &kappa[1],
        &(moments[1].clone() - moments[0].clone() * moments[0].clone()),
    )?;
    eq("kappa_2", &kappa[1], &rat(2, 1))?;
    ensure(kappa[2..].iter().all(Zero::is_zero), || {
        format!("higher cumulants {kappa:?}")
    })?;
    eq(
        "round trip",
        &compsum::cumulants_to_moments(&kappa),
        &moments,
    )?;

    let mixed: Vec<Rational> = verify::mixed_rationals().table(n_max)[1..].to_vec();
    let k = compsum::moments_to_cumulants(&mixed);
    eq(
        "mixed round trip",
        &compsum::cumulants_to_moments(&k),
        &mixed,
    )?;
    for n in 1..=n_max {
        eq(
            &format!("brute kappa n={n}"),
            &compsum::moments_to_cumulants_brute(&mixed, n).map_err(err)?,
            &k[n - 1],
        )?;
        eq(
            &format!("brute mu n={n}"),
            &compsum::cumulants_to_moments_brute(&k, n).map_err(err)?,
            &mixed[n - 1],
        )?;
    }
    Ok(format!("N = {n_max}"))
}

fn criterion_13() -> Outcome {
    let order = 8;
    let fs: Vec<Series> = verify::iterated_battery(order);
    let shapes = iterated::enumerate_shapes(4).map_err(err)?;
    eq("shapes for 4 functions", &shapes.len(), &5)?;
    let reference = iterated::evaluate_nested_series(&fs, &shapes[0], order).map_err(err)?;
    for s in &shapes {
        eq(
            &format!("{s} literal"),
            &iterated::evaluate_iterated(&fs, s, order).map_err(err)?,
            &reference,
        )?;
        eq(
            &format!("{s} memo"),
            &iterated::evaluate_iterated_memo(&fs, s, order).map_err(err)?,
            &reference,
        )?;
        eq(
            &format!("{s} nested"),
            &iterated::evaluate_nested_series(&fs, s, order).map_err(err)?,
            &reference,
        )?;
    }
    for n in 2..=8 {
        let count = iterated::enumerate_shapes(n).map_err(err)?.len() as u128;
        eq(&format!("shapes n={n}"), &count, &catalan_oracle(n - 1))?;
    }
    Ok("5 shapes agree to order 8, counts n <= 8".into())
}

fn criterion_14() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut checked = 0;
    let mut entries: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .flatten()
        .map(|e| e.path())
        .collect();
    entries.sort();
    for path in entries
        .iter()
        .filter(|p| p.extension().is_some_and(|e| e == "args"))
    {
        let args: Vec<String> = std::fs::read_to_string(path)
            .map_err(|e| e.to_string())?
            .split_whitespace()
            .map(String::from)
            .collect();
        let golden =
            std::fs::read_to_string(path.with_extension("out")).map_err(|e| e.to_string())?;
        let first = compsums::cli::run(args.clone());
        let second = compsums::cli::run(args);
        let name = path.file_stem().unwrap().to_string_lossy().into_owned();
        eq(&format!("{name} repeat"), &first, &second)?;
        ensure(first.1 == golden, || {
            format!("{name}: output differs from golden file")
        })?;
        checked += 1;
    }
    ensure(checked >= 7, || format!("only {checked} golden files"))?;
    Ok(format!("{checked} golden files byte-stable"))
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("Woon row sums", criterion_1),
        ("main identity: brute = series = convolution", criterion_2),
        ("inversion", criterion_3),
        ("Catalan invariance", criterion_4),
        ("Hermite invariance", criterion_5),
        ("five Bernoulli representations", criterion_6),
        ("Bernoulli-polynomial expansion", criterion_7),
        ("Norlund numbers", criterion_8),
        ("hypergeometric Bernoulli at a=b=1", criterion_9),
        ("restricted compositions", criterion_10),
        ("digit-sum theorem", criterion_11),
        ("moments and cumulants", criterion_12),
        ("iterated sums over all shapes", criterion_13),
        ("CLI determinism", criterion_14),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
