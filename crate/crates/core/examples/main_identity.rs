//! sum_{pi |= n} f_{|pi|} g_pi is the z^n coefficient of f(g(z)):
//! brute force, series composition and the binomial convolution form agree.

use compsums::compsum::{self, WeightSequence};
use compsums::{InputSequence, Rational};

fn main() -> compsums::Result<()> {
    let f = WeightSequence::log1p();
    let g = InputSequence::catalan_shifted();
    let n_max = 10;

    let series = compsum::weighted_comp_sum(&f, &g, n_max);
    let conv = compsum::weighted_convolution(&f, &g, &compsum::convolution_g0::<Rational>(), n_max);
    println!("f = {}, g = {}", f.name(), g.name());
    for n in 1..=n_max {
        let brute = compsum::weighted_comp_sum_brute(&f, &g, n)?;
        assert!(brute == series[n] && brute == conv[n]);
        println!("{n:>2}  {brute}");
    }

    // unweighted: x(z) = g(z)/(1 - g(z)) and back
    let x = compsum::comp_sum(&g, n_max);
    let back = compsum::comp_sum_inverse(&InputSequence::from_table("x", x.clone()), n_max);
    assert_eq!(back, g.table(n_max)[1..]);
    println!(
        "x_n = {}",
        x.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    Ok(())
}
