//! sum_{k < 2^(n-1)} f_{s2(k)+1} three ways; for f = log(1+z) it is 1/n.

use compsums::algebra::named;
use compsums::compsum::{self, WeightSequence};

fn main() -> compsums::Result<()> {
    let n_max = 12;
    for (name, s) in [
        ("log(1+z)", named::log1p(n_max)),
        ("z/(1-z)", named::geometric(n_max)),
        ("(1-z)^-2 - 1", named::inverse_power_minus_one(2, n_max)),
    ] {
        let f = WeightSequence::from_series(name, &s);
        let mut row = Vec::new();
        for n in 1..=n_max {
            let direct = compsum::digit_sum_transform(&f, n)?;
            assert_eq!(direct, compsum::digit_sum_by_series(&f, n)?);
            assert_eq!(direct, compsum::digit_sum_by_binomial(&f, n)?);
            row.push(direct.to_string());
        }
        println!("{name:<14} {}", row.join(" "));
    }
    Ok(())
}
