//! Nörlund numbers B_n^(p) by generating function, PI tree and Stirling
//! sum, plus hypergeometric Bernoulli numbers.

use compsums::algebra::rat;
use compsums::sequences;

fn main() -> compsums::Result<()> {
    for p in 1..=4usize {
        let gf = sequences::norlund_numbers(8, p as i64);
        assert_eq!(gf, sequences::norlund_via_tree(8, p)?);
        assert_eq!(gf, sequences::norlund_via_stirling(8, p)?);
        let s: Vec<String> = gf.iter().map(ToString::to_string).collect();
        println!("p={p}: {}", s.join(", "));
    }

    for (a, b) in [
        (rat(1, 1), rat(1, 1)),
        (rat(1, 1), rat(2, 1)),
        (rat(1, 2), rat(3, 2)),
    ] {
        let h = sequences::hypergeometric_bernoulli(6, &a, &b)?;
        assert_eq!(h, sequences::hypergeometric_via_tree(6, &a, &b)?);
        let s: Vec<String> = h.iter().map(ToString::to_string).collect();
        println!("a={a} b={b}: {}", s.join(", "));
    }
    Ok(())
}
