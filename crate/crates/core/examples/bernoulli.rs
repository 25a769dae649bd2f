//! Bernoulli numbers five ways, and Bernoulli polynomials from the tree.

use compsums::sequences::{self, BernoulliForm};

fn main() -> compsums::Result<()> {
    let n = 12;
    let routes = [
        ("generating function", sequences::bernoulli_numbers(n)),
        (
            "1/(k+1)! compositions",
            sequences::bernoulli_via_compositions(n, BernoulliForm::InverseFactorial)?,
        ),
        (
            "Stirling-weighted compositions",
            sequences::bernoulli_via_compositions(n, BernoulliForm::StirlingWeighted)?,
        ),
        ("Stirling closed form", sequences::bernoulli_via_stirling(n)),
        ("Woon row sums", sequences::bernoulli_via_woon(n)),
    ];
    for (name, b) in &routes {
        assert_eq!(b, &routes[0].1, "{name}");
    }
    for (k, b) in routes[0].1.iter().enumerate() {
        println!("B_{k:<2} = {b}");
    }

    for (k, p) in sequences::bernoulli_polynomials_by_tree(4)
        .iter()
        .enumerate()
    {
        println!("B_{k}(x) = {p}");
    }
    let r = sequences::bernoulli_poly_expansion(6)?;
    println!("expansion identity at n=6: {}", r.status());
    Ok(())
}
