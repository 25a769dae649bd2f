//! Two invariance identities: Catalan numbers reproduce themselves under
//! the composition sum, and so do Hermite polynomials (as polynomials in x).

use compsums::pitree;
use compsums::sequences;

fn main() -> compsums::Result<()> {
    let c = sequences::catalan(10);
    println!(
        "C_0..C_10: {}",
        c.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    for r in sequences::catalan_invariance(10)? {
        println!("{}: {}", r.identity, r.status());
    }

    let g = sequences::hermite_input();
    for (n, x) in pitree::row_sums(&g, 5).iter().enumerate() {
        println!("H_{}(x)/{}! = {x}", n + 1, n + 1);
    }
    println!("hermite: {}", sequences::hermite_invariance(8)?.status());
    Ok(())
}
