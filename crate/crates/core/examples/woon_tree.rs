//! Woon's tree: the PI tree on g_n = (-1)^(n+1)/(n+1)! whose row sums are
//! (-1)^n B_n/n!. Prints the first rows and the tree as Graphviz DOT.
//!
//!     cargo run --example woon_tree | tail -n +7 | dot -Tsvg > woon.svg

use compsums::pitree::{self, Labeling};
use compsums::{sequences, InputSequence};

fn main() -> compsums::Result<()> {
    let g = InputSequence::woon();
    let b = sequences::bernoulli_numbers(5);
    for (n, bn) in b.iter().enumerate().skip(1) {
        let row = pitree::build_row(&g, n)?;
        let sum = pitree::row_sum_from_tree(&g, n)?;
        println!("row {n}: {} nodes, sum {sum}  (B_{n} = {bn})", row.len());
    }
    print!("{}", pitree::export_dot(&g, 4, Labeling::Both)?);
    Ok(())
}
