//! Compositions of n in mask order, the mask bijection, and compositions
//! restricted to a part set.

use compsums::compositions::{self, PartSet};

fn main() -> compsums::Result<()> {
    for c in compositions::enumerate(4)? {
        let parts: Vec<String> = c.parts().iter().map(ToString::to_string).collect();
        println!("mask {:03b}  {}", c.mask(), parts.join("+"));
    }

    let odd = PartSet::odd_up_to(9)?;
    let twos = PartSet::new(vec![1, 2])?;
    for n in 1..=10 {
        println!(
            "n={n:<2} all={:<4} odd parts={:<3} parts in {{1,2}}={}",
            1u64 << (n - 1),
            compositions::count_restricted(n, &odd),
            compositions::count_restricted(n, &twos),
        );
    }
    Ok(())
}
