//! Compositions with parts in J satisfy x_n = sum_{j in J} x_{n-j}; for
//! J = {1,2} these are Fibonacci numbers.

use compsums::compositions::{self, PartSet};
use compsums::sequences;

fn main() -> compsums::Result<()> {
    for members in [vec![1, 2], vec![1, 3], vec![2, 3, 5]] {
        let j = PartSet::new(members)?;
        let rec = sequences::linear_recurrence(&j, 15);
        let gf = sequences::restricted_gf(&j, 15);
        let s: Vec<String> = rec.iter().map(ToString::to_string).collect();
        println!("J={:?}: {}", j.members(), s.join(" "));
        println!(
            "  gf check: {}",
            sequences::linear_recurrence_report(&j, 12)?.status()
        );
        assert_eq!(gf.coeff(7).to_string(), rec[6].to_string());
    }
    for c in compositions::enumerate_restricted(5, &PartSet::new(vec![1, 2])?) {
        println!("{:?}", c.parts());
    }
    Ok(())
}
