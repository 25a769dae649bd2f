//! f1∘f2∘f3∘f4 under every parenthesization: each shape becomes a nested
//! sum over compositions, and all of them give the same coefficients.

use compsums::algebra::named;
use compsums::iterated;

fn main() -> compsums::Result<()> {
    let order = 6;
    let names: Vec<String> = ["exp", "geometric", "log1p", "catalan"]
        .map(String::from)
        .to_vec();
    let fs = names
        .iter()
        .map(|n| named::parse(n, order))
        .collect::<compsums::Result<Vec<_>>>()?;

    let shapes = iterated::enumerate_shapes(fs.len())?;
    let oracle = iterated::evaluate_nested_series(&fs, &shapes[0], order)?;
    for s in &shapes {
        let v = iterated::evaluate_iterated(&fs, s, order)?;
        assert_eq!(v, oracle);
        println!("{}", s.render(&names));
        println!("  {}", iterated::plan_from_shape(s));
    }
    println!(
        "coefficients: {}",
        oracle
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    print!("{}", iterated::shape_to_dot(&shapes[2], Some(&names)));
    Ok(())
}
