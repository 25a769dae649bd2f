//! Moments and cumulants related by a sum over compositions; a Gaussian
//! has only two nonzero cumulants.

use compsums::algebra::rat;
use compsums::compsum;
use compsums::Rational;

fn main() -> compsums::Result<()> {
    // N(mu = 1, sigma^2 = 2)
    let mut m = vec![Rational::from(1), Rational::from(1)];
    for n in 2..=8usize {
        let next = &m[n - 1] + &(Rational::from(2 * (n - 1)) * &m[n - 2]);
        m.push(next);
    }
    let moments = &m[1..];
    let k = compsum::moments_to_cumulants(moments);
    println!("moments:   {}", join(moments));
    println!("cumulants: {}", join(&k));
    assert_eq!(compsum::cumulants_to_moments(&k), moments);

    // Poisson(1/2): every cumulant is 1/2
    let k = vec![rat(1, 2); 6];
    let mu = compsum::cumulants_to_moments(&k);
    for n in 1..=6 {
        assert_eq!(compsum::cumulants_to_moments_brute(&k, n)?, mu[n - 1]);
    }
    println!("Poisson(1/2) moments: {}", join(&mu));
    Ok(())
}

fn join(xs: &[Rational]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
