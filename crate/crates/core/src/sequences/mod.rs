//! Special sequences, each realized by a closed-form generating function
//! and by at least one composition-sum or PI-tree route.

mod bernoulli;
mod invariants;
mod norlund;
mod recipes;
mod stirling;

pub use bernoulli::{
    bernoulli_expansion_rhs, bernoulli_numbers, bernoulli_poly_expansion, bernoulli_polynomials,
    bernoulli_polynomials_by_tree, bernoulli_via_compositions, bernoulli_via_stirling,
    bernoulli_via_woon, BernoulliForm, MAX_EXPANSION_N,
};
pub use invariants::{
    catalan, catalan_invariance, hermite_input, hermite_invariance, hermite_polynomials,
    hermite_rotated, linear_recurrence, linear_recurrence_report, restricted_gf, MAX_HERMITE_N,
};
pub use norlund::{
    hypergeometric_bernoulli, hypergeometric_input, hypergeometric_via_tree, norlund_input,
    norlund_numbers, norlund_polynomials, norlund_via_stirling, norlund_via_tree,
};
pub use recipes::{find, Params, Relation, SequenceRecipe, SequenceValues, MAX_ORDER, RECIPES};
pub use stirling::{stirling2, Stirling2Table};

use crate::algebra::{factorial_rational, Ring};

/// Multiplies the coefficient at index `n` by `n!`.
pub(crate) fn scale_by_factorial<C: Ring>(coeffs: Vec<C>) -> Vec<C> {
    coeffs
        .into_iter()
        .enumerate()
        .map(|(n, c)| c.scale(&factorial_rational(n)))
        .collect()
}
