//! Seeded random elements for property suites.

use std::sync::Arc;

use rand::Rng;

use crate::groups::Group;
use crate::iterants::Iterant;
use crate::scalars::CyclotomicField;
use crate::{Cyclotomic, Rational};

/// A rational `p/q` with `|p| ≤ bound` and `1 ≤ q ≤ bound`.
pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    Rational::new(rng.gen_range(-bound..=bound).into(), rng.gen_range(1..=bound.max(1)).into())
}

/// An element of Q(ζ_N) with small integer power-basis coefficients.
pub fn cyclotomic<R: Rng>(rng: &mut R, field: &CyclotomicField, bound: i64) -> Cyclotomic {
    let coeffs = (0..field.degree()).map(|_| Rational::from_integer(rng.gen_range(-bound..=bound).into()));
    Cyclotomic::new(field.order(), coeffs.collect()).expect("degree-length coefficients")
}

/// An iterant with every group element carrying a random vector.
pub fn iterant<R: Rng>(rng: &mut R, group: &Arc<Group>, field: &CyclotomicField, bound: i64) -> Iterant<Cyclotomic> {
    let n = group.degree();
    let terms = group.elements().map(|g| (g, (0..n).map(|_| cyclotomic(rng, field, bound)).collect())).collect::<Vec<_>>();
    Iterant::from_terms(group, terms).expect("vectors match the degree")
}
