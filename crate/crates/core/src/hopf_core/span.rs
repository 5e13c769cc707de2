//! Span closure of a generating set under multiplication.

use crate::exact_math::{Subspace, Vector};

use super::algebra::HopfAlgebra;

/// The subspace spanned by all words in the given generators (the empty
/// word contributes the unit), computed by saturating right-products
/// until the dimension stabilizes.
///
/// Every word `g₁g₂…gₖ` arises as `((1·g₁)·g₂)…·gₖ`, so right-products
/// alone reach the full word span even in noncommutative algebras.
pub fn monomial_span_check(h: &HopfAlgebra, generators: &[Vector]) -> Subspace {
    let mut vectors: Vec<Vector> = vec![h.unit.clone()];
    vectors.extend(generators.iter().cloned());
    let mut space = Subspace::span(h.dim, &vectors);
    loop {
        let mut next: Vec<Vector> = space.basis();
        for b in space.basis() {
            for g in generators {
                next.push(h.mul_vec(&b, g));
            }
        }
        let bigger = Subspace::span(h.dim, &next);
        if bigger.dim() == space.dim() {
            return space;
        }
        space = bigger;
    }
}
