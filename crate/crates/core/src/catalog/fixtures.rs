//! The frozen expected-value bundle: a versioned JSON document checked
//! into the repository that records, per parameter ζ, every quantity the
//! verification suite computes — coproduct and antipode displays, the
//! center basis, group-like and character tables, matrix-block sizes,
//! subalgebra counts, and quotient recognitions.  The suite recomputes
//! everything live and diffs field by field against this record, so any
//! behavioural drift shows up as a named mismatch.

use serde_json::{json, Value};

use crate::exact_math::{Subspace, Vector};
use crate::hopf_core::TensorElem;

use super::CatalogError;

/// The checked-in expected-value document.
pub const FIXTURES_JSON: &str = include_str!("../../fixtures/catalog_v1.json");

/// Parses the checked-in document and validates its version tag.
pub fn fixture_document() -> Result<Value, CatalogError> {
    let doc: Value = serde_json::from_str(FIXTURES_JSON).map_err(|e| {
        CatalogError::Inconsistent(format!("the frozen bundle is not valid JSON: {e}"))
    })?;
    if doc["version"] != json!(1) {
        return Err(CatalogError::Inconsistent(format!(
            "unsupported frozen-bundle version {}",
            doc["version"]
        )));
    }
    Ok(doc)
}

/// The per-parameter record of the document, keyed by the short name of ζ.
pub fn fixture_scenario<'a>(doc: &'a Value, zeta_name: &str) -> Option<&'a Value> {
    let record = &doc["scenarios"][zeta_name];
    if record.is_object() {
        Some(record)
    } else {
        None
    }
}

/// A vector as sparse `[index, coefficient]` pairs in index order.
pub fn vector_json(v: &Vector) -> Value {
    Value::Array(
        v.support()
            .map(|(i, c)| json!([i, c.to_string()]))
            .collect(),
    )
}

/// A tensor-square element as sparse `[left, right, coefficient]`
/// triples in lexicographic index order.
pub fn tensor_json(t: &TensorElem) -> Value {
    Value::Array(
        t.iter()
            .map(|(&(i, j), c)| json!([i, j, c.to_string()]))
            .collect(),
    )
}

/// A subspace as the list of its canonical reduced-echelon basis
/// vectors; equal subspaces serialize identically.
pub fn subspace_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(vector_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::GaussianRational;

    #[test]
    fn the_checked_in_bundle_parses_with_the_expected_version() {
        let doc = fixture_document().expect("parses");
        assert_eq!(doc["variant"], json!("A"));
        assert!(doc["scenarios"].is_object());
    }

    #[test]
    fn serialization_helpers_emit_sorted_sparse_coordinates() {
        let mut v = Vector::zeros(4);
        v[2] = GaussianRational::rat(1, 2);
        v[0] = -&GaussianRational::i();
        assert_eq!(
            vector_json(&v),
            json!([[0, "0/1+-1/1*i"], [2, "1/2+0/1*i"]])
        );

        let mut t = TensorElem::new();
        t.insert((1, 3), GaussianRational::one());
        assert_eq!(tensor_json(&t), json!([[1, 3, "1/1+0/1*i"]]));

        let s = Subspace::span(4, &[v]);
        let b = s.basis();
        assert_eq!(b.len(), 1);
        assert_eq!(subspace_json(&s), json!([vector_json(&b[0])]));
    }
}
