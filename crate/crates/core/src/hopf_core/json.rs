//! JSON serialization for Hopf algebras and groups.
//!
//! Scalars travel as the exact `a/b+c/d*i` strings of
//! [`GaussianRational`]'s `Display`/`FromStr` pair, so round-trips are
//! bit-exact and parsing rejects unreduced fractions.  `serde_json`'s
//! default map keeps keys sorted, making output deterministic.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::exact_math::{GaussianRational, Matrix, Tensor3, Vector};
use crate::groups::FiniteGroup;

use super::algebra::HopfAlgebra;
use super::HopfError;

pub(crate) fn scalar_str(x: &GaussianRational) -> Value {
    Value::String(x.to_string())
}

pub(crate) fn vector_json(v: &Vector) -> Value {
    Value::Array(v.iter().map(scalar_str).collect())
}

pub(crate) fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|r| Value::Array(m.row(r).iter().map(scalar_str).collect()))
            .collect(),
    )
}

pub(crate) fn tensor_json(t: &Tensor3) -> Value {
    let (d0, d1, _) = t.dims();
    Value::Array(
        (0..d0)
            .map(|i| {
                Value::Array(
                    (0..d1)
                        .map(|j| Value::Array(t.fiber(i, j).iter().map(scalar_str).collect()))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Serializes every structure constant of a Hopf algebra.
pub fn hopf_to_json(h: &HopfAlgebra) -> Value {
    json!({
        "dim": h.dim,
        "basis": h.basis_labels,
        "mult": tensor_json(&h.mult),
        "comult": tensor_json(&h.comult),
        "unit": vector_json(&h.unit),
        "counit": vector_json(&h.counit),
        "antipode": h.antipode.as_ref().map(matrix_json).unwrap_or(Value::Null),
    })
}

pub(crate) fn bad(msg: impl Into<String>) -> HopfError {
    HopfError::Json(msg.into())
}

pub(crate) fn parse_scalar(v: &Value, what: &str) -> Result<GaussianRational, HopfError> {
    let s = v
        .as_str()
        .ok_or_else(|| bad(format!("{what}: expected a scalar string")))?;
    GaussianRational::from_str(s).map_err(|e| bad(format!("{what}: {e}")))
}

pub(crate) fn parse_array<'a>(v: &'a Value, n: usize, what: &str) -> Result<&'a [Value], HopfError> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad(format!("{what}: expected an array")))?;
    if arr.len() != n {
        return Err(bad(format!("{what}: expected {n} entries, got {}", arr.len())));
    }
    Ok(arr)
}

pub(crate) fn parse_vector(v: &Value, n: usize, what: &str) -> Result<Vector, HopfError> {
    let arr = parse_array(v, n, what)?;
    let mut out = Vector::zeros(n);
    for (i, entry) in arr.iter().enumerate() {
        out[i] = parse_scalar(entry, &format!("{what}[{i}]"))?;
    }
    Ok(out)
}

pub(crate) fn parse_matrix(
    v: &Value,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<Matrix, HopfError> {
    let arr = parse_array(v, rows, what)?;
    let mut out = Matrix::zeros(rows, cols);
    for (r, row) in arr.iter().enumerate() {
        let row = parse_array(row, cols, &format!("{what}[{r}]"))?;
        for (c, entry) in row.iter().enumerate() {
            out[(r, c)] = parse_scalar(entry, &format!("{what}[{r}][{c}]"))?;
        }
    }
    Ok(out)
}

pub(crate) fn parse_tensor(
    v: &Value,
    dims: (usize, usize, usize),
    what: &str,
) -> Result<Tensor3, HopfError> {
    let (d0, d1, d2) = dims;
    let arr = parse_array(v, d0, what)?;
    let mut out = Tensor3::zeros(d0, d1, d2);
    for (i, plane) in arr.iter().enumerate() {
        let plane = parse_array(plane, d1, &format!("{what}[{i}]"))?;
        for (j, fiber) in plane.iter().enumerate() {
            let fiber = parse_array(fiber, d2, &format!("{what}[{i}][{j}]"))?;
            for (k, entry) in fiber.iter().enumerate() {
                let x = parse_scalar(entry, &format!("{what}[{i}][{j}][{k}]"))?;
                if !x.is_zero() {
                    out.set(i, j, k, x);
                }
            }
        }
    }
    Ok(out)
}

pub(crate) fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, HopfError> {
    v.get(key).ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

/// Reads back exactly what [`hopf_to_json`] wrote, validating shapes and
/// reduced-form scalars.  The structure itself is not re-verified here;
/// callers wanting certified objects should run `verify_hopf`.
pub fn hopf_from_json(v: &Value) -> Result<HopfAlgebra, HopfError> {
    let dim = field(v, "dim")?
        .as_u64()
        .ok_or_else(|| bad("\"dim\" must be a nonnegative integer"))? as usize;
    if dim == 0 {
        return Err(bad("\"dim\" must be positive"));
    }
    let labels_raw = parse_array(field(v, "basis")?, dim, "basis")?;
    let mut basis_labels = Vec::with_capacity(dim);
    for (i, l) in labels_raw.iter().enumerate() {
        basis_labels.push(
            l.as_str()
                .ok_or_else(|| bad(format!("basis[{i}]: expected a string")))?
                .to_string(),
        );
    }
    let mult = parse_tensor(field(v, "mult")?, (dim, dim, dim), "mult")?;
    let comult = parse_tensor(field(v, "comult")?, (dim, dim, dim), "comult")?;
    let unit = parse_vector(field(v, "unit")?, dim, "unit")?;
    let counit = parse_vector(field(v, "counit")?, dim, "counit")?;
    let antipode = match field(v, "antipode")? {
        Value::Null => None,
        m => Some(parse_matrix(m, dim, dim, "antipode")?),
    };
    Ok(HopfAlgebra::new(
        basis_labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
    ))
}

/// Serializes a group as its multiplication table.
pub fn group_to_json(g: &FiniteGroup) -> Value {
    json!({
        "order": g.order,
        "cayley": g.cayley,
        "labels": g.labels,
    })
}

/// Reads a multiplication table and re-derives identity and inverses,
/// validating the group axioms exhaustively.
pub fn group_from_json(v: &Value) -> Result<FiniteGroup, HopfError> {
    let order = field(v, "order")?
        .as_u64()
        .ok_or_else(|| bad("\"order\" must be a nonnegative integer"))? as usize;
    if order == 0 {
        return Err(bad("\"order\" must be positive"));
    }
    let rows = parse_array(field(v, "cayley")?, order, "cayley")?;
    let mut cayley = Vec::with_capacity(order);
    for (i, row) in rows.iter().enumerate() {
        let row = parse_array(row, order, &format!("cayley[{i}]"))?;
        let mut out = Vec::with_capacity(order);
        for (j, entry) in row.iter().enumerate() {
            let x = entry
                .as_u64()
                .ok_or_else(|| bad(format!("cayley[{i}][{j}]: expected an index")))?
                as usize;
            if x >= order {
                return Err(bad(format!("cayley[{i}][{j}]: index {x} out of range")));
            }
            out.push(x);
        }
        cayley.push(out);
    }
    let labels_raw = parse_array(field(v, "labels")?, order, "labels")?;
    let mut labels = Vec::with_capacity(order);
    for (i, l) in labels_raw.iter().enumerate() {
        labels.push(
            l.as_str()
                .ok_or_else(|| bad(format!("labels[{i}]: expected a string")))?
                .to_string(),
        );
    }
    let identity = (0..order)
        .find(|&e| (0..order).all(|j| cayley[e][j] == j && cayley[j][e] == j))
        .ok_or_else(|| bad("table has no identity element"))?;
    let mut inverse = vec![0; order];
    for i in 0..order {
        inverse[i] = (0..order)
            .find(|&j| cayley[i][j] == identity && cayley[j][i] == identity)
            .ok_or_else(|| bad(format!("element {i} has no inverse")))?;
    }
    for a in 0..order {
        for b in 0..order {
            for c in 0..order {
                if cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]] {
                    return Err(bad(format!(
                        "table is not associative at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    Ok(FiniteGroup {
        order,
        cayley,
        identity,
        inverse,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_group, group_algebra, GroupSpec};
    use crate::hopf_core::solve_antipode;

    #[test]
    fn hopf_round_trip_is_exact() {
        let d8 = build_group(&GroupSpec::Dihedral(4));
        let mut h = group_algebra(&d8);
        h.antipode = Some(solve_antipode(&h).unwrap());
        let v = hopf_to_json(&h);
        let back = hopf_from_json(&v).unwrap();
        assert_eq!(back.mult, h.mult);
        assert_eq!(back.comult, h.comult);
        assert_eq!(back.unit, h.unit);
        assert_eq!(back.counit, h.counit);
        assert_eq!(back.antipode, h.antipode);
        assert_eq!(back.basis_labels, h.basis_labels);
        // Serialized text is deterministic.
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            serde_json::to_string(&hopf_to_json(&back)).unwrap()
        );
    }

    #[test]
    fn group_round_trip_and_validation() {
        let q8 = build_group(&GroupSpec::Quaternion8);
        let v = group_to_json(&q8);
        let back = group_from_json(&v).unwrap();
        assert_eq!(back, q8);

        // A corrupted table is rejected.
        let mut broken = v.clone();
        broken["cayley"][0][0] = serde_json::json!(3);
        assert!(group_from_json(&broken).is_err());
    }

    #[test]
    fn malformed_scalars_are_rejected() {
        let z2 = build_group(&GroupSpec::Abelian(vec![2]));
        let h = group_algebra(&z2);
        let mut v = hopf_to_json(&h);
        v["unit"][0] = serde_json::json!("2/4+0/1*i");
        assert!(matches!(hopf_from_json(&v), Err(HopfError::Json(_))));
    }
}
