//! JSON serialization of Yetter–Drinfel'd Hopf algebras: the plain Hopf
//! schema extended with `"group"`, `"action"` (one matrix per group
//! element) and `"coaction"` (indexed `[basis][group][basis]`).

use serde_json::Value;

use crate::hopf_core::{
    field, group_from_json, group_to_json, hopf_from_json, hopf_to_json, matrix_json, parse_array,
    parse_matrix, parse_tensor, tensor_json,
};

use super::{YDHopfAlgebra, YdError};

/// Serializes deterministically (object keys are sorted).
pub fn yd_to_json(yd: &YDHopfAlgebra) -> Value {
    let mut v = hopf_to_json(&yd.plain());
    let obj = v.as_object_mut().expect("hopf serialization is an object");
    obj.insert("group".into(), group_to_json(&yd.group));
    obj.insert(
        "action".into(),
        Value::Array(yd.action.iter().map(matrix_json).collect()),
    );
    obj.insert("coaction".into(), tensor_json(&yd.coaction));
    v
}

/// Parses and shape-checks every layer; scalars must be in reduced form.
pub fn yd_from_json(v: &Value) -> Result<YDHopfAlgebra, YdError> {
    let plain = hopf_from_json(v)?;
    let group = group_from_json(field(v, "group")?)?;
    let dim = plain.dim;
    let action = parse_array(field(v, "action")?, group.order, "action")?
        .iter()
        .map(|m| parse_matrix(m, dim, dim, "action matrix"))
        .collect::<Result<Vec<_>, _>>()?;
    let coaction = parse_tensor(field(v, "coaction")?, (dim, group.order, dim), "coaction")?;
    Ok(YDHopfAlgebra::new(
        group,
        plain.basis_labels,
        plain.mult,
        plain.unit,
        plain.comult,
        plain.counit,
        plain.antipode,
        action,
        coaction,
    ))
}
