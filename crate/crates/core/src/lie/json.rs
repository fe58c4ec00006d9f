//! JSON schema for algebras and modules.
//!
//! ```json
//! { "field": "Q" | {"Fp": p}, "dim": n, "basis": [names],
//!   "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1/2"}}] }
//! ```
//! Modules carry `"algebra"` (the schema above) and `"action"` in place of
//! `"brackets"`, where entry `(i, j)` is `e_i · v_j`.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use super::{LModule, LieAlgebra, LieError};
use crate::field::{Field, FieldTag};
use crate::linalg::SparseVec;

/// Parses JSON text, keeping line and column on failure.
pub fn parse_text(text: &str) -> Result<Value, LieError> {
    serde_json::from_str(text).map_err(|e| LieError::Json { line: e.line(), column: e.column(), message: e.to_string() })
}

pub fn field_tag(v: &Value) -> Result<FieldTag, LieError> {
    let f = v.get("field").ok_or_else(|| LieError::Schema("missing \"field\"".into()))?;
    Ok(FieldTag::from_json(f)?)
}

pub fn vector_to_json<F: Field>(v: &SparseVec<F>) -> Value {
    let mut m = Map::new();
    for (k, c) in v.iter() {
        m.insert(k.to_string(), c.to_json());
    }
    Value::Object(m)
}

pub fn vector_from_json<F: Field>(v: &Value) -> Result<SparseVec<F>, LieError> {
    let obj = v.as_object().ok_or_else(|| LieError::Schema("coeffs must be an object".into()))?;
    let mut pairs = Vec::with_capacity(obj.len());
    for (k, c) in obj {
        let idx: usize = k.parse().map_err(|_| LieError::Schema(format!("bad coefficient index `{k}`")))?;
        pairs.push((idx, F::from_json(c)?));
    }
    Ok(SparseVec::from_pairs(pairs))
}

fn check_field<F: Field>(v: &Value) -> Result<(), LieError> {
    let found = field_tag(v)?;
    if found != F::tag() {
        return Err(LieError::FieldMismatch { expected: F::tag(), found });
    }
    Ok(())
}

fn basis_names(v: &Value) -> Result<Vec<String>, LieError> {
    let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| LieError::Schema("missing \"dim\"".into()))? as usize;
    let names = match v.get("basis") {
        Some(Value::Array(a)) => a
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| LieError::Schema("basis names must be strings".into())))
            .collect::<Result<Vec<_>, _>>()?,
        None => (1..=dim).map(|i| format!("e{i}")).collect(),
        _ => return Err(LieError::Schema("\"basis\" must be an array".into())),
    };
    if names.len() != dim {
        return Err(LieError::DimensionMismatch { expected: dim, found: names.len() });
    }
    Ok(names)
}

fn entries<F: Field>(v: &Value, key: &str) -> Result<Vec<(usize, usize, SparseVec<F>)>, LieError> {
    let Some(list) = v.get(key) else {
        return Ok(Vec::new());
    };
    let list = list.as_array().ok_or_else(|| LieError::Schema(format!("\"{key}\" must be an array")))?;
    list.iter()
        .map(|e| {
            let i = e.get("i").and_then(Value::as_u64).ok_or_else(|| LieError::Schema("entry needs \"i\"".into()))?;
            let j = e.get("j").and_then(Value::as_u64).ok_or_else(|| LieError::Schema("entry needs \"j\"".into()))?;
            let c = e.get("coeffs").ok_or_else(|| LieError::Schema("entry needs \"coeffs\"".into()))?;
            Ok((i as usize, j as usize, vector_from_json(c)?))
        })
        .collect()
}

pub fn algebra_to_json<F: Field>(l: &LieAlgebra<F>) -> Value {
    let brackets: Vec<Value> =
        l.brackets().map(|(i, j, v)| json!({ "i": i, "j": j, "coeffs": vector_to_json(v) })).collect();
    let mut out = json!({
        "field": F::tag().to_json(),
        "dim": l.dim(),
        "basis": l.names(),
        "brackets": brackets,
    });
    let partial = l.partial_pairs();
    if !partial.is_empty() {
        out["partial"] = json!(partial);
    }
    out
}

pub fn algebra_from_json<F: Field>(v: &Value) -> Result<LieAlgebra<F>, LieError> {
    check_field::<F>(v)?;
    let names = basis_names(v)?;
    let l = LieAlgebra::new(names, entries(v, "brackets")?)?;
    let partial: Vec<(usize, usize)> = match v.get("partial") {
        Some(p) => serde_json::from_value(p.clone()).map_err(|e| LieError::Schema(e.to_string()))?,
        None => Vec::new(),
    };
    Ok(l.with_partial(partial))
}

pub fn module_to_json<F: Field>(m: &LModule<F>) -> Value {
    let action: Vec<Value> =
        m.actions().map(|(i, j, v)| json!({ "i": i, "j": j, "coeffs": vector_to_json(v) })).collect();
    json!({
        "field": F::tag().to_json(),
        "algebra": algebra_to_json(m.lie()),
        "dim": m.dim(),
        "basis": m.names(),
        "action": action,
    })
}

pub fn module_from_json<F: Field>(v: &Value) -> Result<LModule<F>, LieError> {
    check_field::<F>(v)?;
    let alg = v.get("algebra").ok_or_else(|| LieError::Schema("module needs \"algebra\"".into()))?;
    let lie = Arc::new(algebra_from_json::<F>(alg)?);
    LModule::new(lie, basis_names(v)?, entries(v, "action")?)
}
