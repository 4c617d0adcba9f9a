//! JSON encodings of algebras, bivectors, subspaces and reports. Scalars are
//! carried as strings in the exact text encoding, so files round-trip without
//! loss.

use serde_json::{json, Value};

use crate::construction::{ConstructionReport, GroupReport};
use crate::error::Error;
use crate::liealg::LieAlgebra;
use crate::linalg::{Matrix, Proportionality, Vector};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::subspace::{Ambient, Subspace};

/// Which field a JSON file declares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTag {
    Q,
    Qi,
}

impl FieldTag {
    pub fn label(self) -> &'static str {
        match self {
            FieldTag::Q => "Q",
            FieldTag::Qi => "Qi",
        }
    }
}

fn field_of(v: &Value, name: &str) -> Result<Value, Error> {
    v.get(name)
        .cloned()
        .ok_or_else(|| Error::invalid_input(name, "missing field"))
}

fn as_usize(v: &Value, name: &str) -> Result<usize, Error> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::invalid_input(name, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, name: &str) -> Result<&'a Vec<Value>, Error> {
    v.as_array()
        .ok_or_else(|| Error::invalid_input(name, "expected an array"))
}

fn as_str<'a>(v: &'a Value, name: &str) -> Result<&'a str, Error> {
    v.as_str()
        .ok_or_else(|| Error::invalid_input(name, "expected a string"))
}

fn parse_scalar<S: Scalar>(v: &Value, name: &str) -> Result<S, Error> {
    S::parse(as_str(v, name)?).map_err(|e| Error::invalid_input(name, e.to_string()))
}

/// Read the `field` tag of an algebra file.
pub fn declared_field(v: &Value) -> Result<FieldTag, Error> {
    match as_str(&field_of(v, "field")?, "field")? {
        "Q" => Ok(FieldTag::Q),
        "Qi" => Ok(FieldTag::Qi),
        other => Err(Error::invalid_input(
            "field",
            format!("unknown field '{other}', expected \"Q\" or \"Qi\""),
        )),
    }
}

/// Parse an algebra file:
/// `{"field":"Q"|"Qi","dim":n,"basis":[names],
///   "brackets":[[i,j,[k,"c"]...]...],"realization":[[row-major]...]?}`.
/// Indices are 0-based.
pub fn parse_algebra<S: Scalar>(v: &Value) -> Result<LieAlgebra<S>, Error> {
    let tag = declared_field(v)?;
    if tag.label() != S::field_name() {
        return Err(Error::invalid_input(
            "field",
            format!(
                "file declares field {} but was read as {}",
                tag.label(),
                S::field_name()
            ),
        ));
    }
    let dim = as_usize(&field_of(v, "dim")?, "dim")?;
    let basis = as_array(&field_of(v, "basis")?, "basis")?
        .iter()
        .map(|b| as_str(b, "basis").map(|s| s.to_owned()))
        .collect::<Result<Vec<_>, _>>()?;
    if basis.len() != dim {
        return Err(Error::invalid_input(
            "basis",
            format!("expected {dim} names, got {}", basis.len()),
        ));
    }
    let mut entries = Vec::new();
    for (t, entry) in as_array(&field_of(v, "brackets")?, "brackets")?
        .iter()
        .enumerate()
    {
        let name = format!("brackets[{t}]");
        let arr = as_array(entry, &name)?;
        if arr.len() < 2 {
            return Err(Error::invalid_input(
                &name,
                "expected [i, j, [k, \"c\"], ...]",
            ));
        }
        let i = as_usize(&arr[0], &name)?;
        let j = as_usize(&arr[1], &name)?;
        let mut terms = Vec::new();
        for term in &arr[2..] {
            let pair = as_array(term, &name)?;
            if pair.len() != 2 {
                return Err(Error::invalid_input(&name, "terms must be [k, \"c\"] pairs"));
            }
            let k = as_usize(&pair[0], &name)?;
            let c = parse_scalar::<S>(&pair[1], &name)?;
            terms.push((k, c));
        }
        entries.push((i, j, terms));
    }
    let alg = LieAlgebra::from_structure(dim, basis, entries)?;
    match v.get("realization") {
        None | Some(Value::Null) => Ok(alg),
        Some(real) => {
            let arrays = as_array(real, "realization")?;
            if arrays.len() != dim {
                return Err(Error::invalid_input(
                    "realization",
                    format!("expected {dim} matrices, got {}", arrays.len()),
                ));
            }
            let mut mats = Vec::with_capacity(dim);
            for (t, flat) in arrays.iter().enumerate() {
                let name = format!("realization[{t}]");
                let entries = as_array(flat, &name)?;
                let len = entries.len();
                let size = (len as f64).sqrt().round() as usize;
                if size * size != len {
                    return Err(Error::invalid_input(
                        &name,
                        "row-major entries must form a square matrix",
                    ));
                }
                let mut scalars = Vec::with_capacity(len);
                for e in entries {
                    scalars.push(parse_scalar::<S>(e, &name)?);
                }
                mats.push(Matrix::from_fn(size, size, |r, c| {
                    scalars[r * size + c].clone()
                }));
            }
            alg.with_realization(mats)
        }
    }
}

pub fn algebra_to_json<S: Scalar>(alg: &LieAlgebra<S>) -> Value {
    let dim = alg.dim();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let v = alg.bracket_basis(i, j);
            if v.iter().all(|c| c.is_zero()) {
                continue;
            }
            let mut entry = vec![json!(i), json!(j)];
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    entry.push(json!([k, c.to_string()]));
                }
            }
            brackets.push(Value::Array(entry));
        }
    }
    let mut out = json!({
        "field": S::field_name(),
        "dim": dim,
        "basis": alg.basis_names(),
        "brackets": brackets,
    });
    if let Some(mats) = alg.realization() {
        let arrays: Vec<Value> = mats
            .iter()
            .map(|m| {
                Value::Array(
                    m.flatten()
                        .iter()
                        .map(|c| json!(c.to_string()))
                        .collect(),
                )
            })
            .collect();
        out["realization"] = Value::Array(arrays);
    }
    out
}

/// Parse a bivector file: `{"degree":2,"terms":[[i,j,"c"]...]}` with `i < j`.
pub fn parse_bivector<S: Scalar>(v: &Value, dim: usize) -> Result<Multivector<S>, Error> {
    let degree = as_usize(&field_of(v, "degree")?, "degree")?;
    if degree != 2 {
        return Err(Error::invalid_input("degree", "bivector files have degree 2"));
    }
    let mut terms = Vec::new();
    for (t, term) in as_array(&field_of(v, "terms")?, "terms")?.iter().enumerate() {
        let name = format!("terms[{t}]");
        let arr = as_array(term, &name)?;
        if arr.len() != 3 {
            return Err(Error::invalid_input(&name, "expected [i, j, \"c\"]"));
        }
        let i = as_usize(&arr[0], &name)?;
        let j = as_usize(&arr[1], &name)?;
        if i >= j || j >= dim {
            return Err(Error::invalid_input(
                &name,
                format!("indices must satisfy i < j < {dim}"),
            ));
        }
        let c = parse_scalar::<S>(&arr[2], &name)?;
        terms.push((vec![i, j], c));
    }
    Multivector::from_terms(dim, 2, terms)
}

pub fn bivector_to_json<S: Scalar>(mv: &Multivector<S>) -> Value {
    let terms: Vec<Value> = mv
        .terms()
        .map(|(key, c)| json!([key[0], key[1], c.to_string()]))
        .collect();
    json!({ "degree": 2, "terms": terms })
}

/// Parse a subspace file: `{"ambient":"g"|"g*","basis":[[coeffs]...]}`.
pub fn parse_subspace<S: Scalar>(v: &Value, dim: usize) -> Result<Subspace<S>, Error> {
    let ambient = match as_str(&field_of(v, "ambient")?, "ambient")? {
        "g" => Ambient::Algebra,
        "g*" => Ambient::Dual,
        other => {
            return Err(Error::invalid_input(
                "ambient",
                format!("unknown ambient '{other}', expected \"g\" or \"g*\""),
            ))
        }
    };
    let mut rows: Vec<Vector<S>> = Vec::new();
    for (t, row) in as_array(&field_of(v, "basis")?, "basis")?.iter().enumerate() {
        let name = format!("basis[{t}]");
        let coords = as_array(row, &name)?;
        if coords.len() != dim {
            return Err(Error::invalid_input(
                &name,
                format!("expected {dim} coordinates, got {}", coords.len()),
            ));
        }
        rows.push(
            coords
                .iter()
                .map(|c| parse_scalar::<S>(c, &name))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(Subspace::from_spanning(ambient, dim, rows))
}

pub fn subspace_to_json<S: Scalar>(s: &Subspace<S>) -> Value {
    json!({
        "ambient": s.ambient().label(),
        "basis": basis_rows(s),
    })
}

fn vector_strings<S: Scalar>(v: &[S]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn basis_rows<S: Scalar>(s: &Subspace<S>) -> Vec<Vec<String>> {
    s.basis().iter().map(|r| vector_strings(r)).collect()
}

fn lambda_to_json<S: Scalar>(lambda: &Option<Proportionality<S>>) -> Value {
    match lambda {
        Some(Proportionality::Unique(c)) => json!(c.to_string()),
        Some(Proportionality::Any) => json!("any"),
        None => Value::Null,
    }
}

pub fn construction_report_to_json<S: Scalar>(rep: &ConstructionReport<S>) -> Value {
    json!({
        "x": vector_strings(&rep.condition.x),
        "lambda": lambda_to_json(&rep.condition.lambda),
        "condi_holds": rep.condition.holds,
        "h_basis": basis_rows(&rep.subspace),
        "dim": rep.dim(),
        "is_subalgebra": rep.is_subalgebra(),
        "is_coisotropic": rep.is_coisotropic(),
    })
}

pub fn group_report_to_json<S: Scalar>(rep: &GroupReport<S>) -> Value {
    json!({
        "bivector": bivector_to_json(&rep.bivector),
        "h_basis": basis_rows(&rep.subspace),
        "dim": rep.dim(),
        "flat": rep.flat,
        "is_subalgebra": rep.is_subalgebra(),
        "is_coisotropic": rep.is_coisotropic(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::sl2;
    use crate::scalar::{GaussRational, Rational};

    #[test]
    fn algebra_round_trip() {
        let alg = sl2::<Rational>();
        let v = algebra_to_json(&alg);
        let back = parse_algebra::<Rational>(&v).unwrap();
        assert_eq!(back.dim(), 3);
        assert_eq!(algebra_to_json(&back), v);
        // reading under the wrong field tag is rejected
        assert!(parse_algebra::<GaussRational>(&v).is_err());
    }

    #[test]
    fn bivector_round_trip() {
        let v = json!({"degree": 2, "terms": [[1, 2, "2"], [0, 1, "-1/3"]]});
        let mv = parse_bivector::<Rational>(&v, 3).unwrap();
        assert_eq!(bivector_to_json(&mv), json!({"degree": 2, "terms": [[0, 1, "-1/3"], [1, 2, "2"]]}));
        assert!(parse_bivector::<Rational>(&json!({"degree": 2, "terms": [[2, 1, "1"]]}), 3).is_err());
        assert!(parse_bivector::<Rational>(&json!({"degree": 3, "terms": []}), 3).is_err());
    }

    #[test]
    fn subspace_round_trip() {
        let v = json!({"ambient": "g", "basis": [["1", "0", "0"], ["0", "1", "1"]]});
        let s = parse_subspace::<Rational>(&v, 3).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(subspace_to_json(&s), v);
        assert!(parse_subspace::<Rational>(&json!({"ambient": "h", "basis": []}), 3).is_err());
        assert!(
            parse_subspace::<Rational>(&json!({"ambient": "g", "basis": [["1"]]}), 3).is_err()
        );
    }

    #[test]
    fn distinct_error_fields() {
        let errs = [
            (json!({"dim": 1, "basis": ["a"], "brackets": []}), "field"),
            (json!({"field": "Q", "basis": [], "brackets": []}), "dim"),
            (json!({"field": "Q", "dim": 1, "brackets": []}), "basis"),
            (json!({"field": "Q", "dim": 1, "basis": ["a"]}), "brackets"),
        ];
        for (v, field) in errs {
            match parse_algebra::<Rational>(&v) {
                Err(Error::InvalidInput { field: f, .. }) => assert_eq!(f, field),
                other => panic!("expected invalid input on {field}, got {other:?}"),
            }
        }
    }
}
