//! JSON encoding of rationals and matrices.
//!
//! Rationals are strings `"p/q"` (or `"p"`); a matrix is
//! `{"rows": m, "cols": n, "entries": [[...], ...]}` with one inner array
//! per row.

use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde_json::{json, Value};

use super::field::{format_rational, parse_rational, Rational};
use super::matrix::{Matrix, RatMatrix};
use crate::error::CoreError;

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    let entries: Vec<Vec<String>> = (0..m.rows()).map(|i| m.row(i).iter().map(format_rational).collect()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

fn count(v: &Value, field: &str, ctx: &str) -> Result<usize, CoreError> {
    let x = v.get(field).ok_or_else(|| CoreError::MissingField(format!("{ctx}.{field}")))?;
    x.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| CoreError::InvalidJson(format!("{ctx}.{field} must be a non-negative integer")))
}

/// Decodes a matrix; `ctx` names the field for error messages.
pub fn matrix_from_json(v: &Value, ctx: &str) -> Result<RatMatrix, CoreError> {
    if !v.is_object() {
        return Err(CoreError::InvalidJson(format!("{ctx} must be a matrix object")));
    }
    let rows = count(v, "rows", ctx)?;
    let cols = count(v, "cols", ctx)?;
    let entries = v
        .get("entries")
        .ok_or_else(|| CoreError::MissingField(format!("{ctx}.entries")))?
        .as_array()
        .ok_or_else(|| CoreError::InvalidJson(format!("{ctx}.entries must be an array")))?;
    if entries.len() != rows {
        return Err(CoreError::ShapeMismatch {
            what: format!("{ctx}.entries"),
            expected: (rows, cols),
            found: (entries.len(), cols),
        });
    }
    let mut data = Vec::with_capacity(rows * cols);
    for row in entries {
        let row = row.as_array().ok_or_else(|| CoreError::InvalidJson(format!("{ctx}.entries rows must be arrays")))?;
        if row.len() != cols {
            return Err(CoreError::ShapeMismatch {
                what: format!("{ctx}.entries"),
                expected: (rows, cols),
                found: (rows, row.len()),
            });
        }
        for x in row {
            let q = match x {
                Value::String(s) => parse_rational(s)?,
                Value::Number(n) if n.is_i64() => parse_rational(&n.to_string())?,
                other => return Err(CoreError::MalformedRational(other.to_string())),
            };
            data.push(q);
        }
    }
    Ok(Matrix::new(rows, cols, data))
}

impl Serialize for Matrix<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> =
            (0..self.rows()).map(|i| self.row(i).iter().map(format_rational).collect()).collect();
        let mut s = serializer.serialize_struct("Matrix", 3)?;
        s.serialize_field("rows", &self.rows())?;
        s.serialize_field("cols", &self.cols())?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

/// Serializes a rational as its `"p/q"` string.
pub fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::field::ratio;

    #[test]
    fn encodes_row_major() {
        let m = RatMatrix::new(2, 2, vec![ratio(1, 2), ratio(-3, 1), ratio(0, 1), ratio(4, 6)]);
        let v = matrix_to_json(&m);
        assert_eq!(v, json!({"rows": 2, "cols": 2, "entries": [["1/2", "-3"], ["0", "2/3"]]}));
        assert_eq!(matrix_from_json(&v, "M").unwrap(), m);
        assert_eq!(serde_json::to_value(&m).unwrap(), v);
    }

    #[test]
    fn error_kinds() {
        let bad = json!({"rows": 1, "cols": 1, "entries": [["1/0"]]});
        assert_eq!(matrix_from_json(&bad, "M").unwrap_err().code(), "malformed_rational");
        let ragged = json!({"rows": 1, "cols": 2, "entries": [["1"]]});
        assert_eq!(matrix_from_json(&ragged, "M").unwrap_err().code(), "shape_mismatch");
        let missing = json!({"rows": 1, "entries": [["1"]]});
        assert_eq!(matrix_from_json(&missing, "M").unwrap_err().code(), "missing_field");
        let empty = json!({"rows": 0, "cols": 3, "entries": []});
        assert_eq!(matrix_from_json(&empty, "M").unwrap().shape(), (0, 3));
    }
}
