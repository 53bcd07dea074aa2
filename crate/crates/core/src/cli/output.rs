//! Exact serialization of polynomials, rational functions and rationals.
//!
//! Polynomials are arrays of decimal coefficient strings, low degree first;
//! the zero polynomial is `[]`. Rational functions are `{"num", "den"}`
//! pairs of such arrays. Rationals are strings `"p/q"` or `"p"`.
//! In CSV cells, coefficients are joined by `;` and a rational function is
//! written `num/den`.

use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::exact_algebra::{IntPoly, Partition, RatFunc};

/// Top-level JSON document shared by every command.
#[derive(Debug, Serialize)]
pub struct OutputDocument {
    pub command: String,
    pub params: Value,
    pub labels: Value,
    pub payload: Value,
    pub summary: Value,
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents are plain JSON");
        s.push('\n');
        s
    }
}

/// Values that have an exact JSON and CSV form.
pub trait Exact {
    fn to_json(&self) -> Value;
    fn to_cell(&self) -> String;
}

impl Exact for IntPoly {
    fn to_json(&self) -> Value {
        Value::from(self.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }

    fn to_cell(&self) -> String {
        self.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(";")
    }
}

impl Exact for RatFunc {
    fn to_json(&self) -> Value {
        json!({ "num": self.numerator().to_json(), "den": self.denominator().to_json() })
    }

    fn to_cell(&self) -> String {
        format!("{}/{}", self.numerator().to_cell(), self.denominator().to_cell())
    }
}

impl Exact for BigRational {
    fn to_json(&self) -> Value {
        Value::from(self.to_string())
    }

    fn to_cell(&self) -> String {
        self.to_string()
    }
}

pub fn partition_json(p: &Partition) -> Value {
    Value::from(p.parts().to_vec())
}

pub fn partitions_json(ps: &[Partition]) -> Value {
    Value::from(ps.iter().map(partition_json).collect::<Vec<_>>())
}

/// Parses a CSV polynomial cell back into coefficients.
pub fn parse_poly_cell(cell: &str) -> Option<IntPoly> {
    if cell.is_empty() {
        return Some(IntPoly::zero());
    }
    let coeffs = cell
        .split(';')
        .map(|c| c.parse().ok())
        .collect::<Option<Vec<_>>>()?;
    Some(IntPoly::from_coeffs(coeffs))
}

/// Parses a JSON coefficient array.
pub fn parse_poly_json(v: &Value) -> Option<IntPoly> {
    let coeffs = v
        .as_array()?
        .iter()
        .map(|c| c.as_str()?.parse().ok())
        .collect::<Option<Vec<_>>>()?;
    Some(IntPoly::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_forms() {
        let p = IntPoly::from_i64s(&[1, 0, -3]);
        assert_eq!(p.to_json(), json!(["1", "0", "-3"]));
        assert_eq!(p.to_cell(), "1;0;-3");
        assert_eq!(IntPoly::zero().to_json(), json!([]));
        assert_eq!(parse_poly_cell(&p.to_cell()), Some(p.clone()));
        assert_eq!(parse_poly_json(&p.to_json()), Some(p));
        assert_eq!(parse_poly_cell(""), Some(IntPoly::zero()));
        assert_eq!(parse_poly_cell("1;x"), None);
    }

    #[test]
    fn rational_forms() {
        let r = RatFunc::new(IntPoly::from_i64s(&[1, 1]), IntPoly::from_i64s(&[0, 2])).unwrap();
        assert_eq!(r.to_json(), json!({"num": ["1", "1"], "den": ["0", "2"]}));
        assert_eq!(r.to_cell(), "1;1/0;2");
        assert_eq!(BigRational::new(6.into(), 4.into()).to_json(), json!("3/2"));
        assert_eq!(BigRational::from_integer((-2).into()).to_cell(), "-2");
    }
}
