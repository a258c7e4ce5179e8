//! Canonical JSON for algebras, graded maps and elements.
//!
//! Algebra: `{"dim_even": n, "dim_odd": m, "products": [{"left": "e1",
//! "right": "f1", "result": {"f2": "1/2"}}]}`. Products are listed in basis
//! order of `(left, right)` with zero products left out, and result keys
//! follow basis order. Rationals are strings `"p/q"` or `"p"`.

use serde_json::{json, Map, Value};
use thiserror::Error;

use zinbiel_core::exactla::{one, parse_rational, zero, Matrix, Rational};
use zinbiel_core::maps::{GradedLinearMap, MapError};
use zinbiel_core::superalg::{AlgebraError, BasisLabel, SuperAlgebra, SuperElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Schema(String),
    #[error("{0}")]
    Rational(String),
    #[error("{0}")]
    Label(String),
    #[error("duplicate product {0}{1}")]
    Duplicate(BasisLabel, BasisLabel),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("cannot parse element {input:?}: {reason}")]
    Element { input: String, reason: String },
}

impl FormatError {
    /// Short machine-readable category.
    pub fn kind(&self) -> &'static str {
        match self {
            FormatError::Json(_) => "malformed_json",
            FormatError::Schema(_) | FormatError::Duplicate(..) => "schema",
            FormatError::Rational(_) => "rational",
            FormatError::Label(_) => "label",
            FormatError::Algebra(AlgebraError::DimensionMismatch { .. } | AlgebraError::LabelOutOfRange { .. }) => {
                "dimension_mismatch"
            }
            FormatError::Algebra(_) => "grading",
            FormatError::Map(MapError::DimensionMismatch { .. } | MapError::TotalDimensionMismatch(..)) => {
                "dimension_mismatch"
            }
            FormatError::Map(_) => "singular_map",
            FormatError::Element { .. } => "element",
        }
    }
}

fn schema<T>(msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Schema(msg.into()))
}

pub fn rational_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn rational_from_json(v: &Value) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| FormatError::Rational(e.to_string())),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            parse_rational(&n.to_string()).map_err(|e| FormatError::Rational(e.to_string()))
        }
        other => Err(FormatError::Rational(format!("expected a rational string, found {other}"))),
    }
}

pub fn parse_json(text: &str) -> Result<Value, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn label_from_str(s: &str) -> Result<BasisLabel, FormatError> {
    s.parse().map_err(|e: zinbiel_core::superalg::ParseLabelError| FormatError::Label(e.to_string()))
}

fn terms_json(alg_n: usize, coords: &[Rational]) -> Value {
    let mut obj = Map::new();
    for (label, c) in SuperElement::from_coords(alg_n, coords).terms() {
        obj.insert(label.to_string(), rational_json(&c));
    }
    Value::Object(obj)
}

pub fn algebra_json(alg: &SuperAlgebra) -> Value {
    let products: Vec<Value> = alg
        .nonzero_products()
        .map(|(i, j, _)| {
            json!({
                "left": alg.label(i).to_string(),
                "right": alg.label(j).to_string(),
                "result": terms_json(alg.dim_even(), &alg.basis_product(i, j)),
            })
        })
        .collect();
    json!({
        "dim_even": alg.dim_even(),
        "dim_odd": alg.dim_odd(),
        "products": products,
    })
}

fn dim_field(obj: &Map<String, Value>, key: &str) -> Result<usize, FormatError> {
    match obj.get(key).and_then(Value::as_u64) {
        Some(d) => usize::try_from(d).or_else(|_| schema(format!("{key} is too large"))),
        None => schema(format!("missing non-negative integer {key:?}")),
    }
}

pub fn algebra_from_json(v: &Value) -> Result<SuperAlgebra, FormatError> {
    let Some(obj) = v.as_object() else {
        return schema("algebra must be a JSON object");
    };
    let (n, m) = (dim_field(obj, "dim_even")?, dim_field(obj, "dim_odd")?);
    let products = match obj.get("products") {
        None => &Vec::new(),
        Some(Value::Array(a)) => a,
        Some(_) => return schema("\"products\" must be an array"),
    };
    let mut alg = SuperAlgebra::new(n, m);
    let mut seen = std::collections::BTreeSet::new();
    for p in products {
        let label = |key: &str| match p.get(key).and_then(Value::as_str) {
            Some(s) => label_from_str(s),
            None => schema(format!("product entry needs a string {key:?}")),
        };
        let (left, right) = (label("left")?, label("right")?);
        if !seen.insert((left, right)) {
            return Err(FormatError::Duplicate(left, right));
        }
        let Some(result) = p.get("result").and_then(Value::as_object) else {
            return schema(format!("product {left}{right} needs an object \"result\""));
        };
        let mut coords = vec![zero(); n + m];
        for (key, c) in result {
            let out = label_from_str(key)?;
            let idx = alg.index_of(out)?;
            coords[idx] += rational_from_json(c)?;
        }
        alg.index_of(left)?;
        alg.index_of(right)?;
        alg.set_product(left, right, &SuperElement::from_coords(n, &coords))?;
    }
    Ok(alg)
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.row_vecs()
            .iter()
            .map(|r| Value::Array(r.iter().map(rational_json).collect()))
            .collect(),
    )
}

fn matrix_from_json(v: Option<&Value>, key: &str) -> Result<Matrix, FormatError> {
    let Some(rows) = v.and_then(Value::as_array) else {
        return schema(format!("map needs an array of rows {key:?}"));
    };
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let Some(r) = r.as_array() else {
            return schema(format!("rows of {key:?} must be arrays"));
        };
        out.push(r.iter().map(rational_from_json).collect::<Result<Vec<_>, _>>()?);
    }
    let cols = out.first().map_or(0, Vec::len);
    if out.iter().any(|r| r.len() != cols) {
        return schema(format!("rows of {key:?} have different lengths"));
    }
    Matrix::from_rows(cols, out).or_else(|e| schema(e.to_string()))
}

/// `{"even": [[..]], "odd": [[..]]}`; column `j` is the image of basis `j`.
pub fn map_json(p: &GradedLinearMap) -> Value {
    json!({"even": matrix_json(p.even_block()), "odd": matrix_json(p.odd_block())})
}

pub fn map_from_json(v: &Value) -> Result<GradedLinearMap, FormatError> {
    Ok(GradedLinearMap::new(
        matrix_from_json(v.get("even"), "even")?,
        matrix_from_json(v.get("odd"), "odd")?,
    )?)
}

/// `e1+1/2f2`, `-f1`, `0`.
pub fn element_string(x: &SuperElement) -> String {
    let mut out = String::new();
    for (label, c) in x.terms() {
        let neg = c < zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if abs != one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(&label.to_string());
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses sums like `e1+1/2e3`, `2*f1 - e2` or `0` into an element of an
/// `(n, m)` algebra.
pub fn parse_element(input: &str, n: usize, m: usize) -> Result<SuperElement, FormatError> {
    let err = |reason: &str| FormatError::Element {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(err("empty expression"));
    }
    let mut coords = vec![zero(); n + m];
    if text == "0" {
        return Ok(SuperElement::from_coords(n, &coords));
    }
    let mut rest = text.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            negative = true;
        } else if !first {
            return Err(err("expected '+' or '-' between terms"));
        }
        first = false;
        let label_at = rest.find(['e', 'f']).ok_or_else(|| err("term without a basis label"))?;
        let coeff_text = rest[..label_at].trim_end_matches('*');
        let mut coeff = if coeff_text.is_empty() {
            one()
        } else {
            parse_rational(coeff_text).map_err(|e| err(&e.to_string()))?
        };
        if negative {
            coeff = -coeff;
        }
        let tail = &rest[label_at..];
        let label_len = 1 + tail[1..].find(|c: char| !c.is_ascii_digit()).unwrap_or(tail.len() - 1);
        let label = label_from_str(&tail[..label_len]).map_err(|e| err(&e.to_string()))?;
        let idx = match label.parity {
            zinbiel_core::superalg::Parity::Even if label.index <= n => label.index - 1,
            zinbiel_core::superalg::Parity::Odd if label.index <= m => n + label.index - 1,
            _ => return Err(err(&format!("{label} is outside dimensions ({n}, {m})"))),
        };
        coords[idx] += coeff;
        rest = &tail[label_len..];
    }
    Ok(SuperElement::from_coords(n, &coords))
}
