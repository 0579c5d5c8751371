//! JSON readers and canonical writers for the file formats used by the
//! command-line front end.
//!
//! Scalars are written as strings: exact rationals in lowest terms, `inf`,
//! `-inf`, `true`, `false`. Readers also accept JSON numbers (taken by their
//! decimal text, so `0.1` is `1/10`) and booleans.

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::applications::{Context, GeneralizedMetric, GridFunction};
use crate::error::{Error, Result};
use crate::isbell::{IsbellHull, IsbellPair};
use crate::matrix::{IndexSet, QMatrix};
use crate::quantale::{parse_scalar_literal, QuantaleId, Scalar};
use crate::semimodule::QCategory;

/// How scalars are rendered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Style {
    #[default]
    Exact,
    /// Lossy decimals for reading by eye.
    Float,
}

pub fn read_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_string(), source })?;
    Ok(serde_json::from_str(&text)?)
}

/// Compact JSON with a trailing newline. Object keys come out sorted.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Invalid(format!("missing field `{key}`")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Invalid(format!("`{what}` must be an array")))
}

fn string<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| Error::Invalid(format!("`{what}` must be a string")))
}

fn expect_type(v: &Value, ty: &str) -> Result<()> {
    match v.get("type") {
        None => Ok(()),
        Some(t) if t.as_str() == Some(ty) => Ok(()),
        Some(t) => Err(Error::Invalid(format!("expected \"type\": \"{ty}\", found {t}"))),
    }
}

pub fn quantale_from_json(v: &Value) -> Result<QuantaleId> {
    string(v, "quantale")?.parse()
}

/// Reads a scalar literal, number or boolean and checks it against `q`.
pub fn scalar_from_json(q: QuantaleId, v: &Value) -> Result<Scalar> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        other => return Err(Error::InvalidScalar { literal: other.to_string(), quantale: q }),
    };
    q.parse(&text)
}

pub fn scalar_to_json(s: &Scalar, style: Style) -> Value {
    match style {
        Style::Exact => Value::String(s.literal()),
        Style::Float => Value::String(s.decimal()),
    }
}

fn rational_from_json(v: &Value) -> Result<BigRational> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        other => return Err(Error::Invalid(format!("expected a rational coordinate, found {other}"))),
    };
    match parse_scalar_literal(&text) {
        Some(Scalar::Finite(r)) => Ok(r),
        _ => Err(Error::Invalid(format!("`{text}` is not a finite rational"))),
    }
}

pub fn labels_from_json(v: &Value, what: &str) -> Result<IndexSet> {
    let labels = array(v, what)?.iter().map(|l| string(l, what).map(str::to_string)).collect::<Result<Vec<_>>>()?;
    IndexSet::new(labels)
}

fn labels_to_json(set: &IndexSet) -> Value {
    Value::Array(set.labels().iter().cloned().map(Value::String).collect())
}

fn table_from_json(q: QuantaleId, v: &Value, what: &str) -> Result<Vec<Vec<Scalar>>> {
    array(v, what)?.iter().map(|row| array(row, what)?.iter().map(|s| scalar_from_json(q, s)).collect()).collect()
}

pub fn matrix_from_json(v: &Value) -> Result<QMatrix> {
    let q = quantale_from_json(field(v, "quantale")?)?;
    let rows = labels_from_json(field(v, "rows")?, "rows")?;
    let cols = labels_from_json(field(v, "cols")?, "cols")?;
    let entries = table_from_json(q, field(v, "entries")?, "entries")?;
    QMatrix::new(q, rows, cols, entries)
}

pub fn matrix_to_json(m: &QMatrix, style: Style) -> Value {
    let entries: Vec<Value> = (0..m.n_rows())
        .map(|r| Value::Array(m.row_entries(r).iter().map(|s| scalar_to_json(s, style)).collect()))
        .collect();
    json!({
        "quantale": m.quantale().name(),
        "rows": labels_to_json(m.rows()),
        "cols": labels_to_json(m.cols()),
        "entries": entries,
    })
}

/// Reads `{"X": <row>, "Y": <column>}` and checks it is a fixed pair of `z`.
pub fn pair_from_json(z: &QMatrix, v: &Value) -> Result<IsbellPair> {
    let x = matrix_from_json(field(v, "X")?)?;
    let y = matrix_from_json(field(v, "Y")?)?;
    IsbellPair::new(z, x, y)
}

pub fn pair_to_json(p: &IsbellPair, style: Style) -> Value {
    json!({ "X": matrix_to_json(p.x(), style), "Y": matrix_to_json(p.y(), style) })
}

pub fn hull_to_json(h: &IsbellHull, style: Style) -> Value {
    let elements = match h.elements() {
        Some(es) => Value::Array(es.iter().map(|p| pair_to_json(p, style)).collect()),
        None => Value::Null,
    };
    let order: Vec<Value> = h.covering_pairs().into_iter().map(|(i, j)| json!([i, j])).collect();
    json!({ "ambient": matrix_to_json(h.ambient(), style), "elements": elements, "order": order })
}

/// Reads a matrix file (optionally tagged `"type": "qcategory"`) and checks the axioms.
pub fn qcategory_from_json(v: &Value) -> Result<QCategory> {
    expect_type(v, "qcategory")?;
    QCategory::new(matrix_from_json(v)?)
}

pub fn context_from_json(v: &Value) -> Result<Context> {
    expect_type(v, "context")?;
    let objects = labels_from_json(field(v, "objects")?, "objects")?;
    let attributes = labels_from_json(field(v, "attributes")?, "attributes")?;
    let incidence = table_from_json(QuantaleId::Boolean, field(v, "incidence")?, "incidence")?;
    let bits = incidence.into_iter().map(|r| r.iter().map(|s| s == &Scalar::Bool(true)).collect()).collect();
    Context::new(objects, attributes, bits)
}

pub fn metric_from_json(v: &Value) -> Result<GeneralizedMetric> {
    expect_type(v, "metric")?;
    let points = labels_from_json(field(v, "points")?, "points")?;
    let d = table_from_json(QuantaleId::Lawvere, field(v, "d")?, "d")?;
    GeneralizedMetric::new(points, d)
}

pub fn grid_from_json(v: &Value, what: &str) -> Result<Vec<Vec<BigRational>>> {
    array(v, what)?.iter().map(|p| array(p, what)?.iter().map(rational_from_json).collect()).collect()
}

pub fn grid_fn_from_json(v: &Value) -> Result<GridFunction> {
    expect_type(v, "grid-fn")?;
    let dim =
        field(v, "dim")?.as_u64().ok_or_else(|| Error::Invalid("`dim` must be a positive integer".into()))? as usize;
    let grid = grid_from_json(field(v, "grid")?, "grid")?;
    let values = array(field(v, "values")?, "values")?
        .iter()
        .map(|s| scalar_from_json(QuantaleId::MinPlus, s))
        .collect::<Result<Vec<_>>>()?;
    GridFunction::new(dim, grid, values)
}

pub fn grid_fn_to_json(f: &GridFunction, style: Style) -> Value {
    let grid: Vec<Value> = f
        .grid()
        .iter()
        .map(|p| Value::Array(p.iter().map(|c| scalar_to_json(&Scalar::Finite(c.clone()), style)).collect()))
        .collect();
    let values: Vec<Value> = f.values().iter().map(|s| scalar_to_json(s, style)).collect();
    json!({ "type": "grid-fn", "dim": f.dim(), "grid": grid, "values": values })
}

/// Wraps a message and code as `{"error": {"code", "message"}}`.
pub fn error_to_json(code: &str, message: &str) -> Value {
    let mut inner = Map::new();
    inner.insert("code".into(), Value::String(code.into()));
    inner.insert("message".into(), Value::String(message.into()));
    json!({ "error": inner })
}
