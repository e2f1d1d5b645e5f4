//! JSON encoding, schema `chromaglue/1`. See `docs/schema.md`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::esym::{ESym, Partition};
use crate::forest::ESymMatrix;
use crate::qalg::{QPoly, QRat};
use crate::tableau::Tableau;

pub const SCHEMA: &str = "chromaglue/1";

fn bad(what: &str) -> Error {
    Error::Malformed(format!("JSON: {what}"))
}

fn int_to_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => json!(v),
        None => json!(c.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("non-integer coefficient")),
        Value::String(s) => s.parse().map_err(|_| bad("bad integer string")),
        _ => Err(bad("coefficient must be an integer")),
    }
}

/// Ascending coefficient list.
pub fn poly_to_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(int_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<QPoly> {
    let a = v.as_array().ok_or_else(|| bad("polynomial must be an array"))?;
    Ok(QPoly::from_coeffs(a.iter().map(int_from_json).collect::<Result<_>>()?))
}

fn usizes(v: &Value, what: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| bad(what))?
        .iter()
        .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad(what)))
        .collect()
}

/// `{"lambda": [..], "num": [..], "den": [..]}`; `den` is omitted when 1.
fn term_to_json(p: &Partition, c: &QRat) -> Value {
    let mut m = Map::new();
    m.insert("lambda".into(), json!(p.parts()));
    m.insert("num".into(), poly_to_json(c.numer()));
    if !c.denom().is_one() {
        m.insert("den".into(), poly_to_json(c.denom()));
    }
    Value::Object(m)
}

pub fn esym_to_json(e: &ESym) -> Value {
    json!({
        "terms": e.terms().map(|(p, c)| term_to_json(p, c)).collect::<Vec<_>>(),
        "text": e.to_string(),
    })
}

pub fn esym_from_json(v: &Value) -> Result<ESym> {
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("missing \"terms\""))?;
    let mut out = ESym::zero();
    for t in terms {
        let lambda = usizes(t.get("lambda").ok_or_else(|| bad("missing \"lambda\""))?, "lambda")?;
        let num = poly_from_json(t.get("num").ok_or_else(|| bad("missing \"num\""))?)?;
        let den = match t.get("den") {
            Some(d) => poly_from_json(d)?,
            None => QPoly::one(),
        };
        out.add_term(Partition::new(lambda), &QRat::reduce(num, den)?);
    }
    Ok(out)
}

/// `{"graph", "rows", "cols", "q", "entries"}` with `entries[i-1][j-1]`.
pub fn matrix_to_json(graph: &str, m: &ESymMatrix) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "matrix",
        "graph": graph,
        "n": m.n,
        "rows": m.rows(),
        "cols": m.cols,
        "q": m.with_q,
        "entries": m
            .row_slices()
            .iter()
            .map(|row| row.iter().map(esym_to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn matrix_from_json(v: &Value) -> Result<ESymMatrix> {
    check_schema(v)?;
    let get = |k: &str| v.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| bad(k));
    let (n, cols, rows) = (get("n")?, get("cols")?, get("rows")?);
    if rows + 1 != n + cols {
        return Err(bad("rows must equal n + cols - 1"));
    }
    let with_q = v.get("q").and_then(Value::as_bool).ok_or_else(|| bad("q"))?;
    let entries = v.get("entries").and_then(Value::as_array).ok_or_else(|| bad("entries"))?;
    if entries.len() != rows || entries.iter().any(|r| r.as_array().map(Vec::len) != Some(cols)) {
        return Err(bad("entries must be rows x cols"));
    }
    ESymMatrix::from_fn(n, cols, with_q, crate::Exec::Sequential, |i, j| {
        esym_from_json(&entries[i - 1][j - 1])
    })
}

/// `{"drops": [..]}`.
pub fn tableau_to_json(t: &Tableau) -> Value {
    json!({ "drops": t.drops() })
}

pub fn tableau_from_json(v: &Value) -> Result<Tableau> {
    Tableau::new(usizes(v.get("drops").ok_or_else(|| bad("missing \"drops\""))?, "drops")?)
}

pub fn check_schema(v: &Value) -> Result<()> {
    match v.get("schema").and_then(Value::as_str) {
        Some(SCHEMA) => Ok(()),
        Some(other) => Err(bad(&format!("unsupported schema {other:?}"))),
        None => Err(bad("missing \"schema\"")),
    }
}

/// A top-level document: `{"schema": .., "kind": kind, ..fields}`.
pub fn document(kind: &str, fields: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("kind".into(), json!(kind));
    if let Value::Object(f) = fields {
        m.extend(f);
    }
    Value::Object(m)
}
