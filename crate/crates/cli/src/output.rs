use serde_json::{json, Value};

use excited::eyd::ExcitedState;
use excited::latticepaths::{Path, PathTuple};
use excited::polyalg::Polynomial;
use excited::shapes::{Cell, Shape};
use excited::weyl::{SchubertContext, SignedPermutation};

pub const SCHEMA: u32 = 1;

/// A command's result in every output format.
pub struct Report {
    pub text: String,
    pub ascii: Option<String>,
    pub json: Value,
    pub ok: bool,
}

/// Wraps a command payload with the schema stamp and the echoed inputs.
pub fn document(command: &str, ctx: &SchubertContext, mut body: Value) -> Value {
    let obj = body.as_object_mut().expect("payload is an object");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    obj.insert("command".into(), json!(command));
    obj.insert("context".into(), json!(ctx.label()));
    body
}

pub fn shape(s: &Shape) -> Value {
    json!(s.parts())
}

pub fn element(v: &SignedPermutation) -> Value {
    json!(v.window())
}

pub fn cell(c: &Cell) -> Value {
    json!([c.row, c.col])
}

pub fn state(s: &ExcitedState) -> Value {
    Value::Array(s.cells.iter().map(cell).collect())
}

/// Canonical string plus the term list with coefficients as strings.
pub fn polynomial(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| json!({ "monomial": m.to_string(), "coefficient": c.to_string() }))
        .collect();
    json!({ "canonical": p.to_string(), "terms": terms })
}

fn path(p: &Path) -> Value {
    json!({
        "vertices": p.vertices.iter().map(|v| json!([v.0, v.1])).collect::<Vec<_>>(),
        "a_steps": p.a_cells.iter().map(cell).collect::<Vec<_>>(),
        "end": p.end_index(),
    })
}

pub fn tuple(t: &PathTuple) -> Value {
    Value::Array(t.paths.iter().map(path).collect())
}

pub fn cells_text<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> String {
    cells.into_iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}
