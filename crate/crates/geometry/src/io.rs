//! JSON in and out. Floats are written with 17 significant digits, which
//! round-trips every `f64`.

use std::io::Write;
use std::path::Path;

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::Value;

use crate::error::GeometryError;
use crate::shape::ShapeOperator;
use crate::surface::{
    catalog_shape_operator, shape_operator_from_grid, ImmersionGrid, SurfaceSpec,
};

struct Digits17<'a>(PrettyFormatter<'a>);

fn write_float<W: ?Sized + Write>(w: &mut W, v: f64) -> std::io::Result<()> {
    if v.is_finite() {
        write!(w, "{v:.16e}")
    } else {
        w.write_all(b"null")
    }
}

impl Formatter for Digits17<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, v: f64) -> std::io::Result<()> {
        write_float(w, v)
    }
    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, v: f32) -> std::io::Result<()> {
        write_float(w, f64::from(v))
    }
    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.0.begin_array(w)
    }
    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.0.end_array(w)
    }
    fn begin_array_value<W: ?Sized + Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> std::io::Result<()> {
        self.0.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.0.end_array_value(w)
    }
    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.0.begin_object(w)
    }
    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.0.end_object(w)
    }
    fn begin_object_key<W: ?Sized + Write>(
        &mut self,
        w: &mut W,
        first: bool,
    ) -> std::io::Result<()> {
        self.0.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.0.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Pretty JSON with 17 significant digits per float and a trailing newline.
pub fn to_json_17<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(
        &mut out,
        Digits17(PrettyFormatter::with_indent(b"  ")),
    );
    value.serialize(&mut ser).expect("serializing to memory");
    out.push(b'\n');
    String::from_utf8(out).expect("JSON is UTF-8")
}

pub fn save_report<T: Serialize + ?Sized>(
    path: impl AsRef<Path>,
    report: &T,
) -> Result<(), GeometryError> {
    std::fs::write(path, to_json_17(report))?;
    Ok(())
}

pub fn load_json<T: DeserializeOwned>(path: impl AsRef<Path>) -> Result<T, GeometryError> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| GeometryError::Schema(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Case {
    Spec(SurfaceSpec),
    Grid(ImmersionGrid),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixInput {
    n: Option<usize>,
    matrix: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpectrumInput {
    spectrum: Vec<f64>,
}

/// Tagged enums lose the position of an unknown field; recover it from
/// the first occurrence of the quoted key.
fn located(text: &str, e: serde_json::Error) -> GeometryError {
    let msg = e.to_string();
    if e.line() > 0 {
        return GeometryError::Schema(msg);
    }
    let key = msg
        .split('`')
        .nth(1)
        .filter(|_| msg.starts_with("unknown field"));
    let pos = key.and_then(|k| text.find(&format!("\"{k}\"")));
    match pos {
        Some(off) => {
            let before = &text[..off];
            let line = before.matches('\n').count() + 1;
            let column = off - before.rfind('\n').map_or(0, |i| i + 1) + 1;
            GeometryError::Schema(format!("{msg} at line {line} column {column}"))
        }
        None => GeometryError::Schema(msg),
    }
}

fn keys(v: &Value) -> Vec<String> {
    v.as_object()
        .map(|m| m.keys().cloned().collect())
        .unwrap_or_default()
}

/// Parse a surface case. A `kind` key selects a catalog surface and a
/// `points` key a sampled grid.
pub fn parse_case(text: &str) -> Result<Case, GeometryError> {
    let v: Value = serde_json::from_str(text).map_err(|e| GeometryError::Schema(e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| GeometryError::Schema("expected a JSON object".into()))?;
    let case = if obj.contains_key("kind") {
        Case::Spec(serde_json::from_str(text).map_err(|e| located(text, e))?)
    } else if obj.contains_key("points") {
        Case::Grid(serde_json::from_str(text).map_err(|e| located(text, e))?)
    } else {
        return Err(GeometryError::Schema(format!(
            "neither `kind` nor `points` present; keys were {:?}",
            keys(&v)
        )));
    };
    match &case {
        Case::Spec(s) => s
            .validate()
            .map_err(|e| GeometryError::Schema(e.to_string()))?,
        Case::Grid(g) => g.validate()?,
    }
    Ok(case)
}

pub fn load_case(path: impl AsRef<Path>) -> Result<Case, GeometryError> {
    parse_case(&std::fs::read_to_string(path)?)
}

/// Any accepted input turned into a shape operator: `{"n", "matrix"}`,
/// `{"spectrum"}`, a catalog surface or a sampled grid.
pub fn parse_operator(text: &str) -> Result<ShapeOperator, GeometryError> {
    let v: Value = serde_json::from_str(text).map_err(|e| GeometryError::Schema(e.to_string()))?;
    let schema = |e: serde_json::Error| GeometryError::Schema(e.to_string());
    let obj = v
        .as_object()
        .ok_or_else(|| GeometryError::Schema("expected a JSON object".into()))?;
    if obj.contains_key("matrix") {
        let m: MatrixInput = serde_json::from_value(v).map_err(schema)?;
        if let Some(n) = m.n {
            if n != m.matrix.len() {
                return Err(GeometryError::Schema(format!(
                    "n: {n} disagrees with {} matrix rows",
                    m.matrix.len()
                )));
            }
        }
        return ShapeOperator::from_rows(&m.matrix)
            .map_err(|e| GeometryError::Schema(format!("matrix: {e}")));
    }
    if obj.contains_key("spectrum") {
        let s: SpectrumInput = serde_json::from_value(v).map_err(schema)?;
        return ShapeOperator::diagonal(&s.spectrum)
            .map_err(|e| GeometryError::Schema(format!("spectrum: {e}")));
    }
    match parse_case(text)? {
        Case::Spec(s) => catalog_shape_operator(&s),
        Case::Grid(g) => Ok(shape_operator_from_grid(&g)?.0),
    }
}
