use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

use super::{build_spherical_drawing, PlanarDrawing, SphericalDrawing};
use crate::graph::Graph;
use crate::plane::Point2;
use crate::sphere::UnitVec3;
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, PartialEq)]
pub enum Drawing {
    Spherical(SphericalDrawing),
    Planar(PlanarDrawing),
}

impl Drawing {
    pub fn graph(&self) -> &Graph {
        match self {
            Drawing::Spherical(d) => d.graph(),
            Drawing::Planar(d) => d.graph(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Drawing::Spherical(_) => "spherical",
            Drawing::Planar(_) => "planar",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub tolerances: Tolerances,
}

impl Meta {
    pub fn named(name: impl Into<String>) -> Self {
        Self {
            name: Some(name.into()),
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DrawingDocument {
    pub drawing: Drawing,
    pub meta: Meta,
}

impl DrawingDocument {
    pub fn spherical(d: SphericalDrawing, meta: Meta) -> Self {
        Self {
            drawing: Drawing::Spherical(d),
            meta,
        }
    }

    pub fn planar(d: PlanarDrawing, meta: Meta) -> Self {
        Self {
            drawing: Drawing::Planar(d),
            meta,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.drawing.graph()
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.meta.tolerances
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid field `{field}`: {message}")]
    Field { field: String, message: String },
}

fn field_error(field: &str, message: impl ToString) -> DocumentError {
    DocumentError::Field {
        field: field.to_string(),
        message: message.to_string(),
    }
}

const FIELDS: [&str; 6] = ["kind", "n", "edges", "positions", "long_flags", "meta"];

fn to_value(doc: &DrawingDocument) -> Value {
    let g = doc.graph();
    let mut obj = Map::new();
    obj.insert("kind".into(), json!(doc.drawing.kind()));
    obj.insert("n".into(), json!(g.n()));
    obj.insert("edges".into(), json!(g.edges()));
    match &doc.drawing {
        Drawing::Spherical(d) => {
            let pos: Vec<[f64; 3]> = d.positions().iter().map(|p| p.to_array()).collect();
            obj.insert("positions".into(), json!(pos));
            obj.insert("long_flags".into(), json!(d.long_flags()));
        }
        Drawing::Planar(d) => {
            let pos: Vec<[f64; 2]> = d.positions().iter().map(|&p| p.into()).collect();
            obj.insert("positions".into(), json!(pos));
        }
    }
    obj.insert("meta".into(), serde_json::to_value(&doc.meta).expect("meta is plain data"));
    Value::Object(obj)
}

/// JSON text with every float written to 17 significant digits.
pub fn serialize(doc: &DrawingDocument) -> String {
    let mut out = String::new();
    write_value(&mut out, &to_value(doc), 0);
    out.push('\n');
    out
}

pub fn deserialize(text: &str) -> Result<DrawingDocument, DocumentError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocumentError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let Value::Object(map) = value else {
        return Err(DocumentError::Parse {
            line: 1,
            column: 1,
            message: "document must be a JSON object".into(),
        });
    };
    if let Some(k) = map.keys().find(|k| !FIELDS.contains(&k.as_str())) {
        return Err(field_error(k, "unknown field"));
    }
    let kind: String = field(&map, "kind")?;
    let n: usize = field(&map, "n")?;
    let edges: Vec<(usize, usize)> = field(&map, "edges")?;
    let meta: Meta = optional_field(&map, "meta")?.unwrap_or_default();
    let g = Graph::new(n, edges).map_err(|e| field_error("edges", e))?;
    let tol = meta.tolerances;
    let drawing = match kind.as_str() {
        "spherical" => {
            let raw: Vec<[f64; 3]> = field(&map, "positions")?;
            let positions = raw
                .iter()
                .map(|a| UnitVec3::new(a[0], a[1], a[2], tol.norm))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| field_error("positions", e))?;
            let flags: Vec<bool> =
                optional_field(&map, "long_flags")?.unwrap_or_else(|| vec![false; g.edge_count()]);
            let d = build_spherical_drawing(g, positions, flags, &tol).map_err(|e| {
                let name = match e {
                    super::DrawingError::FlagCount { .. } => "long_flags",
                    _ => "positions",
                };
                field_error(name, e)
            })?;
            Drawing::Spherical(d)
        }
        "planar" => {
            if map.contains_key("long_flags") {
                return Err(field_error("long_flags", "not allowed in a planar drawing"));
            }
            let raw: Vec<[f64; 2]> = field(&map, "positions")?;
            let positions = raw.into_iter().map(Point2::from).collect();
            let d = PlanarDrawing::new(g, positions, &tol).map_err(|e| field_error("positions", e))?;
            Drawing::Planar(d)
        }
        other => {
            return Err(field_error(
                "kind",
                format!("unknown kind `{other}`, expected `spherical` or `planar`"),
            ))
        }
    };
    Ok(DrawingDocument { drawing, meta })
}

fn field<T: DeserializeOwned>(map: &Map<String, Value>, name: &str) -> Result<T, DocumentError> {
    optional_field(map, name)?.ok_or_else(|| field_error(name, "missing"))
}

fn optional_field<T: DeserializeOwned>(
    map: &Map<String, Value>,
    name: &str,
) -> Result<Option<T>, DocumentError> {
    match map.get(name) {
        None => Ok(None),
        Some(v) => serde_json::from_value(v.clone())
            .map(Some)
            .map_err(|e| field_error(name, e)),
    }
}

/// `%.17g`: shortest of fixed and exponent notation, trailing zeros removed.
pub(crate) fn format_g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let sign = if negative { "-" } else { "" };
    if !(-4..17).contains(&exp) {
        let (lead, rest) = digits.split_at(1);
        let rest = rest.trim_end_matches('0');
        let frac = if rest.is_empty() { String::new() } else { format!(".{rest}") };
        let esign = if exp < 0 { '-' } else { '+' };
        return format!("{sign}{lead}{frac}e{esign}{:02}", exp.abs());
    }
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else {
        let (int, frac) = digits.split_at(exp as usize + 1);
        format!("{int}.{frac}")
    };
    let body = body.trim_end_matches('0').trim_end_matches('.');
    format!("{sign}{body}")
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Number(n) if n.is_f64() => out.push_str(&format_g17(n.as_f64().expect("f64"))),
        Value::Array(items) if items.iter().all(is_scalar) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_value(out, item, indent);
            }
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&" ".repeat(indent + 2));
                write_value(out, item, indent + 2);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&" ".repeat(indent + 2));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, indent + 2);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}
