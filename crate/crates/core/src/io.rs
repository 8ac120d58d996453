//! JSON structure and cochain files.
//!
//! Output is canonical: keys sorted, no insignificant whitespace, one trailing
//! LF. Schema errors carry a JSON path such as `$.table[1][0]`.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::cohomology::Cochain;
use crate::error::Error as DomainError;
use crate::magma::OpTable;
use crate::solution::SigmaTable;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Schema { path: path.into(), message: message.into() }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Magma(OpTable),
    Sigma(SigmaTable),
}

impl Structure {
    pub fn size(&self) -> usize {
        match self {
            Structure::Magma(op) => op.size(),
            Structure::Sigma(s) => s.size(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Magma(_) => "magma",
            Structure::Sigma(_) => "sigma",
        }
    }
}

/// A structure with optional descriptive metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureFile {
    pub structure: Structure,
    pub name: Option<String>,
    pub family: Option<String>,
    pub params: Option<Value>,
}

impl StructureFile {
    pub fn new(structure: Structure) -> Self {
        Self { structure, name: None, family: None, params: None }
    }

    pub fn with_family(mut self, family: &str, params: Value) -> Self {
        self.family = Some(family.to_string());
        self.params = Some(params);
        self
    }
}

impl From<OpTable> for StructureFile {
    fn from(op: OpTable) -> Self {
        Self::new(Structure::Magma(op))
    }
}

impl From<SigmaTable> for StructureFile {
    fn from(s: SigmaTable) -> Self {
        Self::new(Structure::Sigma(s))
    }
}

fn canonical(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_json(text: &str) -> Result<Map<String, Value>, IoError> {
    match serde_json::from_str::<Value>(text).map_err(|e| IoError::Json(e.to_string()))? {
        Value::Object(map) => Ok(map),
        _ => Err(schema("$", "expected a JSON object")),
    }
}

fn check_keys(map: &Map<String, Value>, allowed: &[&str]) -> Result<(), IoError> {
    match map.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(schema(format!("$.{k}"), format!("unknown field; allowed: {}", allowed.join(", ")))),
        None => Ok(()),
    }
}

fn field<'a>(map: &'a Map<String, Value>, key: &str) -> Result<&'a Value, IoError> {
    map.get(key).ok_or_else(|| schema("$", format!("missing field \"{key}\"")))
}

fn as_u64(v: &Value, path: &str) -> Result<u64, IoError> {
    v.as_u64().ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str, len: usize) -> Result<&'a Vec<Value>, IoError> {
    let arr = v.as_array().ok_or_else(|| schema(path, "expected an array"))?;
    if arr.len() != len {
        return Err(schema(path, format!("expected {len} entries, found {}", arr.len())));
    }
    Ok(arr)
}

fn element(v: &Value, path: &str, size: usize) -> Result<usize, IoError> {
    let x = as_u64(v, path)? as usize;
    if x >= size {
        return Err(schema(path, format!("entry {x} is outside 0..{size}")));
    }
    Ok(x)
}

fn optional_string(map: &Map<String, Value>, key: &str) -> Result<Option<String>, IoError> {
    map.get(key)
        .map(|v| v.as_str().map(str::to_string).ok_or_else(|| schema(format!("$.{key}"), "expected a string")))
        .transpose()
}

fn domain(e: DomainError) -> IoError {
    schema("$.table", e.to_string())
}

pub fn parse_structure(text: &str) -> Result<StructureFile, IoError> {
    let map = parse_json(text)?;
    check_keys(&map, &["family", "kind", "name", "params", "size", "table"])?;
    let kind = field(&map, "kind")?.as_str().ok_or_else(|| schema("$.kind", "expected a string"))?;
    let size = as_u64(field(&map, "size")?, "$.size")? as usize;
    if size == 0 {
        return Err(schema("$.size", "size must be at least 1"));
    }
    let rows = as_array(field(&map, "table")?, "$.table", size)?;
    let structure = match kind {
        "magma" => {
            let mut table = Vec::with_capacity(size * size);
            for (a, row) in rows.iter().enumerate() {
                let path = format!("$.table[{a}]");
                for (b, v) in as_array(row, &path, size)?.iter().enumerate() {
                    table.push(element(v, &format!("{path}[{b}]"), size)?);
                }
            }
            Structure::Magma(OpTable::new(size, table).map_err(domain)?)
        }
        "sigma" => {
            let mut table = Vec::with_capacity(size * size);
            for (a, row) in rows.iter().enumerate() {
                let path = format!("$.table[{a}]");
                for (b, v) in as_array(row, &path, size)?.iter().enumerate() {
                    let cell = format!("{path}[{b}]");
                    let pair = as_array(v, &cell, 2)?;
                    table.push((
                        element(&pair[0], &format!("{cell}[0]"), size)?,
                        element(&pair[1], &format!("{cell}[1]"), size)?,
                    ));
                }
            }
            Structure::Sigma(SigmaTable::new(size, table).map_err(domain)?)
        }
        other => return Err(schema("$.kind", format!("unknown kind {other:?}; expected \"magma\" or \"sigma\""))),
    };
    Ok(StructureFile {
        structure,
        name: optional_string(&map, "name")?,
        family: optional_string(&map, "family")?,
        params: map.get("params").cloned(),
    })
}

pub fn structure_to_string(file: &StructureFile) -> String {
    let table: Value = match &file.structure {
        Structure::Magma(op) => json!(op.rows()),
        Structure::Sigma(s) => {
            let m = s.size();
            Value::Array(
                (0..m)
                    .map(|a| Value::Array((0..m).map(|b| json!([s.apply(a, b).0, s.apply(a, b).1])).collect()))
                    .collect(),
            )
        }
    };
    let mut map = Map::new();
    map.insert("kind".into(), json!(file.structure.kind()));
    map.insert("size".into(), json!(file.structure.size()));
    map.insert("table".into(), table);
    if let Some(n) = &file.name {
        map.insert("name".into(), json!(n));
    }
    if let Some(f) = &file.family {
        map.insert("family".into(), json!(f));
    }
    if let Some(p) = &file.params {
        map.insert("params".into(), p.clone());
    }
    canonical(&Value::Object(map))
}

pub fn parse_cochain(text: &str) -> Result<Cochain, IoError> {
    let map = parse_json(text)?;
    check_keys(&map, &["degree", "modulus", "size", "values"])?;
    let degree = as_u64(field(&map, "degree")?, "$.degree")? as usize;
    let modulus = as_u64(field(&map, "modulus")?, "$.modulus")?;
    if modulus == 1 {
        return Err(schema("$.modulus", "modulus must be 0 (integers) or at least 2"));
    }
    let size = as_u64(field(&map, "size")?, "$.size")? as usize;
    if size == 0 {
        return Err(schema("$.size", "size must be at least 1"));
    }
    let expected = (size as u64)
        .checked_pow(degree as u32)
        .filter(|&n| n <= 1 << 24)
        .ok_or_else(|| schema("$.degree", "size^degree is too large"))? as usize;
    let values = field(&map, "values")?.as_array().ok_or_else(|| schema("$.values", "expected an array"))?;
    if values.len() != expected {
        return Err(schema(
            "$.values",
            format!("expected size^degree = {size}^{degree} = {expected} values, found {}", values.len()),
        ));
    }
    let values = values
        .iter()
        .enumerate()
        .map(|(i, v)| v.as_i64().ok_or_else(|| schema(format!("$.values[{i}]"), "expected an integer")))
        .collect::<Result<Vec<_>, _>>()?;
    Cochain::new(size, degree, modulus, values).map_err(|e| schema("$", e.to_string()))
}

pub fn cochain_to_string(c: &Cochain) -> String {
    canonical(&json!({
        "degree": c.degree(),
        "modulus": c.modulus(),
        "size": c.size(),
        "values": c.values(),
    }))
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Io { path: path.to_path_buf(), source })
}

pub fn load_structure(path: &Path) -> Result<StructureFile, IoError> {
    parse_structure(&read(path)?)
}

pub fn save_structure(path: &Path, file: &StructureFile) -> Result<(), IoError> {
    write(path, &structure_to_string(file))
}

pub fn load_cochain(path: &Path) -> Result<Cochain, IoError> {
    parse_cochain(&read(path)?)
}

pub fn save_cochain(path: &Path, c: &Cochain) -> Result<(), IoError> {
    write(path, &cochain_to_string(c))
}
