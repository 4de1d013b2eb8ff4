//! Tables, number formatting and run manifests.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;

/// 15 significant digits in scientific notation.
pub fn sig15(x: f64) -> String {
    if x.is_nan() {
        "NaN".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:.14e}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(|c| match c {
                Cell::Num(x) => sig15(*x),
                Cell::Int(k) => k.to_string(),
                Cell::Text(t) => t.clone(),
                Cell::Empty => String::new(),
            }))
            .expect("in-memory write");
        }
        w.into_inner().expect("in-memory flush")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows = self.rows.iter().map(|row| {
            let obj: serde_json::Map<String, serde_json::Value> = self
                .columns
                .iter()
                .zip(row)
                .map(|(k, c)| {
                    let v = match c {
                        Cell::Num(x) => serde_json::json!(x),
                        Cell::Int(k) => serde_json::json!(k),
                        Cell::Text(t) => serde_json::json!(t),
                        Cell::Empty => serde_json::Value::Null,
                    };
                    (k.to_string(), v)
                })
                .collect();
            serde_json::Value::Object(obj)
        });
        serde_json::Value::Array(rows.collect())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Written next to every output file. Everything except `timings` is a
/// function of the arguments.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub params: serde_json::Value,
    pub seed: u64,
    pub versions: BTreeMap<String, String>,
    pub timings: BTreeMap<String, f64>,
    pub outputs: Vec<String>,
    pub payload_sha256: String,
}

pub fn versions() -> BTreeMap<String, String> {
    BTreeMap::from([("kpz".to_string(), env!("CARGO_PKG_VERSION").to_string())])
}
