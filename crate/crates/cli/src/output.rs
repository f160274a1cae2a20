//! Report envelope and the three renderers.

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub scanned: usize,
    pub confirmed: usize,
    pub equality_cases: usize,
    pub counterexamples: usize,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl Summary {
    pub fn with(mut self, key: &str, value: impl Serialize) -> Self {
        self.extra.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable"),
        );
        self
    }
}

/// What a command produced, before rendering.
pub struct Outcome {
    pub results: Vec<Value>,
    pub summary: Summary,
    pub text: String,
    pub exit: u8,
}

#[derive(Serialize)]
struct Envelope<'a, C: Serialize> {
    command: &'a str,
    config: &'a C,
    results: &'a [Value],
    summary: &'a Summary,
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn num(x: f64) -> String {
    let r = round12(x);
    if r != 0.0 && (r.abs() < 1e-4 || r.abs() >= 1e15) {
        format!("{r:e}")
    } else {
        r.to_string()
    }
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n
                .as_f64()
                .map(round12)
                .and_then(serde_json::Number::from_f64)
            {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

pub fn to_value(x: impl Serialize) -> Value {
    let mut v = serde_json::to_value(x).expect("serializable");
    round_floats(&mut v);
    v
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten(&key(k), inner, out);
            }
        }
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn write_csv(results: &[Value], w: impl Write) -> Result<()> {
    let rows: Vec<Vec<(String, String)>> = results
        .iter()
        .map(|r| {
            let mut row = Vec::new();
            flatten("", r, &mut row);
            row
        })
        .collect();
    let mut headers: Vec<String> = Vec::new();
    for row in &rows {
        for (k, _) in row {
            if !headers.contains(k) {
                headers.push(k.clone());
            }
        }
    }
    let mut out = csv::Writer::from_writer(w);
    out.write_record(&headers)?;
    for row in rows {
        out.write_record(headers.iter().map(|h| {
            row.iter()
                .find(|(k, _)| k == h)
                .map_or("", |(_, v)| v.as_str())
        }))?;
    }
    out.flush()?;
    Ok(())
}

pub fn render<C: Serialize>(
    command: &str,
    config: &C,
    outcome: &Outcome,
    format: Format,
    w: &mut dyn Write,
) -> Result<()> {
    match format {
        Format::Json => {
            let envelope = Envelope {
                command,
                config,
                results: &outcome.results,
                summary: &outcome.summary,
            };
            let mut v = serde_json::to_value(&envelope)?;
            round_floats(&mut v);
            serde_json::to_writer_pretty(&mut *w, &v)?;
            writeln!(w)?;
        }
        Format::Csv => write_csv(&outcome.results, w)?,
        Format::Text => w.write_all(outcome.text.as_bytes())?,
    }
    Ok(())
}
