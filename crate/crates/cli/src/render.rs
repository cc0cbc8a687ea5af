use anyhow::Result;
use clap::ValueEnum;
use qutrit_core::{ExactComplex, ExactScalar};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Float,
}

#[derive(Debug, Clone)]
pub struct Table {
    pub title: String,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, headers: &[&'static str]) -> Self {
        Self { title: title.into(), headers: headers.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }
}

/// A command's output: the JSON document and its tabular views. CSV carries
/// only the first table.
#[derive(Debug, Clone)]
pub struct Document {
    pub json: Value,
    pub tables: Vec<Table>,
}

/// Cell formatting for the selected mode.
#[derive(Debug, Clone, Copy)]
pub struct Cells(pub ModeArg);

impl Cells {
    pub fn scalar(self, x: &ExactScalar) -> String {
        match self.0 {
            ModeArg::Exact => x.to_string(),
            ModeArg::Float => x.to_f64().to_string(),
        }
    }

    pub fn complex(self, z: &ExactComplex) -> String {
        match self.0 {
            ModeArg::Exact => z.to_string(),
            ModeArg::Float => {
                let c = z.to_c64();
                if c.im == 0.0 {
                    c.re.to_string()
                } else {
                    format!("{}{:+}i", c.re, c.im)
                }
            }
        }
    }
}

fn is_scalar_object(map: &serde_json::Map<String, Value>) -> bool {
    map.len() == 4 && ["a", "b", "c", "d"].iter().all(|k| map.get(*k).is_some_and(Value::is_string))
}

/// Replaces every exact scalar object by its float value and relabels exact
/// matrices, which turns the exact schemas into their float counterparts.
pub fn to_float_json(value: Value) -> Value {
    match value {
        Value::Object(map) if is_scalar_object(&map) => {
            let x: ExactScalar = serde_json::from_value(Value::Object(map)).expect("scalar schema");
            serde_json::json!(x.to_f64())
        }
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| {
                    let v = if k == "mode" && v == "exact" { Value::from("float") } else { to_float_json(v) };
                    (k, v)
                })
                .collect(),
        ),
        Value::Array(items) => Value::Array(items.into_iter().map(to_float_json).collect()),
        other => other,
    }
}

fn markdown_cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn render_markdown(tables: &[Table]) -> String {
    let mut out = String::new();
    for t in tables {
        out.push_str(&format!("### {}\n\n", t.title));
        out.push_str(&format!("| {} |\n", t.headers.join(" | ")));
        out.push_str(&format!("|{}\n", "---|".repeat(t.headers.len())));
        for row in &t.rows {
            let cells: Vec<String> = row.iter().map(|c| markdown_cell(c)).collect();
            out.push_str(&format!("| {} |\n", cells.join(" | ")));
        }
        out.push('\n');
    }
    out
}

fn render_csv(table: Option<&Table>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(t) = table {
        w.write_record(&t.headers)?;
        for row in &t.rows {
            w.write_record(row)?;
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn render(doc: Document, format: Format, mode: ModeArg) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let json = match mode {
                ModeArg::Exact => doc.json,
                ModeArg::Float => to_float_json(doc.json),
            };
            serde_json::to_string_pretty(&json)? + "\n"
        }
        Format::Csv => render_csv(doc.tables.first())?,
        Format::Markdown => render_markdown(&doc.tables),
    })
}
