//! Output formats shared by all commands.

use clap::ValueEnum;
use cy4quot::{CalabiYau4Diamond, HodgeDiamond4, Rational};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Md,
    Tex,
}

/// A titled table of already formatted cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub title: Option<String>,
    pub headers: Vec<String>,
    /// Replacement header row for tex output.
    pub tex_headers: Option<Vec<String>>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Self {
            title: None,
            headers: headers.into_iter().map(Into::into).collect(),
            tex_headers: None,
            rows: Vec::new(),
        }
    }

    pub fn with_tex_headers<S: Into<String>>(mut self, headers: impl IntoIterator<Item = S>) -> Self {
        self.tex_headers = Some(headers.into_iter().map(Into::into).collect());
        self
    }

    pub fn titled(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }
}

/// Result of a command: a JSON document and the equivalent tables for text formats.
#[derive(Clone, Debug)]
pub struct Report {
    pub json: Value,
    pub tables: Vec<Table>,
    /// Free text shown before the tables in markdown (e.g. a drawn diamond).
    pub preamble: Option<String>,
}

impl Report {
    pub fn new(json: Value, tables: Vec<Table>) -> Self {
        Self { json, tables, preamble: None }
    }

    pub fn with_preamble(mut self, text: String) -> Self {
        self.preamble = Some(text);
        self
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.tables.iter().map(csv_table).collect::<Vec<_>>().join("\n"),
            OutputFormat::Md => {
                let mut parts = Vec::new();
                if let Some(pre) = &self.preamble {
                    parts.push(format!("```\n{pre}\n```\n"));
                }
                parts.extend(self.tables.iter().map(md_table));
                parts.join("\n")
            }
            OutputFormat::Tex => self.tables.iter().map(tex_table).collect::<Vec<_>>().join("\n"),
        }
    }
}

fn csv_table(t: &Table) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    w.write_record(&t.headers).expect("in-memory write");
    for row in &t.rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn md_table(t: &Table) -> String {
    let mut out = String::new();
    if let Some(title) = &t.title {
        out.push_str(&format!("### {title}\n\n"));
    }
    let line = |cells: &[String]| format!("| {} |\n", cells.join(" | "));
    out.push_str(&line(&t.headers));
    out.push_str(&line(&vec!["---".to_string(); t.headers.len()]));
    for row in &t.rows {
        out.push_str(&line(row));
    }
    out
}

fn tex_escape(cell: &str) -> String {
    cell.replace('_', "\\_").replace('#', "\\#")
}

fn tex_table(t: &Table) -> String {
    let mut out = String::new();
    if let Some(title) = &t.title {
        out.push_str(&format!("% {title}\n"));
    }
    let line = |cells: &[String]| {
        let body: Vec<String> = cells.iter().map(|c| tex_escape(c)).collect();
        format!("{} \\\\ \\hline\n", body.join(" & "))
    };
    out.push_str("\\hline\n");
    match &t.tex_headers {
        Some(headers) => out.push_str(&format!("{} \\\\ \\hline\n", headers.join(" & "))),
        None => out.push_str(&line(&t.headers)),
    }
    for row in &t.rows {
        out.push_str(&line(row));
    }
    out
}

/// `p/q`, or `p` when integral.
pub fn rat_text(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An integer, or `{"num": p, "den": q}` when non-integral.
pub fn rat_json(r: &Rational) -> Value {
    if r.is_integer() {
        json!(r.numer())
    } else {
        json!({ "num": r.numer(), "den": r.denom() })
    }
}

#[derive(Serialize)]
struct DiamondJson {
    #[serde(flatten)]
    entries: HodgeDiamond4,
    euler: i64,
}

/// Diamond object with keys `h00, h10, h20, h11, h30, h21, h40, h31, h22, euler`.
pub fn diamond_json(d: &CalabiYau4Diamond) -> Value {
    let full = d.diamond();
    serde_json::to_value(DiamondJson { entries: full, euler: full.euler() }).expect("diamond serializes")
}

pub const COMPACT_HEADERS: [&str; 5] = ["h11", "h21", "h31", "h22", "euler"];

pub fn compact_cells(d: &CalabiYau4Diamond) -> Vec<String> {
    let mut cells: Vec<String> = d.compact().iter().map(u32::to_string).collect();
    cells.push(d.euler().to_string());
    cells
}
