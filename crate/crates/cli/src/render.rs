//! Tables rendered as aligned text, CSV or JSON.

use std::collections::BTreeMap;

use remmelkit::Poly;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Text(String),
    Poly(Poly),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Poly(p) => p.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Text(s) => json!(s),
            Cell::Poly(p) => poly_json(p),
        }
    }
}

/// `{"text": ..., "terms": {"eq,ex,ey,ez": "coefficient"}}`.
pub fn poly_json(p: &Poly) -> Value {
    let terms: BTreeMap<String, String> = p
        .sorted_terms()
        .into_iter()
        .map(|(e, c)| (format!("{},{},{},{}", e[0], e[1], e[2], e[3]), c.to_string()))
        .collect();
    json!({ "text": p.to_string(), "terms": terms })
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Text rendering used instead of the aligned grid, for one-value tables.
    pub plain: Option<String>,
}

impl Table {
    pub fn new(name: &str, headers: &[&str]) -> Self {
        Table {
            name: name.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            plain: None,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Text => Ok(self.plain.clone().map(|p| p + "\n").unwrap_or_else(|| self.grid())),
            Format::Csv => self.csv().map_err(|e| e.to_string()),
            Format::Json => {
                let rows: Vec<Value> =
                    self.rows.iter().map(|r| Value::Array(r.iter().map(Cell::json).collect())).collect();
                let v = json!({ "table": self.name, "columns": self.headers, "rows": rows });
                serde_json::to_string_pretty(&v).map(|s| s + "\n").map_err(|e| e.to_string())
            }
        }
    }

    fn grid(&self) -> String {
        let cells: Vec<Vec<String>> = std::iter::once(self.headers.clone())
            .chain(self.rows.iter().map(|r| r.iter().map(Cell::text).collect()))
            .collect();
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> Result<String, Box<dyn std::error::Error>> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::text))?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}
