//! Tabular output files and the run manifest.
//!
//! Every table is written either as comma-separated values with `#` comment
//! lines carrying the resolved configuration, or as a JSON document with the
//! configuration embedded. Floats are written with 17 significant digits so
//! that identical runs give byte-identical files.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::cli::config::Format;
use crate::error::Result;

/// One table cell.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn opt(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn dsv(&self) -> String {
        match self {
            // normalize −0 so that sign-of-zero noise does not change the bytes
            Cell::Num(v) if v.is_finite() => format!("{:.16e}", v + 0.0),
            Cell::Num(v) => format!("{v}"),
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) if v.is_finite() => json!(v),
            Cell::Num(_) | Cell::Empty => Value::Null,
            Cell::Int(i) => json!(i),
            Cell::Text(s) => json!(s),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(v.to_string())
    }
}

/// Named table with fixed columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: impl Into<String>, columns: Vec<&'static str>) -> Self {
        Self {
            name: name.into(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len(), "row width of table {}", self.name);
        self.rows.push(row);
    }

    /// Renders the table as comma-separated values.
    pub fn to_dsv(&self, header: &Value) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {} {}\n", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION")));
        out.push_str(&format!("# config: {header}\n"));
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::dsv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Renders the table as a JSON document.
    pub fn to_json(&self, header: &Value) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        json!({
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "config": header,
            "table": self.name,
            "columns": self.columns,
            "rows": rows,
        })
    }
}

/// Writes tables and the manifest into one directory.
#[derive(Debug)]
pub struct OutputSet {
    dir: PathBuf,
    format: Format,
    header: Value,
    files: Vec<String>,
}

impl OutputSet {
    /// `header` is the resolved configuration embedded in every file.
    pub fn create(dir: &Path, format: Format, header: Value) -> Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Self {
            dir: dir.to_path_buf(),
            format,
            header,
            files: Vec::new(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Writes one table and returns its path.
    pub fn write(&mut self, table: &Table) -> Result<PathBuf> {
        let (file, text) = match self.format {
            Format::Dsv => (format!("{}.csv", table.name), table.to_dsv(&self.header)),
            Format::Structured => {
                let mut text = serde_json::to_string_pretty(&table.to_json(&self.header))
                    .expect("table JSON is always serializable");
                text.push('\n');
                (format!("{}.json", table.name), text)
            }
        };
        let path = self.dir.join(&file);
        fs::write(&path, text)?;
        self.files.push(file);
        Ok(path)
    }

    /// Writes `manifest.json` listing the files and a result summary.
    pub fn finish(self, subcommand: &str, summary: Value) -> Result<PathBuf> {
        let manifest = json!({
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "subcommand": subcommand,
            "format": self.format,
            "config": self.header,
            "files": self.files,
            "summary": summary,
        });
        let path = self.dir.join("manifest.json");
        let mut text = serde_json::to_string_pretty(&manifest).expect("manifest JSON is always serializable");
        text.push('\n');
        fs::write(&path, text)?;
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dsv_layout() {
        let mut t = Table::new("demo", vec!["x", "label", "y"]);
        t.push(vec![Cell::Num(0.5), Cell::text("a,b"), Cell::Empty]);
        t.push(vec![Cell::Int(3), Cell::text("c"), Cell::Num(-1.0)]);
        let text = t.to_dsv(&json!({"k": 1}));
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# liouspec "));
        assert_eq!(lines[1], "# config: {\"k\":1}");
        assert_eq!(lines[2], "x,label,y");
        assert_eq!(lines[3], "5.0000000000000000e-1,\"a,b\",");
        assert_eq!(lines[4], "3,c,-1.0000000000000000e0");
    }

    #[test]
    fn json_layout() {
        let mut t = Table::new("demo", vec!["x"]);
        t.push(vec![Cell::Num(f64::NAN)]);
        let v = t.to_json(&json!(null));
        assert_eq!(v["columns"], json!(["x"]));
        assert_eq!(v["rows"], json!([[null]]));
    }
}
