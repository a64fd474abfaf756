//! Output formats. JSON carries exact rationals as strings; TSV and markdown
//! are flat tables. Nothing here touches floating point.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Markdown,
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, headers: &[&str]) -> Self {
        Table {
            title: title.to_string(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    pub fn add_column(&mut self, header: &str, cells: Vec<String>) {
        self.headers.push(header.to_string());
        for (row, cell) in self.rows.iter_mut().zip(cells) {
            row.push(cell);
        }
    }
}

/// What a command produced, before formatting.
#[derive(Debug, Default)]
pub struct Output {
    /// One JSON document, or several when `json_lines` is set.
    pub json: Vec<Value>,
    pub json_lines: bool,
    pub tables: Vec<Table>,
    /// Preformatted text shown verbatim in markdown mode.
    pub text: Option<String>,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Tsv => self.tables.iter().map(tsv).collect::<Vec<_>>().join("\n"),
            Format::Markdown => {
                let mut out = String::new();
                if let Some(text) = &self.text {
                    let _ = writeln!(out, "```text\n{}```\n", text);
                }
                out.push_str(&self.tables.iter().map(markdown).collect::<Vec<_>>().join("\n"));
                out
            }
        }
    }

    fn render_json(&self) -> String {
        if self.json_lines {
            let mut out = String::new();
            for v in &self.json {
                out.push_str(&serde_json::to_string(v).expect("serializable"));
                out.push('\n');
            }
            out
        } else {
            let doc = match self.json.as_slice() {
                [one] => one.clone(),
                many => Value::Array(many.to_vec()),
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
    }
}

fn clean(cell: &str, sep: char) -> String {
    cell.replace(['\t', '\n'], " ").replace(sep, if sep == '|' { "\\|" } else { " " })
}

fn tsv(t: &Table) -> String {
    let mut out = String::new();
    if !t.title.is_empty() {
        let _ = writeln!(out, "# {}", t.title);
    }
    let _ = writeln!(out, "{}", t.headers.join("\t"));
    for row in &t.rows {
        let cells: Vec<String> = row.iter().map(|c| clean(c, '\t')).collect();
        let _ = writeln!(out, "{}", cells.join("\t"));
    }
    out
}

fn markdown(t: &Table) -> String {
    let mut out = String::new();
    if !t.title.is_empty() {
        let _ = writeln!(out, "### {}\n", t.title);
    }
    let _ = writeln!(out, "| {} |", t.headers.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(t.headers.len()));
    for row in &t.rows {
        let cells: Vec<String> = row.iter().map(|c| clean(c, '|')).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_render() {
        let mut t = Table::new("demo", &["a", "b"]);
        t.row(vec!["1".into(), "x|y".into()]);
        assert_eq!(tsv(&t), "# demo\na\tb\n1\tx|y\n");
        assert_eq!(markdown(&t), "### demo\n\n| a | b |\n|---|---|\n| 1 | x\\|y |\n");
    }
}
