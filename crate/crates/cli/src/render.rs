//! Renderers: aligned text, RFC-4180 CSV, and json-lines. All three are
//! deterministic for a fixed record stream; json-lines carries no runtimes,
//! so repeated runs are byte-identical.

use std::collections::BTreeMap;

use serde_json::Value;

use crate::record::Record;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    JsonLines,
}

pub fn render(records: &[Record], format: Format) -> String {
    match format {
        Format::Text => render_text(records),
        Format::Csv => render_csv(records),
        Format::JsonLines => render_json_lines(records),
    }
}

fn inputs_cell(inputs: &BTreeMap<String, Value>) -> String {
    inputs
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_text(records: &[Record]) -> String {
    let headers = ["name", "inputs", "value", "status"];
    let rows: Vec<[String; 4]> = records
        .iter()
        .map(|r| {
            [
                r.name.clone(),
                inputs_cell(&r.inputs),
                r.value.clone(),
                match r.runtime_ms {
                    Some(ms) => format!("{} ({ms} ms)", r.status),
                    None => r.status.clone(),
                },
            ]
        })
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String; 4], widths: &[usize]| -> String {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let header_cells: [String; 4] = headers.map(|h| h.to_string());
    out.push_str(&fmt_row(&header_cells, &widths));
    out.push('\n');
    for (r, row) in records.iter().zip(&rows) {
        out.push_str(&fmt_row(row, &widths));
        out.push('\n');
        if !r.citation.is_empty() {
            out.push_str(&format!(
                "    formula: {}  [rounding: {}]\n",
                r.citation, r.rounding
            ));
        }
        if let Value::Object(map) = &r.detail {
            for (k, v) in map {
                match v {
                    Value::String(s) => out.push_str(&format!("    {k}: {s}\n")),
                    other => out.push_str(&format!("    {k}: {other}\n")),
                }
            }
        }
    }
    out
}

fn render_csv(records: &[Record]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["name", "inputs", "value", "citation", "rounding", "status", "detail"])
        .expect("csv header");
    for r in records {
        let detail = match &r.detail {
            Value::Null => String::new(),
            other => other.to_string(),
        };
        w.write_record([
            r.name.as_str(),
            inputs_cell(&r.inputs).as_str(),
            r.value.as_str(),
            r.citation.as_str(),
            r.rounding.as_str(),
            r.status.as_str(),
            detail.as_str(),
        ])
        .expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv is utf-8")
}

fn render_json_lines(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_json_value().to_string());
        out.push('\n');
    }
    out
}
