//! Row rendering. Every command emits a list of flat records; json, csv and
//! plain output all use the record's field order as the column order.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Plain,
}

fn to_csv<T: Serialize>(rows: &[T]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

/// Space-aligned columns with a header line.
fn to_plain(csv_text: &str) -> Result<String, String> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(csv_text.as_bytes());
    let records: Vec<Vec<String>> = r
        .records()
        .map(|rec| {
            rec.map(|rec| {
                rec.iter()
                    .map(|f| {
                        if f.is_empty() {
                            "-".to_string()
                        } else {
                            f.to_string()
                        }
                    })
                    .collect()
            })
        })
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let cols = records.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            records
                .iter()
                .filter_map(|r| r.get(c))
                .map(|f| f.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for rec in &records {
        let line: Vec<String> = rec
            .iter()
            .enumerate()
            .map(|(c, f)| format!("{f:<width$}", width = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    Ok(out)
}

pub fn render<T: Serialize>(rows: &[T], format: OutputFormat) -> Result<String, String> {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows).map_err(|e| e.to_string())?;
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Csv => to_csv(rows),
        OutputFormat::Plain => to_plain(&to_csv(rows)?),
    }
}

pub fn emit<T: Serialize>(rows: &[T], format: OutputFormat) -> Result<(), String> {
    let text = render(rows, format)?;
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
    out.flush().map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        name: &'static str,
        value: Option<u32>,
        ok: bool,
    }

    fn rows() -> Vec<Row> {
        vec![
            Row {
                name: "first",
                value: Some(12),
                ok: true,
            },
            Row {
                name: "b",
                value: None,
                ok: false,
            },
        ]
    }

    #[test]
    fn csv_header_follows_field_order() {
        let s = render(&rows(), OutputFormat::Csv).unwrap();
        assert_eq!(s, "name,value,ok\nfirst,12,true\nb,,false\n");
    }

    #[test]
    fn json_keeps_field_order() {
        let s = render(&rows(), OutputFormat::Json).unwrap();
        let name = s.find("\"name\"").unwrap();
        let value = s.find("\"value\"").unwrap();
        assert!(name < value);
        assert!(s.contains("\"value\": null"));
    }

    #[test]
    fn plain_is_aligned() {
        let s = render(&rows(), OutputFormat::Plain).unwrap();
        assert_eq!(
            s,
            "name   value  ok\nfirst  12     true\nb      -      false\n"
        );
    }
}
