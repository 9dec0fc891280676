//! Deterministic table rendering. CSV files carry `# key=value` metadata
//! lines ahead of the header row; JSON mirrors the same table as one
//! object. Floats are printed with 12 significant digits in both formats
//! so fixed seeds give byte-identical files.

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// One table cell.
#[derive(Clone, Debug)]
pub enum Value {
    UInt(u64),
    Float(f64),
    Text(String),
}

impl Value {
    fn csv(&self) -> String {
        match self {
            Value::UInt(v) => v.to_string(),
            Value::Float(v) if v.is_nan() => "NaN".into(),
            Value::Float(v) => format!("{v:.11e}"),
            Value::Text(v) => v.clone(),
        }
    }

    fn json(&self) -> String {
        match self {
            Value::UInt(v) => v.to_string(),
            Value::Float(v) if v.is_nan() => "null".into(),
            Value::Float(v) => format!("{v:.11e}"),
            Value::Text(v) => quoted(v),
        }
    }
}

fn quoted(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 2);
    out.push('"');
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// A rendered result: reproduction metadata, column names, data rows.
pub struct Table {
    pub meta: Vec<(String, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.meta {
            out.push_str(&format!("# {key}={value}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Value::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn to_json(&self) -> String {
        let meta: Vec<String> = self
            .meta
            .iter()
            .map(|(k, v)| format!("{}: {}", quoted(k), quoted(v)))
            .collect();
        let columns: Vec<String> = self.columns.iter().map(|c| quoted(c)).collect();
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(Value::json).collect();
                format!("    [{}]", cells.join(", "))
            })
            .collect();
        let body = if rows.is_empty() {
            String::new()
        } else {
            format!("\n{}\n  ", rows.join(",\n"))
        };
        format!(
            "{{\n  \"meta\": {{{}}},\n  \"columns\": [{}],\n  \"rows\": [{}]\n}}\n",
            meta.join(", "),
            columns.join(", "),
            body
        )
    }
}
