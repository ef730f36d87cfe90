use std::fs;
use std::io::Write;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use hypoh_core::{Error, Result};
use serde_json::{json, Map, Value};

use crate::{Cli, Format};

pub const SCHEMA: &str = "hypoh-ff/1";

/// A header row plus data rows.
#[derive(Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

pub struct Output {
    pub params: Map<String, Value>,
    pub result: Value,
    pub table: Table,
    pub text: String,
}

fn render(cli: &Cli, out: Output, elapsed: Duration) -> Result<String> {
    match cli.common.format {
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("schema".into(), json!(SCHEMA));
            doc.insert("command".into(), json!(cli.command.name()));
            doc.insert("params".into(), Value::Object(out.params));
            doc.insert("result".into(), out.result);
            if !cli.common.deterministic {
                let now = SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0);
                doc.insert("timestamp".into(), json!(now.to_string()));
                doc.insert("elapsed_ms".into(), json!(elapsed.as_secs_f64() * 1e3));
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(doc))
                .map_err(|e| Error::Internal(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::Internal(e.to_string());
            w.write_record(&out.table.header).map_err(io)?;
            for row in &out.table.rows {
                w.write_record(row).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
        }
        Format::Text => {
            let mut s = out.text;
            if !cli.common.deterministic {
                s.push_str(&format!("elapsed: {:.3} s\n", elapsed.as_secs_f64()));
            }
            Ok(s)
        }
    }
}

pub fn emit(cli: &Cli, out: Output, elapsed: Duration) -> Result<()> {
    let doc = render(cli, out, elapsed)?;
    let written = match &cli.common.out {
        Some(path) => fs::write(path, doc.as_bytes()),
        None => std::io::stdout().lock().write_all(doc.as_bytes()),
    };
    written.map_err(|e| Error::InvalidArgument(format!("cannot write output: {e}")))
}

pub fn emit_error(cli: &Cli, e: &Error) {
    if cli.common.format == Format::Json {
        let doc = json!({
            "schema": SCHEMA,
            "command": cli.command.name(),
            "error": { "kind": e.kind(), "message": e.to_string() },
        });
        eprintln!("{}", serde_json::to_string_pretty(&doc).unwrap_or_default());
    } else {
        eprintln!("error [{}]: {e}", e.kind());
    }
}
