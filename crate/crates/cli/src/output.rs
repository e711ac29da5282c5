//! JSON-lines and CSV sinks over a stream of flat records.

use std::io::Write;

use anyhow::{bail, Result};
use serde_json::Value;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

enum Sink<W: Write> {
    Json(W),
    Csv { writer: csv::Writer<W>, header: Option<Vec<String>> },
}

pub struct Emitter<W: Write> {
    sink: Sink<W>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        let sink = match format {
            Format::Json => Sink::Json(out),
            Format::Csv => Sink::Csv { writer: csv::Writer::from_writer(out), header: None },
        };
        Self { sink }
    }

    /// Writes one record; in CSV mode every record must have the keys of the first.
    pub fn emit(&mut self, record: &Value) -> Result<()> {
        match &mut self.sink {
            Sink::Json(out) => {
                serde_json::to_writer(&mut *out, record)?;
                out.write_all(b"\n")?;
            }
            Sink::Csv { writer, header } => {
                let Value::Object(map) = record else { bail!("CSV output needs object records") };
                let keys: Vec<String> = map.keys().cloned().collect();
                match header {
                    None => {
                        writer.write_record(&keys)?;
                        *header = Some(keys);
                    }
                    Some(h) if *h != keys => bail!("record fields {keys:?} differ from CSV header {h:?}"),
                    Some(_) => {}
                }
                writer.write_record(map.values().map(cell))?;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Result<W> {
        Ok(match self.sink {
            Sink::Json(mut out) => {
                out.flush()?;
                out
            }
            Sink::Csv { writer, .. } => writer.into_inner().map_err(|e| e.into_error())?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn render(format: Format, records: &[Value]) -> String {
        let mut e = Emitter::new(format, Vec::new());
        for r in records {
            e.emit(r).unwrap();
        }
        String::from_utf8(e.finish().unwrap()).unwrap()
    }

    #[test]
    fn json_lines() {
        let out = render(Format::Json, &[json!({"I": -12, "form": [1, 0, 0, 0, -1]}), json!({"I": -15})]);
        assert_eq!(out, "{\"I\":-12,\"form\":[1,0,0,0,-1]}\n{\"I\":-15}\n");
    }

    #[test]
    fn csv_nests_arrays_as_json() {
        let out = render(Format::Csv, &[json!({"I": -12, "form": [1, 0, 0, 0, -1], "q": null})]);
        assert_eq!(out, "I,form,q\n-12,\"[1,0,0,0,-1]\",\n");
    }

    #[test]
    fn csv_rejects_changing_fields() {
        let mut e = Emitter::new(Format::Csv, Vec::new());
        e.emit(&json!({"a": 1})).unwrap();
        assert!(e.emit(&json!({"b": 1})).is_err());
    }
}
