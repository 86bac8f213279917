use serde_json::Value;

use distortion_core::table::fmt_g;

/// Output of one run in both formats.
#[derive(Debug)]
pub struct Report {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Report {
    pub fn render(&self, format: Format) -> Vec<u8> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json values serialize");
                s.push('\n');
                s.into_bytes()
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
                w.write_record(&self.header).expect("write to memory");
                for r in &self.rows {
                    w.write_record(r).expect("write to memory");
                }
                w.into_inner().expect("flush to memory")
            }
        }
    }
}

/// JSON number rounded to 12 significant digits; non-finite values map to
/// `null`.
pub fn num(x: f64) -> Value {
    fmt_g(x).parse::<f64>().ok().and_then(serde_json::Number::from_f64).map_or(Value::Null, Value::Number)
}

pub fn cell(x: f64) -> String {
    fmt_g(x)
}
