use std::io::Write;

use clap::ValueEnum;
use num_complex::Complex64;
use serde_json::{json, Value};

use rademacher::arith::format_rational;
use rademacher::{CycloElement, Rational};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

pub fn exact_string(r: &Rational) -> String {
    format_rational(r)
}

/// `digits` significant digits, scientific notation.
pub fn fmt_float(x: f64, digits: u32) -> String {
    format!("{:.*e}", digits.saturating_sub(1) as usize, x)
}

pub fn fmt_complex(z: Complex64, digits: u32) -> String {
    if z.im == 0.0 {
        fmt_float(z.re, digits)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{} {sign} {}i", fmt_float(z.re, digits), fmt_float(z.im.abs(), digits))
    }
}

/// Exact value and embedding of a coefficient as JSON.
pub fn value_json(v: &CycloElement) -> Value {
    let z = v.to_complex();
    let mut j = json!({"value": v, "approx": [z.re, z.im]});
    if let Some(r) = v.to_rational() {
        j["rational"] = json!(format_rational(&r));
    }
    j
}

/// Collects records and writes them in the chosen format at the end.
pub struct Out {
    format: Format,
    json: Vec<Value>,
    header: Vec<&'static str>,
    csv: Vec<Vec<String>>,
    text: Vec<String>,
    raw: Option<String>,
    single: bool,
}

impl Out {
    pub fn new(format: Format) -> Self {
        Out {
            format,
            json: Vec::new(),
            header: Vec::new(),
            csv: Vec::new(),
            text: Vec::new(),
            raw: None,
            single: false,
        }
    }

    /// One row of a list-valued result.
    pub fn record(&mut self, j: Value, fields: &[(&'static str, String)], text: String) {
        self.json.push(j);
        self.push_csv(fields.to_vec());
        self.text.push(text);
    }

    /// A single-object result with its own CSV rows.
    pub fn document(&mut self, j: Value, rows: Vec<Vec<(&'static str, String)>>, text: String) {
        self.single = true;
        self.json.push(j);
        for r in rows {
            self.push_csv(r);
        }
        self.text.push(text);
    }

    /// Preformatted output, already in the selected format.
    pub fn raw(&mut self, s: String) {
        self.raw = Some(s);
    }

    fn push_csv(&mut self, fields: Vec<(&'static str, String)>) {
        if self.header.is_empty() {
            self.header = fields.iter().map(|f| f.0).collect();
        }
        self.csv.push(fields.into_iter().map(|f| f.1).collect());
    }

    /// Writes everything to stdout; a closed pipe is not an error.
    pub fn finish(self) {
        match self.write(&mut std::io::stdout().lock()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            r => r.expect("stdout"),
        }
    }

    fn write(self, out: &mut impl Write) -> std::io::Result<()> {
        if let Some(s) = self.raw {
            return writeln!(out, "{s}");
        }
        match self.format {
            Format::Json => {
                let v = if self.single && self.json.len() == 1 {
                    self.json.into_iter().next().unwrap()
                } else {
                    Value::Array(self.json)
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.header)?;
                for r in &self.csv {
                    w.write_record(r)?;
                }
                w.flush()
            }
            Format::Pretty => {
                for t in self.text {
                    writeln!(out, "{t}")?;
                }
                Ok(())
            }
        }
    }
}
