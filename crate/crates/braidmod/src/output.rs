//! Output records: ordered key/value pairs rendered either as `key=value`
//! lines or as a JSON object.
//!
//! Numbers carry 12 significant digits, zero prints as `0` and `+∞` as `inf`.

use std::fmt::Write as _;

use braidmod_core::ModuleValue;
use clap::ValueEnum;
use serde_json::{Map, Number, Value as Json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// One `key=value` pair per line.
    #[default]
    Kv,
    /// A single JSON object.
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Num(f64),
    Bool(bool),
    /// Free text; quoted in `key=value` output when it contains whitespace.
    Text(String),
    /// A braid word; always quoted in `key=value` output.
    Word(String),
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Num(v)
    }
}

impl From<ModuleValue> for Value {
    fn from(v: ModuleValue) -> Self {
        Value::Num(v.as_f64())
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

/// `x` rounded to 12 significant digits, in the shortest form that keeps them.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("valid float text");
    let exponent = rounded.abs().log10().floor();
    if (-5.0..15.0).contains(&exponent) {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputRecord {
    fields: Vec<(&'static str, Value)>,
}

impl OutputRecord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &'static str, value: impl Into<Value>) {
        self.fields.push((key, value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Kv => self.render_kv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_kv(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.fields {
            let text = match value {
                Value::Int(v) => v.to_string(),
                Value::Num(v) => format_number(*v),
                Value::Bool(v) => v.to_string(),
                Value::Text(s) if s.is_empty() || s.contains(char::is_whitespace) => quote(s),
                Value::Text(s) => s.clone(),
                Value::Word(s) => quote(s),
            };
            writeln!(out, "{key}={text}").expect("writing to a String");
        }
        out
    }

    fn render_json(&self) -> String {
        let mut map = Map::new();
        for (key, value) in &self.fields {
            let json = match value {
                Value::Int(v) => Json::from(*v),
                Value::Num(v) => {
                    let text = format_number(*v);
                    text.parse::<f64>()
                        .ok()
                        .filter(|f| f.is_finite())
                        .and_then(Number::from_f64)
                        .map_or(Json::String(text), Json::Number)
                }
                Value::Bool(v) => Json::Bool(*v),
                Value::Text(s) | Value::Word(s) => Json::String(s.clone()),
            };
            map.insert((*key).to_owned(), json);
        }
        let mut text = serde_json::to_string_pretty(&Json::Object(map)).expect("serializable");
        text.push('\n');
        text
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_number(0.962_423_650_119_206_9), "0.962423650119");
        assert_eq!(format_number(1.632_125_651_318_123), "1.63212565132");
        assert_eq!(format_number(27.194_160_850_963_11), "27.194160851");
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(f64::INFINITY), "inf");
        assert_eq!(format_number(2.0), "2");
        assert_eq!(format_number(1e-9), "1e-9");
        assert_eq!(format_number(-3.5e20), "-3.5e20");
    }

    #[test]
    fn renders_both_formats() {
        let r = OutputRecord::new()
            .with("type", "Periodic")
            .with("entropy", 0.0)
            .with("module", ModuleValue::Infinite)
            .with("braid", Value::Word("1 -2".into()))
            .with("exact", true);
        assert_eq!(
            r.render(Format::Kv),
            "type=Periodic\nentropy=0\nmodule=inf\nbraid=\"1 -2\"\nexact=true\n"
        );
        let json: Json = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(json["module"], "inf");
        assert_eq!(json["entropy"], 0.0);
        assert_eq!(json["braid"], "1 -2");
        let keys: Vec<&String> = json.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["type", "entropy", "module", "braid", "exact"]);
    }
}
