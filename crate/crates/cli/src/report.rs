use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

/// Ordered key/value output. Plain mode prints `key: value` lines (one line
/// per item for lists); JSON mode prints one compact object.
#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(&'static str, Value, Option<String>)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Self::default();
        r.field("command", command);
        r
    }

    pub fn field(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.fields.push((key, value.into(), None));
        self
    }

    /// A field whose plain rendering differs from its JSON value.
    pub fn field_as(
        &mut self,
        key: &'static str,
        value: impl Into<Value>,
        plain: String,
    ) -> &mut Self {
        self.fields.push((key, value.into(), Some(plain)));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let map: Map<String, Value> = self
                    .fields
                    .iter()
                    .map(|(k, v, _)| (k.to_string(), v.clone()))
                    .collect();
                Value::Object(map).to_string()
            }
            Format::Plain => {
                let mut out = String::new();
                for (k, v, plain) in &self.fields {
                    match (plain, v) {
                        (Some(p), _) => out.push_str(&format!("{k}: {p}\n")),
                        (None, Value::Array(items)) => {
                            for item in items {
                                out.push_str(&format!("{k}: {}\n", plain_value(item)));
                            }
                        }
                        (None, v) => out.push_str(&format!("{k}: {}\n", plain_value(v))),
                    }
                }
                out.pop();
                out
            }
        }
    }
}

fn plain_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
