//! Minimal JSON rendering with fixed numeric formatting: floats carry the
//! full 17 significant digits (so they parse back to the identical
//! double), exact integers are emitted as decimal strings, and key order
//! is exactly insertion order, making output byte-deterministic.

/// A JSON value with deterministic rendering.
pub enum Json {
    /// Finite double, rendered as `{:.16e}`.
    Num(f64),
    /// Unsigned count rendered as a bare JSON integer.
    Count(u64),
    /// Arbitrary-precision integer rendered as a decimal string.
    BigInt(String),
    Str(String),
    Bool(bool),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

/// 17 significant digits: enough to round-trip any finite f64.
pub fn fmt_f64(v: f64) -> String {
    debug_assert!(v.is_finite(), "output values are finite");
    format!("{v:.16e}")
}

fn escape_into(out: &mut String, s: &str) {
    out.push('"');
    for c in s.chars() {
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
}

impl Json {
    fn render_into(&self, out: &mut String) {
        match self {
            Json::Num(v) => out.push_str(&fmt_f64(*v)),
            Json::Count(v) => out.push_str(&v.to_string()),
            Json::BigInt(digits) => escape_into(out, digits),
            Json::Str(s) => escape_into(out, s),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Arr(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.render_into(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    escape_into(out, key);
                    out.push(':');
                    value.render_into(out);
                }
                out.push('}');
            }
        }
    }

    /// The value as a single-line JSON document (plus trailing newline).
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out);
        out.push('\n');
        out
    }
}

pub fn num_array(values: &[f64]) -> Json {
    Json::Arr(values.iter().map(|&v| Json::Num(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_flat_objects() {
        let doc = Json::Obj(vec![
            ("value", Json::Num(-0.6)),
            ("method", Json::Str("bisection".into())),
            ("ok", Json::Bool(true)),
            ("terms", Json::Arr(vec![Json::BigInt("6608".into())])),
        ])
        .to_document();
        assert_eq!(
            doc,
            "{\"value\":-5.9999999999999998e-1,\"method\":\"bisection\",\"ok\":true,\"terms\":[\"6608\"]}\n"
        );
    }

    #[test]
    fn float_format_round_trips() {
        for v in [0.6, -1.0, 2.0 - 2.0f64.sqrt(), 1e-300, 12345.6789] {
            let text = fmt_f64(v);
            assert_eq!(text.parse::<f64>().unwrap(), v, "{text}");
        }
    }

    #[test]
    fn escapes_strings() {
        let doc = Json::Str("a\"b\\c\nd".into()).to_document();
        assert_eq!(doc, "\"a\\\"b\\\\c\\nd\"\n");
    }
}
