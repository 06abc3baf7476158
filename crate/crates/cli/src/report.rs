use md_core::format::format_set;
use serde_json::{json, Map, Value};

/// Ordered `key: value` report with a JSON mirror using the same keys.
#[derive(Debug, Default)]
pub struct Report {
    entries: Vec<Entry>,
}

#[derive(Debug)]
struct Entry {
    key: String,
    /// One text line per element; repeated keys print on separate lines.
    lines: Vec<String>,
    json: Value,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, key: &str, lines: Vec<String>, json: Value) -> &mut Self {
        self.entries.push(Entry {
            key: key.to_string(),
            lines,
            json,
        });
        self
    }

    pub fn text(&mut self, key: &str, value: impl Into<String>) -> &mut Self {
        let value = value.into();
        self.push(key, vec![value.clone()], Value::String(value))
    }

    pub fn int(&mut self, key: &str, value: impl Into<u128>) -> &mut Self {
        let value = value.into();
        let json = u64::try_from(value).map_or_else(|_| json!(value.to_string()), |v| json!(v));
        self.push(key, vec![value.to_string()], json)
    }

    /// `yes` / `no`, `true` / `false` in JSON.
    pub fn flag(&mut self, key: &str, value: bool) -> &mut Self {
        let text = if value { "yes" } else { "no" };
        self.push(key, vec![text.into()], Value::Bool(value))
    }

    pub fn set(&mut self, key: &str, ids: &[usize]) -> &mut Self {
        self.push(key, vec![format_set(ids)], json!(ids))
    }

    /// `none` when absent.
    pub fn maybe_set(&mut self, key: &str, ids: Option<&[usize]>) -> &mut Self {
        match ids {
            Some(ids) => self.set(key, ids),
            None => self.push(key, vec!["none".into()], Value::Null),
        }
    }

    /// Repeated text lines under one key; a JSON array of objects.
    pub fn rows(&mut self, key: &str, rows: Vec<(String, Value)>) -> &mut Self {
        let (lines, values): (Vec<String>, Vec<Value>) = rows.into_iter().unzip();
        self.push(key, lines, Value::Array(values))
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let map: Map<String, Value> = self
                .entries
                .iter()
                .map(|e| (e.key.clone(), e.json.clone()))
                .collect();
            let mut out =
                serde_json::to_string_pretty(&Value::Object(map)).expect("report values serialise");
            out.push('\n');
            out
        } else {
            let mut out = String::new();
            for e in &self.entries {
                for line in &e.lines {
                    out.push_str(&e.key);
                    out.push_str(": ");
                    out.push_str(line);
                    out.push('\n');
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json_share_keys() {
        let mut r = Report::new();
        r.int("md", 1u8)
            .set("witness", &[0])
            .flag("resolved", false)
            .maybe_set("pair", None);
        assert_eq!(
            r.render(false),
            "md: 1\nwitness: {0}\nresolved: no\npair: none\n"
        );
        let v: Value = serde_json::from_str(&r.render(true)).unwrap();
        assert_eq!(
            v,
            json!({"md": 1, "witness": [0], "resolved": false, "pair": null})
        );
    }

    #[test]
    fn rows_repeat_the_key() {
        let mut r = Report::new();
        r.rows(
            "class",
            vec![("a".into(), json!(1)), ("b".into(), json!(2))],
        );
        assert_eq!(r.render(false), "class: a\nclass: b\n");
        assert!(r.render(true).contains("\"class\": [\n"));
    }
}
