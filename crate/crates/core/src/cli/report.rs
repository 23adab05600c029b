use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::ideals::{IdealHandle, RingPresentation};
use crate::sally::SallyTable;

/// Keys present in every report, `null` when a command does not compute them.
pub const REPORT_KEYS: [&str; 9] = [
    "ring",
    "ideal",
    "values",
    "coefficients",
    "numerator",
    "sally",
    "classification",
    "certified_up_to",
    "warnings",
];

/// A JSON report with sorted keys.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    fields: Map<String, Value>,
}

impl Default for Report {
    fn default() -> Self {
        Self::new()
    }
}

impl Report {
    pub fn new() -> Self {
        let mut fields = Map::new();
        for k in REPORT_KEYS {
            fields.insert(k.to_string(), Value::Null);
        }
        fields.insert("warnings".into(), json!([]));
        Report { fields }
    }

    pub fn set<T: Serialize>(&mut self, key: &str, value: T) {
        let v = serde_json::to_value(value).expect("serializable");
        self.fields.insert(key.to_string(), v);
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        let w = self.fields.get_mut("warnings").expect("warnings key");
        if let Value::Array(a) = w {
            let m = Value::String(message.into());
            if !a.contains(&m) {
                a.push(m);
            }
        }
    }

    pub fn ring(&mut self, ring: &RingPresentation) {
        self.set(
            "ring",
            json!({
                "field": ring.field().descriptor(),
                "variables": ring.names(),
                "relations": ring.relation_strings(),
            }),
        );
    }

    pub fn ideal(&mut self, name: &str, i: &IdealHandle, reduction: Option<(&str, &IdealHandle)>) {
        let mut v = json!({ "name": name, "generators": i.gen_strings() });
        if let Some((qn, q)) = reduction {
            v["reduction"] = json!({ "name": qn, "generators": q.gen_strings() });
        }
        self.set("ideal", v);
    }

    pub fn sally(&mut self, t: &SallyTable) {
        self.set(
            "sally",
            json!({
                "S": t.s,
                "L": t.l,
                "C": t.c_lengths,
                "c": t.c,
                "flags": t.flags,
                "colength": t.colength,
                "reduction_number": t.reduction_number,
                "dimension": t.dimension,
            }),
        );
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Value::Object(self.fields.clone())).expect("serializable")
    }

    /// One `path  value` line per scalar or short array, keys aligned.
    pub fn to_table(&self) -> String {
        let mut rows = Vec::new();
        flatten("", &Value::Object(self.fields.clone()), &mut rows);
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let pad = width - k.chars().count();
            out.push_str(&k);
            out.push_str(&" ".repeat(pad + 2));
            out.push_str(&v);
            out.push('\n');
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, rows);
            }
        }
        Value::Array(a) if a.iter().all(|x| scalar(x).is_some()) => {
            let items: Vec<String> = a.iter().filter_map(scalar).collect();
            rows.push((prefix.to_string(), format!("[{}]", items.join(", "))));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, rows);
            }
        }
        other => rows.push((prefix.to_string(), scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_keys_sorted() {
        let mut r = Report::new();
        r.set("values", vec![1, 3, 6]);
        r.warn("w");
        r.warn("w");
        let text = r.to_json();
        let v: Value = serde_json::from_str(&text).unwrap();
        for k in REPORT_KEYS {
            assert!(v.get(k).is_some(), "{k}");
        }
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(v["warnings"], json!(["w"]));
    }

    #[test]
    fn table_rows() {
        let mut r = Report::new();
        r.set("values", vec![1, 3]);
        r.set("sally", json!({"c": 2}));
        let t = r.to_table();
        assert!(t.lines().any(|l| l.starts_with("values") && l.ends_with("[1, 3]")));
        assert!(t.lines().any(|l| l.starts_with("sally.c") && l.ends_with('2')));
    }
}
