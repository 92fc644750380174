//! Versioned JSON reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

use super::spec::RingSpec;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Overall outcome of a command, mapped onto the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Inconclusive,
    Violation,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Inconclusive => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<RingSpec>,
    pub results: Value,
    pub status: Status,
    pub version: String,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl Report {
    pub fn new(
        command: &str,
        spec: Option<RingSpec>,
        results: Value,
        status: Status,
        seed: u64,
    ) -> Self {
        let mut meta = BTreeMap::new();
        meta.insert(
            "open_question_weak_nd".to_string(),
            "whether every weak (n,d)-ring in the sense of Mahdou has small finitistic dimension at most d is unresolved; only n = 1 is checked".to_string(),
        );
        Report {
            command: command.to_string(),
            spec,
            results,
            status,
            version: VERSION.to_string(),
            seed,
            timings: None,
            meta,
        }
    }

    /// Pretty JSON with every object's keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports are plain data");
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| Error::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })
    }

    /// Flat `key: value` lines for terminal reading.
    pub fn to_table(&self) -> String {
        let mut out = format!("command: {}\nstatus: {:?}\n", self.command, self.status);
        flatten("", &self.results, &mut out);
        if let Some(t) = &self.timings {
            for (k, v) in t {
                out.push_str(&format!("time.{k}: {v:.3}s\n"));
            }
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
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => Some(format!(
            "[{}]",
            a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut String) {
    if let Some(s) = scalar(v) {
        out.push_str(&format!("{prefix}: {s}\n"));
        return;
    }
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn keys_sorted_and_round_trip() {
        let r = Report::new(
            "fpd",
            None,
            json!({"zeta": 1, "alpha": [1, 2]}),
            Status::Ok,
            0,
        );
        let text = r.to_json();
        let a = text.find("\"alpha\"").unwrap();
        let z = text.find("\"zeta\"").unwrap();
        assert!(a < z);
        assert!(text.find("\"command\"").unwrap() < text.find("\"version\"").unwrap());
        assert_eq!(Report::from_json(&text).unwrap(), r);
        assert_eq!(r.to_json(), text);
    }

    #[test]
    fn table_flattens() {
        let r = Report::new(
            "x",
            None,
            json!({"a": {"b": [1, 2]}, "c": null}),
            Status::Inconclusive,
            0,
        );
        let t = r.to_table();
        assert!(t.contains("a.b: [1, 2]"));
        assert!(t.contains("c: -"));
    }
}
