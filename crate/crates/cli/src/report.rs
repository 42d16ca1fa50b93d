//! Per-command results with stable JSON keys, and a line-oriented text
//! rendering that parses back to the same data.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use graded_core::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedVerdict {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedWitness {
    pub name: String,
    pub index: i64,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tables {
    #[serde(rename = "hilb_G")]
    pub hilb_g: Option<Vec<u32>>,
    #[serde(rename = "hilb_F")]
    pub hilb_f: Option<Vec<u32>>,
    pub socle: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub u: Option<u32>,
    pub w: Option<u32>,
    pub a: Option<i64>,
    #[serde(rename = "e_I")]
    pub e_i: Option<u32>,
    #[serde(rename = "e_F")]
    pub e_f: Option<u32>,
    pub lengths: BTreeMap<String, u32>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommandReport {
    pub ring: String,
    pub ideals: BTreeMap<String, String>,
    pub command: String,
    pub verdicts: Vec<NamedVerdict>,
    pub tables: Tables,
    pub invariants: Invariants,
    pub witnesses: Vec<NamedWitness>,
    /// Working precision of the semigroup ring after the command.
    pub precision: Option<u32>,
    pub certified_flags: BTreeMap<String, bool>,
    /// Further human-oriented lines: presentations, slices, closures.
    pub details: Vec<String>,
}

impl CommandReport {
    pub fn verdict(&mut self, name: &str, holds: bool) {
        self.verdicts.push(NamedVerdict { name: name.into(), holds });
    }

    pub fn witness(&mut self, name: &str, w: &graded_core::Witness) {
        self.witnesses.push(NamedWitness {
            name: name.into(),
            index: w.index,
            left: w.left.clone(),
            right: w.right.clone(),
        });
    }

    pub fn verdict_of(&self, name: &str) -> Option<bool> {
        self.verdicts.iter().find(|v| v.name == name).map(|v| v.holds)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

/// One `path = value` line per leaf, values JSON-encoded.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut out = String::new();
    flatten(&serde_json::to_value(value).expect("reports serialize"), "", &mut out);
    out
}

fn flatten(v: &Value, path: &str, out: &mut String) {
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, x) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(x, &p, out);
            }
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(Value::is_number) => {
            for (i, x) in items.iter().enumerate() {
                flatten(x, &format!("{path}[{i}]"), out);
            }
        }
        leaf => {
            out.push_str(path);
            out.push_str(" = ");
            out.push_str(&serde_json::to_string(leaf).unwrap());
            out.push('\n');
        }
    }
}

enum Step {
    Key(String),
    Index(usize),
}

fn parse_path(path: &str) -> Option<Vec<Step>> {
    let mut steps = Vec::new();
    for part in path.split('.') {
        let (key, mut rest) = match part.find('[') {
            Some(i) => (&part[..i], &part[i..]),
            None => (part, ""),
        };
        if !key.is_empty() {
            steps.push(Step::Key(key.to_string()));
        }
        while let Some(stripped) = rest.strip_prefix('[') {
            let close = stripped.find(']')?;
            steps.push(Step::Index(stripped[..close].parse().ok()?));
            rest = &stripped[close + 1..];
        }
        if !rest.is_empty() {
            return None;
        }
    }
    Some(steps)
}

fn insert(root: &mut Value, steps: &[Step], leaf: Value) -> bool {
    let Some((first, rest)) = steps.split_first() else {
        *root = leaf;
        return true;
    };
    match first {
        Step::Key(k) => {
            if root.is_null() {
                *root = Value::Object(Map::new());
            }
            let Value::Object(map) = root else { return false };
            insert(map.entry(k.clone()).or_insert(Value::Null), rest, leaf)
        }
        Step::Index(i) => {
            if root.is_null() {
                *root = Value::Array(Vec::new());
            }
            let Value::Array(items) = root else { return false };
            if *i == items.len() {
                items.push(Value::Null);
            } else if *i > items.len() {
                return false;
            }
            insert(&mut items[*i], rest, leaf)
        }
    }
}

/// Inverse of [`to_text`].
pub fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let mut root = Value::Null;
    for (idx, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let bad = |column: usize, message: &str| Error::Parse { line: idx + 1, column, message: message.into() };
        let (path, value) = line.split_once(" = ").ok_or_else(|| bad(1, "expected `path = value`"))?;
        let steps = parse_path(path).ok_or_else(|| bad(1, "malformed path"))?;
        let leaf: Value =
            serde_json::from_str(value).map_err(|e| bad(path.len() + 4, &format!("malformed value: {e}")))?;
        if !insert(&mut root, &steps, leaf) {
            return Err(bad(1, "path conflicts with an earlier line"));
        }
    }
    serde_json::from_value(root).map_err(|e| Error::Parse { line: 0, column: 0, message: e.to_string() })
}
