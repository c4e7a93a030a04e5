//! Report shape shared by every subcommand: a command echo, an input stamp,
//! a status, and an ordered list of key/value facts. Both renderings draw
//! from the same list, so they can never drift apart on content. Fact
//! values stay decimal strings even under `--json`: the bound tables
//! routinely exceed any fixed-width number type, and strings keep them
//! exact.

use std::fmt::Display;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Inconclusive,
    Error,
}

impl Status {
    /// Exit-status contract: decided = 0, input error = 2, resource
    /// ceiling = 3.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Error => 2,
            Status::Inconclusive => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Inconclusive => "inconclusive",
            Status::Error => "error",
        }
    }
}

/// Which bytes an analysis actually read.
#[derive(Debug, Clone)]
pub struct InputStamp {
    pub path: String,
    pub digest: String,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub input: Option<InputStamp>,
    pub status: Status,
    pub facts: Vec<(String, String)>,
    /// Chosen rendering; carried here so `render` needs no extra context.
    pub json: bool,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            input: None,
            status: Status::Ok,
            facts: Vec::new(),
            json: false,
        }
    }

    pub fn error(command: impl Into<String>, message: impl Display) -> Report {
        let mut r = Report::new(command);
        r.status = Status::Error;
        r.fact("error", message);
        r
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl Display) -> &mut Report {
        let key = key.into();
        debug_assert!(
            self.facts.iter().all(|(k, _)| *k != key),
            "duplicate fact {key}"
        );
        self.facts.push((key, value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.facts
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        if self.json {
            self.render_json()
        } else {
            self.render_pretty()
        }
    }

    pub fn render_pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(stamp) = &self.input {
            let _ = writeln!(out, "input: {} ({})", stamp.path, stamp.digest);
        }
        let _ = writeln!(out, "status: {}", self.status.label());
        for (k, v) in &self.facts {
            let _ = writeln!(out, "{k} = {v}");
        }
        out.truncate(out.trim_end().len());
        out
    }

    pub fn render_json(&self) -> String {
        let mut facts = serde_json::Map::new();
        for (k, v) in &self.facts {
            facts.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        let input = match &self.input {
            Some(s) => serde_json::json!({ "path": s.path, "digest": s.digest }),
            None => serde_json::Value::Null,
        };
        serde_json::json!({
            "command": self.command,
            "input": input,
            "status": self.status.label(),
            "facts": facts,
        })
        .to_string()
    }
}

/// 64-bit FNV-1a over the raw input text.
pub fn digest(text: &str) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("fnv64:{h:016x}")
}
