use std::fmt::Write as _;

use serde_json::{Map, Value};

/// What a subcommand produced: the plain output plus a run report.
#[derive(Debug)]
pub struct Run {
    pub output: String,
    pub report: Report,
}

impl Run {
    pub fn new(command: &str) -> Run {
        Run {
            output: String::new(),
            report: Report::new(command),
        }
    }

    pub fn passed(&self) -> bool {
        self.report.verdicts.values().all(|v| v.as_bool() == Some(true))
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub result: Map<String, Value>,
    pub verdicts: Map<String, Value>,
    pub seed: Option<u64>,
    pub wall_ms: u128,
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            command: command.into(),
            params: Map::new(),
            result: Map::new(),
            verdicts: Map::new(),
            seed: None,
            wall_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.params.insert(key.into(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.result.insert(key.into(), v.into());
        self
    }

    pub fn verdict(&mut self, key: &str, ok: bool) -> &mut Self {
        self.verdicts.insert(key.into(), ok.into());
        self
    }

    /// `key=value` lines; map keys come out sorted.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command={}", self.command);
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "seed={seed}");
        }
        for (prefix, map) in [("param", &self.params), ("result", &self.result)] {
            for (k, v) in map {
                let _ = writeln!(s, "{prefix}.{k}={}", plain(v));
            }
        }
        for (k, v) in &self.verdicts {
            let word = if v.as_bool() == Some(true) { "pass" } else { "fail" };
            let _ = writeln!(s, "verify.{k}={word}");
        }
        let _ = writeln!(s, "wall_ms={}", self.wall_ms);
        s
    }

    pub fn to_json(&self, output: &str) -> Value {
        let mut o = Map::new();
        o.insert("command".into(), self.command.clone().into());
        o.insert("params".into(), Value::Object(self.params.clone()));
        o.insert("result".into(), Value::Object(self.result.clone()));
        o.insert("verdicts".into(), Value::Object(self.verdicts.clone()));
        o.insert("seed".into(), self.seed.map_or(Value::Null, Value::from));
        o.insert("wall_ms".into(), (self.wall_ms as u64).into());
        o.insert("output".into(), output.into());
        Value::Object(o)
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
