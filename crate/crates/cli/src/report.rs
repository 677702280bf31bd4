//! Pipeline reports and their text, CSV and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Bumped whenever the JSON layout changes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
            Verdict::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    pub verdict: Verdict,
    /// Ordered key/value facts.
    pub facts: Vec<(String, String)>,
    /// Objects or morphisms that explain the verdict.
    pub witnesses: Vec<String>,
}

impl Stage {
    pub fn new(name: &str) -> Self {
        Stage { name: name.into(), verdict: Verdict::Pass, facts: Vec::new(), witnesses: Vec::new() }
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.facts.push((key.into(), value.to_string()));
        self
    }

    pub fn witness(&mut self, w: impl Into<String>) -> &mut Self {
        self.witnesses.push(w.into());
        self
    }

    /// Records a requirement; a false one fails the stage.
    pub fn require(&mut self, ok: bool, what: impl Into<String>) -> &mut Self {
        if !ok {
            self.verdict = Verdict::Fail;
            self.witnesses.push(format!("violated: {}", what.into()));
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn skipped(name: &str, why: &str) -> Self {
        let mut s = Stage::new(name);
        s.verdict = Verdict::Skipped;
        s.witnesses.push(why.into());
        s
    }

    pub fn errored(name: &str, err: &anyhow::Error) -> Self {
        let mut s = Stage::new(name);
        s.verdict = Verdict::Error;
        s.witnesses.push(format!("{err:#}"));
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub schema_version: u32,
    pub pipeline: String,
    pub name: String,
    pub field: String,
    pub seed: u64,
    pub stages: Vec<Stage>,
    pub pass: bool,
}

impl PipelineReport {
    pub fn new(pipeline: &str, name: &str, field: String, seed: u64, stages: Vec<Stage>) -> Self {
        let pass = stages.iter().all(|s| s.verdict == Verdict::Pass);
        PipelineReport { schema_version: SCHEMA_VERSION, pipeline: pipeline.into(), name: name.into(), field, seed, stages, pass }
    }

    pub fn stage(&self, name: &str) -> Option<&Stage> {
        self.stages.iter().find(|s| s.name == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub fn render(r: &PipelineReport, format: Format) -> String {
    match format {
        Format::Text => text(r),
        Format::Csv => csv(r),
        Format::Json => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
    }
}

fn text(r: &PipelineReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "pipeline {} ({}) over {}, seed {}", r.pipeline, r.name, r.field, r.seed);
    for s in &r.stages {
        let _ = writeln!(out, "[{}] {}", s.verdict.as_str(), s.name);
        for (k, v) in &s.facts {
            let _ = writeln!(out, "    {k} = {v}");
        }
        for w in &s.witnesses {
            let _ = writeln!(out, "    - {w}");
        }
    }
    let _ = writeln!(out, "overall: {}", if r.pass { "pass" } else { "fail" });
    out
}

fn quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv(r: &PipelineReport) -> String {
    let mut out = String::from("stage,verdict,kind,key,value\n");
    for s in &r.stages {
        let v = s.verdict.as_str();
        let _ = writeln!(out, "{},{v},verdict,,", quote(&s.name));
        for (k, val) in &s.facts {
            let _ = writeln!(out, "{},{v},fact,{},{}", quote(&s.name), quote(k), quote(val));
        }
        for w in &s.witnesses {
            let _ = writeln!(out, "{},{v},witness,,{}", quote(&s.name), quote(w));
        }
    }
    let _ = writeln!(out, "overall,{},verdict,,", if r.pass { "pass" } else { "fail" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PipelineReport {
        let mut a = Stage::new("gamma");
        a.fact("vertices", 4).fact("relations", "a*b, c");
        let mut b = Stage::new("census");
        b.require(false, "census 9 != 10");
        PipelineReport::new("main1", "demo", "F_1009".into(), 1, vec![a, b])
    }

    #[test]
    fn overall_verdict_needs_every_stage() {
        let r = sample();
        assert!(!r.pass);
        assert_eq!(r.stage("gamma").unwrap().get("vertices"), Some("4"));
    }

    #[test]
    fn renderings() {
        let r = sample();
        let t = render(&r, Format::Text);
        assert!(t.contains("[fail] census") && t.ends_with("overall: fail\n"));
        let c = render(&r, Format::Csv);
        assert!(c.contains("gamma,pass,fact,relations,\"a*b, c\""));
        let j = render(&r, Format::Json);
        let back: PipelineReport = serde_json::from_str(&j).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.schema_version, SCHEMA_VERSION);
    }
}
