use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::Value;

use cutcone::io::parse_json;
use cutcone::Rational;

use crate::{Format, Global};

/// A command's result in both styles.
pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    pub fn new(json: Value) -> Self {
        Report { json, text: String::new() }
    }

    pub fn line(mut self, s: impl AsRef<str>) -> Self {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
        self
    }
}

pub fn read_document(path: Option<&Path>) -> Result<Value> {
    let text = match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
        }
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            buf
        }
    };
    let what = path.map_or("stdin".to_string(), |p| p.display().to_string());
    parse_json(&text).with_context(|| format!("parsing {what}"))
}

fn sink(global: &Global, content: &str) -> Result<()> {
    match &global.output {
        Some(path) => fs::write(path, content).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(content.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

pub fn emit(global: &Global, report: &Report) -> Result<()> {
    match global.format {
        Format::Json => sink(global, &pretty(&report.json)),
        Format::Text => sink(global, &report.text),
    }
}

/// Documents meant to be piped into other commands ignore `--format`.
pub fn emit_document(global: &Global, doc: &Value) -> Result<()> {
    sink(global, &pretty(doc))
}

pub fn write_document(path: &Path, doc: &Value) -> Result<()> {
    fs::write(path, pretty(doc)).with_context(|| format!("writing {}", path.display()))
}

fn pretty(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn join(xs: &[Rational]) -> String {
    let mut s = String::new();
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        write!(s, "{x}").unwrap();
    }
    s
}
