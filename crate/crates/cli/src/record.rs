//! Result records: self-describing TOML documents written to stdout.

use gcx_core::mahler::{Diagnostics, MahlerResult};
use gcx_core::LaurentPoly;
use num_bigint::BigInt;
use sha2::{Digest, Sha256};
use toml::{Table, Value};

pub struct Record {
    command: &'static str,
    digest: String,
    outputs: Table,
    extra: Table,
}

impl Record {
    pub fn new(command: &'static str, input: &[u8]) -> Self {
        Record {
            command,
            digest: format!("sha256:{}", hex::encode(Sha256::digest(input))),
            outputs: Table::new(),
            extra: Table::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.to_string(), value.into());
        self
    }

    /// A top-level table next to `outputs`, e.g. an emitted graph.
    pub fn attach(&mut self, key: &str, value: Table) -> &mut Self {
        self.extra.insert(key.to_string(), Value::Table(value));
        self
    }

    pub fn into_outputs(self) -> Value {
        Value::Table(self.outputs)
    }

    pub fn render(self, wall_time: std::time::Duration) -> String {
        let mut doc = Table::new();
        doc.insert("command".into(), self.command.into());
        doc.insert("tool_version".into(), env!("CARGO_PKG_VERSION").into());
        doc.insert("input_digest".into(), self.digest.into());
        doc.insert("wall_time_seconds".into(), wall_time.as_secs_f64().into());
        doc.insert("outputs".into(), Value::Table(self.outputs));
        doc.extend(self.extra);
        toml::to_string(&doc).expect("records serialize")
    }
}

pub fn big(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn bigs<'a>(ns: impl IntoIterator<Item = &'a BigInt>) -> Value {
    Value::Array(ns.into_iter().map(big).collect())
}

pub fn floats(xs: &[f64]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::Float(x)).collect())
}

/// `{ display, nvars, terms = [{ exponents, coefficient }] }`, coefficients
/// in decimal.
pub fn poly(p: &LaurentPoly) -> Value {
    let mut t = Table::new();
    t.insert("display".into(), p.to_string().into());
    t.insert("nvars".into(), (p.nvars() as i64).into());
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            let mut term = Table::new();
            term.insert("exponents".into(), Value::Array(e.iter().map(|&x| Value::Integer(x)).collect()));
            term.insert("coefficient".into(), big(c));
            Value::Table(term)
        })
        .collect();
    t.insert("terms".into(), Value::Array(terms));
    Value::Table(t)
}

pub fn mahler(m: &MahlerResult) -> Value {
    let mut t = Table::new();
    t.insert("log_measure".into(), m.log_measure.into());
    t.insert("measure".into(), m.measure.into());
    t.insert("method".into(), m.method.name().into());
    t.insert("error_estimate".into(), m.error_estimate.into());
    match &m.diagnostics {
        Diagnostics::Roots { roots, cyclotomic } => {
            t.insert("roots_outside_circle".into(), (roots.len() as i64).into());
            let cyc: Vec<Value> = cyclotomic
                .iter()
                .map(|&(n, k)| Value::Array(vec![(n as i64).into(), (k as i64).into()]))
                .collect();
            t.insert("cyclotomic_factors".into(), Value::Array(cyc));
        }
        Diagnostics::Grid { coarse, fine, coarse_value } => {
            t.insert("coarse_grid".into(), (*coarse as i64).into());
            t.insert("fine_grid".into(), (*fine as i64).into());
            t.insert("coarse_log_measure".into(), (*coarse_value).into());
        }
        Diagnostics::Constant => {}
    }
    Value::Table(t)
}
