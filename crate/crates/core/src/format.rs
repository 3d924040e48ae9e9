//! CSV and JSON encodings of a rule.
//!
//! CSV rows carry 17 significant digits, which is enough for every finite
//! binary64 value to parse back to the same bits. JSON numbers are written in
//! shortest round-trip form by serde_json.

use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::rule::{Family, QuadratureRule, WeightFunction};

/// Output encodings understood by [`write_rule`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Formats `x` with 17 significant digits and no locale dependence.
pub fn sig17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.16e}", x);
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..17).contains(&exp) {
        format!("{:.*}", (16 - exp) as usize, x)
    } else {
        sci
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    beta: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RuleRecord {
    family: Family,
    n: usize,
    params: Params,
    scaled: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    modified: bool,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

pub fn write_csv<W: Write>(rule: &QuadratureRule, mut out: W) -> Result<()> {
    writeln!(out, "k,node,weight")?;
    for (k, (x, w)) in rule.iter().enumerate() {
        writeln!(out, "{},{},{}", k + 1, sig17(x), sig17(w))?;
    }
    out.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rule: &QuadratureRule, mut out: W) -> Result<()> {
    let wf = rule.weight_function();
    let record = RuleRecord {
        family: rule.family(),
        n: rule.n(),
        params: Params {
            alpha: wf.alpha(),
            beta: wf.beta(),
        },
        scaled: rule.is_scaled(),
        modified: rule.is_modified(),
        nodes: rule.nodes().to_vec(),
        weights: rule.weights().to_vec(),
    };
    serde_json::to_writer_pretty(&mut out, &record).map_err(|e| Error::Format(e.to_string()))?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

pub fn write_rule<W: Write>(rule: &QuadratureRule, format: Format, out: W) -> Result<()> {
    match format {
        Format::Csv => write_csv(rule, out),
        Format::Json => write_json(rule, out),
    }
}

/// Parses a rule written by [`write_json`].
pub fn read_json(text: &str) -> Result<QuadratureRule> {
    let record: RuleRecord =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let missing = |name: &str| Error::Format(format!("{} rule without {name}", record.family));
    let weight = match record.family {
        Family::Laguerre => WeightFunction::Laguerre {
            alpha: record.params.alpha.ok_or_else(|| missing("alpha"))?,
        },
        Family::Jacobi => WeightFunction::Jacobi {
            alpha: record.params.alpha.ok_or_else(|| missing("alpha"))?,
            beta: record.params.beta.ok_or_else(|| missing("beta"))?,
        },
        Family::Hermite => WeightFunction::Hermite,
    };
    let rule = QuadratureRule::new(weight, record.n, record.nodes, record.weights, record.scaled)?;
    Ok(if record.modified { rule.mark_modified() } else { rule })
}

/// Parses the `k,node,weight` CSV layout into `(node, weight)` pairs.
pub fn read_csv<R: BufRead>(input: R) -> Result<Vec<(f64, f64)>> {
    let mut lines = input.lines();
    let header = lines.next().transpose()?.unwrap_or_default();
    if header.trim() != "k,node,weight" {
        return Err(Error::Format("expected header `k,node,weight`".into()));
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let lineno = i + 2;
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(Error::Format(format!("line {lineno}: expected 3 fields")));
        }
        let num = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::Format(format!("line {lineno}: {e}")))
        };
        rows.push((num(fields[1])?, num(fields[2])?));
    }
    Ok(rows)
}
