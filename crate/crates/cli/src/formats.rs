//! JSON file formats. Big integers are decimal strings.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};
use num_bigint::BigUint;
use qrz9_core::{LinearCodeR, LinearCodeZ9, PolyZ9, RElement, WeightDistribution, Z9};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// `{"length": n, "counts": {"w": "count"}}`; zero counts are omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub length: usize,
    pub counts: BTreeMap<usize, String>,
}

impl DistributionJson {
    pub fn from_distribution(d: &WeightDistribution) -> DistributionJson {
        DistributionJson {
            source: None,
            length: d.length(),
            counts: d.nonzero().map(|(w, c)| (w, c.to_str_radix(10))).collect(),
        }
    }

    pub fn to_distribution(&self) -> Result<WeightDistribution> {
        let mut pairs = Vec::with_capacity(self.counts.len());
        for (&w, c) in &self.counts {
            if w > self.length {
                bail!("weight {w} exceeds length {}", self.length);
            }
            let v = BigUint::parse_bytes(c.as_bytes(), 10).with_context(|| format!("count for weight {w} is not a decimal integer: {c:?}"))?;
            pairs.push((w, v));
        }
        Ok(WeightDistribution::from_pairs(self.length, pairs))
    }
}

pub fn distribution_value(d: &WeightDistribution) -> Value {
    serde_json::to_value(DistributionJson::from_distribution(d)).expect("serializable")
}

pub fn parse_distribution(text: &str) -> Result<WeightDistribution> {
    serde_json::from_str::<DistributionJson>(text)?.to_distribution()
}

pub fn read_distribution(path: &Path) -> Result<WeightDistribution> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_distribution(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Code file.
///
/// ```json
/// {"ring": "Z9", "length": 3, "rows": [[1, 2, 0]]}
/// {"ring": "R", "length": 2, "rows": [["1,0", "2,3"]]}
/// {"ring": "R", "length": 2, "c1": [[1, 2]], "c2": [[3, 0]]}
/// ```
/// R entries are CRT pairs `"a,b"` standing for `u*a + (1-u)*b`.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CodeJson {
    pub ring: String,
    pub length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<Vec<Vec<i64>>>,
}

fn z9_rows(n: usize, rows: &[Vec<i64>]) -> Result<LinearCodeZ9> {
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        bail!("row of length {} in a code of length {n}", r.len());
    }
    Ok(LinearCodeZ9::from_rows(n, rows.iter().map(|r| r.iter().map(|&x| Z9::new(x)).collect()).collect()))
}

fn r_entry(v: &Value) -> Result<RElement> {
    match v {
        Value::String(s) => Ok(s.parse()?),
        Value::Number(n) => {
            let x = n.as_i64().context("integer entry expected")?;
            Ok(RElement::scalar(Z9::new(x)))
        }
        other => bail!("unsupported entry {other}"),
    }
}

impl CodeJson {
    pub fn to_code(&self) -> Result<LinearCodeR> {
        let n = self.length;
        match self.ring.as_str() {
            "R" => {
                if let (Some(c1), Some(c2)) = (&self.c1, &self.c2) {
                    return Ok(LinearCodeR::new(z9_rows(n, c1)?, z9_rows(n, c2)?)?);
                }
                let rows = self.rows.as_ref().context("an R code needs \"rows\" or both \"c1\" and \"c2\"")?;
                let mut g = Vec::with_capacity(rows.len());
                for r in rows {
                    if r.len() != n {
                        bail!("row of length {} in a code of length {n}", r.len());
                    }
                    g.push(r.iter().map(r_entry).collect::<Result<Vec<_>>>()?);
                }
                Ok(LinearCodeR::from_r_rows(n, &g))
            }
            "Z9" => {
                let rows = self.rows.as_ref().context("a Z9 code needs \"rows\"")?;
                let ints = rows
                    .iter()
                    .map(|r| r.iter().map(|v| v.as_i64().context("integer entry expected")).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let c = z9_rows(n, &ints)?;
                Ok(LinearCodeR::new(c.clone(), c)?)
            }
            other => bail!("unknown ring {other:?}; expected \"R\" or \"Z9\""),
        }
    }

    pub fn from_code(c: &LinearCodeR) -> CodeJson {
        let rows = |z: &LinearCodeZ9| z.standard_form().iter().map(|r| r.iter().map(|x| i64::from(x.value())).collect()).collect();
        CodeJson { ring: "R".into(), length: c.len(), rows: None, c1: Some(rows(c.c1())), c2: Some(rows(c.c2())) }
    }
}

pub fn read_code(path: &Path) -> Result<LinearCodeR> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let cj: CodeJson = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    cj.to_code()
}

pub fn poly_value(p: &PolyZ9) -> Value {
    serde_json::json!({ "coeffs": p.to_string(), "poly": p.pretty() })
}

pub fn rows_value(rows: &[Vec<Z9>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(|x| Value::from(x.value())).collect())).collect())
}

pub fn r_rows_value(rows: &[Vec<RElement>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(|x| Value::from(x.to_string())).collect())).collect())
}

pub fn big(x: &BigUint) -> Value {
    Value::String(x.to_str_radix(10))
}
