//! Published tables and matrices shipped with the binary.

use anyhow::{bail, Context, Result};
use qrz9_core::qr::ExtensionVariant;
use qrz9_core::{LinearCodeZ9, WeightDistribution, Z9};
use serde::Deserialize;

use crate::formats::parse_distribution;

pub const EXAMPLE1_DISTRIBUTION: &str = include_str!("../fixtures/example1_distribution.json");
pub const EXAMPLE2_DISTRIBUTION: &str = include_str!("../fixtures/example2_distribution.json");
pub const EXAMPLE2_GENERATORS: &str = include_str!("../fixtures/example2_generators.json");
pub const EXAMPLE2_SWEEP: &str = include_str!("../fixtures/example2_sweep.json");

pub fn example1_table() -> Result<WeightDistribution> {
    parse_distribution(EXAMPLE1_DISTRIBUTION)
}

pub fn example2_table() -> Result<WeightDistribution> {
    parse_distribution(EXAMPLE2_DISTRIBUTION)
}

#[derive(Clone, Debug, Deserialize)]
pub struct Generators {
    pub length: usize,
    pub g11: Vec<Vec<i64>>,
    pub g12: Vec<Vec<i64>>,
}

impl Generators {
    pub fn code(rows: &[Vec<i64>]) -> LinearCodeZ9 {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        LinearCodeZ9::from_int_rows(&refs)
    }
}

pub fn example2_generators() -> Result<Generators> {
    Ok(serde_json::from_str(EXAMPLE2_GENERATORS)?)
}

/// Stored result of a full sweep over one extension of the p = 11 code.
#[derive(Clone, Debug)]
pub struct SweepRecord {
    pub variant: ExtensionVariant,
    pub distribution: WeightDistribution,
}

/// `"parity"`, `"all-ones"` or `"matrix:<corner>,<constant>"`.
pub fn parse_variant(s: &str) -> Result<ExtensionVariant> {
    match s {
        "parity" => Ok(ExtensionVariant::Parity),
        "all-ones" => Ok(ExtensionVariant::AllOnes),
        _ => {
            let Some(rest) = s.strip_prefix("matrix:") else { bail!("unknown extension {s:?}") };
            let (c, t) = rest.split_once(',').context("expected matrix:<corner>,<constant>")?;
            Ok(ExtensionVariant::Matrix { corner: Z9::new(c.trim().parse()?), constant: Z9::new(t.trim().parse()?) })
        }
    }
}

pub fn example2_sweep() -> Result<SweepRecord> {
    let raw: serde_json::Value = serde_json::from_str(EXAMPLE2_SWEEP)?;
    let variant = raw["variant"].as_str().context("sweep record lacks \"variant\"")?;
    Ok(SweepRecord { variant: parse_variant(variant)?, distribution: parse_distribution(EXAMPLE2_SWEEP)? })
}
