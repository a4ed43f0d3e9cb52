//! Exact Gray-image weight distributions.
//!
//! The general path sweeps all pairs `(a, b)` in `C1 x C2`. The inner code is
//! expanded once into packed block indices (four `Z9` symbols per `u16`); for
//! each outer word one lookup table per block is built, after which a pair
//! costs `ceil(n / 4)` table reads.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::codes_r::LinearCodeR;
use crate::error::Error;
use crate::linear::LinearCodeZ9;
use crate::ring::{GrayMatrix, Z9};
use crate::weight::{convolve, macwilliams, WeightDistribution};

/// Default pair budget for the sweep.
pub const DEFAULT_SWEEP_BUDGET: u128 = 1 << 33;

const BLOCK: usize = 4;
const BLOCK_SIZE: usize = 6561;
/// Largest inner expansion, in bytes.
const INNER_BYTES_MAX: u128 = 1 << 30;

/// `convolve(d, d)` for `d` the distribution of the common component.
///
/// Any valid Gray matrix maps `C1 x C1` bijectively onto itself, so the image
/// is `C1 (+) C1` up to interleaving.
pub fn gray_distribution_fast(c: &LinearCodeR, _a: &GrayMatrix, budget: u128) -> Result<WeightDistribution, Error> {
    if c.c1() != c.c2() {
        return Err(Error::FastPathIneligible("the CRT components differ; use the sweep"));
    }
    let d = c.c1().weight_distribution(budget)?;
    Ok(convolve(&d, &d))
}

pub fn fast_path_eligible(c: &LinearCodeR) -> bool {
    c.c1() == c.c2()
}

#[derive(Clone, Debug)]
pub struct SweepPlan {
    n: usize,
    outer: LinearCodeZ9,
    outer_size: u128,
    inner_size: u128,
    /// `table[9*x + y]`: Gray weight of the symbol pair (outer `x`, inner `y`).
    table: [u8; 81],
    blocks: usize,
    inner: Vec<u16>,
}

impl SweepPlan {
    /// Plans a sweep of `C1 x C2`, refusing more than `budget` pairs.
    pub fn new(c: &LinearCodeR, a: &GrayMatrix, budget: u128) -> Result<SweepPlan, Error> {
        let s1 = c.c1().cardinality_u128().unwrap_or(u128::MAX);
        let s2 = c.c2().cardinality_u128().unwrap_or(u128::MAX);
        let steps = s1.saturating_mul(s2);
        if steps > budget {
            return Err(Error::BudgetExceeded { required: steps, budget });
        }
        let wt = a.weight_table();
        let n = c.len();
        let blocks = n.div_ceil(BLOCK);
        // the smaller component is expanded; the table is transposed when it is C1
        let (outer, inner, table) = if s2 <= s1 {
            (c.c1(), c.c2(), wt)
        } else {
            let mut t = [0u8; 81];
            for x in 0..9 {
                for y in 0..9 {
                    t[9 * x + y] = wt[9 * y + x];
                }
            }
            (c.c2(), c.c1(), t)
        };
        let inner_size = s1.min(s2);
        let bytes = inner_size * blocks as u128 * 2;
        if bytes > INNER_BYTES_MAX {
            return Err(Error::BudgetExceeded { required: bytes, budget: INNER_BYTES_MAX });
        }
        let mut packed = Vec::with_capacity((inner_size as usize) * blocks);
        let mut it = inner.enumerate(u128::MAX)?;
        while let Some(w) = it.next_word() {
            for k in 0..blocks {
                let mut idx = 0usize;
                for j in (0..BLOCK).rev() {
                    idx = 9 * idx + w.get(k * BLOCK + j).map_or(0, |x| x.value() as usize);
                }
                packed.push(idx as u16);
            }
        }
        Ok(SweepPlan {
            n,
            outer: outer.clone(),
            outer_size: s1.max(s2),
            inner_size,
            table,
            blocks,
            inner: packed,
        })
    }

    pub fn steps(&self) -> u128 {
        self.outer_size * self.inner_size
    }

    pub fn outer_size(&self) -> u128 {
        self.outer_size
    }

    /// Length of the Gray image.
    pub fn image_length(&self) -> usize {
        2 * self.n
    }

    /// Splits the outer message space into `k` contiguous ranges of near-equal size.
    pub fn chunks(&self, k: usize) -> Vec<Range<u128>> {
        let k = (k.max(1) as u128).min(self.outer_size.max(1));
        let base = self.outer_size / k;
        let extra = self.outer_size % k;
        let mut start = 0;
        (0..k)
            .map(|i| {
                let len = base + u128::from(i < extra);
                let r = start..start + len;
                start += len;
                r
            })
            .collect()
    }

    fn fill_tables(&self, a: &[Z9], tabs: &mut [u8]) {
        for (k, tab) in tabs.chunks_exact_mut(BLOCK_SIZE).enumerate() {
            let row = |j: usize| {
                let x = a.get(k * BLOCK + j).map_or(0, |x| x.value() as usize);
                &self.table[9 * x..9 * x + 9]
            };
            let (t0, t1, t2, t3) = (row(0), row(1), row(2), row(3));
            let mut i = 0;
            for &w3 in t3 {
                for &w2 in t2 {
                    let w23 = w3 + w2;
                    for &w1 in t1 {
                        let w123 = w23 + w1;
                        for &w0 in t0 {
                            tab[i] = w123 + w0;
                            i += 1;
                        }
                    }
                }
            }
        }
    }

    fn accumulate<const NB: usize>(&self, tabs: &[u8], hist: &mut [u64]) {
        let t: [&[u8]; NB] = core::array::from_fn(|k| &tabs[k * BLOCK_SIZE..(k + 1) * BLOCK_SIZE]);
        let weigh = |word: &[u16]| (0..NB).map(|k| t[k][word[k] as usize] as usize).sum::<usize>();
        // four private histograms break the store-to-load chain on repeated weights
        let len = hist.len();
        let mut lanes = vec![0u32; 4 * len];
        let mut quads = self.inner.chunks_exact(4 * NB);
        for q in &mut quads {
            lanes[weigh(&q[..NB])] += 1;
            lanes[len + weigh(&q[NB..2 * NB])] += 1;
            lanes[2 * len + weigh(&q[2 * NB..3 * NB])] += 1;
            lanes[3 * len + weigh(&q[3 * NB..])] += 1;
        }
        for word in quads.remainder().chunks_exact(NB) {
            hist[weigh(word)] += 1;
        }
        for (w, h) in hist.iter_mut().enumerate() {
            *h += (0..4).map(|l| u64::from(lanes[l * len + w])).sum::<u64>();
        }
    }

    fn accumulate_dyn(&self, tabs: &[u8], hist: &mut [u64]) {
        match self.blocks {
            1 => self.accumulate::<1>(tabs, hist),
            2 => self.accumulate::<2>(tabs, hist),
            3 => self.accumulate::<3>(tabs, hist),
            4 => self.accumulate::<4>(tabs, hist),
            5 => self.accumulate::<5>(tabs, hist),
            6 => self.accumulate::<6>(tabs, hist),
            nb => {
                for word in self.inner.chunks_exact(nb) {
                    let w: usize =
                        word.iter().enumerate().map(|(k, &i)| tabs[k * BLOCK_SIZE + i as usize] as usize).sum();
                    hist[w] += 1;
                }
            }
        }
    }

    /// Histogram (length `2n + 1`) of the pairs whose outer message lies in `range`.
    pub fn run_chunk(&self, range: Range<u128>) -> Vec<u64> {
        let mut hist = vec![0u64; 2 * self.n + 1];
        if self.n == 0 {
            hist[0] = ((range.end - range.start) * self.inner_size) as u64;
            return hist;
        }
        let mut tabs = vec![0u8; self.blocks * BLOCK_SIZE];
        let mut it = self.outer.enumerate_from(range.start);
        for _ in range {
            let Some(a) = it.next_word() else { break };
            self.fill_tables(a, &mut tabs);
            self.accumulate_dyn(&tabs, &mut hist);
        }
        hist
    }

    /// Single-threaded sweep of the whole plan.
    pub fn run(&self) -> WeightDistribution {
        let hist = self.run_chunk(0..self.outer_size);
        merge(self.image_length(), [hist])
    }

    /// Smallest nonzero weight, stopping once it is at most `early_exit_bound`.
    pub fn min_weight(&self, early_exit_bound: usize) -> usize {
        let mut best = usize::MAX;
        let mut hist = vec![0u64; 2 * self.n + 1];
        let mut tabs = vec![0u8; self.blocks * BLOCK_SIZE];
        let mut it = self.outer.enumerate_from(0);
        while let Some(a) = it.next_word() {
            if self.n == 0 {
                break;
            }
            self.fill_tables(a, &mut tabs);
            self.accumulate_dyn(&tabs, &mut hist);
            if let Some(w) = (1..hist.len()).find(|&w| hist[w] > 0) {
                best = best.min(w);
            }
            if best <= early_exit_bound {
                break;
            }
        }
        if best == usize::MAX { 0 } else { best }
    }
}

/// Exact sum of chunk histograms.
pub fn merge<I: IntoIterator<Item = Vec<u64>>>(length: usize, hists: I) -> WeightDistribution {
    let mut counts = vec![BigUint::zero(); length + 1];
    for h in hists {
        for (c, &x) in counts.iter_mut().zip(&h) {
            *c += x;
        }
    }
    WeightDistribution::from_counts(length, counts)
}

pub fn gray_distribution_sweep(c: &LinearCodeR, a: &GrayMatrix, budget: u128) -> Result<WeightDistribution, Error> {
    Ok(SweepPlan::new(c, a, budget)?.run())
}

/// Minimum nonzero Gray weight; 0 for the zero code.
pub fn gray_min_weight(c: &LinearCodeR, a: &GrayMatrix, early_exit_bound: usize, budget: u128) -> Result<usize, Error> {
    Ok(SweepPlan::new(c, a, budget)?.min_weight(early_exit_bound))
}

/// Consistency report for a weight distribution of a `Z9` code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub length: usize,
    pub total: BigUint,
    pub claimed_cardinality: BigUint,
    pub sum_ok: bool,
    pub min_weight: Option<usize>,
    /// `log_3 |C|` when `|C|` is a power of 3.
    pub log3_cardinality: Option<usize>,
    /// `floor(n - log_9 |C| + 1)`.
    pub singleton_bound: Option<usize>,
    pub singleton_defect: Option<usize>,
    pub low_weight_t: usize,
    /// Number of codewords of weight `1..=t` plus the zero word.
    pub low_weight_count: BigUint,
    pub low_weight_threshold: (u64, u64),
    pub low_weight_ok: bool,
    pub macwilliams_fixed_point: bool,
}

fn log3_exact(x: &BigUint) -> Option<usize> {
    let three = BigUint::from(3u8);
    let mut v = x.clone();
    let mut e = 0;
    if v.is_zero() {
        return None;
    }
    while (&v % &three).is_zero() {
        v /= &three;
        e += 1;
    }
    (v == BigUint::from(1u8)).then_some(e)
}

/// Audits `d` against a claimed cardinality: sum, minimum weight, Singleton
/// bound, the fraction of words of weight at most `t` against
/// `threshold.0 / threshold.1`, and the MacWilliams fixed point.
pub fn audit_distribution(
    d: &WeightDistribution,
    claimed_cardinality: &BigUint,
    low_weight_t: usize,
    threshold: (u64, u64),
) -> AuditReport {
    let n = d.length();
    let total = d.total();
    let log3 = log3_exact(claimed_cardinality);
    let singleton_bound = log3.and_then(|l| (n + 1).checked_sub(l.div_ceil(2)));
    let min_weight = d.min_weight();
    let singleton_defect = match (singleton_bound, min_weight) {
        (Some(b), Some(m)) => b.checked_sub(m),
        _ => None,
    };
    let low_weight_count: BigUint = (0..=low_weight_t.min(n)).map(|w| d.count(w)).sum();
    let low_weight_ok = &low_weight_count * BigUint::from(threshold.1) <= claimed_cardinality * BigUint::from(threshold.0);
    let macwilliams_fixed_point = macwilliams(d, claimed_cardinality).is_ok_and(|m| &m == d);
    AuditReport {
        length: n,
        sum_ok: &total == claimed_cardinality,
        total,
        claimed_cardinality: claimed_cardinality.clone(),
        min_weight,
        log3_cardinality: log3,
        singleton_bound,
        singleton_defect,
        low_weight_t,
        low_weight_count,
        low_weight_threshold: threshold,
        low_weight_ok,
        macwilliams_fixed_point,
    }
}
