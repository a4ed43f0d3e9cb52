//! Exact Hamming weight distributions and the q-ary MacWilliams transform.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Number of codewords of each Hamming weight `0..=length`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    length: usize,
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn zeros(length: usize) -> WeightDistribution {
        WeightDistribution { length, counts: vec![BigUint::zero(); length + 1] }
    }

    /// Distribution of the zero code of the given length.
    pub fn zero_code(length: usize) -> WeightDistribution {
        let mut d = WeightDistribution::zeros(length);
        d.counts[0] = BigUint::one();
        d
    }

    /// Builds from a dense count vector; missing weights are zero.
    pub fn from_counts(length: usize, counts: Vec<BigUint>) -> WeightDistribution {
        assert!(counts.len() <= length + 1, "weight beyond code length");
        let mut counts = counts;
        counts.resize(length + 1, BigUint::zero());
        WeightDistribution { length, counts }
    }

    pub fn from_u64(length: usize, counts: &[u64]) -> WeightDistribution {
        WeightDistribution::from_counts(length, counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Builds from sparse `(weight, count)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (usize, BigUint)>>(length: usize, pairs: I) -> WeightDistribution {
        let mut d = WeightDistribution::zeros(length);
        for (w, c) in pairs {
            assert!(w <= length, "weight beyond code length");
            d.counts[w] += c;
        }
        d
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(w).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight with a nonzero count; `None` if only the zero word.
    pub fn min_weight(&self) -> Option<usize> {
        (1..=self.length).find(|&w| !self.counts[w].is_zero())
    }

    /// Nonzero entries as `(weight, count)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// First weight at which two distributions of equal length differ.
    pub fn first_difference(&self, other: &WeightDistribution) -> Option<usize> {
        if self.length != other.length {
            return Some(0);
        }
        (0..=self.length).find(|&w| self.counts[w] != other.counts[w])
    }
}

/// Distribution of a direct sum: `out[w] = sum_{w1 + w2 = w} d1[w1] * d2[w2]`.
pub fn convolve(d1: &WeightDistribution, d2: &WeightDistribution) -> WeightDistribution {
    let mut out = WeightDistribution::zeros(d1.length + d2.length);
    for (w1, c1) in d1.nonzero() {
        for (w2, c2) in d2.nonzero() {
            out.counts[w1 + w2] += c1 * c2;
        }
    }
    out
}

fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for i in 0..=n {
        t[i][0] = BigInt::one();
        for j in 1..=i {
            t[i][j] = &t[i - 1][j - 1] + &t[i - 1][j];
        }
    }
    t
}

/// Krawtchouk values `K_j(i)` for `q = 9`, indexed `[j][i]`.
fn krawtchouk(n: usize) -> Vec<Vec<BigInt>> {
    let binom = binomial_table(n);
    let eight_pow: Vec<BigInt> = (0..=n).map(|e| BigInt::from(8u8).pow(e as u32)).collect();
    let mut k = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for (j, row) in k.iter_mut().enumerate() {
        for (i, slot) in row.iter_mut().enumerate() {
            let mut acc = BigInt::zero();
            for s in 0..=j.min(i) {
                if j - s > n - i {
                    continue;
                }
                let term = &binom[i][s] * &binom[n - i][j - s] * &eight_pow[j - s];
                if s % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            *slot = acc;
        }
    }
    k
}

/// Weight distribution of the dual code over `Z9`,
/// `|C|^-1 * W_C(x + 8y, x - y)`, in exact integer arithmetic.
pub fn macwilliams(dist: &WeightDistribution, cardinality: &BigUint) -> Result<WeightDistribution, Error> {
    if &dist.total() != cardinality {
        return Err(Error::DistributionSum);
    }
    let n = dist.length;
    let k = krawtchouk(n);
    let card = BigInt::from(cardinality.clone());
    let mut out = WeightDistribution::zeros(n);
    for (j, row) in k.iter().enumerate() {
        let mut acc = BigInt::zero();
        for (i, a) in dist.nonzero() {
            acc += BigInt::from(a.clone()) * &row[i];
        }
        if !(&acc % &card).is_zero() {
            return Err(Error::InexactDivision { weight: j });
        }
        let q = acc / &card;
        if q.is_negative() {
            return Err(Error::InexactDivision { weight: j });
        }
        out.counts[j] = q.to_biguint().expect("non-negative");
    }
    Ok(out)
}

/// `9^e`
pub fn pow9(e: usize) -> BigUint {
    BigUint::from(9u8).pow(e as u32)
}

/// `|C^perp| = 9^n / |C|`.
pub fn dual_cardinality(n: usize, cardinality: &BigUint) -> Option<BigUint> {
    let full = pow9(n);
    (&full % cardinality).is_zero().then(|| full / cardinality)
}

/// Lossy ratio helper for reporting.
pub fn ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    num.to_f64().unwrap_or(f64::INFINITY) / den.to_f64().unwrap_or(f64::INFINITY)
}
