//! Linear codes over the chain ring `Z9`.
//!
//! A code is stored as its generator rows together with the Howell normal form
//! of their row space: an echelon form whose pivots are `1` or `3`, with
//! entries above a pivot reduced modulo it, and with the property that the rows
//! whose pivot lies in column `j` or later span every codeword vanishing on
//! columns `0..j`. That form is unique for a row space, so code equality is
//! equality of forms.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::Error;
use crate::ring::Z9;
use crate::weight::WeightDistribution;

/// Default cap on the number of codewords a single enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 32;

pub type Row = Vec<Z9>;

#[inline]
fn add_scaled(dst: &mut [Z9], src: &[Z9], c: Z9) {
    if c.is_zero() {
        return;
    }
    for (d, &s) in dst.iter_mut().zip(src) {
        *d += s * c;
    }
}

fn leading(row: &[Z9]) -> Option<usize> {
    row.iter().position(|c| !c.is_zero())
}

/// Howell normal form of the row space of `rows` (all of length `n`).
pub fn howell_form(rows: &[Row], n: usize) -> Vec<Row> {
    let mut pool: Vec<Row> = rows.iter().filter(|r| leading(r).is_some()).cloned().collect();
    let mut out: Vec<Row> = Vec::new();
    for col in 0..n {
        let pick = pool
            .iter()
            .enumerate()
            .filter(|(_, r)| !r[col].is_zero())
            .min_by_key(|(_, r)| r[col].valuation())
            .map(|(i, _)| i);
        let Some(pi) = pick else { continue };
        let mut pivot = pool.swap_remove(pi);
        let v = pivot[col].valuation();
        // normalize the pivot to 1 or 3
        let unit = if v == 0 { pivot[col] } else { Z9::from_u8(pivot[col].value() / 3) };
        let inv = unit.inverse().expect("unit part");
        for x in pivot.iter_mut() {
            *x *= inv;
        }
        let p = pivot[col];
        for r in pool.iter_mut() {
            let x = r[col];
            if x.is_zero() {
                continue;
            }
            let c = if p == Z9::ONE { x } else { Z9::from_u8(x.value() / 3) };
            add_scaled(r, &pivot, -c);
            debug_assert!(r[col].is_zero());
        }
        if p == Z9::THREE {
            let ann: Row = pivot.iter().map(|&x| x * Z9::THREE).collect();
            pool.push(ann);
        }
        pool.retain(|r| leading(r).is_some());
        out.push(pivot);
    }
    // reduce entries above each pivot
    for i in 0..out.len() {
        let col = leading(&out[i]).expect("nonzero row");
        let p = out[i][col];
        let (above, rest) = out.split_at_mut(i);
        let pivot_row = &rest[0];
        for r in above.iter_mut() {
            let x = r[col];
            let c = if p == Z9::ONE { x } else { Z9::from_u8(x.value() / 3) };
            add_scaled(r, pivot_row, -c);
        }
    }
    out
}

/// Rank over `F3` of the rows reduced mod 3.
fn rank_mod3(rows: &[Row], n: usize) -> usize {
    let mut m: Vec<Vec<u8>> = rows.iter().map(|r| r.iter().map(|c| c.value() % 3).collect()).collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pi) = (rank..m.len()).find(|&i| m[i][col] != 0) else { continue };
        m.swap(rank, pi);
        let inv = m[rank][col]; // 1 and 2 are self-inverse mod 3
        for x in m[rank].iter_mut() {
            *x = *x * inv % 3;
        }
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != 0 {
                let c = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot) {
                    *x = (*x + 3 * 3 - c * p) % 3;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Linear code over `Z9`.
#[derive(Clone, Debug)]
pub struct LinearCodeZ9 {
    n: usize,
    generators: Vec<Row>,
    form: Vec<Row>,
    k1: usize,
    k2: usize,
}

impl PartialEq for LinearCodeZ9 {
    fn eq(&self, other: &LinearCodeZ9) -> bool {
        self.n == other.n && self.form == other.form
    }
}

impl Eq for LinearCodeZ9 {}

impl core::hash::Hash for LinearCodeZ9 {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.form.hash(state);
    }
}

/// Result of [`canonicalize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub rows: Vec<Row>,
    pub k1: usize,
    pub k2: usize,
}

/// Canonical form and type `(k1, k2)` of the row space of `g`.
pub fn canonicalize(g: &[Row], n: usize) -> StandardForm {
    let code = LinearCodeZ9::from_rows(n, g.to_vec());
    StandardForm { rows: code.form.clone(), k1: code.k1, k2: code.k2 }
}

impl LinearCodeZ9 {
    /// Code generated by `rows`; every row must have length `n`.
    pub fn from_rows(n: usize, rows: Vec<Row>) -> LinearCodeZ9 {
        assert!(rows.iter().all(|r| r.len() == n), "generator row of wrong length");
        let form = howell_form(&rows, n);
        let k1 = rank_mod3(&form, n);
        let log3: usize = form.iter().map(|r| if r[leading(r).unwrap()] == Z9::ONE { 2 } else { 1 }).sum();
        let k2 = log3 - 2 * k1;
        LinearCodeZ9 { n, generators: rows, form, k1, k2 }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> LinearCodeZ9 {
        let n = rows.first().map_or(0, |r| r.len());
        LinearCodeZ9::from_rows(n, rows.iter().map(|r| r.iter().map(|&x| Z9::new(x)).collect()).collect())
    }

    pub fn zero(n: usize) -> LinearCodeZ9 {
        LinearCodeZ9::from_rows(n, Vec::new())
    }

    pub fn full(n: usize) -> LinearCodeZ9 {
        LinearCodeZ9::from_rows(n, identity(n, Z9::ONE))
    }

    /// `t * Z9^n` for a scalar `t`.
    pub fn scaled_full(n: usize, t: Z9) -> LinearCodeZ9 {
        LinearCodeZ9::from_rows(n, identity(n, t))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn generators(&self) -> &[Row] {
        &self.generators
    }

    /// Canonical (Howell) rows.
    pub fn standard_form(&self) -> &[Row] {
        &self.form
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }

    /// `log_3 |C| = 2*k1 + k2`.
    pub fn log3_cardinality(&self) -> usize {
        2 * self.k1 + self.k2
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(3u8).pow(self.log3_cardinality() as u32)
    }

    /// Number of codewords, if it fits in `u128`.
    pub fn cardinality_u128(&self) -> Option<u128> {
        3u128.checked_pow(self.log3_cardinality() as u32)
    }

    pub fn is_zero_code(&self) -> bool {
        self.form.is_empty()
    }

    /// Additive order bound of each canonical row: 9 for unit pivots, 3 otherwise.
    pub fn radices(&self) -> Vec<u8> {
        self.form.iter().map(|r| if r[leading(r).unwrap()] == Z9::ONE { 9 } else { 3 }).collect()
    }

    pub fn contains(&self, v: &[Z9]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut w = v.to_vec();
        for row in &self.form {
            let col = leading(row).unwrap();
            let x = w[col];
            if row[col] == Z9::ONE {
                add_scaled(&mut w, row, -x);
            } else {
                if !x.value().is_multiple_of(3) {
                    return false;
                }
                add_scaled(&mut w, row, -Z9::from_u8(x.value() / 3));
            }
        }
        w.iter().all(|c| c.is_zero())
    }

    /// Euclidean dual `{x : x . c = 0 for all c in C}`.
    pub fn dual(&self) -> LinearCodeZ9 {
        let k = self.form.len();
        let n = self.n;
        // Howell form of [G^T | I]: rows vanishing on the first k columns give the kernel.
        let aug: Vec<Row> = (0..n)
            .map(|i| {
                let mut r: Row = self.form.iter().map(|g| g[i]).collect();
                r.extend((0..n).map(|j| if i == j { Z9::ONE } else { Z9::ZERO }));
                r
            })
            .collect();
        let h = howell_form(&aug, k + n);
        let kernel: Vec<Row> = h
            .into_iter()
            .filter(|r| leading(r).is_some_and(|c| c >= k))
            .map(|r| r[k..].to_vec())
            .collect();
        LinearCodeZ9::from_rows(n, kernel)
    }

    /// `G * G^T` over the canonical rows.
    pub fn gram(&self) -> Vec<Row> {
        gram(&self.form)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gram().iter().flatten().all(|c| c.is_zero())
    }

    pub fn is_self_dual(&self) -> bool {
        self.is_self_orthogonal() && self.log3_cardinality() == self.n
    }

    pub fn sum(&self, other: &LinearCodeZ9) -> Result<LinearCodeZ9, Error> {
        if self.n != other.n {
            return Err(Error::LengthMismatch { left: self.n, right: other.n });
        }
        let mut rows = self.form.clone();
        rows.extend(other.form.iter().cloned());
        Ok(LinearCodeZ9::from_rows(self.n, rows))
    }

    pub fn intersect(&self, other: &LinearCodeZ9) -> Result<LinearCodeZ9, Error> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    pub fn is_subcode_of(&self, other: &LinearCodeZ9) -> bool {
        self.n == other.n && self.form.iter().all(|r| other.contains(r))
    }

    /// Image under the coordinate permutation sending position `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> LinearCodeZ9 {
        assert_eq!(perm.len(), self.n);
        let rows = self
            .form
            .iter()
            .map(|r| {
                let mut out = vec![Z9::ZERO; self.n];
                for (i, &c) in r.iter().enumerate() {
                    out[perm[i]] = c;
                }
                out
            })
            .collect();
        LinearCodeZ9::from_rows(self.n, rows)
    }

    /// Whether the code is invariant under the cyclic shift.
    pub fn is_cyclic(&self) -> bool {
        self.form.iter().all(|r| {
            let mut s = r.clone();
            s.rotate_right(1);
            self.contains(&s)
        })
    }

    /// Stream over all codewords, refusing codes larger than `budget`.
    pub fn enumerate(&self, budget: u128) -> Result<Codewords, Error> {
        let required = self.cardinality_u128().unwrap_or(u128::MAX);
        if required > budget {
            return Err(Error::BudgetExceeded { required, budget });
        }
        Ok(Codewords::new(self))
    }

    /// Stream starting at message index `start` (digit 0 least significant).
    /// An index past the end yields nothing.
    pub fn enumerate_from(&self, start: u128) -> Codewords {
        let mut it = Codewords::new(self);
        it.seek(start);
        it
    }

    pub fn weight_distribution(&self, budget: u128) -> Result<WeightDistribution, Error> {
        let mut hist = vec![0u64; self.n + 1];
        let mut it = self.enumerate(budget)?;
        while let Some(w) = it.next_word() {
            hist[w.iter().filter(|c| !c.is_zero()).count()] += 1;
        }
        Ok(WeightDistribution::from_u64(self.n, &hist))
    }

    /// Smallest nonzero Hamming weight; 0 for the zero code.
    pub fn min_weight(&self, budget: u128) -> Result<usize, Error> {
        let mut best = usize::MAX;
        let mut it = self.enumerate(budget)?;
        while let Some(w) = it.next_word() {
            let wt = w.iter().filter(|c| !c.is_zero()).count();
            if wt > 0 && wt < best {
                best = wt;
                if best == 1 {
                    break;
                }
            }
        }
        Ok(if best == usize::MAX { 0 } else { best })
    }
}

pub fn identity(n: usize, t: Z9) -> Vec<Row> {
    (0..n).map(|i| (0..n).map(|j| if i == j { t } else { Z9::ZERO }).collect()).collect()
}

pub fn dot(x: &[Z9], y: &[Z9]) -> Z9 {
    x.iter().zip(y).fold(Z9::ZERO, |acc, (&a, &b)| acc + a * b)
}

pub fn gram(rows: &[Row]) -> Vec<Row> {
    rows.iter().map(|x| rows.iter().map(|y| dot(x, y)).collect()).collect()
}

/// Odometer enumeration of a code's messages applied to its canonical rows.
///
/// Message digit `i` ranges over `0..radix_i`. Advancing adds row 0; a digit
/// that wraps adds the precomputed correction `-radix_i * row_i` (zero when the
/// radix is 9) and carries into the next digit, so each step costs amortized
/// `O(n)`.
#[derive(Debug)]
pub struct Codewords {
    rows: Vec<Row>,
    corrections: Vec<Row>,
    radices: Vec<u8>,
    digits: Vec<u8>,
    current: Row,
    started: bool,
    done: bool,
}

impl Codewords {
    fn new(code: &LinearCodeZ9) -> Codewords {
        let rows = code.form.clone();
        let radices = code.radices();
        let corrections = rows
            .iter()
            .zip(&radices)
            .map(|(r, &m)| r.iter().map(|&x| -(x * Z9::from_u8(m))).collect())
            .collect();
        Codewords {
            digits: vec![0; rows.len()],
            current: vec![Z9::ZERO; code.n],
            rows,
            corrections,
            radices,
            started: false,
            done: false,
        }
    }

    fn seek(&mut self, mut index: u128) {
        self.current.iter_mut().for_each(|x| *x = Z9::ZERO);
        for i in 0..self.rows.len() {
            let m = u128::from(self.radices[i]);
            self.digits[i] = (index % m) as u8;
            index /= m;
            add_scaled(&mut self.current, &self.rows[i], Z9::from_u8(self.digits[i]));
        }
        self.started = false;
        self.done = index > 0;
    }

    /// Current message digits (valid after a word was returned).
    pub fn message(&self) -> &[u8] {
        &self.digits
    }

    /// Canonical rows the messages are applied to.
    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Next codeword as a borrowed slice (lending-iterator style).
    pub fn next_word(&mut self) -> Option<&[Z9]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let mut i = 0;
        loop {
            if i == self.rows.len() {
                self.done = true;
                return None;
            }
            add_scaled(&mut self.current, &self.rows[i], Z9::ONE);
            self.digits[i] += 1;
            if self.digits[i] < self.radices[i] {
                return Some(&self.current);
            }
            add_scaled(&mut self.current, &self.corrections[i], Z9::ONE);
            self.digits[i] = 0;
            i += 1;
        }
    }
}

impl Iterator for Codewords {
    type Item = Row;

    fn next(&mut self) -> Option<Row> {
        self.next_word().map(|w| w.to_vec())
    }
}
