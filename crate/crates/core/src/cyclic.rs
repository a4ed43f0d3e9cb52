//! Cyclic codes over `Z9` as divisor triples, and over `R` as CRT pairs of them.
//!
//! A triple `(f, g, h)` of monic polynomials with `f*g*h = X^n - 1` determines
//! the ideal `(f*g, 3*f*h)` of `Z9[X]/(X^n - 1)`; every cyclic code of length
//! `n` with `gcd(n, 3) = 1` arises this way exactly once.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::codes_r::LinearCodeR;
use crate::error::Error;
use crate::factor::{crt_idempotents, factor_xn_minus_1};
use crate::linear::{LinearCodeZ9, Row};
use crate::poly::{PolyR, PolyZ9};
use crate::ring::Z9;
use crate::util::{mult_order, pow_mod};

/// Which member of a triple a basic irreducible factor is assigned to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    F,
    G,
    H,
}

/// Coefficient vectors of `X^i * p mod (X^n - 1)` for `i` in `shifts`.
fn shift_rows(p: &PolyZ9, n: usize, shifts: usize) -> Vec<Row> {
    let base = p.clone().with_modulus(n).to_dense(n);
    (0..shifts)
        .map(|i| {
            let mut r = base.clone();
            r.rotate_right(i % n.max(1));
            r
        })
        .collect()
}

/// The ideal generated by `p` in `Z9[X]/(X^n - 1)`, as a linear code.
pub fn ideal_code(p: &PolyZ9, n: usize) -> LinearCodeZ9 {
    LinearCodeZ9::from_rows(n, shift_rows(p, n, n))
}

/// The ideal generated by `p` in `R[X]/(X^n - 1)`.
pub fn ideal_code_r(p: &PolyR, n: usize) -> LinearCodeR {
    LinearCodeR::new(ideal_code(&p.a, n), ideal_code(&p.b, n)).expect("equal lengths")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicCodeZ9 {
    n: usize,
    f: PolyZ9,
    g: PolyZ9,
    h: PolyZ9,
}

impl CyclicCodeZ9 {
    pub fn new(n: usize, f: PolyZ9, g: PolyZ9, h: PolyZ9) -> Result<CyclicCodeZ9, Error> {
        if n == 0 || n.is_multiple_of(3) {
            return Err(Error::LengthDivisibleByThree(n));
        }
        if !(f.is_monic() && g.is_monic() && h.is_monic()) {
            return Err(Error::InvalidTriple("f, g, h must be monic"));
        }
        if &(&f * &g) * &h != PolyZ9::x_n_minus_1(n) {
            return Err(Error::InvalidTriple("f*g*h != X^n - 1"));
        }
        Ok(CyclicCodeZ9 { n, f, g, h })
    }

    /// Builds the triple by multiplying each factor into its assigned slot.
    pub fn from_assignment(n: usize, factors: &[PolyZ9], slots: &[Slot]) -> Result<CyclicCodeZ9, Error> {
        assert_eq!(factors.len(), slots.len());
        let (mut f, mut g, mut h) = (PolyZ9::one(), PolyZ9::one(), PolyZ9::one());
        for (p, s) in factors.iter().zip(slots) {
            let target = match s {
                Slot::F => &mut f,
                Slot::G => &mut g,
                Slot::H => &mut h,
            };
            *target = &*target * p;
        }
        CyclicCodeZ9::new(n, f, g, h)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> &PolyZ9 {
        &self.f
    }

    pub fn g(&self) -> &PolyZ9 {
        &self.g
    }

    pub fn h(&self) -> &PolyZ9 {
        &self.h
    }

    fn deg(p: &PolyZ9) -> usize {
        p.degree().unwrap_or(0)
    }

    /// `log_3 |C| = 2*deg(h) + deg(g)`.
    pub fn log3_cardinality(&self) -> usize {
        2 * Self::deg(&self.h) + Self::deg(&self.g)
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(3u8).pow(self.log3_cardinality() as u32)
    }

    /// Shifts of `f*g` (`deg h` rows) and of `3*f*h` (`deg g` rows).
    pub fn generator_rows(&self) -> Vec<Row> {
        let fg = &self.f * &self.g;
        let fh3 = (&self.f * &self.h).scale(Z9::THREE);
        let mut rows = shift_rows(&fg, self.n, Self::deg(&self.h));
        rows.extend(shift_rows(&fh3, self.n, Self::deg(&self.g)));
        rows
    }

    pub fn to_linear(&self) -> LinearCodeZ9 {
        LinearCodeZ9::from_rows(self.n, self.generator_rows())
    }

    /// `f*g + 3*f`, a single generator of the same ideal.
    pub fn principal_generator(&self) -> PolyZ9 {
        let fg = &self.f * &self.g;
        (&fg + &self.f.scale(Z9::THREE)).with_modulus(self.n)
    }

    /// `f = h*` and `g = g*` (monic reciprocals).
    pub fn reciprocal_criterion(&self) -> bool {
        let rec = |p: &PolyZ9| p.reciprocal().expect("factors of X^n - 1 have unit constant term");
        self.f == rec(&self.h) && self.g == rec(&self.g)
    }

    /// Generating idempotent, or the list of all idempotents as a witness that
    /// none generates the code.
    pub fn idempotent_generator(&self) -> Result<IdempotentGenerator, Error> {
        let factors = factor_xn_minus_1(self.n)?;
        let es = crt_idempotents(&factors, self.n)?;
        if Self::deg(&self.g) == 0 {
            let e = factors
                .iter()
                .zip(&es)
                .filter(|(fi, _)| fi.divides(&self.h))
                .fold(PolyZ9::zero().with_modulus(self.n), |acc, (_, e)| &acc + e);
            return Ok(IdempotentGenerator::Idempotent(e));
        }
        Ok(IdempotentGenerator::NotIdempotentGenerated { idempotents: all_idempotents(&es, self.n) })
    }
}

/// Every idempotent of `Z9[X]/(X^n - 1)`: subset sums of the primitive ones.
pub fn all_idempotents(primitive: &[PolyZ9], n: usize) -> Vec<PolyZ9> {
    let r = primitive.len();
    (0u64..(1 << r))
        .map(|mask| {
            (0..r)
                .filter(|i| mask >> i & 1 == 1)
                .fold(PolyZ9::zero().with_modulus(n), |acc, i| &acc + &primitive[i])
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdempotentGenerator {
    Idempotent(PolyZ9),
    /// The code has proper 3-torsion; no idempotent generates it.
    NotIdempotentGenerated { idempotents: Vec<PolyZ9> },
}

/// Cyclic code over `R`: a pair of cyclic `Z9` codes of the same length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicCodeR {
    pub c1: CyclicCodeZ9,
    pub c2: CyclicCodeZ9,
}

impl CyclicCodeR {
    pub fn new(c1: CyclicCodeZ9, c2: CyclicCodeZ9) -> Result<CyclicCodeR, Error> {
        if c1.n != c2.n {
            return Err(Error::LengthMismatch { left: c1.n, right: c2.n });
        }
        Ok(CyclicCodeR { c1, c2 })
    }

    pub fn to_linear(&self) -> LinearCodeR {
        LinearCodeR::new(self.c1.to_linear(), self.c2.to_linear()).expect("equal lengths")
    }

    pub fn principal_generator(&self) -> PolyR {
        PolyR::new(self.c1.principal_generator(), self.c2.principal_generator())
    }

    /// Self-duality via the reciprocal criterion on both components.
    pub fn lemma3_self_dual(&self) -> bool {
        self.c1.reciprocal_criterion() && self.c2.reciprocal_criterion()
    }
}

pub fn to_linear(c: &CyclicCodeZ9) -> LinearCodeZ9 {
    c.to_linear()
}

pub fn principal_generator(c: &CyclicCodeZ9) -> PolyZ9 {
    c.principal_generator()
}

pub fn lemma3_self_dual(c: &CyclicCodeR) -> bool {
    c.lemma3_self_dual()
}

/// Counts of cyclic codes of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicCount {
    /// Number of basic irreducible factors of `X^n - 1`.
    pub r: usize,
    pub over_z9: BigUint,
    pub over_r: BigUint,
}

pub fn count_cyclic(n: usize) -> Result<CyclicCount, Error> {
    let r = factor_xn_minus_1(n)?.len();
    Ok(CyclicCount {
        r,
        over_z9: BigUint::from(3u8).pow(r as u32),
        over_r: BigUint::from(9u8).pow(r as u32),
    })
}

/// All `3^r` cyclic codes of length `n` over `Z9`, in slot-assignment order.
pub fn all_cyclic_z9(n: usize) -> Result<Vec<CyclicCodeZ9>, Error> {
    let factors = factor_xn_minus_1(n)?;
    let r = factors.len();
    let mut out = Vec::with_capacity(3usize.pow(r as u32));
    let mut slots = vec![Slot::F; r];
    for mut code in 0..3usize.pow(r as u32) {
        for s in slots.iter_mut() {
            *s = [Slot::F, Slot::G, Slot::H][code % 3];
            code /= 3;
        }
        out.push(CyclicCodeZ9::from_assignment(n, &factors, &slots)?);
    }
    Ok(out)
}

/// True iff no `j >= 1` has `3^j = -1 (mod n)`.
pub fn self_dual_exists(n: usize) -> bool {
    let n = n as u64;
    if n.is_multiple_of(3) {
        return false;
    }
    let minus_one = (n - 1) % n;
    let ord = mult_order(3, n);
    !(1..=ord).any(|j| pow_mod(3, j, n) == minus_one)
}

/// Outcome of the exhaustive self-dual search over `R`.
#[derive(Clone, Debug)]
pub struct SelfDualSearch {
    pub n: usize,
    /// Self-dual cyclic `Z9` components found by linear algebra.
    pub z9_self_dual: Vec<CyclicCodeZ9>,
    /// Components satisfying the reciprocal criterion.
    pub z9_criterion: Vec<CyclicCodeZ9>,
    /// Number of self-dual cyclic codes over `R` (pairs of self-dual components).
    pub r_count: usize,
    /// Whether the only self-dual code is `3*R^n`.
    pub only_trivial: bool,
}

impl SelfDualSearch {
    pub fn criterion_agrees(&self) -> bool {
        self.z9_self_dual == self.z9_criterion
    }

    /// Self-dual codes over `R` other than `3*R^n`.
    pub fn nontrivial_r_count(&self) -> usize {
        let trivial = usize::from(self.z9_self_dual.iter().any(|c| c.f.degree() == Some(0) && c.h.degree() == Some(0)));
        self.r_count - trivial
    }
}

pub fn self_dual_search(n: usize) -> Result<SelfDualSearch, Error> {
    let all = all_cyclic_z9(n)?;
    let z9_self_dual: Vec<CyclicCodeZ9> = all.iter().filter(|c| c.to_linear().is_self_dual()).cloned().collect();
    let z9_criterion: Vec<CyclicCodeZ9> = all.iter().filter(|c| c.reciprocal_criterion()).cloned().collect();
    let r_count = z9_self_dual.len() * z9_self_dual.len();
    let three = LinearCodeZ9::scaled_full(n, Z9::THREE);
    let only_trivial = z9_self_dual.iter().all(|c| c.to_linear() == three);
    Ok(SelfDualSearch { n, z9_self_dual, z9_criterion, r_count, only_trivial })
}

/// `1 - mu_{-1}(e)`, the generating idempotent of the dual of `(e)`.
pub fn dual_idempotent(e: &PolyZ9, n: usize) -> Result<PolyZ9, Error> {
    let e = e.clone().with_modulus(n);
    if &e * &e != e {
        return Err(Error::NotIdempotent(alloc::format!("{e}")));
    }
    Ok(&PolyZ9::one().with_modulus(n) - &e.multiplier(-1)?)
}

pub fn dual_idempotent_r(e: &PolyR, n: usize) -> Result<PolyR, Error> {
    Ok(PolyR::new(dual_idempotent(&e.a, n)?, dual_idempotent(&e.b, n)?))
}
