//! Linear codes over `R` held as CRT pairs `C = u*C1 (+) (1 - u)*C2`.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::Error;
use crate::linear::{LinearCodeZ9, Row};
use crate::ring::{GrayMatrix, RElement, Z9};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCodeR {
    c1: LinearCodeZ9,
    c2: LinearCodeZ9,
}

impl LinearCodeR {
    pub fn new(c1: LinearCodeZ9, c2: LinearCodeZ9) -> Result<LinearCodeR, Error> {
        if c1.len() != c2.len() {
            return Err(Error::LengthMismatch { left: c1.len(), right: c2.len() });
        }
        Ok(LinearCodeR { c1, c2 })
    }

    /// Code generated over `R` by the rows of `g`; each entry is split into its
    /// CRT coordinates.
    pub fn from_r_rows(n: usize, g: &[Vec<RElement>]) -> LinearCodeR {
        let a: Vec<Row> = g.iter().map(|r| r.iter().map(|x| x.a).collect()).collect();
        let b: Vec<Row> = g.iter().map(|r| r.iter().map(|x| x.b).collect()).collect();
        LinearCodeR { c1: LinearCodeZ9::from_rows(n, a), c2: LinearCodeZ9::from_rows(n, b) }
    }

    pub fn zero(n: usize) -> LinearCodeR {
        LinearCodeR { c1: LinearCodeZ9::zero(n), c2: LinearCodeZ9::zero(n) }
    }

    pub fn full(n: usize) -> LinearCodeR {
        LinearCodeR { c1: LinearCodeZ9::full(n), c2: LinearCodeZ9::full(n) }
    }

    pub fn len(&self) -> usize {
        self.c1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c1.is_empty()
    }

    /// The `u`-component `C1`.
    pub fn c1(&self) -> &LinearCodeZ9 {
        &self.c1
    }

    /// The `(1 - u)`-component `C2`.
    pub fn c2(&self) -> &LinearCodeZ9 {
        &self.c2
    }

    pub fn cardinality(&self) -> BigUint {
        self.c1.cardinality() * self.c2.cardinality()
    }

    pub fn log3_cardinality(&self) -> usize {
        self.c1.log3_cardinality() + self.c2.log3_cardinality()
    }

    /// Generators over `Z9`: `u*g` for rows of `C1`, `(1 - u)*g` for rows of `C2`.
    pub fn z9_generators(&self) -> Vec<Vec<RElement>> {
        let u_rows = self.c1.standard_form().iter().map(|g| g.iter().map(|&x| RElement::new(x, Z9::ZERO)).collect());
        let v_rows = self.c2.standard_form().iter().map(|g| g.iter().map(|&x| RElement::new(Z9::ZERO, x)).collect());
        u_rows.chain(v_rows).collect()
    }

    pub fn contains(&self, v: &[RElement]) -> bool {
        let a: Row = v.iter().map(|x| x.a).collect();
        let b: Row = v.iter().map(|x| x.b).collect();
        self.c1.contains(&a) && self.c2.contains(&b)
    }

    pub fn dual(&self) -> LinearCodeR {
        LinearCodeR { c1: self.c1.dual(), c2: self.c2.dual() }
    }

    pub fn is_self_dual(&self) -> bool {
        self.c1.is_self_dual() && self.c2.is_self_dual()
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.c1.is_self_orthogonal() && self.c2.is_self_orthogonal()
    }

    pub fn sum(&self, other: &LinearCodeR) -> Result<LinearCodeR, Error> {
        Ok(LinearCodeR { c1: self.c1.sum(&other.c1)?, c2: self.c2.sum(&other.c2)? })
    }

    pub fn intersect(&self, other: &LinearCodeR) -> Result<LinearCodeR, Error> {
        Ok(LinearCodeR { c1: self.c1.intersect(&other.c1)?, c2: self.c2.intersect(&other.c2)? })
    }

    pub fn is_subcode_of(&self, other: &LinearCodeR) -> bool {
        self.c1.is_subcode_of(&other.c1) && self.c2.is_subcode_of(&other.c2)
    }

    pub fn permute(&self, perm: &[usize]) -> LinearCodeR {
        LinearCodeR { c1: self.c1.permute(perm), c2: self.c2.permute(perm) }
    }

    pub fn is_cyclic(&self) -> bool {
        self.c1.is_cyclic() && self.c2.is_cyclic()
    }

    /// `Phi(C)` as a `Z9` code of length `2n`.
    pub fn gray_image(&self, a: &GrayMatrix) -> LinearCodeZ9 {
        let rows = self.z9_generators().iter().map(|g| crate::ring::gray_vector(g, a)).collect();
        LinearCodeZ9::from_rows(2 * self.len(), rows)
    }
}

pub fn dual_r(c: &LinearCodeR) -> LinearCodeR {
    c.dual()
}

pub fn is_self_dual_r(c: &LinearCodeR) -> bool {
    c.is_self_dual()
}

pub fn gray_image(c: &LinearCodeR, a: &GrayMatrix) -> LinearCodeZ9 {
    c.gray_image(a)
}

/// Euclidean inner product over `R`.
pub fn dot_r(x: &[RElement], y: &[RElement]) -> RElement {
    x.iter().zip(y).fold(RElement::ZERO, |acc, (&p, &q)| acc + p * q)
}
