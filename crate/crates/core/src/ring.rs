//! Arithmetic in `Z9` and in `R = Z9 + uZ9` with `u^2 = u`.
//!
//! Elements of `R` are held in CRT coordinates: the pair `(a, b)` stands for
//! `u*a + (1 - u)*b`. Since `u` and `1 - u` are orthogonal idempotents, ring
//! operations act componentwise on the pair.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use alloc::vec::Vec;

use crate::error::Error;

/// Residue class modulo 9. The stored value is always in `0..9`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(transparent)]
pub struct Z9(u8);

impl Z9 {
    pub const ZERO: Z9 = Z9(0);
    pub const ONE: Z9 = Z9(1);
    pub const THREE: Z9 = Z9(3);

    /// Reduces any integer into `Z9`.
    #[inline]
    pub const fn new(v: i64) -> Z9 {
        Z9(v.rem_euclid(9) as u8)
    }

    #[inline]
    pub const fn from_u8(v: u8) -> Z9 {
        Z9(v % 9)
    }

    #[inline]
    pub const fn value(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_unit(self) -> bool {
        !self.0.is_multiple_of(3)
    }

    /// 3-adic valuation capped at 2 (the valuation of zero).
    #[inline]
    pub const fn valuation(self) -> u8 {
        match self.0 {
            0 => 2,
            3 | 6 => 1,
            _ => 0,
        }
    }

    /// Multiplicative inverse, if `self` is a unit.
    pub const fn inverse(self) -> Option<Z9> {
        match self.0 {
            1 => Some(Z9(1)),
            2 => Some(Z9(5)),
            4 => Some(Z9(7)),
            5 => Some(Z9(2)),
            7 => Some(Z9(4)),
            8 => Some(Z9(8)),
            _ => None,
        }
    }

    pub fn pow(self, mut e: u64) -> Z9 {
        let mut base = self;
        let mut acc = Z9::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// All nine residues in increasing order.
    pub fn all() -> impl Iterator<Item = Z9> {
        (0..9u8).map(Z9)
    }
}

impl From<Z9> for u8 {
    fn from(z: Z9) -> u8 {
        z.0
    }
}

impl Add for Z9 {
    type Output = Z9;
    #[inline]
    fn add(self, rhs: Z9) -> Z9 {
        let s = self.0 + rhs.0;
        Z9(if s >= 9 { s - 9 } else { s })
    }
}

impl Sub for Z9 {
    type Output = Z9;
    #[inline]
    fn sub(self, rhs: Z9) -> Z9 {
        Z9(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + 9 - rhs.0 })
    }
}

impl Neg for Z9 {
    type Output = Z9;
    #[inline]
    fn neg(self) -> Z9 {
        Z9(if self.0 == 0 { 0 } else { 9 - self.0 })
    }
}

impl Mul for Z9 {
    type Output = Z9;
    #[inline]
    fn mul(self, rhs: Z9) -> Z9 {
        Z9((self.0 * rhs.0) % 9)
    }
}

impl AddAssign for Z9 {
    #[inline]
    fn add_assign(&mut self, rhs: Z9) {
        *self = *self + rhs;
    }
}

impl SubAssign for Z9 {
    #[inline]
    fn sub_assign(&mut self, rhs: Z9) {
        *self = *self - rhs;
    }
}

impl MulAssign for Z9 {
    #[inline]
    fn mul_assign(&mut self, rhs: Z9) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Z9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Element `u*a + (1 - u)*b` of `R`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RElement {
    /// Coefficient of `u`.
    pub a: Z9,
    /// Coefficient of `1 - u`.
    pub b: Z9,
}

impl RElement {
    pub const ZERO: RElement = RElement { a: Z9::ZERO, b: Z9::ZERO };
    pub const ONE: RElement = RElement { a: Z9::ONE, b: Z9::ONE };
    /// The idempotent `u`.
    pub const U: RElement = RElement { a: Z9::ONE, b: Z9::ZERO };

    pub const fn new(a: Z9, b: Z9) -> RElement {
        RElement { a, b }
    }

    pub const fn from_ints(a: i64, b: i64) -> RElement {
        RElement { a: Z9::new(a), b: Z9::new(b) }
    }

    /// Embeds `t in Z9` diagonally, i.e. as the scalar `t` of `R`.
    pub const fn scalar(t: Z9) -> RElement {
        RElement { a: t, b: t }
    }

    /// Builds `s + u*t` from its standard form.
    pub fn from_standard(s: Z9, t: Z9) -> RElement {
        RElement { a: s + t, b: s }
    }

    /// Returns `(s, t)` with `self = s + u*t`.
    pub fn to_standard(self) -> (Z9, Z9) {
        (self.b, self.a - self.b)
    }

    pub fn is_unit(self) -> bool {
        self.a.is_unit() && self.b.is_unit()
    }

    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Index in `0..81`, `9*a + b`.
    #[inline]
    pub fn index(self) -> usize {
        self.a.value() as usize * 9 + self.b.value() as usize
    }

    pub fn from_index(i: usize) -> RElement {
        RElement { a: Z9::from_u8((i / 9) as u8), b: Z9::from_u8((i % 9) as u8) }
    }

    /// All 81 elements, ordered by [`RElement::index`].
    pub fn all() -> impl Iterator<Item = RElement> {
        (0..81).map(RElement::from_index)
    }

    /// Principal ideal generated by `self`.
    pub fn ideal(self) -> IdealTag {
        ideal_of(self)
    }
}

impl Add for RElement {
    type Output = RElement;
    fn add(self, rhs: RElement) -> RElement {
        RElement { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl Sub for RElement {
    type Output = RElement;
    fn sub(self, rhs: RElement) -> RElement {
        RElement { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl Neg for RElement {
    type Output = RElement;
    fn neg(self) -> RElement {
        RElement { a: -self.a, b: -self.b }
    }
}

impl Mul for RElement {
    type Output = RElement;
    fn mul(self, rhs: RElement) -> RElement {
        RElement { a: self.a * rhs.a, b: self.b * rhs.b }
    }
}

impl AddAssign for RElement {
    fn add_assign(&mut self, rhs: RElement) {
        *self = *self + rhs;
    }
}

impl fmt::Display for RElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl FromStr for RElement {
    type Err = Error;

    /// Parses the CRT text form `"a,b"`.
    fn from_str(s: &str) -> Result<RElement, Error> {
        let (a, b) = s.split_once(',').ok_or(Error::Parse("expected \"a,b\""))?;
        let parse = |t: &str| -> Result<Z9, Error> {
            t.trim().parse::<i64>().map(Z9::new).map_err(|_| Error::Parse("bad integer in R element"))
        };
        Ok(RElement { a: parse(a)?, b: parse(b)? })
    }
}

/// Product in `R`; componentwise on CRT coordinates.
pub fn r_mul(x: RElement, y: RElement) -> RElement {
    x * y
}

pub fn is_unit(x: RElement) -> bool {
    x.is_unit()
}

/// The nine ideals of `R`, named by a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealTag {
    /// `(1)`
    Whole,
    /// `(u+2)`, maximal
    UPlus2,
    /// `(u+3)`, maximal
    UPlus3,
    /// `(u-1)`
    UMinus1,
    /// `(3)`
    Three,
    /// `(u)`
    U,
    /// `(3u-3)`
    ThreeUMinus3,
    /// `(3u)`
    ThreeU,
    /// `(0)`
    Zero,
}

impl IdealTag {
    pub const ALL: [IdealTag; 9] = [
        IdealTag::Whole,
        IdealTag::UPlus2,
        IdealTag::UPlus3,
        IdealTag::UMinus1,
        IdealTag::Three,
        IdealTag::U,
        IdealTag::ThreeUMinus3,
        IdealTag::ThreeU,
        IdealTag::Zero,
    ];

    /// The named generator, converted from standard form.
    pub fn generator(self) -> RElement {
        let std = |s: i64, t: i64| RElement::from_standard(Z9::new(s), Z9::new(t));
        match self {
            IdealTag::Whole => std(1, 0),
            IdealTag::UPlus2 => std(2, 1),
            IdealTag::UPlus3 => std(3, 1),
            IdealTag::UMinus1 => std(-1, 1),
            IdealTag::Three => std(3, 0),
            IdealTag::U => std(0, 1),
            IdealTag::ThreeUMinus3 => std(-3, 3),
            IdealTag::ThreeU => std(0, 3),
            IdealTag::Zero => std(0, 0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            IdealTag::Whole => "(1)",
            IdealTag::UPlus2 => "(u+2)",
            IdealTag::UPlus3 => "(u+3)",
            IdealTag::UMinus1 => "(u-1)",
            IdealTag::Three => "(3)",
            IdealTag::U => "(u)",
            IdealTag::ThreeUMinus3 => "(3u-3)",
            IdealTag::ThreeU => "(3u)",
            IdealTag::Zero => "(0)",
        }
    }

    /// Element set of the ideal as an 81-bit mask over [`RElement::index`].
    pub fn elements(self) -> u128 {
        multiples_mask(self.generator())
    }
}

impl fmt::Display for IdealTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn multiples_mask(x: RElement) -> u128 {
    RElement::all().fold(0u128, |m, t| m | (1u128 << (t * x).index()))
}

/// Classifies the principal ideal `(x)` by matching its element set against
/// the nine ideals of `R`.
pub fn ideal_of(x: RElement) -> IdealTag {
    let mask = multiples_mask(x);
    IdealTag::ALL
        .into_iter()
        .find(|tag| tag.elements() == mask)
        .expect("every principal ideal of R is one of the nine")
}

/// Invertible 2x2 matrix `A` over `Z9` with `A*A^T = lambda*I`, `lambda` a unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrayMatrix {
    entries: [[Z9; 2]; 2],
    lambda: Z9,
}

impl GrayMatrix {
    /// Validates `entries` and derives `lambda`.
    pub fn new(entries: [[Z9; 2]; 2]) -> Result<GrayMatrix, Error> {
        let [[p, q], [r, s]] = entries;
        let det = p * s - q * r;
        if !det.is_unit() {
            return Err(Error::InvalidGrayMatrix("determinant is not a unit of Z9"));
        }
        let d00 = p * p + q * q;
        let d01 = p * r + q * s;
        let d11 = r * r + s * s;
        if !d01.is_zero() || d00 != d11 {
            return Err(Error::InvalidGrayMatrix("A*A^T is not a scalar matrix"));
        }
        if !d00.is_unit() {
            return Err(Error::InvalidGrayMatrix("A*A^T = lambda*I with lambda not a unit"));
        }
        Ok(GrayMatrix { entries, lambda: d00 })
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Result<GrayMatrix, Error> {
        GrayMatrix::new([[Z9::new(m[0][0]), Z9::new(m[0][1])], [Z9::new(m[1][0]), Z9::new(m[1][1])]])
    }

    pub fn entries(&self) -> [[Z9; 2]; 2] {
        self.entries
    }

    pub fn lambda(&self) -> Z9 {
        self.lambda
    }

    pub fn is_default(&self) -> bool {
        *self == GrayMatrix::default()
    }

    /// `(x.a, x.b) * A`.
    #[inline]
    pub fn apply(&self, x: RElement) -> (Z9, Z9) {
        let [[p, q], [r, s]] = self.entries;
        (x.a * p + x.b * r, x.a * q + x.b * s)
    }

    /// Hamming weight of the image of every element, indexed by [`RElement::index`].
    pub fn weight_table(&self) -> [u8; 81] {
        let mut t = [0u8; 81];
        for x in RElement::all() {
            t[x.index()] = lee_weight(x, self);
        }
        t
    }
}

impl Default for GrayMatrix {
    /// `[[1, 1], [-1, 1]]`, with `lambda = 2`.
    fn default() -> GrayMatrix {
        GrayMatrix {
            entries: [[Z9::ONE, Z9::ONE], [Z9::new(-1), Z9::ONE]],
            lambda: Z9::new(2),
        }
    }
}

pub fn gray_element(x: RElement, a: &GrayMatrix) -> (Z9, Z9) {
    a.apply(x)
}

/// Hamming weight of the Gray image of `x`.
pub fn lee_weight(x: RElement, a: &GrayMatrix) -> u8 {
    let (s, t) = a.apply(x);
    u8::from(!s.is_zero()) + u8::from(!t.is_zero())
}

/// Interleaved Gray image: positions `2i` and `2i+1` hold `v[i]*A`.
pub fn gray_vector(v: &[RElement], a: &GrayMatrix) -> Vec<Z9> {
    let mut out = Vec::with_capacity(2 * v.len());
    for &x in v {
        let (s, t) = a.apply(x);
        out.push(s);
        out.push(t);
    }
    out
}

pub fn lee_weight_vector(v: &[RElement], a: &GrayMatrix) -> usize {
    v.iter().map(|&x| lee_weight(x, a) as usize).sum()
}

pub fn hamming_weight(v: &[Z9]) -> usize {
    v.iter().filter(|z| !z.is_zero()).count()
}

/// Parses a comma-separated list of digits.
pub fn parse_z9_vector(s: &str) -> Result<Vec<Z9>, Error> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map(Z9::new).map_err(|_| Error::Parse("bad Z9 entry")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> RElement {
        RElement::from_ints(a, b)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(r_mul(r(1, 1), r(5, 7)), r(5, 7));
        assert_eq!(r_mul(r(1, 0), r(1, 0)), r(1, 0));
        assert_eq!(r_mul(r(2, 3), r(4, 5)), r(8, 6));
    }

    #[test]
    fn multiplication_agrees_with_standard_form_product() {
        // (s1 + u t1)(s2 + u t2) = s1 s2 + u (s1 t2 + t1 s2 + t1 t2)
        for x in RElement::all() {
            for y in RElement::all() {
                let (s1, t1) = x.to_standard();
                let (s2, t2) = y.to_standard();
                let expect = RElement::from_standard(s1 * s2, s1 * t2 + t1 * s2 + t1 * t2);
                assert_eq!(x * y, expect);
            }
        }
    }

    #[test]
    fn standard_form_round_trip() {
        for x in RElement::all() {
            let (s, t) = x.to_standard();
            assert_eq!(RElement::from_standard(s, t), x);
            assert_eq!(s, x.b);
            assert_eq!(t, x.a - x.b);
        }
    }

    #[test]
    fn unit_examples() {
        assert!(is_unit(r(1, 1)));
        assert!(!is_unit(r(1, 0)));
        assert!(is_unit(r(2, 4)));
        assert_eq!(RElement::all().filter(|x| x.is_unit()).count(), 36);
    }

    #[test]
    fn ideal_examples() {
        assert_eq!(ideal_of(RElement::ZERO), IdealTag::Zero);
        assert_eq!(ideal_of(RElement::U), IdealTag::U);
        assert_eq!(ideal_of(r(3, 3)), IdealTag::Three);
        assert_eq!(ideal_of(RElement::ONE), IdealTag::Whole);
    }

    #[test]
    fn nine_distinct_ideals_with_expected_sizes() {
        let mut masks: Vec<u128> = IdealTag::ALL.iter().map(|t| t.elements()).collect();
        let sizes: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
        assert_eq!(sizes, [81, 27, 27, 9, 9, 9, 3, 3, 1]);
        masks.sort();
        masks.dedup();
        assert_eq!(masks.len(), 9);
    }

    #[test]
    fn ideal_constant_on_associates() {
        for x in RElement::all() {
            for t in RElement::all().filter(|t| t.is_unit()) {
                assert_eq!(ideal_of(t * x), ideal_of(x));
            }
        }
    }

    #[test]
    fn ring_axioms_exhaustive() {
        let all: Vec<RElement> = RElement::all().collect();
        for &x in &all {
            for &y in &all {
                assert_eq!(x * y, y * x);
                for &z in &all {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn gray_examples() {
        let a = GrayMatrix::default();
        assert_eq!(a.lambda(), Z9::new(2));
        assert_eq!(gray_element(RElement::ZERO, &a), (Z9::ZERO, Z9::ZERO));
        assert_eq!(gray_element(RElement::U, &a), (Z9::ONE, Z9::ONE));
        assert_eq!(gray_element(RElement::ONE, &a), (Z9::ZERO, Z9::new(2)));
        assert_eq!(lee_weight(RElement::ZERO, &a), 0);
        assert_eq!(lee_weight(RElement::U, &a), 2);
        assert_eq!(lee_weight(RElement::ONE, &a), 1);
    }

    #[test]
    fn gray_vector_examples() {
        let a = GrayMatrix::default();
        let z = |v: &[i64]| v.iter().map(|&x| Z9::new(x)).collect::<Vec<_>>();
        assert_eq!(gray_vector(&[RElement::ZERO; 3], &a), z(&[0; 6]));
        assert_eq!(gray_vector(&[RElement::U, RElement::ZERO], &a), z(&[1, 1, 0, 0]));
        assert_eq!(gray_vector(&[RElement::ONE, RElement::U], &a), z(&[0, 2, 1, 1]));
    }

    #[test]
    fn gray_map_is_linear_and_distance_preserving() {
        let a = GrayMatrix::default();
        for x in RElement::all() {
            for y in RElement::all() {
                let (p, q) = a.apply(x + y);
                let (p1, q1) = a.apply(x);
                let (p2, q2) = a.apply(y);
                assert_eq!((p, q), (p1 + p2, q1 + q2));
                let gx = gray_vector(&[x], &a);
                let gy = gray_vector(&[y], &a);
                let dist = gx.iter().zip(&gy).filter(|(s, t)| s != t).count();
                assert_eq!(lee_weight(x - y, &a) as usize, dist);
            }
        }
    }

    #[test]
    fn gray_matrix_validation() {
        assert!(GrayMatrix::from_ints([[1, 0], [0, 1]]).is_ok());
        // singular
        assert!(GrayMatrix::from_ints([[1, 1], [1, 1]]).is_err());
        // invertible but A*A^T not scalar
        assert!(GrayMatrix::from_ints([[1, 1], [0, 1]]).is_err());
        // A*A^T = 0
        assert!(GrayMatrix::from_ints([[3, 0], [0, 3]]).is_err());
    }

    #[test]
    fn text_forms() {
        assert_eq!("2,7".parse::<RElement>().unwrap(), r(2, 7));
        assert_eq!(alloc::format!("{}", r(4, 0)), "4,0");
        assert_eq!(parse_z9_vector("1,2,10").unwrap(), [Z9::ONE, Z9::new(2), Z9::ONE]);
        assert!("12".parse::<RElement>().is_err());
    }
}
