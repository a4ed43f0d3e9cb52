//! Polynomials over `Z9`, optionally reduced modulo `X^n - 1`, and their CRT
//! pairs over `R`.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::ring::{RElement, Z9};
use crate::util::{gcd, is_prime};

/// Polynomial over `Z9`, constant term first.
///
/// With `modulus = Some(n)` the polynomial lives in `Z9[X]/(X^n - 1)` and every
/// operation keeps the degree below `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyZ9 {
    coeffs: Vec<Z9>,
    modulus: Option<usize>,
}

impl PolyZ9 {
    pub fn new(coeffs: Vec<Z9>) -> PolyZ9 {
        let mut p = PolyZ9 { coeffs, modulus: None };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> PolyZ9 {
        PolyZ9::new(coeffs.iter().map(|&c| Z9::new(c)).collect())
    }

    pub fn zero() -> PolyZ9 {
        PolyZ9::new(Vec::new())
    }

    pub fn constant(c: Z9) -> PolyZ9 {
        PolyZ9::new(vec![c])
    }

    pub fn one() -> PolyZ9 {
        PolyZ9::constant(Z9::ONE)
    }

    /// `c * X^k`
    pub fn monomial(c: Z9, k: usize) -> PolyZ9 {
        let mut v = vec![Z9::ZERO; k + 1];
        v[k] = c;
        PolyZ9::new(v)
    }

    /// `X^n - 1` as a plain polynomial.
    pub fn x_n_minus_1(n: usize) -> PolyZ9 {
        let mut v = vec![Z9::ZERO; n + 1];
        v[0] = Z9::new(-1);
        v[n] = Z9::ONE;
        PolyZ9::new(v)
    }

    /// Reinterprets `self` in `Z9[X]/(X^n - 1)`.
    pub fn with_modulus(mut self, n: usize) -> PolyZ9 {
        assert!(n > 0, "modulus must be positive");
        self.modulus = Some(n);
        self.reduce();
        self
    }

    /// Forgets the modulus, keeping the reduced representative.
    pub fn without_modulus(mut self) -> PolyZ9 {
        self.modulus = None;
        self
    }

    pub fn modulus(&self) -> Option<usize> {
        self.modulus
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    fn reduce(&mut self) {
        if let Some(n) = self.modulus {
            if self.coeffs.len() > n {
                let mut folded = vec![Z9::ZERO; n];
                for (i, &c) in self.coeffs.iter().enumerate() {
                    folded[i % n] += c;
                }
                self.coeffs = folded;
            }
        }
        self.trim();
    }

    pub fn coeffs(&self) -> &[Z9] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Z9 {
        self.coeffs.get(i).copied().unwrap_or(Z9::ZERO)
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    pub fn to_dense(&self, len: usize) -> Vec<Z9> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), Z9::ZERO);
        v.truncate(len);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Z9 {
        self.coeffs.last().copied().unwrap_or(Z9::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Z9::ONE
    }

    pub fn scale(&self, c: Z9) -> PolyZ9 {
        let mut p = PolyZ9 { coeffs: self.coeffs.iter().map(|&x| x * c).collect(), modulus: self.modulus };
        p.trim();
        p
    }

    pub fn eval(&self, x: Z9) -> Z9 {
        self.coeffs.iter().rev().fold(Z9::ZERO, |acc, &c| acc * x + c)
    }

    /// Multiplies by the inverse of the leading coefficient.
    ///
    /// Returns `None` if the leading coefficient is not a unit.
    pub fn monic(&self) -> Option<PolyZ9> {
        if self.is_zero() {
            return None;
        }
        self.leading().inverse().map(|inv| self.scale(inv))
    }

    /// Division with remainder by a polynomial whose leading coefficient is a unit.
    pub fn div_rem(&self, divisor: &PolyZ9) -> (PolyZ9, PolyZ9) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = divisor.leading().inverse().expect("divisor leading coefficient must be a unit");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (PolyZ9::zero(), PolyZ9::new(rem));
        }
        let mut quot = vec![Z9::ZERO; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i] * inv;
            if c.is_zero() {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= c * d;
            }
        }
        rem.truncate(dd);
        (PolyZ9::new(quot), PolyZ9::new(rem))
    }

    pub fn rem(&self, divisor: &PolyZ9) -> PolyZ9 {
        self.div_rem(divisor).1
    }

    /// Exact quotient; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &PolyZ9) -> Option<PolyZ9> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &PolyZ9) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic normalization of `X^deg(f) * f(1/X)`.
    pub fn reciprocal(&self) -> Result<PolyZ9, Error> {
        if !self.coeff(0).is_unit() {
            return Err(Error::NonUnitConstantTerm);
        }
        let rev: Vec<Z9> = self.coeffs.iter().rev().copied().collect();
        let inv = self.coeff(0).inverse().expect("unit");
        Ok(PolyZ9::new(rev).scale(inv))
    }

    /// Moves the coefficient at `X^i` to `X^(a*i mod n)`.
    pub fn multiplier(&self, a: i64) -> Result<PolyZ9, Error> {
        let n = self.modulus.expect("multiplier needs a modulus");
        let a_red = a.rem_euclid(n as i64) as usize;
        if gcd(a_red as u64, n as u64) != 1 && n > 1 {
            return Err(Error::NotCoprime { a, n });
        }
        let mut out = vec![Z9::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(i * a_red) % n] += c;
        }
        Ok(PolyZ9::new(out).with_modulus(n))
    }

    /// Coefficients reduced modulo 3, trimmed.
    pub fn mod3(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.coeffs.iter().map(|c| c.value() % 3).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// Lifts a polynomial over `F3` (coefficients `0..3`) into `Z9[X]`.
    pub fn from_mod3(v: &[u8]) -> PolyZ9 {
        PolyZ9::new(v.iter().map(|&c| Z9::from_u8(c)).collect())
    }

    /// Human-readable form, highest degree first.
    pub fn pretty(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !s.is_empty() {
                s.push('+');
            }
            match (i, c.value()) {
                (0, v) => write!(s, "{v}").unwrap(),
                (1, 1) => s.push('X'),
                (1, v) => write!(s, "{v}X").unwrap(),
                (_, 1) => write!(s, "X^{i}").unwrap(),
                (_, v) => write!(s, "{v}X^{i}").unwrap(),
            }
        }
        s
    }

    fn combine_modulus(a: Option<usize>, b: Option<usize>) -> Option<usize> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "polynomials live in different quotient rings");
                Some(x)
            }
            (x, None) => x,
            (None, y) => y,
        }
    }

    fn finish(coeffs: Vec<Z9>, modulus: Option<usize>) -> PolyZ9 {
        let mut p = PolyZ9 { coeffs, modulus };
        p.reduce();
        p
    }
}

impl Add for &PolyZ9 {
    type Output = PolyZ9;
    fn add(self, rhs: &PolyZ9) -> PolyZ9 {
        let m = PolyZ9::combine_modulus(self.modulus, rhs.modulus);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        PolyZ9::finish(v, m)
    }
}

impl Sub for &PolyZ9 {
    type Output = PolyZ9;
    fn sub(self, rhs: &PolyZ9) -> PolyZ9 {
        let m = PolyZ9::combine_modulus(self.modulus, rhs.modulus);
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        PolyZ9::finish(v, m)
    }
}

impl Neg for &PolyZ9 {
    type Output = PolyZ9;
    fn neg(self) -> PolyZ9 {
        PolyZ9::finish(self.coeffs.iter().map(|&c| -c).collect(), self.modulus)
    }
}

impl Mul for &PolyZ9 {
    type Output = PolyZ9;
    fn mul(self, rhs: &PolyZ9) -> PolyZ9 {
        let m = PolyZ9::combine_modulus(self.modulus, rhs.modulus);
        if self.is_zero() || rhs.is_zero() {
            return PolyZ9 { coeffs: Vec::new(), modulus: m };
        }
        let len = match m {
            Some(n) => n,
            None => self.coeffs.len() + rhs.coeffs.len() - 1,
        };
        // accumulate in u32 and reduce once per output coefficient
        let mut acc = vec![0u32; len];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in rhs.coeffs.iter().enumerate() {
                acc[(i + j) % len] += u32::from(x.value()) * u32::from(y.value());
            }
        }
        let v = acc.into_iter().map(|c| Z9::from_u8((c % 9) as u8)).collect();
        PolyZ9::finish(v, m)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(PolyZ9, Add, add);
forward_owned!(PolyZ9, Sub, sub);
forward_owned!(PolyZ9, Mul, mul);

impl fmt::Display for PolyZ9 {
    /// Constant-first coefficient list, e.g. `[8,2,1,8,3,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for PolyZ9 {
    type Err = Error;

    fn from_str(s: &str) -> Result<PolyZ9, Error> {
        crate::ring::parse_z9_vector(s).map(PolyZ9::new)
    }
}

/// Polynomial over `R` as a CRT pair: `u*a(X) + (1 - u)*b(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyR {
    pub a: PolyZ9,
    pub b: PolyZ9,
}

impl PolyR {
    pub fn new(a: PolyZ9, b: PolyZ9) -> PolyR {
        PolyR { a, b }
    }

    /// The same polynomial in both components, i.e. a polynomial with `Z9` coefficients.
    pub fn diagonal(p: PolyZ9) -> PolyR {
        PolyR { a: p.clone(), b: p }
    }

    pub fn from_elements(coeffs: &[RElement]) -> PolyR {
        PolyR {
            a: PolyZ9::new(coeffs.iter().map(|c| c.a).collect()),
            b: PolyZ9::new(coeffs.iter().map(|c| c.b).collect()),
        }
    }

    pub fn with_modulus(self, n: usize) -> PolyR {
        PolyR { a: self.a.with_modulus(n), b: self.b.with_modulus(n) }
    }

    pub fn coeff(&self, i: usize) -> RElement {
        RElement::new(self.a.coeff(i), self.b.coeff(i))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn multiplier(&self, m: i64) -> Result<PolyR, Error> {
        Ok(PolyR { a: self.a.multiplier(m)?, b: self.b.multiplier(m)? })
    }

    pub fn is_idempotent(&self) -> bool {
        (&self.a * &self.a) == self.a && (&self.b * &self.b) == self.b
    }
}

impl Add for &PolyR {
    type Output = PolyR;
    fn add(self, rhs: &PolyR) -> PolyR {
        PolyR { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Sub for &PolyR {
    type Output = PolyR;
    fn sub(self, rhs: &PolyR) -> PolyR {
        PolyR { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Mul for &PolyR {
    type Output = PolyR;
    fn mul(self, rhs: &PolyR) -> PolyR {
        PolyR { a: &self.a * &rhs.a, b: &self.b * &rhs.b }
    }
}

forward_owned!(PolyR, Add, add);
forward_owned!(PolyR, Sub, sub);
forward_owned!(PolyR, Mul, mul);

impl fmt::Display for PolyR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u*{} + (1-u)*{}", self.a, self.b)
    }
}

/// Quadratic residues and non-residues modulo a prime `p = +-1 (mod 12)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QrContext {
    pub p: u64,
    pub residues: Vec<u64>,
    pub non_residues: Vec<u64>,
}

impl QrContext {
    pub fn new(p: u64) -> Result<QrContext, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p % 12 != 1 && p % 12 != 11 {
            return Err(Error::NotPlusMinusOneMod12(p));
        }
        let mut is_res = vec![false; p as usize];
        for i in 1..p {
            is_res[((i * i) % p) as usize] = true;
        }
        let residues = (1..p).filter(|&i| is_res[i as usize]).collect();
        let non_residues = (1..p).filter(|&i| !is_res[i as usize]).collect();
        Ok(QrContext { p, residues, non_residues })
    }

    pub fn is_residue(&self, a: u64) -> bool {
        self.residues.binary_search(&(a % self.p)).is_ok()
    }

    fn indicator(&self, set: &[u64]) -> PolyZ9 {
        let mut v = vec![Z9::ZERO; self.p as usize];
        for &i in set {
            v[i as usize] = Z9::ONE;
        }
        PolyZ9::new(v).with_modulus(self.p as usize)
    }

    /// `Q(X)`, the sum of `X^i` over the residues.
    pub fn q_poly(&self) -> PolyZ9 {
        self.indicator(&self.residues)
    }

    /// `N(X)`, the sum of `X^i` over the non-residues.
    pub fn n_poly(&self) -> PolyZ9 {
        self.indicator(&self.non_residues)
    }

    /// `J(X) = 1 + Q(X) + N(X)`.
    pub fn j_poly(&self) -> PolyZ9 {
        PolyZ9::new(vec![Z9::ONE; self.p as usize]).with_modulus(self.p as usize)
    }

    /// `c + q*Q(X) + m*N(X)` in `Z9[X]/(X^p - 1)`.
    pub fn combination(&self, c: Z9, q: Z9, m: Z9) -> PolyZ9 {
        let one = PolyZ9::constant(c).with_modulus(self.p as usize);
        &(&one + &self.q_poly().scale(q)) + &self.n_poly().scale(m)
    }
}

/// `(Q(X), N(X), J(X))` for a prime `p = +-1 (mod 12)`.
pub fn build_qnj(p: u64) -> Result<(PolyZ9, PolyZ9, PolyZ9), Error> {
    let ctx = QrContext::new(p)?;
    Ok((ctx.q_poly(), ctx.n_poly(), ctx.j_poly()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> PolyZ9 {
        PolyZ9::from_ints(c)
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[-1, 1]).reciprocal().unwrap(), p(&[-1, 1]));
        let f = p(&[-1, 2, 1, 8, 3, 1]);
        let f_star = p(&[-1, -3, 1, -1, -2, 1]);
        assert_eq!(f.reciprocal().unwrap(), f_star);
        assert_eq!(f_star.reciprocal().unwrap(), f);
        assert_eq!(p(&[3, 1]).reciprocal(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn qnj_for_eleven() {
        let (q, n, j) = build_qnj(11).unwrap();
        assert_eq!(q, p(&[0, 1, 0, 1, 1, 1, 0, 0, 0, 1]).with_modulus(11));
        assert_eq!(n, p(&[0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1]).with_modulus(11));
        assert!(j.coeffs().iter().all(|&c| c == Z9::ONE) && j.coeffs().len() == 11);
        assert_eq!(build_qnj(7), Err(Error::NotPlusMinusOneMod12(7)));
        assert_eq!(build_qnj(35), Err(Error::NotPrime(35)));
    }

    #[test]
    fn qr_context_sets() {
        for prime in [11u64, 13, 23, 37, 47] {
            let ctx = QrContext::new(prime).unwrap();
            let half = ((prime - 1) / 2) as usize;
            assert_eq!(ctx.residues.len(), half);
            assert_eq!(ctx.non_residues.len(), half);
            for &x in &ctx.residues {
                for &y in &ctx.residues {
                    assert!(ctx.is_residue(x * y % prime));
                }
            }
        }
    }

    #[test]
    fn multiplier_examples() {
        let (q, n, _) = build_qnj(11).unwrap();
        assert_eq!(q.multiplier(1).unwrap(), q);
        assert_eq!(q.multiplier(3).unwrap(), q);
        assert_eq!(q.multiplier(2).unwrap(), n);
        assert_eq!(q.multiplier(-1).unwrap(), n);
        assert_eq!(q.multiplier(11), Err(Error::NotCoprime { a: 11, n: 11 }));
    }

    #[test]
    fn division_and_modulus() {
        let x11 = PolyZ9::x_n_minus_1(11);
        let (q, r) = x11.div_rem(&p(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, PolyZ9::new(vec![Z9::ONE; 11]));
        let x = PolyZ9::monomial(Z9::ONE, 1).with_modulus(3);
        assert_eq!(&(&x * &x) * &x, PolyZ9::one().with_modulus(3));
    }

    #[test]
    fn text_forms() {
        let f: PolyZ9 = "[8,2,1,8,3,1]".parse().unwrap();
        assert_eq!(alloc::format!("{f}"), "[8,2,1,8,3,1]");
        assert_eq!(f.pretty(), "X^5+3X^4+8X^3+X^2+2X+8");
    }

    fn poly_strategy(n: usize) -> impl Strategy<Value = PolyZ9> {
        proptest::collection::vec(0i64..9, n).prop_map(move |v| PolyZ9::from_ints(&v).with_modulus(n))
    }

    proptest! {
        #[test]
        fn multiplier_is_ring_automorphism((f, g, a) in (poly_strategy(10), poly_strategy(10), prop::sample::select(vec![1i64, 3, 7, 9, -1]))) {
            let lhs = (&f * &g).multiplier(a).unwrap();
            let rhs = &f.multiplier(a).unwrap() * &g.multiplier(a).unwrap();
            prop_assert_eq!(lhs, rhs);
            let sum = (&f + &g).multiplier(a).unwrap();
            prop_assert_eq!(sum, &f.multiplier(a).unwrap() + &g.multiplier(a).unwrap());
        }

        #[test]
        fn reciprocal_is_multiplicative(f in proptest::collection::vec(0i64..9, 1..6), g in proptest::collection::vec(0i64..9, 1..6)) {
            let mut f = f; let mut g = g;
            f[0] = 1 + 3 * (f[0] % 3).min(1); g[0] = 2;
            f.push(1); g.push(1);
            let (f, g) = (PolyZ9::from_ints(&f), PolyZ9::from_ints(&g));
            let lhs = (&f * &g).reciprocal().unwrap();
            let rhs = &f.reciprocal().unwrap() * &g.reciprocal().unwrap();
            prop_assert_eq!(lhs, rhs.monic().unwrap());
            prop_assert_eq!(f.reciprocal().unwrap().reciprocal().unwrap(), f);
        }
    }
}
