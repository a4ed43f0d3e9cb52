//! Factorization of `X^n - 1` over `Z9` and the associated CRT idempotents.
//!
//! `X^n - 1` is squarefree over `F3` when `gcd(n, 3) = 1`. It is split there by
//! distinct-degree factorization followed by Cantor-Zassenhaus equal-degree
//! splitting, and each factor is then Hensel-lifted once, from modulus 3 to 9.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Error;
use crate::poly::PolyZ9;
use crate::ring::Z9;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_0009;

/// Polynomials over `F3`, constant term first, no trailing zeros.
pub(crate) mod f3 {
    use alloc::vec;
    use alloc::vec::Vec;

    pub type P = Vec<u8>;

    pub fn trim(mut v: P) -> P {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn deg(a: &[u8]) -> Option<usize> {
        a.len().checked_sub(1)
    }

    pub fn sub(a: &[u8], b: &[u8]) -> P {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + 3 - b.get(i).unwrap_or(&0)) % 3).collect())
    }

    pub fn mul(a: &[u8], b: &[u8]) -> P {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u8; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % 3;
            }
        }
        trim(out)
    }

    pub fn scale(a: &[u8], c: u8) -> P {
        trim(a.iter().map(|&x| x * c % 3).collect())
    }

    /// Inverse in `F3`: both nonzero elements are self-inverse.
    fn inv(c: u8) -> u8 {
        debug_assert!(!c.is_multiple_of(3));
        c
    }

    pub fn div_rem(a: &[u8], b: &[u8]) -> (P, P) {
        let db = deg(b).expect("division by zero");
        let lead_inv = inv(b[db]);
        let mut r = a.to_vec();
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![0u8; r.len() - db];
        for i in (db..r.len()).rev() {
            let c = r[i] * lead_inv % 3;
            if c == 0 {
                continue;
            }
            q[i - db] = c;
            for (j, &y) in b.iter().enumerate() {
                r[i - db + j] = (r[i - db + j] + 3 * 3 - c * y) % 3;
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(a: &[u8], b: &[u8]) -> P {
        div_rem(a, b).1
    }

    pub fn monic(a: &[u8]) -> P {
        match a.last() {
            Some(&l) => scale(a, inv(l)),
            None => Vec::new(),
        }
    }

    pub fn gcd(a: &[u8], b: &[u8]) -> P {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while !y.is_empty() {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        monic(&x)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`, `g` monic.
    pub fn ext_gcd(a: &[u8], b: &[u8]) -> (P, P, P) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u8], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u8]);
        while !r1.is_empty() {
            let (q, r) = div_rem(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            let t2 = sub(&t0, &mul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let l = *r0.last().expect("gcd of zero polynomials");
        (scale(&r0, inv(l)), scale(&s0, inv(l)), scale(&t0, inv(l)))
    }

    pub fn mul_mod(a: &[u8], b: &[u8], m: &[u8]) -> P {
        rem(&mul(a, b), m)
    }

    pub fn cube_mod(a: &[u8], m: &[u8]) -> P {
        mul_mod(&mul_mod(a, a, m), a, m)
    }

    pub fn x() -> P {
        vec![0, 1]
    }

    /// Irreducibility by trial division against every monic polynomial of degree
    /// up to half the degree. Only meant for small degrees.
    #[cfg(test)]
    pub fn is_irreducible_trial(f: &[u8]) -> bool {
        let d = match deg(f) {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        for k in 1..=d / 2 {
            let count = 3usize.pow(k as u32);
            for code in 0..count {
                let mut g = vec![0u8; k + 1];
                let mut c = code;
                for slot in g.iter_mut().take(k) {
                    *slot = (c % 3) as u8;
                    c /= 3;
                }
                g[k] = 1;
                if rem(f, &g).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// `X^n - 1` over `F3`.
fn x_n_minus_1_f3(n: usize) -> f3::P {
    let mut v = vec![0u8; n + 1];
    v[0] = 2;
    v[n] = 1;
    v
}

/// Distinct-degree factorization of a squarefree monic polynomial over `F3`.
fn distinct_degree(f: &[u8]) -> Vec<(f3::P, usize)> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    let mut h = f3::rem(&f3::x(), &rest);
    let mut d = 1;
    while f3::deg(&rest).unwrap_or(0) >= 2 * d {
        h = f3::cube_mod(&h, &rest);
        let g = f3::gcd(&rest, &f3::sub(&h, &f3::x()));
        if f3::deg(&g).unwrap_or(0) > 0 {
            rest = f3::div_rem(&rest, &g).0;
            h = f3::rem(&h, &rest);
            out.push((g, d));
        }
        d += 1;
    }
    if f3::deg(&rest).unwrap_or(0) > 0 {
        let dr = f3::deg(&rest).unwrap();
        out.push((rest, dr));
    }
    out
}

/// Splits a product of distinct monic irreducibles of common degree `d`.
fn equal_degree(f: f3::P, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<f3::P>) {
    let df = f3::deg(&f).expect("nonzero");
    if df == d {
        out.push(f);
        return;
    }
    loop {
        let a: f3::P = f3::trim((0..df).map(|_| (rng.next_u32() % 3) as u8).collect());
        if f3::deg(&a).unwrap_or(0) == 0 {
            continue;
        }
        let g = f3::gcd(&a, &f);
        let dg = f3::deg(&g).unwrap_or(0);
        if dg > 0 && dg < df {
            let other = f3::div_rem(&f, &g).0;
            equal_degree(g, d, rng, out);
            equal_degree(other, d, rng, out);
            return;
        }
        // a^((3^d - 1)/2) = prod_{i<d} a^(3^i)
        let mut t = f3::rem(&a, &f);
        let mut acc = t.clone();
        for _ in 1..d {
            t = f3::cube_mod(&t, &f);
            acc = f3::mul_mod(&acc, &t, &f);
        }
        let g = f3::gcd(&f3::sub(&acc, &[1]), &f);
        let dg = f3::deg(&g).unwrap_or(0);
        if dg > 0 && dg < df {
            let other = f3::div_rem(&f, &g).0;
            equal_degree(g, d, rng, out);
            equal_degree(other, d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors of `X^n - 1` over `F3`, sorted.
pub fn factor_mod3(n: usize, seed: u64) -> Result<Vec<Vec<u8>>, Error> {
    if n == 0 || n.is_multiple_of(3) {
        return Err(Error::LengthDivisibleByThree(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&x_n_minus_1_f3(n)) {
        equal_degree(g, d, &mut rng, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Lifts a monic factor `g` of `X^n - 1` over `F3` to the unique monic factor
/// of `X^n - 1` over `Z9` that reduces to it.
pub fn hensel_lift(g: &[u8], n: usize) -> PolyZ9 {
    let target = PolyZ9::x_n_minus_1(n);
    let big_g = PolyZ9::from_mod3(g);
    let (big_h, r) = target.div_rem(&big_g);
    if r.is_zero() {
        return big_g;
    }
    // X^n - 1 - G*H = r, with r = 0 mod 3
    let e: f3::P = f3::trim(r.coeffs().iter().map(|c| c.value() / 3 % 3).collect());
    let h3 = big_h.mod3();
    let (one, _s, t) = f3::ext_gcd(g, &h3);
    debug_assert_eq!(one, [1]);
    let delta = f3::rem(&f3::mul(&t, &e), g);
    let lifted = &big_g + &PolyZ9::from_mod3(&delta).scale(Z9::THREE);
    debug_assert!(lifted.divides(&target));
    lifted
}

/// Monic basic irreducible factors of `X^n - 1` over `Z9`, sorted by degree and
/// then by their constant-first coefficient lists.
pub fn factor_xn_minus_1(n: usize) -> Result<Vec<PolyZ9>, Error> {
    factor_xn_minus_1_seeded(n, DEFAULT_SEED)
}

pub fn factor_xn_minus_1_seeded(n: usize, seed: u64) -> Result<Vec<PolyZ9>, Error> {
    let mut lifted: Vec<PolyZ9> = factor_mod3(n, seed)?.iter().map(|g| hensel_lift(g, n)).collect();
    lifted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    let product = lifted.iter().fold(PolyZ9::one(), |acc, f| &acc * f);
    assert_eq!(product, PolyZ9::x_n_minus_1(n), "lifted factors must multiply to X^n - 1");
    Ok(lifted)
}

/// Orthogonal idempotents `e_i` of `Z9[X]/(X^n - 1)` with `e_i = 1 mod f_i` and
/// `e_i = 0 mod f_j` for `j != i`.
pub fn crt_idempotents(factors: &[PolyZ9], n: usize) -> Result<Vec<PolyZ9>, Error> {
    let target = PolyZ9::x_n_minus_1(n);
    let product = factors.iter().fold(PolyZ9::one(), |acc, f| &acc * f);
    if product != target {
        return Err(Error::InvalidTriple("factors do not multiply to X^n - 1"));
    }
    let mut out = Vec::with_capacity(factors.len());
    for f in factors {
        let cofactor = target.exact_div(f).ok_or(Error::FactorsNotCoprime)?;
        let (g, s, t) = f3::ext_gcd(&f.mod3(), &cofactor.mod3());
        if g != [1] {
            return Err(Error::FactorsNotCoprime);
        }
        let (s, t) = (PolyZ9::from_mod3(&s), PolyZ9::from_mod3(&t));
        // s*f + t*F = 1 + 3w; multiplying by (2 - r) clears the error mod 9
        let r = &(&s * f) + &(&t * &cofactor);
        let fix = &PolyZ9::constant(Z9::new(2)) - &r;
        let e = (&(&t * &fix) * &cofactor).with_modulus(n);
        if &e * &e != e {
            return Err(Error::NotIdempotent(alloc::format!("{e}")));
        }
        out.push(e);
    }
    Ok(out)
}

/// Alias matching the extended-Euclid construction of the CRT idempotents.
pub fn ext_euclid_crt_idempotents(factors: &[PolyZ9], n: usize) -> Result<Vec<PolyZ9>, Error> {
    crt_idempotents(factors, n)
}
