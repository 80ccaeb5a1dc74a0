//! Primitive integer polynomials: the arithmetic behind `Poly`.
//!
//! Vectors are lowest degree first with no trailing zeros. "Primitive"
//! means the coefficient gcd is one and the leading coefficient is positive.

use std::sync::OnceLock;

use num::integer::Integer;
use num::{BigInt, One, Signed, ToPrimitive, Zero};

pub(super) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Content of an integer vector, signed like its leading coefficient.
pub(super) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for n in v.iter().rev() {
        if !n.is_zero() {
            g = g.gcd(n);
            if g.is_one() {
                break;
            }
        }
    }
    if v.last().is_some_and(Signed::is_negative) {
        -g
    } else {
        g
    }
}

/// Splits a nonzero integer vector into its content and primitive part.
pub(super) fn split(mut v: Vec<BigInt>) -> (BigInt, Vec<BigInt>) {
    trim(&mut v);
    let g = content(&v);
    if !g.is_one() {
        for n in v.iter_mut() {
            *n /= &g;
        }
    }
    (g, v)
}

pub(super) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() == 1 {
        return b.iter().map(|y| &a[0] * y).collect();
    }
    if b.len() == 1 {
        return a.iter().map(|x| x * &b[0]).collect();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `a / b` when `b` is primitive and divides `a` in `Q[x]`; `None` if it
/// does not divide.
pub(super) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.len() == 1 {
        return if b[0].is_one() { Some(a.to_vec()) } else { a.iter().map(|x| exact_quot(x, &b[0])).collect() };
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let c = exact_quot(top, lb)?;
        for (j, y) in b.iter().enumerate() {
            r[k + j] -= &c * y;
        }
        q[k] = c;
    }
    if r[..db].iter().all(Zero::is_zero) {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}

fn exact_quot(x: &BigInt, d: &BigInt) -> Option<BigInt> {
    let (q, r) = x.div_rem(d);
    r.is_zero().then_some(q)
}

/// Pseudo-remainder of `a` by `b`, up to a nonzero constant.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &lr * y;
        }
        trim(&mut r);
        if !r.is_empty() {
            r = split(r).1;
        }
    }
    r
}

fn prs_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = prem(&a, &b);
        a = b;
        b = r;
    }
    split(a).1
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below `2^62`.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(512);
        let mut n = (1u64 << 62) - 1;
        while out.len() < 512 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn residue(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("reduced below p")
}

fn reduce(v: &[BigInt], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = v.iter().map(|n| residue(n, p)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Monic gcd over `Z/p`.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = powmod(*b.last().expect("nonempty"), p - 2, p);
        let db = b.len() - 1;
        while a.len() > db {
            let da = a.len() - 1;
            let c = mulmod(a[da], inv, p);
            for (j, &y) in b.iter().enumerate() {
                let t = mulmod(c, y, p);
                let slot = &mut a[da - db + j];
                *slot = if *slot >= t { *slot - t } else { *slot + p - t };
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = powmod(*a.last().expect("gcd of nonzero polynomials"), p - 2, p);
    a.iter().map(|&c| mulmod(c, inv, p)).collect()
}

/// Gcd of two primitive polynomials, as a primitive polynomial.
///
/// Modular images scaled by `gcd(lc a, lc b)` are combined by CRT until the
/// symmetric lift stops changing and divides both inputs.
pub(super) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    if a == b {
        return a.to_vec();
    }
    let (la, lb) = (&a[a.len() - 1], &b[b.len() - 1]);
    let gamma = la.gcd(lb);
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last_lift: Option<Vec<BigInt>> = None;
    for &p in primes() {
        if residue(la, p) == 0 || residue(lb, p) == 0 {
            continue;
        }
        let g = gcd_mod(reduce(a, p), reduce(b, p), p);
        if g.len() == 1 {
            return vec![BigInt::one()];
        }
        if !acc.is_empty() && g.len() > acc.len() {
            continue; // unlucky prime
        }
        let gp = residue(&gamma, p);
        let image: Vec<u64> = g.iter().map(|&c| mulmod(c, gp, p)).collect();
        if acc.is_empty() || g.len() < acc.len() {
            acc = image.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p);
            last_lift = None;
            continue;
        }
        // CRT: x ≡ acc (mod M), x ≡ image (mod p).
        let m_inv = powmod(residue(&modulus, p), p - 2, p);
        for (x, &r) in acc.iter_mut().zip(&image) {
            let diff = (r + p - residue(x, p)) % p;
            let t = mulmod(diff, m_inv, p);
            *x += &modulus * BigInt::from(t);
        }
        modulus *= BigInt::from(p);
        let half = &modulus >> 1usize;
        let lift: Vec<BigInt> = acc.iter().map(|x| if x > &half { x - &modulus } else { x.clone() }).collect();
        if last_lift.as_ref() == Some(&lift) {
            let cand = split(lift.clone()).1;
            if div_exact(a, &cand).is_some() && div_exact(b, &cand).is_some() {
                return cand;
            }
        }
        last_lift = Some(lift);
    }
    prs_gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn modular_gcd_matches_prs() {
        let f = v(&[7, -3, 0, 2]);
        let g = v(&[-1, 5, 12]);
        let h = v(&[3, -11, 4]);
        let a = mul(&mul(&f, &h), &h);
        let b = mul(&g, &h);
        assert_eq!(gcd(&a, &b), h);
        assert_eq!(prs_gcd(&a, &b), h);
        assert_eq!(gcd(&f, &g), v(&[1]));
        assert_eq!(div_exact(&a, &h), Some(mul(&f, &h)));
        assert_eq!(div_exact(&f, &h), None);
    }

    #[test]
    fn primes_are_prime() {
        assert!(is_prime(2_305_843_009_213_693_951));
        assert!(!is_prime(2_305_843_009_213_693_953));
        assert!(primes().iter().all(|&p| p < 1 << 62));
    }
}
