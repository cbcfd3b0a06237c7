//! Multi-modular gcd in `Z[x]` (small-prime images, CRT lifting, trial
//! division). Word-sized arithmetic modulo 62-bit primes.

use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive};

use super::UniPoly;
use crate::arith::Integer;

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[cfg(test)]
#[inline]
fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &b in &BASES {
        let mut x = powmod(b, d, n);
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

/// Deterministic sequence of primes just below `2^62`, descending.
pub(crate) struct Primes {
    next: u64,
}

impl Primes {
    pub(crate) fn new() -> Self {
        Primes { next: (1u64 << 62) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 3 {
            let c = self.next;
            self.next -= 2;
            if is_prime(c) {
                return Some(c);
            }
        }
        None
    }
}

pub(crate) fn reduce(n: &Integer, p: u64) -> u64 {
    let r = n.mod_floor(&Integer::from(p));
    r.to_u64().expect("residue fits a word")
}

fn reduce_poly(a: &UniPoly, p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.coeffs().iter().map(|c| reduce(c, p)).collect();
    trim(&mut v);
    v
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` by `b` modulo `p`, `b` nonzero.
fn rem_mod(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    while a.len() > db {
        let top = a.len() - 1;
        let q = mulmod(a[top], inv, p);
        if q != 0 {
            let off = top - db;
            for (i, &bc) in b.iter().enumerate() {
                a[off + i] = submod(a[off + i], mulmod(q, bc, p), p);
            }
        }
        a.pop();
        trim(&mut a);
    }
    a
}

/// Monic gcd modulo `p`.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let r = rem_mod(a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lc) = a.last() {
        let inv = invmod(lc, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    a
}

/// Gcd of two primitive polynomials of positive degree; primitive with a
/// positive leading coefficient.
pub(crate) fn gcd_primitive(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let g = a.lc().gcd(b.lc());
    let mut modulus = Integer::one();
    let mut lifted: Vec<Integer> = Vec::new();
    let mut cur_deg = usize::MAX;
    let mut last_candidate: Option<UniPoly> = None;

    for p in Primes::new() {
        if reduce(a.lc(), p) == 0 || reduce(b.lc(), p) == 0 {
            continue;
        }
        let h = gcd_mod(reduce_poly(a, p), reduce_poly(b, p), p);
        let dh = h.len() - 1;
        if dh == 0 {
            return UniPoly::one();
        }
        if dh > cur_deg {
            // unlucky prime
            continue;
        }
        let gp = reduce(&g, p);
        let h: Vec<u64> = h.iter().map(|&c| mulmod(c, gp, p)).collect();
        if dh < cur_deg {
            cur_deg = dh;
            modulus = Integer::from(p);
            lifted = h.iter().map(|&c| Integer::from(c)).collect();
            last_candidate = None;
            continue;
        }
        // CRT: x = H + M * ((h - H) * M^-1 mod p)
        let minv = invmod(reduce(&modulus, p), p);
        for (big, &hc) in lifted.iter_mut().zip(&h) {
            let t = mulmod(submod(hc, reduce(big, p), p), minv, p);
            if t != 0 {
                *big += &modulus * Integer::from(t);
            }
        }
        modulus *= Integer::from(p);
        let half = &modulus >> 1usize;
        let sym: Vec<Integer> = lifted
            .iter()
            .map(|c| if *c > half { c - &modulus } else { c.clone() })
            .collect();
        let candidate = UniPoly::new(sym).primitive_part();
        if last_candidate.as_ref() == Some(&candidate)
            && a.div_exact(&candidate).is_some()
            && b.div_exact(&candidate).is_some()
        {
            return candidate;
        }
        last_candidate = Some(candidate);
    }
    unreachable!("ran out of primes")
}

#[cfg(test)]
fn eval_mod(a: &UniPoly, x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for c in a.coeffs().iter().rev() {
        acc = addmod(mulmod(acc, x, p), reduce(c, p), p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_descend_and_are_prime() {
        let ps: Vec<u64> = Primes::new().take(5).collect();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| is_prime(p) && p < (1 << 62)));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn gcd_large_coefficients() {
        let big = Integer::one() << 200usize;
        let f = UniPoly::new(alloc::vec![big.clone() + 1u32, Integer::from(-3), Integer::one()]);
        let a = &f * &UniPoly::from_i64s(&[5, 0, 0, 1]);
        let b = &f * &UniPoly::from_i64s(&[-7, 2]);
        assert_eq!(gcd_primitive(&a, &b), f);
    }

    #[test]
    fn eval_mod_matches() {
        let a = UniPoly::from_i64s(&[1, -1, 2]);
        assert_eq!(eval_mod(&a, 3, 1_000_000_007), 16);
    }
}
