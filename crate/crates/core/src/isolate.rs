//! Real root isolation and refinement for square-free integer polynomials by
//! Descartes' rule of signs with bisection.
//!
//! All interval endpoints are dyadic: the starting box is the Cauchy bound
//! rounded up to a power of two, and every later endpoint is a midpoint.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{ceil_log2_abs, Dyadic, DyadicInterval, Integer, Rational};
use crate::poly::{gcd_uni, UniPoly};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    /// The root lies strictly inside `(lo, hi)` and the polynomial has
    /// opposite nonzero signs at the endpoints.
    OpenInterval,
    /// `lo = hi` is the root itself.
    ExactPoint,
}

/// Fingerprint of the coefficient vector of an isolated polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyId(pub u64);

impl PolyId {
    /// 64-bit FNV-1a over the little-endian two's complement coefficients.
    pub fn of(p: &UniPoly) -> PolyId {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut eat = |b: u8| {
            h ^= b as u64;
            h = h.wrapping_mul(PRIME);
        };
        for c in p.coeffs() {
            let bytes = c.to_signed_bytes_le();
            for b in (bytes.len() as u32).to_le_bytes() {
                eat(b);
            }
            for b in bytes {
                eat(b);
            }
        }
        PolyId(h)
    }
}

impl fmt::Display for PolyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

/// An interval `[lo, hi]` containing exactly one real root of the polynomial
/// identified by `poly_id`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
    pub kind: IntervalKind,
    pub poly_id: PolyId,
}

impl IsolatingInterval {
    pub fn exact(x: Dyadic, poly_id: PolyId) -> Self {
        IsolatingInterval {
            lo: x.clone(),
            hi: x,
            kind: IntervalKind::ExactPoint,
            poly_id,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == IntervalKind::ExactPoint
    }

    pub fn interval(&self) -> DyadicInterval {
        DyadicInterval::new(self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Dyadic {
        Dyadic::midpoint(&self.lo, &self.hi)
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            IntervalKind::ExactPoint => write!(f, "{{{}}}", self.lo),
            IntervalKind::OpenInterval => write!(f, "({}, {})", self.lo, self.hi),
        }
    }
}

/// Cauchy bound `1 + max_i |a_i| / |a_n|`; every real root lies strictly
/// inside `(-B, B)`.
pub fn root_bound(p: &UniPoly) -> Result<Rational> {
    let n = p.degree().ok_or(Error::ZeroPoly)?;
    if n == 0 {
        return Err(Error::ConstantPoly);
    }
    let m = p.coeffs()[..n].iter().map(Signed::abs).max().unwrap_or_default();
    Ok(Rational::from_integer(1.into()) + Rational::new(m, p.lc().abs()))
}

/// Exact sign of `p(q)`.
pub fn sign_at(p: &UniPoly, q: &Rational) -> i8 {
    let v = p.eval_point(q);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Sign variations of `p` after the Möbius transform sending `(0, inf)` onto
/// the open interval `iv`. A bound on the number of roots in the open
/// interval, exact when it is 0 or 1. A point interval counts 0.
pub fn descartes_count(p: &UniPoly, iv: &DyadicInterval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if iv.is_point() {
        return Ok(0);
    }
    Ok(variations_unit(&to_unit(p, iv.lo(), iv.hi())))
}

/// Sorted isolating intervals, one per real root of the square-free `p`.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<IsolatingInterval>> {
    let n = p.degree().ok_or(Error::ZeroPoly)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    if !gcd_uni(p, &p.derivative()).is_constant() {
        return Err(Error::NotSquarefree);
    }
    let id = PolyId::of(p);
    let k = ceil_log2_abs(&root_bound(p)?).expect("bound is at least one");
    let lo = -Dyadic::pow2(k);
    let hi = Dyadic::pow2(k);
    let mut out = Vec::new();
    let mut stack = alloc::vec![Node {
        q: to_unit(p, &lo, &hi),
        lo,
        hi,
    }];
    // depth first, left to right: the right child is pushed first
    while let Some(node) = stack.pop() {
        match variations_unit(&node.q) {
            0 => {}
            1 => out.push(make_open(p, id, node.lo, node.hi)),
            _ => {
                let m = Dyadic::midpoint(&node.lo, &node.hi);
                let left = halve(&node.q);
                let right = taylor_shift(&left, &Integer::from(1));
                let hit = left.iter().fold(Integer::zero(), |s, c| s + c).is_zero();
                stack.push(Node {
                    q: right,
                    lo: m.clone(),
                    hi: node.hi,
                });
                if hit {
                    stack.push(Node {
                        q: Vec::new(),
                        lo: m.clone(),
                        hi: m.clone(),
                    });
                }
                stack.push(Node {
                    q: left,
                    lo: node.lo,
                    hi: m,
                });
            }
        }
        // an exact midpoint hit is marked by an empty transformed polynomial
        if let Some(last) = stack.pop_if(|n| n.q.is_empty()) {
            out.push(IsolatingInterval::exact(last.lo, id));
        }
    }
    // neighbouring leaves may share an endpoint; pull them apart
    for i in 1..out.len() {
        let (l, r) = out.split_at_mut(i);
        let (a, b) = (&mut l[i - 1], &mut r[0]);
        while a.hi == b.lo {
            *a = bisect(a, p);
            if a.hi != b.lo {
                break;
            }
            *b = bisect(b, p);
        }
    }
    Ok(out)
}

/// Shrinks `iv` by bisection until its width is at most `target_width`.
/// Returns an exact point if a midpoint turns out to be the root.
pub fn refine(iv: &IsolatingInterval, p: &UniPoly, target_width: &Rational) -> IsolatingInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let s_lo = p.sign_at_dyadic(&lo);
    while (&hi - &lo).cmp_rational(target_width).is_gt() {
        let m = Dyadic::midpoint(&lo, &hi);
        match p.sign_at_dyadic(&m) {
            0 => return IsolatingInterval::exact(m, iv.poly_id),
            s if s == s_lo => lo = m,
            _ => hi = m,
        }
    }
    IsolatingInterval {
        lo,
        hi,
        kind: IntervalKind::OpenInterval,
        poly_id: iv.poly_id,
    }
}

/// One bisection step: the half of `iv` that keeps the root.
pub fn bisect(iv: &IsolatingInterval, p: &UniPoly) -> IsolatingInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let m = iv.midpoint();
    let s = p.sign_at_dyadic(&m);
    if s == 0 {
        return IsolatingInterval::exact(m, iv.poly_id);
    }
    let mut out = iv.clone();
    if s == p.sign_at_dyadic(&iv.lo) {
        out.lo = m;
    } else {
        out.hi = m;
    }
    out
}

struct Node {
    q: Vec<Integer>,
    lo: Dyadic,
    hi: Dyadic,
}

/// Turns a leaf holding exactly one root into an isolating interval. Leaf
/// endpoints that are themselves roots (earlier exact midpoints) are moved
/// inward to `e + w/2, e + w/4, ...` until the sign is nonzero.
fn make_open(p: &UniPoly, id: PolyId, mut lo: Dyadic, mut hi: Dyadic) -> IsolatingInterval {
    let mut s_lo = p.sign_at_dyadic(&lo);
    let mut s_hi = p.sign_at_dyadic(&hi);
    while s_lo == 0 && s_hi == 0 {
        let m = Dyadic::midpoint(&lo, &hi);
        match p.sign_at_dyadic(&m) {
            0 => return IsolatingInterval::exact(m, id),
            s => {
                let left = DyadicInterval::new(lo.clone(), m.clone());
                if descartes_count(p, &left).expect("nonzero") == 1 {
                    hi = m;
                    s_hi = s;
                } else {
                    lo = m;
                    s_lo = s;
                }
            }
        }
    }
    if s_lo == 0 {
        // the sign just left of the root is -s_hi
        let mut step = &hi - &lo;
        loop {
            step = step.half();
            let c = &lo + &step;
            match p.sign_at_dyadic(&c) {
                0 => return IsolatingInterval::exact(c, id),
                s if s == s_hi => hi = c,
                _ => {
                    lo = c;
                    break;
                }
            }
            step = &hi - &lo;
        }
    } else if s_hi == 0 {
        let mut step = &hi - &lo;
        loop {
            step = step.half();
            let c = &hi - &step;
            match p.sign_at_dyadic(&c) {
                0 => return IsolatingInterval::exact(c, id),
                s if s == s_lo => lo = c,
                _ => {
                    hi = c;
                    break;
                }
            }
            step = &hi - &lo;
        }
    }
    IsolatingInterval {
        lo,
        hi,
        kind: IntervalKind::OpenInterval,
        poly_id: id,
    }
}

/// A positive multiple of `p(lo + (hi - lo) x)`, with integer coefficients.
fn to_unit(p: &UniPoly, lo: &Dyadic, hi: &Dyadic) -> Vec<Integer> {
    let n = p.degree().expect("nonzero");
    let w = hi - lo;
    let e = lo.exponent().min(w.exponent());
    let a = lo.mantissa() << (lo.exponent() - e) as usize;
    let b = w.mantissa() << (w.exponent() - e) as usize;
    // p(2^e z) up to the positive factor 2^(-e n) when e < 0
    let mut c: Vec<Integer> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, ci)| {
            let sh = if e >= 0 { e * i as i64 } else { -e * (n - i) as i64 };
            ci << sh as usize
        })
        .collect();
    c = taylor_shift(&c, &a);
    let mut bp = Integer::from(1);
    for ci in c.iter_mut().skip(1) {
        bp *= &b;
        *ci *= &bp;
    }
    strip_twos(c)
}

/// Coefficients of `q(x + a)`.
fn taylor_shift(q: &[Integer], a: &Integer) -> Vec<Integer> {
    let mut c = q.to_vec();
    let n = c.len();
    if a.is_zero() || n < 2 {
        return c;
    }
    for i in 0..n - 1 {
        for j in (i..n - 1).rev() {
            let t = &c[j + 1] * a;
            c[j] += t;
        }
    }
    c
}

/// `2^n q(x / 2)`, the left half of the unit interval, with powers of two
/// common to all coefficients removed.
fn halve(q: &[Integer]) -> Vec<Integer> {
    let n = q.len().saturating_sub(1);
    strip_twos(q.iter().enumerate().map(|(i, c)| c << (n - i)).collect())
}

fn strip_twos(mut c: Vec<Integer>) -> Vec<Integer> {
    let tz = c.iter().filter_map(Integer::trailing_zeros).min().unwrap_or(0);
    if tz > 0 {
        for x in c.iter_mut() {
            *x >>= tz as usize;
        }
    }
    c
}

/// Descartes count on `(0, 1)` of the polynomial with coefficients `q`.
fn variations_unit(q: &[Integer]) -> usize {
    let mut r: Vec<Integer> = q.iter().rev().cloned().collect();
    while r.last().is_some_and(Zero::is_zero) {
        r.pop();
    }
    let r = taylor_shift(&r, &Integer::from(1));
    let mut count = 0;
    let mut prev = 0i8;
    for c in &r {
        let s = if c.is_zero() {
            continue;
        } else if c.is_positive() {
            1
        } else {
            -1
        };
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    fn d(m: i64, e: i64) -> Dyadic {
        Dyadic::new(m.into(), e)
    }

    #[test]
    fn cauchy_bounds() {
        assert_eq!(root_bound(&up(&[2, -3, 1])).unwrap(), rational(4, 1));
        assert_eq!(root_bound(&up(&[0, 0, 0, 1])).unwrap(), rational(1, 1));
        assert_eq!(root_bound(&up(&[-6, 2])).unwrap(), rational(4, 1));
        assert_eq!(root_bound(&UniPoly::zero()), Err(Error::ZeroPoly));
        assert_eq!(root_bound(&up(&[5])), Err(Error::ConstantPoly));
    }

    #[test]
    fn descartes_examples() {
        assert_eq!(descartes_count(&up(&[2, -3, 1]), &DyadicInterval::from_i64(0, 4)), Ok(2));
        assert_eq!(descartes_count(&up(&[1, 0, 1]), &DyadicInterval::from_i64(0, 4)), Ok(0));
        // only a bound: +-i lie close enough to (-8, 8) to produce variations
        assert_eq!(descartes_count(&up(&[1, 0, 1]), &DyadicInterval::from_i64(-8, 8)), Ok(2));
        assert_eq!(descartes_count(&up(&[-1, 1]), &DyadicInterval::from_i64(0, 2)), Ok(1));
        // roots at the endpoints are not counted
        assert_eq!(descartes_count(&up(&[2, -3, 1]), &DyadicInterval::from_i64(1, 2)), Ok(0));
        assert_eq!(descartes_count(&UniPoly::zero(), &DyadicInterval::from_i64(0, 1)), Err(Error::ZeroPoly));
    }

    #[test]
    fn sqrt_two() {
        let p = up(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        let pos = &roots[1];
        // Descartes stops at (0, 4); separating it from (-4, 0) halves it once
        assert_eq!((pos.lo.clone(), pos.hi.clone()), (d(0, 0), d(2, 0)));
        let r = refine(pos, &p, &rational(1, 1));
        assert_eq!((r.lo, r.hi), (d(1, 0), d(2, 0)));
        assert!(isolate_real_roots(&up(&[1, 0, 1])).unwrap().is_empty());
    }

    #[test]
    fn cubic_hits_midpoint() {
        let roots = isolate_real_roots(&up(&[0, -1, 0, 1])).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots[1].is_exact());
        assert_eq!(roots[1].lo, Dyadic::zero());
        for (r, v) in roots.iter().zip([-1, 0, 1]) {
            assert!(r.lo <= d(v, 0) && d(v, 0) <= r.hi);
        }
    }

    #[test]
    fn not_squarefree_rejected() {
        assert_eq!(isolate_real_roots(&up(&[1, -2, 1])), Err(Error::NotSquarefree));
        assert_eq!(isolate_real_roots(&UniPoly::zero()), Err(Error::ZeroPoly));
        assert!(isolate_real_roots(&up(&[3])).unwrap().is_empty());
    }

    #[test]
    fn refine_examples() {
        let p = up(&[-2, 0, 1]);
        let iv = IsolatingInterval {
            lo: d(1, 0),
            hi: d(2, 0),
            kind: IntervalKind::OpenInterval,
            poly_id: PolyId::of(&p),
        };
        let r = refine(&iv, &p, &rational(1, 4));
        assert_eq!((r.lo.clone(), r.hi.clone()), (d(5, -2), d(3, -1)));
        assert_eq!(refine(&r, &p, &rational(1, 1)), r);

        let q = up(&[-2, 1]);
        let iv = IsolatingInterval {
            lo: d(1, 0),
            hi: d(3, 0),
            kind: IntervalKind::OpenInterval,
            poly_id: PolyId::of(&q),
        };
        let r = refine(&iv, &q, &rational(1, 1_000_000));
        assert!(r.is_exact());
        assert_eq!(r.lo, d(2, 0));
    }

    #[test]
    fn sign_examples() {
        let p = up(&[-2, 0, 1]);
        assert_eq!(sign_at(&p, &rational(1, 1)), -1);
        assert_eq!(sign_at(&p, &rational(2, 1)), 1);
        assert_eq!(sign_at(&up(&[-1, 1]), &rational(1, 1)), 0);
    }

    #[test]
    fn leaf_endpoint_roots_are_moved() {
        // roots -1, 0, 1/2, 1: 0 is an exact midpoint, so its neighbours'
        // leaves end at a root
        let p = &(&up(&[0, 1]) * &up(&[-1, 2])) * &up(&[-1, 0, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 4);
        for r in &roots {
            if !r.is_exact() {
                let (a, b) = (p.sign_at_dyadic(&r.lo), p.sign_at_dyadic(&r.hi));
                assert!(a != 0 && b != 0 && a != b);
            }
        }
        for w in roots.windows(2) {
            assert!(w[0].hi < w[1].lo);
        }
    }

    #[test]
    fn neighbours_do_not_touch() {
        let roots = isolate_real_roots(&up(&[-2, 0, 1])).unwrap();
        assert!(roots[0].hi < roots[1].lo);
    }
}
