use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{modular, Magnitude};
use crate::arith::{bitlength, Dyadic, DyadicInterval, Integer, Rational};
use crate::{Error, Result};

static ZERO: Integer = Integer::ZERO;

/// Dense univariate polynomial over the integers. `coeffs[i]` multiplies
/// `x^i`; the leading coefficient is nonzero and the zero polynomial is the
/// empty sequence.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Integer>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `(x - r)` for an integer `r`.
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64s(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Integer {
        self.coeffs.get(i).unwrap_or(&ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> &Integer {
        self.coeffs.last().unwrap_or(&ZERO)
    }

    pub fn magnitude(&self) -> Result<Magnitude> {
        let n = self.degree().ok_or(Error::ZeroPoly)?;
        let tau = self.coeffs.iter().map(bitlength).max().unwrap_or(0);
        Ok(Magnitude { n: n as u32, tau })
    }

    pub fn derivative(&self) -> UniPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Integer::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Integer) -> UniPoly {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &Integer) -> UniPoly {
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> Integer {
        let mut g = Integer::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> UniPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        }
    }

    /// `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &UniPoly) -> UniPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return Self::zero();
        };
        if da < dd {
            return self.clone();
        }
        let lcd = d.lc();
        let mut r = self.coeffs.clone();
        let mut steps = 0u32;
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let off = top - dd;
            for c in r.iter_mut() {
                *c *= lcd;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[off + i] -= &lr * dc;
            }
            debug_assert!(r[top].is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            steps += 1;
        }
        let missing = (da - dd + 1) as u32 - steps;
        let r = UniPoly::new(r);
        if missing > 0 {
            r.scale(&num_traits::pow(lcd.clone(), missing as usize))
        } else {
            r
        }
    }

    /// Exact quotient `self / d` over the integers, or `None` when `d` does not
    /// divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return Some(Self::zero());
        };
        if da < dd {
            return None;
        }
        let lcd = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![Integer::zero(); da - dd + 1];
        for k in (0..=da - dd).rev() {
            let top = k + dd;
            if r[top].is_zero() {
                continue;
            }
            let (qk, rem) = r[top].div_rem(lcd);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qk * dc;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::new(q))
    }

    pub fn eval_integer(&self, x: &Integer) -> Integer {
        let mut acc = Integer::zero();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Exact value at a rational point by Horner's scheme on the homogenised
    /// numerator, followed by a single reduction.
    pub fn eval_point(&self, q: &Rational) -> Rational {
        let (num, den) = self.eval_homogeneous(q.numer(), q.denom());
        Rational::new(num, den)
    }

    /// Returns `(N, b^n)` with `p(a/b) = N / b^n`, `n = deg p`, unreduced.
    pub(crate) fn eval_homogeneous(&self, a: &Integer, b: &Integer) -> (Integer, Integer) {
        let Some(n) = self.degree() else {
            return (Integer::zero(), Integer::one());
        };
        if b.is_one() {
            return (self.eval_integer(a), Integer::one());
        }
        let mut acc = self.coeffs[n].clone();
        let mut bpow = Integer::one();
        for c in self.coeffs[..n].iter().rev() {
            bpow *= b;
            acc *= a;
            if !c.is_zero() {
                acc += c * &bpow;
            }
        }
        (acc, bpow)
    }

    /// Exact value at a dyadic point; the result is again dyadic.
    pub fn eval_dyadic(&self, x: &Dyadic) -> Dyadic {
        let Some(n) = self.degree() else {
            return Dyadic::zero();
        };
        let (a, k) = x.to_scaled_integer();
        if k == 0 {
            return Dyadic::from_integer(self.eval_integer(&a));
        }
        // 2^(k n) p(a / 2^k) = sum c_i a^i 2^(k (n - i))
        let mut acc = self.coeffs[n].clone();
        for (j, c) in self.coeffs[..n].iter().rev().enumerate() {
            acc *= &a;
            if !c.is_zero() {
                acc += c << (k as usize * (j + 1));
            }
        }
        Dyadic::new(acc, -((k * n as u64) as i64))
    }

    /// Interval Horner evaluation; encloses `{p(x) : x in iv}`.
    pub fn eval_interval(&self, iv: &DyadicInterval) -> DyadicInterval {
        if iv.is_point() {
            return DyadicInterval::point(self.eval_dyadic(iv.lo()));
        }
        let mut acc = DyadicInterval::point(Dyadic::zero());
        for c in self.coeffs.iter().rev() {
            acc = &acc * iv;
            let c = DyadicInterval::point(Dyadic::from_integer(c.clone()));
            acc = &acc + &c;
        }
        acc
    }

    /// Sign of the value at a dyadic point: -1, 0 or +1.
    pub fn sign_at_dyadic(&self, x: &Dyadic) -> i8 {
        self.eval_dyadic(x).signum()
    }
}

/// Primitive gcd with positive leading coefficient. `gcd(0, p)` is the
/// primitive part of `p`, and `gcd(0, 0) = 0`.
pub fn gcd_uni(p: &UniPoly, q: &UniPoly) -> UniPoly {
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    if p.is_constant() || q.is_constant() {
        return UniPoly::one();
    }
    modular::gcd_primitive(&p.primitive_part(), &q.primitive_part())
}

/// `p / gcd(p, p')`, primitive with positive leading coefficient. It has the
/// same real roots as `p`, all simple.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let pp = p.primitive_part();
    let g = gcd_uni(&pp, &pp.derivative());
    if g.is_constant() {
        return Ok(pp);
    }
    let q = pp.div_exact(&g).expect("gcd divides its argument");
    Ok(q.primitive_part())
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, c) in out.iter_mut().zip(&short.coeffs) {
            *o += c;
        }
        UniPoly::new(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(n, Integer::zero());
        for (o, c) in out.iter_mut().zip(&rhs.coeffs) {
            *o -= c;
        }
        UniPoly::new(out)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly { (&self).$m(&rhs) }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints in the input grammar with `x` as the variable, highest degree first.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c, i as u32, 0)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(up(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(up(&[0, 0]).is_zero());
        assert_eq!(up(&[]).degree(), None);
    }

    #[test]
    fn magnitude_examples() {
        let m = up(&[5, 0, 3]).magnitude().unwrap();
        assert_eq!((m.n, m.tau), (2, 3));
        let m = UniPoly::x().magnitude().unwrap();
        assert_eq!((m.n, m.tau), (1, 1));
        assert_eq!(UniPoly::zero().magnitude(), Err(Error::ZeroPoly));
    }

    #[test]
    fn eval_point_examples() {
        let p = up(&[-2, 0, 1]);
        assert_eq!(p.eval_point(&rational(1, 1)), rational(-1, 1));
        assert_eq!(p.eval_point(&rational(0, 1)), rational(-2, 1));
        assert_eq!(up(&[1, 2]).eval_point(&rational(3, 2)), rational(4, 1));
        assert_eq!(p.eval_point(&rational(-1, 3)), rational(-17, 9));
    }

    #[test]
    fn eval_dyadic_matches_rational() {
        let p = up(&[3, -5, 0, 7, 2]);
        for (m, e) in [(3i64, -2i64), (-5, -3), (7, 0), (1, 4), (-9, -7)] {
            let x = Dyadic::new(m.into(), e);
            assert_eq!(p.eval_dyadic(&x).to_rational(), p.eval_point(&x.to_rational()));
        }
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_uni(&up(&[-1, 0, 1]), &up(&[-1, 1])), up(&[-1, 1]));
        assert_eq!(gcd_uni(&up(&[0, 1]), &up(&[1, 1])), UniPoly::one());
        assert_eq!(gcd_uni(&UniPoly::zero(), &up(&[-2, 2])), up(&[-1, 1]));
        assert_eq!(gcd_uni(&UniPoly::zero(), &UniPoly::zero()), UniPoly::zero());
    }

    #[test]
    fn gcd_with_planted_factor() {
        let common = up(&[3, -7, 2]) * up(&[1, 0, 5]);
        let a = &common * &up(&[-4, 9, 1]);
        let b = (&common * &up(&[11, 0, 0, -2])).scale(&Integer::from(-6));
        assert_eq!(gcd_uni(&a, &b), common.primitive_part());
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&up(&[1, -2, 1])).unwrap(), up(&[-1, 1]));
        assert_eq!(squarefree_part(&up(&[-1, 0, 1])).unwrap(), up(&[-1, 0, 1]));
        assert_eq!(squarefree_part(&up(&[0, 0, 0, 1])).unwrap(), up(&[0, 1]));
        assert_eq!(squarefree_part(&UniPoly::zero()), Err(Error::ZeroPoly));
    }

    #[test]
    fn pseudo_rem_definition() {
        // prem(3x^3 + x + 1, 2x - 1) = 2^3 * p(1/2)
        let a = up(&[1, 1, 0, 3]);
        let b = up(&[-1, 2]);
        assert_eq!(a.pseudo_rem(&b), up(&[8 + 4 + 3]));
    }

    #[test]
    fn exact_division() {
        let a = up(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&up(&[1, 1])), Some(up(&[-1, 1])));
        assert_eq!(a.div_exact(&up(&[1, 2])), None);
        assert_eq!(up(&[2, 4]).div_exact(&up(&[1, 2])), Some(up(&[2])));
    }

    #[test]
    fn interval_eval_encloses() {
        let p = up(&[-1, 0, 1]);
        let iv = DyadicInterval::from_i64(0, 1);
        assert_eq!(p.eval_interval(&iv), DyadicInterval::from_i64(-1, 0));
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", up(&[1, -3, 0, 2])), "2*x^3 - 3*x + 1");
        assert_eq!(alloc::format!("{}", UniPoly::zero()), "0");
    }
}
