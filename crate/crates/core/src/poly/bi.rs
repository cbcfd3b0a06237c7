use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::recursive::{self, RecPoly};
use super::{Magnitude, UniPoly, Var};
use crate::arith::{bitlength, Dyadic, DyadicInterval, Integer};
use crate::{Error, Result};

/// Sparse bivariate polynomial over the integers: `(i, j) -> c` stands for
/// `c * x^i * y^j`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Integer>,
    deg_x: u32,
    deg_y: u32,
}

impl BiPoly {
    /// Builds a polynomial from `((i, j), c)` terms; repeated monomials are
    /// summed and zero results dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((u32, u32), Integer)>,
    {
        let mut map: BTreeMap<(u32, u32), Integer> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self::from_map(map)
    }

    fn from_map(terms: BTreeMap<(u32, u32), Integer>) -> Self {
        let deg_x = terms.keys().map(|k| k.0).max().unwrap_or(0);
        let deg_y = terms.keys().map(|k| k.1).max().unwrap_or(0);
        BiPoly {
            terms,
            deg_x,
            deg_y,
        }
    }

    pub fn from_i64_terms(terms: &[(u32, u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), Integer::from(c))))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Integer) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn monomial(i: u32, j: u32, c: Integer) -> Self {
        Self::from_terms([((i, j), c)])
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::monomial(1, 0, Integer::one()),
            Var::Y => Self::monomial(0, 1, Integer::one()),
        }
    }

    /// Embeds a univariate polynomial as a polynomial in `v`.
    pub fn from_uni(p: &UniPoly, v: Var) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| {
            let k = k as u32;
            let key = if v == Var::X { (k, 0) } else { (0, k) };
            (key, c.clone())
        }))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Integer)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Integer {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_x(&self) -> u32 {
        self.deg_x
    }

    pub fn deg_y(&self) -> u32 {
        self.deg_y
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        match v {
            Var::X => self.deg_x,
            Var::Y => self.deg_y,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn magnitude(&self) -> Result<Magnitude> {
        if self.is_zero() {
            return Err(Error::ZeroPoly);
        }
        let tau = self.terms.values().map(bitlength).max().unwrap_or(0);
        Ok(Magnitude {
            n: self.total_degree(),
            tau,
        })
    }

    pub fn swap_vars(&self) -> BiPoly {
        Self::from_map(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect())
    }

    pub fn partial(&self, v: Var) -> BiPoly {
        Self::from_terms(self.terms.iter().filter_map(|(&(i, j), c)| match v {
            Var::X if i > 0 => Some(((i - 1, j), c * Integer::from(i))),
            Var::Y if j > 0 => Some(((i, j - 1), c * Integer::from(j))),
            _ => None,
        }))
    }

    pub fn scale(&self, c: &Integer) -> BiPoly {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_map(self.terms.iter().map(|(k, a)| (*k, a * c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> BiPoly {
        let mut base = self.clone();
        let mut acc = BiPoly::constant(Integer::one());
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

    /// Nonnegative gcd of all coefficients.
    pub fn content(&self) -> Integer {
        let mut g = Integer::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the integer content; the sign is normalised so that the
    /// coefficient of the largest monomial in (total degree, x-degree) order
    /// is positive.
    pub fn primitive_part(&self) -> BiPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_term().1.is_negative() {
            c = -c;
        }
        Self::from_map(self.terms.iter().map(|(k, a)| (*k, a / &c)).collect())
    }

    fn leading_term(&self) -> ((u32, u32), &Integer) {
        let (k, c) = self
            .terms
            .iter()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .expect("nonzero polynomial");
        (*k, c)
    }

    /// View as a polynomial in `main` whose coefficients are polynomials in
    /// the other variable.
    pub(crate) fn to_rec(&self, main: Var) -> RecPoly {
        let dm = self.degree_in(main) as usize;
        let mut cols: Vec<Vec<Integer>> = vec![Vec::new(); dm + 1];
        for (&(i, j), c) in &self.terms {
            let (m, o) = match main {
                Var::Y => (j as usize, i as usize),
                Var::X => (i as usize, j as usize),
            };
            let col = &mut cols[m];
            if col.len() <= o {
                col.resize(o + 1, Integer::zero());
            }
            col[o] = c.clone();
        }
        RecPoly::new(cols.into_iter().map(UniPoly::new).collect())
    }

    pub(crate) fn from_rec(r: &RecPoly, main: Var) -> BiPoly {
        let mut terms = BTreeMap::new();
        for (m, cu) in r.coeffs().iter().enumerate() {
            for (o, c) in cu.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let key = match main {
                    Var::Y => (o as u32, m as u32),
                    Var::X => (m as u32, o as u32),
                };
                terms.insert(key, c.clone());
            }
        }
        Self::from_map(terms)
    }

    /// Coefficients of `main^k` as polynomials in the other variable.
    pub fn coeffs_in(&self, main: Var) -> Vec<UniPoly> {
        self.to_rec(main).into_coeffs()
    }

    /// Leading coefficient with respect to `main`, a polynomial in the other
    /// variable.
    pub fn lc_in(&self, main: Var) -> UniPoly {
        self.coeffs_in(main).pop().unwrap_or_default()
    }

    /// Substitutes the integer `c` for `v`; the result is a polynomial in the
    /// other variable.
    pub fn specialize(&self, v: Var, c: &Integer) -> UniPoly {
        let rec = self.to_rec(v.other());
        UniPoly::new(rec.coeffs().iter().map(|u| u.eval_integer(c)).collect())
    }

    /// Exact value at a dyadic point.
    pub fn eval_dyadic(&self, x: &Dyadic, y: &Dyadic) -> Dyadic {
        let bx = DyadicInterval::point(x.clone());
        let by = DyadicInterval::point(y.clone());
        let v = self.eval_box(&bx, &by);
        debug_assert!(v.is_point());
        v.lo().clone()
    }

    /// Encloses `{F(x, y) : x in bx, y in by}`. The scheme is fixed: Horner
    /// in `y`, with each `y`-coefficient evaluated by interval Horner in `x`.
    pub fn eval_box(&self, bx: &DyadicInterval, by: &DyadicInterval) -> DyadicInterval {
        eval_box_coeffs(self.to_rec(Var::Y).coeffs(), bx, by)
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        if d.is_zero() {
            return None;
        }
        let q = self.to_rec(Var::Y).div_exact(&d.to_rec(Var::Y))?;
        Some(BiPoly::from_rec(&q, Var::Y))
    }

    /// Gcd over `Z[x, y]`, primitive and sign-normalised like
    /// [`BiPoly::primitive_part`]. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let a = self.to_rec(Var::Y);
        let b = other.to_rec(Var::Y);
        let ca = a.content();
        let cb = b.content();
        let c = super::gcd_uni(&ca, &cb);
        let h = recursive::gcd_primitive(&a.primitive_part(), &b.primitive_part());
        let h = h.mul_uni(&c);
        BiPoly::from_rec(&h, Var::Y).primitive_part()
    }
}

/// [`BiPoly::eval_box`] on precomputed `y`-coefficients.
pub(crate) fn eval_box_coeffs(ycoeffs: &[UniPoly], bx: &DyadicInterval, by: &DyadicInterval) -> DyadicInterval {
    let mut acc = DyadicInterval::point(Dyadic::zero());
    for c in ycoeffs.iter().rev() {
        acc = &acc * by;
        acc = &acc + &c.eval_interval(bx);
    }
    acc
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            *terms.entry(*k).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        BiPoly::from_map(terms)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            *terms.entry(*k).or_default() -= c;
        }
        terms.retain(|_, c| !c.is_zero());
        BiPoly::from_map(terms)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut terms: BTreeMap<(u32, u32), Integer> = BTreeMap::new();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                *terms.entry((i + k, j + l)).or_default() += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BiPoly::from_map(terms)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
            deg_x: self.deg_x,
            deg_y: self.deg_y,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly { (&self).$m(&rhs) }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Prints in the input grammar, terms by decreasing total degree then
/// decreasing x-degree, e.g. `x^2*y - 3*x + 1`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|&(&(i, j), _)| core::cmp::Reverse((i + j, i)));
        super::write_terms(f, keys.into_iter().map(|(&(i, j), c)| (c, i, j)))
    }
}
