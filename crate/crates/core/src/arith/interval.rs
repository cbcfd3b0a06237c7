use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{Dyadic, Rational};

/// Closed interval `[lo, hi]` with dyadic endpoints, `lo <= hi`.
///
/// Point intervals `[v, v]` are allowed and represent exactly known values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalSign {
    Positive,
    Negative,
    ContainsZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IvOp {
    Add,
    Sub,
    Mul,
}

/// Applies `op` to two intervals. The result is the exact hull of
/// `{x op y : x in a, y in b}`.
pub fn iv_arith(op: IvOp, a: &DyadicInterval, b: &DyadicInterval) -> DyadicInterval {
    match op {
        IvOp::Add => a + b,
        IvOp::Sub => a - b,
        IvOp::Mul => a * b,
    }
}

impl DyadicInterval {
    /// # Panics
    ///
    /// Panics if `lo > hi`.
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        DyadicInterval { lo, hi }
    }

    pub fn point(v: Dyadic) -> Self {
        DyadicInterval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn from_i64(lo: i64, hi: i64) -> Self {
        Self::new(lo.into(), hi.into())
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn into_bounds(self) -> (Dyadic, Dyadic) {
        (self.lo, self.hi)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Dyadic {
        Dyadic::midpoint(&self.lo, &self.hi)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        self.lo.cmp_rational(q).is_le() && self.hi.cmp_rational(q).is_ge()
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &DyadicInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// True when the two closed intervals share no point.
    pub fn is_disjoint_from(&self, other: &DyadicInterval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn hull(&self, other: &DyadicInterval) -> DyadicInterval {
        DyadicInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn sign(&self) -> IntervalSign {
        if self.lo.signum() > 0 {
            IntervalSign::Positive
        } else if self.hi.signum() < 0 {
            IntervalSign::Negative
        } else {
            IntervalSign::ContainsZero
        }
    }

    pub fn scale(&self, c: &Dyadic) -> DyadicInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if c.signum() >= 0 {
            DyadicInterval { lo: a, hi: b }
        } else {
            DyadicInterval { lo: b, hi: a }
        }
    }

    /// Widens the interval by `r >= 0` on both sides.
    pub fn inflate(&self, r: &Dyadic) -> DyadicInterval {
        DyadicInterval::new(&self.lo - r, &self.hi + r)
    }
}

impl Add for &DyadicInterval {
    type Output = DyadicInterval;
    fn add(self, rhs: &DyadicInterval) -> DyadicInterval {
        DyadicInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &DyadicInterval {
    type Output = DyadicInterval;
    fn sub(self, rhs: &DyadicInterval) -> DyadicInterval {
        DyadicInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &DyadicInterval {
    type Output = DyadicInterval;
    fn mul(self, rhs: &DyadicInterval) -> DyadicInterval {
        if self.is_point() {
            return rhs.scale(&self.lo);
        }
        if rhs.is_point() {
            return self.scale(&rhs.lo);
        }
        let p = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let mut lo = &p[0];
        let mut hi = &p[0];
        for v in &p[1..] {
            if v < lo {
                lo = v;
            }
            if v > hi {
                hi = v;
            }
        }
        DyadicInterval {
            lo: lo.clone(),
            hi: hi.clone(),
        }
    }
}

impl Neg for &DyadicInterval {
    type Output = DyadicInterval;
    fn neg(self) -> DyadicInterval {
        DyadicInterval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for DyadicInterval {
            type Output = DyadicInterval;
            fn $m(self, rhs: DyadicInterval) -> DyadicInterval { (&self).$m(&rhs) }
        }
        impl $tr<&DyadicInterval> for DyadicInterval {
            type Output = DyadicInterval;
            fn $m(self, rhs: &DyadicInterval) -> DyadicInterval { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Debug for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
