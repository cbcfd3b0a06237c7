use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::Sign;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Integer, Rational};

/// A dyadic rational `mantissa * 2^exponent`.
///
/// The representation is canonical: the mantissa is odd, or the value is zero
/// and stored as `0 * 2^0`. Equality and hashing are therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: Integer,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: Integer, exp: i64) -> Self {
        if mant.is_zero() {
            return Self::zero();
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { mant, exp }
        } else {
            Dyadic {
                mant: mant >> tz as usize,
                exp: exp + tz as i64,
            }
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            mant: Integer::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            mant: Integer::one(),
            exp: 0,
        }
    }

    pub fn from_integer(n: Integer) -> Self {
        Self::new(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::new(Integer::from(n), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic {
            mant: Integer::one(),
            exp: k,
        }
    }

    /// Exact conversion; `None` unless the reduced denominator is a power of two.
    pub fn from_rational(q: &Rational) -> Option<Self> {
        let den = q.denom();
        let tz = den.trailing_zeros().unwrap_or(0);
        if (den >> tz as usize).is_one() {
            Some(Self::new(q.numer().clone(), -(tz as i64)))
        } else {
            None
        }
    }

    pub fn mantissa(&self) -> &Integer {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i8 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// `self * 2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Dyadic {
            mant: self.mant.clone(),
            exp: self.exp + k,
        }
    }

    pub fn half(&self) -> Self {
        self.mul_pow2(-1)
    }

    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        (a + b).half()
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), Integer::one() << (-self.exp) as usize)
        }
    }

    /// Returns `(n, k)` with `self = n / 2^k` and `k >= 0`.
    pub fn to_scaled_integer(&self) -> (Integer, u64) {
        if self.exp >= 0 {
            (&self.mant << self.exp as usize, 0)
        } else {
            (self.mant.clone(), (-self.exp) as u64)
        }
    }

    /// Largest integer not above `self`.
    pub fn floor(&self) -> Integer {
        if self.exp >= 0 {
            &self.mant << self.exp as usize
        } else {
            // arithmetic shift on BigInt rounds toward -inf
            &self.mant >> (-self.exp) as usize
        }
    }

    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        let (n, k) = self.to_scaled_integer();
        // n / 2^k  vs  a / b  <=>  n * b  vs  a * 2^k   (b > 0)
        let lhs = n * q.denom();
        let rhs = q.numer() << k as usize;
        lhs.cmp(&rhs)
    }

    /// Nearest-ish `f64`; for display only, never used in a certificate.
    pub fn to_f64(&self) -> f64 {
        let bits = self.mant.bits();
        let (m, e) = if bits > 64 {
            let drop = bits - 64;
            (&self.mant >> drop as usize, self.exp + drop as i64)
        } else {
            (self.mant.clone(), self.exp)
        };
        ldexp(m.to_f64().unwrap_or(0.0), e)
    }
}

fn ldexp(mut x: f64, mut e: i64) -> f64 {
    const UP: f64 = (1u64 << 60) as f64;
    const DOWN: f64 = 1.0 / UP;
    while e >= 60 && x.is_finite() && x != 0.0 {
        x *= UP;
        e -= 60;
    }
    while e <= -60 && x != 0.0 {
        x *= DOWN;
        e += 60;
    }
    if e >= 0 {
        x * (1u64 << e) as f64
    } else {
        x / (1u64 << -e) as f64
    }
}

fn align(a: &Dyadic, b: &Dyadic) -> (Integer, Integer, i64) {
    match a.exp.cmp(&b.exp) {
        Ordering::Equal => (a.mant.clone(), b.mant.clone(), a.exp),
        Ordering::Less => (
            a.mant.clone(),
            &b.mant << (b.exp - a.exp) as usize,
            a.exp,
        ),
        Ordering::Greater => (
            &a.mant << (a.exp - b.exp) as usize,
            b.mant.clone(),
            b.exp,
        ),
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (a, b, _) = align(self, other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = align(self, rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = align(self, rhs);
        Dyadic::new(a - b, e)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // product of odd mantissas is odd, no renormalisation needed
        Dyadic {
            mant: &self.mant * &rhs.mant,
            exp: self.exp + rhs.exp,
        }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { (&self).$m(&rhs) }
        }
        impl $tr<&Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &Dyadic) -> Dyadic { (&self).$m(rhs) }
        }
        impl $tr<Dyadic> for &Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_i64(n)
    }
}

impl From<Integer> for Dyadic {
    fn from(n: Integer) -> Self {
        Dyadic::from_integer(n)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Integers print plainly, everything else as `m/2^k`.
impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", &self.mant << self.exp as usize)
        } else {
            write!(f, "{}/2^{}", self.mant, -self.exp)
        }
    }
}
