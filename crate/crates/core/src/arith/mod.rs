//! Exact scalars and outward-closed interval arithmetic on dyadic endpoints.
//!
//! `Integer` and `Rational` are arbitrary-precision and never overflow.
//! `Dyadic` numbers (`m * 2^e`) are closed under the ring operations and
//! halving, which is all that bisection and interval evaluation need, so every
//! interval operation here is exact.

mod dyadic;
mod interval;

pub use dyadic::Dyadic;
pub use interval::{iv_arith, DyadicInterval, IntervalSign, IvOp};

/// Arbitrary-precision signed integer.
pub type Integer = num_bigint::BigInt;

/// Reduced fraction with a strictly positive denominator.
pub type Rational = num_rational::BigRational;

use num_traits::{One, Signed, Zero};

/// Bit length of `|n|`: the smallest `t` with `|n| < 2^t`. Zero has length 0.
pub fn bitlength(n: &Integer) -> u64 {
    n.magnitude().bits()
}

/// Builds the rational `num / den`, reducing it.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn rational(num: impl Into<Integer>, den: impl Into<Integer>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Smallest `k` with `|q| <= 2^k`. Returns `None` for zero.
pub fn ceil_log2_abs(q: &Rational) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let q = q.abs();
    // 2^(bits(n) - bits(d) - 1) < n/d < 2^(bits(n) - bits(d) + 1)
    let mut k = bitlength(q.numer()) as i64 - bitlength(q.denom()) as i64 + 1;
    while k > i64::MIN / 2 && pow2_rational(k - 1) >= q {
        k -= 1;
    }
    debug_assert!(pow2_rational(k) >= q);
    Some(k)
}

/// `2^k` as a rational.
pub fn pow2_rational(k: i64) -> Rational {
    if k >= 0 {
        Rational::from_integer(Integer::one() << k as usize)
    } else {
        Rational::new(Integer::one(), Integer::one() << (-k) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_on_construction() {
        let q = rational(6, -4);
        assert_eq!(q.numer(), &Integer::from(-3));
        assert_eq!(q.denom(), &Integer::from(2));
        let again = Rational::new(q.numer().clone(), q.denom().clone());
        assert_eq!(again, q);
    }

    #[test]
    fn ceil_log2() {
        assert_eq!(ceil_log2_abs(&rational(4, 1)), Some(2));
        assert_eq!(ceil_log2_abs(&rational(5, 1)), Some(3));
        assert_eq!(ceil_log2_abs(&rational(1, 1)), Some(0));
        assert_eq!(ceil_log2_abs(&rational(-3, 8)), Some(-1));
        assert_eq!(ceil_log2_abs(&rational(1, 8)), Some(-3));
        assert_eq!(ceil_log2_abs(&Rational::zero()), None);
    }

    #[test]
    fn bitlength_matches_tau_definition() {
        assert_eq!(bitlength(&Integer::from(5)), 3);
        assert_eq!(bitlength(&Integer::from(-4)), 3);
        assert_eq!(bitlength(&Integer::from(1)), 1);
        assert_eq!(bitlength(&Integer::from(0)), 0);
    }
}
