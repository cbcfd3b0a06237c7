use bisolve_core::arith::{iv_arith, ceil_log2_abs, pow2_rational, rational, Dyadic, DyadicInterval, Integer, IvOp, Rational};
use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn dyadic() -> impl Strategy<Value = Dyadic> {
    (-10_000i64..10_000, -12i64..12).prop_map(|(m, e)| Dyadic::new(Integer::from(m), e))
}

fn interval() -> impl Strategy<Value = DyadicInterval> {
    (dyadic(), dyadic()).prop_map(|(a, b)| if a <= b { DyadicInterval::new(a, b) } else { DyadicInterval::new(b, a) })
}

fn point_in(iv: &DyadicInterval, t: u8) -> Dyadic {
    // lo + (hi - lo) * t / 256
    let w = iv.width();
    iv.lo() + &(&w * &Dyadic::new(Integer::from(t), -8))
}

fn apply(op: IvOp, a: &Dyadic, b: &Dyadic) -> Dyadic {
    match op {
        IvOp::Add => a + b,
        IvOp::Sub => a - b,
        IvOp::Mul => a * b,
    }
}

proptest! {
    #[test]
    fn interval_ops_contain_pointwise_results(a in interval(), b in interval(), s in any::<u8>(), t in any::<u8>()) {
        let (x, y) = (point_in(&a, s), point_in(&b, t));
        for op in [IvOp::Add, IvOp::Sub, IvOp::Mul] {
            let r = iv_arith(op, &a, &b);
            prop_assert!(r.contains(&apply(op, &x, &y)));
            // the hull is attained at endpoint combinations
            let ends = [a.lo(), a.hi()];
            let attained = ends.iter().flat_map(|u| [b.lo(), b.hi()].map(|v| apply(op, u, v)));
            let (lo, hi) = attained.fold((None::<Dyadic>, None::<Dyadic>), |(lo, hi), v| {
                (Some(lo.map_or(v.clone(), |l| l.min(v.clone()))), Some(hi.map_or(v.clone(), |h| h.max(v))))
            });
            prop_assert_eq!(r.lo(), &lo.unwrap());
            prop_assert_eq!(r.hi(), &hi.unwrap());
        }
    }

    #[test]
    fn interval_ops_are_inclusion_monotone(a in interval(), b in interval(), s in any::<u8>(), t in any::<u8>()) {
        // shrink a to a subinterval and compare
        let (p, q) = (point_in(&a, s.min(t)), point_in(&a, s.max(t)));
        let sub = DyadicInterval::new(p, q);
        for op in [IvOp::Add, IvOp::Sub, IvOp::Mul] {
            prop_assert!(iv_arith(op, &sub, &b).is_subset_of(&iv_arith(op, &a, &b)));
        }
    }

    #[test]
    fn dyadic_is_canonical_and_exact(m in -1_000_000i64..1_000_000, e in -40i64..40) {
        let d = Dyadic::new(Integer::from(m), e);
        prop_assert!(d.is_zero() || d.mantissa().is_odd());
        if d.is_zero() {
            prop_assert_eq!(d.exponent(), 0);
        }
        prop_assert_eq!(d.to_rational(), Rational::from_integer(m.into()) * pow2_rational(e));
        prop_assert_eq!(Dyadic::from_rational(&d.to_rational()), Some(d));
    }

    #[test]
    fn rationals_are_reduced(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000, k in 1i64..1000) {
        let q = rational(n * k, -d * k);
        prop_assert!(q.denom().is_positive());
        prop_assert!(q.numer().gcd(q.denom()) == Integer::from(1) || q.numer().is_zero());
        prop_assert_eq!(q, rational(-n, d));
    }

    #[test]
    fn ceil_log2_is_tight(n in 1i64..1_000_000, d in 1i64..1_000_000) {
        let q = rational(n, d);
        let k = ceil_log2_abs(&q).unwrap();
        prop_assert!(q <= pow2_rational(k));
        prop_assert!(q > pow2_rational(k - 1));
    }
}

#[test]
fn log2_of_zero_is_none() {
    assert_eq!(ceil_log2_abs(&Rational::zero()), None);
}
