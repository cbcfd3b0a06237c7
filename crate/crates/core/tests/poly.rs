mod common;

use bisolve_core::arith::{rational, Integer, Rational};
use bisolve_core::poly::{gcd_uni, multipoint_eval, resultant, squarefree_part, subresultant_coeffs, BiPoly, SubproductTree, UniPoly, Var};
use common::{product_of_roots, random_dense, random_sparse, resultant_oracle, sres_oracle};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `p(a/b)` as `sum c_i a^i b^(n-i) / b^n`, reduced once at the end.
fn horner(p: &UniPoly, x: &Rational) -> Rational {
    let (a, b) = (x.numer(), x.denom());
    let mut num = Integer::zero();
    let mut den = Integer::one();
    for c in p.coeffs().iter().rev() {
        num = num * a + c * &den;
        den *= b;
    }
    // one factor of b too many in both
    Rational::new(num * b, den)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_matches_sylvester(seed in any::<u64>(), n in 1u32..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_sparse(&mut rng, n, 255);
        let g = random_sparse(&mut rng, n, 255);
        prop_assume!(f.deg_y() + g.deg_y() >= 1);
        prop_assert_eq!(resultant(&f, &g, Var::Y).unwrap(), resultant_oracle(&f, &g));
        let (fs, gs) = (f.swap_vars(), g.swap_vars());
        prop_assume!(fs.deg_y() + gs.deg_y() >= 1);
        prop_assert_eq!(resultant(&f, &g, Var::X).unwrap(), resultant_oracle(&fs, &gs));
    }

    #[test]
    fn principal_subresultants_match_minors(seed in any::<u64>(), n in 1u32..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut f = random_sparse(&mut rng, n, 100);
        let mut g = random_sparse(&mut rng, n, 100);
        if f.deg_y() < g.deg_y() {
            core::mem::swap(&mut f, &mut g);
        }
        prop_assume!(f.deg_y() >= 1 && !g.is_zero());
        let sres = subresultant_coeffs(&f, &g, Var::Y).unwrap();
        prop_assert_eq!(sres.len(), g.deg_y() as usize + 1);
        for (j, s) in sres.iter().enumerate() {
            prop_assert_eq!(s, &sres_oracle(&f, &g, j), "j = {}", j);
        }
    }

    #[test]
    fn resultant_degree_and_roots(seed in any::<u64>(), n in 1u32..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_dense(&mut rng, n, 1000);
        let g = random_dense(&mut rng, n, 1000);
        let r = resultant(&f, &g, Var::Y).unwrap();
        prop_assert!(r.degree().is_none_or(|d| d <= (n * n) as usize));
        // at an integer x0 where the leading coefficients survive, the resultant
        // specializes to the univariate one
        let x0 = Integer::from(rng.random_range(-5i64..=5));
        let (fs, gs) = (f.specialize(Var::X, &x0), g.specialize(Var::X, &x0));
        if fs.degree() == Some(n as usize) && gs.degree() == Some(n as usize) {
            let uf = BiPoly::from_uni(&fs, Var::Y);
            let ug = BiPoly::from_uni(&gs, Var::Y);
            prop_assert_eq!(r.eval_integer(&x0), resultant_oracle(&uf, &ug).coeff(0).clone());
        }
    }

    #[test]
    fn multipoint_matches_horner(seed in any::<u64>(), deg in 0usize..80, npts in 0usize..80) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = UniPoly::new((0..=deg).map(|_| Integer::from(rng.random_range(-1i64 << 40..1i64 << 40))).collect());
        let pts: Vec<Rational> = (0..npts)
            .map(|_| rational(rng.random_range(-300i64..300), rng.random_range(1i64..40)))
            .collect();
        let want: Vec<Rational> = pts.iter().map(|x| horner(&p, x)).collect();
        prop_assert_eq!(&multipoint_eval(&p, &pts), &want);
        prop_assert_eq!(&SubproductTree::new(&pts).eval(&p), &want);
    }

    #[test]
    fn squarefree_part_is_squarefree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p = UniPoly::constant(Integer::from(rng.random_range(1i64..5)));
        let mut distinct = Vec::new();
        for _ in 0..rng.random_range(1..5) {
            let r = rng.random_range(-6i64..=6);
            let e = rng.random_range(1u32..4);
            p = &p * &product_of_roots(&[r]).pow(e);
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
        // an irreducible quadratic factor too
        p = &p * &UniPoly::from_i64s(&[3, 0, 1]).pow(rng.random_range(1u32..3));
        let s = squarefree_part(&p).unwrap();
        let g = gcd_uni(&s, &s.derivative());
        prop_assert_eq!(g.degree(), Some(0));
        prop_assert_eq!(s.degree(), Some(distinct.len() + 2));
        prop_assert!(p.div_exact(&s).is_some());
    }

    #[test]
    fn magnitude_is_echoed(seed in any::<u64>(), n in 1u32..6, tau in 1u32..60) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut f = random_dense(&mut rng, n, 1);
        // pin one coefficient of the top total degree and one of size 2^tau - 1
        f = &f + &BiPoly::monomial(n, 0, Integer::from(7));
        let big = (Integer::one() << tau as usize) - 1;
        f = &(&f - &BiPoly::monomial(0, 0, f.coeff(0, 0))) + &BiPoly::monomial(0, 0, big);
        let m = f.magnitude().unwrap();
        prop_assert_eq!(m.n, n);
        let want = f.terms().map(|(_, c)| c.magnitude().bits()).max().unwrap();
        prop_assert_eq!(m.tau, want);
        prop_assert!(m.tau >= u64::from(tau));
    }
}

#[test]
fn planted_common_factor_survives_specialization() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let h = random_dense(&mut rng, 2, 9);
        let a = random_dense(&mut rng, 2, 9);
        let b = random_dense(&mut rng, 2, 9);
        if h.deg_y() == 0 {
            continue;
        }
        let f = &h * &a;
        let g = &h * &b;
        assert!(resultant(&f, &g, Var::Y).unwrap().is_zero());
        let d = f.gcd(&g);
        assert!(d.total_degree() >= h.total_degree());
        assert!(f.div_exact(&d).is_some() && g.div_exact(&d).is_some());
    }
}
