//! Resultants and principal subresultant coefficients by the subresultant
//! pseudo-remainder sequence (Lazard/Ducos form).
//!
//! Sign convention: for `F` of degree `p` and `G` of degree `q <= p` in the
//! eliminated variable, `sres_j` is the determinant of the square matrix made
//! of the first `p + q - 2j` columns of the rows
//! `y^(q-j-1) F, ..., F, y^(p-j-1) G, ..., G`. So `sres_0` is exactly the
//! Sylvester determinant, `sres_q = lc(G)^(p-q)` and, when `p = q`,
//! `sres_q = 1` (empty determinant).

use alloc::vec;
use alloc::vec::Vec;

use super::{BiPoly, RecPoly, UniPoly, Var};
use crate::{Error, Result};

/// Principal subresultant coefficients `sres_0, ..., sres_q` of `f` and `g`
/// viewed as polynomials in `var`, as polynomials in the other variable.
///
/// Requires `deg_var f >= deg_var g` and `deg_var f >= 1`; otherwise returns
/// [`Error::BadVar`].
pub fn subresultant_coeffs(f: &BiPoly, g: &BiPoly, var: Var) -> Result<Vec<UniPoly>> {
    if f.is_zero() || f.degree_in(var) == 0 || f.degree_in(var) < g.degree_in(var) {
        return Err(Error::BadVar);
    }
    Ok(principal_subresultants(&f.to_rec(var), &g.to_rec(var)))
}

/// Resultant of `f` and `g` with respect to `var`, equal to the Sylvester
/// determinant. Fails with [`Error::BadVar`] when both are constant in `var`.
pub fn resultant(f: &BiPoly, g: &BiPoly, var: Var) -> Result<UniPoly> {
    let p = f.degree_in(var);
    let q = g.degree_in(var);
    if p == 0 && q == 0 {
        return Err(Error::BadVar);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(UniPoly::zero());
    }
    if p >= q {
        Ok(principal_subresultants(&f.to_rec(var), &g.to_rec(var)).swap_remove(0))
    } else {
        let r = principal_subresultants(&g.to_rec(var), &f.to_rec(var)).swap_remove(0);
        Ok(if (p * q) % 2 == 1 { -r } else { r })
    }
}

/// `deg a >= 1`, `deg a >= deg b`.
pub(crate) fn principal_subresultants(a: &RecPoly, b: &RecPoly) -> Vec<UniPoly> {
    let p = a.degree().expect("nonzero");
    let Some(q) = b.degree() else {
        return vec![UniPoly::zero()];
    };
    debug_assert!(p >= 1 && p >= q);
    if q == 0 {
        return vec![b.lc().pow(p as u32)];
    }

    let mut out = vec![UniPoly::zero(); q + 1];
    let mut s = if p == q {
        UniPoly::one()
    } else {
        b.lc().pow((p - q) as u32)
    };
    out[q] = s.clone();

    let mut big_a = b.clone();
    let mut big_b = a.pseudo_rem(&-b);
    while let Some(e) = big_b.degree() {
        let d = big_a.degree().expect("nonzero");
        // S_{d-1} = B; its principal coefficient vanishes unless e = d - 1
        out[d - 1] = big_b.coeff(d - 1);
        let delta = d - e;
        let c = if delta > 1 {
            let c = lazard_reduce(&big_b, &s, delta - 1);
            out[e] = c.lc().clone();
            c
        } else {
            big_b.clone()
        };
        if e == 0 {
            break;
        }
        let den = &s.pow(delta as u32) * big_a.lc();
        let next = big_a
            .pseudo_rem(&-&big_b)
            .div_uni_exact(&den)
            .expect("subresultant division is exact");
        big_a = c;
        s = big_a.lc().clone();
        big_b = next;
    }
    out
}

/// `lc(b)^n * b / s^n`, computed with exact divisions at every step.
fn lazard_reduce(b: &RecPoly, s: &UniPoly, n: usize) -> RecPoly {
    let x = b.lc();
    let mut c = x.clone();
    for _ in 1..n {
        c = (&c * x).div_exact(s).expect("Lazard reduction is exact");
    }
    b.mul_uni(&c).div_uni_exact(s).expect("Lazard reduction is exact")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(t: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_i64_terms(t)
    }

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn circle_and_diagonal() {
        let f = bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -2)]);
        let g = bp(&[(1, 0, 1), (0, 1, -1)]);
        assert_eq!(resultant(&f, &g, Var::Y).unwrap(), up(&[-2, 0, 2]));
        let s = subresultant_coeffs(&f, &g, Var::Y).unwrap();
        assert_eq!(s, vec![up(&[-2, 0, 2]), up(&[-1])]);
    }

    #[test]
    fn two_lines() {
        let f = bp(&[(0, 1, 1), (1, 0, -1)]);
        let g = bp(&[(0, 1, 1), (1, 0, 1)]);
        assert_eq!(resultant(&f, &g, Var::Y).unwrap(), up(&[0, 2]));
    }

    #[test]
    fn equal_polys_vanish() {
        let f = bp(&[(2, 0, 1), (0, 2, 1), (0, 0, -2)]);
        assert!(resultant(&f, &f, Var::Y).unwrap().is_zero());
        let y = bp(&[(0, 1, 1)]);
        assert_eq!(subresultant_coeffs(&y, &y, Var::Y).unwrap(), vec![UniPoly::zero(), UniPoly::one()]);
    }

    #[test]
    fn translated_parabolas_defective() {
        let f = bp(&[(0, 2, 1), (1, 0, -1)]);
        let g = bp(&[(0, 2, 1), (1, 0, 1), (0, 0, -2)]);
        let s = subresultant_coeffs(&f, &g, Var::Y).unwrap();
        assert_eq!(s, vec![up(&[4, -8, 4]), UniPoly::zero(), UniPoly::one()]);
    }

    #[test]
    fn constant_in_var() {
        let f = bp(&[(1, 0, 1), (0, 0, -1)]);
        let g = bp(&[(2, 0, 1)]);
        assert_eq!(resultant(&f, &g, Var::Y), Err(Error::BadVar));
        // Res_y(y - x^2, y) = x^2 and Res_x(y - x^2, y) = y^2
        let f = bp(&[(0, 1, 1), (2, 0, -1)]);
        let g = bp(&[(0, 1, 1)]);
        assert_eq!(resultant(&f, &g, Var::Y).unwrap(), up(&[0, 0, 1]));
        assert_eq!(resultant(&f, &g, Var::X).unwrap(), up(&[0, 0, 1]));
    }

    #[test]
    fn swapped_order_sign() {
        // Res(F, G) = (-1)^(pq) Res(G, F)
        let f = bp(&[(0, 2, 1), (1, 1, 3), (0, 0, -1)]);
        let g = bp(&[(0, 3, 2), (2, 0, 1), (0, 1, 1)]);
        let r1 = resultant(&f, &g, Var::Y).unwrap();
        let r2 = resultant(&g, &f, Var::Y).unwrap();
        assert_eq!(r1, r2);
        let a = bp(&[(0, 1, 1), (1, 0, 1)]);
        let b = bp(&[(0, 1, 2), (0, 0, -3)]);
        assert_eq!(resultant(&a, &b, Var::Y).unwrap(), -resultant(&b, &a, Var::Y).unwrap());
    }
}
