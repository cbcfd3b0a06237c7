//! Polynomials in a main variable with coefficients in `Z[t]`, the view used
//! by pseudo-remainder sequences and bivariate gcds.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Neg, Sub};

use super::{gcd_uni, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RecPoly {
    coeffs: Vec<UniPoly>,
}

impl RecPoly {
    pub(crate) fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        RecPoly { coeffs }
    }

    pub(crate) fn zero() -> Self {
        RecPoly { coeffs: Vec::new() }
    }

    pub(crate) fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub(crate) fn into_coeffs(self) -> Vec<UniPoly> {
        self.coeffs
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn lc(&self) -> &UniPoly {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Coefficient of `main^i`, owned (zero past the degree).
    pub(crate) fn coeff(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub(crate) fn mul_uni(&self, c: &UniPoly) -> RecPoly {
        if c.is_zero() {
            return RecPoly::zero();
        }
        RecPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`; `None` if some division is inexact.
    pub(crate) fn div_uni_exact(&self, c: &UniPoly) -> Option<RecPoly> {
        if c.degree() == Some(0) {
            let k = c.lc();
            if self.coeffs.iter().any(|a| a.coeffs().iter().any(|x| (x % k) != 0.into())) {
                return None;
            }
            return Some(RecPoly {
                coeffs: self.coeffs.iter().map(|a| a.div_scalar_exact(k)).collect(),
            });
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.div_exact(c)?);
        }
        Some(RecPoly { coeffs: out })
    }

    /// `lc(d)^(deg self - deg d + 1) * self mod d`, over `Z[t]`.
    pub(crate) fn pseudo_rem(&self, d: &RecPoly) -> RecPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let Some(da) = self.degree() else {
            return RecPoly::zero();
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
                *c = &*c * lcd;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[off + i] = &r[off + i] - &(&lr * dc);
            }
            debug_assert!(r[top].is_zero());
            r.pop();
            while r.last().is_some_and(UniPoly::is_zero) {
                r.pop();
            }
            steps += 1;
        }
        let missing = (da - dd + 1) as u32 - steps;
        let r = RecPoly::new(r);
        if missing > 0 {
            r.mul_uni(&lcd.pow(missing))
        } else {
            r
        }
    }

    /// Exact quotient in `Z[t][main]`, or `None` if `d` does not divide.
    pub(crate) fn div_exact(&self, d: &RecPoly) -> Option<RecPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(da) = self.degree() else {
            return Some(RecPoly::zero());
        };
        if da < dd {
            return None;
        }
        let lcd = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![UniPoly::zero(); da - dd + 1];
        for k in (0..=da - dd).rev() {
            let top = k + dd;
            if r[top].is_zero() {
                continue;
            }
            let qk = r[top].div_exact(lcd)?;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&qk * dc);
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(RecPoly::new(q))
    }

    /// Primitive gcd (over `Z[t]`) of the coefficients.
    pub(crate) fn content(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for c in &self.coeffs {
            g = gcd_uni(&g, c);
            if g.degree() == Some(0) {
                break;
            }
        }
        g
    }

    /// Removes the `Z[t]`-content and the integer content.
    pub(crate) fn primitive_part(&self) -> RecPoly {
        if self.is_zero() {
            return RecPoly::zero();
        }
        let c = self.content();
        let mut out = if c.degree() == Some(0) {
            self.clone()
        } else {
            self.div_uni_exact(&c).expect("content divides")
        };
        let mut ic = num_traits::Zero::zero();
        for a in &out.coeffs {
            ic = num_integer::Integer::gcd(&ic, &a.content());
        }
        if ic != num_traits::One::one() {
            out = out.div_uni_exact(&UniPoly::constant(ic)).expect("content divides");
        }
        out
    }
}

/// Gcd in `Z[t][main]` of two primitive polynomials, by the primitive
/// remainder sequence. The result is primitive; its sign is unspecified.
pub(crate) fn gcd_primitive(a: &RecPoly, b: &RecPoly) -> RecPoly {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if b.is_zero() {
        return a;
    }
    loop {
        if b.degree() == Some(0) {
            return RecPoly::new(vec![UniPoly::one()]);
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b;
        }
        a = b;
        b = r.primitive_part();
    }
}

impl Sub for &RecPoly {
    type Output = RecPoly;
    fn sub(self, rhs: &RecPoly) -> RecPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = self.coeffs.clone();
        out.resize(n, UniPoly::zero());
        for (o, c) in out.iter_mut().zip(&rhs.coeffs) {
            *o = &*o - c;
        }
        RecPoly::new(out)
    }
}

impl Neg for &RecPoly {
    type Output = RecPoly;
    fn neg(self) -> RecPoly {
        RecPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
