//! Exact univariate and bivariate integer polynomials: evaluation (exact,
//! interval and batched), gcd, square-free part, resultants and principal
//! subresultant coefficients.

mod bi;
pub(crate) mod modular;
mod multipoint;
mod recursive;
mod subres;
mod uni;

use core::fmt;

pub use bi::BiPoly;
pub(crate) use bi::eval_box_coeffs;
pub use multipoint::{multipoint_eval, SubproductTree, HORNER_CROSSOVER};
pub(crate) use recursive::RecPoly;
pub use subres::{resultant, subresultant_coeffs};
pub use uni::{gcd_uni, squarefree_part, UniPoly};

use crate::arith::Integer;
use num_traits::{One, Signed};

/// Polynomial variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
        }
    }
}

/// Degree and coefficient size of a polynomial: `n` is the total degree and
/// `tau` the smallest `t` with `max |coeff| < 2^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Magnitude {
    pub n: u32,
    pub tau: u64,
}

/// Writes terms `(coeff, x-exp, y-exp)` in the parser's grammar.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Integer, u32, u32)>,
) -> fmt::Result {
    let mut first = true;
    for (c, i, j) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let mut wrote = false;
        if !abs.is_one() || (i == 0 && j == 0) {
            write!(f, "{abs}")?;
            wrote = true;
        }
        for (name, e) in [("x", i), ("y", j)] {
            if e == 0 {
                continue;
            }
            if wrote {
                f.write_str("*")?;
            }
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            wrote = true;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
