//! Batched exact evaluation at many rational points by remaindering down a
//! subproduct tree.
//!
//! Points are put over a common denominator `L`, so every point is an
//! integer `A_i = L q_i` and `p(q_i) = P(A_i) / L^n` with
//! `P(x) = L^n p(x / L)`. All moduli in the tree are then monic integer
//! polynomials and every remainder is exact in `Z[x]`. Points whose
//! denominators do not divide one another get separate trees, which keeps
//! `L` from growing into the lcm of unrelated denominators; integer and
//! dyadic points always share one tree.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer as _;
use num_traits::{One, Zero};

use super::UniPoly;
use crate::arith::{Integer, Rational};

/// Below this many points `multipoint_eval` uses repeated Horner evaluation.
pub const HORNER_CROSSOVER: usize = 32;

/// Products of the linear forms `x - A_i` of a fixed point set, leaves first.
#[derive(Clone, Debug)]
pub struct SubproductTree {
    groups: Vec<Group>,
    len: usize,
}

#[derive(Clone, Debug)]
struct Group {
    /// Common denominator of the group's points.
    den: Integer,
    /// Input positions of the points, in leaf order.
    index: Vec<usize>,
    levels: Vec<Vec<UniPoly>>,
}

impl SubproductTree {
    pub fn new(points: &[Rational]) -> Self {
        let mut groups: Vec<(Integer, Vec<usize>)> = Vec::new();
        for (i, q) in points.iter().enumerate() {
            let b = q.denom();
            match groups.iter_mut().find(|(l, _)| l.is_multiple_of(b) || b.is_multiple_of(l)) {
                Some((l, idx)) => {
                    if !l.is_multiple_of(b) {
                        *l = b.clone();
                    }
                    idx.push(i);
                }
                None => groups.push((b.clone(), vec![i])),
            }
        }
        let groups = groups
            .into_iter()
            .map(|(den, index)| {
                let leaves = index
                    .iter()
                    .map(|&i| {
                        let q = &points[i];
                        let a = q.numer() * (&den / q.denom());
                        UniPoly::new(vec![-a, Integer::one()])
                    })
                    .collect();
                let mut levels = vec![leaves];
                while levels.last().is_some_and(|l: &Vec<UniPoly>| l.len() > 1) {
                    let prev = levels.last().expect("nonempty");
                    let next = prev
                        .chunks(2)
                        .map(|c| if c.len() == 2 { &c[0] * &c[1] } else { c[0].clone() })
                        .collect();
                    levels.push(next);
                }
                Group { den, index, levels }
            })
            .collect();
        SubproductTree {
            groups,
            len: points.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Exact values of `p` at every point, in input order.
    pub fn eval(&self, p: &UniPoly) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.len];
        let Some(n) = p.degree() else {
            return out;
        };
        for g in &self.groups {
            let scaled = if g.den.is_one() {
                p.coeffs().to_vec()
            } else {
                let mut pow = Integer::one();
                let mut c = p.coeffs().to_vec();
                for ci in c.iter_mut().rev().skip(1) {
                    pow *= &g.den;
                    *ci *= &pow;
                }
                c
            };
            let scale = num_traits::pow(g.den.clone(), n);
            let mut vals = Vec::with_capacity(g.index.len());
            g.descend(g.levels.len() - 1, 0, scaled, &mut vals);
            for (&i, v) in g.index.iter().zip(vals) {
                out[i] = Rational::new(v, scale.clone());
            }
        }
        out
    }
}

impl Group {
    fn descend(&self, level: usize, idx: usize, f: Vec<Integer>, out: &mut Vec<Integer>) {
        let r = rem_monic(f, self.levels[level][idx].coeffs());
        if level == 0 {
            out.push(r.into_iter().next().unwrap_or_default());
            return;
        }
        let below = self.levels[level - 1].len();
        let right = 2 * idx + 1;
        if right < below {
            self.descend(level - 1, 2 * idx, r.clone(), out);
            self.descend(level - 1, right, r, out);
        } else {
            self.descend(level - 1, 2 * idx, r, out);
        }
    }
}

/// `f mod m` for monic `m`, on coefficient vectors.
fn rem_monic(mut f: Vec<Integer>, m: &[Integer]) -> Vec<Integer> {
    let dm = m.len() - 1;
    while f.len() > dm {
        let top = f.len() - 1;
        let lead = f.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let off = top - dm;
        for (i, mc) in m[..dm].iter().enumerate() {
            if !mc.is_zero() {
                f[off + i] -= &lead * mc;
            }
        }
    }
    f
}

/// Exact values `p(points[i])`, bit-identical to [`UniPoly::eval_point`].
/// Uses the subproduct tree from [`HORNER_CROSSOVER`] points upward.
pub fn multipoint_eval(p: &UniPoly, points: &[Rational]) -> Vec<Rational> {
    if points.len() < HORNER_CROSSOVER || p.degree().is_none_or(|d| d == 0) {
        return points.iter().map(|q| p.eval_point(q)).collect();
    }
    SubproductTree::new(points).eval(p)
}
