//! Independent oracles shared by the integration tests. Nothing here calls
//! the solver's own resultant, gcd or isolation code.

#![allow(dead_code)]

use bisolve_core::arith::{Integer, Rational};
use bisolve_core::poly::{BiPoly, UniPoly};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

/// Dense polynomial in one variable as a plain coefficient vector.
pub type Coeffs = Vec<Integer>;

fn trim(mut a: Coeffs) -> Coeffs {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn add(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut out = vec![Integer::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn neg(a: &Coeffs) -> Coeffs {
    a.iter().map(|c| -c).collect()
}

fn mul(a: &Coeffs, b: &Coeffs) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Coefficients of `f` in `y`, each a polynomial in `x`.
pub fn y_columns(f: &BiPoly) -> Vec<Coeffs> {
    let dy = f.deg_y() as usize;
    let mut cols = vec![Vec::new(); dy + 1];
    for (&(i, j), c) in f.terms() {
        let col: &mut Coeffs = &mut cols[j as usize];
        if col.len() <= i as usize {
            col.resize(i as usize + 1, Integer::zero());
        }
        col[i as usize] = c.clone();
    }
    cols.into_iter().map(trim).collect()
}

/// Determinant of a square matrix over `Z[x]` by Laplace expansion along the
/// rows, memoised over the set of columns already used.
pub fn det(m: &[Vec<Coeffs>]) -> Coeffs {
    let n = m.len();
    if n == 0 {
        return vec![Integer::one()];
    }
    assert!(n <= 20);
    // minors[mask] = det of rows n-|mask|.. restricted to the columns in mask
    let mut minors: Vec<Option<Coeffs>> = vec![None; 1 << n];
    minors[0] = Some(vec![Integer::one()]);
    for mask in 1usize..(1 << n) {
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = Vec::new();
        let mut sign_pos = true;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let sub = minors[mask & !(1 << col)].as_ref().expect("filled");
            let term = mul(&m[row][col], sub);
            acc = if sign_pos { add(&acc, &term) } else { add(&acc, &neg(&term)) };
            sign_pos = !sign_pos;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().expect("filled")
}

/// The principal subresultant coefficient `sres_j` of `f`, `g` in `y`, as the
/// determinant of the first `p + q - 2j` columns of the rows
/// `y^(q-j-1) f, ..., f, y^(p-j-1) g, ..., g`.
pub fn sres_oracle(f: &BiPoly, g: &BiPoly, j: usize) -> UniPoly {
    let fc = y_columns(f);
    let gc = y_columns(g);
    let p = fc.len() - 1;
    let q = gc.len() - 1;
    let size = p + q - 2 * j;
    if size == 0 {
        return UniPoly::one();
    }
    let top = p + q - j - 1;
    let mut rows = Vec::new();
    for (src, deg, count) in [(&fc, p, q - j), (&gc, q, p - j)] {
        for s in (0..count).rev() {
            // y^s * src; column c holds the coefficient of y^(top - c)
            let row: Vec<Coeffs> = (0..size)
                .map(|c| {
                    let e = top - c;
                    if e >= s && e - s <= deg {
                        src[e - s].clone()
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            rows.push(row);
        }
    }
    UniPoly::new(det(&rows))
}

/// Sylvester resultant in `y`. Requires `deg_y f, deg_y g >= 1` or one of them.
pub fn resultant_oracle(f: &BiPoly, g: &BiPoly) -> UniPoly {
    sres_oracle(f, g, 0)
}

pub fn random_dense<R: Rng>(rng: &mut R, n: u32, bound: i64) -> BiPoly {
    let mut terms = Vec::new();
    for i in 0..=n {
        for j in 0..=(n - i) {
            terms.push(((i, j), Integer::from(rng.random_range(-bound..=bound))));
        }
    }
    BiPoly::from_terms(terms)
}

/// Random polynomial with total degree at most `n`, some terms dropped.
pub fn random_sparse<R: Rng>(rng: &mut R, n: u32, bound: i64) -> BiPoly {
    let mut terms = Vec::new();
    for i in 0..=n {
        for j in 0..=(n - i) {
            if rng.random_bool(0.6) {
                terms.push(((i, j), Integer::from(rng.random_range(-bound..=bound))));
            }
        }
    }
    BiPoly::from_terms(terms)
}

pub fn product_of_roots(roots: &[i64]) -> UniPoly {
    roots
        .iter()
        .fold(UniPoly::one(), |acc, &r| &acc * &UniPoly::from_i64s(&[-r, 1]))
}

/// A system whose real solutions are exactly the given points (distinct
/// x-coordinates), all simple: `F = D y - D L(x)` with `L` interpolating the
/// points and `G = prod (x - a_i) + F * R` for a random `R`.
pub fn planted_system<R: Rng>(rng: &mut R, pts: &[(i64, i64)]) -> (BiPoly, BiPoly) {
    // Lagrange interpolation over Q, then clear denominators
    let n = pts.len();
    let mut l = vec![Rational::zero(); n];
    for (i, &(ai, bi)) in pts.iter().enumerate() {
        let mut basis = vec![Rational::one()];
        let mut den = Rational::one();
        for (j, &(aj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * Rational::from_integer(aj.into());
            }
            basis = next;
            den *= Rational::from_integer((ai - aj).into());
        }
        for (k, c) in basis.iter().enumerate() {
            l[k] += c * Rational::from_integer(bi.into()) / &den;
        }
    }
    let d = l.iter().fold(Integer::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
    let mut terms = vec![((0, 1), d.clone())];
    for (k, c) in l.iter().enumerate() {
        let v = -(c * Rational::from_integer(d.clone())).to_integer();
        terms.push(((k as u32, 0), v));
    }
    let f = BiPoly::from_terms(terms);
    let prod = pts
        .iter()
        .fold(BiPoly::constant(Integer::one()), |acc, &(a, _)| {
            &acc * &BiPoly::from_i64_terms(&[(1, 0, 1), (0, 0, -a)])
        });
    let r = random_sparse(rng, 1, 3);
    let g = &prod + &(&f * &r);
    (f, g)
}

pub fn f64_eval(f: &BiPoly, x: f64, y: f64) -> f64 {
    f.terms()
        .map(|(&(i, j), c)| c.to_f64().unwrap() * x.powi(i as i32) * y.powi(j as i32))
        .sum()
}

/// Approximate real solutions found by sampling sign changes on a grid over
/// `[-r, r]^2` and polishing with Newton's method in `f64`. Only roots where
/// the Jacobian is comfortably nonsingular are returned.
pub fn sampled_solutions(f: &BiPoly, g: &BiPoly, r: f64, cells: usize) -> Vec<(f64, f64)> {
    let fx = f.partial(bisolve_core::poly::Var::X);
    let fy = f.partial(bisolve_core::poly::Var::Y);
    let gx = g.partial(bisolve_core::poly::Var::X);
    let gy = g.partial(bisolve_core::poly::Var::Y);
    let h = 2.0 * r / cells as f64;
    let at = |k: usize| -r + h * k as f64;
    let mut found: Vec<(f64, f64)> = Vec::new();
    let fv: Vec<Vec<f64>> = (0..=cells).map(|i| (0..=cells).map(|j| f64_eval(f, at(i), at(j))).collect()).collect();
    let gv: Vec<Vec<f64>> = (0..=cells).map(|i| (0..=cells).map(|j| f64_eval(g, at(i), at(j))).collect()).collect();
    let changes = |v: &Vec<Vec<f64>>, i: usize, j: usize| {
        let s = [v[i][j], v[i + 1][j], v[i][j + 1], v[i + 1][j + 1]];
        s.iter().any(|&a| a <= 0.0) && s.iter().any(|&a| a >= 0.0)
    };
    for i in 0..cells {
        for j in 0..cells {
            if !(changes(&fv, i, j) && changes(&gv, i, j)) {
                continue;
            }
            let (mut x, mut y) = (at(i) + h / 2.0, at(j) + h / 2.0);
            let mut ok = false;
            for _ in 0..60 {
                let (a, b) = (f64_eval(f, x, y), f64_eval(g, x, y));
                let (j11, j12) = (f64_eval(&fx, x, y), f64_eval(&fy, x, y));
                let (j21, j22) = (f64_eval(&gx, x, y), f64_eval(&gy, x, y));
                let det = j11 * j22 - j12 * j21;
                if det.abs() < 1e-12 {
                    break;
                }
                let dx = (j22 * a - j12 * b) / det;
                let dy = (-j21 * a + j11 * b) / det;
                x -= dx;
                y -= dy;
                if dx.abs() + dy.abs() < 1e-14 * (1.0 + x.abs() + y.abs()) {
                    ok = true;
                    break;
                }
            }
            if !ok || x.abs() > r || y.abs() > r {
                continue;
            }
            let scale = 1.0 + x.abs() + y.abs();
            if found.iter().all(|&(u, v)| (u - x).abs() + (v - y).abs() > 1e-7 * scale) {
                found.push((x, y));
            }
        }
    }
    found
}

/// Whether `(x, y)` lies in the box widened by `tol`.
pub fn near_box(b: &bisolve_core::bisolve::CandidateBox, x: f64, y: f64, tol: f64) -> bool {
    let (xi, yi) = (b.x_interval(), b.y_interval());
    xi.lo().to_f64() - tol <= x && x <= xi.hi().to_f64() + tol && yi.lo().to_f64() - tol <= y && y <= yi.hi().to_f64() + tol
}

pub fn abs_max(p: &UniPoly) -> Integer {
    p.coeffs().iter().map(Signed::abs).max().unwrap_or_default()
}
