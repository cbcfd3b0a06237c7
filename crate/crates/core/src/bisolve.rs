//! The solver: preprocessing, projection by resultants, the candidate grid,
//! and the validation rounds that decide every grid cell.
//!
//! A cell is decided by one of three predicates:
//!
//! * exclusion: interval evaluation of `F` or `G` over the cell misses zero;
//! * interval Newton: the Newton image lies strictly inside the cell, so the
//!   cell holds exactly one solution and it is simple;
//! * fiber counting: `k = min { i >= 1 : sres_i(alpha) != 0 }` bounds the
//!   number of solutions above `alpha`, which closes tangential fibers and
//!   fibers whose solutions are already all certified.
//!
//! Cells that survive `max_depth` refinement rounds are reported as
//! undecided, never dropped.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::arith::{ceil_log2_abs, Dyadic, DyadicInterval, Rational};
use crate::isolate::{descartes_count, isolate_real_roots, IsolatingInterval};
use crate::poly::{
    eval_box_coeffs, gcd_uni, multipoint_eval, resultant, squarefree_part, subresultant_coeffs, BiPoly, Magnitude,
    UniPoly, Var, HORNER_CROSSOVER,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoxStatus {
    Pending,
    Excluded,
    /// Certified by interval Newton: exactly one solution, and it is simple.
    CertifiedUnique,
    /// Certified by the fiber count: exactly one solution.
    CertifiedFiber,
    Undecided,
}

impl BoxStatus {
    pub fn code(self) -> &'static str {
        match self {
            BoxStatus::Pending => "PENDING",
            BoxStatus::Excluded => "EXCLUDED",
            BoxStatus::CertifiedUnique => "CERTIFIED_UNIQUE",
            BoxStatus::CertifiedFiber => "CERTIFIED_FIBER",
            BoxStatus::Undecided => "UNDECIDED",
        }
    }

    pub fn is_certified(self) -> bool {
        matches!(self, BoxStatus::CertifiedUnique | BoxStatus::CertifiedFiber)
    }
}

impl fmt::Display for BoxStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Why an undecided box could not be decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Annotation {
    /// Both leading coefficients in `y` vanish at the box's x-coordinate, so
    /// the fiber count is unavailable.
    LeadingCoeffDegeneracy,
}

impl Annotation {
    pub fn code(self) -> &'static str {
        match self {
            Annotation::LeadingCoeffDegeneracy => "LEADING_COEFF_DEGENERACY",
        }
    }
}

/// A cell of the grid: a root of `R_x` times a root of `R_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateBox {
    pub ix: IsolatingInterval,
    pub iy: IsolatingInterval,
    /// Position of the x-root among the sorted real roots of `R_x`.
    pub x_index: usize,
    pub y_index: usize,
    pub status: BoxStatus,
    /// Refinement rounds applied before the box was decided.
    pub depth: u32,
    pub annotation: Option<Annotation>,
}

impl CandidateBox {
    pub fn x_interval(&self) -> DyadicInterval {
        self.ix.interval()
    }

    pub fn y_interval(&self) -> DyadicInterval {
        self.iy.interval()
    }

    /// Whether the closed box contains the point `(x, y)`.
    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        self.x_interval().contains_rational(x) && self.y_interval().contains_rational(y)
    }
}

/// The solutions above one root `alpha` of `R_x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberInfo {
    pub alpha: IsolatingInterval,
    /// Degree of `gcd(F(alpha, y), G(alpha, y))`; `None` when degenerate.
    pub k: Option<u32>,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveConfig {
    /// Maximum number of refinement rounds.
    pub max_depth: u32,
    /// Width every isolating interval is refined to before validation.
    pub target_width: Rational,
    /// Batch the per-round sign evaluations through [`multipoint_eval`].
    pub fast_eval: bool,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            max_depth: 64,
            target_width: Rational::new(1.into(), (1u32 << 16).into()),
            fast_eval: false,
        }
    }
}

/// Wall-clock time per phase, in milliseconds. All zero under [`NoClock`].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Timings {
    pub project_ms: f64,
    pub isolate_ms: f64,
    pub validate_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveStats {
    pub f: Magnitude,
    pub g: Magnitude,
    /// Magnitudes of the full resultants `Res_y(F, G)` and `Res_x(F, G)`.
    pub rx: Magnitude,
    pub ry: Magnitude,
    pub rx_sf_degree: usize,
    pub ry_sf_degree: usize,
    pub rx_roots: usize,
    pub ry_roots: usize,
    pub candidates: usize,
    pub excluded: usize,
    pub certified_unique: usize,
    pub certified_fiber: usize,
    pub undecided: usize,
    /// Largest box depth at decision time.
    pub max_depth: u32,
    /// Refinement rounds run.
    pub rounds: u32,
    /// Smallest gap between consecutive final x-intervals, a lower bound on
    /// the separation of the real roots of `R_x`. `None` with fewer than two.
    pub min_sep_lower_bound: Option<Dyadic>,
    pub timings: Timings,
}

/// One step of the validation log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Excluded {
        box_index: usize,
        round: u32,
    },
    NewtonCertified {
        box_index: usize,
        round: u32,
    },
    FiberComputed {
        x_index: usize,
        k: Option<u32>,
        degenerate: bool,
    },
    /// `k = 1` and exactly one box of the fiber was not excluded.
    RuleA {
        x_index: usize,
        box_index: usize,
        k: u32,
        non_excluded: usize,
        round: u32,
    },
    /// `k` boxes of the fiber were Newton-certified; the rest were excluded.
    RuleB {
        x_index: usize,
        k: u32,
        excluded: Vec<usize>,
        round: u32,
    },
    Undecided {
        box_index: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    /// Certified boxes in grid order.
    pub solutions: Vec<CandidateBox>,
    pub undecided: Vec<CandidateBox>,
    pub stats: SolveStats,
    pub trace: Vec<TraceEvent>,
}

/// Source of timestamps in milliseconds. The core crate has no clock of its
/// own; see [`NoClock`].
pub trait Clock {
    fn now_ms(&self) -> f64;
}

/// A clock that always reads zero.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoClock;

impl Clock for NoClock {
    fn now_ms(&self) -> f64 {
        0.0
    }
}

/// Makes both inputs primitive and square-free and checks that they share no
/// nonconstant factor.
pub fn preprocess(f: &BiPoly, g: &BiPoly) -> Result<(BiPoly, BiPoly)> {
    let p = prepare(f, g)?;
    Ok((p.f, p.g))
}

/// `R_x = Res_y(F, G)` and `R_y = Res_x(F, G)`. When both inputs are constant
/// in the eliminated variable, the other resultant (a constant) stands in,
/// since a coprime pair of that shape has no common zero.
pub fn project(f: &BiPoly, g: &BiPoly) -> Result<(UniPoly, UniPoly)> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPoly);
    }
    if f.total_degree() == 0 || g.total_degree() == 0 {
        return Ok((UniPoly::one(), UniPoly::one()));
    }
    let r = |v: Var| {
        if f.degree_in(v) == 0 && g.degree_in(v) == 0 {
            resultant(f, g, v.other())
        } else {
            resultant(f, g, v)
        }
    };
    Ok((r(Var::Y)?, r(Var::X)?))
}

/// Cartesian product of the two root lists, all pending, x-major.
pub fn build_candidates(rx_roots: &[IsolatingInterval], ry_roots: &[IsolatingInterval]) -> Vec<CandidateBox> {
    let mut out = Vec::with_capacity(rx_roots.len() * ry_roots.len());
    for (i, ix) in rx_roots.iter().enumerate() {
        for (j, iy) in ry_roots.iter().enumerate() {
            out.push(CandidateBox {
                ix: ix.clone(),
                iy: iy.clone(),
                x_index: i,
                y_index: j,
                status: BoxStatus::Pending,
                depth: 0,
                annotation: None,
            });
        }
    }
    out
}

/// True if `F` or `G` provably has no zero in the box.
pub fn exclude_box(f: &BiPoly, g: &BiPoly, bx: &CandidateBox) -> bool {
    let (x, y) = (bx.x_interval(), bx.y_interval());
    !f.eval_box(&x, &y).contains_zero() || !g.eval_box(&x, &y).contains_zero()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NewtonResult {
    CertifiedUnique,
    Unknown,
}

/// One interval Newton step on the box, with strict interior containment.
/// A box with a point coordinate has no interior and is never certified
/// here; the solver widens such coordinates first.
pub fn newton_certify(f: &BiPoly, g: &BiPoly, bx: &CandidateBox) -> NewtonResult {
    let sys = System::new(f, g);
    if sys.newton(&bx.x_interval(), &bx.y_interval()) {
        NewtonResult::CertifiedUnique
    } else {
        NewtonResult::Unknown
    }
}

/// Fiber count above the root of `rx_sf` isolated by `alpha`.
pub fn fiber_gcd_degree(f: &BiPoly, g: &BiPoly, rx_sf: &UniPoly, alpha: &IsolatingInterval) -> FiberInfo {
    FiberCtx::new(f, g).info(rx_sf, alpha)
}

/// Which fiber rule fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberRule {
    /// The box at this position was certified.
    A(usize),
    /// The boxes at these positions were excluded.
    B(Vec<usize>),
}

/// Applies the fiber rules to the boxes above `fiber.alpha`:
///
/// * rule A: `k = 1` and exactly one box is not excluded; it holds the only
///   solution of the fiber and becomes [`BoxStatus::CertifiedFiber`];
/// * rule B: exactly `k` boxes are [`BoxStatus::CertifiedUnique`]; they
///   exhaust the fiber and the remaining pending boxes are excluded.
///
/// Does nothing for degenerate fibers or when neither premise holds.
pub fn fiber_filter(fiber: &FiberInfo, boxes: &mut [CandidateBox]) -> Option<FiberRule> {
    let k = match fiber.k {
        Some(k) if !fiber.degenerate => k as usize,
        _ => return None,
    };
    let alive: Vec<usize> = (0..boxes.len())
        .filter(|&i| boxes[i].status != BoxStatus::Excluded)
        .collect();
    if k == 1 && alive.len() == 1 && boxes[alive[0]].status == BoxStatus::Pending {
        boxes[alive[0]].status = BoxStatus::CertifiedFiber;
        return Some(FiberRule::A(alive[0]));
    }
    let unique = boxes.iter().filter(|b| b.status == BoxStatus::CertifiedUnique).count();
    let pending: Vec<usize> = alive
        .into_iter()
        .filter(|&i| boxes[i].status == BoxStatus::Pending)
        .collect();
    if unique == k && !pending.is_empty() {
        for &i in &pending {
            boxes[i].status = BoxStatus::Excluded;
        }
        return Some(FiberRule::B(pending));
    }
    None
}

pub fn solve(f: &BiPoly, g: &BiPoly, config: &SolveConfig) -> Result<SolveReport> {
    solve_with_clock(f, g, config, &NoClock)
}

/// [`solve`] with phase timings read from `clock`.
///
/// # Panics
///
/// Panics if `config.target_width` is not positive.
pub fn solve_with_clock(f: &BiPoly, g: &BiPoly, config: &SolveConfig, clock: &dyn Clock) -> Result<SolveReport> {
    assert!(config.target_width.is_positive(), "target width must be positive");
    let mag_f = f.magnitude()?;
    let mag_g = g.magnitude()?;

    let t0 = clock.now_ms();
    let prep = prepare(f, g)?;
    let t1 = clock.now_ms();

    let rx_sf = squarefree_part(&prep.rx)?;
    let ry_sf = squarefree_part(&prep.ry)?;
    let halo = {
        let k = ceil_log2_abs(&config.target_width).expect("positive");
        Dyadic::pow2(k - 2)
    };
    let mut xs = Roots::new(&rx_sf, halo.clone())?;
    let mut ys = Roots::new(&ry_sf, halo)?;
    if !xs.is_empty() && !ys.is_empty() {
        xs.refine_to(&config.target_width, config.fast_eval);
        ys.refine_to(&config.target_width, config.fast_eval);
    }
    let t2 = clock.now_ms();

    let mut v = Validator {
        polys: (&prep.f, &prep.g),
        sys: System::new(&prep.f, &prep.g),
        fiber_ctx: None,
        fibers: vec![None; xs.len()],
        boxes: build_candidates(&xs.ivs(), &ys.ivs()),
        ny: ys.len(),
        trace: Vec::new(),
    };
    let rounds = v.run(&mut xs, &mut ys, &rx_sf, config);
    let t3 = clock.now_ms();

    let mut stats = SolveStats {
        f: mag_f,
        g: mag_g,
        rx: prep.rx.magnitude()?,
        ry: prep.ry.magnitude()?,
        rx_sf_degree: rx_sf.degree().unwrap_or(0),
        ry_sf_degree: ry_sf.degree().unwrap_or(0),
        rx_roots: xs.len(),
        ry_roots: ys.len(),
        candidates: v.boxes.len(),
        excluded: 0,
        certified_unique: 0,
        certified_fiber: 0,
        undecided: 0,
        max_depth: 0,
        rounds,
        min_sep_lower_bound: xs
            .roots
            .windows(2)
            .map(|w| &w[1].iv.lo - &w[0].iv.hi)
            .min(),
        timings: Timings {
            project_ms: t1 - t0,
            isolate_ms: t2 - t1,
            validate_ms: t3 - t2,
        },
    };
    let mut solutions = Vec::new();
    let mut undecided = Vec::new();
    for b in v.boxes {
        stats.max_depth = stats.max_depth.max(b.depth);
        match b.status {
            BoxStatus::Excluded => stats.excluded += 1,
            BoxStatus::CertifiedUnique => stats.certified_unique += 1,
            BoxStatus::CertifiedFiber => stats.certified_fiber += 1,
            BoxStatus::Undecided => stats.undecided += 1,
            BoxStatus::Pending => unreachable!("pending boxes are closed after the last round"),
        }
        if b.status.is_certified() {
            solutions.push(b);
        } else if b.status == BoxStatus::Undecided {
            undecided.push(b);
        }
    }
    Ok(SolveReport {
        solutions,
        undecided,
        stats,
        trace: v.trace,
    })
}

struct Prepared {
    f: BiPoly,
    g: BiPoly,
    rx: UniPoly,
    ry: UniPoly,
}

fn prepare(f: &BiPoly, g: &BiPoly) -> Result<Prepared> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPoly);
    }
    let f = squarefree_bi(&f.primitive_part());
    let g = squarefree_bi(&g.primitive_part());
    let (rx, ry) = project(&f, &g)?;
    // a shared factor depending on y kills Res_y, one depending on x kills Res_x
    if rx.is_zero() || ry.is_zero() {
        return Err(Error::NotCoprime);
    }
    Ok(Prepared { f, g, rx, ry })
}

/// Square-free part of a primitive bivariate polynomial.
fn squarefree_bi(f: &BiPoly) -> BiPoly {
    if f.total_degree() == 0 || is_squarefree_fast(f) {
        return f.clone();
    }
    let h = f.gcd(&f.partial(Var::X)).gcd(&f.partial(Var::Y));
    if h.total_degree() == 0 {
        return f.clone();
    }
    f.div_exact(&h).expect("gcd divides").primitive_part()
}

/// Sufficient test: the `y`-content is square-free and `F(c, y)` is
/// square-free of full degree for some small integer `c`. A repeated factor
/// depending on `y` survives such a specialization, one depending only on
/// `x` divides the content.
fn is_squarefree_fast(f: &BiPoly) -> bool {
    let coeffs = f.coeffs_in(Var::Y);
    let content = coeffs.iter().fold(UniPoly::zero(), |acc, c| gcd_uni(&acc, c));
    if !content.is_constant() && !gcd_uni(&content, &content.derivative()).is_constant() {
        return false;
    }
    let lc = coeffs.last().expect("nonzero");
    for c in (0..16i64).map(|i| if i % 2 == 0 { i / 2 } else { -(i + 1) / 2 }) {
        let c = c.into();
        if lc.eval_integer(&c).is_zero() {
            continue;
        }
        let u = f.specialize(Var::X, &c);
        if gcd_uni(&u, &u.derivative()).is_constant() {
            return true;
        }
    }
    false
}

/// `F`, `G` and their partial derivatives, split by powers of `y`.
struct System {
    f: Vec<UniPoly>,
    g: Vec<UniPoly>,
    fx: Vec<UniPoly>,
    fy: Vec<UniPoly>,
    gx: Vec<UniPoly>,
    gy: Vec<UniPoly>,
}

impl System {
    fn new(f: &BiPoly, g: &BiPoly) -> Self {
        System {
            f: f.coeffs_in(Var::Y),
            g: g.coeffs_in(Var::Y),
            fx: f.partial(Var::X).coeffs_in(Var::Y),
            fy: f.partial(Var::Y).coeffs_in(Var::Y),
            gx: g.partial(Var::X).coeffs_in(Var::Y),
            gy: g.partial(Var::Y).coeffs_in(Var::Y),
        }
    }

    fn excludes(&self, bx: &DyadicInterval, by: &DyadicInterval) -> bool {
        !eval_box_coeffs(&self.f, bx, by).contains_zero() || !eval_box_coeffs(&self.g, bx, by).contains_zero()
    }

    /// `N(B) = m - J(B)^-1 (F(m), G(m))` strictly inside `B`.
    fn newton(&self, bx: &DyadicInterval, by: &DyadicInterval) -> bool {
        if bx.is_point() || by.is_point() {
            return false;
        }
        let a = eval_box_coeffs(&self.fx, bx, by);
        let b = eval_box_coeffs(&self.fy, bx, by);
        let c = eval_box_coeffs(&self.gx, bx, by);
        let d = eval_box_coeffs(&self.gy, bx, by);
        let det = &(&a * &d) - &(&b * &c);
        if det.contains_zero() {
            return false;
        }
        let (mx, my) = (bx.midpoint(), by.midpoint());
        let pm = DyadicInterval::point(mx.clone());
        let qm = DyadicInterval::point(my.clone());
        let fm = eval_box_coeffs(&self.f, &pm, &qm).lo().clone();
        let gm = eval_box_coeffs(&self.g, &pm, &qm).lo().clone();
        // adj(J) (F(m), G(m)) = (d F - b G, a G - c F)
        let u = &d.scale(&fm) - &b.scale(&gm);
        let w = &a.scale(&gm) - &c.scale(&fm);
        inside(&mx, &quotient(&u, &det), bx) && inside(&my, &quotient(&w, &det), by)
    }
}

/// Exact bounds of `{u / d : u in num, d in den}` for `den` free of zero.
fn quotient(num: &DyadicInterval, den: &DyadicInterval) -> (Rational, Rational) {
    let (nl, nh) = (num.lo().to_rational(), num.hi().to_rational());
    let (dl, dh) = (den.lo().to_rational(), den.hi().to_rational());
    let q = [&nl / &dl, &nl / &dh, &nh / &dl, &nh / &dh];
    let lo = q.iter().min().expect("four").clone();
    let hi = q.iter().max().expect("four").clone();
    (lo, hi)
}

/// `m - [q_lo, q_hi]` inside the open interval `(lo, hi)`.
fn inside(m: &Dyadic, q: &(Rational, Rational), iv: &DyadicInterval) -> bool {
    let m = m.to_rational();
    let lo = iv.lo().to_rational();
    let hi = iv.hi().to_rational();
    lo < &m - &q.1 && &m - &q.0 < hi
}

/// Subresultant data shared by all fibers.
struct FiberCtx {
    /// `sres_1, ..., sres_q` (index 0 holds `sres_0`).
    sres: Vec<UniPoly>,
    p: u32,
    lc_gcd: UniPoly,
}

impl FiberCtx {
    fn new(f: &BiPoly, g: &BiPoly) -> Self {
        let (a, b) = if f.deg_y() >= g.deg_y() { (f, g) } else { (g, f) };
        let sres = if a.deg_y() == 0 {
            Vec::new()
        } else {
            subresultant_coeffs(a, b, Var::Y).expect("degrees ordered")
        };
        FiberCtx {
            sres,
            p: a.deg_y(),
            lc_gcd: gcd_uni(&f.lc_in(Var::Y), &g.lc_in(Var::Y)),
        }
    }

    fn info(&self, rx_sf: &UniPoly, alpha: &IsolatingInterval) -> FiberInfo {
        if vanishes_at(&self.lc_gcd, rx_sf, alpha) {
            return FiberInfo {
                alpha: alpha.clone(),
                k: None,
                degenerate: true,
            };
        }
        let k = (1..self.sres.len())
            .find(|&i| !vanishes_at(&self.sres[i], rx_sf, alpha))
            .map_or(self.p, |i| i as u32);
        FiberInfo {
            alpha: alpha.clone(),
            k: Some(k),
            degenerate: false,
        }
    }
}

/// Exact zero test of `h` at the root of `rx_sf` isolated by `alpha`: the
/// root is a zero of `h` iff it is a zero of `gcd(h, rx_sf)`, whose only
/// candidate root in the interval is `alpha` and whose sign changes there.
fn vanishes_at(h: &UniPoly, rx_sf: &UniPoly, alpha: &IsolatingInterval) -> bool {
    if h.is_zero() {
        return true;
    }
    if alpha.is_exact() {
        return h.sign_at_dyadic(&alpha.lo) == 0;
    }
    let d = gcd_uni(h, rx_sf);
    if d.is_constant() {
        return false;
    }
    d.sign_at_dyadic(&alpha.lo) != d.sign_at_dyadic(&alpha.hi)
}

struct RootState {
    iv: IsolatingInterval,
    /// Sign of the polynomial at `iv.lo`.
    s_lo: i8,
    /// Half-width of the root-free neighbourhood used for Newton when the
    /// root is known exactly.
    halo: Dyadic,
    halo_checked: bool,
}

struct Roots<'a> {
    poly: &'a UniPoly,
    roots: Vec<RootState>,
}

impl<'a> Roots<'a> {
    fn new(poly: &'a UniPoly, halo: Dyadic) -> Result<Self> {
        let roots = isolate_real_roots(poly)?
            .into_iter()
            .map(|iv| RootState {
                s_lo: poly.sign_at_dyadic(&iv.lo),
                iv,
                halo: halo.clone(),
                halo_checked: false,
            })
            .collect();
        Ok(Roots { poly, roots })
    }

    fn len(&self) -> usize {
        self.roots.len()
    }

    fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    fn ivs(&self) -> Vec<IsolatingInterval> {
        self.roots.iter().map(|r| r.iv.clone()).collect()
    }

    fn refine_to(&mut self, target: &Rational, fast: bool) {
        loop {
            let idx: Vec<usize> = (0..self.roots.len())
                .filter(|&i| !self.roots[i].iv.is_exact() && self.roots[i].iv.width().cmp_rational(target).is_gt())
                .collect();
            if idx.is_empty() {
                return;
            }
            self.bisect(&idx, fast);
        }
    }

    /// One bisection of each listed root; exact roots shrink their halo.
    fn bisect(&mut self, idx: &[usize], fast: bool) {
        let open: Vec<usize> = idx.iter().copied().filter(|&i| !self.roots[i].iv.is_exact()).collect();
        let mids: Vec<Dyadic> = open.iter().map(|&i| self.roots[i].iv.midpoint()).collect();
        let signs: Vec<i8> = if fast && mids.len() >= HORNER_CROSSOVER {
            let pts: Vec<Rational> = mids.iter().map(Dyadic::to_rational).collect();
            multipoint_eval(self.poly, &pts)
                .iter()
                .map(|v| if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 })
                .collect()
        } else {
            mids.iter().map(|m| self.poly.sign_at_dyadic(m)).collect()
        };
        for ((&i, m), s) in open.iter().zip(mids).zip(signs) {
            let r = &mut self.roots[i];
            if s == 0 {
                r.iv = IsolatingInterval::exact(m, r.iv.poly_id);
            } else if s == r.s_lo {
                r.iv.lo = m;
            } else {
                r.iv.hi = m;
            }
        }
        for &i in idx {
            let r = &mut self.roots[i];
            if r.iv.is_exact() {
                r.halo = r.halo.half();
            }
        }
    }

    /// The interval Newton should use for root `i`: the isolating interval,
    /// or for an exact root a neighbourhood checked to hold no other root.
    fn newton_interval(&mut self, i: usize) -> DyadicInterval {
        let r = &mut self.roots[i];
        if !r.iv.is_exact() {
            return r.iv.interval();
        }
        let a = r.iv.lo.clone();
        if !r.halo_checked {
            loop {
                let lo = &a - &r.halo;
                let hi = &a + &r.halo;
                let clean = self.poly.sign_at_dyadic(&lo) != 0
                    && self.poly.sign_at_dyadic(&hi) != 0
                    && descartes_count(self.poly, &DyadicInterval::new(lo, a.clone())) == Ok(0)
                    && descartes_count(self.poly, &DyadicInterval::new(a.clone(), hi)) == Ok(0);
                if clean {
                    break;
                }
                r.halo = r.halo.half();
            }
            r.halo_checked = true;
        }
        DyadicInterval::new(&a - &r.halo, &a + &r.halo)
    }
}

struct Validator<'p> {
    polys: (&'p BiPoly, &'p BiPoly),
    sys: System,
    fiber_ctx: Option<FiberCtx>,
    fibers: Vec<Option<FiberInfo>>,
    boxes: Vec<CandidateBox>,
    ny: usize,
    trace: Vec<TraceEvent>,
}

impl Validator<'_> {
    /// Runs rounds until nothing is pending or `max_depth` refinements have
    /// been made; returns the number of refinement rounds.
    fn run(&mut self, xs: &mut Roots<'_>, ys: &mut Roots<'_>, rx_sf: &UniPoly, config: &SolveConfig) -> u32 {
        let mut round = 0;
        loop {
            for i in 0..self.boxes.len() {
                let b = &self.boxes[i];
                if b.status == BoxStatus::Pending && self.sys.excludes(&b.x_interval(), &b.y_interval()) {
                    self.boxes[i].status = BoxStatus::Excluded;
                    self.trace.push(TraceEvent::Excluded { box_index: i, round });
                }
            }
            for i in 0..self.boxes.len() {
                if self.boxes[i].status != BoxStatus::Pending {
                    continue;
                }
                let bx = xs.newton_interval(self.boxes[i].x_index);
                let by = ys.newton_interval(self.boxes[i].y_index);
                if self.sys.newton(&bx, &by) {
                    self.boxes[i].status = BoxStatus::CertifiedUnique;
                    self.trace.push(TraceEvent::NewtonCertified { box_index: i, round });
                }
            }
            for xi in 0..self.fibers.len() {
                self.fiber_step(xi, xs, rx_sf, round);
            }

            let pending: Vec<usize> = (0..self.boxes.len())
                .filter(|&i| self.boxes[i].status == BoxStatus::Pending)
                .collect();
            if pending.is_empty() || round >= config.max_depth {
                break;
            }
            let mut xi: Vec<usize> = pending.iter().map(|&i| self.boxes[i].x_index).collect();
            let mut yi: Vec<usize> = pending.iter().map(|&i| self.boxes[i].y_index).collect();
            xi.dedup();
            yi.sort_unstable();
            yi.dedup();
            xs.bisect(&xi, config.fast_eval);
            ys.bisect(&yi, config.fast_eval);
            round += 1;
            for &i in &pending {
                let b = &mut self.boxes[i];
                b.ix = xs.roots[b.x_index].iv.clone();
                b.iy = ys.roots[b.y_index].iv.clone();
                b.depth = round;
            }
        }

        for i in 0..self.boxes.len() {
            if self.boxes[i].status != BoxStatus::Pending {
                continue;
            }
            self.boxes[i].status = BoxStatus::Undecided;
            self.trace.push(TraceEvent::Undecided { box_index: i });
            let xi = self.boxes[i].x_index;
            if self.fiber(xi, xs, rx_sf).degenerate {
                self.boxes[i].annotation = Some(Annotation::LeadingCoeffDegeneracy);
            }
        }
        round
    }

    fn fiber(&mut self, xi: usize, xs: &Roots<'_>, rx_sf: &UniPoly) -> &FiberInfo {
        if self.fibers[xi].is_none() {
            let (f, g) = self.polys;
            let ctx = self.fiber_ctx.get_or_insert_with(|| FiberCtx::new(f, g));
            let info = ctx.info(rx_sf, &xs.roots[xi].iv);
            self.trace.push(TraceEvent::FiberComputed {
                x_index: xi,
                k: info.k,
                degenerate: info.degenerate,
            });
            self.fibers[xi] = Some(info);
        }
        self.fibers[xi].as_ref().expect("just computed")
    }

    fn fiber_step(&mut self, xi: usize, xs: &Roots<'_>, rx_sf: &UniPoly, round: u32) {
        let range = xi * self.ny..(xi + 1) * self.ny;
        let slice = &self.boxes[range.clone()];
        if !slice.iter().any(|b| b.status == BoxStatus::Pending) {
            return;
        }
        let alive = slice.iter().filter(|b| b.status != BoxStatus::Excluded).count();
        let unique = slice.iter().filter(|b| b.status == BoxStatus::CertifiedUnique).count();
        // the fiber count is only worth computing when a rule could fire
        if alive != 1 && unique == 0 {
            return;
        }
        let info = self.fiber(xi, xs, rx_sf).clone();
        match fiber_filter(&info, &mut self.boxes[range.clone()]) {
            Some(FiberRule::A(j)) => self.trace.push(TraceEvent::RuleA {
                x_index: xi,
                box_index: range.start + j,
                k: info.k.expect("rule A needs k"),
                non_excluded: alive,
                round,
            }),
            Some(FiberRule::B(js)) => self.trace.push(TraceEvent::RuleB {
                x_index: xi,
                k: info.k.expect("rule B needs k"),
                excluded: js.into_iter().map(|j| range.start + j).collect(),
                round,
            }),
            None => {}
        }
    }
}
