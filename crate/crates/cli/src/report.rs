//! JSON and text renderings of solver output. The JSON layout is described by
//! `schema/solve-report.schema.json`.

use std::fmt::Write as _;

use bisolve_core::arith::Dyadic;
use bisolve_core::bisolve::{CandidateBox, SolveReport, TraceEvent};
use bisolve_core::isolate::{IntervalKind, IsolatingInterval};
use bisolve_core::poly::{BiPoly, Magnitude};
use serde::Serialize;

pub const FORMAT_VERSION: u32 = 1;

/// Exact dyadic `m * 2^e` with `m` as a decimal string.
#[derive(Serialize)]
pub struct DyadicJson {
    pub m: String,
    pub e: i64,
}

impl From<&Dyadic> for DyadicJson {
    fn from(d: &Dyadic) -> Self {
        DyadicJson {
            m: d.mantissa().to_string(),
            e: d.exponent(),
        }
    }
}

#[derive(Serialize)]
pub struct IntervalJson {
    pub kind: &'static str,
    pub lo: DyadicJson,
    pub hi: DyadicJson,
    pub poly_id: String,
    /// Rounded endpoints for reading; not part of the certificate.
    pub approx_non_authoritative: [f64; 2],
}

pub fn kind_code(k: IntervalKind) -> &'static str {
    match k {
        IntervalKind::OpenInterval => "OPEN_INTERVAL",
        IntervalKind::ExactPoint => "EXACT_POINT",
    }
}

impl From<&IsolatingInterval> for IntervalJson {
    fn from(iv: &IsolatingInterval) -> Self {
        IntervalJson {
            kind: kind_code(iv.kind),
            lo: (&iv.lo).into(),
            hi: (&iv.hi).into(),
            poly_id: iv.poly_id.to_string(),
            approx_non_authoritative: [iv.lo.to_f64(), iv.hi.to_f64()],
        }
    }
}

#[derive(Serialize)]
pub struct BoxJson {
    pub x: IntervalJson,
    pub y: IntervalJson,
    pub x_index: usize,
    pub y_index: usize,
    pub status: &'static str,
    pub depth: u32,
    pub annotation: Option<&'static str>,
}

impl From<&CandidateBox> for BoxJson {
    fn from(b: &CandidateBox) -> Self {
        BoxJson {
            x: (&b.ix).into(),
            y: (&b.iy).into(),
            x_index: b.x_index,
            y_index: b.y_index,
            status: b.status.code(),
            depth: b.depth,
            annotation: b.annotation.map(|a| a.code()),
        }
    }
}

#[derive(Serialize)]
pub struct MagnitudeJson {
    pub n: u32,
    pub tau: u64,
}

impl From<Magnitude> for MagnitudeJson {
    fn from(m: Magnitude) -> Self {
        MagnitudeJson { n: m.n, tau: m.tau }
    }
}

#[derive(Serialize)]
pub struct TimingsJson {
    pub project_ms: f64,
    pub isolate_ms: f64,
    pub validate_ms: f64,
}

#[derive(Serialize)]
pub struct StatsJson {
    pub f: MagnitudeJson,
    pub g: MagnitudeJson,
    pub rx: MagnitudeJson,
    pub ry: MagnitudeJson,
    pub rx_sf_degree: usize,
    pub ry_sf_degree: usize,
    pub rx_roots: usize,
    pub ry_roots: usize,
    pub candidates: usize,
    pub excluded: usize,
    pub certified_unique: usize,
    pub certified_fiber: usize,
    pub undecided: usize,
    pub max_depth: u32,
    pub rounds: u32,
    pub min_sep_lower_bound: Option<DyadicJson>,
    pub timings: Option<TimingsJson>,
}

#[derive(Serialize)]
#[serde(tag = "event", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TraceJson {
    Excluded { box_index: usize, round: u32 },
    NewtonCertified { box_index: usize, round: u32 },
    FiberComputed { x_index: usize, k: Option<u32>, degenerate: bool },
    RuleA { x_index: usize, box_index: usize, k: u32, non_excluded: usize, round: u32 },
    RuleB { x_index: usize, k: u32, excluded: Vec<usize>, round: u32 },
    Undecided { box_index: usize },
}

impl From<&TraceEvent> for TraceJson {
    fn from(e: &TraceEvent) -> Self {
        match e.clone() {
            TraceEvent::Excluded { box_index, round } => TraceJson::Excluded { box_index, round },
            TraceEvent::NewtonCertified { box_index, round } => TraceJson::NewtonCertified { box_index, round },
            TraceEvent::FiberComputed { x_index, k, degenerate } => TraceJson::FiberComputed { x_index, k, degenerate },
            TraceEvent::RuleA { x_index, box_index, k, non_excluded, round } => {
                TraceJson::RuleA { x_index, box_index, k, non_excluded, round }
            }
            TraceEvent::RuleB { x_index, k, excluded, round } => TraceJson::RuleB { x_index, k, excluded, round },
            TraceEvent::Undecided { box_index } => TraceJson::Undecided { box_index },
        }
    }
}

#[derive(Serialize)]
pub struct InputJson {
    pub f: String,
    pub g: String,
}

#[derive(Serialize)]
pub struct SolveReportJson {
    pub format_version: u32,
    pub input: InputJson,
    /// True when no box is undecided.
    pub complete: bool,
    pub solutions: Vec<BoxJson>,
    pub undecided: Vec<BoxJson>,
    pub stats: StatsJson,
    pub trace: Vec<TraceJson>,
}

impl SolveReportJson {
    pub fn new(f: &BiPoly, g: &BiPoly, r: &SolveReport, timings: bool) -> Self {
        let s = &r.stats;
        SolveReportJson {
            format_version: FORMAT_VERSION,
            input: InputJson {
                f: f.to_string(),
                g: g.to_string(),
            },
            complete: r.undecided.is_empty(),
            solutions: r.solutions.iter().map(Into::into).collect(),
            undecided: r.undecided.iter().map(Into::into).collect(),
            stats: StatsJson {
                f: s.f.into(),
                g: s.g.into(),
                rx: s.rx.into(),
                ry: s.ry.into(),
                rx_sf_degree: s.rx_sf_degree,
                ry_sf_degree: s.ry_sf_degree,
                rx_roots: s.rx_roots,
                ry_roots: s.ry_roots,
                candidates: s.candidates,
                excluded: s.excluded,
                certified_unique: s.certified_unique,
                certified_fiber: s.certified_fiber,
                undecided: s.undecided,
                max_depth: s.max_depth,
                rounds: s.rounds,
                min_sep_lower_bound: s.min_sep_lower_bound.as_ref().map(Into::into),
                timings: timings.then_some(TimingsJson {
                    project_ms: s.timings.project_ms,
                    isolate_ms: s.timings.isolate_ms,
                    validate_ms: s.timings.validate_ms,
                }),
            },
            trace: r.trace.iter().map(Into::into).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct IsolateReportJson {
    pub format_version: u32,
    pub input: String,
    pub squarefree_part: String,
    pub roots: Vec<IntervalJson>,
}

fn fmt_interval(iv: &IsolatingInterval) -> String {
    match iv.kind {
        IntervalKind::ExactPoint => format!("{} (exact, ~{})", iv.lo, iv.lo.to_f64()),
        IntervalKind::OpenInterval => format!("({}, {}) (~{})", iv.lo, iv.hi, iv.midpoint().to_f64()),
    }
}

pub fn solve_text(f: &BiPoly, g: &BiPoly, r: &SolveReport, timings: bool) -> String {
    let s = &r.stats;
    let mut out = String::new();
    let _ = writeln!(out, "f = {f}");
    let _ = writeln!(out, "g = {g}");
    let _ = writeln!(
        out,
        "resultants: Rx degree {} bitlength {}, Ry degree {} bitlength {}",
        s.rx.n, s.rx.tau, s.ry.n, s.ry.tau
    );
    let _ = writeln!(
        out,
        "candidates {}: excluded {}, certified {} (newton {}, fiber {}), undecided {}, rounds {}",
        s.candidates,
        s.excluded,
        s.certified_unique + s.certified_fiber,
        s.certified_unique,
        s.certified_fiber,
        s.undecided,
        s.rounds
    );
    for (i, b) in r.solutions.iter().enumerate() {
        let _ = writeln!(out, "solution {}: {}", i + 1, b.status);
        let _ = writeln!(out, "  x in {}", fmt_interval(&b.ix));
        let _ = writeln!(out, "  y in {}", fmt_interval(&b.iy));
    }
    for (i, b) in r.undecided.iter().enumerate() {
        let note = b.annotation.map(|a| format!(" [{}]", a.code())).unwrap_or_default();
        let _ = writeln!(out, "undecided {}:{note}", i + 1);
        let _ = writeln!(out, "  x in {}", fmt_interval(&b.ix));
        let _ = writeln!(out, "  y in {}", fmt_interval(&b.iy));
    }
    if timings {
        let t = s.timings;
        let _ = writeln!(
            out,
            "time: project {:.3} ms, isolate {:.3} ms, validate {:.3} ms",
            t.project_ms, t.isolate_ms, t.validate_ms
        );
    }
    out
}

pub fn isolate_text(roots: &[IsolatingInterval]) -> String {
    let mut out = format!("{} real roots\n", roots.len());
    for (i, iv) in roots.iter().enumerate() {
        let _ = writeln!(out, "root {}: {}", i + 1, fmt_interval(iv));
    }
    out
}
