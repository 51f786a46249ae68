//! Amplitude as a function of the control parameter, the two optimization conditions and the
//! ridge cost functional.

use std::fmt;

use crate::approximant::{fit_coefficients, marginal_amplitude};
use crate::error::{Error, Result};
use crate::numerics::{self, bisect, derivative, golden_section, Bracket, ScanGrid};
use crate::series::TruncatedSeries;
use crate::transforms::{amplitude_factor, borel_point, transform_coefficients, TransformKind};

/// Step of the numerical u-derivative.
pub const DERIVATIVE_STEP: f64 = 1e-3;
/// A local minimum of |condition| counts as a solution when |condition| <= this * |B|.
pub const NEAR_ROOT_RTOL: f64 = 5e-3;
/// An exact root must re-evaluate below this * |B|, otherwise it was a pole crossing.
pub const ROOT_CHECK_RTOL: f64 = 1e-6;
const BISECT_TOL: f64 = 1e-12;
const GOLDEN_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    MinDifference,
    MinDerivative,
    BorelPoint,
    RidgeMinimum,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::MinDifference => "min-difference",
            Condition::MinDerivative => "min-derivative",
            Condition::BorelPoint => "borel-point",
            Condition::RidgeMinimum => "ridge",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolutionStatus {
    /// Sign change of the condition, refined by bisection.
    Exact,
    /// Local minimum of |condition| close enough to zero.
    NearRoot,
    /// Global minimum of |condition| when nothing else was found.
    Fallback,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationSolution {
    pub u: f64,
    pub amplitude: f64,
    pub condition: Condition,
    pub order: usize,
    pub status: SolutionStatus,
    /// |condition| at u.
    pub residual: f64,
    /// Half-range of B over the cells where |condition| stays within twice its minimum.
    pub width: Option<f64>,
}

impl OptimizationSolution {
    pub fn is_exact(&self) -> bool {
        self.status == SolutionStatus::Exact
    }
}

/// How the amplitude problem is posed to the transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formulation {
    /// Resum f with exponent beta.
    Direct,
    /// Resum 1/f with exponent -beta and invert the amplitude. Used where the kind's
    /// amplitude factor is singular at beta.
    Reciprocal,
}

pub fn formulation_for(kind: TransformKind, beta: f64) -> Formulation {
    let b1 = beta + 1.0;
    match kind {
        TransformKind::FractionalIntegral if beta <= -1.0 => Formulation::Reciprocal,
        TransformKind::FractionalDerivative if b1 <= 0.0 && b1.fract() == 0.0 => Formulation::Reciprocal,
        _ => Formulation::Direct,
    }
}

/// B_k(u) for one series, kind, exponent and order.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeCurve {
    pub source: TruncatedSeries,
    pub kind: TransformKind,
    pub beta: f64,
    pub order: usize,
    formulation: Formulation,
    working: TruncatedSeries,
    working_beta: f64,
}

impl AmplitudeCurve {
    pub fn new(source: &TruncatedSeries, kind: TransformKind, beta: f64, order: usize) -> Result<Self> {
        if order > source.order() {
            return Err(Error::InvalidArgument(format!("order {order} exceeds the series order {}", source.order())));
        }
        let formulation = formulation_for(kind, beta);
        let truncated = source.truncate(order);
        let (working, working_beta) = match formulation {
            Formulation::Direct => (truncated, beta),
            Formulation::Reciprocal => (truncated.reciprocal(order)?, -beta),
        };
        Ok(AmplitudeCurve { source: source.clone(), kind, beta, order, formulation, working, working_beta })
    }

    pub fn formulation(&self) -> Formulation {
        self.formulation
    }

    /// Series actually resummed (1/f in the reciprocal formulation).
    pub fn working_series(&self) -> &TruncatedSeries {
        &self.working
    }

    pub fn working_beta(&self) -> f64 {
        self.working_beta
    }

    /// Amplitude of the working series.
    pub fn working_at(&self, u: f64) -> Result<f64> {
        let t = transform_coefficients(&self.working, self.kind, u)?;
        let r = fit_coefficients(&t.b, self.working_beta)?;
        let c = marginal_amplitude(&r)?.value;
        let v = c * amplitude_factor(self.kind, self.working_beta, u)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::ComplexValue)
        }
    }

    /// Maps a working amplitude back to the amplitude of f.
    pub fn to_physical(&self, w: f64) -> f64 {
        match self.formulation {
            Formulation::Direct => w,
            Formulation::Reciprocal => 1.0 / w,
        }
    }

    pub fn amplitude_at(&self, u: f64) -> Result<f64> {
        self.working_at(u).map(|w| self.to_physical(w))
    }

    fn sign_ok(&self, w: f64) -> bool {
        w * self.working.coeffs()[0] > 0.0
    }
}

pub fn amplitude_at(curve: &AmplitudeCurve, u: f64) -> Result<f64> {
    curve.amplitude_at(u)
}

/// Interval of admissible control parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Domain {
    pub fn contains(&self, u: f64) -> bool {
        (if self.lo_closed { u >= self.lo } else { u > self.lo })
            && (if self.hi_closed { u <= self.hi } else { u < self.hi })
    }
}

/// Control parameters where the transform or the amplitude factor breaks down, for a given
/// working exponent.
fn singular_points(kind: TransformKind, beta: f64, lo: f64, hi: f64) -> Vec<f64> {
    let mut s = Vec::new();
    let span = (hi - lo).abs() + 2.0;
    let m_max = (span + beta.abs()).ceil() as usize + 2;
    match kind {
        TransformKind::BorelLeroy => s.extend((0..m_max).map(|m| -beta - 1.0 - m as f64)),
        TransformKind::MittagLeffler => {
            if beta < 0.0 {
                let n = ((span * beta.abs()).ceil() as usize).max(1) + 1;
                s.extend((0..n).map(|m| (m + 1) as f64 / -beta));
            }
        }
        TransformKind::FractionalDerivative => {
            s.extend((0..m_max).map(|m| 1.0 + m as f64));
            s.extend((0..m_max).map(|m| beta + 1.0 + m as f64));
        }
        TransformKind::FractionalIntegral => {}
    }
    s.retain(|x| x.is_finite());
    s
}

/// Interval around the Borel point free of singular points, restricted per kind:
/// Borel-Leroy u > -1, Mittag-Leffler u in [0, first pole), fractional derivative u >= 0,
/// fractional integral u <= 0.
pub fn admissible_domain(kind: TransformKind, working_beta: f64, grid: &ScanGrid) -> Option<Domain> {
    let u0 = borel_point(kind);
    let sing = singular_points(kind, working_beta, grid.lo, grid.hi);
    let (mut lo, mut lo_closed) = (grid.lo, true);
    let (mut hi, mut hi_closed) = (grid.hi, true);
    match kind {
        TransformKind::BorelLeroy => {
            if -1.0 >= lo {
                lo = -1.0;
                lo_closed = false;
            }
        }
        TransformKind::MittagLeffler | TransformKind::FractionalDerivative => lo = lo.max(0.0),
        TransformKind::FractionalIntegral => hi = hi.min(0.0),
    }
    if kind == TransformKind::MittagLeffler {
        // principal branch: from u = 0 up to the first pole of the factor
        if let Some(&p) = sing.iter().filter(|&&x| x > 0.0).min_by(|a, b| a.total_cmp(b)) {
            if p < hi || (p == hi && hi_closed) {
                hi = p;
                hi_closed = false;
            }
        }
    } else {
        let on = sing.iter().any(|&x| (x - u0).abs() < 1e-9);
        let below = sing.iter().copied().filter(|&x| x < u0 - 1e-9).fold(f64::NEG_INFINITY, f64::max);
        let above = sing.iter().copied().filter(|&x| x > u0 + 1e-9).fold(f64::INFINITY, f64::min);
        if below > lo || (below == lo && lo_closed) {
            lo = below;
            lo_closed = false;
        }
        if above < hi || (above == hi && hi_closed) {
            hi = above;
            hi_closed = false;
        }
        if on {
            let up = amplitude_factor(kind, working_beta, u0 + 1e-6).map(|f| f > 0.0).unwrap_or(false);
            if up {
                lo = u0;
                lo_closed = false;
            } else {
                hi = u0;
                hi_closed = false;
            }
        }
    }
    (lo < hi).then_some(Domain { lo, hi, lo_closed, hi_closed })
}

/// Grid points inside the domain; closed ends are added when `closed` is set.
fn domain_points(d: &Domain, grid: &ScanGrid, closed: bool) -> Vec<f64> {
    let eps = 1e-9;
    let mut pts = Vec::new();
    if closed && d.lo_closed {
        pts.push(d.lo);
    }
    pts.extend(grid.iter().filter(|&u| u > d.lo + eps && u < d.hi - eps));
    if closed && d.hi_closed {
        pts.push(d.hi);
    }
    pts
}

struct Sample {
    u: f64,
    g: f64,
    w: f64,
}

fn sample_condition<G>(g: &G, u: f64) -> Option<Sample>
where
    G: Fn(f64) -> Option<(f64, f64)>,
{
    g(u).filter(|(c, w)| c.is_finite() && w.is_finite()).map(|(c, w)| Sample { u, g: c, w })
}

/// Exact roots, near roots and (when both are absent) the fallback minimum of a condition.
/// `g(u)` returns (condition, working amplitude reported at u).
fn solve_condition<G>(
    curve: &AmplitudeCurve,
    g: G,
    condition: Condition,
    scan: &[f64],
    closed: &[f64],
) -> Vec<OptimizationSolution>
where
    G: Fn(f64) -> Option<(f64, f64)>,
{
    let samples: Vec<Option<Sample>> = scan.iter().map(|&u| sample_condition(&g, u)).collect();
    let mut out = Vec::new();
    let make = |s: &Sample, status: SolutionStatus, width: Option<f64>| OptimizationSolution {
        u: s.u,
        amplitude: curve.to_physical(s.w),
        condition,
        order: curve.order,
        status,
        residual: s.g.abs(),
        width,
    };
    let gc = |u: f64| sample_condition(&g, u).map(|s| s.g);

    // exact roots
    let mut roots = Vec::new();
    for w in samples.windows(2) {
        let (Some(a), Some(b)) = (&w[0], &w[1]) else { continue };
        if a.g == 0.0 {
            roots.push(a.u);
        } else if let Some(br) = Bracket::new(a.u, b.u, a.g, b.g) {
            if let Some(r) = bisect(gc, br, BISECT_TOL) {
                roots.push(r);
            }
        }
    }
    numerics::dedup_sorted(&mut roots, numerics::ROOT_DEDUP);
    for r in roots {
        if let Some(s) = sample_condition(&g, r) {
            if s.g.abs() <= ROOT_CHECK_RTOL * s.w.abs() && curve.sign_ok(s.w) {
                out.push(make(&s, SolutionStatus::Exact, None));
            }
        }
    }

    // local minima of |g| without a sign change
    for i in 1..samples.len().saturating_sub(1) {
        let (Some(a), Some(b), Some(c)) = (&samples[i - 1], &samples[i], &samples[i + 1]) else { continue };
        let (fa, fb, fc) = (a.g.abs(), b.g.abs(), c.g.abs());
        if !(fb <= fa && fb < fc) || a.g * b.g <= 0.0 || b.g * c.g <= 0.0 {
            continue;
        }
        let u = golden_section(|u| gc(u).map(f64::abs), a.u, c.u, GOLDEN_TOL);
        let Some(s) = sample_condition(&g, u) else { continue };
        let s = if s.g.abs() <= fb { s } else { Sample { u: b.u, g: b.g, w: b.w } };
        if s.g.abs() <= NEAR_ROOT_RTOL * s.w.abs() && curve.sign_ok(s.w) {
            let width = near_root_width(&samples, i, s.g.abs(), s.w);
            out.push(make(&s, SolutionStatus::NearRoot, Some(width)));
        }
    }

    if out.is_empty() {
        let pts: Vec<Sample> =
            closed.iter().filter_map(|&u| sample_condition(&g, u)).filter(|s| curve.sign_ok(s.w)).collect();
        if let Some((i, _)) = pts.iter().enumerate().min_by(|(_, x), (_, y)| x.g.abs().total_cmp(&y.g.abs())) {
            let a = pts[i.saturating_sub(1)].u;
            let c = pts[(i + 1).min(pts.len() - 1)].u;
            let u = if a < c { golden_section(|u| gc(u).map(f64::abs), a, c, GOLDEN_TOL) } else { pts[i].u };
            let s = match sample_condition(&g, u) {
                Some(s) if s.g.abs() <= pts[i].g.abs() && curve.sign_ok(s.w) => s,
                _ => Sample { u: pts[i].u, g: pts[i].g, w: pts[i].w },
            };
            let samples: Vec<Option<Sample>> = pts.iter().map(|p| Some(Sample { u: p.u, g: p.g, w: p.w })).collect();
            let width = near_root_width(&samples, i, s.g.abs(), s.w);
            out.push(make(&s, SolutionStatus::Fallback, Some(width)));
        }
    }
    out.sort_by(|a, b| b.u.total_cmp(&a.u));
    out
}

fn near_root_width(samples: &[Option<Sample>], i: usize, gmin: f64, w: f64) -> f64 {
    let lim = 2.0 * gmin;
    let (mut lo, mut hi) = (w, w);
    let mut visit = |j: usize| -> bool {
        match &samples[j] {
            Some(s) if s.g.abs() <= lim => {
                lo = lo.min(s.w);
                hi = hi.max(s.w);
                true
            }
            _ => false,
        }
    };
    let mut j = i;
    while visit(j) && j > 0 {
        j -= 1;
    }
    let mut j = i + 1;
    while j < samples.len() && visit(j) {
        j += 1;
    }
    0.5 * (hi - lo)
}

fn curves(s: &TruncatedSeries, kind: TransformKind, beta: f64, k: usize) -> Result<(AmplitudeCurve, AmplitudeCurve)> {
    if k == 0 || k + 1 > s.order() {
        return Err(Error::InvalidArgument(format!("order {k} needs a series of order {} or more", k + 1)));
    }
    Ok((AmplitudeCurve::new(s, kind, beta, k)?, AmplitudeCurve::new(s, kind, beta, k + 1)?))
}

fn points_for(curve: &AmplitudeCurve, grid: &ScanGrid) -> (Vec<f64>, Vec<f64>) {
    match admissible_domain(curve.kind, curve.working_beta, grid) {
        Some(d) => (domain_points(&d, grid, false), domain_points(&d, grid, true)),
        None => (Vec::new(), Vec::new()),
    }
}

/// Solutions of B_{k+1}(u) = B_k(u), reported with B_{k+1}.
pub fn solve_min_difference(
    s: &TruncatedSeries,
    kind: TransformKind,
    beta: f64,
    k: usize,
    grid: &ScanGrid,
) -> Result<Vec<OptimizationSolution>> {
    let (ck, ck1) = curves(s, kind, beta, k)?;
    let (scan, closed) = points_for(&ck1, grid);
    let g = |u: f64| {
        let hi = ck1.working_at(u).ok()?;
        let lo = ck.working_at(u).ok()?;
        Some((hi - lo, hi))
    };
    Ok(solve_condition(&ck1, g, Condition::MinDifference, &scan, &closed))
}

/// Solutions of dB_k/du = 0, reported with B_k.
pub fn solve_min_derivative(
    s: &TruncatedSeries,
    kind: TransformKind,
    beta: f64,
    k: usize,
    grid: &ScanGrid,
) -> Result<Vec<OptimizationSolution>> {
    if k == 0 || k > s.order() {
        return Err(Error::InvalidArgument(format!("order {k} outside 1..={}", s.order())));
    }
    let ck = AmplitudeCurve::new(s, kind, beta, k)?;
    let (scan, closed) = points_for(&ck, grid);
    let g = |u: f64| {
        let w = ck.working_at(u).ok()?;
        let d = derivative(|v| ck.working_at(v), u, DERIVATIVE_STEP).ok()?;
        Some((d, w))
    };
    Ok(solve_condition(&ck, g, Condition::MinDerivative, &scan, &closed))
}

/// lambda (B_{k+1} - B_k)^2 + (1 - lambda) (dB_k/du)^2 + (u - u0)^2 / 2 on the working curves.
#[derive(Debug, Clone)]
pub struct RidgeFunctional {
    pub lower: AmplitudeCurve,
    pub upper: AmplitudeCurve,
    pub lambda: f64,
}

impl RidgeFunctional {
    pub fn new(s: &TruncatedSeries, kind: TransformKind, beta: f64, k: usize, lambda: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidArgument(format!("lambda = {lambda} outside [0, 1]")));
        }
        let (lower, upper) = curves(s, kind, beta, k)?;
        Ok(RidgeFunctional { lower, upper, lambda })
    }

    /// `None` where either curve is undefined or B_{k+1} has the wrong sign.
    pub fn cost(&self, u: f64) -> Option<f64> {
        let hi = self.upper.working_at(u).ok()?;
        let lo = self.lower.working_at(u).ok()?;
        if !self.upper.sign_ok(hi) {
            return None;
        }
        let d = derivative(|v| self.lower.working_at(v), u, DERIVATIVE_STEP).ok()?;
        let u0 = borel_point(self.upper.kind);
        let v = self.lambda * (hi - lo).powi(2) + (1.0 - self.lambda) * d * d + 0.5 * (u - u0).powi(2);
        v.is_finite().then_some(v)
    }
}

/// Minimizes the ridge functional over the closed domain, reporting B_{k+1}.
pub fn ridge_minimize(
    s: &TruncatedSeries,
    kind: TransformKind,
    beta: f64,
    k: usize,
    grid: &ScanGrid,
    lambda: f64,
) -> Result<OptimizationSolution> {
    let ridge = RidgeFunctional::new(s, kind, beta, k, lambda)?;
    let ck1 = &ridge.upper;
    let (_, pts) = points_for(ck1, grid);
    let f = |u: f64| ridge.cost(u);
    let vals: Vec<Option<f64>> = pts.iter().map(|&u| f(u)).collect();
    let (i, fbest) = vals
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| (i, v)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or(Error::NoDefinedPoint)?;
    let a = pts[i.saturating_sub(1)];
    let b = pts[(i + 1).min(pts.len() - 1)];
    let mut u = if a < b { golden_section(f, a, b, GOLDEN_TOL) } else { pts[i] };
    match f(u) {
        Some(v) if v <= fbest => {}
        _ => u = pts[i],
    }
    let w = ck1.working_at(u)?;
    Ok(OptimizationSolution {
        u,
        amplitude: ck1.to_physical(w),
        condition: Condition::RidgeMinimum,
        order: k + 1,
        status: SolutionStatus::Exact,
        residual: f(u).unwrap_or(f64::NAN),
        width: None,
    })
}

/// Everything the selection step needs for one series and kind at the highest order K:
/// min-difference between K and K-1, min-derivative at K and the ridge.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub kind: TransformKind,
    pub beta: f64,
    pub order: usize,
    pub formulation: Formulation,
    pub domain: Option<Domain>,
    pub difference: Vec<OptimizationSolution>,
    pub derivative: Vec<OptimizationSolution>,
    pub ridge: Option<OptimizationSolution>,
    grid: ScanGrid,
}

pub fn analyze(s: &TruncatedSeries, kind: TransformKind, beta: f64, grid: &ScanGrid) -> Result<Analysis> {
    let k = s.order();
    if k < 2 {
        return Err(Error::InvalidArgument("order too low: need at least three coefficients".into()));
    }
    let top = AmplitudeCurve::new(s, kind, beta, k)?;
    let domain = admissible_domain(kind, top.working_beta, grid);
    let difference = solve_min_difference(s, kind, beta, k - 1, grid)?;
    let derivative = solve_min_derivative(s, kind, beta, k, grid)?;
    let ridge = ridge_minimize(s, kind, beta, k - 1, grid, 0.5).ok();
    Ok(Analysis {
        kind,
        beta,
        order: k,
        formulation: top.formulation(),
        domain,
        difference,
        derivative,
        ridge,
        grid: *grid,
    })
}

impl Analysis {
    /// Solutions of both conditions treated together. Fallback minima enter only when no
    /// condition has a root or near root, only when they are close enough to zero, and never
    /// when they sit on the edge of the search window.
    pub fn pooled(&self) -> Vec<OptimizationSolution> {
        let all = self.difference.iter().chain(self.derivative.iter());
        let mut v: Vec<OptimizationSolution> =
            all.clone().filter(|s| s.status != SolutionStatus::Fallback).cloned().collect();
        if v.is_empty() {
            let edge = self.grid.step() * 1.5;
            v = all
                .filter(|s| {
                    let w = match self.formulation {
                        Formulation::Direct => s.amplitude,
                        Formulation::Reciprocal => 1.0 / s.amplitude,
                    };
                    s.residual <= NEAR_ROOT_RTOL * w.abs()
                        && (s.u - self.grid.lo).abs() > edge
                        && (s.u - self.grid.hi).abs() > edge
                })
                .cloned()
                .collect();
        }
        v.sort_by(|a, b| b.u.total_cmp(&a.u));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(v: &[f64]) -> TruncatedSeries {
        TruncatedSeries::new(v.to_vec()).unwrap()
    }

    #[test]
    fn reciprocal_formulation_rules() {
        use TransformKind::*;
        assert_eq!(formulation_for(FractionalIntegral, -1.0), Formulation::Reciprocal);
        assert_eq!(formulation_for(FractionalIntegral, -0.5), Formulation::Direct);
        assert_eq!(formulation_for(FractionalDerivative, -1.0), Formulation::Reciprocal);
        assert_eq!(formulation_for(FractionalDerivative, -1.5), Formulation::Direct);
        assert_eq!(formulation_for(FractionalDerivative, -2.0), Formulation::Reciprocal);
        assert_eq!(formulation_for(BorelLeroy, -1.0), Formulation::Direct);
        assert_eq!(formulation_for(MittagLeffler, -2.0), Formulation::Direct);
    }

    #[test]
    fn domains_per_kind() {
        let g = ScanGrid::DEFAULT;
        let d = admissible_domain(TransformKind::FractionalIntegral, 0.5, &g).unwrap();
        assert_eq!((d.lo, d.hi, d.hi_closed), (-8.0, 0.0, true));
        let d = admissible_domain(TransformKind::FractionalDerivative, -0.5, &g).unwrap();
        assert_eq!((d.lo, d.hi, d.lo_closed, d.hi_closed), (0.0, 0.5, true, false));
        let d = admissible_domain(TransformKind::FractionalDerivative, 2.0, &g).unwrap();
        assert_eq!((d.lo, d.hi), (0.0, 1.0));
        let d = admissible_domain(TransformKind::MittagLeffler, -1.0, &g).unwrap();
        assert_eq!((d.lo, d.hi), (0.0, 1.0));
        let d = admissible_domain(TransformKind::MittagLeffler, -2.0, &g).unwrap();
        assert_eq!((d.lo, d.hi), (0.0, 0.5));
        let d = admissible_domain(TransformKind::BorelLeroy, -0.5, &g).unwrap();
        assert_eq!((d.lo, d.hi), (-0.5, 10.0));
        let d = admissible_domain(TransformKind::BorelLeroy, -1.0, &g).unwrap();
        assert_eq!((d.lo, d.hi, d.lo_closed), (0.0, 10.0, false));
        let d = admissible_domain(TransformKind::BorelLeroy, 0.4, &g).unwrap();
        assert_eq!((d.lo, d.hi), (-1.0, 10.0));
    }

    #[test]
    fn constant_series_at_borel_point() {
        let s = series(&[3.0]);
        for kind in TransformKind::ALL {
            let c = AmplitudeCurve::new(&s, kind, 0.0, 0).unwrap();
            assert!((c.amplitude_at(borel_point(kind)).unwrap() - 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn reciprocal_inverts_amplitude() {
        // f = 2/(1+x): B = 2 for beta = -1 at every u
        let s = series(&[2.0, -2.0, 2.0, -2.0]);
        let c = AmplitudeCurve::new(&s, TransformKind::FractionalIntegral, -1.0, 3).unwrap();
        assert_eq!(c.formulation(), Formulation::Reciprocal);
        for u in [-2.0, -0.5, 0.0] {
            assert!((c.amplitude_at(u).unwrap() - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn order_checks() {
        let s = series(&[1.0, 0.5, 0.25]);
        assert!(AmplitudeCurve::new(&s, TransformKind::BorelLeroy, 1.0, 3).is_err());
        assert!(solve_min_difference(&s, TransformKind::BorelLeroy, 1.0, 2, &ScanGrid::DEFAULT).is_err());
        assert!(ridge_minimize(&s, TransformKind::BorelLeroy, 1.0, 1, &ScanGrid::DEFAULT, 1.5).is_err());
    }
}
