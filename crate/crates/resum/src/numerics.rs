//! Special functions and one-dimensional root finding / minimization.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Distance from a non-positive integer below which the argument is a pole.
pub const POLE_TOL: f64 = 1e-12;

/// Largest argument for which Γ is representable.
const GAMMA_MAX_ARG: f64 = 171.62;

/// Γ(x) by the Lanczos approximation, reflected for x < 1/2.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::InvalidArgument(format!("gamma({x})")));
    }
    if x <= 0.0 && (x - x.round()).abs() < POLE_TOL {
        return Err(Error::Pole(x));
    }
    if x > GAMMA_MAX_ARG {
        return Err(Error::Overflow(x));
    }
    if x.fract() == 0.0 && x > 0.0 {
        // exact factorial for positive integers
        return Ok((2..x as u64).fold(1.0, |acc, m| acc * m as f64));
    }
    if x < 0.5 {
        if 1.0 - x > GAMMA_MAX_ARG {
            return Ok(0.0);
        }
        // sin(pi x) evaluated on the reduced argument keeps precision near integers
        let n = x.round();
        let s = (PI * (x - n)).sin() * if n.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
        return Ok(PI / (s * lanczos(1.0 - x)));
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // split the power so t^(z+1/2) does not overflow before e^-t is applied
    let half = t.powf((z + 0.5) / 2.0);
    (2.0 * PI).sqrt() * (half * (-t).exp()) * half * a
}

/// Search domain for a control parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanGrid {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl ScanGrid {
    pub const DEFAULT: ScanGrid = ScanGrid { lo: -8.0, hi: 10.0, points: 3601 };

    pub fn new(lo: f64, hi: f64, points: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi || points < 2 {
            return Err(Error::InvalidArgument(format!("grid {lo}:{hi}:{points}")));
        }
        Ok(ScanGrid { lo, hi, points })
    }

    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / (self.points - 1) as f64
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.points {
            self.hi
        } else {
            self.lo + self.width() * i as f64 / (self.points - 1) as f64
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(move |i| self.point(i))
    }
}

impl Default for ScanGrid {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl fmt::Display for ScanGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.points)
    }
}

impl FromStr for ScanGrid {
    type Err = Error;

    /// Parses `lo:hi:points`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("grid '{s}', expected lo:hi:points"));
        let parts: Vec<&str> = s.trim().split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
        let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
        let points: usize = parts[2].trim().parse().map_err(|_| bad())?;
        ScanGrid::new(lo, hi, points)
    }
}

/// Interval on which a function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64, f_lo: f64, f_hi: f64) -> Option<Self> {
        (lo < hi && f_lo.signum() * f_hi.signum() < 0.0).then_some(Bracket { lo, hi, f_lo, f_hi })
    }
}

/// Refines a bracket by bisection. `None` when the function becomes undefined inside.
pub fn bisect<F: Fn(f64) -> Option<f64>>(f: F, b: Bracket, tol: f64) -> Option<f64> {
    let (mut lo, mut hi, mut f_lo) = (b.lo, b.hi, b.f_lo);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Roots closer than this are merged.
pub const ROOT_DEDUP: f64 = 1e-6;

/// All sign changes of `f` on the grid, refined by bisection.
/// Undefined points (`None`) split the scan.
pub fn find_roots<F: Fn(f64) -> Option<f64>>(f: F, grid: &ScanGrid, tol: f64) -> Vec<f64> {
    let values: Vec<(f64, Option<f64>)> = grid.iter().map(|u| (u, f(u).filter(|v| v.is_finite()))).collect();
    let mut roots = Vec::new();
    for (i, w) in values.windows(2).enumerate() {
        let ((a, fa), (b, fb)) = (w[0], w[1]);
        let (Some(fa), Some(fb)) = (fa, fb) else { continue };
        if fa == 0.0 {
            roots.push(a);
            continue;
        }
        if fb == 0.0 {
            if i + 2 == values.len() {
                roots.push(b);
            }
            continue;
        }
        if let Some(br) = Bracket::new(a, b, fa, fb) {
            if let Some(r) = bisect(&f, br, tol) {
                roots.push(r);
            }
        }
    }
    dedup_sorted(&mut roots, ROOT_DEDUP);
    roots
}

pub(crate) fn dedup_sorted(v: &mut Vec<f64>, eps: f64) {
    v.sort_by(|a, b| a.total_cmp(b));
    v.dedup_by(|a, b| (*a - *b).abs() < eps);
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for a minimum of `f` on `[a, b]`. Undefined values count as +inf.
pub fn golden_section<F: Fn(f64) -> Option<f64>>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    let eval = |u: f64| f(u).filter(|v| v.is_finite()).unwrap_or(f64::INFINITY);
    let (mut a, mut b) = (a, b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (eval(c), eval(d));
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(d);
        }
        if c >= d {
            break;
        }
    }
    0.5 * (a + b)
}

/// Global minimum over the grid, refined by golden section inside the best cell.
pub fn minimize_scalar<F: Fn(f64) -> Option<f64>>(f: F, grid: &ScanGrid, tol: f64) -> Result<f64> {
    let mut best: Option<(f64, f64)> = None;
    for u in grid.iter() {
        if let Some(v) = f(u).filter(|v| v.is_finite()) {
            if best.is_none_or(|(bv, _)| v < bv) {
                best = Some((v, u));
            }
        }
    }
    let (fbest, ubest) = best.ok_or(Error::NoDefinedPoint)?;
    let h = grid.step();
    let a = (ubest - h).max(grid.lo);
    let b = (ubest + h).min(grid.hi);
    let u = golden_section(&f, a, b, tol);
    match f(u).filter(|v| v.is_finite()) {
        Some(v) if v <= fbest => Ok(u),
        _ => Ok(ubest),
    }
}

/// Central difference with one Richardson step: (4 D_{h/2} - D_h) / 3.
pub fn derivative<E, F: Fn(f64) -> std::result::Result<f64, E>>(f: F, u: f64, h: f64) -> std::result::Result<f64, E> {
    let d_h = (f(u + h)? - f(u - h)?) / (2.0 * h);
    let d_half = (f(u + 0.5 * h)? - f(u - 0.5 * h)?) / h;
    Ok((4.0 * d_half - d_h) / 3.0)
}

/// Nodes and weights of Gauss-Laguerre quadrature for the weight e^{-t} on [0, inf).
pub fn gauss_laguerre_nodes(order: usize) -> Result<Vec<(f64, f64)>> {
    if !(1..=128).contains(&order) {
        return Err(Error::InvalidArgument(format!("quadrature order {order} outside 1..=128")));
    }
    let n = order;
    let nf = n as f64;
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(n);
    let mut z = 0.0;
    for i in 0..n {
        // initial guesses for the i-th smallest zero of L_n
        z = match i {
            0 => 3.0 / (1.0 + 2.4 * nf),
            1 => z + 15.0 / (1.0 + 2.5 * nf),
            _ => {
                let ai = (i - 1) as f64;
                z + ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - out[i - 2].0)
            }
        };
        let mut pp = 0.0;
        let mut p2 = 0.0;
        for _ in 0..100 {
            let mut p1 = 1.0;
            p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf - 1.0 - z) * p2 - (jf - 1.0) * p3) / jf;
            }
            pp = (nf * p1 - nf * p2) / z;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 * z.abs().max(1.0) {
                break;
            }
        }
        out.push((z, -1.0 / (pp * nf * p2)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_small_table() {
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert!((gamma(0.5).unwrap() - PI.sqrt()).abs() < 1e-14);
        assert!((gamma(4.0 / 3.0).unwrap() - 0.892_979_511_569_249_2).abs() < 1e-13);
        assert!((gamma(-0.5).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn gamma_poles_and_overflow() {
        assert!(matches!(gamma(0.0), Err(Error::Pole(_))));
        assert!(matches!(gamma(-3.0), Err(Error::Pole(_))));
        assert!(matches!(gamma(-3.0 + 1e-13), Err(Error::Pole(_))));
        assert!(gamma(-3.0 + 1e-9).is_ok());
        assert!(matches!(gamma(180.0), Err(Error::Overflow(_))));
    }

    #[test]
    fn roots_of_simple_functions() {
        let g = ScanGrid::new(-3.0, 3.0, 601).unwrap();
        let r = find_roots(|u| Some(u * u - 1.0), &g, 1e-10);
        assert_eq!(r.len(), 2);
        assert!((r[0] + 1.0).abs() < 1e-9 && (r[1] - 1.0).abs() < 1e-9);
        assert!(find_roots(|u| Some(u * u + 1.0), &g, 1e-10).is_empty());
        let g = ScanGrid::new(0.5, 7.0, 1301).unwrap();
        let r = find_roots(|u| Some(u.sin()), &g, 1e-12);
        assert_eq!(r.len(), 2);
        assert!((r[0] - PI).abs() < 1e-10 && (r[1] - 2.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn undefined_points_split_the_scan() {
        let g = ScanGrid::new(-1.0, 1.0, 201).unwrap();
        // 1/u changes sign across the pole but must not be reported
        let r = find_roots(|u| if u.abs() < 1e-9 { None } else { Some(1.0 / u) }, &g, 1e-10);
        assert!(r.is_empty());
    }

    #[test]
    fn minimize_examples() {
        let g = ScanGrid::new(-5.0, 5.0, 1001).unwrap();
        assert!((minimize_scalar(|u| Some((u - 2.0) * (u - 2.0)), &g, 1e-8).unwrap() - 2.0).abs() < 1e-7);
        let g = ScanGrid::new(-1.0, 1.0, 101).unwrap();
        assert!(minimize_scalar(|u| Some(u.abs() + 1.0), &g, 1e-10).unwrap().abs() < 1e-9);
        let g = ScanGrid::new(0.0, 2.0 * PI, 629).unwrap();
        assert!((minimize_scalar(|u| Some(u.cos()), &g, 1e-8).unwrap() - PI).abs() < 1e-6);
        assert!(matches!(minimize_scalar(|_| None, &g, 1e-8), Err(Error::NoDefinedPoint)));
    }

    #[test]
    fn derivative_examples() {
        let d = derivative(|u| Ok::<_, ()>(u * u), 3.0, 1e-4).unwrap();
        assert!((d - 6.0).abs() < 1e-8);
        let d = derivative(|_| Ok::<_, ()>(5.0), 1.0, 1e-4).unwrap();
        assert_eq!(d, 0.0);
        let d = derivative(|u: f64| Ok::<_, ()>(u.exp()), 1.0, 1e-4).unwrap();
        assert!((d - std::f64::consts::E).abs() < 1e-8);
    }

    #[test]
    fn laguerre_low_orders() {
        let n1 = gauss_laguerre_nodes(1).unwrap();
        assert!((n1[0].0 - 1.0).abs() < 1e-14 && (n1[0].1 - 1.0).abs() < 1e-14);
        let n2 = gauss_laguerre_nodes(2).unwrap();
        let s = 2f64.sqrt();
        assert!((n2[0].0 - (2.0 - s)).abs() < 1e-13);
        assert!((n2[1].0 - (2.0 + s)).abs() < 1e-13);
        assert!((n2[0].1 - (2.0 + s) / 4.0).abs() < 1e-13);
        assert!((n2[1].1 - (2.0 - s) / 4.0).abs() < 1e-13);
        let w: f64 = gauss_laguerre_nodes(16).unwrap().iter().map(|p| p.1).sum();
        assert!((w - 1.0).abs() < 1e-12);
        assert!(gauss_laguerre_nodes(0).is_err() && gauss_laguerre_nodes(129).is_err());
    }

    #[test]
    fn grid_parsing() {
        let g: ScanGrid = "-8:3:2201".parse().unwrap();
        assert_eq!(g, ScanGrid { lo: -8.0, hi: 3.0, points: 2201 });
        assert!((g.step() - 0.005).abs() < 1e-15);
        assert_eq!(g.point(2200), 3.0);
        assert!("1:0:5".parse::<ScanGrid>().is_err());
        assert!("0:1".parse::<ScanGrid>().is_err());
    }
}
