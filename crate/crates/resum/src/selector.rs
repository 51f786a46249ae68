//! Coefficient-based criteria that pick one control parameter among several solutions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::optimizer::OptimizationSolution;
use crate::series::TruncatedSeries;
use crate::transforms::{borel_point, transform_coefficients, TransformKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// sum |b_n(u)|
    Lasso1,
    /// sum |b_n(u) / a_n|
    Lasso2,
    /// mean |(b_n(u) - b_n(u0)) / b_n(u0)|
    GenLasso1,
    /// mean |(b_n(u) - a_n) / a_n|
    GenLasso2,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [Criterion::GenLasso1, Criterion::GenLasso2, Criterion::Lasso1, Criterion::Lasso2];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Lasso1 => "lasso1",
            Criterion::Lasso2 => "lasso2",
            Criterion::GenLasso1 => "genlass1",
            Criterion::GenLasso2 => "genlass2",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lasso1" => Ok(Criterion::Lasso1),
            "lasso2" => Ok(Criterion::Lasso2),
            "genlass1" | "genlasso1" => Ok(Criterion::GenLasso1),
            "genlass2" | "genlasso2" => Ok(Criterion::GenLasso2),
            other => Err(Error::InvalidArgument(format!("unknown criterion '{other}'"))),
        }
    }
}

/// How a single amplitude is obtained for one kind: a criterion over the pooled solutions, or
/// the ridge functional.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Select(Criterion),
    Ridge,
}

impl Method {
    /// Column order of the printed tables.
    pub const ALL: [Method; 5] = [
        Method::Select(Criterion::GenLasso1),
        Method::Select(Criterion::GenLasso2),
        Method::Select(Criterion::Lasso1),
        Method::Select(Criterion::Lasso2),
        Method::Ridge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Select(c) => c.name(),
            Method::Ridge => "ridge",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ridge" | "functional" => Ok(Method::Ridge),
            other => other.parse().map(Method::Select),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelectionResult {
    pub chosen: OptimizationSolution,
    pub criterion: Criterion,
    pub score: f64,
    /// (u_j, score) in input order.
    pub all_scores: Vec<(f64, f64)>,
}

/// Score of one control parameter. `s` is the series whose transform is scored.
pub fn score(s: &TruncatedSeries, kind: TransformKind, criterion: Criterion, u: f64) -> Result<f64> {
    let b = transform_coefficients(s, kind, u)?.b;
    let a = s.coeffs();
    let v = match criterion {
        Criterion::Lasso1 => b.iter().map(|x| x.abs()).sum(),
        // indices with a_n = 0 are skipped
        Criterion::Lasso2 => b.iter().zip(a).filter(|(_, &an)| an != 0.0).map(|(bn, an)| (bn / an).abs()).sum(),
        Criterion::GenLasso1 => {
            let r = transform_coefficients(s, kind, borel_point(kind))?.b;
            relative_mean(&b, &r)?
        }
        Criterion::GenLasso2 => relative_mean(&b, a)?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::InvalidArgument(format!("{criterion} score is not finite at u = {u}")))
    }
}

/// Mean of |(x_n - r_n) / r_n| over the indices with r_n != 0.
fn relative_mean(x: &[f64], r: &[f64]) -> Result<f64> {
    let terms: Vec<f64> = x.iter().zip(r).filter(|(_, &rn)| rn != 0.0).map(|(xn, rn)| ((xn - rn) / rn).abs()).collect();
    if terms.is_empty() {
        return Err(Error::ZeroReferenceCoefficient(0));
    }
    Ok(terms.iter().sum::<f64>() / terms.len() as f64)
}

/// Minimal score wins; equal scores go to the larger u.
pub fn select(
    s: &TruncatedSeries,
    kind: TransformKind,
    criterion: Criterion,
    solutions: &[OptimizationSolution],
) -> Result<SelectionResult> {
    if solutions.is_empty() {
        return Err(Error::EmptySolutionSet);
    }
    let mut all_scores = Vec::with_capacity(solutions.len());
    let mut best: Option<(usize, f64)> = None;
    for (i, sol) in solutions.iter().enumerate() {
        let sc = score(s, kind, criterion, sol.u)?;
        all_scores.push((sol.u, sc));
        let better = match best {
            None => true,
            Some((j, bs)) => sc < bs || (sc == bs && sol.u > solutions[j].u),
        };
        if better {
            best = Some((i, sc));
        }
    }
    let (i, score) = best.expect("non-empty");
    Ok(SelectionResult { chosen: solutions[i].clone(), criterion, score, all_scores })
}

pub fn lasso1(s: &TruncatedSeries, kind: TransformKind, solutions: &[OptimizationSolution]) -> Result<SelectionResult> {
    select(s, kind, Criterion::Lasso1, solutions)
}

pub fn lasso2(s: &TruncatedSeries, kind: TransformKind, solutions: &[OptimizationSolution]) -> Result<SelectionResult> {
    select(s, kind, Criterion::Lasso2, solutions)
}

pub fn genlasso1(
    s: &TruncatedSeries,
    kind: TransformKind,
    solutions: &[OptimizationSolution],
) -> Result<SelectionResult> {
    select(s, kind, Criterion::GenLasso1, solutions)
}

pub fn genlasso2(
    s: &TruncatedSeries,
    kind: TransformKind,
    solutions: &[OptimizationSolution],
) -> Result<SelectionResult> {
    select(s, kind, Criterion::GenLasso2, solutions)
}
