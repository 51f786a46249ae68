//! Critical index from the diff-log series.
//!
//! For f ~ B x^beta the logarithmic derivative L = f'/f behaves as beta x^-1, so the index is
//! the amplitude of L resummed with target exponent -1.

use crate::error::{Error, Result};
use crate::numerics::ScanGrid;
use crate::optimizer::{analyze, Analysis, Condition};
use crate::selector::{select, Method};
use crate::series::TruncatedSeries;
use crate::transforms::TransformKind;

pub const INDEX_TARGET: f64 = -1.0;

#[derive(Debug, Clone, PartialEq)]
pub struct IndexEstimate {
    pub beta_estimate: f64,
    pub u: f64,
    pub method: Method,
    pub kind: TransformKind,
    pub condition: Condition,
}

/// Runs both optimization conditions and the ridge on the diff-log series of `s`.
pub fn analyze_index(s: &TruncatedSeries, kind: TransformKind, grid: &ScanGrid) -> Result<(TruncatedSeries, Analysis)> {
    if s.order() < 2 {
        return Err(Error::InvalidArgument("order too low for a diff-log estimate".into()));
    }
    let l = s.diff_log()?;
    let a = analyze(&l, kind, INDEX_TARGET, grid)?;
    Ok((l, a))
}

pub fn estimate_index(
    s: &TruncatedSeries,
    kind: TransformKind,
    grid: &ScanGrid,
    method: Method,
) -> Result<IndexEstimate> {
    let (l, a) = analyze_index(s, kind, grid)?;
    let chosen = match method {
        Method::Ridge => a.ridge.clone().ok_or(Error::NoDefinedPoint)?,
        Method::Select(c) => select(&l, kind, c, &a.pooled())?.chosen,
    };
    Ok(IndexEstimate { beta_estimate: chosen.amplitude, u: chosen.u, method, kind, condition: chosen.condition })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selector::Criterion;

    #[test]
    fn power_law_index() {
        // (1+x)^2
        let s = TruncatedSeries::new(vec![1.0, 2.0, 1.0, 0.0, 0.0, 0.0, 0.0]).unwrap();
        let e = estimate_index(&s, TransformKind::FractionalIntegral, &ScanGrid::DEFAULT, Method::Ridge).unwrap();
        assert!((e.beta_estimate - 2.0).abs() < 1e-2, "{e:?}");
        let e = estimate_index(
            &s,
            TransformKind::FractionalIntegral,
            &ScanGrid::DEFAULT,
            Method::Select(Criterion::Lasso1),
        );
        if let Ok(e) = e {
            assert!((e.beta_estimate - 2.0).abs() < 1e-2, "{e:?}");
        }
    }

    #[test]
    fn binomial_indices() {
        for p in [0.5, 1.0, 2.0] {
            let mut c = vec![1.0];
            for n in 1..=6 {
                let prev = c[n - 1];
                c.push(prev * (p - (n - 1) as f64) / n as f64);
            }
            let s = TruncatedSeries::new(c).unwrap();
            let (_, a) = analyze_index(&s, TransformKind::FractionalIntegral, &ScanGrid::DEFAULT).unwrap();
            let r = a.ridge.unwrap();
            assert!((r.amplitude - p).abs() < 1e-2 * p, "p = {p}: {r:?}");
            for m in [Method::Select(Criterion::GenLasso1), Method::Select(Criterion::Lasso1)] {
                if let Ok(e) = estimate_index(&s, TransformKind::FractionalIntegral, &ScanGrid::DEFAULT, m) {
                    assert!((e.beta_estimate - p).abs() < 1e-2 * p, "p = {p}, {m}: {e:?}");
                }
            }
        }
    }

    #[test]
    fn low_order_rejected() {
        let s = TruncatedSeries::new(vec![1.0, 2.0]).unwrap();
        assert!(estimate_index(&s, TransformKind::BorelLeroy, &ScanGrid::DEFAULT, Method::Ridge).is_err());
    }
}
