//! Borel-type coefficient transforms and their amplitude factors.

use std::fmt;
use std::str::FromStr;

use crate::approximant::{evaluate_root, fit_iterated_root};
use crate::error::{Error, Result};
use crate::numerics::{gamma, gauss_laguerre_nodes};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransformKind {
    BorelLeroy,
    MittagLeffler,
    FractionalDerivative,
    FractionalIntegral,
}

impl TransformKind {
    /// Table order: Mittag-Leffler first, as in the printed tables.
    pub const ALL: [TransformKind; 4] = [
        TransformKind::MittagLeffler,
        TransformKind::BorelLeroy,
        TransformKind::FractionalDerivative,
        TransformKind::FractionalIntegral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::BorelLeroy => "borel-leroy",
            TransformKind::MittagLeffler => "mittag-leffler",
            TransformKind::FractionalDerivative => "frac-derivative",
            TransformKind::FractionalIntegral => "frac-integral",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TransformKind::BorelLeroy => "Borel-Leroy",
            TransformKind::MittagLeffler => "Mittag-Leffler",
            TransformKind::FractionalDerivative => "Fract. Riemann",
            TransformKind::FractionalIntegral => "Fract. Integral",
        }
    }
}

impl fmt::Display for TransformKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TransformKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "borel-leroy" | "bl" => Ok(TransformKind::BorelLeroy),
            "mittag-leffler" | "ml" => Ok(TransformKind::MittagLeffler),
            "frac-derivative" | "fd" => Ok(TransformKind::FractionalDerivative),
            "frac-integral" | "fi" => Ok(TransformKind::FractionalIntegral),
            other => Err(Error::InvalidArgument(format!("unknown transform kind '{other}'"))),
        }
    }
}

/// Coefficients b_n(u) of a transformed series.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedSeries {
    pub b: Vec<f64>,
    pub u: f64,
    pub kind: TransformKind,
}

impl TransformedSeries {
    pub fn order(&self) -> usize {
        self.b.len() - 1
    }
}

/// Control parameter at which every kind reduces to the plain Borel transform.
pub fn borel_point(kind: TransformKind) -> f64 {
    match kind {
        TransformKind::MittagLeffler => 1.0,
        _ => 0.0,
    }
}

const TRANSFORM_POLE_TOL: f64 = 1e-10;

fn near_pole(z: f64) -> bool {
    z <= 0.0 && (z - z.round()).abs() < TRANSFORM_POLE_TOL
}

pub fn transform_coefficients(s: &TruncatedSeries, kind: TransformKind, u: f64) -> Result<TransformedSeries> {
    let mut b = Vec::with_capacity(s.order() + 1);
    for (n, &a) in s.coeffs().iter().enumerate() {
        let nf = n as f64;
        let pole = |z: f64| -> Result<f64> {
            if near_pole(z) {
                Err(Error::TransformPole { index: n })
            } else {
                gamma(z)
            }
        };
        let bn = match kind {
            TransformKind::BorelLeroy => a / pole(nf + u + 1.0)?,
            TransformKind::MittagLeffler => a / pole(nf * u + 1.0)?,
            TransformKind::FractionalDerivative => {
                let g = gamma(nf + 1.0)?;
                a * pole(nf - u + 1.0)? / (g * g)
            }
            TransformKind::FractionalIntegral => a * (nf + 1.0).powf(u) / gamma(nf + 1.0)?,
        };
        if !bn.is_finite() {
            return Err(Error::TransformPole { index: n });
        }
        b.push(bn);
    }
    Ok(TransformedSeries { b, u, kind })
}

/// Factor converting the marginal amplitude of the transformed approximant into B.
pub fn amplitude_factor(kind: TransformKind, beta: f64, u: f64) -> Result<f64> {
    match kind {
        TransformKind::BorelLeroy => gamma(beta + u + 1.0),
        TransformKind::MittagLeffler => gamma(beta * u + 1.0),
        TransformKind::FractionalDerivative => {
            let g = gamma(beta + 1.0)?;
            Ok(g * g / gamma(beta - u + 1.0)?)
        }
        TransformKind::FractionalIntegral => {
            // (beta + 1)^u is real for a negative base only at integer u
            if beta == -1.0 || (beta < -1.0 && u.fract() != 0.0) {
                return Err(Error::Domain(beta));
            }
            Ok(gamma(beta + 1.0)? / (beta + 1.0).powf(u))
        }
    }
}

/// Resummed value at finite x by Gauss-Laguerre quadrature of the inverse transform.
pub fn evaluate_resummed(
    s: &TruncatedSeries,
    kind: TransformKind,
    beta: f64,
    u: f64,
    x: f64,
    quad_order: usize,
) -> Result<f64> {
    if matches!(kind, TransformKind::FractionalDerivative | TransformKind::FractionalIntegral) {
        return Err(Error::UnsupportedKind(kind.name()));
    }
    if !(x >= 0.0) {
        return Err(Error::InvalidArgument(format!("x = {x} must be non-negative")));
    }
    let t = transform_coefficients(s, kind, u)?;
    let r = fit_iterated_root(&t, beta)?;
    let mut acc = 0.0;
    for (node, w) in gauss_laguerre_nodes(quad_order)? {
        acc += w * match kind {
            TransformKind::BorelLeroy => evaluate_root(&r, x * node)? * node.powf(u),
            _ => evaluate_root(&r, x * node.powf(u))?,
        };
    }
    Ok(acc)
}
