//! Truncated power series and the little algebra the pipeline needs.

use crate::error::{Error, Result};

/// Coefficients a_0..a_k of a small-variable expansion.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<f64>,
}

/// Large-variable behaviour f ~ B x^beta.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetAsymptotics {
    pub beta: f64,
    pub exact_amplitude: Option<f64>,
}

impl TargetAsymptotics {
    pub fn new(beta: f64) -> Self {
        TargetAsymptotics { beta, exact_amplitude: None }
    }

    pub fn with_amplitude(beta: f64, b: f64) -> Self {
        TargetAsymptotics { beta, exact_amplitude: Some(b) }
    }
}

/// Parses a printed coefficient: a decimal (`-0.219`, `2.176347e-3`) or a ratio (`-21/8`).
pub fn parse_coefficient(s: &str) -> Result<f64> {
    let t = s.trim();
    let bad = || Error::InvalidArgument(format!("coefficient '{s}'"));
    let v = match t.split_once('/') {
        Some((p, q)) => {
            let p: f64 = p.trim().parse().map_err(|_| bad())?;
            let q: f64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0.0 {
                return Err(bad());
            }
            p / q
        }
        None => t.parse().map_err(|_| bad())?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(bad())
    }
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("series needs at least one coefficient".into()));
        }
        if let Some(i) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument(format!("coefficient {i} is not finite")));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_printed(printed: &[&str]) -> Result<Self> {
        Self::new(printed.iter().map(|s| parse_coefficient(s)).collect::<Result<_>>()?)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Keeps a_0..a_k (or everything when k exceeds the order).
    pub fn truncate(&self, k: usize) -> Self {
        TruncatedSeries { coeffs: self.coeffs[..=k.min(self.order())].to_vec() }
    }

    pub fn scale(&self, c: f64) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Value of the polynomial at x.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn cauchy_product(&self, t: &TruncatedSeries, order: usize) -> Self {
        let c = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&m| m <= self.order() && n - m <= t.order())
                    .map(|m| self.coeffs[m] * t.coeffs[n - m])
                    .sum()
            })
            .collect();
        TruncatedSeries { coeffs: c }
    }

    /// f'/f truncated at order k-1 (order 0 for a constant input).
    pub fn diff_log(&self) -> Result<Self> {
        let a = &self.coeffs;
        if a[0] == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let k = self.order();
        if k == 0 {
            return Ok(TruncatedSeries { coeffs: vec![0.0] });
        }
        let mut l: Vec<f64> = Vec::with_capacity(k);
        for n in 0..k {
            let fp = (n + 1) as f64 * a[n + 1];
            let s: f64 = (1..=n).map(|m| a[m] * l[n - m]).sum();
            l.push((fp - s) / a[0]);
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// 1/f truncated at `order`.
    pub fn reciprocal(&self, order: usize) -> Result<Self> {
        let a = &self.coeffs;
        if a[0] == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        let mut r = vec![1.0 / a[0]];
        for n in 1..=order {
            let s: f64 = (1..=n.min(self.order())).map(|m| a[m] * r[n - m]).sum();
            r.push(-s / a[0]);
        }
        Ok(TruncatedSeries { coeffs: r })
    }

    /// f^p truncated at `order`, for a_0 > 0 (or integer p).
    pub fn pow(&self, p: f64, order: usize) -> Result<Self> {
        Ok(TruncatedSeries { coeffs: series_pow(&self.coeffs, p, order)? })
    }

    /// s(f_c x / (1 + x)) re-expanded in x and truncated at the input order.
    pub fn mobius_substitute(&self, f_c: f64) -> Self {
        let k = self.order();
        // w = f_c x/(1+x) = f_c (x - x^2 + x^3 - ...)
        let w: Vec<f64> = (0..=k)
            .map(|n| {
                if n == 0 {
                    0.0
                } else if n % 2 == 1 {
                    f_c
                } else {
                    -f_c
                }
            })
            .collect();
        let mut acc = vec![0.0; k + 1];
        for &c in self.coeffs.iter().rev() {
            let mut next = vec![0.0; k + 1];
            for (i, &ai) in acc.iter().enumerate() {
                if ai == 0.0 {
                    continue;
                }
                for (j, &wj) in w.iter().enumerate().take(k + 1 - i) {
                    next[i + j] += ai * wj;
                }
            }
            next[0] += c;
            acc = next;
        }
        TruncatedSeries { coeffs: acc }
    }
}

/// Taylor coefficients of f^p through `order` by the power recurrence
/// g_n = (1/(n f_0)) sum_{m=1}^{n} (p m - (n - m)) f_m g_{n-m}.
pub(crate) fn series_pow(f: &[f64], p: f64, order: usize) -> Result<Vec<f64>> {
    let f0 = f[0];
    if f0 == 0.0 {
        return Err(Error::ZeroLeadingCoefficient);
    }
    if f0 < 0.0 && p.fract() != 0.0 {
        return Err(Error::ComplexValue);
    }
    let mut g = Vec::with_capacity(order + 1);
    g.push(f0.powf(p));
    for n in 1..=order {
        let mut s = 0.0;
        for m in 1..=n.min(f.len() - 1) {
            s += (p * m as f64 - (n - m) as f64) * f[m] * g[n - m];
        }
        g.push(s / (n as f64 * f0));
    }
    Ok(g)
}
