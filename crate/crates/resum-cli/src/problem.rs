//! Flat key/value problem files.
//!
//! ```text
//! # anomalous dimension
//! beta = -0.5
//! kind = frac-integral, borel-leroy
//! criterion = all
//! grid = -8:10:3601
//! coefficient = 1
//! coefficient = -21/8
//! ```
//!
//! One value per line, `#` starts a comment. `coefficient` repeats in order; every other key
//! appears at most once. `quantity = index` resums the diff-log series for the index instead of
//! an amplitude and takes no `beta`.

use std::fmt;

use resum::benchmarks::Quantity;
use resum::series::parse_coefficient;
use resum::{Method, ScanGrid, TransformKind, TruncatedSeries};

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    /// Coefficients exactly as written.
    pub coefficients: Vec<String>,
    pub series: TruncatedSeries,
    pub beta: Option<f64>,
    pub quantity: Quantity,
    pub kinds: Option<Vec<TransformKind>>,
    pub methods: Option<Vec<Method>>,
    pub grid: Option<ScanGrid>,
    /// Truncation order k, when it overrides the number of coefficients.
    pub order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    /// 1-based line and column; `None` for keys that are missing altogether.
    pub at: Option<(usize, usize)>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.at {
            Some((l, c)) => write!(f, "line {l}, column {c}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { at: Some((line, column)), message: message.into() }
}

pub fn parse_kinds(v: &str) -> Result<Vec<TransformKind>, String> {
    if v.trim().eq_ignore_ascii_case("all") {
        return Ok(TransformKind::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in v.split(',') {
        let k: TransformKind = part.parse().map_err(|e: resum::Error| e.to_string())?;
        if !out.contains(&k) {
            out.push(k);
        }
    }
    Ok(out)
}

pub fn parse_methods(v: &str) -> Result<Vec<Method>, String> {
    if v.trim().eq_ignore_ascii_case("all") {
        return Ok(Method::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in v.split(',') {
        let m: Method = part.parse().map_err(|e: resum::Error| e.to_string())?;
        if !out.contains(&m) {
            out.push(m);
        }
    }
    Ok(out)
}

struct Entry<'a> {
    line: usize,
    key_col: usize,
    value_col: usize,
    value: &'a str,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut coefficients: Vec<(String, f64)> = Vec::new();
        let mut beta = None;
        let mut quantity = None;
        let mut kinds = None;
        let mut methods = None;
        let mut grid = None;
        let mut order = None;
        let mut seen: Vec<(&str, usize)> = Vec::new();
        let mut last_coefficient = None;

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("");
            if body.trim().is_empty() {
                continue;
            }
            let key_col = body.len() - body.trim_start().len() + 1;
            let Some((k, v)) = body.split_once('=') else {
                return Err(err(line, key_col, "expected 'key = value'"));
            };
            let key = k.trim();
            let value_col = k.len() + 1 + (v.len() - v.trim_start().len()) + 1;
            let e = Entry { line, key_col, value_col, value: v.trim() };
            if e.value.is_empty() {
                return Err(err(line, value_col, format!("'{key}' has no value")));
            }
            if key != "coefficient" {
                if let Some((_, first)) = seen.iter().find(|(s, _)| *s == key) {
                    return Err(err(line, key_col, format!("duplicate key '{key}' (first on line {first})")));
                }
            }
            let bad = |msg: String| err(e.line, e.value_col, msg);
            match key {
                "coefficient" => {
                    let c =
                        parse_coefficient(e.value).map_err(|_| bad(format!("invalid coefficient '{}'", e.value)))?;
                    coefficients.push((e.value.to_string(), c));
                    last_coefficient = Some(line);
                }
                "beta" => {
                    let b: f64 = e.value.parse().map_err(|_| bad(format!("invalid beta '{}'", e.value)))?;
                    if !b.is_finite() {
                        return Err(bad(format!("invalid beta '{}'", e.value)));
                    }
                    beta = Some((b, e.line, e.key_col));
                }
                "quantity" => {
                    quantity = Some(match e.value.to_ascii_lowercase().as_str() {
                        "amplitude" => Quantity::Amplitude,
                        "index" => Quantity::Index,
                        other => return Err(bad(format!("quantity '{other}', expected amplitude or index"))),
                    });
                }
                "kind" => kinds = Some(parse_kinds(e.value).map_err(bad)?),
                "criterion" => methods = Some(parse_methods(e.value).map_err(bad)?),
                "grid" => grid = Some(e.value.parse::<ScanGrid>().map_err(|x| bad(x.to_string()))?),
                "order" => {
                    let k: usize = e.value.parse().map_err(|_| bad(format!("invalid order '{}'", e.value)))?;
                    order = Some((k, e.line, e.value_col));
                }
                other => return Err(err(line, key_col, format!("unknown key '{other}'"))),
            }
            seen.push((key, line));
        }

        if coefficients.is_empty() {
            return Err(ParseError { at: None, message: "missing key 'coefficient'".into() });
        }
        let quantity = quantity.unwrap_or(Quantity::Amplitude);
        let beta = match (quantity, beta) {
            (Quantity::Amplitude, None) => return Err(ParseError { at: None, message: "missing key 'beta'".into() }),
            (Quantity::Index, Some((_, l, c))) => return Err(err(l, c, "beta does not apply to quantity = index")),
            (_, b) => b.map(|(b, _, _)| b),
        };
        let order = match order {
            Some((k, l, c)) if k + 1 > coefficients.len() => {
                return Err(err(l, c, format!("order {k} needs {} coefficients, found {}", k + 1, coefficients.len())))
            }
            Some((k, _, _)) => Some(k),
            None => None,
        };
        let values: Vec<f64> = coefficients.iter().map(|(_, c)| *c).collect();
        let series = TruncatedSeries::new(values).map_err(|x| err(last_coefficient.unwrap_or(1), 1, x.to_string()))?;
        Ok(ProblemFile {
            coefficients: coefficients.into_iter().map(|(s, _)| s).collect(),
            series,
            beta,
            quantity,
            kinds,
            methods,
            grid,
            order,
        })
    }

    /// Series truncated at the requested order and the exponent handed to the optimizer.
    pub fn pipeline_input(&self) -> resum::Result<(TruncatedSeries, f64)> {
        let s = match self.order {
            Some(k) => self.series.truncate(k),
            None => self.series.clone(),
        };
        match self.quantity {
            Quantity::Amplitude => Ok((s, self.beta.expect("checked at parse time"))),
            Quantity::Index => Ok((s.diff_log()?, resum::difflog::INDEX_TARGET)),
        }
    }

    /// Order of the input series after the optional override.
    pub fn order(&self) -> usize {
        self.order.unwrap_or(self.series.order())
    }
}
