use std::io::Write;
use std::path::Path;

use resum::benchmarks::{resolve_kind, KindResult, Quantity};
use resum::optimizer::{analyze, Formulation};
use resum::{Method, OptimizationSolution, SolutionStatus, TransformKind};
use serde_json::{json, Value};

use crate::format::{cell, json_num, json_raw, sig6};
use crate::problem::{parse_kinds, parse_methods};
use crate::{load_problem, resolve_grid, Failure, Format};

/// One output line: an optimization solution or the pick of one method.
struct Row {
    kind: TransformKind,
    entry: &'static str,
    label: &'static str,
    u: Option<f64>,
    value: Option<f64>,
    status: &'static str,
}

fn status_name(s: &OptimizationSolution) -> &'static str {
    match s.status {
        SolutionStatus::Exact => "exact",
        SolutionStatus::NearRoot => "near-root",
        SolutionStatus::Fallback => "fallback",
    }
}

struct KindReport {
    result: KindResult,
    error: Option<String>,
}

impl KindReport {
    fn defined(&self) -> bool {
        self.result.picks.iter().any(|(_, p)| p.is_some())
    }

    fn rows(&self) -> Vec<Row> {
        let kind = self.result.kind;
        let mut rows = Vec::new();
        if let Some(a) = &self.result.analysis {
            for s in a.difference.iter().chain(&a.derivative) {
                rows.push(Row {
                    kind,
                    entry: "solution",
                    label: s.condition.name(),
                    u: Some(s.u),
                    value: Some(s.amplitude),
                    status: status_name(s),
                });
            }
        }
        for (m, pick) in &self.result.picks {
            rows.push(match pick {
                Some(s) => Row {
                    kind,
                    entry: "selection",
                    label: m.name(),
                    u: Some(s.u),
                    value: Some(s.amplitude),
                    status: if *m == Method::Ridge { "minimum" } else { status_name(s) },
                },
                None => Row { kind, entry: "selection", label: m.name(), u: None, value: None, status: "undefined" },
            });
        }
        rows
    }
}

pub fn run(
    path: &Path,
    kind: Option<&str>,
    criterion: Option<&str>,
    grid: Option<&str>,
    format: Format,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let pf = load_problem(path)?;
    let kinds = match kind {
        Some(k) => parse_kinds(k).map_err(|e| Failure::input(format!("--kind: {e}")))?,
        None => pf.kinds.clone().unwrap_or_else(|| TransformKind::ALL.to_vec()),
    };
    let methods = match criterion {
        Some(c) => parse_methods(c).map_err(|e| Failure::input(format!("--criterion: {e}")))?,
        None => pf.methods.clone().unwrap_or_else(|| Method::ALL.to_vec()),
    };
    let grid = resolve_grid(grid, pf.grid)?;
    let low = || Failure::undefined(format!("order too low: {} coefficient(s) in use", pf.order() + 1));
    if pf.order() < 2 {
        return Err(low());
    }
    let (s, beta) = pf.pipeline_input().map_err(|e| Failure::undefined(e.to_string()))?;
    if s.order() < 2 {
        return Err(low());
    }

    let reports: Vec<KindReport> = kinds
        .iter()
        .map(|&k| {
            let result = resolve_kind(&s, k, beta, &methods, &grid);
            let error = match &result.analysis {
                Some(_) => None,
                None => analyze(&s, k, beta, &grid).err().map(|e| e.to_string()),
            };
            KindReport { result, error }
        })
        .collect();
    let value_name = match pf.quantity {
        Quantity::Amplitude => "B",
        Quantity::Index => "beta",
    };

    let written = match format {
        Format::Text => write_text(out, &pf.coefficients, beta, &grid, value_name, &reports),
        Format::Csv => write_csv(out, &reports),
        Format::Json => {
            let v = to_json(&pf.coefficients, pf.quantity, beta, &grid, &reports);
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))
        }
    };
    written.map_err(|e| Failure::input(format!("writing output: {e}")))?;

    if reports.iter().any(KindReport::defined) {
        Ok(0)
    } else {
        Err(Failure::undefined("no transform kind gives a defined result"))
    }
}

fn formulation_name(r: &KindReport) -> Option<&'static str> {
    r.result.analysis.as_ref().map(|a| match a.formulation {
        Formulation::Direct => "direct",
        Formulation::Reciprocal => "reciprocal",
    })
}

fn write_text(
    out: &mut impl Write,
    coefficients: &[String],
    beta: f64,
    grid: &resum::ScanGrid,
    value_name: &str,
    reports: &[KindReport],
) -> std::io::Result<()> {
    writeln!(
        out,
        "order {}, beta {}, grid {}:{}:{}",
        coefficients.len() - 1,
        sig6(beta),
        grid.lo,
        grid.hi,
        grid.points
    )?;
    for r in reports {
        writeln!(out)?;
        match (&r.error, formulation_name(r)) {
            (Some(e), _) => writeln!(out, "{}: undefined ({e})", r.result.kind)?,
            (None, Some(f)) => writeln!(out, "{} ({f})", r.result.kind)?,
            (None, None) => writeln!(out, "{}", r.result.kind)?,
        }
        for row in r.rows() {
            writeln!(
                out,
                "  {:<10} {:<15} u = {:<12} {value_name} = {:<12} {}",
                row.entry,
                row.label,
                cell(row.u),
                cell(row.value),
                row.status
            )?;
        }
    }
    Ok(())
}

fn write_csv(out: &mut impl Write, reports: &[KindReport]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["kind", "entry", "label", "u", "value", "status"])?;
    for r in reports {
        for row in r.rows() {
            w.write_record([row.kind.name(), row.entry, row.label, &cell(row.u), &cell(row.value), row.status])?;
        }
    }
    w.flush()
}

fn to_json(
    coefficients: &[String],
    quantity: Quantity,
    beta: f64,
    grid: &resum::ScanGrid,
    reports: &[KindReport],
) -> Value {
    let kinds: Vec<Value> = reports
        .iter()
        .map(|r| {
            let rows: Vec<Value> = r
                .rows()
                .iter()
                .map(|row| {
                    json!({
                        "entry": row.entry,
                        "label": row.label,
                        "u": json_num(row.u),
                        "value": json_num(row.value),
                        "status": row.status,
                        "raw": { "u": json_raw(row.u), "value": json_raw(row.value) },
                    })
                })
                .collect();
            json!({
                "kind": r.result.kind.name(),
                "formulation": formulation_name(r),
                "defined": r.defined(),
                "error": r.error,
                "rows": rows,
            })
        })
        .collect();
    json!({
        "coefficients": coefficients,
        "quantity": match quantity { Quantity::Amplitude => "amplitude", Quantity::Index => "index" },
        "beta": beta,
        "grid": { "lo": grid.lo, "hi": grid.hi, "points": grid.points },
        "kinds": kinds,
    })
}
