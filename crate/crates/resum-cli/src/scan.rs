use std::io::Write;
use std::path::Path;

use resum::{AmplitudeCurve, RidgeFunctional, TransformKind};
use serde_json::json;

use crate::format::{cell, json_num, json_raw};
use crate::problem::parse_kinds;
use crate::{load_problem, resolve_grid, Failure, Format};

struct Point {
    u: f64,
    lower: Option<f64>,
    upper: Option<f64>,
    ridge: Option<f64>,
}

pub fn run(
    path: &Path,
    kind: Option<&str>,
    grid: Option<&str>,
    format: Format,
    out: &mut impl Write,
) -> Result<u8, Failure> {
    let pf = load_problem(path)?;
    let kinds = match kind {
        Some(k) => parse_kinds(k).map_err(|e| Failure::input(format!("--kind: {e}")))?,
        None => pf.kinds.clone().unwrap_or_default(),
    };
    let kind: TransformKind = match kinds.as_slice() {
        [k] => *k,
        _ => return Err(Failure::input("scan needs exactly one transform kind (--kind)")),
    };
    let grid = resolve_grid(grid, pf.grid)?;
    let (s, beta) = pf.pipeline_input().map_err(|e| Failure::undefined(e.to_string()))?;
    let k = s.order();
    if k < 2 {
        return Err(Failure::undefined(format!("order too low: {} coefficient(s) in use", k + 1)));
    }
    let built = |order| AmplitudeCurve::new(&s, kind, beta, order).map_err(|e| Failure::undefined(e.to_string()));
    let lower = built(k - 1)?;
    let upper = built(k)?;
    let ridge = RidgeFunctional::new(&s, kind, beta, k - 1, 0.5).map_err(|e| Failure::undefined(e.to_string()))?;

    let points: Vec<Point> = grid
        .iter()
        .map(|u| Point {
            u,
            lower: lower.amplitude_at(u).ok().filter(|v| v.is_finite()),
            upper: upper.amplitude_at(u).ok().filter(|v| v.is_finite()),
            ridge: ridge.cost(u),
        })
        .collect();
    let lo_name = format!("B_{}", k - 1);
    let hi_name = format!("B_{k}");

    let written = match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let r = w.write_record(["u", &lo_name, &hi_name, "F"]).and_then(|_| {
                for p in &points {
                    w.write_record([cell(Some(p.u)), cell(p.lower), cell(p.upper), cell(p.ridge)])?;
                }
                Ok(())
            });
            r.and_then(|_| w.flush().map_err(csv::Error::from)).map_err(std::io::Error::other)
        }
        Format::Text => {
            let mut r = writeln!(out, "{:<12} {:<12} {:<12} {:<12}", "u", lo_name, hi_name, "F");
            for p in &points {
                r = r.and_then(|_| {
                    writeln!(
                        out,
                        "{:<12} {:<12} {:<12} {:<12}",
                        cell(Some(p.u)),
                        cell(p.lower),
                        cell(p.upper),
                        cell(p.ridge)
                    )
                });
            }
            r
        }
        Format::Json => {
            let rows: Vec<_> = points
                .iter()
                .map(|p| {
                    json!({
                        "u": json_num(Some(p.u)),
                        "lower": json_num(p.lower),
                        "upper": json_num(p.upper),
                        "ridge": json_num(p.ridge),
                        "raw": {
                            "u": json_raw(Some(p.u)),
                            "lower": json_raw(p.lower),
                            "upper": json_raw(p.upper),
                            "ridge": json_raw(p.ridge),
                        },
                    })
                })
                .collect();
            let v = json!({
                "kind": kind.name(),
                "lower_order": k - 1,
                "upper_order": k,
                "points": rows,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"))
        }
    };
    written.map_err(|e| Failure::input(format!("writing output: {e}")))?;
    Ok(0)
}
