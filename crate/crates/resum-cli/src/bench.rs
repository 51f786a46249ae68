use std::io::Write;
use std::path::Path;

use resum::benchmarks::{problem, reference_table, run_table, ReferenceTable, TableRow};
use resum::{Method, ScanGrid, TransformKind};

use crate::format::{cell, sig6};
use crate::{resolve_grid, Failure};

const NOT_REPRODUCIBLE: &str = "not reproducible: coefficients unavailable";

struct Cell {
    kind: TransformKind,
    method: Method,
    ours: Option<f64>,
    u: Option<f64>,
    reference: Option<f64>,
    abs_dev: Option<f64>,
    rel_dev: Option<f64>,
    verdict: &'static str,
}

impl Cell {
    fn ok(&self) -> bool {
        matches!(self.verdict, "ok" | NOT_REPRODUCIBLE)
    }
}

fn compare(t: &ReferenceTable, rows: &[TableRow]) -> Vec<Cell> {
    let mut cells = Vec::new();
    for (kind, reference) in &t.rows {
        for (j, method) in Method::ALL.iter().enumerate() {
            let row = rows.iter().find(|r| r.kind == *kind && r.method == *method);
            let ours = row.and_then(|r| r.amplitude);
            let u = row.and_then(|r| r.u);
            let want = reference[j];
            let (abs_dev, rel_dev) = match (ours, want) {
                (Some(a), Some(b)) => (Some((a - b).abs()), Some(((a - b) / b).abs())),
                _ => (None, None),
            };
            let verdict = if !t.reproducible {
                NOT_REPRODUCIBLE
            } else {
                match (ours, want) {
                    (Some(_), Some(_)) => {
                        let dev = if t.absolute { abs_dev } else { rel_dev };
                        if dev.is_some_and(|d| d <= t.tolerance) {
                            "ok"
                        } else {
                            "outside tolerance"
                        }
                    }
                    (None, None) => "ok",
                    (Some(_), None) => "defined here, undefined in reference",
                    (None, Some(_)) => "undefined here",
                }
            };
            cells.push(Cell { kind: *kind, method: *method, ours, u, reference: want, abs_dev, rel_dev, verdict });
        }
    }
    cells
}

fn table_csv(cells: &[Cell]) -> csv::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["kind".to_string()];
    header.extend(Method::ALL.iter().map(|m| m.name().to_string()));
    w.write_record(&header)?;
    for kind in TransformKind::ALL {
        let row: Vec<&Cell> = cells.iter().filter(|c| c.kind == kind).collect();
        if row.is_empty() {
            continue;
        }
        let mut rec = vec![kind.label().to_string()];
        rec.extend(Method::ALL.iter().map(|m| cell(row.iter().find(|c| c.method == *m).and_then(|c| c.ours))));
        w.write_record(&rec)?;
    }
    w.into_inner().map_err(|e| csv::Error::from(e.into_error()))
}

pub fn run(tables: &[u8], dir: &Path, grid: Option<&str>, out: &mut impl Write) -> Result<u8, Failure> {
    let grid: ScanGrid = resolve_grid(grid, None)?;
    let numbers: Vec<u8> = if tables.is_empty() { (1..=17).collect() } else { tables.to_vec() };
    let mut specs = Vec::new();
    for &n in &numbers {
        let t =
            reference_table(n).ok_or_else(|| Failure::input(format!("--table {n}: tables are numbered 1 to 17")))?;
        let p =
            problem(t.problem).ok_or_else(|| Failure::input(format!("table {n}: unknown problem {}", t.problem)))?;
        specs.push((t, p));
    }

    // tables are independent; results are collected in request order
    let results: Vec<Vec<TableRow>> = std::thread::scope(|scope| {
        let handles: Vec<_> =
            specs.iter().map(|(_, p)| scope.spawn(|| run_table(p, &TransformKind::ALL, &Method::ALL, &grid))).collect();
        handles.into_iter().map(|h| h.join().expect("table worker")).collect()
    });

    std::fs::create_dir_all(dir).map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?;
    let io = |e: std::io::Error| Failure::input(format!("writing to {}: {e}", dir.display()));
    let mut summary = csv::Writer::from_writer(Vec::new());
    summary
        .write_record([
            "table",
            "problem",
            "kind",
            "method",
            "value",
            "u",
            "reference",
            "abs_dev",
            "rel_dev",
            "tolerance",
            "verdict",
        ])
        .map_err(|e| Failure::input(e.to_string()))?;
    let mut failures = 0;
    for ((t, p), rows) in specs.iter().zip(&results) {
        let cells = compare(t, rows);
        let bytes = table_csv(&cells).map_err(|e| Failure::input(e.to_string()))?;
        std::fs::write(dir.join(format!("table_{:02}.csv", t.number)), bytes).map_err(io)?;
        let tol = format!("{}{}", sig6(t.tolerance), if t.absolute { " abs" } else { " rel" });
        for c in &cells {
            summary
                .write_record([
                    t.number.to_string(),
                    p.id.to_string(),
                    c.kind.name().to_string(),
                    c.method.name().to_string(),
                    cell(c.ours),
                    cell(c.u),
                    cell(c.reference),
                    cell(c.abs_dev),
                    cell(c.rel_dev),
                    tol.clone(),
                    c.verdict.to_string(),
                ])
                .map_err(|e| Failure::input(e.to_string()))?;
        }
        let bad: Vec<&Cell> = cells.iter().filter(|c| !c.ok()).collect();
        failures += bad.len();
        let head = if t.reproducible {
            format!("{}/{} cells within {tol}", cells.len() - bad.len(), cells.len())
        } else {
            NOT_REPRODUCIBLE.to_string()
        };
        writeln!(out, "table {:>2} ({}): {head}", t.number, p.id).map_err(io)?;
        for c in bad {
            writeln!(
                out,
                "    {} {}: {} vs {} ({})",
                c.kind.name(),
                c.method.name(),
                c.ours.map(sig6).unwrap_or_else(|| "--".into()),
                c.reference.map(sig6).unwrap_or_else(|| "--".into()),
                c.verdict
            )
            .map_err(io)?;
        }
    }
    let bytes = summary.into_inner().map_err(|e| Failure::input(e.to_string()))?;
    std::fs::write(dir.join("summary.csv"), bytes).map_err(io)?;
    Ok(if failures == 0 { 0 } else { 1 })
}
