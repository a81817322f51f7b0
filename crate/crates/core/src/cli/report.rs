use std::io::Write;

use serde::{Deserialize, Serialize};

use super::{CliError, Format};
use crate::sensitivity::{CellStatus, Column, TableAudit, Tolerance};
use crate::{CrispParams, CycleQuantities, FuzzySpreads, SolutionRecord, ZetaMethod};

/// One sweep output row.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepLine {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
    pub delta: f64,
    pub zeta: f64,
    pub q_star: f64,
    pub z_star: f64,
    pub rel_q: f64,
    pub rel_z: f64,
}

impl SweepLine {
    pub fn new(sp: FuzzySpreads, r: &SolutionRecord) -> Self {
        SweepLine {
            d1: sp.d1,
            d2: sp.d2,
            d3: sp.d3,
            d4: sp.d4,
            delta: r.delta,
            zeta: r.zeta,
            q_star: r.q_star,
            z_star: r.z_star,
            rel_q: r.rel_q,
            rel_z: r.rel_z,
        }
    }

    pub fn spreads(&self) -> FuzzySpreads {
        FuzzySpreads::new(self.d1, self.d2, self.d3, self.d4)
    }

    pub fn record(&self) -> SolutionRecord {
        SolutionRecord {
            delta: self.delta,
            zeta: self.zeta,
            q_star: self.q_star,
            z_star: self.z_star,
            rel_q: self.rel_q,
            rel_z: self.rel_z,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzyReport {
    pub params: CrispParams,
    pub spreads: FuzzySpreads,
    pub zeta_method: ZetaMethod,
    pub zeta_closed_form: f64,
    pub zeta_quadrature: f64,
    pub solution: SolutionRecord,
    pub baseline_q_star: f64,
    pub baseline_z_star: f64,
}

// Shortest representation that parses back to the same f64.
fn num(v: f64) -> String {
    format!("{v:?}")
}

fn json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_records(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn crisp(
    out: &mut dyn Write,
    format: Format,
    params: &CrispParams,
    solution: &SolutionRecord,
    cycle: &CycleQuantities,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Crisp<'a> {
                params: &'a CrispParams,
                solution: &'a SolutionRecord,
                cycle: &'a CycleQuantities,
            }
            json(
                out,
                &Crisp {
                    params,
                    solution,
                    cycle,
                },
            )
        }
        Format::Csv => csv_records(
            out,
            &[
                "phi", "psi", "h", "s", "q_star", "z_star", "t", "t1", "leaked",
            ],
            &[[
                params.phi,
                params.psi,
                params.h,
                params.s,
                solution.q_star,
                solution.z_star,
                cycle.t,
                cycle.t1,
                cycle.leaked,
            ]
            .map(num)
            .to_vec()],
        ),
        Format::Table => {
            writeln!(
                out,
                "crisp leakage EOQ  phi={} psi={} h={} s={}",
                params.phi, params.psi, params.h, params.s
            )?;
            if params.psi == 0.0 {
                writeln!(out, "  (no leakage: classical EOQ)")?;
            }
            writeln!(out, "  optimal lot size q*   {:>14.6}", solution.q_star)?;
            writeln!(out, "  minimum cost C_min    {:>14.6}", solution.z_star)?;
            writeln!(out, "  cycle length t        {:>14.6}", cycle.t)?;
            writeln!(out, "  depletion time t1     {:>14.6}", cycle.t1)?;
            writeln!(out, "  leaked per cycle      {:>14.6}", cycle.leaked)?;
            Ok(())
        }
    }
}

pub fn fuzzy(out: &mut dyn Write, format: Format, r: &FuzzyReport) -> Result<(), CliError> {
    let s = &r.solution;
    match format {
        Format::Json => json(out, r),
        Format::Csv => csv_records(
            out,
            &[
                "d1",
                "d2",
                "d3",
                "d4",
                "delta",
                "zeta",
                "zeta_quadrature",
                "zeta_method",
                "q_star",
                "z_star",
                "rel_q",
                "rel_z",
            ],
            &[vec![
                num(r.spreads.d1),
                num(r.spreads.d2),
                num(r.spreads.d3),
                num(r.spreads.d4),
                num(s.delta),
                num(r.zeta_closed_form),
                num(r.zeta_quadrature),
                method_name(r.zeta_method).to_string(),
                num(s.q_star),
                num(s.z_star),
                num(s.rel_q),
                num(s.rel_z),
            ]],
        ),
        Format::Table => {
            let p = &r.params;
            let sp = &r.spreads;
            writeln!(
                out,
                "fuzzy leakage EOQ  phi={} psi={} h={} s={}",
                p.phi, p.psi, p.h, p.s
            )?;
            writeln!(
                out,
                "  spreads d1={} d2={} d3={} d4={}",
                sp.d1, sp.d2, sp.d3, sp.d4
            )?;
            writeln!(out, "  delta                 {:>14.6}", s.delta)?;
            writeln!(out, "  zeta (closed form)    {:>14.8}", r.zeta_closed_form)?;
            writeln!(out, "  zeta (quadrature)     {:>14.8}", r.zeta_quadrature)?;
            if r.zeta_method == ZetaMethod::QuadratureFallback {
                writeln!(
                    out,
                    "  note: spreads near singular; closed form fell back to quadrature"
                )?;
            }
            writeln!(out, "  optimal lot size q*   {:>14.6}", s.q_star)?;
            writeln!(out, "  minimum cost Z*       {:>14.6}", s.z_star)?;
            writeln!(out, "  crisp baseline q*_c   {:>14.6}", r.baseline_q_star)?;
            writeln!(out, "  crisp baseline Z*_c   {:>14.6}", r.baseline_z_star)?;
            writeln!(out, "  Rel_q (%)             {:>14.6}", s.rel_q)?;
            writeln!(out, "  Rel_Z (%)             {:>14.6}", s.rel_z)?;
            Ok(())
        }
    }
}

fn method_name(m: ZetaMethod) -> &'static str {
    match m {
        ZetaMethod::ClosedForm => "closed_form",
        ZetaMethod::QuadratureFallback => "quadrature_fallback",
    }
}

pub const SWEEP_HEADER: [&str; 10] = [
    "d1", "d2", "d3", "d4", "delta", "zeta", "q_star", "z_star", "rel_q", "rel_z",
];

pub fn sweep(out: &mut dyn Write, format: Format, lines: &[SweepLine]) -> Result<(), CliError> {
    match format {
        Format::Json => json(out, &lines),
        Format::Csv => {
            let rows: Vec<Vec<String>> = lines
                .iter()
                .map(|l| {
                    [
                        l.d1, l.d2, l.d3, l.d4, l.delta, l.zeta, l.q_star, l.z_star, l.rel_q,
                        l.rel_z,
                    ]
                    .map(num)
                    .to_vec()
                })
                .collect();
            csv_records(out, &SWEEP_HEADER, &rows)
        }
        Format::Table => {
            writeln!(
                out,
                "{:>7} {:>7} {:>6} {:>6} {:>9} {:>11} {:>10} {:>10} {:>8} {:>8}",
                "d1", "d2", "d3", "d4", "delta", "zeta", "q*", "Z*", "Rel_q", "Rel_Z"
            )?;
            for l in lines {
                writeln!(
                    out,
                    "{:>7} {:>7} {:>6} {:>6} {:>9.3} {:>11.8} {:>10.3} {:>10.2} {:>8.4} {:>8.4}",
                    l.d1, l.d2, l.d3, l.d4, l.delta, l.zeta, l.q_star, l.z_star, l.rel_q, l.rel_z
                )?;
            }
            Ok(())
        }
    }
}

fn status_name(s: CellStatus) -> &'static str {
    match s {
        CellStatus::Pass => "pass",
        CellStatus::Deviation => "deviation",
        CellStatus::Fail => "fail",
    }
}

fn tolerance_text(t: Tolerance) -> String {
    match t {
        Tolerance::Absolute(v) => format!("abs {v:e}"),
        Tolerance::Relative(v) => format!("rel {v:e}"),
    }
}

pub fn audit_header() -> Vec<String> {
    let mut h: Vec<String> = ["d1", "d2", "d3", "d4"].map(String::from).to_vec();
    for c in Column::ALL {
        let n = c.name();
        h.extend([
            n.to_string(),
            format!("paper_{n}"),
            format!("{n}_abs_dev"),
            format!("{n}_rel_dev"),
            format!("{n}_status"),
        ]);
    }
    h.push("zeta_sign_contradiction".into());
    h
}

pub fn audit(out: &mut dyn Write, format: Format, audit: &TableAudit) -> Result<(), CliError> {
    match format {
        Format::Json => json(out, audit),
        Format::Csv => {
            let header = audit_header();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let rows: Vec<Vec<String>> = audit
                .rows
                .iter()
                .map(|row| {
                    let sp = row.spreads;
                    let mut v: Vec<String> = [sp.d1, sp.d2, sp.d3, sp.d4].map(num).to_vec();
                    for c in Column::ALL {
                        let cell = row.cell(c);
                        v.extend([
                            num(cell.recomputed),
                            num(cell.published),
                            num(cell.abs_dev),
                            num(cell.rel_dev),
                            status_name(cell.status).to_string(),
                        ]);
                    }
                    v.push(row.cell(Column::Zeta).sign_contradiction.to_string());
                    v
                })
                .collect();
            csv_records(out, &header, &rows)
        }
        Format::Table => {
            let mode = match audit.mode {
                crate::sensitivity::AuditMode::Pipeline => {
                    "recomputed pipeline, exact crisp baseline"
                }
                crate::sensitivity::AuditMode::PublishedBaseline => {
                    "q*, Z*, Rel from the table's own zeta, baseline q*_c=108, Z*_c=1104"
                }
            };
            writeln!(out, "reference table audit ({mode})")?;
            writeln!(out, "column tolerances:")?;
            if let Some(row) = audit.rows.first() {
                for cell in &row.cells {
                    let kind = if cell.hard { "hard" } else { "informational" };
                    writeln!(
                        out,
                        "  {:<8} {:<12} {}",
                        cell.column.name(),
                        tolerance_text(cell.tolerance),
                        kind
                    )?;
                }
            }
            writeln!(out)?;
            for (i, row) in audit.rows.iter().enumerate() {
                let sp = row.spreads;
                writeln!(
                    out,
                    "row {:>2}  d=({}, {}, {}, {})",
                    i + 1,
                    sp.d1,
                    sp.d2,
                    sp.d3,
                    sp.d4
                )?;
                for cell in &row.cells {
                    let flag = if cell.sign_contradiction {
                        "  SIGN: printed value contradicts zeta > 0"
                    } else {
                        ""
                    };
                    writeln!(
                        out,
                        "    {:<7} ours {:>14.8}  published {:>12}  dev {:>11.3e}  {}{}",
                        cell.column.name(),
                        cell.recomputed,
                        cell.published,
                        cell.abs_dev,
                        status_name(cell.status),
                        flag
                    )?;
                }
            }
            writeln!(out)?;
            writeln!(out, "trend claims (published / recomputed):")?;
            for t in &audit.trends {
                writeln!(
                    out,
                    "  {:<45} {:<5} / {}",
                    t.claim, t.holds_published, t.holds_recomputed
                )?;
            }
            writeln!(out)?;
            writeln!(
                out,
                "summary: {} hard failures, {} informational deviations, {} zeta sign contradictions",
                audit.hard_failures(),
                audit.deviations(),
                audit.sign_contradictions()
            )?;
            Ok(())
        }
    }
}
