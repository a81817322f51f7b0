//! Batch solving over spread grids and auditing against the published table.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::defuzzify::{Bounds, FuzzySpreads};
use crate::error::{Error, Result};
use crate::model::{Baseline, CrispParams, SolutionRecord, Solver};

/// Reference table rows, one per printed line, ditto marks filled in.
pub const REFERENCE_CSV: &str = include_str!("../data/table1_v1.csv");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub params: CrispParams,
    pub rows: Vec<FuzzySpreads>,
}

impl SweepSpec {
    /// The published example: φ = 600, ψ = 10, h = 10, s = 100 over the 18 reference rows.
    pub fn reference() -> Self {
        SweepSpec {
            params: CrispParams::published_example(),
            rows: reference_table()
                .iter()
                .map(ReferenceRow::spreads)
                .collect(),
        }
    }

    pub fn validate(&self, bounds: Bounds) -> Result<()> {
        self.params.validate()?;
        for (i, row) in self.rows.iter().enumerate() {
            row.validate(self.params.phi, self.params.psi, bounds)
                .map_err(|e| Error::domain(format!("row {}: {e}", i + 1)))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub spreads: FuzzySpreads,
    pub outcome: Result<SolutionRecord>,
}

/// Solves every row independently; output order follows `spec.rows`.
pub fn run_sweep(spec: &SweepSpec, solver: &Solver) -> Vec<SweepRow> {
    spec.rows
        .par_iter()
        .map(|sp| SweepRow {
            spreads: *sp,
            outcome: solver.fuzzy_optimal(&spec.params, sp),
        })
        .collect()
}

/// One line of the published table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferenceRow {
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

impl ReferenceRow {
    pub fn spreads(&self) -> FuzzySpreads {
        FuzzySpreads::new(self.d1, self.d2, self.d3, self.d4)
    }

    pub fn value(&self, column: Column) -> f64 {
        match column {
            Column::Delta => self.delta,
            Column::Zeta => self.zeta,
            Column::QStar => self.q_star,
            Column::ZStar => self.z_star,
            Column::RelQ => self.rel_q,
            Column::RelZ => self.rel_z,
        }
    }
}

pub fn parse_reference(csv_text: &str) -> Result<Vec<ReferenceRow>> {
    csv::Reader::from_reader(csv_text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<Vec<ReferenceRow>, _>>()
        .map_err(|e| Error::domain(format!("reference table: {e}")))
}

pub fn reference_table() -> &'static [ReferenceRow] {
    static TABLE: OnceLock<Vec<ReferenceRow>> = OnceLock::new();
    TABLE.get_or_init(|| parse_reference(REFERENCE_CSV).expect("embedded reference table is valid"))
}

/// The six numeric columns compared by the audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Column {
    Delta,
    Zeta,
    QStar,
    ZStar,
    RelQ,
    RelZ,
}

impl Column {
    pub const ALL: [Column; 6] = [
        Column::Delta,
        Column::Zeta,
        Column::QStar,
        Column::ZStar,
        Column::RelQ,
        Column::RelZ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Column::Delta => "delta",
            Column::Zeta => "zeta",
            Column::QStar => "q_star",
            Column::ZStar => "z_star",
            Column::RelQ => "rel_q",
            Column::RelZ => "rel_z",
        }
    }

    pub fn of(self, r: &SolutionRecord) -> f64 {
        match self {
            Column::Delta => r.delta,
            Column::Zeta => r.zeta,
            Column::QStar => r.q_star,
            Column::ZStar => r.z_star,
            Column::RelQ => r.rel_q,
            Column::RelZ => r.rel_z,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Tolerance {
    Absolute(f64),
    Relative(f64),
}

impl Tolerance {
    fn admits(self, abs_dev: f64, rel_dev: f64) -> bool {
        match self {
            Tolerance::Absolute(t) => abs_dev <= t,
            Tolerance::Relative(t) => rel_dev <= t,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Pass,
    /// Outside tolerance on an informational column.
    Deviation,
    /// Outside tolerance on a hard column.
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellAudit {
    pub column: Column,
    pub recomputed: f64,
    pub published: f64,
    pub abs_dev: f64,
    pub rel_dev: f64,
    pub tolerance: Tolerance,
    pub hard: bool,
    pub status: CellStatus,
    /// `ζ` only: the printed value is non-positive while the recomputed one is positive.
    pub sign_contradiction: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RowAudit {
    pub spreads: FuzzySpreads,
    pub cells: Vec<CellAudit>,
}

impl RowAudit {
    pub fn cell(&self, column: Column) -> &CellAudit {
        self.cells
            .iter()
            .find(|c| c.column == column)
            .expect("every column is audited")
    }
}

/// A qualitative trend claim checked on both the printed and the recomputed values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrendFinding {
    pub claim: String,
    pub holds_published: bool,
    pub holds_recomputed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditMode {
    /// Recompute every column from spreads through `δ`, `ζ` and the exact crisp baseline.
    #[default]
    Pipeline,
    /// Recompute `q*`, `Z*` and the Rel columns from the table's own `ζ`
    /// against the rounded baseline `q*_c = 108`, `Z*_c = 1104`.
    PublishedBaseline,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AuditOptions {
    pub mode: AuditMode,
    pub bounds: Bounds,
    /// Permit parameters other than the published example.
    pub allow_param_override: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableAudit {
    pub mode: AuditMode,
    pub rows: Vec<RowAudit>,
    pub trends: Vec<TrendFinding>,
}

impl TableAudit {
    pub fn cells(&self) -> impl Iterator<Item = &CellAudit> {
        self.rows.iter().flat_map(|r| r.cells.iter())
    }

    pub fn hard_failures(&self) -> usize {
        self.cells()
            .filter(|c| c.status == CellStatus::Fail)
            .count()
    }

    pub fn deviations(&self) -> usize {
        self.cells()
            .filter(|c| c.status == CellStatus::Deviation)
            .count()
    }

    pub fn sign_contradictions(&self) -> usize {
        self.cells().filter(|c| c.sign_contradiction).count()
    }

    pub fn is_clean(&self) -> bool {
        self.hard_failures() == 0 && self.deviations() == 0
    }
}

pub const DELTA_TOLERANCE: Tolerance = Tolerance::Absolute(1e-9);
pub const ZETA_TOLERANCE: Tolerance = Tolerance::Relative(1e-2);
pub const LOT_COST_TOLERANCE: Tolerance = Tolerance::Relative(5e-3);
/// In percentage points.
pub const REL_TOLERANCE: Tolerance = Tolerance::Absolute(1e-2);

fn tolerance_for(column: Column, mode: AuditMode) -> (Tolerance, bool) {
    match column {
        Column::Delta => (DELTA_TOLERANCE, true),
        Column::Zeta => (ZETA_TOLERANCE, false),
        Column::QStar | Column::ZStar => (LOT_COST_TOLERANCE, mode == AuditMode::PublishedBaseline),
        Column::RelQ | Column::RelZ => (REL_TOLERANCE, false),
    }
}

fn audit_cell(column: Column, recomputed: f64, published: f64, mode: AuditMode) -> CellAudit {
    let (tolerance, hard) = tolerance_for(column, mode);
    let abs_dev = (recomputed - published).abs();
    let rel_dev = if published != 0.0 {
        abs_dev / published.abs()
    } else {
        f64::INFINITY
    };
    let status = match (tolerance.admits(abs_dev, rel_dev), hard) {
        (true, _) => CellStatus::Pass,
        (false, true) => CellStatus::Fail,
        (false, false) => CellStatus::Deviation,
    };
    CellAudit {
        column,
        recomputed,
        published,
        abs_dev,
        rel_dev,
        tolerance,
        hard,
        status,
        sign_contradiction: column == Column::Zeta && published <= 0.0 && recomputed > 0.0,
    }
}

/// Compares recomputed values with the embedded reference table.
///
/// Never fails on a mismatch; mismatches are recorded per cell. Errors only
/// on invalid parameters or when `params` differ from the published example
/// without `allow_param_override`.
pub fn audit_table(params: &CrispParams, opts: &AuditOptions) -> Result<TableAudit> {
    params.validate()?;
    if !opts.allow_param_override && *params != CrispParams::published_example() {
        return Err(Error::domain(format!(
            "audit parameters must match the published example (phi=600, psi=10, h=10, s=100), got {params:?}"
        )));
    }
    let table = reference_table();
    let pipeline = Solver::new(opts.bounds, Baseline::Exact);
    let conditional = Solver::new(opts.bounds, Baseline::PUBLISHED);

    let mut rows = Vec::with_capacity(table.len());
    let mut recomputed_records = Vec::with_capacity(table.len());
    for reference in table {
        let sp = reference.spreads();
        let own = pipeline.fuzzy_optimal(params, &sp)?;
        let shown = match opts.mode {
            AuditMode::Pipeline => own,
            AuditMode::PublishedBaseline => {
                let from_table =
                    conditional.solve_defuzzified(params, own.delta, reference.zeta)?;
                SolutionRecord {
                    zeta: own.zeta,
                    ..from_table
                }
            }
        };
        let cells = Column::ALL
            .iter()
            .map(|&c| audit_cell(c, c.of(&shown), reference.value(c), opts.mode))
            .collect();
        rows.push(RowAudit { spreads: sp, cells });
        recomputed_records.push(own);
    }

    let trends = trend_findings(table, &recomputed_records);
    Ok(TableAudit {
        mode: opts.mode,
        rows,
        trends,
    })
}

fn strictly_monotone(values: &[f64], increasing: bool) -> bool {
    values
        .windows(2)
        .all(|w| if increasing { w[1] > w[0] } else { w[1] < w[0] })
}

// The two published observations: within a (Δ₁,Δ₂) block, q* rises and Z*
// falls as (Δ₃,Δ₄) grow; for fixed (Δ₃,Δ₄), both rise across blocks.
fn trend_findings(table: &[ReferenceRow], recomputed: &[SolutionRecord]) -> Vec<TrendFinding> {
    let mut findings = Vec::new();
    let mut check = |claim: String, idx: &[usize], column: Column, increasing: bool| {
        let published: Vec<f64> = idx.iter().map(|&i| table[i].value(column)).collect();
        let ours: Vec<f64> = idx.iter().map(|&i| column.of(&recomputed[i])).collect();
        findings.push(TrendFinding {
            claim,
            holds_published: strictly_monotone(&published, increasing),
            holds_recomputed: strictly_monotone(&ours, increasing),
        });
    };

    let mut blocks: Vec<(f64, f64)> = Vec::new();
    let mut cells: Vec<(f64, f64)> = Vec::new();
    for r in table {
        if !blocks.contains(&(r.d1, r.d2)) {
            blocks.push((r.d1, r.d2));
        }
        if !cells.contains(&(r.d3, r.d4)) {
            cells.push((r.d3, r.d4));
        }
    }
    for &(d1, d2) in &blocks {
        let idx: Vec<usize> = (0..table.len())
            .filter(|&i| (table[i].d1, table[i].d2) == (d1, d2))
            .collect();
        check(
            format!("d1={d1}, d2={d2}: q_star increases with d3, d4"),
            &idx,
            Column::QStar,
            true,
        );
        check(
            format!("d1={d1}, d2={d2}: z_star decreases with d3, d4"),
            &idx,
            Column::ZStar,
            false,
        );
    }
    for &(d3, d4) in &cells {
        let idx: Vec<usize> = (0..table.len())
            .filter(|&i| (table[i].d3, table[i].d4) == (d3, d4))
            .collect();
        check(
            format!("d3={d3}, d4={d4}: q_star increases with d1, d2"),
            &idx,
            Column::QStar,
            true,
        );
        check(
            format!("d3={d3}, d4={d4}: z_star increases with d1, d2"),
            &idx,
            Column::ZStar,
            true,
        );
    }
    findings
}
