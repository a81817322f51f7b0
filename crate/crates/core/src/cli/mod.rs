//! `leakage-eoq` command-line front end.
//!
//! Exit codes: 0 success, 1 audit deviations, 2 invalid input.

mod config;
mod report;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use config::{ConfigFile, ParamsSection};
pub use report::SweepLine;

use crate::model::{crisp_optimal, cycle_quantities, Solver};
use crate::sensitivity::{audit_table, run_sweep, AuditMode, AuditOptions, SweepSpec};
use crate::{Baseline, Bounds, CrispParams, FuzzySpreads};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DEVIATIONS: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "leakage-eoq",
    version,
    about = "Fuzzy leakage inventory model solver"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Crisp optimal lot size, minimum cost and cycle quantities.
    Crisp,
    /// Fuzzy optimum for one set of spreads.
    Fuzzy(SpreadArgs),
    /// Solve every row of a spread grid (defaults to the reference table's rows).
    Sweep,
    /// Audit recomputed values against the embedded reference table.
    VerifyTable {
        /// Allow parameters other than phi=600, psi=10, h=10, s=100.
        #[arg(long)]
        override_params: bool,
    },
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct SpreadArgs {
    #[arg(long)]
    pub d1: Option<f64>,
    #[arg(long)]
    pub d2: Option<f64>,
    #[arg(long)]
    pub d3: Option<f64>,
    #[arg(long)]
    pub d4: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalOpts {
    /// JSON configuration with `params`, `spreads` and `sweep` keys.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Measure Rel columns against the rounded crisp optimum q*=108, Z*=1104.
    #[arg(long, global = true)]
    pub paper_baseline: bool,

    /// Lift the d2 < phi and d4 < psi spread bounds.
    #[arg(long, global = true)]
    pub relax_bounds: bool,

    #[arg(long, global = true)]
    pub phi: Option<f64>,
    #[arg(long, global = true)]
    pub psi: Option<f64>,
    #[arg(long, global = true)]
    pub h: Option<f64>,
    #[arg(long, global = true)]
    pub s: Option<f64>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Model(#[from] crate::Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// Fully resolved inputs for one command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: CrispParams,
    pub spreads: Option<FuzzySpreads>,
    pub sweep: Option<Vec<FuzzySpreads>>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub paper_baseline: bool,
    pub relax_bounds: bool,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let file = match &cli.global.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let g = &cli.global;
        let flags = ParamsSection {
            phi: g.phi,
            psi: g.psi,
            h: g.h,
            s: g.s,
        };
        let section = file.params.overlay(flags);

        let spreads = match &cli.command {
            Command::Fuzzy(a) => merge_spreads(file.spreads, a)?,
            _ => file.spreads,
        };
        Ok(RunConfig {
            params: section.resolve(),
            spreads,
            sweep: file.sweep,
            format: g.format,
            out: g.out.clone(),
            paper_baseline: g.paper_baseline,
            relax_bounds: g.relax_bounds,
        })
    }

    pub fn bounds(&self) -> Bounds {
        if self.relax_bounds {
            Bounds::Relaxed
        } else {
            Bounds::Strict
        }
    }

    pub fn baseline(&self) -> Baseline {
        if self.paper_baseline {
            Baseline::PUBLISHED
        } else {
            Baseline::Exact
        }
    }

    pub fn solver(&self) -> Solver {
        Solver::new(self.bounds(), self.baseline())
    }
}

fn merge_spreads(
    file: Option<FuzzySpreads>,
    a: &SpreadArgs,
) -> Result<Option<FuzzySpreads>, CliError> {
    let given = [a.d1, a.d2, a.d3, a.d4];
    if given.iter().all(Option::is_none) {
        return Ok(file);
    }
    let pick = |flag: Option<f64>, base: Option<f64>, name: &str| {
        flag.or(base)
            .ok_or_else(|| CliError::Invalid(format!("missing spread --{name}")))
    };
    Ok(Some(FuzzySpreads {
        d1: pick(a.d1, file.map(|f| f.d1), "d1")?,
        d2: pick(a.d2, file.map(|f| f.d2), "d2")?,
        d3: pick(a.d3, file.map(|f| f.d3), "d3")?,
        d4: pick(a.d4, file.map(|f| f.d4), "d4")?,
    }))
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let outcome = RunConfig::from_cli(cli).and_then(|cfg| {
        let mut sink: Box<dyn Write> = match &cfg.out {
            Some(path) => Box::new(File::create(path)?),
            None => Box::new(&mut *stdout),
        };
        let code = dispatch(&cli.command, &cfg, &mut sink, stderr)?;
        sink.flush()?;
        Ok(code)
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn dispatch(
    command: &Command,
    cfg: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Crisp => cmd_crisp(cfg, out),
        Command::Fuzzy(_) => cmd_fuzzy(cfg, out),
        Command::Sweep => cmd_sweep(cfg, out, err),
        Command::VerifyTable { override_params } => cmd_verify_table(cfg, *override_params, out),
    }
}

pub fn cmd_crisp(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let solution = crisp_optimal(&cfg.params)?;
    let cycle = cycle_quantities(solution.q_star, &cfg.params)?;
    report::crisp(out, cfg.format, &cfg.params, &solution, &cycle)?;
    Ok(EXIT_OK)
}

pub fn cmd_fuzzy(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    let sp = cfg.spreads.ok_or_else(|| {
        CliError::Invalid("fuzzy requires spreads (--d1..--d4 or config `spreads`)".into())
    })?;
    cfg.params.validate()?;
    let solver = cfg.solver();
    let d = solver.defuzzifier();
    let zeta = d.zeta(cfg.params.phi, cfg.params.psi, &sp)?;
    let zeta_quadrature = d.zeta_quadrature(cfg.params.phi, cfg.params.psi, &sp)?;
    let solution = solver.fuzzy_optimal(&cfg.params, &sp)?;
    let baseline = cfg.baseline().record(&cfg.params)?;
    let fuzzy = report::FuzzyReport {
        params: cfg.params,
        spreads: sp,
        zeta_method: zeta.method,
        zeta_closed_form: zeta.value,
        zeta_quadrature,
        solution,
        baseline_q_star: baseline.q_star,
        baseline_z_star: baseline.z_star,
    };
    report::fuzzy(out, cfg.format, &fuzzy)?;
    Ok(EXIT_OK)
}

pub fn cmd_sweep(
    cfg: &RunConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let spec = match &cfg.sweep {
        Some(rows) => SweepSpec {
            params: cfg.params,
            rows: rows.clone(),
        },
        None => SweepSpec {
            params: cfg.params,
            ..SweepSpec::reference()
        },
    };
    if spec.rows.is_empty() {
        return Err(CliError::Invalid("sweep has no rows".into()));
    }
    spec.params.validate()?;
    let results = run_sweep(&spec, &cfg.solver());
    let mut lines = Vec::with_capacity(results.len());
    let mut failed = 0;
    for (i, row) in results.iter().enumerate() {
        match &row.outcome {
            Ok(rec) => lines.push(SweepLine::new(row.spreads, rec)),
            Err(e) => {
                failed += 1;
                writeln!(err, "row {}: {e}", i + 1)?;
            }
        }
    }
    report::sweep(out, cfg.format, &lines)?;
    Ok(if failed > 0 { EXIT_INVALID } else { EXIT_OK })
}

pub fn cmd_verify_table(
    cfg: &RunConfig,
    override_params: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let opts = AuditOptions {
        mode: if cfg.paper_baseline {
            AuditMode::PublishedBaseline
        } else {
            AuditMode::Pipeline
        },
        bounds: cfg.bounds(),
        allow_param_override: override_params,
    };
    let audit = audit_table(&cfg.params, &opts)?;
    report::audit(out, cfg.format, &audit)?;
    Ok(if audit.is_clean() {
        EXIT_OK
    } else {
        EXIT_DEVIATIONS
    })
}
