use std::fs;
use std::path::{Path, PathBuf};

use brouwer_core::bounds::{
    theorem5_interval, theorem5_m_range, theorem7_interval, theorem7_threshold_m, BoundEvaluation,
    KInterval,
};
use brouwer_core::edgelist::parse_edge_lists;
use brouwer_core::graph::{pair_count, random_gnm, Graph};
use brouwer_core::graph6::parse_graph6;
use brouwer_core::spectra::{complement_l, eigenvalues_sym};
use brouwer_core::verify::{
    cross_check_with_spectrum, exhaustive_sweep, graph_id, laplacian_spectrum,
    records_from_spectrum, theorem4_margin, zhou_margin, CrossCheck, IdentityReport, Status,
};
use brouwer_core::VerifyError;
use rayon::prelude::*;

use crate::report::{Cell, Report};
use crate::CliError;

/// Result of a subcommand: the table to print and whether a genuine
/// failure was found.
#[derive(Debug)]
pub struct Output {
    pub report: Report,
    pub failed: bool,
    /// Extra diagnostics for stderr.
    pub diagnostics: Vec<String>,
}

impl Output {
    fn clean(report: Report) -> Self {
        Output {
            report,
            failed: false,
            diagnostics: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Table {
    Remark6,
    Remark8,
}

/// Default m-grids for the two interval tables at `n = 100`.
pub const REMARK6_MS: [usize; 7] = [100, 200, 300, 400, 500, 600, 700];
pub const REMARK8_MS: [usize; 7] = [1500, 1600, 1700, 1800, 1900, 2000, 2100];

fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>, CliError> {
    match format {
        InputFormat::Edgelist => parse_edge_lists(text).map_err(|e| CliError::Parse(e.to_string())),
        InputFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                parse_graph6(l).map_err(|e| CliError::Parse(format!("line {}: {e}", i + 1)))
            })
            .collect(),
    }
}

pub fn cmd_check(text: &str, format: InputFormat, k: Option<usize>) -> Result<Output, CliError> {
    let graphs = parse_graphs(text, format)?;
    let mut report = Report::new(&[
        "graph_id", "n", "m", "connected", "k", "s_k", "rhs", "margin", "status",
    ]);
    let mut failed = false;
    for g in &graphs {
        if let Some(k) = k {
            if k == 0 || k > g.n() {
                return Err(CliError::Usage(format!(
                    "--k {k} outside 1..={} for graph {}",
                    g.n(),
                    graph_id(g)
                )));
            }
        }
        let spectrum = laplacian_spectrum(g)?;
        let ks: Vec<usize> = match k {
            Some(k) => vec![k],
            None => (1..=g.n()).collect(),
        };
        let connected = g.is_connected();
        for r in records_from_spectrum(g, &spectrum, ks)? {
            failed |= r.status == Status::Fail;
            report.push(vec![
                r.graph_id.into(),
                r.n.into(),
                r.m.into(),
                connected.into(),
                r.k.into(),
                r.s_k.into(),
                r.rhs.into(),
                r.margin.into(),
                r.status.to_string().into(),
            ]);
        }
    }
    Ok(Output {
        report,
        failed,
        diagnostics: Vec::new(),
    })
}

pub fn cmd_bounds(n: usize, m: usize, k: Option<usize>) -> Result<Output, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("bounds need n >= 2, got {n}")));
    }
    if m > pair_count(n) {
        return Err(CliError::Usage(format!("m = {m} exceeds n(n-1)/2 = {}", pair_count(n))));
    }
    let ks: Vec<usize> = match k {
        Some(k) if k == 0 || k > n => {
            return Err(CliError::Usage(format!("--k {k} outside 1..={n}")));
        }
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    let mut report = Report::new(&[
        "n", "m", "k", "brouwer_rhs", "theorem4", "g_at_1", "zhou", "de_caen_m1",
    ]);
    for k in ks {
        let e = BoundEvaluation::evaluate(n, m, k).map_err(|e| CliError::Usage(e.to_string()))?;
        report.push(vec![
            e.n.into(),
            e.m.into(),
            e.k.into(),
            e.brouwer_rhs.into(),
            e.theorem4.into(),
            e.g_at_1.into(),
            e.zhou.into(),
            e.de_caen_m1.into(),
        ]);
    }
    Ok(Output::clean(report))
}

fn interval_row(iv: &KInterval) -> Vec<Cell> {
    vec![
        iv.theorem.to_string().into(),
        iv.n.into(),
        iv.m.into(),
        iv.lower.into(),
        iv.upper.into(),
        iv.applicable.then_some(iv.lo).into(),
        iv.applicable.then_some(iv.hi).into(),
        iv.applicable.into(),
    ]
}

pub fn cmd_tables(which: Table, n: usize, m_list: Option<&[usize]>) -> Result<Output, CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("tables need n >= 2, got {n}")));
    }
    let mut report = Report::new(&["theorem", "n", "m", "lower", "upper", "lo", "hi", "applicable"]);
    let usage = |e: brouwer_core::BoundsError| CliError::Usage(e.to_string());
    match which {
        Table::Remark6 => {
            report.note(match theorem5_m_range(n) {
                Some((lo, hi)) => format!("T5 applies for {lo} <= m <= {hi}"),
                None => format!("T5 applies for no m at n = {n}"),
            });
            for &m in m_list.unwrap_or(&REMARK6_MS) {
                report.push(interval_row(&theorem5_interval(n, m).map_err(usage)?));
            }
        }
        Table::Remark8 => {
            report.note(match theorem7_threshold_m(n).map_err(usage)? {
                Some(m) => format!("T7 applies for m >= {m}"),
                None => format!("T7 applies for no m at n = {n}"),
            });
            for &m in m_list.unwrap_or(&REMARK8_MS) {
                report.push(interval_row(&theorem7_interval(n, m).map_err(usage)?));
            }
        }
    }
    Ok(Output::clean(report))
}

/// Summary plus where the artifacts were written.
pub fn cmd_sweep(n: usize, workers: usize, out: Option<&Path>) -> Result<Output, CliError> {
    let summary = match exhaustive_sweep(n, workers) {
        Err(VerifyError::Graph(e)) => return Err(CliError::Usage(e.to_string())),
        other => other?,
    };
    let mut diagnostics = Vec::new();
    if let Some(path) = out {
        let json = serde_json::to_string_pretty(&summary).expect("summary serializes");
        fs::write(path, json + "\n").map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        if !summary.failures.is_empty() {
            let dump_path = failure_dump_path(path);
            let lines: String = summary
                .failures
                .iter()
                .map(|r| r.failure_dump_line() + "\n")
                .collect();
            fs::write(&dump_path, lines).map_err(|source| CliError::Io { path: dump_path.clone(), source })?;
            diagnostics.push(format!("failure dump written to {}", dump_path.display()));
        }
    }
    for r in &summary.failures {
        diagnostics.push(r.failure_dump_line());
    }
    let mut report = Report::new(&[
        "n",
        "graphs_checked",
        "checks_performed",
        "failures",
        "near_ties",
        "min_margin",
        "wall_time_secs",
    ]);
    report.push(vec![
        summary.n.into(),
        summary.graphs_checked.into(),
        summary.checks_performed.into(),
        summary.failures.len().into(),
        summary.near_ties.into(),
        summary.min_margin.into(),
        summary.wall_time.as_secs_f64().into(),
    ]);
    Ok(Output {
        report,
        failed: !summary.failures.is_empty(),
        diagnostics,
    })
}

/// `<out>.failures.jsonl`.
pub fn failure_dump_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".failures.jsonl");
    PathBuf::from(name)
}

/// Per-graph metrics for one ensemble member.
struct EnsembleRow {
    cells: Vec<Cell>,
    failed: bool,
    diagnostic: Option<String>,
}

fn ensemble_row(index: usize, n: usize, m: usize, seed: u64) -> Result<EnsembleRow, CliError> {
    let g = random_gnm(n, m, seed).map_err(|e| CliError::Usage(e.to_string()))?;
    let spectrum = laplacian_spectrum(&g)?;
    let complement = eigenvalues_sym(&complement_l(&g)).map_err(VerifyError::from)?;
    let identities = IdentityReport::from_spectra(&g, &spectrum, &complement)
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let records = records_from_spectrum(&g, &spectrum, 1..=n)?;
    let worst = records
        .iter()
        .min_by(|a, b| a.margin.total_cmp(&b.margin))
        .expect("n >= 1");
    let mut failed = records.iter().any(|r| r.status == Status::Fail);

    let (mut t4_min, mut zhou_min) = (None::<f64>, None::<f64>);
    if n >= 2 {
        for k in 1..=n {
            let r = theorem4_margin(&g, &spectrum, k)?;
            failed |= !r.holds;
            t4_min = Some(t4_min.map_or(r.slack, |s| s.min(r.slack)));
        }
        for k in 1..=n.saturating_sub(2) {
            let r = zhou_margin(&g, &spectrum, k)?;
            failed |= !r.holds;
            zhou_min = Some(zhou_min.map_or(r.slack, |s| s.min(r.slack)));
        }
    }

    let mut diagnostic = None;
    let (t5, t7) = if n >= 2 {
        match cross_check_with_spectrum(&g, &spectrum) {
            Ok(CrossCheck { t5, t7, .. }) => (status_of(&t5), status_of(&t7)),
            Err(VerifyError::IntervalViolation { dump }) => {
                failed = true;
                diagnostic = Some(dump);
                ("FAIL", "FAIL")
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        ("n/a", "n/a")
    };

    let cells = vec![
        index.into(),
        seed.into(),
        graph_id(&g).into(),
        n.into(),
        m.into(),
        g.is_connected().into(),
        worst.margin.into(),
        worst.k.into(),
        t4_min.into(),
        zhou_min.into(),
        identities.trace_residual.into(),
        identities.sum_squares_residual.into(),
        identities.lemma2a_max.into(),
        identities.lemma2b_slack.into(),
        identities.de_caen_slack.into(),
        if identities.is_clean() { "clean" } else { "dirty" }.into(),
        t5.into(),
        t7.into(),
    ];
    Ok(EnsembleRow {
        cells,
        failed,
        diagnostic,
    })
}

fn status_of(iv: &KInterval) -> &'static str {
    if iv.applicable {
        "pass"
    } else {
        "n/a"
    }
}

/// Graph `i` of the ensemble is `random_gnm(n, m, seed + i)`.
pub fn cmd_ensemble(n: usize, m: usize, count: usize, seed: u64, workers: usize) -> Result<Output, CliError> {
    if n == 0 || m > pair_count(n) {
        return Err(CliError::Usage(format!("invalid (n, m) = ({n}, {m})")));
    }
    if count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<Result<EnsembleRow, CliError>> = pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| ensemble_row(i, n, m, seed.wrapping_add(i as u64)))
            .collect()
    });

    let mut report = Report::new(&[
        "index",
        "seed",
        "graph_id",
        "n",
        "m",
        "connected",
        "min_margin",
        "min_margin_k",
        "theorem4_min_slack",
        "zhou_min_slack",
        "trace_residual",
        "sum_squares_residual",
        "lemma2a_max",
        "lemma2b_slack",
        "de_caen_slack",
        "identities",
        "t5_cross_check",
        "t7_cross_check",
    ]);
    let mut failed = false;
    let mut diagnostics = Vec::new();
    for row in rows {
        let row = row?;
        failed |= row.failed;
        diagnostics.extend(row.diagnostic);
        report.push(row.cells);
    }
    Ok(Output {
        report,
        failed,
        diagnostics,
    })
}

