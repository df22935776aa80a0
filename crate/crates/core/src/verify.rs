//! Conjecture checks, spectral identity audits and exhaustive sweeps.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bounds::{
    brouwer_rhs, de_caen_m1_bound, theorem4_bound, theorem5_interval, theorem7_interval,
    zhou_bound, KInterval,
};
use crate::error::{BoundsError, VerifyError};
use crate::graph::{labeled_count, Graph, LabeledGraphs};
use crate::graph6::to_graph6;
use crate::spectra::{complement_l, eigenvalues_sym, laplacian, spectral_tolerance, Spectrum};

/// Graphs per sweep work unit.
pub const SWEEP_CHUNK: u64 = 4096;

/// Comparison slack for `S_k` against a right-hand side of size `rhs`.
pub fn check_eps(rhs: f64) -> f64 {
    1e-7 * rhs.abs().max(1.0)
}

/// graph6 when the graph is small enough, otherwise `n=..,m=..`.
pub fn graph_id(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|| format!("n={},m={}", g.n(), g.m()))
}

/// Laplacian spectrum of `g`.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum, VerifyError> {
    Ok(eigenvalues_sym(&laplacian(g))?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "near_tie")]
    NearTie,
    #[serde(rename = "FAIL")]
    Fail,
}

impl Status {
    pub fn classify(margin: f64, eps: f64) -> Status {
        if margin < -eps {
            Status::Fail
        } else if margin <= eps {
            Status::NearTie
        } else {
            Status::Pass
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::NearTie => "near_tie",
            Status::Fail => "FAIL",
        })
    }
}

/// Outcome of comparing `S_k` with `m + C(k+1, 2)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub s_k: f64,
    pub rhs: f64,
    /// `rhs - s_k`.
    pub margin: f64,
    pub status: Status,
}

impl VerificationRecord {
    fn new(graph_id: String, g: &Graph, k: usize, s_k: f64) -> Self {
        let rhs = brouwer_rhs(g.m(), k);
        let margin = rhs - s_k;
        VerificationRecord {
            graph_id,
            n: g.n(),
            m: g.m(),
            k,
            s_k,
            rhs,
            margin,
            status: Status::classify(margin, check_eps(rhs)),
        }
    }

    /// One JSON line `{graph6, n, m, k, s_k, rhs, margin}`.
    pub fn failure_dump_line(&self) -> String {
        serde_json::json!({
            "graph6": self.graph_id,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "s_k": self.s_k,
            "rhs": self.rhs,
            "margin": self.margin,
        })
        .to_string()
    }
}

/// Records for every `k` in `ks`, reusing an already computed spectrum.
pub fn records_from_spectrum(
    g: &Graph,
    spectrum: &Spectrum,
    ks: impl IntoIterator<Item = usize>,
) -> Result<Vec<VerificationRecord>, VerifyError> {
    let id = graph_id(g);
    ks.into_iter()
        .map(|k| Ok(VerificationRecord::new(id.clone(), g, k, spectrum.partial_sum(k)?)))
        .collect()
}

pub fn check_conjecture(g: &Graph, k: usize) -> Result<VerificationRecord, VerifyError> {
    let spectrum = laplacian_spectrum(g)?;
    let mut records = records_from_spectrum(g, &spectrum, [k])?;
    Ok(records.remove(0))
}

/// One record per `k` in `1..=n`, from a single eigensolve.
pub fn check_all_k(g: &Graph) -> Result<Vec<VerificationRecord>, VerifyError> {
    let spectrum = laplacian_spectrum(g)?;
    records_from_spectrum(g, &spectrum, 1..=g.n())
}

/// Residuals of the identities and inequalities that tie `L`, `L' = J - L`
/// and the degree sequence together.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub m: usize,
    pub tolerance: f64,
    /// `|Σμ - 2m|`.
    pub trace_residual: f64,
    /// `2M₁ + 4m + n²`.
    pub sum_squares_target: f64,
    /// `|Σμ² + Σμ'² - (2M₁ + 4m + n²)|`.
    pub sum_squares_residual: f64,
    /// `max_{i=2..n} (μ_i + μ'_{n-i+2})`; should be `<= 0`. `None` for `n = 1`.
    pub lemma2a_max: Option<f64>,
    /// `μ₁ + μ'₁ - n`; should be `>= 0`.
    pub lemma2b_slack: f64,
    /// `|μ_n|`.
    pub smallest_magnitude: f64,
    /// `μ₁ - n`; should be `<= 0`.
    pub largest_excess: f64,
    /// `de_caen_m1_bound - M₁`; `None` for `n = 1`.
    pub de_caen_slack: Option<f64>,
}

impl IdentityReport {
    /// Builds the report from both spectra.
    pub fn from_spectra(g: &Graph, mu: &Spectrum, mu_c: &Spectrum) -> Result<Self, BoundsError> {
        let n = g.n();
        let m = g.m();
        let (nf, mf) = (n as f64, m as f64);
        let m1 = g.first_zagreb() as f64;
        let target = 2.0 * m1 + 4.0 * mf + nf * nf;
        let (a, b) = (mu.values(), mu_c.values());
        // 1-based i pairs with 1-based n - i + 2.
        let lemma2a_max = (2..=n)
            .map(|i| a[i - 1] + b[n - i + 1])
            .max_by(f64::total_cmp);
        let de_caen_slack = if n >= 2 {
            Some(de_caen_m1_bound(n, m)? - m1)
        } else {
            None
        };
        Ok(IdentityReport {
            n,
            m,
            tolerance: spectral_tolerance(n),
            trace_residual: (a.iter().sum::<f64>() - 2.0 * mf).abs(),
            sum_squares_target: target,
            sum_squares_residual: (mu.sum_of_squares() + mu_c.sum_of_squares() - target).abs(),
            lemma2a_max,
            lemma2b_slack: a[0] + b[0] - nf,
            smallest_magnitude: mu.smallest().abs(),
            largest_excess: mu.largest() - nf,
            de_caen_slack,
        })
    }

    /// Every residual within the spectral tolerance for this `n`.
    pub fn is_clean(&self) -> bool {
        let tol = self.tolerance;
        self.trace_residual <= tol
            && self.sum_squares_residual <= tol
            && self.lemma2a_max.is_none_or(|v| v <= tol)
            && self.lemma2b_slack >= -tol
            && self.smallest_magnitude <= tol
            && self.largest_excess <= tol
            && self.de_caen_slack.is_none_or(|s| s >= -tol)
    }
}

pub fn verify_identities(g: &Graph) -> Result<IdentityReport, VerifyError> {
    let mu = laplacian_spectrum(g)?;
    let mu_c = eigenvalues_sym(&complement_l(g))?;
    Ok(IdentityReport::from_spectra(g, &mu, &mu_c)?)
}

/// `S_k` against one closed-form bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MarginReport {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub s_k: f64,
    pub bound: f64,
    /// `bound - s_k`.
    pub slack: f64,
    /// `slack >= -check_eps(bound)`.
    pub holds: bool,
}

impl MarginReport {
    fn new(g: &Graph, k: usize, s_k: f64, bound: f64) -> Self {
        let slack = bound - s_k;
        MarginReport {
            n: g.n(),
            m: g.m(),
            k,
            s_k,
            bound,
            slack,
            holds: slack >= -check_eps(bound),
        }
    }
}

pub fn theorem4_margin(g: &Graph, spectrum: &Spectrum, k: usize) -> Result<MarginReport, VerifyError> {
    let bound = theorem4_bound(g.n(), g.m(), k)?;
    Ok(MarginReport::new(g, k, spectrum.partial_sum(k)?, bound))
}

pub fn zhou_margin(g: &Graph, spectrum: &Spectrum, k: usize) -> Result<MarginReport, VerifyError> {
    let bound = zhou_bound(g.n(), g.m(), k)?;
    Ok(MarginReport::new(g, k, spectrum.partial_sum(k)?, bound))
}

pub fn check_theorem4(g: &Graph, k: usize) -> Result<MarginReport, VerifyError> {
    theorem4_bound(g.n(), g.m(), k)?;
    theorem4_margin(g, &laplacian_spectrum(g)?, k)
}

/// Fails with [`BoundsError::ZhouInapplicable`] outside `1 <= k <= n-2`.
pub fn check_zhou(g: &Graph, k: usize) -> Result<MarginReport, VerifyError> {
    zhou_bound(g.n(), g.m(), k)?;
    zhou_margin(g, &laplacian_spectrum(g)?, k)
}

/// Conjecture checks over both proved k-intervals for `(n, m)` of a graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossCheck {
    pub t5: KInterval,
    pub t7: KInterval,
    pub t5_records: Vec<VerificationRecord>,
    pub t7_records: Vec<VerificationRecord>,
}

impl CrossCheck {
    pub fn records(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.t5_records.iter().chain(&self.t7_records)
    }
}

/// Runs the conjecture check for every `k` inside each applicable interval.
///
/// Both intervals are proved, so a failing record means the spectrum or the
/// interval arithmetic is wrong; that case returns
/// [`VerifyError::IntervalViolation`] with the graph, spectrum and both
/// sides of the inequality.
pub fn interval_cross_check(g: &Graph) -> Result<CrossCheck, VerifyError> {
    let spectrum = laplacian_spectrum(g)?;
    cross_check_with_spectrum(g, &spectrum)
}

pub fn cross_check_with_spectrum(g: &Graph, spectrum: &Spectrum) -> Result<CrossCheck, VerifyError> {
    let t5 = theorem5_interval(g.n(), g.m())?;
    let t7 = theorem7_interval(g.n(), g.m())?;
    let t5_records = records_from_spectrum(g, spectrum, t5.ks())?;
    let t7_records = records_from_spectrum(g, spectrum, t7.ks())?;
    let check = CrossCheck {
        t5,
        t7,
        t5_records,
        t7_records,
    };
    if let Some(bad) = check.records().find(|r| r.status == Status::Fail) {
        let dump = serde_json::json!({
            "graph": graph_id(g),
            "edges": g.edges().collect::<Vec<_>>(),
            "spectrum": spectrum.values(),
            "record": bad,
            "t5": check.t5,
            "t7": check.t7,
        });
        return Err(VerifyError::IntervalViolation {
            dump: dump.to_string(),
        });
    }
    Ok(check)
}

/// Totals over an exhaustive sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub graphs_checked: u64,
    pub checks_performed: u64,
    pub failures: Vec<VerificationRecord>,
    pub near_ties: u64,
    /// Smallest `rhs - S_k` seen.
    pub min_margin: f64,
    #[serde(rename = "wall_time_secs", serialize_with = "as_secs")]
    pub wall_time: Duration,
}

fn as_secs<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SweepSummary {
    fn empty(n: usize) -> Self {
        SweepSummary {
            n,
            graphs_checked: 0,
            checks_performed: 0,
            failures: Vec::new(),
            near_ties: 0,
            min_margin: f64::INFINITY,
            wall_time: Duration::ZERO,
        }
    }

    /// Adds `other`'s counts into `self`; failures keep `self`'s first.
    pub fn merge(mut self, other: SweepSummary) -> SweepSummary {
        self.graphs_checked += other.graphs_checked;
        self.checks_performed += other.checks_performed;
        self.failures.extend(other.failures);
        self.near_ties += other.near_ties;
        self.min_margin = self.min_margin.min(other.min_margin);
        self.wall_time = self.wall_time.max(other.wall_time);
        self
    }

    /// Equality of everything except `wall_time`.
    pub fn same_outcome(&self, other: &SweepSummary) -> bool {
        self.n == other.n
            && self.graphs_checked == other.graphs_checked
            && self.checks_performed == other.checks_performed
            && self.failures == other.failures
            && self.near_ties == other.near_ties
            && self.min_margin.to_bits() == other.min_margin.to_bits()
    }
}

fn sweep_range(n: usize, range: std::ops::Range<u64>) -> Result<SweepSummary, VerifyError> {
    let mut summary = SweepSummary::empty(n);
    for (_, g) in LabeledGraphs::range(n, range)? {
        let spectrum = laplacian_spectrum(&g)?;
        summary.graphs_checked += 1;
        let mut s = 0.0;
        for (i, mu) in spectrum.values().iter().enumerate() {
            let k = i + 1;
            s += mu;
            let rhs = brouwer_rhs(g.m(), k);
            let margin = rhs - s;
            summary.checks_performed += 1;
            summary.min_margin = summary.min_margin.min(margin);
            match Status::classify(margin, check_eps(rhs)) {
                Status::Pass => {}
                Status::NearTie => summary.near_ties += 1,
                Status::Fail => summary
                    .failures
                    .push(VerificationRecord::new(graph_id(&g), &g, k, s)),
            }
        }
    }
    Ok(summary)
}

/// Checks every `k` on every labeled graph with `n` vertices.
///
/// The index space is cut into [`SWEEP_CHUNK`]-sized units that run on a
/// pool of `workers` threads (0 is treated as 1). Units are merged in index
/// order, so the summary does not depend on the worker count.
pub fn exhaustive_sweep(n: usize, workers: usize) -> Result<SweepSummary, VerifyError> {
    let total = labeled_count(n)?;
    let start = Instant::now();
    let units: Vec<std::ops::Range<u64>> = (0..total.div_ceil(SWEEP_CHUNK))
        .map(|c| c * SWEEP_CHUNK..((c + 1) * SWEEP_CHUNK).min(total))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let parts: Vec<Result<SweepSummary, VerifyError>> =
        pool.install(|| units.into_par_iter().map(|r| sweep_range(n, r)).collect());

    let mut summary = SweepSummary::empty(n);
    for part in parts {
        summary = summary.merge(part?);
    }
    summary.wall_time = start.elapsed();
    Ok(summary)
}
