//! Class sweeps: certify every graph of a class and tabulate the verdicts.
//!
//! Rows come out in enumeration order whatever the worker count, and the
//! random STDFs fed to the partition inequalities are seeded per graph
//! index, so a report depends only on its configuration.

use std::collections::BTreeMap;
use std::io::Write;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{BoundId, BoundReport, Certifier, SideCheck};
use crate::error::{Error, Result};
use crate::graph::{
    enumerate_connected_graphs, enumerate_cubic_graphs, enumerate_trees, from_graph6, Graph, MAX_CONNECTED_N,
    MAX_CUBIC_N, MAX_TREE_N,
};
use crate::solvers::{is_valid_stdf, SignedFunction};

/// Largest order accepted from a corpus (the single-byte graph6 header).
pub const MAX_CORPUS_N: usize = 62;

/// Invariant columns of the CSV output, in order.
pub const INVARIANT_COLUMNS: [&str; 4] = ["gamma_st", "gamma_t", "gamma_x2_t", "rho_o"];

/// Header of the CSV output: one line per graph and bound.
pub const CSV_HEADER: [&str; 15] = [
    "index",
    "graph6",
    "n",
    "m",
    "gamma_st",
    "gamma_t",
    "gamma_x2_t",
    "rho_o",
    "bound_id",
    "applicable",
    "holds",
    "sharp",
    "bound_exact",
    "bound_approx",
    "checks_ok",
];

#[derive(Clone, Debug, PartialEq)]
pub enum GraphClass {
    /// Free trees, one per isomorphism class.
    Trees,
    /// Connected 3-regular graphs, one per isomorphism class.
    Cubic,
    /// Connected graphs, one per isomorphism class.
    Connected,
    /// Graphs read from a corpus, in file order.
    Corpus(Vec<Graph>),
}

impl GraphClass {
    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::Trees => "trees",
            GraphClass::Cubic => "cubic",
            GraphClass::Connected => "connected",
            GraphClass::Corpus(_) => "corpus",
        }
    }

    fn max_n(&self) -> usize {
        match self {
            GraphClass::Trees => MAX_TREE_N,
            GraphClass::Cubic => MAX_CUBIC_N,
            GraphClass::Connected => MAX_CONNECTED_N,
            GraphClass::Corpus(_) => MAX_CORPUS_N,
        }
    }

    fn min_n(&self) -> usize {
        match self {
            GraphClass::Cubic => 4,
            GraphClass::Corpus(_) => 0,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub class: GraphClass,
    pub n_range: RangeInclusive<usize>,
    /// `None` selects every bound.
    pub checks: Option<Vec<BoundId>>,
    pub jobs: usize,
    pub seed: u64,
    /// Random valid STDFs tested against the partition inequalities, on top
    /// of a minimum one.
    pub stdf_samples: usize,
}

impl SweepConfig {
    pub fn new(class: GraphClass, n_range: RangeInclusive<usize>) -> Self {
        Self { class, n_range, checks: None, jobs: 1, seed: 0, stdf_samples: 8 }
    }

    pub fn checks(&self) -> Vec<BoundId> {
        self.checks.clone().unwrap_or_else(|| BoundId::ALL.to_vec())
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = (*self.n_range.start(), *self.n_range.end());
        let (min, max) = (self.class.min_n(), self.class.max_n());
        if lo > hi || lo < min || hi > max {
            return Err(Error::UnsupportedSize(format!(
                "{} sweeps support n in {min}..={max}, got {lo}..={hi}",
                self.class.name()
            )));
        }
        if self.jobs == 0 {
            return Err(Error::Malformed("worker count must be positive".into()));
        }
        Ok(())
    }

    /// The graphs of the class in sweep order.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        self.validate()?;
        let mut out = Vec::new();
        match &self.class {
            GraphClass::Corpus(gs) => out.extend(gs.iter().filter(|g| self.n_range.contains(&g.n())).cloned()),
            GraphClass::Trees => {
                for n in self.n_range.clone() {
                    out.extend(enumerate_trees(n)?);
                }
            }
            GraphClass::Connected => {
                for n in self.n_range.clone() {
                    out.extend(enumerate_connected_graphs(n)?);
                }
            }
            GraphClass::Cubic => {
                for n in self.n_range.clone().filter(|n| n % 2 == 0) {
                    out.extend(enumerate_cubic_graphs(n)?);
                }
            }
        }
        Ok(out)
    }
}

/// Parses a corpus: one graph6 string per line, blank lines and `#` lines
/// skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            from_graph6(l.trim().as_bytes()).map_err(|e| Error::Malformed(format!("corpus line {}: {e}", i + 1)))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// Invariants solved while certifying; `null` marks infeasible ones.
    pub invariants: BTreeMap<String, Option<i64>>,
    pub reports: Vec<BoundReport>,
    pub violated: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundTally {
    pub applicable: usize,
    pub held: usize,
    pub sharp: usize,
    pub violated: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub class: &'static str,
    pub n_min: usize,
    pub n_max: usize,
    pub checks: Vec<BoundId>,
    pub seed: u64,
    pub graphs: usize,
    pub rows: Vec<SweepRow>,
    pub summary: BTreeMap<BoundId, BoundTally>,
    /// graph6 strings of every graph with a violated bound or side check.
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn write_json<W: Write>(&self, mut w: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut w, self).map_err(|e| Error::Malformed(format!("json output: {e}")))?;
        writeln!(w).map_err(io_error)
    }

    /// Long format: one record per graph and bound, columns [`CSV_HEADER`].
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(CSV_HEADER).map_err(csv_error)?;
        for row in &self.rows {
            for rep in &row.reports {
                let mut rec = vec![row.index.to_string(), row.graph6.clone(), row.n.to_string(), row.m.to_string()];
                for name in INVARIANT_COLUMNS {
                    rec.push(match row.invariants.get(name) {
                        Some(Some(v)) => v.to_string(),
                        Some(None) => "infeasible".into(),
                        None => String::new(),
                    });
                }
                rec.push(rep.id.to_string());
                rec.push(rep.applicable.to_string());
                rec.push(opt_bool(rep.holds));
                rec.push(opt_bool(rep.sharp));
                rec.push(rep.bound.map(|b| b.to_string()).unwrap_or_default());
                rec.push(rep.bound.map(|b| format!("{:.9}", b.to_f64())).unwrap_or_default());
                rec.push(rep.checks.iter().all(|c| c.holds).to_string());
                out.write_record(&rec).map_err(csv_error)?;
            }
        }
        out.flush().map_err(io_error)
    }
}

fn opt_bool(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

fn io_error(e: std::io::Error) -> Error {
    Error::Malformed(format!("output: {e}"))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Malformed(format!("csv output: {e}"))
}

/// A random valid STDF: start from all `+1` and flip vertices to `-1` in a
/// random order whenever the result stays valid. `None` without an STDF.
pub fn random_stdf<R: rand::Rng>(g: &Graph, rng: &mut R) -> Option<SignedFunction> {
    let mut f = SignedFunction::all_positive(g.n());
    if !is_valid_stdf(g, &f) {
        return None;
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.shuffle(rng);
    let stop = rng.random_range(0..=order.len());
    for &v in &order[..stop] {
        let mut neg = f.negatives();
        neg.insert(v);
        let next = SignedFunction::from_negatives(neg);
        if is_valid_stdf(g, &next) {
            f = next;
        }
    }
    Some(f)
}

fn certify_row(cfg: &SweepConfig, checks: &[BoundId], index: usize, g: &Graph) -> Result<SweepRow> {
    let cert = Certifier::new(g);
    let mut reports = Vec::with_capacity(checks.len());
    for &id in checks {
        let mut rep = cert.report(id)?;
        if matches!(id, BoundId::PartitionCross | BoundId::PartitionEdges) && rep.applicable {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (index as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut failed = 0;
            for _ in 0..cfg.stdf_samples {
                let f = random_stdf(g, &mut rng).expect("an STDF exists");
                let pair = cert.partition_inequalities(&f)?;
                let sample = &pair[(id == BoundId::PartitionEdges) as usize];
                failed += sample.violated() as usize;
            }
            rep.checks.push(SideCheck::eq("sampled_stdfs_violating", failed as i64, 0));
        }
        reports.push(rep);
    }
    let violated = reports.iter().any(BoundReport::violated);
    Ok(SweepRow { index, graph6: g.to_graph6()?, n: g.n(), m: g.m(), invariants: cert.solved(), reports, violated })
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    let graphs = cfg.graphs()?;
    let checks = cfg.checks();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Malformed(format!("thread pool: {e}")))?;
    let rows: Vec<SweepRow> = pool.install(|| {
        graphs.par_iter().enumerate().map(|(i, g)| certify_row(cfg, &checks, i, g)).collect::<Result<_>>()
    })?;

    let mut summary: BTreeMap<BoundId, BoundTally> = checks.iter().map(|&id| (id, BoundTally::default())).collect();
    for rep in rows.iter().flat_map(|r| &r.reports) {
        let t = summary.get_mut(&rep.id).expect("every report is a selected check");
        t.applicable += rep.applicable as usize;
        t.held += (rep.holds == Some(true)) as usize;
        t.sharp += (rep.sharp == Some(true)) as usize;
        t.violated += rep.violated() as usize;
    }
    let failures = rows.iter().filter(|r| r.violated).map(|r| r.graph6.clone()).collect();
    Ok(SweepReport {
        class: cfg.class.name(),
        n_min: *cfg.n_range.start(),
        n_max: *cfg.n_range.end(),
        checks,
        seed: cfg.seed,
        graphs: rows.len(),
        rows,
        summary,
        failures,
    })
}
