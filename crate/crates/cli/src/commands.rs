use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sigdom::bounds::{any_violated, BoundId, BoundReport, Certifier};
use sigdom::constructions::{omega_membership, tree_profile, tree_stdf, OmegaCondition};
use sigdom::graph::{from_graph6, parse_edge_list};
use sigdom::solvers::{gamma_st, gamma_t, gamma_tuple_t, limited_packing, rho_open, total_limited_packing};
use sigdom::sweep::{parse_corpus, run_sweep, GraphClass, SweepConfig};
use sigdom::{Family, Graph, InvariantResult};
use thiserror::Error;

use crate::{ClassArg, Format, GraphInput, SweepArgs};

#[derive(Debug, Error)]
pub(crate) enum CliError {
    #[error(transparent)]
    Core(#[from] sigdom::Error),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("writing output: {0}")]
    Write(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

pub(crate) enum Status {
    Clean,
    Violated,
}

impl Status {
    fn from_violation(v: bool) -> Self {
        if v {
            Status::Violated
        } else {
            Status::Clean
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    match (&input.family, &input.g6, &input.edges) {
        (Some(name), None, None) => Ok(sigdom::graph::generate(&name.parse::<Family>()?)?),
        (None, Some(g6), None) => Ok(from_graph6(g6.as_bytes())?),
        (None, None, Some(path)) => Ok(parse_edge_list(&read(path)?)?),
        _ => Err(CliError::Usage("give exactly one of a family name, --g6 or --edges".into())),
    }
}

fn emit<T: Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn parse_index(s: &str, what: &str) -> Result<usize> {
    s.parse().map_err(|_| CliError::Usage(format!("bad {what} in `{s}`")))
}

fn solve(g: &Graph, name: &str) -> Result<InvariantResult> {
    let bad = || CliError::Usage(format!("unknown invariant `{name}`"));
    let r = match name {
        "gamma_st" => gamma_st(g)?,
        "gamma_t" => gamma_t(g)?,
        "rho_o" => rho_open(g)?,
        _ => {
            if let Some(k) = name.strip_prefix("gamma_x").and_then(|r| r.strip_suffix("_t")) {
                gamma_tuple_t(g, parse_index(k, "tuple order")?)?
            } else if let Some(k) = name.strip_prefix("gamma_").and_then(|r| r.strip_suffix('t')) {
                gamma_tuple_t(g, parse_index(k, "tuple order")?)?
            } else if let Some(rest) = name.strip_prefix("L_") {
                match rest.strip_suffix("_t").or_else(|| rest.strip_suffix('t')) {
                    Some(k) => total_limited_packing(g, parse_index(k, "packing cap")?)?,
                    None => limited_packing(g, parse_index(rest, "packing cap")?)?,
                }
            } else {
                return Err(bad());
            }
        }
    };
    Ok(r)
}

#[derive(Serialize)]
struct ComputeOutput {
    graph6: String,
    n: usize,
    m: usize,
    invariants: BTreeMap<String, InvariantResult>,
}

pub(crate) fn compute(input: &GraphInput, names: &[String]) -> Result<Status> {
    let g = load_graph(input)?;
    let mut invariants = BTreeMap::new();
    for name in names {
        let name = name.trim();
        invariants.insert(name.to_owned(), solve(&g, name)?);
    }
    emit(&ComputeOutput { graph6: g.to_graph6()?, n: g.n(), m: g.m(), invariants })?;
    Ok(Status::Clean)
}

#[derive(Serialize)]
struct CertifyOutput {
    graph6: String,
    n: usize,
    m: usize,
    invariants: BTreeMap<String, Option<i64>>,
    reports: Vec<BoundReport>,
    violated: bool,
}

pub(crate) fn certify(input: &GraphInput) -> Result<Status> {
    let g = load_graph(input)?;
    let cert = Certifier::new(&g);
    let reports = cert.certify_all()?;
    let violated = any_violated(&reports);
    emit(&CertifyOutput { graph6: g.to_graph6()?, n: g.n(), m: g.m(), invariants: cert.solved(), reports, violated })?;
    if violated {
        eprintln!("sigdom: a bound is violated");
    }
    Ok(Status::from_violation(violated))
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let s = s.trim();
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    Ok(parse_index(a.trim(), "vertex count")?..=parse_index(b.trim(), "vertex count")?)
}

fn parse_checks(s: &str) -> Result<Option<Vec<BoundId>>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(None);
    }
    let mut ids = s.split(',').map(str::parse::<BoundId>).collect::<sigdom::Result<Vec<_>>>()?;
    ids.sort();
    ids.dedup();
    Ok(Some(ids))
}

pub(crate) fn sweep(args: &SweepArgs) -> Result<Status> {
    let class = match (args.class, &args.corpus) {
        (None | Some(ClassArg::Corpus), Some(path)) => GraphClass::Corpus(parse_corpus(&read(path)?)?),
        (Some(ClassArg::Corpus), None) => return Err(CliError::Usage("--class corpus needs --corpus <file>".into())),
        (Some(_), Some(_)) => return Err(CliError::Usage("--corpus only combines with --class corpus".into())),
        (None, None) => return Err(CliError::Usage("give --class or --corpus".into())),
        (Some(ClassArg::Trees), None) => GraphClass::Trees,
        (Some(ClassArg::Cubic), None) => GraphClass::Cubic,
        (Some(ClassArg::Connected), None) => GraphClass::Connected,
    };
    let n_range = match &args.n {
        Some(s) => parse_range(s)?,
        None => match class {
            GraphClass::Trees => 2..=12,
            GraphClass::Cubic => 4..=10,
            GraphClass::Connected => 1..=7,
            GraphClass::Corpus(_) => 0..=sigdom::sweep::MAX_CORPUS_N,
        },
    };
    let mut cfg = SweepConfig::new(class, n_range);
    cfg.checks = parse_checks(&args.checks)?;
    cfg.jobs = args.jobs;
    cfg.seed = args.seed;
    cfg.stdf_samples = args.samples;

    let report = run_sweep(&cfg)?;
    let out = io::stdout().lock();
    match args.format {
        Format::Json => report.write_json(out)?,
        Format::Csv => report.write_csv(out)?,
    }
    eprintln!("sigdom: {} {} graph(s) swept, {} failure(s)", report.graphs, report.class, report.failures.len());
    for g6 in &report.failures {
        eprintln!("sigdom: violation on {g6}");
    }
    Ok(Status::from_violation(!report.is_clean()))
}

#[derive(Serialize)]
struct TreeOmegaOutput {
    graph6: String,
    n: usize,
    s: usize,
    s_prime: usize,
    supports: Vec<usize>,
    leaves: Vec<usize>,
    /// `None` for `K_2`, where the bound's construction does not apply.
    bound: Option<i64>,
    gamma_st: i64,
    /// Weight of the leaf-based STDF.
    construction_weight: i64,
    member: bool,
    sharp: Option<bool>,
    violations: Vec<(OmegaCondition, usize)>,
    degenerate: bool,
}

pub(crate) fn tree_omega(input: &GraphInput) -> Result<Status> {
    let t = load_graph(input)?;
    let p = tree_profile(&t)?;
    let verdict = omega_membership(&t)?;
    let gamma = gamma_st(&t)?.expect_value();
    let bound = (!p.degenerate).then(|| p.bound());
    let sharp = bound.map(|b| gamma == b);
    let violated = bound.is_some_and(|b| gamma > b) || sharp.is_some_and(|s| s != verdict.member);
    emit(&TreeOmegaOutput {
        graph6: t.to_graph6()?,
        n: t.n(),
        s: p.s,
        s_prime: p.s_prime,
        supports: p.supports.to_vec(),
        leaves: p.leaves.to_vec(),
        bound,
        gamma_st: gamma,
        construction_weight: tree_stdf(&t)?.weight(),
        member: verdict.member,
        sharp,
        violations: verdict.violations,
        degenerate: p.degenerate,
    })?;
    Ok(Status::from_violation(violated))
}
