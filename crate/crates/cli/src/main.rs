//! Command-line front end: graph ingestion, corpus generation, solver and
//! verification runs, and machine-readable reports.
//!
//! Exit codes: 0 success, 1 verification found a violation, 2 input error,
//! 3 a solver returned a non-certified result (the report is still written).

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use thetacut::graph::generate::{self, GraphFamily, GraphFamilySpec};
use thetacut::graph::{parse_edge_list, parse_graph6, to_graph6, write_edge_list};
use thetacut::maxcut::{edwards_bound, exact_maxcut, gw_round};
use thetacut::sdp::{
    solve_strict_vector_coloring, solve_theta, solve_vector_coloring, validate_witness,
    SolverConfig, WitnessKind,
};
use thetacut::verify::{
    corpus_config, estimate_lambda_mu, full_report, golden_corpus, BoundReport, ReportFlags,
};
use thetacut::Graph;

const SCHEMA_VERSION: u32 = 1;

const EXIT_OK: i32 = 0;
const EXIT_VIOLATION: i32 = 1;
const EXIT_INPUT: i32 = 2;
const EXIT_NOT_CERTIFIED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "thetacut",
    about = "Lovasz theta, vector chromatic numbers and MaxCut surplus bounds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lovasz theta of the graph and of its complement
    Theta(GraphCmd),
    /// Strict and relaxed vector chromatic numbers
    Vecchrom(GraphCmd),
    /// Exact MaxCut, surplus and the Edwards bound (and optional rounding)
    Maxcut(MaxcutCmd),
    /// Full bound report for one graph
    Bound(BoundCmd),
    /// Run the built-in golden corpus through every inequality check
    Verify(VerifyCmd),
    /// Estimate the growth of theta-of-complement over an H-free family
    Estimate(EstimateCmd),
    /// Generate a named family graph and write it out
    Generate(GenerateCmd),
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Output format (default: json for reports, csv for estimate,
    /// edgelist for generate)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Solver tolerance override
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for all randomized steps
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Clone)]
struct InputOpts {
    /// Graph file: edge-list ("n m" header) or graph6 (one line)
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Family spec, e.g. petersen, cycle:5, complete:4, complete_bipartite:3,3,
    /// kneser:7,3, erdos_renyi:12,0.5, h_free_random:12,0.5,C3
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args)]
struct GraphCmd {
    #[command(flatten)]
    input: InputOpts,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct MaxcutCmd {
    #[command(flatten)]
    input: InputOpts,
    #[command(flatten)]
    common: CommonOpts,
    /// Also run hyperplane rounding on the strict coloring vectors
    #[arg(long)]
    gw: bool,
    /// Rounding trials
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
}

#[derive(Args)]
struct BoundCmd {
    #[command(flatten)]
    input: InputOpts,
    #[command(flatten)]
    common: CommonOpts,
    /// Assert the graph is vertex-transitive (enables the product check)
    #[arg(long)]
    vertex_transitive: bool,
    /// Assert the graph is edge-transitive (enables the eigenvalue formula)
    #[arg(long)]
    edge_transitive: bool,
    /// Random bipartitions for the subadditivity check
    #[arg(long, default_value_t = 50)]
    trials: usize,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    common: CommonOpts,
    /// Skip corpus graphs with more vertices than this
    #[arg(long)]
    max_n: Option<usize>,
    /// Random bipartitions per graph for the subadditivity check
    #[arg(long, default_value_t = 50)]
    trials: usize,
    /// Worker threads for corpus fan-out (report order is input order)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Test mode: corrupt one witness to exercise the violation path
    #[arg(long, hide = true)]
    inject_violation: bool,
}

#[derive(Args)]
struct EstimateCmd {
    /// Forbidden subgraph, e.g. C3, C4, P3, K4, K2_3, petersen
    #[arg(long)]
    forbidden: String,
    /// Comma-separated vertex counts to sample, e.g. 8,10,12
    #[arg(long, value_delimiter = ',')]
    sizes: Vec<usize>,
    /// Samples per size
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Largest size accepted
    #[arg(long, default_value_t = 150)]
    max_n: usize,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Args)]
struct GenerateCmd {
    /// Family spec (see `theta --help` for the grammar)
    #[arg(long)]
    family: String,
    #[command(flatten)]
    common: CommonOpts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Edgelist,
    Graph6,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_INPUT
        }
    });
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Theta(cmd) => cmd_theta(cmd),
        Command::Vecchrom(cmd) => cmd_vecchrom(cmd),
        Command::Maxcut(cmd) => cmd_maxcut(cmd),
        Command::Bound(cmd) => cmd_bound(cmd),
        Command::Verify(cmd) => cmd_verify(cmd),
        Command::Estimate(cmd) => cmd_estimate(cmd),
        Command::Generate(cmd) => cmd_generate(cmd),
    }
}

fn solver_config(common: &CommonOpts) -> anyhow::Result<SolverConfig<f64>> {
    let mut cfg = SolverConfig::<f64> {
        seed: common.seed,
        ..SolverConfig::default()
    };
    if let Some(tol) = common.tol {
        if tol <= 0.0 {
            bail!("--tol must be positive");
        }
        cfg.tolerance = tol;
    }
    Ok(cfg)
}

fn load_graph(input: &InputOpts, seed: u64) -> anyhow::Result<Graph> {
    match (&input.input, &input.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            parse_graph_text(&text)
        }
        (None, Some(spec)) => {
            let family = parse_family(spec)?;
            Ok(generate::generate(&GraphFamilySpec { family, seed })?)
        }
        _ => bail!("exactly one of --input or --family is required"),
    }
}

/// Edge-list files start with an "n m" header; anything else is graph6.
fn parse_graph_text(text: &str) -> anyhow::Result<Graph> {
    let first = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| anyhow!("empty graph file"))?;
    let toks: Vec<&str> = first.split_whitespace().collect();
    let looks_edge_list = toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok());
    if looks_edge_list {
        Ok(parse_edge_list(text)?)
    } else {
        Ok(parse_graph6(first)?)
    }
}

fn parse_family(spec: &str) -> anyhow::Result<GraphFamily> {
    let (head, rest) = match spec.split_once(':') {
        Some((h, r)) => (h, r),
        None => (spec, ""),
    };
    let nums = || -> anyhow::Result<Vec<f64>> {
        rest.split(',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|e| anyhow!("bad number {s:?} in family spec: {e}"))
            })
            .collect()
    };
    Ok(match head {
        "petersen" => GraphFamily::Petersen,
        "cycle" => {
            let v = nums()?;
            if v.len() != 1 {
                bail!("cycle takes one parameter, e.g. cycle:5");
            }
            GraphFamily::Cycle { n: v[0] as usize }
        }
        "complete" => {
            let v = nums()?;
            if v.len() != 1 {
                bail!("complete takes one parameter, e.g. complete:4");
            }
            GraphFamily::Complete { n: v[0] as usize }
        }
        "complete_bipartite" => {
            let v = nums()?;
            if v.len() != 2 {
                bail!("complete_bipartite takes two parameters, e.g. complete_bipartite:3,3");
            }
            GraphFamily::CompleteBipartite {
                a: v[0] as usize,
                b: v[1] as usize,
            }
        }
        "kneser" => {
            let v = nums()?;
            if v.len() != 2 {
                bail!("kneser takes two parameters, e.g. kneser:7,3");
            }
            GraphFamily::Kneser {
                n: v[0] as usize,
                k: v[1] as usize,
            }
        }
        "erdos_renyi" => {
            let v = nums()?;
            if v.len() != 2 {
                bail!("erdos_renyi takes two parameters, e.g. erdos_renyi:12,0.5");
            }
            GraphFamily::ErdosRenyi {
                n: v[0] as usize,
                p: v[1],
            }
        }
        "h_free_random" => {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 3 {
                bail!("h_free_random takes n,p,H, e.g. h_free_random:12,0.5,C3");
            }
            GraphFamily::HFreeRandom {
                n: parts[0].trim().parse().context("n in h_free_random")?,
                p: parts[1].trim().parse().context("p in h_free_random")?,
                forbidden: parse_named_graph(parts[2].trim())?,
            }
        }
        other => bail!("unknown family {other:?}"),
    })
}

/// Compact graph names used for forbidden subgraphs: C<k>, P<k>, K<k>,
/// K<a>_<b>, petersen.
fn parse_named_graph(name: &str) -> anyhow::Result<Graph> {
    if name.eq_ignore_ascii_case("petersen") {
        return Ok(generate::petersen());
    }
    let (kind, rest) = name
        .split_at_checked(1)
        .ok_or_else(|| anyhow!("empty graph name"))?;
    let parse = |s: &str| -> anyhow::Result<usize> {
        s.parse().map_err(|e| anyhow!("bad graph name {name:?}: {e}"))
    };
    match kind {
        "C" | "c" => {
            let k = parse(rest)?;
            if k < 3 {
                bail!("cycle needs at least 3 vertices");
            }
            Ok(generate::cycle(k))
        }
        "P" | "p" => Ok(generate::path(parse(rest)?)),
        "K" | "k" => {
            if let Some((a, b)) = rest.split_once('_') {
                Ok(generate::complete_bipartite(parse(a)?, parse(b)?))
            } else {
                Ok(generate::complete(parse(rest)?))
            }
        }
        _ => bail!("unknown graph name {name:?} (use C<k>, P<k>, K<k>, K<a>_<b>, petersen)"),
    }
}

fn write_output(common: &CommonOpts, payload: &str) -> anyhow::Result<()> {
    match &common.out {
        Some(path) => std::fs::write(path, payload)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(payload.as_bytes())?;
        }
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize)]
struct SolveBlock {
    value: f64,
    certified: bool,
    psd_residual: f64,
    primal_residual: f64,
    iterations: usize,
}

impl SolveBlock {
    fn from(w: &thetacut::sdp::GramWitness<f64>) -> Self {
        SolveBlock {
            value: w.value,
            certified: w.certified,
            psd_residual: w.psd_residual,
            primal_residual: w.primal_residual,
            iterations: w.iterations,
        }
    }
}

#[derive(Serialize)]
struct ThetaReport {
    schema_version: u32,
    n: usize,
    m: usize,
    theta: f64,
    theta_complement: f64,
    certified: bool,
    residuals: BTreeMap<String, f64>,
    iterations: BTreeMap<String, usize>,
}

fn cmd_theta(cmd: GraphCmd) -> anyhow::Result<i32> {
    let g = load_graph(&cmd.input, cmd.common.seed)?;
    let cfg = solver_config(&cmd.common)?;
    let w = solve_theta(&g, &cfg);
    let wc = solve_theta(&g.complement(), &cfg);
    let report = ThetaReport {
        schema_version: SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        theta: w.value,
        theta_complement: wc.value,
        certified: w.certified && wc.certified,
        residuals: BTreeMap::from([
            ("theta_psd".into(), w.psd_residual),
            ("theta_primal".into(), w.primal_residual),
            ("complement_psd".into(), wc.psd_residual),
            ("complement_primal".into(), wc.primal_residual),
        ]),
        iterations: BTreeMap::from([
            ("theta".into(), w.iterations),
            ("complement".into(), wc.iterations),
        ]),
    };
    let payload = match cmd.common.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report)?,
        Format::Csv => format!(
            "n,m,theta,theta_complement,certified\n{},{},{},{},{}\n",
            report.n, report.m, report.theta, report.theta_complement, report.certified
        ),
        _ => bail!("theta supports json or csv output"),
    };
    write_output(&cmd.common, &payload)?;
    Ok(if report.certified { EXIT_OK } else { EXIT_NOT_CERTIFIED })
}

#[derive(Serialize)]
struct VecchromReport {
    schema_version: u32,
    n: usize,
    m: usize,
    chi_vec: f64,
    strict_vector_chromatic: f64,
    certified: bool,
    strict: SolveBlock,
    relaxed: SolveBlock,
}

fn cmd_vecchrom(cmd: GraphCmd) -> anyhow::Result<i32> {
    let g = load_graph(&cmd.input, cmd.common.seed)?;
    let cfg = solver_config(&cmd.common)?;
    let strict = solve_strict_vector_coloring(&g, &cfg);
    let relaxed = solve_vector_coloring(&g, &cfg);
    let report = VecchromReport {
        schema_version: SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        chi_vec: relaxed.value,
        strict_vector_chromatic: strict.value,
        certified: strict.certified && relaxed.certified,
        strict: SolveBlock::from(&strict),
        relaxed: SolveBlock::from(&relaxed),
    };
    let payload = match cmd.common.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report)?,
        Format::Csv => format!(
            "n,m,chi_vec,strict_vector_chromatic,certified\n{},{},{},{},{}\n",
            report.n, report.m, report.chi_vec, report.strict_vector_chromatic, report.certified
        ),
        _ => bail!("vecchrom supports json or csv output"),
    };
    write_output(&cmd.common, &payload)?;
    Ok(if report.certified { EXIT_OK } else { EXIT_NOT_CERTIFIED })
}

#[derive(Serialize)]
struct GwBlock {
    trials: usize,
    best_cut_size: usize,
    best_cut_side_a: Vec<usize>,
    empirical_mean_cut: f64,
    closed_form_expected_cut: f64,
    arcsin_bound: f64,
}

#[derive(Serialize)]
struct MaxcutReport {
    schema_version: u32,
    n: usize,
    m: usize,
    maxcut: usize,
    surplus: f64,
    edwards_bound: f64,
    side_a: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gw: Option<GwBlock>,
}

fn mask_to_vertices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

fn cmd_maxcut(cmd: MaxcutCmd) -> anyhow::Result<i32> {
    let g = load_graph(&cmd.input, cmd.common.seed)?;
    let cut = exact_maxcut(&g)?;
    let mut certified = true;
    let gw = if cmd.gw {
        let cfg = solver_config(&cmd.common)?;
        let w = solve_strict_vector_coloring(&g, &cfg);
        certified &= w.certified;
        let out = gw_round(&g, &w.vectors, cmd.trials, cmd.common.seed)?;
        Some(GwBlock {
            trials: out.trials,
            best_cut_size: out.best_cut.cut_size,
            best_cut_side_a: mask_to_vertices(out.best_cut.side_mask, g.n()),
            empirical_mean_cut: out.empirical_mean_cut,
            closed_form_expected_cut: out.closed_form_expected_cut,
            arcsin_bound: out.arcsin_bound,
        })
    } else {
        None
    };
    let report = MaxcutReport {
        schema_version: SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        maxcut: cut.cut_size,
        surplus: cut.surplus,
        edwards_bound: edwards_bound(g.m()),
        side_a: mask_to_vertices(cut.side_mask, g.n()),
        gw,
    };
    let payload = match cmd.common.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report)?,
        Format::Csv => format!(
            "n,m,maxcut,surplus,edwards\n{},{},{},{},{}\n",
            report.n, report.m, report.maxcut, report.surplus, report.edwards_bound
        ),
        _ => bail!("maxcut supports json or csv output"),
    };
    write_output(&cmd.common, &payload)?;
    Ok(if certified { EXIT_OK } else { EXIT_NOT_CERTIFIED })
}

#[derive(Serialize)]
struct VersionedBoundReport {
    schema_version: u32,
    #[serde(flatten)]
    report: BoundReport,
}

fn cmd_bound(cmd: BoundCmd) -> anyhow::Result<i32> {
    let g = load_graph(&cmd.input, cmd.common.seed)?;
    let cfg = solver_config(&cmd.common)?;
    let flags = ReportFlags {
        vertex_transitive: cmd.vertex_transitive,
        edge_transitive: cmd.edge_transitive,
        subadditivity_trials: cmd.trials,
        seed: cmd.common.seed,
    };
    let name = cmd
        .input
        .family
        .clone()
        .or_else(|| {
            cmd.input
                .input
                .as_ref()
                .map(|p| p.display().to_string())
        })
        .unwrap_or_else(|| "graph".into());
    let report = full_report(&name, &g, &flags, &cfg);
    let versioned = VersionedBoundReport {
        schema_version: SCHEMA_VERSION,
        report,
    };
    let payload = match cmd.common.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&versioned)?,
        Format::Csv => bound_csv(std::slice::from_ref(&versioned.report)),
        _ => bail!("bound supports json or csv output"),
    };
    write_output(&cmd.common, &payload)?;
    let r = &versioned.report;
    Ok(if !r.violations.is_empty() {
        EXIT_VIOLATION
    } else if !r.certified {
        EXIT_NOT_CERTIFIED
    } else {
        EXIT_OK
    })
}

fn bound_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from("graph,n,m,theta_bar,chi_vec,sp_exact,certified,violations\n");
    for r in reports {
        let sp = r
            .sp_exact
            .map(|v| v.to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.graph, r.n, r.m, r.theta_bar, r.chi_vec, sp, r.certified, r.violations.len()
        ));
    }
    out
}

#[derive(Serialize)]
struct ViolationRecord {
    graph: String,
    check: String,
    lhs: f64,
    rhs: f64,
    tolerance: f64,
    detail: String,
    /// Edge-list serialization of the violating graph for reproduction.
    edge_list: String,
}

#[derive(Serialize)]
struct VerifySummary {
    schema_version: u32,
    graphs: usize,
    violations: Vec<ViolationRecord>,
    non_certified: Vec<String>,
    violations_per_check: BTreeMap<String, usize>,
    reports: Vec<BoundReport>,
}

fn cmd_verify(cmd: VerifyCmd) -> anyhow::Result<i32> {
    let mut cfg = solver_config(&cmd.common)?;
    // A few degenerate corpus instances need the larger iteration budget.
    cfg.max_iterations = corpus_config().max_iterations;
    if cmd.jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let corpus: Vec<_> = golden_corpus()
        .into_iter()
        .filter(|e| cmd.max_n.is_none_or(|cap| e.graph.n() <= cap))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cmd.jobs)
        .build()
        .context("building worker pool")?;
    let reports: Vec<BoundReport> = pool.install(|| {
        use rayon::prelude::*;
        corpus
            .par_iter()
            .map(|e| {
                let flags = ReportFlags {
                    vertex_transitive: e.vertex_transitive,
                    edge_transitive: e.edge_transitive,
                    subadditivity_trials: cmd.trials,
                    seed: cmd.common.seed,
                };
                full_report(&e.name, &e.graph, &flags, &cfg)
            })
            .collect()
    });

    let mut reports = reports;
    if cmd.inject_violation {
        // Test mode: corrupt the first graph's witness and record the
        // resulting residual failure as a violation.
        if let (Some(entry), Some(report)) = (corpus.first(), reports.first_mut()) {
            let mut w = solve_theta(&entry.graph.complement(), &cfg);
            if let Some((u, v)) = entry.graph.complement().edges().first().copied() {
                w.gram.set(u, v, w.gram.get(u, v) + 1e-3);
            } else {
                w.gram.set(0, 0, w.gram.get(0, 0) + 1e-3);
            }
            let rep = validate_witness(&w, &entry.graph.complement(), WitnessKind::Theta, cfg.seed);
            report.violations.push(thetacut::verify::Violation {
                check: "injected_corrupt_witness".into(),
                lhs: rep.constraint_residual.max(rep.diag_residual),
                rhs: 1e-6,
                tolerance: 0.0,
                detail: "test mode: witness corrupted by 1e-3".into(),
            });
        }
    }

    let mut violations = Vec::new();
    let mut per_check: BTreeMap<String, usize> = BTreeMap::new();
    let mut non_certified = Vec::new();
    for (entry, report) in corpus.iter().zip(reports.iter()) {
        if !report.certified {
            non_certified.push(report.graph.clone());
        }
        for v in &report.violations {
            *per_check.entry(v.check.clone()).or_insert(0) += 1;
            violations.push(ViolationRecord {
                graph: report.graph.clone(),
                check: v.check.clone(),
                lhs: v.lhs,
                rhs: v.rhs,
                tolerance: v.tolerance,
                detail: v.detail.clone(),
                edge_list: write_edge_list(&entry.graph),
            });
        }
    }
    let summary = VerifySummary {
        schema_version: SCHEMA_VERSION,
        graphs: corpus.len(),
        violations,
        non_certified,
        violations_per_check: per_check,
        reports,
    };
    let payload = match cmd.common.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&summary)?,
        Format::Csv => bound_csv(&summary.reports),
        _ => bail!("verify supports json or csv output"),
    };
    write_output(&cmd.common, &payload)?;
    Ok(if !summary.violations.is_empty() {
        EXIT_VIOLATION
    } else if !summary.non_certified.is_empty() {
        EXIT_NOT_CERTIFIED
    } else {
        EXIT_OK
    })
}

#[derive(Serialize)]
struct VersionedEstimate {
    schema_version: u32,
    #[serde(flatten)]
    estimate: thetacut::verify::FamilyEstimate,
}

fn cmd_estimate(cmd: EstimateCmd) -> anyhow::Result<i32> {
    if cmd.sizes.is_empty() {
        bail!("--sizes requires at least one vertex count");
    }
    if let Some(&too_big) = cmd.sizes.iter().find(|&&n| n > cmd.max_n) {
        bail!("size {too_big} exceeds --max-n {}", cmd.max_n);
    }
    let h = parse_named_graph(&cmd.forbidden)?;
    let cfg = solver_config(&cmd.common)?;
    let estimate = estimate_lambda_mu(
        &h,
        &cmd.forbidden,
        &cmd.sizes,
        cmd.trials,
        cmd.common.seed,
        &cfg,
    )?;
    let certified = estimate.certified;
    let payload = match cmd.common.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut out = String::from("size,max_theta_bar,slope\n");
            for r in &estimate.records {
                out.push_str(&format!("{},{},{}\n", r.size, r.cumulative_max, estimate.slope));
            }
            out
        }
        Format::Json => to_json(&VersionedEstimate {
            schema_version: SCHEMA_VERSION,
            estimate,
        })?,
        _ => bail!("estimate supports json or csv output"),
    };
    write_output(&cmd.common, &payload)?;
    Ok(if certified { EXIT_OK } else { EXIT_NOT_CERTIFIED })
}

fn cmd_generate(cmd: GenerateCmd) -> anyhow::Result<i32> {
    let family = parse_family(&cmd.family)?;
    let g = generate::generate(&GraphFamilySpec {
        family,
        seed: cmd.common.seed,
    })?;
    let payload = match cmd.common.format.unwrap_or(Format::Edgelist) {
        Format::Edgelist | Format::Json => write_edge_list(&g),
        Format::Graph6 => {
            let mut s = to_graph6(&g);
            s.push('\n');
            s
        }
        Format::Csv => bail!("generate supports edgelist or graph6 output"),
    };
    write_output(&cmd.common, &payload)?;
    Ok(EXIT_OK)
}
