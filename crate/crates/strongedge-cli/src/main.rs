//! `strongedge`: strong edge coloring bounds, certificates, generators,
//! and exhaustive sweeps over one or more input graphs.
//!
//! Exit codes: 0 success, 1 a verified bound failed (never expected),
//! 2 bad input or usage.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use strongedge::certify::{lemma1_hypotheses_hold, BoundCheck, CheckKind};
use strongedge::coloring::ColoringTimeout;
use strongedge::families::{
    all_graphs, blowup_c5, complete_bipartite, cycle, double_kdd_with_covers, path, random_gnp,
    star,
};
use strongedge::fractional::WeightedMatching;
use strongedge::{
    bound_report_with, build_conflict_graph, encode_graph6, exact_strong_chromatic_index_within,
    format_edge_list, fractional_strong_chromatic_index, full_certificate, lemma1_verify,
    max_clique_within, parse_auto, verify_strong_coloring, BoundReport, CertificateReport,
    FractionalOptions, FractionalStatus, FullCertificate, Graph, Lemma1Instance, ReportOptions,
};

#[derive(Parser)]
#[command(
    name = "strongedge",
    version,
    about = "Strong edge coloring bounds, certificates, and searches",
    after_help = "Inputs are edge lists (\"u v\" per line, optional \"n m\" header) or \
graph6 words, one graph per line; \"-\" reads stdin. A graph6 stream yields one \
report per graph."
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Time budget in seconds for each clique / coloring search.
    #[arg(long, global = true, default_value_t = 60.0)]
    budget: f64,
    /// Convergence tolerance for the fractional LP.
    #[arg(long, global = true, default_value_t = 1e-7)]
    tolerance: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Encoding {
    /// graph6 word.
    G6,
    /// Edge list with an "n m" header.
    Edges,
}

#[derive(Subcommand)]
enum Command {
    /// Clique number of the conflict graph, with a witness.
    Omega {
        /// Input file, or "-" for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Exact strong chromatic index (a bracket on timeout) and a coloring.
    ChiS {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Fractional strong chromatic index with its column weights.
    ChiFs {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Bound report plus clique decomposition and subgraph certificates.
    Certify {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check a vertex-cover edge-bound instance file (JSON).
    VerifyLemma1 {
        /// Instance file {edges, covers, p, w}, or "-" for stdin.
        instance: String,
    },
    /// Emit a generator graph.
    Gen {
        /// One of: path, cycle, star, complete-bipartite, c5-blowup,
        /// double-kdd, gnp.
        family: String,
        /// Family parameters, e.g. `gen complete-bipartite 3 3`.
        params: Vec<String>,
        /// Output encoding.
        #[arg(long, value_enum, default_value_t = Encoding::G6)]
        encode: Encoding,
        /// For double-kdd: emit the full instance JSON with its covers.
        #[arg(long)]
        covers: bool,
        /// Seed for gnp.
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Bound reports over every labeled graph on n vertices, summarized.
    Sweep {
        /// Vertex count, at most 6.
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match Duration::try_from_secs_f64(cli.budget) {
        Ok(b) if cli.budget > 0.0 => b,
        _ => return input_error("--budget must be a positive number of seconds"),
    };
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return input_error("--tolerance must be positive");
    }
    let opts = ReportOptions {
        clique_budget: Some(budget),
        coloring_budget: Some(budget),
        lp: FractionalOptions { tolerance: cli.tolerance, ..FractionalOptions::default() },
    };

    match &cli.command {
        Command::Omega { input } => with_graphs(input, cli.format, |g| omega_report(g, budget)),
        Command::ChiS { input } => with_graphs(input, cli.format, |g| chi_s_report(g, budget)),
        Command::ChiFs { input } => {
            with_graphs(input, cli.format, |g| chi_fs_report(g, &opts.lp))
        }
        Command::Certify { input } => run_certify(input, cli.format, &opts),
        Command::VerifyLemma1 { instance } => run_verify_lemma1(instance, cli.format),
        Command::Gen { family, params, encode, covers, seed } => {
            run_gen(family, params, *encode, *covers, *seed)
        }
        Command::Sweep { n } => run_sweep(*n, cli.format, &opts),
    }
}

fn input_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn load_graphs(path: &str) -> Result<Vec<Graph>, String> {
    let text = read_source(path)?;
    let (graphs, _) = parse_auto(&text).map_err(|e| e.to_string())?;
    if graphs.is_empty() {
        return Err("input contains no graphs".to_string());
    }
    Ok(graphs)
}

/// Everything a subcommand knows how to print about one graph.
trait Render: Serialize {
    fn csv_header() -> &'static str;
    fn csv_rows(&self, graph_index: usize) -> Vec<String>;
    fn human(&self) -> String;
    /// Whether a verified bound failed (drives exit code 1).
    fn failed(&self) -> bool {
        false
    }
}

fn with_graphs<R: Render>(
    input: &str,
    format: Format,
    run: impl Fn(&Graph) -> R,
) -> ExitCode {
    let graphs = match load_graphs(input) {
        Ok(gs) => gs,
        Err(e) => return input_error(e),
    };
    let reports: Vec<R> = graphs.iter().map(&run).collect();
    print_reports(&reports, format);
    if reports.iter().any(|r| r.failed()) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_reports<R: Render>(reports: &[R], format: Format) {
    match format {
        Format::Json => {
            let values: Vec<Value> =
                reports.iter().map(|r| serde_json::to_value(r).expect("serializable")).collect();
            let doc = if values.len() == 1 {
                values.into_iter().next().expect("one value")
            } else {
                Value::Array(values)
            };
            println!("{doc}");
        }
        Format::Csv => {
            println!("{}", R::csv_header());
            for (i, r) in reports.iter().enumerate() {
                for row in r.csv_rows(i) {
                    println!("{row}");
                }
            }
        }
        Format::Human => {
            for (i, r) in reports.iter().enumerate() {
                if reports.len() > 1 {
                    println!("== graph {} ==", i + 1);
                }
                print!("{}", r.human());
            }
        }
    }
}

/// Formats a float that is usually integral without trailing noise.
fn num(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn join(ids: &[usize]) -> String {
    ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";")
}

#[derive(Serialize)]
struct Bracketed {
    lower: usize,
    upper: usize,
    exact: Option<usize>,
}

impl Bracketed {
    fn human(&self, name: &str) -> String {
        match self.exact {
            Some(v) => format!("{name} = {v}"),
            None => format!("{name} in [{}, {}] (budget exhausted)", self.lower, self.upper),
        }
    }
}

#[derive(Serialize)]
struct OmegaReport {
    n: usize,
    m: usize,
    max_degree: usize,
    omega: Bracketed,
    witness: Vec<usize>,
    witness_edges: Vec<(usize, usize)>,
}

fn omega_report(g: &Graph, budget: Duration) -> OmegaReport {
    let l = build_conflict_graph(g);
    let (witness, exact) = match max_clique_within(&l, budget) {
        Ok(w) => (w, true),
        Err(t) => (t.incumbent, false),
    };
    let members = witness.members().to_vec();
    let upper = if exact { members.len() } else { g.m().min(l.max_degree() + 1) };
    OmegaReport {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        omega: Bracketed {
            lower: members.len(),
            upper,
            exact: exact.then_some(members.len()),
        },
        witness_edges: members.iter().map(|&e| g.edge(e)).collect(),
        witness: members,
    }
}

impl Render for OmegaReport {
    fn csv_header() -> &'static str {
        "graph,n,m,max_degree,omega_lower,omega_upper,omega_is_exact,witness"
    }

    fn csv_rows(&self, i: usize) -> Vec<String> {
        vec![format!(
            "{},{},{},{},{},{},{},{}",
            i + 1,
            self.n,
            self.m,
            self.max_degree,
            self.omega.lower,
            self.omega.upper,
            self.omega.exact.is_some(),
            join(&self.witness)
        )]
    }

    fn human(&self) -> String {
        let mut out = format!(
            "n={} m={} max_degree={}\n{}\n",
            self.n,
            self.m,
            self.max_degree,
            self.omega.human("omega")
        );
        let edges: Vec<String> = self
            .witness
            .iter()
            .zip(&self.witness_edges)
            .map(|(id, (u, v))| format!("{id}:({u},{v})"))
            .collect();
        out.push_str(&format!("witness: {}\n", edges.join(" ")));
        out
    }
}

#[derive(Serialize)]
struct ChiSReport {
    n: usize,
    m: usize,
    max_degree: usize,
    chi_s: Bracketed,
    colors: Vec<usize>,
    valid: bool,
}

fn chi_s_report(g: &Graph, budget: Duration) -> ChiSReport {
    let (coloring, bracket) = match exact_strong_chromatic_index_within(g, budget) {
        Ok(c) => {
            let k = c.num_colors;
            (c, Bracketed { lower: k, upper: k, exact: Some(k) })
        }
        Err(ColoringTimeout { incumbent, lower_bound }) => {
            let upper = incumbent.num_colors;
            (incumbent, Bracketed { lower: lower_bound, upper, exact: None })
        }
    };
    let valid = verify_strong_coloring(g, &coloring);
    ChiSReport {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        chi_s: bracket,
        colors: coloring.color_of,
        valid,
    }
}

impl Render for ChiSReport {
    fn csv_header() -> &'static str {
        "graph,n,m,max_degree,chi_s_lower,chi_s_upper,chi_s_is_exact,valid,colors"
    }

    fn csv_rows(&self, i: usize) -> Vec<String> {
        vec![format!(
            "{},{},{},{},{},{},{},{},{}",
            i + 1,
            self.n,
            self.m,
            self.max_degree,
            self.chi_s.lower,
            self.chi_s.upper,
            self.chi_s.exact.is_some(),
            self.valid,
            join(&self.colors)
        )]
    }

    fn human(&self) -> String {
        format!(
            "n={} m={} max_degree={}\n{}\ncolors: {}\n",
            self.n,
            self.m,
            self.max_degree,
            self.chi_s.human("chi_s"),
            join(&self.colors)
        )
    }
}

#[derive(Serialize)]
struct ChiFsReport {
    n: usize,
    m: usize,
    max_degree: usize,
    chi_fs: f64,
    status: FractionalStatus,
    columns: Vec<WeightedMatching>,
    duals: Vec<f64>,
}

fn chi_fs_report(g: &Graph, lp: &FractionalOptions) -> ChiFsReport {
    let sol = fractional_strong_chromatic_index(g, lp);
    ChiFsReport {
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        chi_fs: sol.objective,
        status: sol.status,
        columns: sol.columns.into_iter().filter(|c| c.weight > 1e-12).collect(),
        duals: sol.duals,
    }
}

impl Render for ChiFsReport {
    fn csv_header() -> &'static str {
        "graph,n,m,max_degree,chi_fs,status"
    }

    fn csv_rows(&self, i: usize) -> Vec<String> {
        let status = match self.status {
            FractionalStatus::Optimal => "optimal",
            FractionalStatus::IterationLimit => "iteration_limit",
        };
        vec![format!(
            "{},{},{},{},{:.9},{}",
            i + 1,
            self.n,
            self.m,
            self.max_degree,
            self.chi_fs,
            status
        )]
    }

    fn human(&self) -> String {
        let mut out = format!(
            "n={} m={} max_degree={}\nchi_fs = {:.9}\n",
            self.n, self.m, self.max_degree, self.chi_fs
        );
        if self.status == FractionalStatus::IterationLimit {
            out.push_str("stopped at the iteration cap; value is an upper bound\n");
        }
        for c in &self.columns {
            out.push_str(&format!(
                "  weight {:.9}  edges [{}]\n",
                c.weight,
                join(c.matching.members())
            ));
        }
        out
    }
}

fn check_row(i: usize, section: &str, name: &str, kind: &str, observed: f64, bound: f64, holds: bool) -> String {
    format!("{},{section},{name},{kind},{},{},{holds}", i + 1, num(observed), num(bound))
}

fn bound_check_rows(i: usize, checks: &[BoundCheck]) -> Vec<String> {
    checks
        .iter()
        .map(|c| {
            let kind = match c.kind {
                CheckKind::Theorem => "theorem",
                CheckKind::Monitor => "monitor",
            };
            check_row(i, "bounds", &c.name, kind, c.observed, c.bound, c.holds)
        })
        .collect()
}

fn certificate_rows(i: usize, section: &str, report: &CertificateReport) -> Vec<String> {
    let mut rows: Vec<String> = report
        .checks
        .iter()
        .map(|c| check_row(i, section, &c.name, "certificate", c.observed, c.bound, c.holds))
        .collect();
    for sub in &report.sub_reports {
        rows.extend(certificate_rows(i, &format!("{section}.{}", sub.name), sub));
    }
    rows
}

fn human_bound_lines(report: &BoundReport) -> String {
    let mut out = format!(
        "n={} m={} max_degree={} conflict_max_degree={} bipartite={}\n",
        report.n, report.m, report.max_degree, report.conflict_max_degree, report.bipartite
    );
    out.push_str(&format!(
        "{}\n{}\nchi_fs = {:.9}\n",
        Bracketed {
            lower: report.omega.lower,
            upper: report.omega.upper,
            exact: report.omega.exact
        }
        .human("omega"),
        Bracketed {
            lower: report.chi_s.lower,
            upper: report.chi_s.upper,
            exact: report.chi_s.exact
        }
        .human("chi_s"),
        report.chi_fs
    ));
    for c in &report.checks {
        let kind = match c.kind {
            CheckKind::Theorem => "theorem",
            CheckKind::Monitor => "monitor",
        };
        out.push_str(&format!(
            "  [{}] {:<28} {:>10} <= {:<10} ({kind})\n",
            pass(c.holds),
            c.name,
            num(c.observed),
            num(c.bound)
        ));
    }
    out
}

fn human_certificate(section: &str, report: &CertificateReport, indent: usize) -> String {
    let pad = "  ".repeat(indent);
    let mut out = format!("{pad}{section}: {}\n", pass(report.holds));
    for qty in &report.quantities {
        out.push_str(&format!("{pad}  {} = {}\n", qty.name, num(qty.value)));
    }
    for c in &report.checks {
        out.push_str(&format!(
            "{pad}  [{}] {:<40} {:>8} vs {}\n",
            pass(c.holds),
            c.name,
            num(c.observed),
            num(c.bound)
        ));
    }
    for sub in &report.sub_reports {
        out.push_str(&human_certificate(&sub.name, sub, indent + 1));
    }
    out
}

impl Render for FullCertificate {
    fn csv_header() -> &'static str {
        "graph,section,check,kind,observed,bound,holds"
    }

    fn csv_rows(&self, i: usize) -> Vec<String> {
        let mut rows = bound_check_rows(i, &self.bounds.checks);
        if let Some(dec) = &self.decomposition {
            rows.extend(dec.checks.iter().map(|c| {
                check_row(i, "decomposition", &c.name, "certificate", c.observed, c.bound, c.holds)
            }));
        }
        if let Some(claim) = &self.s_claim {
            rows.extend(certificate_rows(i, "s_claim", claim));
        }
        if let Some(bip) = &self.bipartite_bound {
            rows.extend(certificate_rows(i, "bipartite_bound", bip));
        }
        rows
    }

    fn human(&self) -> String {
        let mut out = human_bound_lines(&self.bounds);
        out.push_str(&format!("clique witness: [{}]\n", join(&self.clique_witness)));
        if let Some(dec) = &self.decomposition {
            out.push_str(&format!(
                "decomposition at v={}: |A|={} |B|={} |C|={} |D|={} covered={}\n",
                dec.v,
                dec.a.len(),
                dec.b.len(),
                dec.c.len(),
                dec.d.len(),
                dec.covered
            ));
            for c in &dec.checks {
                out.push_str(&format!(
                    "  [{}] {:<40} {:>8} vs {}\n",
                    pass(c.holds),
                    c.name,
                    num(c.observed),
                    num(c.bound)
                ));
            }
        }
        if !self.super_vertices.is_empty() {
            out.push_str(&format!("super vertices: [{}]\n", join(&self.super_vertices)));
        }
        if let Some(claim) = &self.s_claim {
            out.push_str(&human_certificate("general_s_claim", claim, 0));
        }
        if let Some(bip) = &self.bipartite_bound {
            out.push_str(&human_certificate("bipartite_d_bound", bip, 0));
        }
        out.push_str(&format!("certificate: {}\n", pass(self.holds)));
        out
    }

    fn failed(&self) -> bool {
        !self.holds
    }
}

fn run_certify(input: &str, format: Format, opts: &ReportOptions) -> ExitCode {
    with_graphs(input, format, |g| full_certificate(g, opts))
}

/// Wrapper so the lemma report can carry its own exit rule: the instance
/// is only a counterexample when the hypotheses hold and the conclusion
/// fails.
#[derive(Serialize)]
#[serde(transparent)]
struct LemmaOut {
    report: CertificateReport,
}

impl Render for LemmaOut {
    fn csv_header() -> &'static str {
        "graph,section,check,kind,observed,bound,holds"
    }

    fn csv_rows(&self, i: usize) -> Vec<String> {
        certificate_rows(i, "lemma1", &self.report)
    }

    fn human(&self) -> String {
        human_certificate("lemma1", &self.report, 0)
    }

    fn failed(&self) -> bool {
        lemma1_hypotheses_hold(&self.report)
            && self.report.check("edge_bound").is_some_and(|c| !c.holds)
    }
}

fn run_verify_lemma1(path: &str, format: Format) -> ExitCode {
    let text = match read_source(path) {
        Ok(t) => t,
        Err(e) => return input_error(e),
    };
    let instance: Lemma1Instance = match serde_json::from_str(&text) {
        Ok(inst) => inst,
        Err(e) => return input_error(format!("parsing instance: {e}")),
    };
    let out = LemmaOut { report: lemma1_verify(&instance) };
    let failed = out.failed();
    print_reports(&[out], format);
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_gen(
    family: &str,
    params: &[String],
    encode: Encoding,
    covers: bool,
    seed: u64,
) -> ExitCode {
    let arity = |want: usize| -> Result<(), String> {
        if params.len() == want {
            Ok(())
        } else {
            Err(format!("{family} takes {want} parameter(s), got {}", params.len()))
        }
    };
    let int = |i: usize| -> Result<usize, String> {
        params[i].parse().map_err(|_| format!("parameter {:?} is not an integer", params[i]))
    };

    let build = || -> Result<(Graph, Option<Lemma1Instance>), String> {
        match family {
            "path" => {
                arity(1)?;
                Ok((path(int(0)?), None))
            }
            "cycle" => {
                arity(1)?;
                Ok((cycle(int(0)?), None))
            }
            "star" => {
                arity(1)?;
                Ok((star(int(0)?), None))
            }
            "complete-bipartite" => {
                arity(2)?;
                Ok((complete_bipartite(int(0)?, int(1)?), None))
            }
            "c5-blowup" => {
                arity(1)?;
                Ok((blowup_c5(int(0)?), None))
            }
            "double-kdd" => {
                arity(1)?;
                let d = int(0)?;
                if d == 0 {
                    return Err("double-kdd needs d >= 1".to_string());
                }
                let inst = double_kdd_with_covers(d);
                Ok((inst.s.clone(), Some(inst)))
            }
            "gnp" => {
                arity(2)?;
                let n = int(0)?;
                let p: f64 = params[1]
                    .parse()
                    .map_err(|_| format!("parameter {:?} is not a probability", params[1]))?;
                if !(0.0..=1.0).contains(&p) {
                    return Err("gnp probability must be in [0, 1]".to_string());
                }
                Ok((random_gnp(n, p, seed), None))
            }
            other => Err(format!(
                "unknown family {other:?}; expected path, cycle, star, \
complete-bipartite, c5-blowup, double-kdd, or gnp"
            )),
        }
    };

    let (graph, instance) = match build() {
        Ok(pair) => pair,
        Err(e) => return input_error(e),
    };
    if covers {
        match instance {
            Some(inst) => {
                println!("{}", serde_json::to_string(&inst).expect("serializable"));
                ExitCode::SUCCESS
            }
            None => input_error("--covers only applies to double-kdd"),
        }
    } else {
        match encode {
            Encoding::G6 => match encode_graph6(&graph) {
                Ok(word) => {
                    println!("{word}");
                    ExitCode::SUCCESS
                }
                Err(e) => input_error(e),
            },
            Encoding::Edges => {
                print!("{}", format_edge_list(&graph));
                ExitCode::SUCCESS
            }
        }
    }
}

#[derive(Serialize)]
struct SweepSummary {
    n: usize,
    count: usize,
    /// Largest omega / max_degree^2 over graphs with at least one edge.
    max_omega_ratio: f64,
    /// Largest chi_fs / max_degree^2 over graphs with at least one edge.
    max_chi_fs_ratio: f64,
    theorem_failures: usize,
    theorem_counterexamples: Vec<String>,
    monitor_violations: usize,
    monitor_counterexamples: Vec<String>,
    /// Graphs violating omega <= chi_fs <= chi_s (within LP tolerance).
    sandwich_violations: usize,
    sandwich_counterexamples: Vec<String>,
}

impl Render for SweepSummary {
    fn csv_header() -> &'static str {
        "n,count,max_omega_ratio,max_chi_fs_ratio,theorem_failures,monitor_violations,\
sandwich_violations,monitor_counterexamples"
    }

    fn csv_rows(&self, _i: usize) -> Vec<String> {
        vec![format!(
            "{},{},{:.6},{:.6},{},{},{},{}",
            self.n,
            self.count,
            self.max_omega_ratio,
            self.max_chi_fs_ratio,
            self.theorem_failures,
            self.monitor_violations,
            self.sandwich_violations,
            self.monitor_counterexamples.join(";")
        )]
    }

    fn human(&self) -> String {
        let mut out = format!(
            "swept {} graphs on {} vertices\n\
             max omega / max_degree^2   = {:.6}\n\
             max chi_fs / max_degree^2  = {:.6}\n\
             theorem failures           = {}\n\
             monitor violations         = {}\n\
             sandwich violations        = {}\n",
            self.count,
            self.n,
            self.max_omega_ratio,
            self.max_chi_fs_ratio,
            self.theorem_failures,
            self.monitor_violations,
            self.sandwich_violations,
        );
        for word in &self.theorem_counterexamples {
            out.push_str(&format!("theorem counterexample: {word}\n"));
        }
        for word in &self.monitor_counterexamples {
            out.push_str(&format!("monitor counterexample: {word}\n"));
        }
        for word in &self.sandwich_counterexamples {
            out.push_str(&format!("sandwich counterexample: {word}\n"));
        }
        out
    }

    fn failed(&self) -> bool {
        self.theorem_failures > 0
    }
}

fn run_sweep(n: usize, format: Format, opts: &ReportOptions) -> ExitCode {
    if n > 6 {
        return input_error("sweep enumerates all labeled graphs and is capped at --n 6");
    }
    let tol = opts.lp.tolerance.max(1e-9);
    let mut summary = SweepSummary {
        n,
        count: 0,
        max_omega_ratio: 0.0,
        max_chi_fs_ratio: 0.0,
        theorem_failures: 0,
        theorem_counterexamples: Vec::new(),
        monitor_violations: 0,
        monitor_counterexamples: Vec::new(),
        sandwich_violations: 0,
        sandwich_counterexamples: Vec::new(),
    };
    for g in all_graphs(n) {
        summary.count += 1;
        let r = bound_report_with(&g, opts);
        let word = || encode_graph6(&g).expect("sweep graphs are tiny");
        if r.max_degree >= 1 {
            let dsq = (r.max_degree * r.max_degree) as f64;
            summary.max_omega_ratio = summary.max_omega_ratio.max(r.omega.upper as f64 / dsq);
            summary.max_chi_fs_ratio = summary.max_chi_fs_ratio.max(r.chi_fs / dsq);
        }
        if !r.theorems_hold {
            summary.theorem_failures += 1;
            summary.theorem_counterexamples.push(word());
        }
        if !r.monitors_hold {
            summary.monitor_violations += 1;
            summary.monitor_counterexamples.push(word());
        }
        let sandwiched =
            r.omega.lower as f64 <= r.chi_fs + tol && r.chi_fs <= r.chi_s.upper as f64 + tol;
        if !sandwiched {
            summary.sandwich_violations += 1;
            summary.sandwich_counterexamples.push(word());
        }
    }
    let failed = summary.failed();
    print_reports(&[summary], format);
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
