//! Command-line front end: construct graphs from the spec mini-language, run
//! metamour orbits, execute theorem suites, and import/export graph6 and DOT.

pub mod dot;
pub mod graph6;
pub mod graphspec;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};
use metamour_core::canon::is_isomorphic;
use metamour_core::constructions::cycle;
use metamour_core::dynamics::{orbit, pseudo_metamour_period, DEFAULT_MAX_STEPS};
use metamour_core::verify::{
    check_diameter_equivalences, check_period2_structure, connectivity_check, enumerate_graphs,
    join_along_suite, period3_sample, petersen_suite, search_exact_period, tree_suite,
    TheoremReport, Verdict,
};
use metamour_core::Graph;
use std::time::Instant;

use crate::dot::{export_dot, export_edgelist};
use crate::graph6::encode_graph6;
use crate::graphspec::{family_labels, parse_graph_spec, split_blocks};
use crate::report::{CounterexampleOut, Report};

#[derive(Parser)]
#[command(
    name = "metamour",
    version,
    about = "Metamour (2-distance) graph operator toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel suites (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Export {
    G6,
    Dot,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a spec and print a summary or an export
    Construct {
        /// graph spec, e.g. cycle:7, petersen:5,2, g6:..., joinalong:cycle:7;edgeless:2,edgeless:2,edgeless:2,edgeless:2,edgeless:2,edgeless:2,edgeless:2
        spec: String,
        /// emit the graph itself instead of a report
        #[arg(long, value_enum)]
        export: Option<Export>,
        /// include family vertex labels in DOT output
        #[arg(long)]
        labels: bool,
    },
    /// Iterate the metamour operator until the orbit closes
    Orbit {
        #[arg(long)]
        graph: String,
    },
    /// Run a theorem verification suite
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// M(G) = G exactly for edgeless graphs
    Period1 {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        include_disconnected: bool,
    },
    /// Structure of connected metamour-period-2 graphs
    Period2 {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Connected period-3 graphs are exactly C7 and C9
    Period3 {
        #[arg(long, default_value_t = 9)]
        max_n: usize,
        #[arg(long)]
        include_disconnected: bool,
    },
    /// Random sampling for period-3 graphs beyond the exhaustive range
    Period3Sample {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Inverse-image / diameter equivalences over all small graphs
    Diameter {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Limit sets and stabilization of G(m,2)
    Petersen {
        #[arg(long)]
        m: usize,
    },
    /// Component count of M(G(m,j))
    Connectivity {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        j: usize,
    },
    /// Decorated-cycle period law and join isomorphism criterion
    Joinalong {
        /// joinalong:<base>;<block>,... with base cycle:n (odd) or c5hat
        #[arg(long)]
        graph: String,
    },
    /// Closed forms for metamour iterates of complete m-ary trees
    Tree {
        #[arg(long)]
        height: u32,
        #[arg(long)]
        m: usize,
    },
}

/// Parse and execute; returns the process exit code (0 pass, 1 theorem
/// failure, 2 usage error).
pub fn run<I: IntoIterator<Item = String>>(argv: I) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn max_iters() -> usize {
    std::env::var("METAMOUR_MAX_ITERS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_STEPS)
}

fn dispatch(cli: &Cli) -> anyhow::Result<i32> {
    let report = match &cli.command {
        Command::Construct {
            spec,
            export,
            labels,
        } => {
            let g = parse_graph_spec(spec)?;
            if let Some(export) = export {
                let text = match export {
                    Export::G6 => encode_graph6(&g)? + "\n",
                    Export::Dot => {
                        let names = if *labels { family_labels(spec, &g) } else { None };
                        export_dot(&g, names.as_deref())
                    }
                    Export::Edgelist => export_edgelist(&g),
                };
                print!("{text}");
                return Ok(0);
            }
            construct_report(spec, &g)
        }
        Command::Orbit { graph } => {
            let g = parse_graph_spec(graph)?;
            orbit_report(graph, &g)?
        }
        Command::Verify { suite } => verify_report(suite)?,
    };
    match cli.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(report.exit_code())
}

fn construct_report(spec: &str, g: &Graph) -> Report {
    let mut report = Report::new("construct").param("graph", spec);
    report.datum("n", g.n());
    report.datum("edge_count", g.edge_count());
    report.datum("connected", g.is_connected());
    report.datum("max_degree", g.max_degree());
    report.datum("diameter", format!("{:?}", g.diameter()));
    if let Ok(g6) = encode_graph6(g) {
        report.datum("graph6", g6);
    }
    report
}

fn orbit_report(spec: &str, g: &Graph) -> anyhow::Result<Report> {
    let start = Instant::now();
    let orb = orbit(g, max_iters())?;
    let mut report = Report::new("orbit").param("graph", spec);
    report.datum("preperiod", orb.preperiod);
    report.datum("period", orb.period);
    if let Some(pseudo) = pseudo_metamour_period(g)? {
        report.datum("pseudo_period", pseudo);
    }
    let limit_edges: Vec<serde_json::Value> = orb
        .limit_set()
        .iter()
        .map(|h| h.edge_count().into())
        .collect();
    report.datum("limit_edge_counts", limit_edges);
    report.meta.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}

fn verify_report(suite: &Suite) -> anyhow::Result<Report> {
    match suite {
        Suite::Period1 {
            max_n,
            include_disconnected,
        } => period_search_report(
            "verify period1",
            1,
            *max_n,
            *include_disconnected,
            &expected_period1(*max_n, *include_disconnected),
        ),
        Suite::Period3 {
            max_n,
            include_disconnected,
        } => period_search_report(
            "verify period3",
            3,
            *max_n,
            *include_disconnected,
            &expected_period3(*max_n, *include_disconnected),
        ),
        Suite::Period2 { max_n } => {
            let start = Instant::now();
            let mut scanned = 0;
            let mut counterexamples = Vec::new();
            let mut checked = 0u64;
            for n in 1..=*max_n {
                for g in enumerate_graphs(n, true)? {
                    scanned += 1;
                    let tr = check_period2_structure(&g)?;
                    if tr.verdict != Verdict::NotApplicable {
                        checked += 1;
                    }
                    collect_counterexamples(&tr, &mut counterexamples);
                }
            }
            let mut report = Report::new("verify period2").param("max_n", max_n);
            report.verdict = pass_fail(counterexamples.is_empty());
            report.counterexamples = counterexamples;
            report.datum("period2_graphs_checked", checked);
            report.meta.graphs_scanned = scanned;
            report.meta.runtime_ms = start.elapsed().as_millis();
            Ok(report)
        }
        Suite::Diameter { max_n } => {
            let start = Instant::now();
            let mut scanned = 0;
            let mut counterexamples = Vec::new();
            for n in 1..=*max_n {
                for g in enumerate_graphs(n, false)? {
                    scanned += 1;
                    let tr = check_diameter_equivalences(&g)?;
                    collect_counterexamples(&tr, &mut counterexamples);
                }
            }
            let mut report = Report::new("verify diameter").param("max_n", max_n);
            report.verdict = pass_fail(counterexamples.is_empty());
            report.counterexamples = counterexamples;
            report.meta.graphs_scanned = scanned;
            report.meta.runtime_ms = start.elapsed().as_millis();
            Ok(report)
        }
        Suite::Period3Sample { samples, seed } => {
            let tr = period3_sample(*samples, *seed)?;
            Ok(Report::from_theorem("verify period3-sample", &tr)
                .param("samples", samples)
                .param("seed", seed))
        }
        Suite::Petersen { m } => {
            let tr = petersen_suite(*m)?;
            Ok(Report::from_theorem("verify petersen", &tr).param("m", m))
        }
        Suite::Connectivity { m, j } => {
            let tr = connectivity_check(*m, *j)?;
            Ok(Report::from_theorem("verify connectivity", &tr)
                .param("m", m)
                .param("j", j))
        }
        Suite::Joinalong { graph } => {
            let (base_size, blocks) = joinalong_parts(graph)?;
            let tr = join_along_suite(base_size, &blocks)?;
            Ok(Report::from_theorem("verify joinalong", &tr).param("graph", graph))
        }
        Suite::Tree { height, m } => {
            let tr = tree_suite(*height, *m)?;
            Ok(Report::from_theorem("verify tree", &tr)
                .param("height", height)
                .param("m", m))
        }
    }
}

fn pass_fail(ok: bool) -> String {
    if ok { "pass" } else { "fail" }.to_string()
}

fn collect_counterexamples(tr: &TheoremReport, out: &mut Vec<CounterexampleOut>) {
    for c in &tr.counterexamples {
        out.push(CounterexampleOut {
            graph: encode_graph6(&c.graph)
                .unwrap_or_else(|_| format!("n={} edges={:?}", c.graph.n(), c.graph.edges())),
            witness: c.witness.clone(),
        });
    }
}

fn expected_period1(max_n: usize, include_disconnected: bool) -> Vec<Graph> {
    if include_disconnected {
        (1..=max_n).map(Graph::edgeless).collect()
    } else {
        vec![Graph::edgeless(1)]
    }
}

fn expected_period3(max_n: usize, include_disconnected: bool) -> Vec<Graph> {
    let mut expected = Vec::new();
    if !include_disconnected {
        if max_n >= 7 {
            expected.push(cycle(7));
        }
        if max_n >= 9 {
            expected.push(cycle(9));
        }
    } else {
        // unions with extra isolated vertices keep period 3
        for extra in 0..=max_n.saturating_sub(7) {
            expected.push(pad_isolated(&cycle(7), extra));
        }
        if max_n >= 9 {
            expected.push(cycle(9));
        }
    }
    expected
}

fn pad_isolated(g: &Graph, extra: usize) -> Graph {
    Graph::build(g.n() + extra, &g.edges()).expect("padding preserves validity")
}

fn period_search_report(
    command: &str,
    period: usize,
    max_n: usize,
    include_disconnected: bool,
    expected: &[Graph],
) -> anyhow::Result<Report> {
    let start = Instant::now();
    let found = search_exact_period(max_n, period, include_disconnected)?;
    let mut report = Report::new(command)
        .param("max_n", max_n)
        .param("include_disconnected", include_disconnected);
    let mut missing: Vec<&Graph> = expected.iter().collect();
    let mut unexpected = Vec::new();
    for g in &found {
        if let Some(i) = missing.iter().position(|e| is_isomorphic(e, g)) {
            missing.remove(i);
        } else {
            unexpected.push(g);
        }
    }
    for g in &unexpected {
        report.counterexamples.push(CounterexampleOut {
            graph: encode_graph6(g)?,
            witness: format!("unexpected graph with metamour period {period}"),
        });
    }
    for g in &missing {
        report.counterexamples.push(CounterexampleOut {
            graph: encode_graph6(g)?,
            witness: format!("expected graph with metamour period {period} not found"),
        });
    }
    report.verdict = pass_fail(report.counterexamples.is_empty());
    let witnesses: Vec<serde_json::Value> = found
        .iter()
        .map(|g| encode_graph6(g).map(Into::into))
        .collect::<anyhow::Result<_>>()?;
    report.datum("witnesses", witnesses);
    report.meta.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}

fn joinalong_parts(spec: &str) -> anyhow::Result<(usize, Vec<Graph>)> {
    let rest = spec
        .strip_prefix("joinalong:")
        .ok_or_else(|| anyhow::anyhow!("verify joinalong needs a joinalong:... spec"))?;
    let (base_spec, blocks_str) = rest
        .split_once(';')
        .ok_or_else(|| anyhow::anyhow!("joinalong needs `<base>;<block>,...`"))?;
    let base_size = if base_spec == "c5hat" {
        6
    } else if let Some(n) = base_spec.strip_prefix("cycle:") {
        n.parse::<usize>()
            .map_err(|_| anyhow::anyhow!("bad cycle size `{n}`"))?
    } else {
        anyhow::bail!("joinalong suite supports cycle:n or c5hat bases, got `{base_spec}`");
    };
    let blocks: Vec<Graph> = split_blocks(blocks_str)
        .iter()
        .map(|b| parse_graph_spec(b))
        .collect::<anyhow::Result<_>>()?;
    Ok((base_size, blocks))
}
