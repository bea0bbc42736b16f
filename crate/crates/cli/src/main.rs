use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use domination::harness::parameter_tables;
use domination::io::{parse_graphs, read_stdin, read_text};
use domination::{
    compute_report, emit_graph6, hunt, make_named, run_sweep, Check, Claim, Graph, HuntOutcome,
    Param, ParameterReport, SweepConfig, SweepUniverse, TheoremId, Universe,
};

#[derive(Parser)]
#[command(name = "domsweep", version, about = "Exact domination parameters and theorem sweeps on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every parameter for each input graph
    Compute(ComputeArgs),
    /// Emit the parameter table for every graph of a universe
    Sweep(SweepArgs),
    /// Check the theorem catalogue (or given claims) over a universe
    Verify(VerifyArgs),
    /// Search a universe for the first counterexample to a claim
    Hunt(HuntArgs),
    /// List the graphs of a universe as graph6
    Enumerate(UniverseArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseKind {
    Connected,
    Trees,
    Bipartite,
    File,
}

#[derive(Args)]
struct Output {
    /// Write to this path instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
}

impl Output {
    fn write(&self, text: &str) -> Result<()> {
        match &self.output {
            Some(path) => {
                let mut f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
                f.write_all(text.as_bytes())?;
            }
            None => io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// graph6 lines or an edge list; stdin when omitted
    #[arg(long, short, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Named family: path, cycle, complete, star, complete_bipartite
    #[arg(long, requires = "k")]
    family: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct UniverseArgs {
    #[arg(long, value_enum, default_value = "connected")]
    universe: UniverseKind,
    /// graph6 file for `--universe file`
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 7)]
    n_max: usize,
    /// Worker threads (0 = all cores)
    #[arg(long, short, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    out: Output,
}

impl UniverseArgs {
    fn config(&self, checks: Vec<Check>) -> Result<SweepConfig> {
        let universe = match (self.universe, &self.input) {
            (UniverseKind::File, Some(p)) => SweepUniverse::File(p.clone()),
            (UniverseKind::File, None) => bail!("--universe file needs --input"),
            (_, Some(_)) => bail!("--input is only used with --universe file"),
            (UniverseKind::Connected, None) => SweepUniverse::Enumerated(Universe::Connected),
            (UniverseKind::Trees, None) => SweepUniverse::Enumerated(Universe::Trees),
            (UniverseKind::Bipartite, None) => SweepUniverse::Enumerated(Universe::Bipartite),
        };
        let cfg = SweepConfig { n_min: self.n_min, n_max: self.n_max, universe, checks, jobs: self.jobs };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    universe: UniverseArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    universe: UniverseArgs,
    /// Theorem ids (T1.1 ... T3.4); all when neither this nor --claim is given
    #[arg(long = "theorem")]
    theorems: Vec<String>,
    /// Extra claims such as "gamma_t <= i0 + 1"
    #[arg(long = "claim")]
    claims: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct HuntArgs {
    /// Comparison over parameter names, e.g. "gamma_t <= i0"
    claim: String,
    #[command(flatten)]
    universe: UniverseArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

const CSV_PARAMS: [Param; 14] = Param::ALL;

fn csv_table(rows: &[(Graph, ParameterReport)]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["graph6", "n", "m", "diam"];
    header.extend(CSV_PARAMS.iter().map(|p| p.name()));
    w.write_record(&header)?;
    for (g, r) in rows {
        let mut rec = vec![
            emit_graph6(g),
            r.n.to_string(),
            r.m.to_string(),
            r.diam.map_or("inf".to_string(), |d| d.to_string()),
        ];
        rec.extend(CSV_PARAMS.iter().map(|&p| r.value(p).map_or(String::new(), |v| v.to_string())));
        w.write_record(&rec)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn json_table(rows: &[(Graph, ParameterReport)]) -> String {
    let items: Vec<serde_json::Value> = rows
        .iter()
        .map(|(g, r)| serde_json::json!({ "graph6": emit_graph6(g), "report": r }))
        .collect();
    serde_json::to_string_pretty(&items).expect("serializable") + "\n"
}

fn text_report(g: &Graph, r: &ParameterReport) -> String {
    let mut s = format!(
        "{}  n={} m={} diam={} dominating_vertex={}\n",
        emit_graph6(g),
        r.n,
        r.m,
        r.diam.map_or("inf".into(), |d| d.to_string()),
        r.has_dominating_vertex
    );
    for p in Param::ALL {
        match r.get(p) {
            Some(e) => s += &format!("  {:<13} {:>2}  {}\n", p.name(), e.value, e.witness),
            None => s += &format!("  {:<13} undefined\n", p.name()),
        }
    }
    s
}

fn render_table(rows: &[(Graph, ParameterReport)], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => json_table(rows),
        Format::Csv => csv_table(rows)?,
        Format::Text => rows.iter().map(|(g, r)| text_report(g, r)).collect(),
    })
}

fn cmd_compute(args: &ComputeArgs) -> Result<ExitCode> {
    let graphs: Vec<Graph> = match (&args.family, &args.input) {
        (Some(family), _) => vec![make_named(family, args.k.expect("clap enforces --k"))?],
        (None, Some(path)) => parse_graphs(&read_text(path)?)?.into_iter().map(|r| r.graph).collect(),
        (None, None) => parse_graphs(&read_stdin()?)?.into_iter().map(|r| r.graph).collect(),
    };
    let rows = graphs
        .into_iter()
        .map(|g| compute_report(&g).map(|r| (g, r)))
        .collect::<Result<Vec<_>, _>>()?;
    args.out.write(&render_table(&rows, args.format)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(args: &SweepArgs) -> Result<ExitCode> {
    let cfg = args.universe.config(Vec::new())?;
    let rows = parameter_tables(&cfg)?;
    args.universe.out.write(&render_table(&rows, args.format)?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let mut checks: Vec<Check> = args
        .theorems
        .iter()
        .map(|t| t.parse::<TheoremId>().map(Check::Theorem))
        .collect::<Result<_, _>>()?;
    for c in &args.claims {
        checks.push(Check::Claim(Claim::parse(c)?));
    }
    if checks.is_empty() {
        checks = TheoremId::ALL.into_iter().map(Check::Theorem).collect();
    }
    let cfg = args.universe.config(checks)?;
    let report = run_sweep(&cfg)?;
    let text = match args.format {
        Format::Json => report.to_json() + "\n",
        Format::Text | Format::Csv => {
            let mut s = String::new();
            for v in &report.verdicts {
                s += &format!(
                    "{:<6} {:<22} {:>7} checked {:>7} skipped  {}{}  ({:.2?})\n",
                    v.theorem_id,
                    v.universe,
                    v.graphs_checked,
                    v.graphs_skipped,
                    if v.pass { "PASS" } else { "FAIL" },
                    v.equality_attainers.map_or(String::new(), |e| format!(", {e} extremal")),
                    v.elapsed,
                );
                for viol in &v.violations {
                    s += &format!("    {}  {}\n", viol.graph6, viol.diagnostic.detail);
                }
            }
            s
        }
    };
    args.universe.out.write(&text)?;
    Ok(if report.all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_hunt(args: &HuntArgs) -> Result<ExitCode> {
    let claim = Claim::parse(&args.claim)?;
    let cfg = args.universe.config(vec![Check::Claim(claim.clone())])?;
    let outcome = hunt(&claim, &cfg)?;
    let text = match args.format {
        Format::Json | Format::Csv => serde_json::to_string_pretty(&outcome)? + "\n",
        Format::Text => match &outcome {
            HuntOutcome::Counterexample { graph6, parameters } => {
                let g = domination::parse_graph6(graph6.as_bytes())?;
                format!("counterexample to `{claim}`:\n{}", text_report(&g, parameters))
            }
            HuntOutcome::Exhausted { graphs_checked } => {
                format!("exhausted: `{claim}` holds on all {graphs_checked} graphs checked\n")
            }
        },
    };
    args.universe.out.write(&text)?;
    Ok(match outcome {
        HuntOutcome::Counterexample { .. } => ExitCode::from(1),
        HuntOutcome::Exhausted { .. } => ExitCode::SUCCESS,
    })
}

fn cmd_enumerate(args: &UniverseArgs) -> Result<ExitCode> {
    let cfg = args.config(Vec::new())?;
    let mut text = String::new();
    for (_, graphs) in domination::harness::sweep_graphs(&cfg)? {
        for g in graphs {
            text += &emit_graph6(&g);
            text.push('\n');
        }
    }
    args.out.write(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute(a) => cmd_compute(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Hunt(a) => cmd_hunt(a),
        Command::Enumerate(a) => cmd_enumerate(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
