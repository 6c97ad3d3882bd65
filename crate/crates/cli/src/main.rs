use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use edgereg::analysis::analyze;
use edgereg::graph::{enumerate_graphs, family, Graph};
use edgereg::harness::{parse_theorem_list, verify_theorems, HarnessConfig, TheoremId};
use edgereg::homology::hochster_betti;
use edgereg::parse::parse_input;
use edgereg::{FieldChoice, SquarefreeIdeal};

/// Regularity, projective dimension and structure of edge ideals.
#[derive(Parser)]
#[command(name = "edgereg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one graph: invariants, Betti numbers, certificates.
    Analyze(GraphArgs),
    /// Check the regularity and projective dimension theorems over all small graphs.
    Verify(VerifyArgs),
    /// Graded Betti table of R/I(G).
    Betti(GraphArgs),
    /// Print a family member or an enumeration as edge lists.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list file, `-` for stdin, or a family spec such as `cycle:5`.
    input: String,
    /// Coefficient field for homology: gf2, gfP for a prime P, or q.
    #[arg(long, env = "EDGEREG_FIELD", default_value = "gf2")]
    field: FieldChoice,
    #[arg(long, value_enum, default_value = "json")]
    format: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest vertex count to enumerate.
    #[arg(long, env = "EDGEREG_MAX_N", default_value_t = 5)]
    max_n: usize,
    /// Only connected graphs.
    #[arg(long, env = "EDGEREG_CONNECTED")]
    connected: bool,
    /// Comma-separated theorem ids, or `all`.
    #[arg(long, env = "EDGEREG_THEOREMS", default_value = "all")]
    theorems: String,
    #[arg(long, env = "EDGEREG_FIELD", default_value = "gf2")]
    field: FieldChoice,
    /// Seed for the generated d-tree families.
    #[arg(long, env = "EDGEREG_SEED", default_value_t = 0)]
    seed: u64,
    /// Worker threads.
    #[arg(long, env = "EDGEREG_JOBS")]
    jobs: Option<usize>,
    /// Skip the generated d-tree cases.
    #[arg(long)]
    no_generated: bool,
    #[arg(long, value_enum, default_value = "summary")]
    format: VerifyFormat,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Json,
    Tsv,
    Summary,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("what").required(true))]
struct GenerateArgs {
    /// Family spec, e.g. `dtree:2,5,7` or `complement:cycle:6`.
    #[arg(group = "what")]
    spec: Option<String>,
    /// Enumerate every graph on this many vertices, up to isomorphism.
    #[arg(long, group = "what")]
    enumerate: Option<usize>,
    #[arg(long, env = "EDGEREG_CONNECTED")]
    connected: bool,
}

fn read_graph(input: &str) -> Result<Graph> {
    let text = if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else if Path::new(input).is_file() {
        fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    } else {
        input.to_string()
    };
    parse_input(&text).with_context(|| format!("parsing {input}"))
}

fn write_out(path: Option<&str>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {p}")),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn analyze_cmd(args: &GraphArgs) -> Result<ExitCode> {
    let g = read_graph(&args.input)?;
    let report = analyze(&g, args.field)?;
    let text = match args.format {
        GraphFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
        GraphFormat::Text => {
            let inv = &report.invariants;
            let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
            format!(
                "vertices {}\nedges {}\nreg {}\npd {}\na {}\na' {}\nn {}\nmatching {}\nmax degree {}\n\
                 complement chordal {}\ncomplement triangle-free {}\nlinear quotients {}\nshellable {}\n\
                 vertex decomposable {}\ncomplement d-tree {}\n",
                report.n,
                report.edges.len(),
                opt(report.reg),
                opt(report.pd),
                inv.a.value,
                inv.a_prime.value,
                inv.n_inv.value,
                inv.matching.value,
                inv.max_degree,
                inv.complement_chordal,
                inv.complement_triangle_free,
                report.linear_quotients.label(),
                report.shellable.label(),
                report.vertex_decomposable.label(),
                report.complement_d_tree.label(),
            )
        }
    };
    write_out(None, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn betti_cmd(args: &GraphArgs) -> Result<ExitCode> {
    let g = read_graph(&args.input)?;
    let table = hochster_betti(&SquarefreeIdeal::edge_ideal(&g), args.field)?;
    let text = match args.format {
        GraphFormat::Json => {
            let entries: Vec<_> = table.entries().collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "field": args.field.to_string(),
                "betti": entries,
                "reg": table.reg(),
                "pd": table.pd(),
            }))? + "\n"
        }
        GraphFormat::Text => table.to_string(),
    };
    write_out(None, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd(args: &VerifyArgs) -> Result<ExitCode> {
    let theorems = parse_theorem_list(&args.theorems)?;
    let generated = !args.no_generated && [TheoremId::L2_12, TheoremId::T2_13].iter().any(|t| theorems.contains(t));
    let config = HarnessConfig {
        max_n: args.max_n,
        connected_only: args.connected,
        theorems,
        field: args.field,
        seed: args.seed,
        jobs: args.jobs,
        generated,
    };
    let report = verify_theorems(&config)?;
    let text = match args.format {
        VerifyFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
        VerifyFormat::Tsv => report.to_tsv(),
        VerifyFormat::Summary => {
            let mut s = report.summary_text();
            for (r, c) in report.failing() {
                s.push_str(&format!("FAIL {} {} edges {:?}: {:?}\n", c.theorem, r.source, r.edges, c.status));
            }
            s
        }
    };
    write_out(args.output.as_deref(), &text)?;
    Ok(if report.failures() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn generate_cmd(args: &GenerateArgs) -> Result<ExitCode> {
    let mut out = String::new();
    if let Some(spec) = &args.spec {
        out.push_str(&family(spec)?.to_edge_list());
    } else if let Some(n) = args.enumerate {
        for (k, g) in enumerate_graphs(n, args.connected)?.iter().enumerate() {
            out.push_str(&format!("# graph {k}\n{}\n", g.to_edge_list()));
        }
    }
    write_out(None, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => analyze_cmd(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Betti(a) => betti_cmd(a),
        Command::Generate(a) => generate_cmd(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
