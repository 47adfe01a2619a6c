//! Command-line front end: atlas lookups, minor and planarity queries,
//! connectivity, family classification, catalog generation, and a
//! verification harness for the claims the library is built around.
//!
//! Exit codes follow one convention everywhere: 0 is a positive answer
//! (found, planar, member, all claims pass), 1 is a negative answer, and
//! 2 is an error (unreadable input, domain violation, exhausted budget).

mod claims;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use minorkit::atlas::{
    build_named, gen_all_graphs, gen_cubic_cyc4, gen_special_3sum_k4_with, Catalog, KConvention,
};
use minorkit::characterize::{
    classify_c_or_l, decide_thm14, decide_thm15_with, decide_thm16, ClassificationResult,
    CycleOrLine,
};
use minorkit::codec::{format_edge_list, from_graph6, parse_edge_list, to_dot, to_graph6};
use minorkit::connectivity::{vertex_connectivity, CutWitness};
use minorkit::graph::bits;
use minorkit::minors::{
    find_minor_with, find_topological_minor_with, planarity, verify_model, verify_subdivision,
    MinorModel, SearchConfig,
};
use minorkit::SimpleGraph;

#[derive(Parser)]
#[command(
    name = "minorkit",
    version,
    about = "Exact minor search, planarity, connectivity, and structured-family classification for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Node budget for backtracking searches; falls back to the
    /// MINORKIT_BUDGET environment variable, then to the library default.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Print certificates (branch sets, cuts, chains) alongside verdicts.
    #[arg(long, global = true)]
    witness: bool,

    /// Serialization used whenever a graph is printed.
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,

    /// Write primary output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named graph from the atlas.
    Atlas {
        /// Atlas name, e.g. K5, C7^2, Oct1+, L(K3,3).
        name: String,
    },
    /// Search for the second graph inside the first.
    Minor {
        /// Host graph: atlas name or file (graph6 or edge list).
        g: String,
        /// Pattern graph: atlas name or file.
        h: String,
        /// Search for a subdivision instead of a minor.
        #[arg(long)]
        topological: bool,
    },
    /// Test planarity, with a forbidden-minor certificate on failure.
    Planar {
        g: String,
    },
    /// Compute vertex connectivity and an optimal cut.
    Conn {
        g: String,
    },
    /// Classify a graph against the structured families.
    Classify {
        g: String,
        /// Run one of the structural deciders (14, 15, or 16) instead of
        /// the squared-cycle / line-graph family test.
        #[arg(long = "thm")]
        theorem: Option<u32>,
        /// Build the triangle-stacking catalog with shared-edge deletions
        /// allowed (affects the decider for 15 only).
        #[arg(long)]
        k_deletions: bool,
    },
    /// Generate a catalog of graphs and print it.
    Gen {
        family: GenFamily,
        /// Meaning depends on the family: handle steps for cubic-cyc4,
        /// maximum vertex count for k4-stacks, exact vertex count for
        /// census.
        bound: usize,
        /// Allow shared-edge deletions when stacking (k4-stacks only).
        #[arg(long)]
        k_deletions: bool,
    },
    /// Run the built-in claim suite and report per-claim results.
    VerifyPaper {
        /// Run only claims whose identifier contains this substring
        /// (case-insensitive).
        #[arg(long)]
        only: Option<String>,
        /// Include the slow census extensions.
        #[arg(long)]
        slow: bool,
        /// Also write one tab-separated "id<TAB>status" line per claim.
        #[arg(long)]
        summary: Option<PathBuf>,
        /// Print per-claim wall-clock times to standard error.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum GenFamily {
    /// Closure of {K3,3, Cube} under handle additions, kept cyclically
    /// 4-connected and cubic.
    CubicCyc4,
    /// Closure of K4 under triangle sums over non-separating triangles.
    K4Stacks,
    /// Every isomorphism class on exactly `bound` vertices.
    Census,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let cfg = search_config(cli.budget)?;
    let mut sink = Sink::new(cli.out.as_deref())?;
    let code = match &cli.command {
        Command::Atlas { name } => cmd_atlas(cli, &mut sink, name)?,
        Command::Minor { g, h, topological } => cmd_minor(cli, &mut sink, &cfg, g, h, *topological)?,
        Command::Planar { g } => cmd_planar(cli, &mut sink, g)?,
        Command::Conn { g } => cmd_conn(cli, &mut sink, g)?,
        Command::Classify {
            g,
            theorem,
            k_deletions,
        } => cmd_classify(&mut sink, g, *theorem, *k_deletions)?,
        Command::Gen {
            family,
            bound,
            k_deletions,
        } => cmd_gen(cli, &mut sink, *family, *bound, *k_deletions)?,
        Command::VerifyPaper {
            only,
            slow,
            summary,
            timings,
        } => {
            let report = claims::run_suite(&claims::SuiteOptions {
                cfg,
                slow: *slow,
                only: only.clone(),
                timings: *timings,
            })?;
            sink.write(&report.text)?;
            if let Some(path) = summary {
                fs::write(path, &report.summary)
                    .map_err(|e| format!("writing {}: {}", path.display(), e))?;
            }
            if report.failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    };
    sink.finish()?;
    Ok(code)
}

fn search_config(flag: Option<u64>) -> Result<SearchConfig, String> {
    let mut cfg = SearchConfig::default();
    if let Ok(raw) = std::env::var("MINORKIT_BUDGET") {
        cfg.max_nodes = raw
            .parse()
            .map_err(|_| format!("MINORKIT_BUDGET is not a node count: {:?}", raw))?;
    }
    if let Some(nodes) = flag {
        cfg.max_nodes = nodes;
    }
    Ok(cfg)
}

/// Buffers primary output and flushes it to a file or stdout at the end,
/// so a failed command never leaves a half-written file behind.
struct Sink {
    target: Option<PathBuf>,
    buffer: String,
}

impl Sink {
    fn new(target: Option<&Path>) -> Result<Self, String> {
        Ok(Sink {
            target: target.map(Path::to_path_buf),
            buffer: String::new(),
        })
    }

    fn write(&mut self, text: &str) -> Result<(), String> {
        self.buffer.push_str(text);
        Ok(())
    }

    fn line(&mut self, text: &str) -> Result<(), String> {
        self.buffer.push_str(text);
        self.buffer.push('\n');
        Ok(())
    }

    fn finish(&mut self) -> Result<(), String> {
        match &self.target {
            Some(path) => fs::write(path, &self.buffer)
                .map_err(|e| format!("writing {}: {}", path.display(), e)),
            None => {
                print!("{}", self.buffer);
                Ok(())
            }
        }
    }
}

/// Resolves a graph argument: a `name:` prefix forces an atlas lookup, an
/// existing path is read as graph6 or edge-list text, and anything else
/// is tried as a bare atlas name.
fn load_graph(arg: &str) -> Result<SimpleGraph, String> {
    if let Some(name) = arg.strip_prefix("name:") {
        return build_named(name).map_err(|e| format!("{}: {}", name, e));
    }
    let path = Path::new(arg);
    if path.exists() {
        let text =
            fs::read_to_string(path).map_err(|e| format!("reading {}: {}", path.display(), e))?;
        return parse_graph_text(&text).map_err(|e| format!("{}: {}", path.display(), e));
    }
    build_named(arg).map_err(|e| format!("{}: not a file, and {}", arg, e))
}

/// A line whose first two tokens are integers is the `n m` header of an
/// edge list; graph6 text never contains interior whitespace.
fn parse_graph_text(text: &str) -> Result<SimpleGraph, String> {
    let meaningful = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let header = meaningful.ok_or_else(|| "empty graph file".to_string())?;
    let mut tokens = header.split_whitespace();
    let ints = tokens.next().is_some_and(|t| t.parse::<usize>().is_ok())
        && tokens.next().is_some_and(|t| t.parse::<usize>().is_ok());
    if ints {
        parse_edge_list(text).map_err(|e| e.to_string())
    } else {
        from_graph6(text.trim()).map_err(|e| e.to_string())
    }
}

fn render_graph(g: &SimpleGraph, format: GraphFormat, name: &str) -> String {
    match format {
        GraphFormat::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
        GraphFormat::Edges => format_edge_list(g),
        GraphFormat::Dot => to_dot(g, name),
    }
}

fn dot_safe(name: &str) -> String {
    let cleaned: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    if cleaned.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        format!("g{}", cleaned)
    } else {
        cleaned
    }
}

fn cmd_atlas(cli: &Cli, sink: &mut Sink, name: &str) -> Result<ExitCode, String> {
    let bare = name.strip_prefix("name:").unwrap_or(name);
    let g = build_named(bare).map_err(|e| e.to_string())?;
    sink.write(&render_graph(&g, cli.format, &dot_safe(bare)))?;
    if cli.witness {
        sink.line(&format!(
            "# {}: {} vertices, {} edges",
            bare,
            g.n(),
            g.edge_count()
        ))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn format_branch_sets(model: &MinorModel) -> Vec<String> {
    model
        .branch_sets()
        .iter()
        .enumerate()
        .map(|(hv, set)| {
            let parts: Vec<String> = set.iter().map(usize::to_string).collect();
            format!("  branch {} <- {{{}}}", hv, parts.join(" "))
        })
        .collect()
}

fn cmd_minor(
    cli: &Cli,
    sink: &mut Sink,
    cfg: &SearchConfig,
    g_arg: &str,
    h_arg: &str,
    topological: bool,
) -> Result<ExitCode, String> {
    let g = load_graph(g_arg)?;
    let h = load_graph(h_arg)?;
    if topological {
        let found = find_topological_minor_with(&g, &h, cfg).map_err(|e| e.to_string())?;
        match found {
            Some(model) => {
                if !verify_subdivision(&g, &h, &model) {
                    return Err("internal: subdivision certificate failed revalidation".into());
                }
                sink.line("TOPOLOGICAL MINOR FOUND")?;
                if cli.witness {
                    let vs: Vec<String> =
                        model.branch_vertices().iter().map(usize::to_string).collect();
                    sink.line(&format!("  branch vertices: {}", vs.join(" ")))?;
                    for (e, path) in model.h_edges().iter().zip(model.paths()) {
                        let ps: Vec<String> = path.iter().map(usize::to_string).collect();
                        sink.line(&format!("  edge {}: path {}", e, ps.join("-")))?;
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
            None => {
                sink.line("NO TOPOLOGICAL MINOR")?;
                Ok(ExitCode::from(1))
            }
        }
    } else {
        let found = find_minor_with(&g, &h, cfg).map_err(|e| e.to_string())?;
        match found {
            Some(model) => {
                if !verify_model(&g, &h, &model) {
                    return Err("internal: minor certificate failed revalidation".into());
                }
                sink.line("MINOR FOUND")?;
                if cli.witness {
                    for line in format_branch_sets(&model) {
                        sink.line(&line)?;
                    }
                }
                Ok(ExitCode::SUCCESS)
            }
            None => {
                sink.line("NO MINOR")?;
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn cmd_planar(cli: &Cli, sink: &mut Sink, g_arg: &str) -> Result<ExitCode, String> {
    let g = load_graph(g_arg)?;
    match planarity(&g).map_err(|e| e.to_string())? {
        None => {
            sink.line("PLANAR")?;
            Ok(ExitCode::SUCCESS)
        }
        Some(witness) => {
            sink.line(&format!("NON-PLANAR ({} minor)", witness.forbidden))?;
            if cli.witness {
                for line in format_branch_sets(&witness.model) {
                    sink.line(&line)?;
                }
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_conn(cli: &Cli, sink: &mut Sink, g_arg: &str) -> Result<ExitCode, String> {
    let g = load_graph(g_arg)?;
    let (k, witness) = vertex_connectivity(&g).map_err(|e| e.to_string())?;
    sink.line(&format!("connectivity: {}", k))?;
    if cli.witness {
        match witness {
            Some(CutWitness::VertexCut {
                vertices,
                side_a,
                side_b,
            }) => {
                let vs: Vec<String> = vertices.iter().map(usize::to_string).collect();
                sink.line(&format!("  cut: {{{}}}", vs.join(" ")))?;
                for (label, side) in [("side a", side_a), ("side b", side_b)] {
                    let vs: Vec<String> = bits(side).map(|v| v.to_string()).collect();
                    sink.line(&format!("  {}: {{{}}}", label, vs.join(" ")))?;
                }
            }
            Some(CutWitness::CyclicEdgeCut { .. }) => {
                sink.line("  cut: cyclic edge cut (cubic analysis)")?;
            }
            None => {
                sink.line("  cut: none (no separating set this small)")?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_code(result: &ClassificationResult) -> ExitCode {
    if result.member {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_classify(
    sink: &mut Sink,
    g_arg: &str,
    theorem: Option<u32>,
    k_deletions: bool,
) -> Result<ExitCode, String> {
    let g = load_graph(g_arg)?;
    let convention = if k_deletions {
        KConvention::AllowDeletions
    } else {
        KConvention::KeepCommonEdges
    };
    match theorem {
        None => match classify_c_or_l(&g).map_err(|e| e.to_string())? {
            CycleOrLine::CycleSquare { n } => {
                sink.line(&format!("squared cycle: C{}^2", n))?;
                Ok(ExitCode::SUCCESS)
            }
            CycleOrLine::LineOfCubic { root } => {
                sink.line("line graph of a cyclically 4-connected cubic graph")?;
                sink.line(&format!("  root: {}", to_graph6(&root)))?;
                Ok(ExitCode::SUCCESS)
            }
            CycleOrLine::Neither => {
                sink.line("neither a squared cycle nor such a line graph")?;
                Ok(ExitCode::from(1))
            }
        },
        Some(14) => {
            let r = decide_thm14(&g).map_err(|e| e.to_string())?;
            sink.write(&format!("{}", r))?;
            Ok(verdict_code(&r))
        }
        Some(15) => {
            let r = decide_thm15_with(&g, convention).map_err(|e| e.to_string())?;
            sink.write(&format!("{}", r))?;
            Ok(verdict_code(&r))
        }
        Some(16) => {
            let r = decide_thm16(&g).map_err(|e| e.to_string())?;
            sink.write(&format!("{}", r))?;
            Ok(verdict_code(&r))
        }
        Some(other) => Err(format!("no decider for --thm {}", other)),
    }
}

fn cmd_gen(
    cli: &Cli,
    sink: &mut Sink,
    family: GenFamily,
    bound: usize,
    k_deletions: bool,
) -> Result<ExitCode, String> {
    let catalog: Catalog = match family {
        GenFamily::CubicCyc4 => gen_cubic_cyc4(bound).map_err(|e| e.to_string())?,
        GenFamily::K4Stacks => {
            let convention = if k_deletions {
                KConvention::AllowDeletions
            } else {
                KConvention::KeepCommonEdges
            };
            gen_special_3sum_k4_with(bound, convention).map_err(|e| e.to_string())?
        }
        GenFamily::Census => gen_all_graphs(bound, |_| true).map_err(|e| e.to_string())?,
    };
    if cli.witness {
        for line in catalog.provenance_lines() {
            sink.line(&line)?;
        }
    } else {
        match cli.format {
            GraphFormat::Graph6 => {
                for line in catalog.graph6_lines() {
                    sink.line(&line)?;
                }
            }
            _ => {
                for (i, key) in catalog.keys().enumerate() {
                    let name = format!("m{}", i);
                    sink.write(&render_graph(&key.graph(), cli.format, &name))?;
                }
            }
        }
    }
    if catalog.truncated() {
        sink.line("# truncated: raise the bound to see more")?;
    }
    Ok(ExitCode::SUCCESS)
}
