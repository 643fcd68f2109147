use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use lexsearch::bench::{run_bench, BenchConfig};
use lexsearch::chordal::{lexdfs_plus_chordal_run, ChordalOptions, Chordality};
use lexsearch::io::{
    parse_edge_list, parse_order, parse_tree, write_edge_list, write_order, write_tree,
};
use lexsearch::oracle::{
    brute_force_chordless_cycle, check_dfs_order, check_lexdfs_order, enumerate_lexbfs_orders,
    enumerate_lexdfs_orders, naive_lexbfs_plus, naive_lexdfs_plus, ENUMERATION_LIMIT,
};
use lexsearch::testkit::gen_chordal;
use lexsearch::{
    check_chordal, f_tree, l_tree, lexbfs_plus, verify_lexdfs_ltree, verify_lexdfs_order, Graph,
    Vertex, VertexOrder,
};

/// Lexicographic graph searches on edge-list files.
#[derive(Parser)]
#[command(name = "lexsearch", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// LexBFS order, or LexBFS⁺ with a tie-break order ending at the start.
    Lexbfs(SearchArgs),
    /// LexDFS order of a chordal graph, or LexDFS⁺ with a tie-break order.
    Lexdfs {
        #[command(flatten)]
        search: SearchArgs,
        /// Also write the L-tree of the computed LexBFS⁺ order here.
        #[arg(long)]
        emit_tree: Option<PathBuf>,
    },
    /// Is the order a LexDFS order? Exit 0 if yes, 1 if no.
    VerifyOrder {
        graph: PathBuf,
        order: PathBuf,
        /// Use the four-point checker; works on any graph.
        #[arg(long)]
        oracle: bool,
    },
    /// Is the rooted tree an L-tree of LexDFS? Exit 0 if yes, 1 if no.
    VerifyTree { graph: PathBuf, tree: PathBuf },
    /// First-in or last-in tree of a search order.
    Tree {
        graph: PathBuf,
        order: PathBuf,
        #[arg(long, value_enum)]
        kind: TreeKind,
    },
    /// Random connected chordal graph as an edge list.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Chordality verdict with an elimination order or a chordless cycle.
    CheckChordal { graph: PathBuf },
    /// Slow reference implementations.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Doubling experiment: fast chordal LexDFS⁺ against the label simulation.
    Bench {
        #[arg(long, default_value_t = 8)]
        k: usize,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        /// Skip the naive oracle above this many vertices.
        #[arg(long, default_value_t = 1 << 12)]
        naive_max_n: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// LexBFS⁺ by label simulation.
    Lexbfs(SearchArgs),
    /// LexDFS⁺ by label simulation; any connected graph.
    Lexdfs(SearchArgs),
    /// Four-point LexDFS check.
    VerifyOrder { graph: PathBuf, order: PathBuf },
    /// Four-point DFS check.
    CheckDfs { graph: PathBuf, order: PathBuf },
    /// Every LexDFS or LexBFS order from the start vertex, one per line.
    Enumerate {
        graph: PathBuf,
        #[arg(long)]
        start: String,
        #[arg(long, value_enum, default_value_t = SearchKind::Lexdfs)]
        kind: SearchKind,
        #[arg(long, default_value_t = ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// Exhaustive search for an induced cycle of length at least four.
    ChordlessCycle { graph: PathBuf },
}

#[derive(clap::Args)]
struct SearchArgs {
    graph: PathBuf,
    #[arg(long)]
    start: String,
    /// Order file; its last vertex must be the start.
    #[arg(long)]
    tiebreak: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeKind {
    L,
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    Lexdfs,
    Lexbfs,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Lib(#[from] lexsearch::Error),
    #[error("unknown start vertex `{0}`")]
    UnknownStart(String),
    /// Formatted chordless cycle.
    #[error("not-chordal")]
    NotChordal(String),
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    Ok(parse_edge_list(&read(path)?)?)
}

fn load_order(graph: &Graph, path: &Path) -> CliResult<VertexOrder> {
    Ok(parse_order(graph, &read(path)?)?)
}

/// Keeps the cycle, which needs the graph's tokens to print.
fn domain<T>(graph: &Graph, r: lexsearch::Result<T>) -> CliResult<T> {
    r.map_err(|e| match e {
        lexsearch::Error::NotChordal(c) => CliError::NotChordal(c.format(graph)),
        e => CliError::Lib(e),
    })
}

fn verdict(label: &str, yes: bool) -> ExitCode {
    println!("{label}: {}", if yes { "yes" } else { "no" });
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn start_and_tiebreak(graph: &Graph, args: &SearchArgs) -> CliResult<(Vertex, VertexOrder)> {
    let start = graph
        .vertex(&args.start)
        .ok_or_else(|| CliError::UnknownStart(args.start.clone()))?;
    let tiebreak = match &args.tiebreak {
        Some(path) => load_order(graph, path)?,
        None => VertexOrder::ending_with(graph.n(), start),
    };
    if tiebreak.last() != Some(start) {
        return Err(lexsearch::Error::RhoDoesNotEndAtStart(start).into());
    }
    Ok((start, tiebreak))
}

fn print_order(graph: &Graph, order: &VertexOrder) -> ExitCode {
    print!("{}", write_order(graph, order));
    ExitCode::SUCCESS
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Lexbfs(args) => {
            let g = load_graph(&args.graph)?;
            let (_, tiebreak) = start_and_tiebreak(&g, &args)?;
            Ok(print_order(&g, &lexbfs_plus(&g, &tiebreak)?))
        }
        Command::Lexdfs { search, emit_tree } => {
            let g = load_graph(&search.graph)?;
            let (start, tiebreak) = start_and_tiebreak(&g, &search)?;
            let run = domain(
                &g,
                lexdfs_plus_chordal_run(&g, start, &tiebreak, ChordalOptions::default()),
            )?;
            if let Some(path) = emit_tree {
                write(&path, &write_tree(&g, &run.tree))?;
            }
            Ok(print_order(&g, run.sigma()))
        }
        Command::VerifyOrder {
            graph,
            order,
            oracle,
        } => {
            let g = load_graph(&graph)?;
            let o = load_order(&g, &order)?;
            let yes = if oracle {
                check_lexdfs_order(&g, &o)
            } else {
                domain(&g, verify_lexdfs_order(&g, &o))?
            };
            Ok(verdict("lexdfs-order", yes))
        }
        Command::VerifyTree { graph, tree } => {
            let g = load_graph(&graph)?;
            let t = parse_tree(&g, &read(&tree)?)?;
            Ok(verdict(
                "lexdfs-ltree",
                domain(&g, verify_lexdfs_ltree(&g, &t))?,
            ))
        }
        Command::Tree { graph, order, kind } => {
            let g = load_graph(&graph)?;
            let o = load_order(&g, &order)?;
            let t = match kind {
                TreeKind::L => l_tree(&g, &o)?,
                TreeKind::F => f_tree(&g, &o)?,
            };
            print!("{}", write_tree(&g, &t));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { n, k, seed } => {
            print!("{}", write_edge_list(&gen_chordal(n, k, seed)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckChordal { graph } => {
            let g = load_graph(&graph)?;
            match check_chordal(&g) {
                Chordality::Chordal(peo) => {
                    println!("chordal: yes");
                    println!("peo: {}", g.format_order(&peo));
                    Ok(ExitCode::SUCCESS)
                }
                Chordality::NotChordal(cycle) => {
                    println!("chordal: no");
                    println!("cycle: {}", cycle.format(&g));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Oracle(cmd) => run_oracle(cmd),
        Command::Bench {
            k,
            sizes,
            seed,
            repeats,
            naive_max_n,
        } => {
            let report = run_bench(&BenchConfig {
                k,
                sizes,
                seed,
                repeats,
                naive_max_n,
            })?;
            print!("{}", report.table());
            if let Some(steeper) = report.naive_steeper() {
                println!("naive-steeper: {}", if steeper { "yes" } else { "no" });
            }
            Ok(verdict("linear", report.linear()))
        }
    }
}

fn run_oracle(cmd: OracleCommand) -> CliResult<ExitCode> {
    match cmd {
        OracleCommand::Lexbfs(args) => {
            let g = load_graph(&args.graph)?;
            let (_, tiebreak) = start_and_tiebreak(&g, &args)?;
            Ok(print_order(&g, &naive_lexbfs_plus(&g, &tiebreak)?))
        }
        OracleCommand::Lexdfs(args) => {
            let g = load_graph(&args.graph)?;
            let (_, tiebreak) = start_and_tiebreak(&g, &args)?;
            Ok(print_order(&g, &naive_lexdfs_plus(&g, &tiebreak)?))
        }
        OracleCommand::VerifyOrder { graph, order } => {
            let g = load_graph(&graph)?;
            let o = load_order(&g, &order)?;
            Ok(verdict("lexdfs-order", check_lexdfs_order(&g, &o)))
        }
        OracleCommand::CheckDfs { graph, order } => {
            let g = load_graph(&graph)?;
            let o = load_order(&g, &order)?;
            Ok(verdict("dfs-order", check_dfs_order(&g, &o)))
        }
        OracleCommand::Enumerate {
            graph,
            start,
            kind,
            limit,
        } => {
            let g = load_graph(&graph)?;
            let s = g.vertex(&start).ok_or(CliError::UnknownStart(start))?;
            let orders = match kind {
                SearchKind::Lexdfs => enumerate_lexdfs_orders(&g, s, limit)?,
                SearchKind::Lexbfs => enumerate_lexbfs_orders(&g, s, limit)?,
            };
            for o in &orders {
                print!("{}", write_order(&g, o));
            }
            Ok(ExitCode::SUCCESS)
        }
        OracleCommand::ChordlessCycle { graph } => {
            let g = load_graph(&graph)?;
            match brute_force_chordless_cycle(&g)? {
                Some(cycle) => {
                    let tokens: Vec<_> = cycle.iter().map(|&v| g.token(v)).collect();
                    println!("cycle: {}", tokens.join(" "));
                    Ok(ExitCode::from(1))
                }
                None => {
                    println!("cycle: none");
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::NotChordal(cycle)) => {
            println!("not-chordal");
            println!("cycle: {cycle}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
