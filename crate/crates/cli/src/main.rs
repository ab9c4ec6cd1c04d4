use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sudoku_hcp::formats::{
    export_cycle, export_graph, export_tsplib_hcp, import_cycle, import_graph,
};
use sudoku_hcp::hcp::{build_hcp, prune_fixed, recover_solution, vertex_count_formula};
use sudoku_hcp::pipeline::{budget_from_env, run_pipeline, PipelineConfig, PipelineOutcome};
use sudoku_hcp::solve::{solve_directed, verify_cycle, Budget, SolveOutcome, Solver};
use sudoku_hcp::stats::stats;
use sudoku_hcp::sudoku::{parse_sudoku, validate_grid, Grid, PuzzleFormat, SudokuInstance};
use sudoku_hcp::transform::{
    compress_triples, lift_cycle, reduce_graph, undirect, CycleLifter, TransformError,
};
use sudoku_hcp::{AnyGraph, UndirectedGraph};

const EXIT_OK: u8 = 0;
const EXIT_NO_SOLUTION: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sudoku2hcp",
    version,
    about = "Solve Sudoku puzzles as Hamiltonian cycle problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Auto,
    Grid,
    Line,
}

#[derive(Args)]
struct PuzzleArgs {
    /// Puzzle file, or `-` for standard input
    puzzle: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    format: FormatArg,
}

#[derive(Args)]
struct BudgetArgs {
    /// Time limit in milliseconds (SUDOKU2HCP_BUDGET_MS overrides the default)
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Maximum number of search nodes
    #[arg(long)]
    max_nodes: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<Budget> {
        let mut b = budget_from_env(Budget::default())?;
        if let Some(ms) = self.budget_ms {
            b = b.with_time_ms(ms);
        }
        if let Some(n) = self.max_nodes {
            b = b.with_nodes(n);
        }
        Ok(b)
    }
}

#[derive(Args)]
struct TransformArgs {
    /// Input graph file
    input: PathBuf,
    /// Journal leading to the input graph, when it was itself transformed
    #[arg(long)]
    journal_in: Option<PathBuf>,
    /// Output graph file
    #[arg(short, long)]
    output: PathBuf,
    /// Output journal (default: `<output>.journal`)
    #[arg(long)]
    journal: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build the directed HCP instance of a puzzle
    Convert {
        #[command(flatten)]
        puzzle: PuzzleArgs,
        /// Remove the arcs ruled out by the clues
        #[arg(long)]
        prune: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a directed graph to an undirected one by vertex triplication
    Undirect(TransformArgs),
    /// Remove the middle vertex of every duplicate-triple gadget
    Compress {
        #[command(flatten)]
        args: TransformArgs,
        /// Sudoku order (inferred from the vertex count when omitted)
        #[arg(long)]
        order: Option<usize>,
    },
    /// Apply the degree-two simplification rules
    Reduce(TransformArgs),
    /// Search for a Hamiltonian cycle
    Solve {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Pick branching edges at random (seeded)
        #[arg(long)]
        randomized: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write an undirected graph as a TSPLIB HCP instance
    ExportTsplib {
        graph: PathBuf,
        #[arg(long, default_value = "sudoku")]
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Turn a cycle (cycle file or TSPLIB tour) back into a grid
    Recover {
        cycle: PathBuf,
        /// Journal of the graph the cycle was found in
        #[arg(long)]
        journal: Option<PathBuf>,
        /// Sudoku order (inferred from the cycle length when omitted)
        #[arg(long)]
        order: Option<usize>,
    },
    /// Check a grid against a puzzle, or a cycle against a graph
    Verify {
        file: PathBuf,
        /// Puzzle whose clues the grid must honour
        #[arg(long)]
        puzzle: Option<PathBuf>,
        /// Graph the cycle must be Hamiltonian in
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Print size and degree statistics of a graph
    Stats { graph: PathBuf },
    /// Run every stage and print the solved grid
    Pipeline {
        #[command(flatten)]
        puzzle: PuzzleArgs,
        /// Apply degree-two reduction (default)
        #[arg(long, overrides_with = "no_reduce")]
        reduce: bool,
        #[arg(long)]
        no_reduce: bool,
        /// Also remove the duplicate-triple gadget middles
        #[arg(long)]
        compress: bool,
        /// Skip clue pruning (the result then solves the blank grid)
        #[arg(long)]
        no_prune: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Also write the directed Hamiltonian cycle here
        #[arg(long)]
        cycle_out: Option<PathBuf>,
    },
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => match io::stdout().write_all(text.as_bytes()) {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
            r => Ok(r?),
        },
    }
}

fn read_puzzle(args: &PuzzleArgs) -> Result<SudokuInstance> {
    let text = read_input(&args.puzzle)?;
    let format = match args.format {
        FormatArg::Grid => PuzzleFormat::Grid,
        FormatArg::Line => PuzzleFormat::Line,
        FormatArg::Auto => {
            if text.split_whitespace().count() == 1 {
                PuzzleFormat::Line
            } else {
                PuzzleFormat::Grid
            }
        }
    };
    Ok(parse_sudoku(text.trim(), format)?)
}

fn read_graph(path: &Path) -> Result<AnyGraph> {
    import_graph(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_undirected(path: &Path) -> Result<UndirectedGraph> {
    match read_graph(path)? {
        AnyGraph::Undirected(g) => Ok(g),
        AnyGraph::Directed(_) => bail!("{} is directed; run `undirect` first", path.display()),
    }
}

fn read_journal(path: Option<&Path>) -> Result<CycleLifter> {
    match path {
        Some(p) => {
            CycleLifter::parse(&read_input(p)?).with_context(|| format!("parsing {}", p.display()))
        }
        None => Ok(CycleLifter::new()),
    }
}

fn journal_path(args: &TransformArgs) -> PathBuf {
    args.journal.clone().unwrap_or_else(|| {
        let mut p = args.output.clone().into_os_string();
        p.push(".journal");
        p.into()
    })
}

fn write_transformed(args: &TransformArgs, g: &UndirectedGraph, lifter: CycleLifter) -> Result<()> {
    let lifter = read_journal(args.journal_in.as_deref())?.then(lifter);
    fs::write(&args.output, export_graph(&AnyGraph::Undirected(g.clone())))
        .with_context(|| format!("writing {}", args.output.display()))?;
    let jp = journal_path(args);
    fs::write(&jp, lifter.to_text()).with_context(|| format!("writing {}", jp.display()))
}

/// Smallest order whose vertex count matches `formula`.
fn infer_order(count: usize, formula: impl Fn(usize) -> usize) -> Result<usize> {
    (2..=64usize)
        .map(|b| b * b)
        .find(|&n| formula(n) == count)
        .ok_or_else(|| anyhow!("{count} vertices do not match any Sudoku order"))
}

fn report_outcome(outcome: &SolveOutcome) -> u8 {
    eprintln!("{}", outcome.stats().line());
    match outcome {
        SolveOutcome::Cycle(..) => EXIT_OK,
        SolveOutcome::NoCycle(_) => {
            eprintln!("no Hamiltonian cycle");
            EXIT_NO_SOLUTION
        }
        SolveOutcome::BudgetExceeded(_) => {
            eprintln!("search budget exhausted");
            EXIT_BUDGET
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Convert {
            puzzle,
            prune,
            output,
        } => {
            let inst = read_puzzle(&puzzle)?;
            let mut g = build_hcp(inst.order())?;
            if prune {
                let (pruned, removed) = prune_fixed(&g, &inst)?;
                eprintln!("pruned {removed} arcs");
                g = pruned;
            }
            write_output(output.as_deref(), &export_graph(&AnyGraph::Directed(g)))?;
        }
        Command::Undirect(args) => {
            let AnyGraph::Directed(g) = read_graph(&args.input)? else {
                bail!("{} is already undirected", args.input.display());
            };
            let (u, lifter) = undirect(&g);
            write_transformed(&args, &u, lifter)?;
        }
        Command::Compress { args, order } => {
            let g = read_undirected(&args.input)?;
            let n = match order {
                Some(n) => n,
                None => infer_order(g.vertex_count(), |n| 3 * vertex_count_formula(n))?,
            };
            let (c, lifter) = compress_triples(&g, n)?;
            write_transformed(&args, &c, lifter)?;
        }
        Command::Reduce(args) => {
            let g = read_undirected(&args.input)?;
            match reduce_graph(&g) {
                Ok((r, lifter)) => write_transformed(&args, &r, lifter)?,
                Err(TransformError::Infeasible(reason)) => {
                    eprintln!("no Hamiltonian cycle: {reason}");
                    return Ok(EXIT_NO_SOLUTION);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Solve {
            graph,
            budget,
            randomized,
            output,
        } => {
            let b = budget.budget()?;
            let (outcome, directed) = match read_graph(&graph)? {
                AnyGraph::Directed(g) => (solve_directed(&g, b, budget.seed), true),
                AnyGraph::Undirected(g) => {
                    let solver = Solver {
                        randomized,
                        ..Solver::new(b, budget.seed)
                    };
                    (solver.solve(&g), false)
                }
            };
            let code = report_outcome(&outcome);
            if let Some(c) = outcome.cycle() {
                write_output(output.as_deref(), &export_cycle(c, directed))?;
            }
            return Ok(code);
        }
        Command::ExportTsplib {
            graph,
            name,
            output,
        } => {
            let g = read_undirected(&graph)?;
            write_output(output.as_deref(), &export_tsplib_hcp(&g, &name))?;
        }
        Command::Recover {
            cycle,
            journal,
            order,
        } => {
            let c = import_cycle(&read_input(&cycle)?)?;
            let lifter = read_journal(journal.as_deref())?;
            let directed = lift_cycle(&lifter, &c)?;
            let n = match order {
                Some(n) => n,
                None => infer_order(directed.len(), vertex_count_formula)?,
            };
            let grid = recover_solution(&directed, n)?;
            print!("{}", grid.to_text());
        }
        Command::Verify {
            file,
            puzzle,
            graph,
        } => {
            let text = read_input(&file)?;
            let trimmed = text.trim_start();
            if trimmed.starts_with("CYCLE") || text.contains("TOUR_SECTION") {
                let c = import_cycle(&text)?;
                let g = graph.ok_or_else(|| anyhow!("verifying a cycle needs --graph"))?;
                let ok = verify_cycle(&read_graph(&g)?, &c);
                println!(
                    "{}",
                    if ok {
                        "valid Hamiltonian cycle"
                    } else {
                        "not a Hamiltonian cycle"
                    }
                );
                return Ok(if ok { EXIT_OK } else { EXIT_NO_SOLUTION });
            }
            let grid = Grid::parse(&text)?;
            let inst = match puzzle {
                Some(p) => read_puzzle(&PuzzleArgs {
                    puzzle: p,
                    format: FormatArg::Auto,
                })?,
                None => SudokuInstance::blank(grid.order())?,
            };
            let violations = validate_grid(&inst, &grid)?;
            if violations.is_empty() {
                println!("valid grid");
                return Ok(EXIT_OK);
            }
            for v in &violations {
                println!("{v}");
            }
            return Ok(EXIT_NO_SOLUTION);
        }
        Command::Stats { graph } => print!("{}", stats(&read_graph(&graph)?).report()),
        Command::Pipeline {
            puzzle,
            reduce: _,
            no_reduce,
            compress,
            no_prune,
            budget,
            cycle_out,
        } => {
            let inst = read_puzzle(&puzzle)?;
            let config = PipelineConfig {
                prune: !no_prune,
                undirect: true,
                compress,
                reduce: !no_reduce,
                budget: budget.budget()?,
                seed: budget.seed,
            };
            let report = run_pipeline(&inst, &config)?;
            for s in &report.stages {
                eprintln!("{}: {} vertices, {} edges", s.stage, s.vertices, s.edges);
            }
            if let Some(s) = &report.solve {
                eprintln!("{}", s.line());
            }
            match &report.outcome {
                PipelineOutcome::Solved(grid) => {
                    for v in &report.violations {
                        eprintln!("warning: {v}");
                    }
                    if let (Some(path), Some(c)) = (cycle_out, &report.directed_cycle) {
                        fs::write(&path, export_cycle(c, true))
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                    print!("{}", grid.to_text());
                }
                PipelineOutcome::NoSolution => {
                    eprintln!("puzzle has no solution");
                    return Ok(EXIT_NO_SOLUTION);
                }
                PipelineOutcome::BudgetExceeded => {
                    eprintln!("search budget exhausted");
                    return Ok(EXIT_BUDGET);
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
