use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use circulant_tdc::coloring_file::parse_coloring;
use circulant_tdc::report::{
    cmd_chidt, cmd_construct, cmd_invariants, cmd_reduce, cmd_sweep, cmd_table,
    cmd_verify_coloring, ChidtOptions, GraphSpec, RunReport, EXIT_INPUT_ERROR,
};
use circulant_tdc::solver::Budget;
use circulant_tdc::Limits;

/// Total dominator colorings of circulant graphs C_n(1,3).
///
/// Exit status: 0 when every source agrees, 1 on bad input, 2 when a
/// disagreement was found.
#[derive(Parser)]
#[command(name = "circtdc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Emit the report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit one CSV record per result.
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Search nodes allowed per class count (0 for unlimited).
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Seconds allowed per class count (0 for unlimited).
    #[arg(long, default_value_t = 300)]
    time_limit: u64,
}

impl BudgetArgs {
    fn budget(self) -> Budget {
        Budget {
            max_nodes: (self.budget > 0).then_some(self.budget),
            max_time: (self.time_limit > 0).then(|| Duration::from_secs(self.time_limit)),
        }
    }
}

/// `n` for C_n(1,3), `n a b` for C_n(a,b), or `n --set 1,4,5`.
#[derive(Args)]
struct GraphArgs {
    #[arg(required = true, num_args = 1..=3, allow_negative_numbers = true)]
    graph: Vec<i64>,
    /// Arbitrary connection set, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    set: Option<Vec<i64>>,
}

impl GraphArgs {
    fn spec(&self) -> Result<GraphSpec, String> {
        let n = u32::try_from(self.graph[0])
            .map_err(|_| format!("n must be a positive integer, got {}", self.graph[0]))?;
        match (&self.graph[1..], &self.set) {
            ([], None) => Ok(GraphSpec::Standard { n }),
            ([], Some(generators)) => Ok(GraphSpec::Set {
                n,
                generators: generators.clone(),
            }),
            (&[a, b], None) => Ok(GraphSpec::Pair { n, a, b }),
            (&[_, _], Some(_)) => Err("--set cannot be combined with a b".into()),
            _ => Err("give either n alone or n a b".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// chi_d^t of C_n(1,3), or of C_n(a,b) through its reduction.
    Chidt {
        n: u32,
        #[arg(num_args = 0..=2, allow_negative_numbers = true)]
        ab: Vec<i64>,
        /// Run the exact search.
        #[arg(long)]
        exact: bool,
        /// Build and verify the explicit coloring.
        #[arg(long)]
        construct: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Formula and construction for a range of n, exact search for small n.
    Sweep {
        from: u32,
        to: u32,
        /// Run the exact search for every n up to this value.
        #[arg(long)]
        exact_up_to: Option<u32>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Independence, open packing and total domination numbers.
    Invariants {
        #[command(flatten)]
        graph: GraphArgs,
        /// Also run the brute-force oracles.
        #[arg(long)]
        oracle: bool,
    },
    /// Check a coloring file (JSON array of arrays, or one class per line).
    VerifyColoring {
        #[command(flatten)]
        graph: GraphArgs,
        /// Coloring file, or `-` for standard input.
        #[arg(long, short)]
        file: String,
    },
    /// Print and verify the explicit coloring of C_n(1,3).
    Construct { n: u32 },
    /// Reduce C_n(a,b) to C_n(1,c) and check the isomorphism.
    Reduce {
        n: u32,
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Closed-form values for a range of n.
    Table { from: u32, to: u32 },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn run(command: Command) -> Result<RunReport, String> {
    let limits = Limits::from_env();
    let report = match command {
        Command::Chidt {
            n,
            ab,
            exact,
            construct,
            budget,
        } => {
            let pair = match ab[..] {
                [] => None,
                [a, b] => Some((a, b)),
                _ => return Err("give either n alone or n a b".into()),
            };
            let opts = ChidtOptions {
                exact,
                construct,
                budget: budget.budget(),
                limits,
            };
            cmd_chidt(n, pair, &opts)
        }
        Command::Sweep {
            from,
            to,
            exact_up_to,
            budget,
        } => {
            let opts = ChidtOptions {
                budget: budget.budget(),
                limits,
                ..ChidtOptions::default()
            };
            cmd_sweep(from, to, exact_up_to, &opts)
        }
        Command::Invariants { graph, oracle } => cmd_invariants(&graph.spec()?, oracle, &limits),
        Command::VerifyColoring { graph, file } => {
            let spec = graph.spec()?;
            let text = read_input(&file)?;
            let coloring = parse_coloring(spec.n(), &text).map_err(|e| format!("{file}: {e}"))?;
            cmd_verify_coloring(&spec, &coloring)
        }
        Command::Construct { n } => cmd_construct(n),
        Command::Reduce { n, a, b } => cmd_reduce(n, a, b),
        Command::Table { from, to } => cmd_table(from, to),
    };
    report.map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                EXIT_INPUT_ERROR as u8
            } else {
                0
            });
        }
    };
    match run(cli.command) {
        Ok(report) => {
            if cli.output.json {
                println!("{}", report.to_json());
            } else if cli.output.csv {
                print!("{}", report.to_csv());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}
