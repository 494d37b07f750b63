use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dartfree::cli::{parse_dimacs, run, run_gen, Command, RunReport};
use dartfree::{Error, Options, SearchBudget};

#[derive(Parser)]
#[command(
    name = "dartfree",
    version,
    about = "Algorithms for (dart, odd hole)-free graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Dimacs)]
    format: Format,
    /// Step budget for odd hole and divisibility searches.
    #[arg(long, global = true, default_value_t = SearchBudget::default().0)]
    budget: u64,
    /// Run class algorithms without checking membership first.
    #[arg(long, global = true)]
    skip_membership: bool,
    /// Shortest odd antihole searched for when splitting off the triangle set.
    #[arg(long, global = true, default_value_t = 7)]
    min_antihole_len: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
}

#[derive(Args)]
struct Input {
    /// DIMACS file; stdin when omitted or `-`.
    #[arg(conflicts_with = "input")]
    file: Option<PathBuf>,
    /// DIMACS file, as a flag.
    #[arg(long, short)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test membership; prints a dart or odd hole if there is one.
    Recognize(Input),
    /// Print the decomposition tree.
    Decompose(Input),
    /// Minimum coloring.
    Color(Input),
    /// Maximum stable set.
    Mis(Input),
    /// Perfect division.
    Divide {
        #[command(flatten)]
        input: Input,
        /// Also check every induced subgraph for a perfect division.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check 2-divisibility of every induced subgraph.
    Check2div(Input),
    /// Brute-force chi, omega, alpha and girth.
    Oracle(Input),
    /// Random graph in DIMACS format.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Resample until the graph is in the class.
        #[arg(long)]
        class: bool,
        /// Samples drawn with `--class` before giving up.
        #[arg(long, default_value_t = 10_000)]
        tries: usize,
    },
    /// Subdivide every edge twice.
    Poljak(Input),
}

fn read_input(input: &Input) -> std::io::Result<String> {
    match input.input.as_ref().or(input.file.as_ref()) {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn graph_command(cli: &Cli) -> Option<(Command, &Input)> {
    Some(match &cli.command {
        Cmd::Recognize(i) => (Command::Recognize, i),
        Cmd::Decompose(i) => (Command::Decompose, i),
        Cmd::Color(i) => (Command::Color, i),
        Cmd::Mis(i) => (Command::Mis, i),
        Cmd::Divide { input, exhaustive } => (
            Command::Divide {
                exhaustive: *exhaustive,
            },
            input,
        ),
        Cmd::Check2div(i) => (Command::Check2Div, i),
        Cmd::Oracle(i) => (Command::Oracle, i),
        Cmd::Poljak(i) => (Command::Poljak, i),
        Cmd::Gen { .. } => return None,
    })
}

fn execute(cli: &Cli) -> RunReport {
    if let Cmd::Gen {
        n,
        p,
        seed,
        class,
        tries,
    } = cli.command
    {
        return run_gen(n, p, seed, class.then_some(tries));
    }
    let (cmd, input) = graph_command(cli).expect("graph command");
    let text = match read_input(input) {
        Ok(t) => t,
        Err(e) => {
            let err = Error::InvalidInput(format!("cannot read input: {e}"));
            return RunReport::error(cmd.name(), None, &err);
        }
    };
    let parsed = match parse_dimacs(&text) {
        Ok(p) => p,
        Err(e) => return RunReport::error(cmd.name(), None, &e),
    };
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    let opts = Options {
        budget: SearchBudget(cli.budget),
        skip_membership: cli.skip_membership,
        min_antihole_len: cli.min_antihole_len,
    };
    run(cmd, &parsed.graph, &opts)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Dimacs = cli.format;
    let report = execute(&cli);
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.text);
    }
    ExitCode::from(report.exit_code() as u8)
}
