use clap::{Parser, Subcommand};
use coherence_bounds::check::cmd_check;
use coherence_bounds::eval::cmd_eval;
use coherence_bounds::figure::{cmd_figure, SweepConfig};
use coherence_bounds::selector::Selector;
use coherence_bounds::CliError;

#[derive(Parser)]
#[command(version, about = "Coherence and entropic uncertainty bounds for two-qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the CSV sweep behind figure 1, 2, 3 or 4
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        n: u8,
        #[arg(long)]
        out: String,
        #[arg(long, default_value_t = 101)]
        steps: usize,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        pmin: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        pmax: f64,
    },
    /// Print every bound for a state file as JSON
    Eval {
        #[arg(long)]
        state: String,
        /// sigma1 | sigma2 | sigma3 | computational | bloch:<theta>:<phi>
        #[arg(long)]
        x: Selector,
        #[arg(long)]
        z: Selector,
    },
    /// Run the randomized invariant suites
    Check {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        cases: usize,
        /// Shift one report field so the bound checks must fail
        #[arg(long, hide = true)]
        corrupt_bound: Option<String>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Figure { n, out, steps, pmin, pmax } => cmd_figure(
            n,
            &out,
            &SweepConfig {
                p_min: pmin,
                p_max: pmax,
                steps,
            },
        ),
        Command::Eval { state, x, z } => cmd_eval(&state, x, z),
        Command::Check {
            seed,
            cases,
            corrupt_bound,
        } => cmd_check(seed, cases, corrupt_bound.as_deref()),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
