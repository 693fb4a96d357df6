//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it in-process.

pub mod commands;
pub mod input;
pub mod report;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::{cmd_bench, cmd_examples, cmd_prove, cmd_verify, cmd_witness, parse_range, parse_ring_arg, CliError};

#[derive(Parser, Debug)]
#[command(name = "detring", about = "Exact checks of determinant identities over commutative rings")]
pub struct Cli {
    /// Omit timings so that output is byte-identical across runs.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Recompute the worked examples and compare with their stated values.
    Examples,
    /// Prove an identity by expanding it over generic matrices.
    Prove {
        id: String,
        #[arg(long)]
        n: usize,
        /// Run even when n exceeds the identity's budget.
        #[arg(long)]
        force: bool,
    },
    /// Evaluate an equation against the bindings of an input document.
    Verify {
        dsl: String,
        #[arg(long)]
        input: String,
    },
    /// Emit SL and, when possible, direct equivalence witnesses for A, B, X.
    Witness {
        #[arg(long)]
        input: String,
    },
    /// Time the determinant algorithms on seeded random matrices (CSV).
    Bench {
        #[arg(long)]
        n: String,
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn usage(e: CliError) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: 2,
    }
}

/// Runs the program on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                },
                _ => Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                },
            };
        }
    };
    let timing = !cli.no_timing;
    let report = match cli.command {
        Command::Examples => cmd_examples(),
        Command::Prove { id, n, force } => cmd_prove(&id, n, force),
        Command::Verify { dsl, input } => cmd_verify(&dsl, &input),
        Command::Witness { input } => cmd_witness(&input),
        Command::Bench { n, ring, trials, seed } => {
            let parsed = parse_range(&n).and_then(|r| Ok((r, parse_ring_arg(&ring)?)));
            let (range, ring) = match parsed {
                Ok(v) => v,
                Err(e) => return usage(e),
            };
            let b = cmd_bench(range, &ring, trials, seed);
            let stderr = b
                .mismatches
                .iter()
                .map(|(n, t)| format!("digest mismatch at n={n}, trial={t}\n"))
                .collect();
            return Outcome {
                stdout: b.csv(timing),
                stderr,
                code: b.exit_code(),
            };
        }
    };
    match report {
        Ok(r) => Outcome {
            stdout: r.render(timing),
            stderr: String::new(),
            code: r.exit_code(),
        },
        Err(e) => usage(e),
    }
}
