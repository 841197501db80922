use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use steiner_cli::{
    cmd_compile, cmd_equiv, cmd_export_dot, cmd_gadget, cmd_solve, cmd_verify, threads_from_env, ExitStatus,
    SolveFlags,
};

/// Steiner Orientation solver and planar 3-SAT reduction toolkit.
///
/// Exit codes: 0 yes/success, 1 no (UNSAT, invalid, mismatch), 2 usage or
/// input error. The solver thread count comes from PSI_THREADS (default 1).
#[derive(Parser)]
#[command(name = "steiner", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile a planar monotone formula into an instance file with metadata.
    Compile { formula: PathBuf, out: PathBuf },
    /// Decide an instance; exit 0 if every pair can be connected.
    Solve {
        instance: PathBuf,
        /// Write the orientation found here.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Disable forced-direction propagation.
        #[arg(long)]
        no_propagate: bool,
        /// Omit the timing line from the statistics.
        #[arg(long)]
        no_timing: bool,
    },
    /// Check a total orientation against an instance.
    Verify { instance: PathBuf, witness: PathBuf },
    /// Compile, solve and compare against brute-force SAT.
    Equiv {
        formula: PathBuf,
        #[arg(long)]
        no_propagate: bool,
    },
    /// Render an instance as Graphviz DOT.
    ExportDot { instance: PathBuf, out: PathBuf },
    /// Write a standalone gadget: flip, variable P N, clause3 [pos|neg],
    /// clause2 [pos|neg], edge.
    Gadget {
        kind: String,
        /// Gadget parameters followed by the output file.
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
    },
}

fn run(cli: Cli) -> anyhow::Result<ExitStatus> {
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let flags = |no_propagate: bool, no_timing: bool| -> anyhow::Result<SolveFlags> {
        Ok(SolveFlags {
            propagate: !no_propagate,
            timing: !no_timing,
            threads: threads_from_env()?,
        })
    };
    match cli.command {
        Command::Compile { formula, out: path } => cmd_compile(&formula, &path, &mut out),
        Command::Solve {
            instance,
            witness,
            no_propagate,
            no_timing,
        } => cmd_solve(
            &instance,
            witness.as_deref(),
            flags(no_propagate, no_timing)?,
            &mut out,
            &mut err,
        ),
        Command::Verify { instance, witness } => cmd_verify(&instance, &witness, &mut out),
        Command::Equiv { formula, no_propagate } => cmd_equiv(&formula, flags(no_propagate, true)?, &mut out, &mut err),
        Command::ExportDot { instance, out: path } => cmd_export_dot(&instance, &path),
        Command::Gadget { kind, mut args } => {
            let path = PathBuf::from(args.pop().expect("clap requires one argument"));
            cmd_gadget(&kind, &args, &path)
        }
    }
}

fn main() -> ExitCode {
    let status = run(Cli::parse()).unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitStatus::Error
    });
    ExitCode::from(status.code() as u8)
}
