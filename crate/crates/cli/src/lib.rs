//! Command implementations behind the `steiner` binary.
//!
//! Every command returns an [`ExitStatus`]; input and I/O failures surface as
//! `Err` and map to exit code 2. Data goes to files or `out`, diagnostics and
//! solver statistics to `err`.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};

use steiner_core::compile::{compile_formula, decode, Compiled};
use steiner_core::equiv::{check_equivalence, EquivalenceError};
use steiner_core::format::{parse_instance, parse_orientation, write_dot, write_instance, write_orientation, InstanceFile};
use steiner_core::gadgets::{build_by_name, GadgetKind};
use steiner_core::pm3sat::{parse_formula, Formula, Side};
use steiner_core::reach::connected_pairs;
use steiner_core::solver::{solve_with, SolverOptions};

/// Environment variable holding the solver thread count.
pub const THREADS_ENV: &str = "PSI_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Yes,
    No,
    Error,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Yes => 0,
            ExitStatus::No => 1,
            ExitStatus::Error => 2,
        }
    }

    fn from_bool(b: bool) -> Self {
        if b {
            ExitStatus::Yes
        } else {
            ExitStatus::No
        }
    }
}

/// Reads the thread count from `PSI_THREADS`; unset means 1.
pub fn threads_from_env() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => bail!("{THREADS_ENV} must be a positive integer, got `{v}`"),
        },
        Err(_) => Ok(1),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_formula(path: &Path) -> Result<Formula> {
    parse_formula(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_instance(path: &Path) -> Result<InstanceFile> {
    parse_instance(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn show_assignment(names: Option<&[String]>, a: &[bool]) -> String {
    a.iter()
        .enumerate()
        .map(|(i, &v)| match names {
            Some(n) => format!("{}={v}", n[i]),
            None => format!("x{i}={v}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn summary(compiled: &Compiled) -> String {
    let g = compiled.instance.graph();
    let md = &compiled.metadata;
    format!(
        "{} vertices, {} arcs, {} undirected edges, {} pairs; gadgets: {} variable, {} clause3, {} clause2, {} edge",
        g.num_vertices(),
        g.num_arcs(),
        g.num_edges(),
        compiled.instance.pairs().len(),
        md.gadget_count(GadgetKind::Variable),
        md.gadget_count(GadgetKind::Clause3),
        md.gadget_count(GadgetKind::Clause2),
        md.gadget_count(GadgetKind::Edge),
    )
}

pub fn cmd_compile(formula: &Path, out_path: &Path, out: &mut dyn Write) -> Result<ExitStatus> {
    let f = load_formula(formula)?;
    let compiled = compile_formula(&f).with_context(|| format!("{}", formula.display()))?;
    write(out_path, &write_instance(&compiled.instance, Some(&compiled.metadata)))?;
    writeln!(out, "{}", summary(&compiled))?;
    Ok(ExitStatus::Yes)
}

#[derive(Clone, Copy, Debug)]
pub struct SolveFlags {
    pub propagate: bool,
    pub timing: bool,
    pub threads: usize,
}

impl Default for SolveFlags {
    fn default() -> Self {
        SolveFlags {
            propagate: true,
            timing: true,
            threads: 1,
        }
    }
}

pub fn cmd_solve(
    instance: &Path,
    witness: Option<&Path>,
    flags: SolveFlags,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<ExitStatus> {
    let file = load_instance(instance)?;
    let options = SolverOptions {
        propagate: flags.propagate,
        threads: flags.threads,
    };
    let start = Instant::now();
    let result = solve_with(&file.instance, options);
    let elapsed = start.elapsed();
    let s = result.stats;
    writeln!(
        err,
        "nodes {} propagations {} peak-depth {}",
        s.nodes, s.propagations, s.peak_depth
    )?;
    if flags.timing {
        writeln!(err, "time {:.3} ms", elapsed.as_secs_f64() * 1e3)?;
    }
    match result.witness {
        Some(w) => {
            writeln!(out, "SAT")?;
            if let Some(md) = &file.metadata {
                let a = decode(md, &w).map_err(|e| anyhow!("witness does not decode: {e}"))?;
                writeln!(out, "assignment {}", show_assignment(None, &a))?;
            }
            if let Some(path) = witness {
                write(path, &write_orientation(&w))?;
            }
            Ok(ExitStatus::Yes)
        }
        None => {
            writeln!(out, "UNSAT")?;
            Ok(ExitStatus::No)
        }
    }
}

pub fn cmd_verify(instance: &Path, witness: &Path, out: &mut dyn Write) -> Result<ExitStatus> {
    let file = load_instance(instance)?;
    let w = parse_orientation(&read(witness)?).with_context(|| format!("{}", witness.display()))?;
    let m = file.instance.num_edges();
    if w.len() != m {
        bail!("witness has {} edge states, instance has {m} undirected edges", w.len());
    }
    if let Some(e) = w.first_unset() {
        bail!("witness leaves edge {e} unset");
    }
    let connected = connected_pairs(&file.instance, &w)?;
    let total = file.instance.pairs().len();
    if connected.len() == total {
        writeln!(out, "VALID")?;
        Ok(ExitStatus::Yes)
    } else {
        writeln!(out, "INVALID: {} of {total} pairs disconnected", total - connected.len())?;
        Ok(ExitStatus::No)
    }
}

pub fn cmd_equiv(formula: &Path, flags: SolveFlags, out: &mut dyn Write, err: &mut dyn Write) -> Result<ExitStatus> {
    let f = load_formula(formula)?;
    let options = SolverOptions {
        propagate: flags.propagate,
        threads: flags.threads,
    };
    let report = check_equivalence(&f, options).map_err(|e| match e {
        EquivalenceError::Compile(e) => anyhow!(e).context(format!("{}", formula.display())),
        other => anyhow!(other),
    })?;
    let names = Some(f.names());
    match &report.oracle {
        Some(a) => writeln!(out, "oracle SAT {}", show_assignment(names, a))?,
        None => writeln!(out, "oracle UNSAT")?,
    }
    writeln!(out, "reduction {}", if report.result.is_sat() { "SAT" } else { "UNSAT" })?;
    match &report.decoded {
        Some(Ok(a)) => writeln!(out, "decoded {}", show_assignment(names, a))?,
        Some(Err(e)) => writeln!(err, "decode failed: {e}")?,
        None => {}
    }
    let s = report.result.stats;
    writeln!(err, "nodes {} propagations {} peak-depth {}", s.nodes, s.propagations, s.peak_depth)?;
    let agrees = report.agrees();
    writeln!(out, "{}", if agrees { "EQUIVALENT" } else { "MISMATCH" })?;
    Ok(ExitStatus::from_bool(agrees))
}

pub fn cmd_export_dot(instance: &Path, out_path: &Path) -> Result<ExitStatus> {
    let file = load_instance(instance)?;
    write(out_path, &write_dot(&file.instance))?;
    Ok(ExitStatus::Yes)
}

/// `params`: `P N` for `variable`; optional `pos`/`neg` for clause gadgets.
pub fn cmd_gadget(kind: &str, params: &[String], out_path: &Path) -> Result<ExitStatus> {
    let kind = GadgetKind::parse(kind).ok_or_else(|| anyhow!("unknown gadget kind `{kind}`"))?;
    let number = |s: &String| s.parse::<usize>().map_err(|_| anyhow!("expected a count, found `{s}`"));
    let (side, p, n) = match (kind, params) {
        (GadgetKind::Variable, [p, n]) => (Side::Positive, number(p)?, number(n)?),
        (GadgetKind::Variable, _) => bail!("variable gadget takes two counts: P N"),
        (GadgetKind::Clause3 | GadgetKind::Clause2, [s]) => match s.as_str() {
            "pos" => (Side::Positive, 0, 0),
            "neg" => (Side::Negative, 0, 0),
            _ => bail!("clause side must be `pos` or `neg`, found `{s}`"),
        },
        (_, []) => (Side::Positive, 0, 0),
        (k, _) => bail!("{} gadget takes no such parameters", k.as_str()),
    };
    let g = build_by_name(kind, side, p, n)?;
    write(out_path, &write_instance(&g.instance(), None))?;
    Ok(ExitStatus::Yes)
}
