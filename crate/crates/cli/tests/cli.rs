use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const APPENDIX: &str = "vars: X Y Z W\npos: X Y\nneg: X Z W\npos: Y Z W\nneg: X Y Z\n";
const MINIMAL: &str = "vars: X Y\npos: X Y\nneg: X Y\n";
const PAIRWISE: &str = "vars: A B C\npos: A B\npos: B C\npos: A C\nneg: A B\nneg: B C\nneg: A C\n";

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Sandbox {
            dir: TempDir::new().unwrap(),
        }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.path(name);
        fs::write(&p, text).unwrap();
        p
    }

    fn run(&self, args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
        self.run_env(args, None)
    }

    fn run_env(&self, args: &[&dyn AsRef<std::ffi::OsStr>], threads: Option<&str>) -> Output {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_steiner"));
        for a in args {
            cmd.arg(a);
        }
        cmd.env_remove("PSI_THREADS");
        if let Some(t) = threads {
            cmd.env("PSI_THREADS", t);
        }
        cmd.output().unwrap()
    }
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn compile(sb: &Sandbox, formula: &str, name: &str) -> PathBuf {
    let f = sb.file(&format!("{name}.txt"), formula);
    let out = sb.path(&format!("{name}.psi"));
    let o = sb.run(&[&"compile", &f, &out]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    out
}

fn vertex_count(path: &Path) -> usize {
    let text = fs::read_to_string(path).unwrap();
    text.split_whitespace().nth(1).unwrap().parse().unwrap()
}

#[test]
fn compile_reports_counts() {
    let sb = Sandbox::new();
    let f = sb.file("a.txt", APPENDIX);
    let o = sb.run(&[&"compile", &f, &sb.path("a.psi")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("48 undirected edges, 78 pairs"), "{}", stdout(&o));
    let f = sb.file("m.txt", MINIMAL);
    let o = sb.run(&[&"compile", &f, &sb.path("m.psi")]);
    assert!(stdout(&o).contains(" 30 pairs"));
}

#[test]
fn compile_rejects_malformed_formula() {
    let sb = Sandbox::new();
    let f = sb.file("bad.txt", "vars: X Y\npos: X Y\nneg: X ~Y\n");
    let o = sb.run(&[&"compile", &f, &sb.path("bad.psi")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    let f = sb.file("cross.txt", "vars: A B C D\npos: A C\npos: B D\nneg: A B C\nneg: B D\n");
    let o = sb.run(&[&"compile", &f, &sb.path("cross.psi")]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("cross"));
}

#[test]
fn solve_and_verify_appendix() {
    let sb = Sandbox::new();
    let inst = compile(&sb, APPENDIX, "a");
    let w = sb.path("a.w");
    let o = sb.run(&[&"solve", &inst, &"--witness", &w]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("SAT"));
    assert!(stderr(&o).contains("nodes "));
    let o = sb.run(&[&"verify", &inst, &w]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn flip_witness_is_antiparallel_and_fragile() {
    let sb = Sandbox::new();
    let inst = sb.path("flip.psi");
    assert_eq!(code(&sb.run(&[&"gadget", &"flip", &inst])), 0);
    let w = sb.path("flip.w");
    assert_eq!(code(&sb.run(&[&"solve", &inst, &"--witness", &w])), 0);
    let text = fs::read_to_string(&w).unwrap();
    let states = text.lines().nth(1).unwrap();
    assert!(states == "FR" || states == "RF");
    let flipped: String = states
        .chars()
        .enumerate()
        .map(|(i, c)| if i == 0 { if c == 'F' { 'R' } else { 'F' } } else { c })
        .collect();
    let bad = sb.file("bad.w", &format!("orientation 2\n{flipped}\n"));
    let o = sb.run(&[&"verify", &inst, &bad]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("INVALID"));
    let short = sb.file("short.w", "orientation 2\nF\n");
    assert_eq!(code(&sb.run(&[&"verify", &inst, &short])), 2);
    let unset = sb.file("unset.w", "orientation 2\nFU\n");
    assert_eq!(code(&sb.run(&[&"verify", &inst, &unset])), 2);
}

#[test]
fn disconnected_pair_is_unsat() {
    let sb = Sandbox::new();
    let inst = sb.file("two.psi", "psi 2 0 0 1\nv 0\nv 1\np 0 1\n");
    let o = sb.run(&[&"solve", &inst]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "UNSAT\n");
}

#[test]
fn equiv_examples() {
    let sb = Sandbox::new();
    for (name, text) in [("a", APPENDIX), ("m", MINIMAL), ("p", PAIRWISE)] {
        let f = sb.file(name, text);
        let o = sb.run(&[&"equiv", &f]);
        assert_eq!(code(&o), 0, "{name}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("EQUIVALENT\n"));
    }
    let o = sb.run(&[&"equiv", &sb.file("m2", MINIMAL)]);
    assert!(stdout(&o).starts_with("oracle SAT X=true Y=false\nreduction SAT\n"));
    let o = sb.run(&[&"equiv", &sb.file("p2", PAIRWISE), &"--no-propagate"]);
    assert!(stdout(&o).starts_with("oracle UNSAT\nreduction UNSAT\n"));
}

#[test]
fn equiv_rejects_oversized_formula() {
    let sb = Sandbox::new();
    let names: Vec<String> = (0..26).map(|i| format!("V{i}")).collect();
    let mut text = format!("vars: {}\n", names.join(" "));
    for w in names.windows(2) {
        text.push_str(&format!("pos: {} {}\nneg: {} {}\n", w[0], w[1], w[0], w[1]));
    }
    let o = sb.run(&[&"equiv", &sb.file("big", &text)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("too many"));
}

#[test]
fn export_dot_counts_red_edges() {
    let sb = Sandbox::new();
    let flip = sb.path("flip.psi");
    sb.run(&[&"gadget", &"flip", &flip]);
    let dot = sb.path("flip.dot");
    assert_eq!(code(&sb.run(&[&"export-dot", &flip, &dot])), 0);
    assert_eq!(fs::read_to_string(&dot).unwrap().matches("color=red").count(), 2);
    let inst = compile(&sb, APPENDIX, "a");
    let dot = sb.path("a.dot");
    assert_eq!(code(&sb.run(&[&"export-dot", &inst, &dot])), 0);
    assert_eq!(fs::read_to_string(&dot).unwrap().matches("color=red").count(), 48);
    assert_eq!(code(&sb.run(&[&"export-dot", &sb.path("missing.psi"), &dot])), 2);
}

#[test]
fn gadget_files() {
    let sb = Sandbox::new();
    let out = sb.path("g.psi");
    assert_eq!(code(&sb.run(&[&"gadget", &"flip", &out])), 0);
    assert_eq!(vertex_count(&out), 8);
    assert_eq!(code(&sb.run(&[&"gadget", &"variable", &"3", &"2", &out])), 0);
    assert_eq!(vertex_count(&out), 14);
    assert_eq!(code(&sb.run(&[&"gadget", &"clause3", &"neg", &out])), 0);
    assert_eq!(vertex_count(&out), 30);
    assert_eq!(code(&sb.run(&[&"gadget", &"edge", &out])), 0);
    assert_eq!(vertex_count(&out), 14);
    assert_eq!(code(&sb.run(&[&"gadget", &"variable", &"0", &"1", &out])), 2);
    assert_eq!(code(&sb.run(&[&"gadget", &"variable", &"3", &out])), 2);
    assert_eq!(code(&sb.run(&[&"gadget", &"hexagon", &out])), 2);
    assert_eq!(code(&sb.run(&[&"gadget", &"flip", &"7", &out])), 2);
}

#[test]
fn solving_is_byte_identical_across_runs_and_threads() {
    let sb = Sandbox::new();
    let inst = compile(&sb, APPENDIX, "a");
    let mut runs = Vec::new();
    for (i, threads) in [None, None, Some("4"), Some("4")].into_iter().enumerate() {
        let w = sb.path(&format!("w{i}"));
        let o = sb.run_env(&[&"solve", &inst, &"--no-timing", &"--witness", &w], threads);
        assert_eq!(code(&o), 0);
        runs.push((o.stdout, o.stderr, fs::read(&w).unwrap(), threads));
    }
    assert_eq!(runs[0].0, runs[1].0);
    assert_eq!(runs[0].1, runs[1].1);
    assert_eq!(runs[0].2, runs[1].2);
    assert_eq!(runs[2].1, runs[3].1);
    assert_eq!(runs[2].2, runs[3].2);
    assert_eq!(runs[0].0, runs[2].0);
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let sb = Sandbox::new();
    let inst = compile(&sb, MINIMAL, "m");
    assert_eq!(code(&sb.run_env(&[&"solve", &inst], Some("zero"))), 2);
    assert_eq!(code(&sb.run_env(&[&"solve", &inst], Some("0"))), 2);
}

#[test]
fn usage_errors_exit_2() {
    let sb = Sandbox::new();
    assert_eq!(code(&sb.run(&[&"frobnicate"])), 2);
    assert_eq!(code(&sb.run(&[&"solve"])), 2);
}
