//! `dfv`: orbit enumeration, Steinberg maps, finite-type classification and
//! verification suites for AIII double flag varieties.

mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use dfv_core::ci::{enumerate_ci_orbits, sigma};
use dfv_core::finiteness::{
    bruteforce_witness, classify_table, forbidden_witness, is_finite_fast, multi_flag_witness, table_rows,
    DimensionVector, JointTriple, ParabolicShape,
};
use dfv_core::orbit::{enumerate_orbits, hasse_covers, OrbitColumn, StackedPartialPermutation};
use dfv_core::steinberg::{grs, phi_k, phi_s};
use dfv_core::young::Composition;

#[derive(Parser)]
#[command(name = "dfv", version, about = "Double flag varieties of type AIII")]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate orbits for (p, q, r) with their invariants.
    Orbits {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate one orbit given by its columns, e.g. `2:3,4:1,5:_,_:2`.
    Eval {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        omega: String,
    },
    /// Decide finite type.
    #[command(subcommand)]
    Classify(ClassifyKind),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// List the orbits of the symplectic embedding for `n`.
    Ci {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Dot,
}

#[derive(Subcommand)]
enum ClassifyKind {
    /// `GL_p/Q1 × GL_q/Q2 × GL_n/P` from the flag types of `V+`, `V−` and `V`.
    Aiii {
        #[arg(long, value_parser = parse_composition)]
        a: Composition,
        #[arg(long, value_parser = parse_composition)]
        b: Composition,
        #[arg(long, value_parser = parse_composition)]
        c: Composition,
    },
    /// Triple flag variety of `GL_n`.
    TripleA {
        #[arg(long, value_parser = parse_composition)]
        a1: Composition,
        #[arg(long, value_parser = parse_composition)]
        a2: Composition,
        #[arg(long, value_parser = parse_composition)]
        a3: Composition,
    },
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    /// Entries of random samples lie in `[-bound, bound]`.
    #[arg(long, default_value_t = 20)]
    pub bound: i64,
    #[arg(long, default_value_t = 3)]
    pub pmax: usize,
    #[arg(long, default_value_t = 3)]
    pub qmax: usize,
    /// Size bound for the classifier, CI and counting suites.
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Instances per case for the nilpotency suite.
    #[arg(long, default_value_t = 200)]
    pub instances: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Oracle,
    Closure,
    Grs,
    Nilpotency,
    Ci,
    Classifier,
    Counting,
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    if s.trim().is_empty() {
        return Ok(Composition(Vec::new()));
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| format!("bad part {x:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Composition)
}

fn parse_omega(p: usize, q: usize, s: &str) -> Result<StackedPartialPermutation, String> {
    let side = |x: &str| -> Result<Option<usize>, String> {
        match x.trim() {
            "_" => Ok(None),
            v => v.parse().map(Some).map_err(|e| format!("bad index {v:?}: {e}")),
        }
    };
    let mut cols = Vec::new();
    for item in s.split(',').filter(|x| !x.trim().is_empty()) {
        let (a, b) = item.split_once(':').ok_or_else(|| format!("column {item:?} is not i:j"))?;
        cols.push(OrbitColumn { plus: side(a)?, minus: side(b)? });
    }
    StackedPartialPermutation::new(p, q, cols).map_err(|e| e.to_string())
}

/// Thrown for invalid input; maps to exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

pub type CmdResult = Result<bool, Usage>;

fn orbit_record(index: usize, w: &StackedPartialPermutation) -> Value {
    let (lam, mu) = phi_k(w);
    let s = phi_s(w).expect("signed diagram reconstruction");
    json!({
        "p": w.p(),
        "q": w.q(),
        "r": w.r(),
        "index": index,
        "omega": w.to_string(),
        "graph": w.graph(),
        "dim": w.dim_orbit(),
        "phi_k": {"lambda": lam, "mu": mu},
        "phi_s": s,
        "grs": grs(w),
    })
}

const TSV_HEADER: &str = "index\tomega\tdim\tlambda\tmu\tphi_s\tt1\tt2\tlambda_prime\tmu_prime\tnu";

fn orbit_tsv(index: usize, w: &StackedPartialPermutation) -> String {
    let (lam, mu) = phi_k(w);
    let s = phi_s(w).expect("signed diagram reconstruction");
    let g = grs(w);
    format!(
        "{index}\t{w}\t{}\t{lam}\t{mu}\t{s}\t{}\t{}\t{}\t{}\t{}",
        w.dim_orbit(),
        g.t1,
        g.t2,
        g.lambda_prime,
        g.mu_prime,
        g.nu
    )
}

fn cmd_orbits(out: &mut dyn Write, p: usize, q: usize, r: usize, format: Format) -> CmdResult {
    if r == 0 || r > p + q {
        return Err(Usage(format!("need 1 <= r <= p + q, got p={p} q={q} r={r}")));
    }
    let orbits = enumerate_orbits(p, q, r).map_err(|e| Usage(e.to_string()))?;
    let w = |out: &mut dyn Write, s: &str| writeln!(out, "{s}").expect("write output");
    match format {
        Format::Json | Format::Tsv => {
            if format == Format::Tsv {
                w(out, TSV_HEADER);
            }
            for (k, chunk) in orbits.chunks(1024).enumerate() {
                let lines: Vec<String> = chunk
                    .par_iter()
                    .enumerate()
                    .map(|(i, o)| {
                        let idx = k * 1024 + i;
                        match format {
                            Format::Json => orbit_record(idx, o).to_string(),
                            _ => orbit_tsv(idx, o),
                        }
                    })
                    .collect();
                for l in lines {
                    w(out, &l);
                }
            }
        }
        Format::Dot => {
            let covers = hasse_covers(&orbits).map_err(|e| Usage(e.to_string()))?;
            w(out, &format!("digraph closure_{p}_{q}_{r} {{"));
            w(out, "  rankdir=BT;");
            for (i, o) in orbits.iter().enumerate() {
                w(out, &format!("  n{i} [label=\"{o}\\ndim {}\"];", o.dim_orbit()));
            }
            for (a, b) in covers {
                w(out, &format!("  n{a} -> n{b};"));
            }
            w(out, "}");
        }
    }
    Ok(true)
}

fn cmd_eval(out: &mut dyn Write, p: usize, q: usize, omega: &str) -> CmdResult {
    let w = parse_omega(p, q, omega).map_err(Usage)?;
    writeln!(out, "{}", orbit_record(0, &w)).expect("write output");
    Ok(true)
}

fn cmd_classify(out: &mut dyn Write, kind: &ClassifyKind) -> CmdResult {
    let record = match kind {
        ClassifyKind::Aiii { a, b, c } => {
            let t = JointTriple::from_flags(a, b, c).map_err(|e| Usage(e.to_string()))?;
            let shape = ParabolicShape::of(&t);
            let fast = forbidden_witness(&t);
            let brute = bruteforce_witness(&t);
            if fast.is_some() != brute.is_some() || classify_table(&shape) != is_finite_fast(&t) {
                return Err(Usage(format!("deciders disagree on {t}")));
            }
            let rows: Vec<String> = table_rows(&shape).iter().map(|r| r.to_string()).collect();
            json!({
                "input": {"a": a, "b": b, "c": c, "joint": {"a": t.a(), "b": t.b(), "c": t.c()}},
                "finite": fast.is_none(),
                "witness": fast,
                "table_rows": rows,
                "tits_form": t.dimension_vector().tits_form(),
            })
        }
        ClassifyKind::TripleA { a1, a2, a3 } => {
            let flags = [a1.clone(), a2.clone(), a3.clone()];
            let witness = multi_flag_witness(&flags).map_err(|e| Usage(e.to_string()))?;
            let tf = DimensionVector::of_flags(&flags).map_err(|e| Usage(e.to_string()))?.tits_form();
            json!({
                "input": {"a1": a1, "a2": a2, "a3": a3},
                "finite": witness.is_none(),
                "witness": witness,
                "tits_form": tf,
            })
        }
    };
    writeln!(out, "{record}").expect("write output");
    Ok(true)
}

fn cmd_ci(out: &mut dyn Write, n: usize) -> CmdResult {
    if n == 0 {
        return Err(Usage("need n >= 1".into()));
    }
    let orbits = enumerate_ci_orbits(n).map_err(|e| Usage(e.to_string()))?;
    for o in orbits {
        let fixed = sigma(&o.omega).map_err(|e| Usage(e.to_string()))? == o.omega;
        let rec = json!({
            "n": o.n,
            "omega": o.omega.to_string(),
            "symmetric": o.symmetric,
            "sigma_fixed": fixed,
            "ambient_dim": o.ambient_dim,
        });
        writeln!(out, "{rec}").expect("write output");
    }
    Ok(true)
}

fn run(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    match &cli.command {
        Command::Orbits { p, q, r, format } => cmd_orbits(out, *p, *q, *r, *format),
        Command::Eval { p, q, omega } => cmd_eval(out, *p, *q, omega),
        Command::Classify(kind) => cmd_classify(out, kind),
        Command::Verify(args) => verify::run(out, args),
        Command::Ci { n } => cmd_ci(out, *n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var("DFV_THREADS") {
        match v.parse::<usize>() {
            Ok(k) if k > 0 => {
                rayon::ThreadPoolBuilder::new().num_threads(k).build_global().expect("thread pool");
            }
            _ => {
                eprintln!("error: DFV_THREADS must be a positive integer, got {v:?}");
                return ExitCode::from(2);
            }
        }
    }
    let mut out: Box<dyn Write> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let result = run(&cli, &mut out);
    out.flush().expect("flush output");
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
