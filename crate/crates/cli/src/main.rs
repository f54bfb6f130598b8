//! `effalg`: validate, analyze, generate and check finite effect algebras.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 size guard
//! exceeded, 4 at least one law check failed.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use effalg_core::catalog::{enumerate_all, CatalogSpec};
use effalg_core::io::{analyze, export_dot, parse_ea, report_json, serialize_ea, Analysis};
use effalg_core::laws::{run_all, LawReport};
use effalg_core::topo::{frink_ideal_topology, interval_topology, order_topology};
use effalg_core::{EffectAlgebra, Error, Limits, Topology};

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_SIZE_GUARD: u8 = 3;
const EXIT_LAW_FAILURE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "effalg", version, about = "Finite effect algebras and their intrinsic topologies")]
struct Cli {
    /// Largest carrier for computations that range over all directed subsets.
    #[arg(long, global = true, value_name = "N", default_value_t = Limits::DEFAULT.directed)]
    size_guard: usize,

    /// Print only errors and machine-readable output.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a `.ea` document against the effect algebra axioms.
    Verify { file: PathBuf },
    /// Structural flags and topology summaries.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print one of the intrinsic topologies.
    Topology {
        file: PathBuf,
        /// i: interval, o: order, id: Frink ideal topology.
        #[arg(long, value_enum)]
        which: Which,
        /// Also compare it with the other two intrinsic topologies.
        #[arg(long)]
        compare: bool,
    },
    /// Run every law check on a file, or on each `.ea` file in a directory.
    Laws {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print a catalog algebra as a `.ea` document.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Print every effect algebra with 2..=max elements up to isomorphism.
    Enumerate {
        #[arg(long, value_name = "N")]
        max: usize,
        /// Print only the number of classes per size.
        #[arg(long)]
        count: bool,
    },
    /// Hasse diagram in DOT format.
    ExportDot { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// The n+1 element chain 0, a, .., na = 1.
    Chain { n: usize },
    /// The Boolean algebra on k generators.
    Boolean { k: usize },
    /// Glue two algebras at 0 and 1.
    Hsum { left: String, right: String },
    /// Componentwise product of two algebras.
    Product { left: String, right: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "i")]
    Interval,
    #[value(name = "o")]
    Order,
    #[value(name = "id")]
    Ideal,
}

impl Which {
    const ALL: [Which; 3] = [Which::Interval, Which::Order, Which::Ideal];

    fn label(self) -> &'static str {
        match self {
            Which::Interval => "interval",
            Which::Order => "order",
            Which::Ideal => "frink",
        }
    }

    fn build(self, e: &EffectAlgebra, limits: &Limits) -> effalg_core::Result<Topology> {
        match self {
            Which::Interval => interval_topology(e),
            Which::Order => order_topology(e, limits),
            Which::Ideal => frink_ideal_topology(e),
        }
    }
}

/// A command's result: text for stdout plus an exit code.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, code: 0 }
    }
}

/// A failure that stops the command, with its diagnostic.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = if err.is_size_guard() { EXIT_SIZE_GUARD } else { EXIT_INVALID };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn load(path: &Path) -> Result<EffectAlgebra, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INVALID,
        message: format!("{}: {e}", path.display()),
    })?;
    let raw = parse_ea(&text).map_err(|e| in_file(path, e))?;
    EffectAlgebra::validate(&raw).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, err: Error) -> Failure {
    let mut f = Failure::from(err);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

fn analysis_text(a: &Analysis) -> String {
    let f = &a.flags;
    let mut out = format!("instance {}\n", a.instance);
    for (label, v) in [
        ("lattice", Some(f.lattice)),
        ("distributive", f.distributive),
        ("atomic", Some(f.atomic)),
        ("mv", f.mv),
        ("o-continuous", f.o_continuous),
        ("algebraic", f.algebraic),
    ] {
        writeln!(out, "  {label:<14}{}", yes_no(v)).unwrap();
    }
    let t = &a.topologies;
    for (label, s) in [("interval", &t.interval), ("order", &t.order), ("frink", &t.frink)] {
        match s {
            Some(s) => {
                let opens = s.open_count.map_or("n/a".to_string(), |c| c.to_string());
                writeln!(
                    out,
                    "  {label:<14}opens {opens}, hausdorff {}, discrete {}",
                    yes_no(Some(s.hausdorff)),
                    yes_no(Some(s.discrete))
                )
                .unwrap();
            }
            None => writeln!(out, "  {label:<14}n/a").unwrap(),
        }
    }
    out
}

fn topology_text(e: &EffectAlgebra, t: &Topology, limits: &Limits) -> String {
    let mut out = String::new();
    for x in 0..t.size() {
        let names: Vec<&str> = t.neighbourhood(x).ones().map(|y| e.element_name(y)).collect();
        writeln!(out, "  {}: {{{}}}", e.element_name(x), names.join(", ")).unwrap();
    }
    let opens = t.open_count(limits).map_or("n/a".to_string(), |c| c.to_string());
    writeln!(
        out,
        "  opens {opens}, hausdorff {}, discrete {}",
        yes_no(Some(t.is_hausdorff())),
        yes_no(Some(t.is_discrete()))
    )
    .unwrap();
    out
}

fn compare(t: &Topology, other: &Topology) -> &'static str {
    let finer = t.finer_than(other).unwrap_or(false);
    let coarser = other.finer_than(t).unwrap_or(false);
    match (finer, coarser) {
        (true, true) => "equal",
        (true, false) => "strictly finer",
        (false, true) => "strictly coarser",
        (false, false) => "incomparable",
    }
}

fn laws_text(report: &LawReport) -> String {
    let mut out = format!("instance {}\n", report.instance);
    for entry in &report.entries {
        writeln!(out, "  {:<12}{}", entry.id, entry.status).unwrap();
    }
    out
}

fn ea_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let entries = std::fs::read_dir(dir).map_err(|e| Failure {
        code: EXIT_INVALID,
        message: format!("{}: {e}", dir.display()),
    })?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "ea"))
        .collect();
    files.sort();
    Ok(files)
}

/// Laws on one file, rendered into its own buffer.
fn laws_one(path: &Path, json: bool, quiet: bool, limits: &Limits) -> Result<Outcome, Failure> {
    let e = load(path)?;
    let report = run_all(&e, limits);
    let code = if report.has_failure() { EXIT_LAW_FAILURE } else { 0 };
    let stdout = if json {
        report_json(&analyze(&e, limits), Some(&report))
    } else if quiet {
        report
            .failures()
            .map(|f| format!("{} {} {}\n", report.instance, f.id, f.status))
            .collect()
    } else {
        laws_text(&report)
    };
    Ok(Outcome { stdout, code })
}

fn laws(path: &Path, json: bool, quiet: bool, limits: &Limits) -> Result<Outcome, Failure> {
    if !path.is_dir() {
        return laws_one(path, json, quiet, limits);
    }
    let files = ea_files(path)?;
    let results: Vec<Result<Outcome, Failure>> =
        files.par_iter().map(|f| laws_one(f, json, quiet, limits)).collect();
    let mut code = 0;
    let mut docs = Vec::new();
    let mut text = String::new();
    for r in results {
        match r {
            Ok(o) => {
                code = code.max(o.code);
                if json {
                    docs.push(o.stdout.trim_end().to_string());
                } else {
                    text.push_str(&o.stdout);
                }
            }
            Err(f) => {
                code = code.max(f.code);
                eprintln!("error: {}", f.message);
            }
        }
    }
    let stdout = if json { format!("[\n{}\n]\n", docs.join(",\n")) } else { text };
    Ok(Outcome { stdout, code })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let limits = Limits {
        directed: cli.size_guard,
        ..Limits::DEFAULT
    };
    match &cli.command {
        Command::Verify { file } => {
            let e = load(file)?;
            let msg = if cli.quiet {
                String::new()
            } else {
                format!("valid: {} ({} elements)\n", e.name(), e.size())
            };
            Ok(Outcome::ok(msg))
        }
        Command::Analyze { file, json } => {
            let a = analyze(&load(file)?, &limits);
            Ok(Outcome::ok(if *json { report_json(&a, None) } else { analysis_text(&a) }))
        }
        Command::Topology { file, which, compare: cmp } => {
            let e = load(file)?;
            let t = which.build(&e, &limits)?;
            let mut out = format!("{} topology of {}\n", which.label(), e.name());
            out.push_str(&topology_text(&e, &t, &limits));
            if *cmp {
                for other in Which::ALL.into_iter().filter(|w| w != which) {
                    let relation = match other.build(&e, &limits) {
                        Ok(o) => compare(&t, &o),
                        Err(err) if err.is_size_guard() => "not computed (size guard)",
                        Err(_) => "not defined",
                    };
                    writeln!(out, "  vs {}: {relation}", other.label()).unwrap();
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Laws { path, json } => laws(path, *json, cli.quiet, &limits),
        Command::Gen { family } => {
            let spec = match family {
                Family::Chain { n } => CatalogSpec::Chain(*n),
                Family::Boolean { k } => CatalogSpec::Boolean(*k),
                Family::Hsum { left, right } => CatalogSpec::HorizontalSum(
                    Box::new(CatalogSpec::parse(left)?),
                    Box::new(CatalogSpec::parse(right)?),
                ),
                Family::Product { left, right } => CatalogSpec::Product(
                    Box::new(CatalogSpec::parse(left)?),
                    Box::new(CatalogSpec::parse(right)?),
                ),
            };
            Ok(Outcome::ok(serialize_ea(&spec.build()?)))
        }
        Command::Enumerate { max, count } => {
            let all = enumerate_all(*max, &limits)?;
            let mut out = String::new();
            if *count {
                for n in 2..=*max {
                    writeln!(out, "{n} {}", all.iter().filter(|e| e.size() == n).count()).unwrap();
                }
            } else {
                let docs: Vec<String> = all.iter().map(serialize_ea).collect();
                out = docs.join("\n");
            }
            Ok(Outcome::ok(out))
        }
        Command::ExportDot { file } => Ok(Outcome::ok(export_dot(&load(file)?))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(o) => {
            print!("{}", o.stdout);
            ExitCode::from(o.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
