//! `mtlstab`: validate, inspect, verify and search finite MTL-algebras.
//!
//! Exit status: 0 when the run completed with nothing to report, 1 when it
//! completed with refutations, violations or findings, 2 on usage or input
//! errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use mtl_core::claims::{
    find_claim, verify_all, verify_claim, verify_claim_at, ClaimOutcome, Domain, Verdict, REGISTRY,
};
use mtl_core::classify::classify;
use mtl_core::format::{parse_algebra, parse_corpus, serialize};
use mtl_core::report::{Format, Report};
use mtl_core::reported::for_algebra;
use mtl_core::search::{
    canonical_hex, enumerate, gen_family, open1_scan, open2_scan, open3_scan, EnumerationSpec,
    Family, Problem, SearchFinding,
};
use mtl_core::stabilizers::stabilizer_suite;
use mtl_core::{FiniteMtlAlgebra, Subset};

#[derive(Parser, Debug)]
#[command(
    name = "mtlstab",
    version,
    about = "Stabilizers and claim checks on finite MTL-algebras"
)]
struct Cli {
    /// Report layout.
    #[arg(long, value_enum, default_value_t = OutputFormat::Human, global = true)]
    format: OutputFormat,
    /// Worker threads for sweeps.
    #[arg(long, env = "MTL_JOBS", global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Human,
    Machine,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the MTL axioms and report every violation.
    Validate { file: PathBuf },
    /// All seven stabilizers of a subset.
    Stab {
        file: PathBuf,
        /// Comma-separated element labels.
        #[arg(long)]
        set: String,
    },
    /// Subclass membership and the stabilizer characterizations.
    Classify { file: PathBuf },
    /// Check one registered claim or all of them.
    Verify {
        file: PathBuf,
        #[arg(long)]
        claim: Option<String>,
        /// Restrict subset claims to these sets (repeat for nested pairs, X first).
        #[arg(long)]
        set: Vec<String>,
    },
    /// Enumerate MTL-algebras of one size up to isomorphism.
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        chains: bool,
        /// Permit size 6 for the general search.
        #[arg(long)]
        allow_six: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan for counterexamples to an open problem.
    Search {
        #[arg(long)]
        problem: u8,
        #[arg(long, conflicts_with = "size", required_unless_present = "size")]
        file: Option<PathBuf>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        chains: bool,
        /// Open problem 2: require X_l = X_r for every subset, not only singletons.
        #[arg(long)]
        full: bool,
    },
    /// Write a chain from a t-norm family.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An error that maps to exit status 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<(Report, bool), InputError>;

fn read(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<FiniteMtlAlgebra, InputError> {
    let a =
        parse_algebra(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    a.into_validated().map_err(|r| {
        InputError(format!(
            "{}: not an MTL-algebra ({} axiom violations, first: {})",
            path.display(),
            r.violations.len(),
            r.violations[0].axiom.id()
        ))
    })
}

fn parse_set(a: &FiniteMtlAlgebra, text: &str) -> Result<Subset, InputError> {
    let s = a.subset(text.split(',').map(str::trim).filter(|t| !t.is_empty()))?;
    if s.is_empty() {
        return Err(InputError(
            "empty subset where a nonempty one is required".into(),
        ));
    }
    Ok(s)
}

fn write_out(path: &Path, text: &str) -> Result<(), InputError> {
    fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn validate(file: &Path) -> Run {
    let a =
        parse_algebra(&read(file)?).map_err(|e| InputError(format!("{}: {e}", file.display())))?;
    let report = a.check();
    let mut r = Report::new();
    for v in &report.violations {
        let w: Vec<&str> = v.witness.iter().map(|&e| a.label(e)).collect();
        r.push("violation", v.axiom.id(), w.join(","));
    }
    r.push("valid", a.name(), report.valid().to_string());
    Ok((r, !report.valid()))
}

fn stab(file: &Path, set: &str) -> Run {
    let a = load(file)?;
    let x = parse_set(&a, set)?;
    let suite = stabilizer_suite(&a, &x)?;
    let mut r = Report::new();
    r.push("input", "X", a.render(&x));
    for (kind, s) in &suite.sets {
        r.push("stab", kind.name(), a.render(s));
    }
    Ok((r, false))
}

fn classify_cmd(file: &Path) -> Run {
    let a = load(file)?;
    let c = classify(&a);
    let mut r = Report::new();
    for row in &c.classes {
        r.push("class", row.key, row.value.to_string());
    }
    for chk in &c.checks {
        let verdict = if chk.agree() { "agree" } else { "disagree" };
        r.push(
            "check",
            chk.key,
            format!(
                "{verdict} direct={} stabilizers={} claim={}",
                chk.direct, chk.via_stabilizers, chk.claim
            ),
        );
    }
    let split = c.disagreements().next().is_some();
    Ok((r, split))
}

fn braced(a: &FiniteMtlAlgebra, s: &Subset) -> String {
    if s.is_empty() {
        a.render(s)
    } else {
        format!("{{{}}}", a.render(s))
    }
}

fn outcome_records(r: &mut Report, a: &FiniteMtlAlgebra, o: &ClaimOutcome) {
    let claim = find_claim(o.claim).expect("registered");
    let mut value = format!(
        "{} scope={} refuting={} expect={}",
        o.verdict.as_str(),
        o.scope,
        o.refuting,
        claim.expectation.as_str()
    );
    if o.sampled {
        value.push_str(" sampled");
    }
    r.push("claim", o.claim, value);
    if o.witness.is_some() {
        r.push("witness", o.claim, o.describe_witness(a));
    }
}

fn verify(file: &Path, claim: Option<&str>, sets: &[String]) -> Run {
    let a = load(file)?;
    let sets: Vec<Subset> = sets
        .iter()
        .map(|s| parse_set(&a, s))
        .collect::<Result<_, _>>()?;
    let outcomes: Vec<ClaimOutcome> = match (claim, sets.is_empty()) {
        (Some(id), true) => vec![verify_claim(&a, id)?],
        (Some(id), false) => vec![verify_claim_at(&a, id, &sets)?],
        (None, true) => verify_all(&a),
        (None, false) => {
            let domain = if sets.len() == 1 {
                Domain::Subsets
            } else {
                Domain::SubsetPairs
            };
            REGISTRY
                .par_iter()
                .filter(|c| c.domain == domain)
                .map(|c| verify_claim_at(&a, c.id, &sets))
                .collect::<Result<Vec<_>, _>>()?
        }
    };
    let mut r = Report::new();
    for o in &outcomes {
        outcome_records(&mut r, &a, o);
    }
    let x = sets.first();
    if claim.is_none() {
        for d in for_algebra(&a, x) {
            let key = format!("{}({})", d.quantity.name(), d.input.join(","));
            let printed = a.subset(d.reported.iter().copied())?;
            let mut value = format!(
                "printed={} computed={}",
                braced(&a, &printed),
                braced(&a, &d.computed)
            );
            if let Some(e) = &d.existential {
                value.push_str(&format!(" existential={}", braced(&a, e)));
            }
            value.push_str(if d.mismatch { " mismatch" } else { " match" });
            r.push("reported", key, value);
        }
    }
    let refuted = outcomes.iter().any(|o| o.verdict == Verdict::Refuted);
    Ok((r, refuted))
}

fn corpus_text(algs: &[FiniteMtlAlgebra]) -> String {
    algs.iter()
        .map(|a| format!("# canon: {}\n{}", canonical_hex(a), serialize(a, false)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn enumerate_cmd(size: usize, chains: bool, allow_six: bool, out: Option<&Path>) -> Run {
    let spec = EnumerationSpec {
        chains_only: chains,
        allow_six,
        ..EnumerationSpec::new(size)
    };
    let algs = enumerate(&spec)?;
    if let Some(path) = out {
        write_out(path, &corpus_text(&algs))?;
    }
    let mut r = Report::new();
    r.push(
        "enumerate",
        if chains { "chains" } else { "all" },
        format!("size={size} count={}", algs.len()),
    );
    for a in &algs {
        r.push("algebra", a.name(), canonical_hex(a));
    }
    Ok((r, false))
}

fn search(problem: u8, file: Option<&Path>, size: Option<usize>, chains: bool, full: bool) -> Run {
    let problem = Problem::from_number(problem)
        .ok_or_else(|| InputError(format!("unknown problem {problem}; expected 1, 2 or 3")))?;
    let corpus: Vec<FiniteMtlAlgebra> = match (file, size) {
        (Some(path), _) => {
            let algs = parse_corpus(&read(path)?)
                .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
            algs.into_iter()
                .map(|a| {
                    let name = a.name().to_string();
                    a.into_validated().map_err(|_| {
                        InputError(format!("{}: {name} is not an MTL-algebra", path.display()))
                    })
                })
                .collect::<Result<_, _>>()?
        }
        (None, Some(n)) => enumerate(&EnumerationSpec {
            chains_only: chains,
            ..EnumerationSpec::new(n)
        })?,
        (None, None) => return Err(InputError("one of --file or --size is required".into())),
    };
    let findings: Vec<SearchFinding> = corpus
        .par_iter()
        .map(|a| match problem {
            Problem::Open1 => open1_scan(a),
            Problem::Open2 => open2_scan(std::slice::from_ref(a), full),
            Problem::Open3 => open3_scan(a),
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut r = Report::new();
    r.push(
        "search",
        problem.id(),
        format!("scanned={} findings={}", corpus.len(), findings.len()),
    );
    for f in &findings {
        let replay = if f.replay() {
            "replayed"
        } else {
            "replay-failed"
        };
        r.push(
            "finding",
            f.algebra.name(),
            format!("{} [{replay}]", f.describe()),
        );
    }
    Ok((r, !findings.is_empty()))
}

fn gen(family: &str, size: usize, out: Option<&Path>) -> Run {
    let f: Family = family.parse()?;
    let a = gen_family(f, size)?;
    let text = serialize(&a, false);
    let mut r = Report::new();
    match out {
        Some(path) => {
            write_out(path, &text)?;
            r.push("gen", a.name(), path.display().to_string());
        }
        None => print!("{text}"),
    }
    Ok((r, false))
}

fn dispatch(cmd: &Command) -> Run {
    match cmd {
        Command::Validate { file } => validate(file),
        Command::Stab { file, set } => stab(file, set),
        Command::Classify { file } => classify_cmd(file),
        Command::Verify { file, claim, set } => verify(file, claim.as_deref(), set),
        Command::Enumerate {
            size,
            chains,
            allow_six,
            out,
        } => enumerate_cmd(*size, *chains, *allow_six, out.as_deref()),
        Command::Search {
            problem,
            file,
            size,
            chains,
            full,
        } => search(*problem, file.as_deref(), *size, *chains, *full),
        Command::Gen { family, size, out } => gen(family, *size, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        pool = pool.num_threads(j);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let format = match cli.format {
        OutputFormat::Human => Format::Human,
        OutputFormat::Machine => Format::Machine,
    };
    match pool.install(|| dispatch(&cli.command)) {
        Ok((report, flagged)) => {
            print!("{}", report.emit(format));
            ExitCode::from(u8::from(flagged))
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
