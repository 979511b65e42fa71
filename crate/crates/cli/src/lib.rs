//! Command-line front end. `run_cli` is the whole program; `main` only exits
//! with its return value.
//!
//! Exit codes: 0 when every check passes, 1 when some axiom fails (the
//! report is still printed), 2 for usage, parse, validation and I/O errors.

use clap::{Parser, Subcommand, ValueEnum};
use oqkit_core::catalog::{self, Entry};
use oqkit_core::dot::{export_dot, DotOptions};
use oqkit_core::frames::{
    check_cylindric_orthoframe, enumerate_proper_filters, goldblatt_frame, maclaren_frame,
};
use oqkit_core::io::{self, AlgebraDocument, CheckEntry, ReportDocument};
use oqkit_core::lattice::{check_ortholattice, check_orthomodular, is_orthomodular};
use oqkit_core::qca::check_qca;
use oqkit_core::qia::{check_cylindric_qia, check_derived_identities, check_qia};
use oqkit_core::transforms::{cqia_to_qca, qca_to_cqia, qia_to_lattice, sasaki_table};
use oqkit_core::{CheckReport, CylindricQia, Error, Limits};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "oqkit", version, about = "Finite quantum cylindric algebras, QIAs and orthoframes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every axiom check that applies to the file's kind.
    Check { file: PathBuf },
    /// Convert between the lattice side and the implication side.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert there and back and compare with the input.
    Roundtrip { file: PathBuf },
    /// Build a canonical frame from a qca or cqia file.
    Frame {
        #[arg(long, value_enum)]
        kind: FrameKind,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Fill the nodes of one diagonal, given as `i,k`.
        #[arg(long, value_parser = parse_pair)]
        delta: Option<(usize, usize)>,
        /// Keep reflexive loops in the DOT output.
        #[arg(long)]
        loops: bool,
    },
    /// List the proper filters of a qca or cqia file.
    Filters { file: PathBuf },
    /// Print a catalog instance (`boolean:K`, `mo:M`, `o6`, `cylset:U:D`, `simple:BASE:D`).
    Catalog {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Like `check`, and also write a machine-readable report.
    Report {
        #[arg(long)]
        json: PathBuf,
        file: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    Qia,
    Qca,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FrameKind {
    Maclaren,
    Goldblatt,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (i, k) = s.split_once(',').ok_or_else(|| format!("expected `i,k`, found `{s}`"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not an index"));
    Ok((num(i)?, num(k)?))
}

/// A failed command: either a report of violated axioms or a hard error.
enum Failure {
    Violations(String, CheckReport, Option<Vec<String>>),
    Hard(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotOrtholattice(r) => Failure::Violations("check_ortholattice".into(), *r, None),
            Error::NotOrthomodular(r) => Failure::Violations("check_orthomodular".into(), *r, None),
            Error::InvalidQca(r) => Failure::Violations("check_qca".into(), *r, None),
            Error::InvalidCqia(r) => Failure::Violations("check_cylindric_qia".into(), *r, None),
            Error::TheoremViolation(r) => Failure::Violations("check_derived_identities".into(), *r, None),
            other => Failure::Hard(other),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_cli_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

/// [`run_cli`] with explicit output streams.
pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut io = Io { out, err };
    let limits = Limits::from_env();
    match dispatch(cli.command, &limits, &mut io) {
        Ok(code) => code,
        Err(Failure::Violations(name, report, labels)) => {
            print_check(io.out, &CheckEntry::new(name, &report, labels.as_deref()));
            EXIT_VIOLATION
        }
        Err(Failure::Hard(e)) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, limits: &Limits, io: &mut Io) -> Outcome {
    match command {
        Command::Check { file } => {
            let (_, doc) = load(&file)?;
            let checks = run_checks(&doc)?;
            checks.iter().for_each(|c| print_check(io.out, c));
            Ok(exit_for(&checks))
        }
        Command::Report { json, file } => {
            let (bytes, doc) = load(&file)?;
            let checks = run_checks(&doc)?;
            checks.iter().for_each(|c| print_check(io.out, c));
            let report = ReportDocument::new(&bytes, doc.kind(), checks.clone());
            io::write_atomic(&json, io::to_canonical_json(&report).as_bytes())?;
            Ok(exit_for(&checks))
        }
        Command::Convert { to, file, output } => {
            let (_, doc) = load(&file)?;
            let converted = convert(&doc, to)?;
            emit(&io::to_canonical_string(&converted), output.as_deref(), io)?;
            Ok(EXIT_PASS)
        }
        Command::Roundtrip { file } => roundtrip(&file, io),
        Command::Frame { kind, file, output, dot, delta, loops } => {
            let (_, doc) = load(&file)?;
            let c = as_cqia(doc)?;
            let frame = match kind {
                FrameKind::Maclaren => maclaren_frame(&c, limits)?,
                FrameKind::Goldblatt => goldblatt_frame(&c, limits)?,
            };
            if let Some((i, k)) = delta {
                if i >= frame.dims() || k >= frame.dims() {
                    return Err(Failure::Hard(Error::Validation {
                        field: "delta".into(),
                        detail: format!("dimension out of range 0..{}", frame.dims()),
                    }));
                }
            }
            if let Some(path) = dot {
                export_dot(&frame, path, &DotOptions { loops, delta })?;
            }
            let doc = AlgebraDocument::Frame(frame);
            emit(&io::to_canonical_string(&doc), output.as_deref(), io)?;
            let AlgebraDocument::Frame(frame) = &doc else { unreachable!() };
            let entry = CheckEntry::new("check_cylindric_orthoframe", &check_cylindric_orthoframe(frame), frame.labels());
            print_check(io.err, &entry);
            Ok(if entry.passed { EXIT_PASS } else { EXIT_VIOLATION })
        }
        Command::Filters { file } => {
            let (_, doc) = load(&file)?;
            let c = as_cqia(doc)?;
            for f in enumerate_proper_filters(&c, limits)? {
                let members: Vec<String> = f.members().map(|x| c.qia().label(x)).collect();
                let _ = writeln!(io.out, "{{{}}}", members.join(","));
            }
            Ok(EXIT_PASS)
        }
        Command::Catalog { name, output } => {
            let doc = match catalog::by_name(&name, limits)? {
                Entry::Lattice(l) => {
                    let orthomodular = is_orthomodular(&l);
                    AlgebraDocument::Lattice { lattice: l, orthomodular }
                }
                Entry::Qca(a) => AlgebraDocument::Qca(a),
            };
            emit(&io::to_canonical_string(&doc), output.as_deref(), io)?;
            Ok(EXIT_PASS)
        }
    }
}

fn load(path: &Path) -> std::result::Result<(Vec<u8>, AlgebraDocument), Failure> {
    let bytes = std::fs::read(path).map_err(|e| {
        Failure::Hard(Error::Parse(format!("cannot read {}: {e}", path.display())))
    })?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::Hard(Error::Parse(format!("{} is not UTF-8", path.display()))))?;
    let doc = io::parse_str(&text)?;
    Ok((bytes, doc))
}

fn emit(text: &str, output: Option<&Path>, io: &mut Io) -> std::result::Result<(), Failure> {
    match output {
        Some(path) => io::write_atomic(path, text.as_bytes())?,
        None => {
            let _ = io.out.write_all(text.as_bytes());
        }
    }
    Ok(())
}

fn exit_for(checks: &[CheckEntry]) -> i32 {
    if checks.iter().all(|c| c.passed) {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    }
}

fn print_check(w: &mut dyn Write, c: &CheckEntry) {
    let _ = writeln!(w, "{}: {}", c.name, if c.passed { "pass" } else { "FAIL" });
    for v in &c.violations {
        let _ = writeln!(w, "  {} at ({})", v.axiom, v.witness.join(", "));
    }
}

/// The checks that apply to each kind, stopping once a prerequisite fails.
pub fn run_checks(doc: &AlgebraDocument) -> oqkit_core::Result<Vec<CheckEntry>> {
    let labels = doc.labels();
    let entry = |name: &str, r: &CheckReport| CheckEntry::new(name, r, labels);
    let mut out = Vec::new();
    match doc {
        AlgebraDocument::Lattice { lattice, orthomodular } => {
            let ol = check_ortholattice(lattice)?;
            out.push(entry("check_ortholattice", &ol));
            if *orthomodular && ol.passed() {
                out.push(entry("check_orthomodular", &check_orthomodular(lattice)?));
            }
        }
        AlgebraDocument::Qca(a) => out.push(entry("check_qca", &check_qca(a))),
        AlgebraDocument::Qia(q) => {
            let base = check_qia(q);
            out.push(entry("check_qia", &base));
            if base.passed() {
                let derived = match check_derived_identities(q) {
                    Ok(r) => r,
                    Err(Error::TheoremViolation(r)) => *r,
                    Err(e) => return Err(e),
                };
                out.push(entry("check_derived_identities", &derived));
            }
        }
        AlgebraDocument::Cqia(c) => out.push(entry("check_cylindric_qia", &check_cylindric_qia(c))),
        AlgebraDocument::Frame(f) => {
            out.push(entry("check_cylindric_orthoframe", &check_cylindric_orthoframe(f)))
        }
    }
    Ok(out)
}

fn unsupported(kind: &str, to: &str) -> Failure {
    Failure::Hard(Error::Validation { field: "kind".into(), detail: format!("cannot convert `{kind}` to {to}") })
}

fn convert(doc: &AlgebraDocument, to: Target) -> std::result::Result<AlgebraDocument, Failure> {
    match (doc, to) {
        (AlgebraDocument::Qca(a), Target::Qia) => Ok(AlgebraDocument::Cqia(qca_to_cqia(a)?)),
        (AlgebraDocument::Lattice { lattice, .. }, Target::Qia) => {
            let report = check_orthomodular(lattice)?;
            if !report.passed() {
                return Err(Failure::Violations("check_orthomodular".into(), report, lattice.labels().map(<[_]>::to_vec)));
            }
            Ok(AlgebraDocument::Qia(sasaki_table(lattice)))
        }
        (AlgebraDocument::Cqia(c), Target::Qca) => Ok(AlgebraDocument::Qca(cqia_to_qca(c)?)),
        (AlgebraDocument::Qia(q), Target::Qca) => {
            let report = check_qia(q);
            if !report.passed() || q.zero().is_none() {
                return Err(Failure::Violations("check_qia".into(), report, q.labels().map(<[_]>::to_vec)));
            }
            Ok(AlgebraDocument::Lattice { lattice: qia_to_lattice(q)?, orthomodular: true })
        }
        (d, Target::Qia) => Err(unsupported(d.kind(), "qia")),
        (d, Target::Qca) => Err(unsupported(d.kind(), "qca")),
    }
}

fn as_cqia(doc: AlgebraDocument) -> std::result::Result<CylindricQia, Failure> {
    match doc {
        AlgebraDocument::Cqia(c) => Ok(c),
        AlgebraDocument::Qca(a) => Ok(qca_to_cqia(&a)?),
        d => Err(Failure::Hard(Error::Validation {
            field: "kind".into(),
            detail: format!("expected qca or cqia, found `{}`", d.kind()),
        })),
    }
}

fn roundtrip(file: &Path, io: &mut Io) -> Outcome {
    let (_, doc) = load(file)?;
    let (there, back) = match doc {
        AlgebraDocument::Qca(_) | AlgebraDocument::Lattice { .. } => {
            let there = convert(&doc, Target::Qia)?;
            let back = convert(&there, Target::Qca)?;
            (there, back)
        }
        AlgebraDocument::Cqia(_) | AlgebraDocument::Qia(_) => {
            let there = convert(&doc, Target::Qca)?;
            let back = convert(&there, Target::Qia)?;
            (there, back)
        }
        AlgebraDocument::Frame(_) => return Err(unsupported("frame", "anything")),
    };
    // a lattice comes back flagged orthomodular, so compare the tables only
    let same = match (&doc, &back) {
        (AlgebraDocument::Lattice { lattice: a, .. }, AlgebraDocument::Lattice { lattice: b, .. }) => a == b,
        (a, b) => a == b,
    };
    let path = format!("{} -> {} -> {}", doc.kind(), there.kind(), back.kind());
    let _ = writeln!(io.out, "roundtrip {path}: {}", if same { "identical" } else { "DIFFERENT" });
    Ok(if same { EXIT_PASS } else { EXIT_VIOLATION })
}
