//! The `hetcat` command-line tool.
//!
//! Exit status 0 means the requested property was verified, 1 means a
//! mathematically negative answer (nothing represents the het, a functor is
//! not a brain functor, …) and 2 means the input itself was unusable.
//! Results go to stdout, diagnostics to stderr.

pub mod dot;
pub mod spec;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::adjoint::{brain_from_adjoints, check_brain, verify_adjunctive_square};
use crate::fincat::FinCategory;
use crate::functor::FinFunctor;
use crate::gallery::{adjunction_for, build_fixture, parse_params, selection_report};
use crate::het::HetBifunctor;
use crate::report::ValidationReport;
use crate::represent::{find_left_representation, find_right_representation, Semiadjunction};
use spec::{parse_spec, serialize, SpecDocument};

#[derive(Parser, Debug)]
#[command(
    name = "hetcat",
    version,
    about = "Representability, adjunctions and brain functors over finite categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a spec file and check every law.
    Validate { file: PathBuf },
    /// Find a receiving universal h_X: X ~> F(X).
    RepresentLeft {
        file: PathBuf,
        #[arg(long)]
        het: String,
        #[arg(long)]
        object: String,
    },
    /// Find a sending universal e_A: G(A) ~> A.
    RepresentRight {
        file: PathBuf,
        #[arg(long)]
        het: String,
        #[arg(long)]
        object: String,
    },
    /// Build both semiadjunctions of a het and check every adjunctive square.
    Adjunction {
        file: PathBuf,
        #[arg(long)]
        het: String,
    },
    /// Check that a functor represents one het on the left and another on the right.
    Brain {
        file: PathBuf,
        #[arg(long)]
        functor: String,
        #[arg(long = "out")]
        het_out: String,
        #[arg(long = "in")]
        het_in: String,
    },
    /// Check H -| F -| G and derive the brain functor F.
    BrainFromAdjoints {
        file: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        mid: String,
        #[arg(long)]
        right: String,
    },
    /// Build a named fixture and check its expected results.
    Gallery {
        name: String,
        /// Parameters as name=value.
        params: Vec<String>,
        /// Print the fixture as a spec file instead of checking it.
        #[arg(long)]
        emit_spec: bool,
    },
    /// Contrast a het with its factorization through the receiving universal.
    ReportSelection {
        file: PathBuf,
        #[arg(long)]
        het: String,
        #[arg(long)]
        element: String,
    },
    /// Draw an adjunctive square or a butterfly as DOT.
    EmitDot {
        #[command(subcommand)]
        kind: DotKind,
    },
}

#[derive(Subcommand, Debug)]
enum DotKind {
    Square {
        file: PathBuf,
        #[arg(long)]
        het: String,
        #[arg(long)]
        element: String,
    },
    Butterfly {
        file: PathBuf,
        #[arg(long)]
        functor: String,
        #[arg(long = "out")]
        het_out: String,
        #[arg(long = "in")]
        het_in: String,
        #[arg(long)]
        out_element: String,
        #[arg(long)]
        in_element: String,
    },
}

/// Unusable input; reported on stderr with exit status 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Run = Result<i32, InputError>;

/// Runs one command line. `args` includes the program name.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load(path: &PathBuf) -> Result<SpecDocument, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_spec(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn het<'a>(doc: &'a SpecDocument, name: &str) -> Result<&'a Arc<HetBifunctor>, InputError> {
    doc.het(name)
        .ok_or_else(|| InputError(format!("no het named `{name}`")))
}

fn functor<'a>(doc: &'a SpecDocument, name: &str) -> Result<&'a FinFunctor, InputError> {
    doc.functor(name)
        .ok_or_else(|| InputError(format!("no functor named `{name}`")))
}

fn object_map(f: &FinFunctor) -> String {
    let parts: Vec<String> = f
        .object_table()
        .iter()
        .map(|(x, y)| format!("{x} -> {y}"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn violations(out: &mut dyn Write, report: &ValidationReport) -> std::io::Result<()> {
    for v in &report.violations {
        writeln!(out, "  {v}")?;
    }
    Ok(())
}

fn run(command: Command, out: &mut dyn Write) -> Run {
    match command {
        Command::Validate { file } => {
            let doc = load(&file)?;
            for item in doc.items() {
                match item {
                    spec::Item::Category { name, category } => writeln!(
                        out,
                        "category {name}: {} objects, {} morphisms",
                        category.object_count(),
                        category.morphism_count()
                    )?,
                    spec::Item::Functor {
                        name,
                        source,
                        target,
                        ..
                    } => writeln!(out, "functor {name}: {source} -> {target}")?,
                    spec::Item::Het {
                        name,
                        sending,
                        receiving,
                        het,
                    } => writeln!(
                        out,
                        "het {name}: {sending} ~> {receiving}, {} elements",
                        het.element_count()
                    )?,
                }
            }
            writeln!(out, "VALID")?;
            Ok(0)
        }
        Command::RepresentLeft {
            file,
            het: h,
            object,
        } => {
            let doc = load(&file)?;
            let het = het(&doc, &h)?;
            let x = het.sending().object(&object)?;
            match find_left_representation(het, x) {
                Some(u) => {
                    let rep = het.receiving().object_name(u.rep);
                    writeln!(
                        out,
                        "F({object}) = {rep}, universal = {}",
                        het.element_name(u.universal)
                    )?;
                    Ok(0)
                }
                None => {
                    let empty = het
                        .receiving()
                        .objects()
                        .all(|a| het.het_set(x, a).is_empty());
                    let why = if empty {
                        format!(" (no hets out of {object})")
                    } else {
                        String::new()
                    };
                    writeln!(out, "F({object}): not representable{why}")?;
                    Ok(1)
                }
            }
        }
        Command::RepresentRight {
            file,
            het: h,
            object,
        } => {
            let doc = load(&file)?;
            let het = het(&doc, &h)?;
            let a = het.receiving().object(&object)?;
            match find_right_representation(het, a) {
                Some(u) => {
                    let rep = het.sending().object_name(u.rep);
                    writeln!(
                        out,
                        "G({object}) = {rep}, universal = {}",
                        het.element_name(u.universal)
                    )?;
                    Ok(0)
                }
                None => {
                    let empty = het
                        .sending()
                        .objects()
                        .all(|x| het.het_set(x, a).is_empty());
                    let why = if empty {
                        format!(" (no hets into {object})")
                    } else {
                        String::new()
                    };
                    writeln!(out, "G({object}): not representable{why}")?;
                    Ok(1)
                }
            }
        }
        Command::Adjunction { file, het: h } => {
            let doc = load(&file)?;
            let het = het(&doc, &h)?;
            match adjunction_for(het.clone()) {
                Ok(adj) => {
                    writeln!(out, "F = {}", object_map(adj.left().functor()))?;
                    writeln!(out, "G = {}", object_map(adj.right().functor()))?;
                    let total = het.element_count();
                    let good = het
                        .elements()
                        .filter(|&d| verify_adjunctive_square(&adj, d).is_ok_and(|s| s.commutes()))
                        .count();
                    writeln!(out, "adjunctive squares: {good} of {total} commute")?;
                    writeln!(out, "ADJUNCTION: verified")?;
                    Ok(0)
                }
                Err(report) => {
                    writeln!(out, "ADJUNCTION: not verified")?;
                    violations(out, &report)?;
                    Ok(1)
                }
            }
        }
        Command::Brain {
            file,
            functor: f,
            het_out,
            het_in,
        } => {
            let doc = load(&file)?;
            let f = functor(&doc, &f)?;
            let (o, i) = (het(&doc, &het_out)?, het(&doc, &het_in)?);
            same_shape(o, f.source(), f.target(), &het_out)?;
            same_shape(i, f.target(), f.source(), &het_in)?;
            match check_brain(f, o.clone(), i.clone()) {
                Ok(b) => {
                    writeln!(out, "F = {}", object_map(b.functor()))?;
                    writeln!(out, "BRAIN FUNCTOR: verified")?;
                    Ok(0)
                }
                Err(report) => {
                    writeln!(out, "BRAIN FUNCTOR: not verified")?;
                    violations(out, &report)?;
                    Ok(1)
                }
            }
        }
        Command::BrainFromAdjoints {
            file,
            left,
            mid,
            right,
        } => {
            let doc = load(&file)?;
            let (h, f, g) = (
                functor(&doc, &left)?,
                functor(&doc, &mid)?,
                functor(&doc, &right)?,
            );
            for (name, other) in [(&left, h), (&right, g)] {
                if other.source() != f.target() || other.target() != f.source() {
                    return Err(InputError(format!(
                        "`{name}` does not run opposite to `{mid}`"
                    )));
                }
            }
            match brain_from_adjoints(h, f, g) {
                Ok(_) => {
                    writeln!(out, "{left} -| {mid}: verified")?;
                    writeln!(out, "{mid} -| {right}: verified")?;
                    writeln!(out, "F = {}", object_map(f))?;
                    writeln!(out, "BRAIN FUNCTOR: verified")?;
                    Ok(0)
                }
                Err(report) => {
                    writeln!(out, "BRAIN FUNCTOR: not verified")?;
                    violations(out, &report)?;
                    Ok(1)
                }
            }
        }
        Command::Gallery {
            name,
            params,
            emit_spec,
        } => {
            let fixture = build_fixture(&name, &parse_params(&params)?)?;
            if emit_spec {
                write!(out, "{}", serialize(&fixture.document))?;
                return Ok(0);
            }
            let shown: Vec<String> = fixture
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(out, "fixture {} ({})", fixture.name, shown.join(", "))?;
            let mut code = 0;
            for o in fixture.check() {
                writeln!(
                    out,
                    "  {:<4} {}",
                    if o.passed { "ok" } else { "FAIL" },
                    o.expectation
                )?;
                for d in &o.detail {
                    writeln!(out, "       {d}")?;
                }
                if !o.passed {
                    code = 1;
                }
            }
            Ok(code)
        }
        Command::ReportSelection {
            file,
            het: h,
            element,
        } => {
            let doc = load(&file)?;
            let het = het(&doc, &h)?;
            let d = het.element(&element)?;
            match Semiadjunction::build_left(het.clone()) {
                Ok(semi) => {
                    write!(out, "{}", selection_report(&semi, d)?)?;
                    Ok(0)
                }
                Err(report) => {
                    writeln!(out, "{h}: not representable on the left")?;
                    violations(out, &report)?;
                    Ok(1)
                }
            }
        }
        Command::EmitDot { kind } => match kind {
            DotKind::Square {
                file,
                het: h,
                element,
            } => {
                let doc = load(&file)?;
                let het = het(&doc, &h)?;
                let d = het.element(&element)?;
                match adjunction_for(het.clone()) {
                    Ok(adj) => {
                        write!(out, "{}", dot::square_dot(&adj, d)?)?;
                        Ok(0)
                    }
                    Err(report) => {
                        writeln!(out, "ADJUNCTION: not verified, nothing to draw")?;
                        violations(out, &report)?;
                        Ok(1)
                    }
                }
            }
            DotKind::Butterfly {
                file,
                functor: f,
                het_out,
                het_in,
                out_element,
                in_element,
            } => {
                let doc = load(&file)?;
                let f = functor(&doc, &f)?;
                let (o, i) = (het(&doc, &het_out)?, het(&doc, &het_in)?);
                same_shape(o, f.source(), f.target(), &het_out)?;
                same_shape(i, f.target(), f.source(), &het_in)?;
                let (d_out, d_in) = (o.element(&out_element)?, i.element(&in_element)?);
                if o.src(d_out) != i.dst(d_in) {
                    return Err(InputError(format!(
                        "`{out_element}` and `{in_element}` do not meet at the same object"
                    )));
                }
                match check_brain(f, o.clone(), i.clone()) {
                    Ok(brain) => {
                        write!(out, "{}", dot::butterfly_dot(&brain, d_out, d_in)?)?;
                        Ok(0)
                    }
                    Err(report) => {
                        writeln!(out, "BRAIN FUNCTOR: not verified, nothing to draw")?;
                        violations(out, &report)?;
                        Ok(1)
                    }
                }
            }
        },
    }
}

fn same_shape(
    het: &HetBifunctor,
    sending: &Arc<FinCategory>,
    receiving: &Arc<FinCategory>,
    name: &str,
) -> Result<(), InputError> {
    if het.sending() != sending || het.receiving() != receiving {
        return Err(InputError(format!(
            "het `{name}` does not match the functor's categories"
        )));
    }
    Ok(())
}
