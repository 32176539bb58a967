mod selftest;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qinv::algebra::{format_complex, Mode, RootContext, RootScalar, DEFAULT_TOLERANCE};
use qinv::cabling::{colored_bracket, colored_bracket_at};
use qinv::diagram::{linking_matrix, parse_diagram, signature_nullity, Diagram};
use qinv::fourman::{broda_invariant, fourman_equiv_check, SpecialLink};
use qinv::rtw::{kirby_equiv_check, rtw_invariant, EquivalenceReport, SurgeryPresentation};
use qinv::skein::{bracket, check_skein, jones, skein_residual, skein_triple, TPolynomial};
use qinv::{Error, Limits};

#[derive(Parser)]
#[command(name = "qinv", version, about = "Quantum invariants of framed links, 3-manifolds and 4-manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Caps {
    /// Largest crossing count, including crossings created by cabling
    #[arg(long = "max-crossings", default_value_t = Limits::default().max_crossings)]
    max_crossings: usize,
    /// Largest color on any component
    #[arg(long = "max-color", default_value_t = Limits::default().max_color)]
    max_color: u32,
}

impl Caps {
    fn limits(&self) -> Limits {
        Limits { max_crossings: self.max_crossings, max_color: self.max_color }
    }
}

#[derive(Args, Clone, Copy)]
struct Numeric {
    /// exact (cyclotomic) or float (complex) arithmetic
    #[arg(long, default_value = "exact")]
    mode: Mode,
    /// Tolerance for float comparisons
    #[arg(long = "tol", default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Kauffman bracket
    Bracket {
        file: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Jones polynomial in A and in t = A^-4
    Jones {
        file: PathBuf,
        #[command(flatten)]
        caps: Caps,
    },
    /// Skein relation at every crossing of one diagram, or for a given
    /// triple D+ D- D0
    SkeinCheck {
        #[arg(num_args = 1..=3, required = true)]
        files: Vec<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Colored bracket, symbolic or at a root of unity
    Colored {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        colors: Vec<u32>,
        #[arg(long)]
        level: Option<u32>,
        #[command(flatten)]
        numeric: Numeric,
        #[command(flatten)]
        caps: Caps,
    },
    /// Surgery invariant of the 3-manifold presented by the diagram
    Rtw {
        file: PathBuf,
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        numeric: Numeric,
        #[command(flatten)]
        caps: Caps,
    },
    /// Invariant of the 4-manifold presented by a special link
    Broda {
        file: PathBuf,
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        numeric: Numeric,
        #[command(flatten)]
        caps: Caps,
    },
    /// Compare two presentations level by level (4-manifold invariant if
    /// either diagram has a dotted component)
    CheckEquiv {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
        #[command(flatten)]
        numeric: Numeric,
        #[command(flatten)]
        caps: Caps,
    },
    /// Linking matrix with its positive, negative and zero eigenvalue counts
    Siglk { file: PathBuf },
    /// Built-in oracle and invariance suites; `selftest list` names them
    Selftest { suites: Vec<String> },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn computation(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }

    fn from_error(context: &str, e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::Validation(_)
            | Error::ColorOutOfRange { .. }
            | Error::LevelOutOfRange { .. }
            | Error::ColorCount { .. }
            | Error::InvalidPresentation(_)
            | Error::SiteMismatch(_)
            | Error::EmptyDiagram => 2,
            Error::ResourceLimit { .. } => 3,
            _ => 1,
        };
        let message = if context.is_empty() { e.to_string() } else { format!("{context}: {e}") };
        Self { code, message }
    }
}

type Outcome = Result<Vec<String>, Failure>;

fn load(path: &Path) -> Result<Diagram, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_diagram(&text).map_err(|e| Failure::from_error(&path.display().to_string(), e))
}

fn ctx(level: u32, numeric: &Numeric) -> Result<RootContext, Failure> {
    if numeric.tol.is_nan() || numeric.tol <= 0.0 {
        return Err(Failure::input("--tol must be positive"));
    }
    Ok(RootContext::new(level, numeric.mode).with_tolerance(numeric.tol))
}

fn scalar_lines(command: &str, value: &RootScalar) -> Vec<String> {
    let mut out = Vec::new();
    if let RootScalar::Exact(c) = value {
        out.push(format!("exact: {c}"));
    }
    out.push(format!("RESULT {command} {}", format_complex(value.to_complex())));
    out
}

fn report_lines(command: &str, report: &EquivalenceReport) -> Vec<String> {
    let mut out: Vec<String> = report.to_string().lines().map(str::to_string).collect();
    out.push(format!("RESULT {command} {}", if report.equivalent() { "equal" } else { "different" }));
    out
}

/// Error mapper that names the input file(s).
fn at(files: &[&Path]) -> impl Fn(Error) -> Failure {
    let names = files.iter().map(|f| f.display().to_string()).collect::<Vec<_>>().join(", ");
    move |e| Failure::from_error(&names, e)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Bracket { file, caps } => {
            let d = load(&file)?;
            let b = bracket(&d, &caps.limits()).map_err(at(&[&file]))?;
            Ok(vec![format!("RESULT bracket {b}")])
        }
        Command::Jones { file, caps } => {
            let d = load(&file)?;
            let v = jones(&d, &caps.limits()).map_err(at(&[&file]))?;
            Ok(vec![format!("V(A) = {v}"), format!("RESULT jones {}", TPolynomial(v))])
        }
        Command::SkeinCheck { files, caps } => {
            let limits = caps.limits();
            let paths: Vec<&Path> = files.iter().map(PathBuf::as_path).collect();
            let err = at(&paths);
            match files.as_slice() {
                [one] => {
                    let d = load(one)?;
                    let mut lines = Vec::new();
                    let mut ok = true;
                    for site in 0..d.crossing_count() {
                        let (p, m, z) = skein_triple(&d, site);
                        let check = skein_residual(&p, &m, &z, &limits).map_err(&err)?;
                        ok &= check.holds();
                        lines.push(format!("site {}: residual {}", site + 1, check.residual));
                    }
                    finish_check(lines, ok)
                }
                [p, m, z] => {
                    let (p, m, z) = (load(p)?, load(m)?, load(z)?);
                    let (site, check) = check_skein(&p, &m, &z, &limits).map_err(&err)?;
                    let lines = vec![
                        format!("site {}: alpha {} beta {} gamma {}", site + 1, check.alpha, check.beta, check.gamma),
                        format!("residual {}", check.residual),
                    ];
                    finish_check(lines, check.holds())
                }
                _ => Err(Failure::input("skein-check takes one diagram or a triple D+ D- D0")),
            }
        }
        Command::Colored { file, colors, level, numeric, caps } => {
            let d = load(&file)?;
            let err = at(&[&file]);
            match level {
                None => {
                    let v = colored_bracket(&d, &colors, &caps.limits()).map_err(&err)?;
                    Ok(vec![format!("RESULT colored {v}")])
                }
                Some(k) => {
                    let v = colored_bracket_at(&d, &colors, &ctx(k, &numeric)?, &caps.limits()).map_err(&err)?;
                    Ok(scalar_lines("colored", &v))
                }
            }
        }
        Command::Rtw { file, level, numeric, caps } => {
            let err = at(&[&file]);
            let p = SurgeryPresentation::new(load(&file)?).map_err(&err)?;
            let inertia = p.inertia();
            let v = rtw_invariant(&p, &ctx(level, &numeric)?, &caps.limits()).map_err(&err)?;
            let mut lines = vec![format!("b+={} b-={} nu={}", inertia.positive, inertia.negative, inertia.nullity)];
            lines.extend(scalar_lines("rtw", &v));
            Ok(lines)
        }
        Command::Broda { file, level, numeric, caps } => {
            let err = at(&[&file]);
            let s = SpecialLink::new(load(&file)?).map_err(&err)?;
            let v = broda_invariant(&s, &ctx(level, &numeric)?, &caps.limits()).map_err(&err)?;
            let mut lines = vec![format!("nu={} hopf exponent={}", v.nullity, v.hopf_exponent)];
            if v.float_fallback {
                lines.push("note: half power has no exact root; evaluated in float with the principal branch".into());
            }
            lines.extend(scalar_lines("broda", &v.value));
            Ok(lines)
        }
        Command::CheckEquiv { first, second, levels, numeric, caps } => {
            let (a, b) = (load(&first)?, load(&second)?);
            let err = at(&[&first, &second]);
            ctx(0, &numeric)?;
            let four = a.components().iter().chain(b.components()).any(|c| c.dotted);
            let report = if four {
                let (s1, s2) = (SpecialLink::new(a).map_err(&err)?, SpecialLink::new(b).map_err(&err)?);
                fourman_equiv_check(&s1, &s2, &levels, numeric.mode, numeric.tol, &caps.limits()).map_err(&err)?
            } else {
                let (p1, p2) = (SurgeryPresentation::new(a).map_err(&err)?, SurgeryPresentation::new(b).map_err(&err)?);
                kirby_equiv_check(&p1, &p2, &levels, numeric.mode, numeric.tol, &caps.limits()).map_err(&err)?
            };
            let lines = report_lines("check-equiv", &report);
            if report.equivalent() {
                Ok(lines)
            } else {
                Err(Failure { code: 1, message: lines.join("\n") })
            }
        }
        Command::Siglk { file } => {
            let d = load(&file)?;
            let m = linking_matrix(&d);
            let inertia = signature_nullity(&m);
            let mut lines: Vec<String> = m
                .rows()
                .iter()
                .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            let summary = format!("b+={} b-={} nu={}", inertia.positive, inertia.negative, inertia.nullity);
            lines.push(summary.clone());
            lines.push(format!("RESULT siglk {summary}"));
            Ok(lines)
        }
        Command::Selftest { suites } => selftest::run(&suites),
    }
}

fn finish_check(mut lines: Vec<String>, ok: bool) -> Outcome {
    lines.push(format!("RESULT skein-check {}", if ok { "ok" } else { "fail" }));
    if ok {
        Ok(lines)
    } else {
        Err(Failure::computation(lines.join("\n")))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(lines) => {
            for l in lines {
                println!("{l}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if f.message.contains("RESULT ") {
                println!("{}", f.message);
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
