//! Command-line front end. Every report ends with one `VERDICT:` line.
//!
//! Exit codes: 0 when a verdict was produced, 1 for a failed precondition,
//! 2 for an internal assertion failure.

pub mod expr;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use frobform::corpus;
use frobform::homothety::{det_class_with_bound, CentralNormOutcome, ProbeConfig, Similarity, Verdict};
use frobform::{
    automorphism_order, conjecture_probe, find_frobenius_functional, form_from_functional, functional_from_form,
    homothety_probe, inner_order, nakayama, norm, parse_algebra_file, straighten_form, twist, write_algebra_file,
    Algebra, AlgebraFile, Element, FieldSpec, Form, NormContext,
};
use thiserror::Error;

pub use expr::{parse_element, ExprError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] frobform::Error),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(frobform::Error::Assertion(_)) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Session-wide bounds and seed; each can be set by flag or environment.
#[derive(Args, Debug, Clone, Copy, PartialEq, Eq)]
pub struct SessionConfig {
    /// Seed for every randomized search
    #[arg(long, global = true, env = "FROBFORM_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest automorphism order or inner order searched
    #[arg(long, global = true, env = "FROBFORM_ORDER_BOUND", default_value_t = 256)]
    pub order_bound: usize,
    /// Number of trials for `conjecture`
    #[arg(long, global = true, env = "FROBFORM_TRIALS", default_value_t = 200)]
    pub trials: usize,
    /// Trial-division bound for square classes over Q
    #[arg(long, global = true, env = "FROBFORM_FACTOR_BOUND", default_value_t = 1_000_000)]
    pub factor_bound: u64,
}

impl SessionConfig {
    fn check(&self) -> CliResult<()> {
        if self.order_bound == 0 || self.trials == 0 || self.factor_bound == 0 {
            return Err(CliError::Usage("order bound, trials and factor bound must be positive".into()));
        }
        Ok(())
    }

    fn probe(&self) -> ProbeConfig {
        ProbeConfig {
            order_bound: self.order_bound,
            factor_bound: self.factor_bound,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "frobform", version, about = "Forms on Frobenius algebras over Q and GF(p)")]
struct Cli {
    #[command(flatten)]
    config: SessionConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FormArgs {
    /// Algebra file, or `-` for standard input
    file: String,
    /// Name of the functional in the file
    #[arg(long, default_value = "lambda")]
    functional: String,
}

#[derive(Args, Debug)]
struct UnitArgs {
    #[command(flatten)]
    form: FormArgs,
    /// Unit as an expression in the basis names, e.g. "1 + x - y"
    #[arg(long)]
    unit: String,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// One of nakayama_nesbitt, extended_nn, planar_quartic, quartic_companion, truncated_poly, heisenberg27
    name: String,
    /// Q, GF(p) or p
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    #[arg(long)]
    n: Option<String>,
    /// Output file; standard output when absent or `-`
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check associativity, the unit and any declared radical
    Validate { file: String },
    /// Basis of the Jacobson radical
    Radical { file: String },
    /// Radical filtration, when the algebra is local
    Local { file: String },
    /// Search for a nondegenerate functional
    Frobenius { file: String },
    /// Matrix of the form of a functional
    Form(FormArgs),
    /// Nakayama automorphism, its order and inner order
    Nakayama(FormArgs),
    /// σ-norm of a unit
    Norm(UnitArgs),
    /// Twist the form by a unit
    Twist {
        #[command(flatten)]
        unit: UnitArgs,
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Twist to a form whose Nakayama automorphism has finite order
    Straighten(FormArgs),
    /// Determinant square class of the form
    Detclass(FormArgs),
    /// Homothety checks for the form against its twist by a unit
    Probe(UnitArgs),
    /// Random search for units with central norm whose twist is obstructed
    Conjecture(FormArgs),
    /// Write a built-in example algebra
    Corpus(CorpusArgs),
}

/// Runs a command line (including the program name) with standard input as `-`.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut stdin = std::io::stdin();
    run_with_input(args, &mut stdin)
}

/// As [`run`], reading `-` from `input`.
pub fn run_with_input<I, T>(args: I, input: &mut dyn Read) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.to_string());
        }
    };
    let mut out = String::new();
    match dispatch(&cli, input, &mut out) {
        Ok(()) => (0, out),
        Err(e) => {
            let kind = if e.exit_code() == 2 { "ASSERTION" } else { "ERROR" };
            let _ = writeln!(out, "VERDICT: {kind} {e}");
            (e.exit_code(), out)
        }
    }
}

fn read_source(path: &str, input: &mut dyn Read) -> CliResult<String> {
    if path == "-" {
        let mut text = String::new();
        input
            .read_to_string(&mut text)
            .map_err(|e| CliError::Io(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("reading {path}: {e}")))
    }
}

fn write_target(path: &str, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("writing {path}: {e}")))
}

fn load(path: &str, input: &mut dyn Read) -> CliResult<AlgebraFile> {
    Ok(parse_algebra_file(&read_source(path, input)?)?)
}

fn load_form(args: &FormArgs, input: &mut dyn Read) -> CliResult<(AlgebraFile, Form)> {
    let file = load(&args.file, input)?;
    let form = form_from_functional(&file.algebra, file.functional(&args.functional)?)?;
    Ok((file, form))
}

fn parse_unit(alg: &Algebra, text: &str) -> CliResult<Element> {
    let u = parse_element(text, alg)?;
    if !alg.is_unit(&u) {
        return Err(frobform::Error::NotAUnit.into());
    }
    Ok(u)
}

fn parse_field(text: &str) -> CliResult<FieldSpec> {
    let t = text.trim();
    if t == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix("GF"))
        .unwrap_or(t);
    let p = digits
        .parse()
        .map_err(|_| CliError::Usage(format!("field must be Q, GF(p) or a prime, not `{text}`")))?;
    Ok(FieldSpec::prime(p)?)
}

fn list(alg: &Algebra, xs: &[Element]) -> String {
    xs.iter().map(|x| alg.format(x)).collect::<Vec<_>>().join(", ")
}

fn covector(c: &[frobform::FieldElement]) -> String {
    let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn dispatch(cli: &Cli, input: &mut dyn Read, out: &mut String) -> CliResult<()> {
    let config = cli.config;
    config.check()?;
    macro_rules! say {
        ($($t:tt)*) => {{ let _ = writeln!(out, $($t)*); }};
    }
    match &cli.command {
        Command::Validate { file } => {
            let f = load(file, input)?;
            let a = &f.algebra;
            say!("field: {}", a.field());
            say!("dimension: {}", a.dim());
            say!("basis: {}", a.basis_names().join(" "));
            say!("commutative: {}", a.is_commutative());
            for (name, lambda) in &f.functionals {
                say!("functional {name}: {}", covector(&lambda.covector));
            }
            say!("VERDICT: VALID");
        }
        Command::Radical { file } => {
            let f = load(file, input)?;
            let rad = f.algebra.radical()?;
            say!("radical basis: {}", list(&f.algebra, &rad));
            say!("VERDICT: RADICAL DIM {}", rad.len());
        }
        Command::Local { file } => {
            let f = load(file, input)?;
            let a = &f.algebra;
            match a.local_structure()? {
                Some(l) => {
                    say!("nilpotency: {}", l.nilpotency);
                    say!("layer sizes: {:?}", l.layer_sizes);
                    say!("filtered basis: {}", list(a, &l.filtered_basis));
                    say!("VERDICT: LOCAL");
                }
                None => say!("VERDICT: NOT-LOCAL"),
            }
        }
        Command::Frobenius { file } => {
            let f = load(file, input)?;
            match find_frobenius_functional(&f.algebra, config.seed, 64) {
                Ok(lambda) => {
                    say!("functional: {}", covector(&lambda.covector));
                    say!("VERDICT: FROBENIUS");
                }
                Err(frobform::Error::Inconclusive { attempts }) => {
                    say!("no nondegenerate functional in {attempts} attempts");
                    say!("VERDICT: INCONCLUSIVE");
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Form(args) => {
            let (_, form) = load_form(args, input)?;
            let _ = write!(out, "{}", form.matrix());
            say!("symmetric: {}", form.is_symmetric());
            say!("VERDICT: FORM {}", if form.is_symmetric() { "SYMMETRIC" } else { "NONSYMMETRIC" });
        }
        Command::Nakayama(args) => {
            let (f, form) = load_form(args, input)?;
            let a = &f.algebra;
            let sigma = nakayama(a, &form)?;
            say!("sigma:");
            let _ = write!(out, "{sigma}");
            let order = automorphism_order(&sigma, config.order_bound);
            match order {
                Some(n) => say!("order: {n}"),
                None => say!("order: none up to {}", config.order_bound),
            }
            match inner_order(a, &sigma, config.order_bound) {
                Ok(Some((n, w))) => say!("inner order: {n} (witness {})", a.format(&w)),
                Ok(None) => say!("inner order: none up to {}", config.order_bound),
                Err(frobform::Error::Incomplete) => say!("inner order: undetermined (algebra not local)"),
                Err(e) => return Err(e.into()),
            }
            match order {
                Some(n) => say!("VERDICT: ORDER {n}"),
                None => say!("VERDICT: ORDER NONE"),
            }
        }
        Command::Norm(args) => {
            let (f, form) = load_form(&args.form, input)?;
            let a = &f.algebra;
            let u = parse_unit(a, &args.unit)?;
            let sigma = nakayama(a, &form)?;
            let (n, _) = inner_order(a, &sigma, config.order_bound)?
                .ok_or(frobform::Error::OrderBoundExceeded(config.order_bound))?;
            let ctx = NormContext::new(a, sigma, n)?;
            let value = norm(a, &ctx, &u)?;
            let central = a.is_central(&value);
            say!("inner order: {n}");
            say!("norm: {}", a.format(&value));
            say!("central: {central}");
            say!("VERDICT: {}", if central { "CENTRAL" } else { "NONCENTRAL" });
        }
        Command::Twist { unit, output } => {
            let (mut f, form) = load_form(&unit.form, input)?;
            let u = parse_unit(&f.algebra, &unit.unit)?;
            let twisted = twist(&f.algebra, &form, &u)?;
            let name = format!("{}_twisted", unit.form.functional);
            let lambda = functional_from_form(&f.algebra, &twisted);
            if output.as_deref() == Some("-") {
                // the file alone, so it can be piped into another command
                f.functionals.insert(name, lambda);
                out.push_str(&write_algebra_file(&f));
                return Ok(());
            }
            let _ = write!(out, "{}", twisted.matrix());
            say!("functional {name}: {}", covector(&lambda.covector));
            if let Some(path) = output {
                f.functionals.insert(name.clone(), lambda);
                write_target(path, &write_algebra_file(&f))?;
                say!("wrote {path}");
            }
            say!("VERDICT: TWISTED {name}");
        }
        Command::Straighten(args) => {
            let (f, form) = load_form(args, input)?;
            let a = &f.algebra;
            let s = straighten_form(a, &form, config.order_bound)?;
            say!("inner order: {}", s.order);
            say!("inner witness: {}", a.format(&s.inner_witness));
            say!("unit: {}", a.format(&s.unit));
            let _ = write!(out, "{}", s.form.matrix());
            say!("VERDICT: STRAIGHTENED ORDER {}", s.order);
        }
        Command::Detclass(args) => {
            let (_, form) = load_form(args, input)?;
            say!("det: {}", form.matrix().det()?);
            let class = det_class_with_bound(&form, config.factor_bound)?;
            say!("VERDICT: CLASS {class}");
        }
        Command::Probe(args) => {
            let (f, form) = load_form(&args.form, input)?;
            let a = &f.algebra;
            let u = parse_unit(a, &args.unit)?;
            let other = twist(a, &form, &u)?;
            let report = homothety_probe(a, &form, &other, config.probe())?;
            write_details(a, &report.details, out);
            match &report.verdict {
                Verdict::WitnessFound(w) => {
                    say!("witness alpha: {}", w.alpha);
                    say!("witness V:");
                    let _ = write!(out, "{}", w.v);
                    say!("VERDICT: WITNESS");
                }
                Verdict::Obstructed(reason) => say!("VERDICT: OBSTRUCTED {reason}"),
                Verdict::Inconclusive => say!("VERDICT: INCONCLUSIVE"),
            }
        }
        Command::Conjecture(args) => {
            let (f, form) = load_form(args, input)?;
            let a = &f.algebra;
            let s = conjecture_probe(a, &form, config.trials, config.seed, config.probe())?;
            say!("trials: {}", s.trials);
            say!("seed: {}", s.seed);
            say!("nakayama order: {}", s.order);
            say!("central norm, unobstructed: {}", s.central_unobstructed);
            say!("central norm, obstructed: {}", s.central_obstructed);
            say!("noncentral norm, obstructed: {}", s.noncentral_obstructed);
            say!("noncentral norm, inconclusive: {}", s.noncentral_inconclusive);
            for c in &s.candidates {
                say!("candidate trial {}:", c.trial);
                say!("  algebra: {} over {}", a.basis_names().join(" "), a.field());
                say!("  u: {}", a.format(&c.unit));
                say!("  norm: {}", a.format(&c.norm));
                if let Verdict::Obstructed(reason) = &c.report.verdict {
                    say!("  obstruction: {reason}");
                }
                write_details(a, &c.report.details, out);
            }
            say!("VERDICT: CANDIDATES {}", s.candidates.len());
        }
        Command::Corpus(args) => {
            let field = parse_field(&args.field)?;
            let mut params = HashMap::new();
            for (key, value) in [
                ("alpha", &args.alpha),
                ("a", &args.a),
                ("b", &args.b),
                ("c", &args.c),
                ("delta", &args.delta),
                ("n", &args.n),
            ] {
                if let Some(v) = value {
                    params.insert(key.to_string(), v.clone());
                }
            }
            let entry = corpus::build(&args.name, field, &params)?;
            let mut file = AlgebraFile::new(entry.algebra);
            file.functionals.insert("lambda".into(), entry.functional);
            let text = write_algebra_file(&file);
            match args.output.as_deref() {
                None | Some("-") => out.push_str(&text),
                Some(path) => {
                    write_target(path, &text)?;
                    say!("wrote {path}");
                    say!("VERDICT: WROTE {}", entry.name);
                }
            }
        }
    }
    Ok(())
}

fn write_details(a: &Algebra, d: &frobform::homothety::ProbeDetails, out: &mut String) {
    let _ = writeln!(out, "unit: {}", a.format(&d.unit));
    let _ = writeln!(out, "unit central: {}", d.unit_central);
    let _ = writeln!(out, "forms symmetric: {} / {}", d.first_symmetric, d.second_symmetric);
    let norm_line = match &d.central_norm {
        CentralNormOutcome::Passes { order, norm } => format!("passes (order {order}, norm {})", a.format(norm)),
        CentralNormOutcome::Fails { order, norm } => format!("fails (order {order}, norm {})", a.format(norm)),
        CentralNormOutcome::NotApplicable => "not applicable (no finite order)".into(),
    };
    let _ = writeln!(out, "central norm: {norm_line}");
    let sim = match d.similarity {
        Similarity::Similar => "similar",
        Similarity::NotSimilar => "not similar",
    };
    let _ = writeln!(out, "nakayama matrices: {sim}");
    match &d.det_classes {
        Some((x, y)) => {
            let _ = writeln!(out, "det classes: {x} / {y}");
        }
        None => {
            let _ = writeln!(out, "det classes: odd dimension, not compared");
        }
    }
}
