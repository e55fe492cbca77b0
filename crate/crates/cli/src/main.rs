//! `bsato`: b-functions and multiplier ideals of monomial ideals.

mod doc;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use bsato::conegen::af_generators;
use bsato::newton::check_roots_with;
use bsato::{
    bernstein_sato, bw_generator, compose_thom_sebastiani, Error, ExponentMatrix, FactoredBPoly,
    NewtonPolyhedron, Rational, WeightVector,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use doc::{FactoredPolyDoc, InputSpec};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_COMPUTE: u8 = 3;

#[derive(Parser)]
#[command(name = "bsato", version, about = "Bernstein-Sato polynomials and multiplier ideals of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Omit metadata (counts and timings) from the output.
    #[arg(long, global = true)]
    no_meta: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// The b-function b_f(s) of the ideal.
    Bf { input: PathBuf },
    /// b_Z(s) = b_f(s - codim).
    Bz { input: PathBuf },
    /// Jumping coefficients up to a bound, with witnesses.
    Jumps {
        input: PathBuf,
        /// Largest value to report (default: lct + number of variables).
        #[arg(long)]
        max: Option<String>,
    },
    /// Whether x^exponent lies in the multiplier ideal of exponent alpha.
    Member {
        input: PathBuf,
        /// Comma-separated exponent vector.
        #[arg(long, allow_hyphen_values = true)]
        exponent: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Compares the threshold and jumps with the roots of b_f(-s); exits 0
    /// only when the comparison passes.
    Check { input: PathBuf },
    /// Thom-Sebastiani composition of two factored b-functions.
    Compose { bf: PathBuf, bg: PathBuf },
    /// The generator b_{f,w} of the weighted ideal.
    Bw {
        input: PathBuf,
        /// Comma-separated nonnegative weights, one per monomial.
        #[arg(long)]
        w: String,
    },
    /// Generators of the binomial-product ideal.
    Gens { input: PathBuf },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidMatrix(_)
            | Error::DimensionMismatch { .. }
            | Error::NonPositiveCoordinate(_)
            | Error::BelowThreshold { .. }
            | Error::TooManyVariables { .. }
            | Error::BadShiftSum(_)
            | Error::EmptyInput => EXIT_INPUT,
            _ => EXIT_COMPUTE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// A command result: the JSON document and its text rendering.
struct Report {
    json: Value,
    text: String,
    exit: u8,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("serializable")
                ),
                Format::Text => print!("{}", report.text),
            }
            ExitCode::from(report.exit)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let meta = !cli.no_meta;
    match &cli.command {
        Command::Bf { input } => cmd_bf(&read_matrix(input)?, meta),
        Command::Bz { input } => cmd_bz(&read_matrix(input)?, meta),
        Command::Jumps { input, max } => cmd_jumps(&read_matrix(input)?, max.as_deref()),
        Command::Member {
            input,
            exponent,
            alpha,
        } => cmd_member(&read_matrix(input)?, exponent, alpha),
        Command::Check { input } => cmd_check(&read_matrix(input)?, meta),
        Command::Compose { bf, bg } => cmd_compose(bf, bg),
        Command::Bw { input, w } => cmd_bw(&read_matrix(input)?, w),
        Command::Gens { input } => cmd_gens(&read_matrix(input)?),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<ExponentMatrix, Failure> {
    let spec: InputSpec = read_json(path)?;
    let a = spec
        .to_matrix()
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    if a.duplicates_removed() > 0 {
        eprintln!(
            "warning: {} duplicate monomial(s) removed from {}",
            a.duplicates_removed(),
            path.display()
        );
    }
    Ok(a)
}

fn parse_rational(s: &str, what: &str) -> Result<Rational, Failure> {
    s.trim()
        .parse()
        .map_err(|e| Failure::input(format!("invalid {what} {s:?}: {e}")))
}

fn parse_list(s: &str, what: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|e| Failure::input(format!("invalid {what} entry {x:?}: {e}")))
        })
        .collect()
}

fn parse_nonnegative(s: &str, what: &str, len: usize) -> Result<Vec<u64>, Failure> {
    let v = parse_list(s, what)?;
    if v.len() != len {
        return Err(Failure::input(format!(
            "{what} has {} entries, expected {len}",
            v.len()
        )));
    }
    v.into_iter()
        .map(|x| u64::try_from(x).map_err(|_| Failure::input(format!("{what} entry {x} is negative"))))
        .collect()
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(Rational::to_string).collect()
}

fn join(v: &[Rational]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    rationals(v).join(", ")
}

fn factored_json(b: &FactoredBPoly) -> Value {
    serde_json::to_value(FactoredPolyDoc::from(b)).expect("serializable")
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn cmd_bf(a: &ExponentMatrix, meta: bool) -> Result<Report, Failure> {
    let res = bernstein_sato(a)?;
    let mut json = factored_json(&res.bf);
    json["expanded"] = json!(res.bf_expanded.to_string());
    let mut text = format!("b_f(s) = {}\n", res.bf);
    if meta {
        json["meta"] = json!({
            "af_generators": res.af_generator_count,
            "elimination_inputs": res.elimination_input_count,
            "codim": res.codim,
            "bz": factored_json(&res.bz),
            "elapsed_ms": res.elapsed.as_secs_f64() * 1e3,
        });
        text += &format!(
            "expanded: {}\ngenerators: {} ({} after dropping multiples)\ncodim: {}\nb_Z(s) = {}\nelapsed: {:.3} ms\n",
            res.bf_expanded,
            res.af_generator_count,
            res.elimination_input_count,
            res.codim,
            res.bz,
            res.elapsed.as_secs_f64() * 1e3
        );
    }
    Ok(Report { json, text, exit: 0 })
}

fn cmd_bz(a: &ExponentMatrix, meta: bool) -> Result<Report, Failure> {
    let res = bernstein_sato(a)?;
    let mut json = factored_json(&res.bz);
    json["codim"] = json!(res.codim);
    let mut text = format!("b_Z(s) = {}\ncodim: {}\n", res.bz, res.codim);
    if meta {
        json["meta"] = json!({
            "bf": factored_json(&res.bf),
            "elapsed_ms": res.elapsed.as_secs_f64() * 1e3,
        });
        text += &format!(
            "b_f(s) = {}\nelapsed: {:.3} ms\n",
            res.bf,
            res.elapsed.as_secs_f64() * 1e3
        );
    }
    Ok(Report { json, text, exit: 0 })
}

fn cmd_jumps(a: &ExponentMatrix, max: Option<&str>) -> Result<Report, Failure> {
    let p = NewtonPolyhedron::new(a)?;
    let max = match max {
        Some(m) => parse_rational(m, "--max")?,
        None => p.lct() + Rational::from(a.n()),
    };
    let report = p.report(&max)?;
    let jumps: Vec<Value> = report
        .jumps
        .iter()
        .map(|j| json!({"value": j.value.to_string(), "witness": j.witness}))
        .collect();
    let json = json!({
        "lct": report.lct.to_string(),
        "max": report.max.to_string(),
        "bound": report.bound,
        "jumps": jumps,
    });
    let mut text = format!(
        "lct: {}\nmax: {}\nsearch box: {{1..{}}}^{}\n",
        report.lct,
        report.max,
        report.bound,
        a.n()
    );
    for j in &report.jumps {
        let w: Vec<String> = j.witness.iter().map(u64::to_string).collect();
        text += &format!("{}  at ({})\n", j.value, w.join(", "));
    }
    Ok(Report { json, text, exit: 0 })
}

fn cmd_member(a: &ExponentMatrix, exponent: &str, alpha: &str) -> Result<Report, Failure> {
    let nu = parse_nonnegative(exponent, "--exponent", a.n())?;
    let alpha = parse_rational(alpha, "--alpha")?;
    if !alpha.is_positive() {
        return Err(Failure::input(format!("--alpha must be positive, got {alpha}")));
    }
    let member = NewtonPolyhedron::new(a)?.multiplier_membership(&nu, &alpha)?;
    Ok(Report {
        json: json!({"exponent": nu, "alpha": alpha.to_string(), "member": member}),
        text: format!("{member}\n"),
        exit: 0,
    })
}

fn cmd_check(a: &ExponentMatrix, meta: bool) -> Result<Report, Failure> {
    let start = Instant::now();
    let bs = bernstein_sato(a)?;
    let report = check_roots_with(a, &bs)?;
    let t = report.root_check.expect("check fills the comparison");
    let pass = t.passed();
    let roots: Vec<Value> = t
        .root_is_jump
        .iter()
        .map(|(alpha, jump)| {
            json!({
                "root": (-alpha.clone()).to_string(),
                "mult": t.bf.multiplicity(alpha),
                "jump": jump,
            })
        })
        .collect();
    let mut json = json!({
        "pass": pass,
        "lct": report.lct.to_string(),
        "min_root": t.min_root.to_string(),
        "lct_matches": t.lct_matches,
        "window_jumps": rationals(&t.window_jumps),
        "missing_from_roots": rationals(&t.missing_from_roots),
        "roots": roots,
        "bf": factored_json(&t.bf),
    });
    let jump_roots: Vec<Rational> = t.root_is_jump.iter().filter(|r| r.1).map(|r| r.0.clone()).collect();
    let other_roots: Vec<Rational> = t.root_is_jump.iter().filter(|r| !r.1).map(|r| r.0.clone()).collect();
    let mut text = format!(
        "b_f(s) = {}\nlct: {}\nsmallest root of b_f(-s): {}\nlct matches: {}\njumps in [lct, lct+1): {}\njumps missing from roots: {}\nroots that are jumps: {}\nroots that are not jumps: {}\nresult: {}\n",
        t.bf,
        report.lct,
        t.min_root,
        t.lct_matches,
        join(&t.window_jumps),
        join(&t.missing_from_roots),
        join(&jump_roots),
        join(&other_roots),
        if pass { "pass" } else { "FAIL" }
    );
    if meta {
        let ms = elapsed_ms(start);
        json["meta"] = json!({"elapsed_ms": ms, "search_bound": report.bound});
        text += &format!("elapsed: {ms:.3} ms\n");
    }
    Ok(Report {
        json,
        text,
        exit: if pass { 0 } else { EXIT_COMPUTE },
    })
}

fn read_factored(path: &Path) -> Result<FactoredBPoly, Failure> {
    let doc: FactoredPolyDoc = read_json(path)?;
    doc.to_factored()
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn cmd_compose(bf: &Path, bg: &Path) -> Result<Report, Failure> {
    let h = compose_thom_sebastiani(&read_factored(bf)?, &read_factored(bg)?);
    Ok(Report {
        json: factored_json(&h),
        text: format!("{h}\n"),
        exit: 0,
    })
}

fn cmd_bw(a: &ExponentMatrix, w: &str) -> Result<Report, Failure> {
    let w = parse_nonnegative(w, "--w", a.r())?;
    let w = w
        .into_iter()
        .map(|x| u32::try_from(x).map_err(|_| Failure::input(format!("weight {x} is too large"))))
        .collect::<Result<Vec<u32>, Failure>>()?;
    let g = bw_generator(a, &WeightVector(w.clone()))?;
    Ok(Report {
        json: json!({"w": w, "generator": g.to_string()}),
        text: format!("{g}\n"),
        exit: 0,
    })
}

fn cmd_gens(a: &ExponentMatrix) -> Result<Report, Failure> {
    let gens: Vec<String> = af_generators(a).iter().map(ToString::to_string).collect();
    let mut text = String::new();
    for g in &gens {
        text += g;
        text.push('\n');
    }
    Ok(Report {
        json: json!({"count": gens.len(), "generators": gens}),
        text,
        exit: 0,
    })
}
