//! Command line surface and dispatch.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fd_core::chain::cells::LemmaVariant;
use fd_core::chain::checks::{oracle_check, OracleParams};
use fd_core::hurewicz::{check_divisible, describe, reproduce_paper_computations, Verdict};
use fd_core::models::{by_id, qs0};
use fd_core::{ops, verify, Polynomial, VerificationReport};
use serde::Serialize;

use crate::{imj, json, parse};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "fdisks", version, about = "Homology operations of framed little disks algebras over F2")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression and print its canonical polynomial.
    Normalize {
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 32, value_parser = positive)]
        max_degree: u32,
        expr: String,
    },
    /// Sweep a relation over the basis of a model.
    Verify {
        #[arg(long)]
        model: String,
        #[arg(long)]
        relation: String,
        #[arg(long, default_value_t = 16, value_parser = positive)]
        max_degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Print BV of every basis monomial up to the degree bound.
    BvTable {
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 16, value_parser = positive)]
        max_degree: u32,
    },
    /// Run a chain-level oracle check.
    ChainCheck {
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Degrees of the coefficient generators.
        #[arg(long, value_delimiter = ',', default_value = "1,1,2")]
        degrees: Vec<u32>,
        /// Degree of the class x in the module-level checks.
        #[arg(long, default_value_t = 1)]
        base: u32,
        /// Use the literal statement of the cellular action lemma.
        #[arg(long)]
        literal_lemma: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Hurewicz images of image-of-J classes.
    Hurewicz(HurewiczArgs),
}

#[derive(Args, Debug)]
pub struct Output {
    /// In text mode, also list passing records.
    #[arg(long)]
    pub all: bool,
}

#[derive(Args, Debug)]
pub struct HurewiczArgs {
    /// Decide a single composite `ψ∘θ` instead of replaying the computations.
    #[arg(long, requires = "theta_degree")]
    pub psi_degree: Option<u32>,
    #[arg(long, requires = "psi_degree")]
    pub theta_degree: Option<u32>,
    #[arg(long)]
    pub imj_table: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

fn positive(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

/// Rendered output and exit code.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_PASS }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE }
    }

    fn report(r: &VerificationReport, format: Format, all: bool) -> Self {
        let stdout = match format {
            Format::Json => json::emit_json(r),
            Format::Text => render_text(r, all),
        };
        Outcome { stdout, stderr: String::new(), code: if r.passed() { EXIT_PASS } else { EXIT_FAIL } }
    }
}

pub fn render_text(r: &VerificationReport, all: bool) -> String {
    let mut s = format!("check: {}\n", r.check);
    if !r.params.is_empty() {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s += &format!("params: {}\n", params.join(" "));
    }
    for rec in &r.records {
        if rec.pass && all {
            s += &format!("ok    {} = {}\n", rec.input, rec.actual);
        } else if !rec.pass {
            s += &format!("FAIL  {}: expected {}, got {}\n", rec.input, rec.expected, rec.actual);
        }
    }
    s += &format!("summary: {} pass, {} fail\n", r.pass_count(), r.fail_count());
    s
}

pub fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Normalize { model, max_degree, expr } => {
            let e = match parse::parse(expr) {
                Ok(e) => e,
                Err(err) => return Outcome::usage(err),
            };
            let value = match by_id(model, *max_degree).and_then(|m| e.eval(&m)) {
                Ok(v) => v,
                Err(err) => return Outcome::usage(err),
            };
            Outcome::ok(match format {
                Format::Text => format!("{value}\n"),
                Format::Json => json::to_line(&Normalized { model, input: e.to_string(), value: value.to_string() }),
            })
        }
        Command::Verify { model, relation, max_degree, seed, output } => {
            let report = by_id(model, *max_degree)
                .and_then(|m| verify::verify_relation_seeded(relation, &m, *max_degree, *seed));
            match report {
                Ok(r) => Outcome::report(&r, format, output.all),
                Err(err) => Outcome::usage(err),
            }
        }
        Command::BvTable { model, max_degree } => match bv_table(model, *max_degree) {
            Ok(rows) => Outcome::ok(match format {
                Format::Text => rows.iter().map(|r| format!("BV({}) = {}\n", r.x, r.bv)).collect(),
                Format::Json => json::to_line(&BvTable {
                    model,
                    max_degree: *max_degree,
                    table: rows,
                    version: fd_core::ENGINE_VERSION,
                }),
            }),
            Err(err) => Outcome::usage(err),
        },
        Command::ChainCheck { check, n, degrees, base, literal_lemma, output } => {
            let lemma = if *literal_lemma { LemmaVariant::Literal } else { LemmaVariant::Proof };
            let p = OracleParams::new(*n).with_degrees(degrees).with_base(*base).with_lemma(lemma);
            match oracle_check(check, &p) {
                Ok(r) => Outcome::report(&r, format, output.all),
                Err(err) => Outcome::usage(err),
            }
        }
        Command::Hurewicz(args) => hurewicz(args, format),
    }
}

#[derive(Serialize)]
struct Normalized<'a> {
    model: &'a str,
    input: String,
    value: String,
}

#[derive(Serialize)]
struct BvRow {
    x: String,
    bv: String,
}

#[derive(Serialize)]
struct BvTable<'a> {
    model: &'a str,
    max_degree: u32,
    table: Vec<BvRow>,
    version: &'a str,
}

fn bv_table(model: &str, max_degree: u32) -> fd_core::Result<Vec<BvRow>> {
    let m = by_id(model, max_degree)?;
    m.basis(max_degree)
        .into_iter()
        .map(|mono| {
            let x = Polynomial::from(mono);
            Ok(BvRow { bv: ops::bv(&x, &m)?.to_string(), x: x.to_string() })
        })
        .collect()
}

fn hurewicz(args: &HurewiczArgs, format: Format) -> Outcome {
    let table = match imj::load_table(args.imj_table.as_deref()) {
        Ok(t) => t,
        Err(err) => return Outcome::usage(err),
    };
    if let (Some(p), Some(t)) = (args.psi_degree, args.theta_degree) {
        return match check_divisible(p, t, &table) {
            Ok(d) => {
                let mut r = VerificationReport::new("divisible").with_param("psi-degree", p).with_param("theta-degree", t);
                r.record(format!("ψ{p}∘θ{t}"), d.verdict.as_str(), describe(&d), true);
                Outcome::report(&r, format, true)
            }
            Err(err) => Outcome::usage(err),
        };
    }
    let frag = match qs0::qs0_fragment(&qs0::QS0FragmentConfig::default()) {
        Ok(f) => f,
        Err(err) => return Outcome::usage(err),
    };
    let mut r = match reproduce_paper_computations(&frag, &table) {
        Ok(r) => r,
        Err(err) => return Outcome::usage(err),
    };
    let mut detected = Vec::new();
    for p in (1..=7).filter(|d| table.in_image(*d)) {
        for t in 0..=16 {
            match check_divisible(p, t, &table) {
                Ok(d) if d.verdict == Verdict::Detected => detected.push(format!("({p},{t})")),
                Ok(_) => {}
                Err(err) => return Outcome::usage(err),
            }
        }
    }
    r.compare(
        "detected composites ψ∘θ, |ψ| ≤ 7, |θ| ≤ 16",
        "(1,0) (1,1) (3,0) (3,3) (7,0) (7,7)",
        detected.join(" "),
    );
    Outcome::report(&r, format, args.output.all)
}
