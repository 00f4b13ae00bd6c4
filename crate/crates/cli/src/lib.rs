//! The `hopfinv` command line, exposed as a library so it can be driven from
//! tests without spawning processes.

mod tables;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use hopfinv::catalog::{self, CatalogSpec, FAMILIES};
use hopfinv::hopf::verify_hopf;
use hopfinv::invariants::{
    character, eval_power_polynomial, hopf_order, indicator, indicator_via_integrals, killing_gram,
    killing_radical, ratio_invariant,
};
use hopfinv::io;
use hopfinv::twist::{self, StandardTwist};
use hopfinv::{AlgElem, CycNum, Error, HopfAlgebra, Report};

pub use tables::{pointed12_table, semisimple8_table};

/// Exit status for a run whose mathematical checks all held.
pub const EXIT_OK: i32 = 0;
/// A mathematical check failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Bad input, bad usage, or an unmet precondition.
pub const EXIT_INPUT: i32 = 2;

const DEFAULT_MAX_DIM: usize = 64;

#[derive(Parser, Debug)]
#[command(
    name = "hopfinv",
    version,
    about = "Exact gauge invariants of finite-dimensional Hopf algebras"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Load algebra files even if they fail the Hopf axioms.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Hopf algebra axioms.
    Verify { file: PathBuf },
    /// Left integral Λ, right integral λ and distinguished grouplike α.
    Integral { file: PathBuf },
    /// Sweedler power P_n(Λ).
    Power {
        file: PathBuf,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: i64,
    },
    /// Indicator ν_n = tr(S∘P_{n−1}).
    Indicator {
        file: PathBuf,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: i64,
    },
    /// Least n ≥ 1 with P_n(Λ) = P_0(Λ).
    Order {
        file: PathBuf,
        #[arg(long = "max", default_value_t = 64)]
        max: u32,
    },
    /// Killing form Gram matrix and radical.
    Killing { file: PathBuf },
    /// Evaluate a polynomial in the Sweedler powers of Λ.
    Poly {
        file: PathBuf,
        poly: PathBuf,
        /// Exit with status 1 unless the value is zero.
        #[arg(long)]
        assert_zero: bool,
    },
    /// Character of a module on P_n(Λ).
    Char {
        file: PathBuf,
        rep: PathBuf,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: i64,
    },
    /// χ_V(P_n(Λ)) / χ_W(P_m(Λ)) for a unimodular algebra.
    Ratio {
        file: PathBuf,
        rep_v: PathBuf,
        rep_w: PathBuf,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: i64,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: i64,
    },
    /// Verify a twist and the transformation rules it induces.
    Twist {
        file: PathBuf,
        twist: PathBuf,
        /// Comma-separated subset of powers,lemma,dualintegral,indicators,killing.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "powers,lemma,dualintegral,indicators,killing"
        )]
        check: Vec<TwistCheck>,
    },
    /// Built-in algebras and twists.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Reproduce a distinguishing table.
    Table { which: TableName },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// List families and standard twists.
    List,
    /// Write the structure-constant file of a catalog algebra.
    Emit { family: String, params: Vec<String> },
    /// Write a standard twist file; its base algebra comes from `catalog emit`.
    Twist { name: String },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum TwistCheck {
    Powers,
    #[value(name = "lemma")]
    Splitting,
    Dualintegral,
    Indicators,
    Killing,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum TableName {
    #[value(name = "paper-12dim")]
    Pointed12,
    #[value(name = "paper-8dim")]
    Semisimple8,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a subcommand produced: a JSON document and its text rendering.
struct Output {
    json: Value,
    text: String,
    code: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            code: EXIT_OK,
        }
    }

    fn from_report(report: &Report) -> Self {
        let code = if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        };
        Output {
            json: report.to_json(),
            text: report.to_text(),
            code,
        }
    }

    fn raw(text: String) -> Self {
        Output {
            json: Value::Null,
            text,
            code: EXIT_OK,
        }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let json = cli.json;
    match execute(cli) {
        Ok(out) => {
            let stdout = if json && !out.json.is_null() {
                let mut s = serde_json::to_string_pretty(&out.json).expect("serializable");
                s.push('\n');
                s
            } else {
                out.text
            };
            Outcome {
                code: out.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn max_dim() -> usize {
    std::env::var("HOPFINV_MAX_DIM")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_DIM)
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load(path: &PathBuf, force: bool) -> Result<HopfAlgebra, Error> {
    io::load_hopf(&read(path)?, max_dim(), force)
}

fn elem_json(h: &HopfAlgebra, a: &AlgElem) -> Value {
    json!({
        "text": h.format_elem(a),
        "coeffs": a.coeffs().iter().map(io::encode_coeff).collect::<Vec<_>>(),
    })
}

fn scalar_json(c: &CycNum) -> Value {
    json!({ "text": c.to_string(), "coeff": io::encode_coeff(c) })
}

fn execute(cli: Cli) -> Result<Output, Error> {
    let force = cli.force;
    Ok(match cli.command {
        Command::Verify { file } => {
            let h = HopfAlgebra::new_unchecked(io::parse_hopf_parts(&read(&file)?, max_dim())?)?;
            let report = verify_hopf(&h);
            let mut out = Output::from_report(&report);
            if !report.all_passed() {
                out.code = EXIT_INPUT;
            }
            out
        }
        Command::Integral { file } => {
            let h = load(&file, force)?;
            let data = h.integrals()?;
            let semisimple = h.is_semisimple()?;
            let values = |v: &[CycNum]| v.iter().map(scalar_json).collect::<Vec<_>>();
            let text = format!(
                "Λ = {}\nλ = [{}]\nα = [{}]\nunimodular: {}\nsemisimple: {}\n",
                h.format_elem(&data.left),
                data.right
                    .values()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", "),
                data.alpha
                    .values()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", "),
                data.unimodular,
                semisimple,
            );
            Output::ok(
                json!({
                    "algebra": h.name(),
                    "left_integral": elem_json(&h, &data.left),
                    "right_integral": values(data.right.values()),
                    "distinguished_grouplike": values(data.alpha.values()),
                    "unimodular": data.unimodular,
                    "semisimple": semisimple,
                }),
                text,
            )
        }
        Command::Power { file, n } => {
            let h = load(&file, force)?;
            let p = h.power_of_integral(n)?;
            let text = format!("P_{n}(Λ) = {}\n", h.format_elem(&p));
            Output::ok(
                json!({ "algebra": h.name(), "n": n, "value": elem_json(&h, &p) }),
                text,
            )
        }
        Command::Indicator { file, n } => {
            let h = load(&file, force)?;
            let by_trace = indicator(&h, n);
            let by_integrals = indicator_via_integrals(&h, n)?;
            let agree = by_trace == by_integrals;
            let text = format!("ν_{n} = {by_trace}\nintegral form agrees: {agree}\n");
            let mut out = Output::ok(
                json!({
                    "algebra": h.name(),
                    "n": n,
                    "value": scalar_json(&by_trace),
                    "integral_form_agrees": agree,
                }),
                text,
            );
            if !agree {
                out.code = EXIT_CHECK_FAILED;
            }
            out
        }
        Command::Order { file, max } => {
            if max == 0 {
                return Err(Error::BadParams("--max must be at least 1".into()));
            }
            let h = load(&file, force)?;
            let lambda = h.integrals()?.left.clone();
            let order = hopf_order(&h, &lambda, max);
            let text = match order {
                Some(n) => format!("{n}\n"),
                None => format!("> {max}\n"),
            };
            Output::ok(
                json!({ "algebra": h.name(), "max": max, "order": order }),
                text,
            )
        }
        Command::Killing { file } => {
            let h = load(&file, force)?;
            let gram = killing_gram(&h);
            let rad = killing_radical(&h)?;
            let mut text = format!(
                "Gram rank: {}\nradical dimension: {}\n",
                gram.rank(),
                rad.dim()
            );
            for v in &rad.basis {
                text.push_str(&format!("  {}\n", h.format_elem(v)));
            }
            let gram_rows: Vec<Value> = (0..gram.rows())
                .map(|i| Value::Array(gram.row(i).iter().map(io::encode_coeff).collect()))
                .collect();
            Output::ok(
                json!({
                    "algebra": h.name(),
                    "gram": gram_rows,
                    "gram_rank": gram.rank(),
                    "radical_dim": rad.dim(),
                    "radical_basis": rad.basis.iter().map(|v| elem_json(&h, v)).collect::<Vec<_>>(),
                }),
                text,
            )
        }
        Command::Poly {
            file,
            poly,
            assert_zero,
        } => {
            let h = load(&file, force)?;
            let psi = io::load_poly(&read(&poly)?)?;
            let lambda = h.integrals()?.left.clone();
            let r = eval_power_polynomial(&h, &lambda, &psi)?;
            let mut text = format!(
                "{psi} = {}\nzero: {}\nhomogeneous: {}\n",
                h.format_elem(&r.value),
                r.is_zero,
                r.homogeneous
            );
            if let Some(c) = &r.caveat {
                text.push_str(&format!("caveat: {c}\n"));
            }
            let mut out = Output::ok(
                json!({
                    "algebra": h.name(),
                    "polynomial": psi.to_string(),
                    "value": elem_json(&h, &r.value),
                    "is_zero": r.is_zero,
                    "homogeneous": r.homogeneous,
                    "caveat": r.caveat,
                }),
                text,
            );
            if assert_zero && !r.is_zero {
                out.code = EXIT_CHECK_FAILED;
            }
            out
        }
        Command::Char { file, rep, n } => {
            let h = load(&file, force)?;
            let v = io::load_rep(&h, &read(&rep)?)?;
            let chi = character(&v, &h.power_of_integral(n)?)?;
            Output::ok(
                json!({ "algebra": h.name(), "n": n, "value": scalar_json(&chi) }),
                format!("χ_V(P_{n}(Λ)) = {chi}\n"),
            )
        }
        Command::Ratio {
            file,
            rep_v,
            rep_w,
            n,
            m,
        } => {
            let h = load(&file, force)?;
            let v = io::load_rep(&h, &read(&rep_v)?)?;
            let w = io::load_rep(&h, &read(&rep_w)?)?;
            let r = ratio_invariant(&h, &v, &w, n, m)?;
            Output::ok(
                json!({ "algebra": h.name(), "n": n, "m": m, "value": scalar_json(&r) }),
                format!("χ_V(P_{n}(Λ)) / χ_W(P_{m}(Λ)) = {r}\n"),
            )
        }
        Command::Twist {
            file,
            twist: tfile,
            check,
        } => {
            let h = load(&file, force)?;
            let tw = io::load_twist(&h, &read(&tfile)?)?;
            twist_report(&h, &tw, &check)?
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => catalog_list(),
            CatalogAction::Emit { family, params } => {
                let h = catalog::build(&CatalogSpec::parse(&family, &params)?)?;
                Output::raw(io::emit_hopf(&h))
            }
            CatalogAction::Twist { name } => {
                let t = StandardTwist::from_name(&name)
                    .ok_or_else(|| Error::BadParams(format!("unknown standard twist {name:?}")))?;
                let (h, tw) = t.build()?;
                Output::raw(io::emit_twist(&h, &tw))
            }
        },
        Command::Table { which } => {
            let report = match which {
                TableName::Pointed12 => pointed12_table()?,
                TableName::Semisimple8 => semisimple8_table()?,
            };
            Output::from_report(&report)
        }
    })
}

fn twist_report(h: &HopfAlgebra, tw: &twist::Twist, check: &[TwistCheck]) -> Result<Output, Error> {
    let mut report = twist::verify_twist(h, tw);
    if report.all_passed() {
        let wants = |c| check.contains(&c);
        if wants(TwistCheck::Powers) {
            report.extend(twist::check_twisted_powers(h, tw, -4..=4)?);
        }
        if wants(TwistCheck::Splitting) {
            for n in [2, 3] {
                report.extend(twist::check_coproduct_splitting(h, tw, n)?);
            }
        }
        if wants(TwistCheck::Dualintegral) {
            let ti = twist::twisted_dual_integral(h, tw)?;
            report.push(
                "λ^J is a nonzero right integral of A^J",
                ti.is_right_integral && ti.is_nonzero,
                None,
            );
            report.push(
                "λ(1) and λ^J(1)",
                true,
                Some(format!(
                    "λ(1) = {}, λ^J(1) = {}",
                    ti.lambda_at_one, ti.lambda_j_at_one
                )),
            );
        }
        if wants(TwistCheck::Indicators) || wants(TwistCheck::Killing) {
            let powers: Vec<i64> = if wants(TwistCheck::Indicators) {
                (-6..=6).collect()
            } else {
                Vec::new()
            };
            let mut gauge = twist::check_gauge_invariants_under_twist(h, tw, powers)?;
            gauge.checks.retain(|c| {
                if c.name.starts_with("Killing") {
                    wants(TwistCheck::Killing)
                } else {
                    wants(TwistCheck::Indicators)
                }
            });
            report.extend(gauge);
        }
    }
    Ok(Output::from_report(&report))
}

fn catalog_list() -> Output {
    let mut text = String::from("families:\n");
    for (usage, about) in FAMILIES {
        text.push_str(&format!("  {usage:<24} {about}\n"));
    }
    text.push_str("standard twists:\n");
    for t in StandardTwist::ALL {
        text.push_str(&format!("  {}\n", t.name()));
    }
    let json = json!({
        "families": FAMILIES.iter().map(|(u, a)| json!({ "usage": u, "description": a })).collect::<Vec<_>>(),
        "standard_twists": StandardTwist::ALL.iter().map(|t| t.name()).collect::<Vec<_>>(),
        "standard_algebras": catalog::standard_specs().iter().map(CatalogSpec::name).collect::<Vec<_>>(),
    });
    Output::ok(json, text)
}
