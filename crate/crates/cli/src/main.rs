use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use imzv::closedforms::discrepancy::formula_discrepancy_report;
use imzv::coeffs::{parse_rational, Rational};
use imzv::imzv::{expand_interpolated, Interpretation, ZetaCombo};
use imzv::mzvnum::{eval_combo_with, Method};
use imzv::verify::{run_suite, GridOptions, VerifyError};
use imzv::{index_from_word, tshuffle_words, word_from_index, Index, Word};

#[derive(Parser)]
#[command(name = "imzv", version, about = "t-shuffle products and interpolated multiple zeta values")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalMethod {
    Series,
    Holder,
}

#[derive(Subcommand)]
enum Cmd {
    /// t-shuffle product of two words over {x, y} ("1" or "" is the empty word)
    Product { w1: String, w2: String },
    /// Expand ζ^t(index) into plain ζ symbols
    Expand {
        index: String,
        /// substitute a rational value for t
        #[arg(long)]
        t: Option<String>,
    },
    /// Evaluate a combination such as "2*z(2,2) + 4*z(3,1)" numerically
    Eval {
        combo: String,
        #[arg(long, default_value = "0")]
        t: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = EvalMethod::Series)]
        method: EvalMethod,
    },
    /// Run a verification suite
    Verify {
        suite: String,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long = "max-exp")]
        max_exp: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        pairs: Option<usize>,
    },
    /// Dual of an admissible word
    Dual { word: String },
    /// Convert between an index like "(2,1)" and its word
    Index { value: String },
    /// Where the typeset formulas disagree with the product
    Discrepancy,
}

enum Fail {
    Usage(String),
    Check(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Fail {
    Fail::Usage(e.to_string())
}

fn parse_t(s: &str) -> Result<Rational, Fail> {
    parse_rational(s.trim()).ok_or_else(|| Fail::Usage(format!("bad rational {s:?}")))
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn run(cli: Cli) -> Result<(), Fail> {
    let json = cli.format == Format::Json;
    match cli.cmd {
        Cmd::Product { w1, w2 } => {
            let a: Word = w1.parse().map_err(usage)?;
            let b: Word = w2.parse().map_err(usage)?;
            let p = tshuffle_words(&a, &b);
            if json {
                print_json(&p.to_json());
            } else {
                println!("{p}");
            }
        }
        Cmd::Expand { index, t } => {
            let idx: Index = index.parse().map_err(usage)?;
            let sym = ZetaCombo::symbol(Interpretation::Interpolated, &idx).map_err(usage)?;
            let mut out = expand_interpolated(&sym).map_err(usage)?;
            if let Some(t) = t {
                out = out.at_t(&parse_t(&t)?);
            }
            if json {
                print_json(&out.to_json());
            } else {
                println!("{out}");
            }
        }
        Cmd::Eval { combo, t, tol, method } => {
            let zc: ZetaCombo = combo.parse().map_err(usage)?;
            let method = match method {
                EvalMethod::Series => Method::Series,
                EvalMethod::Holder => Method::Holder,
            };
            let r = eval_combo_with(&zc, &parse_t(&t)?, tol, method).map_err(usage)?;
            if json {
                print_json(&serde_json::to_value(r).expect("json"));
            } else {
                println!("{:.12} ± {:.2e}", r.value, r.error_estimate);
            }
            if !r.tolerance_met {
                return Err(Fail::Check(format!(
                    "tolerance not met: estimate {:.2e} > {:.2e}",
                    r.error_estimate, tol
                )));
            }
        }
        Cmd::Verify {
            suite,
            max,
            k,
            p,
            r,
            s,
            max_exp,
            seed,
            tol,
            pairs,
        } => {
            let opts = GridOptions {
                max,
                k,
                p,
                r,
                s,
                max_exp,
                seed,
                tol,
                pairs,
            };
            let rep = run_suite(&suite, &opts).map_err(|e| match e {
                VerifyError::UnknownSuite(_) => usage(e),
            })?;
            if json {
                print_json(&serde_json::to_value(&rep).expect("json"));
            } else {
                println!(
                    "{}: {}/{} passed ({:.2} s)",
                    rep.suite, rep.cases_passed, rep.cases_total, rep.wall_time_s
                );
                for f in &rep.failures {
                    println!("  FAIL {} diff: {}", f.params, f.diff);
                }
            }
            if !rep.passed() {
                return Err(Fail::Check(format!("{} case(s) failed", rep.failures.len())));
            }
        }
        Cmd::Dual { word } => {
            let w: Word = word.parse().map_err(usage)?;
            let d = w.dual().map_err(usage)?;
            if json {
                print_json(&serde_json::json!({"word": w.to_string(), "dual": d.to_string()}));
            } else {
                println!("{d}");
            }
        }
        Cmd::Index { value } => {
            let v = value.trim();
            let (word, idx) = if v.starts_with('(') || v.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                let idx: Index = v.parse().map_err(usage)?;
                (word_from_index(&idx), idx)
            } else {
                let w: Word = v.parse().map_err(usage)?;
                let idx = index_from_word(&w).map_err(usage)?;
                (w, idx)
            };
            if json {
                print_json(&serde_json::json!({
                    "word": word.to_string(),
                    "index": idx.to_string(),
                    "admissible": idx.is_admissible(),
                }));
            } else if v == word.to_string() {
                println!("{idx}");
            } else {
                println!("{word}");
            }
        }
        Cmd::Discrepancy => {
            let rep = formula_discrepancy_report();
            if json {
                print_json(&serde_json::to_value(&rep).expect("json"));
            } else {
                for e in &rep.entries {
                    println!("{} {}: {} differing term(s)", e.formula, e.params, e.terms.len());
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
