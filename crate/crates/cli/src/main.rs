use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mellin_core::closed_form::{phi_odd_closed_form, phi_odd_via_sinh_over_z, ClosedForm, IntegralSpec};
use mellin_core::lfunc::{eval_closed_form, euler_gamma, ln2, ln_pi, pi};
use mellin_core::quad::{quad_c_constant, quad_integral};
use mellin_core::reference::{c1_closed_form, c2_closed_form};
use mellin_core::verify::{reproduce_worked_examples, run_identity, CellRange, IdentityFamily, VerifyReport};
use mellin_core::MellinError;

const USAGE: u8 = 2;
const MISMATCH: u8 = 1;

#[derive(Parser)]
#[command(name = "mellin", version, about = "Closed forms of arctanh Mellin transforms and their verification")]
struct Cli {
    /// Override a setting, `key=value`. Keys: `prec`, `max-n`.
    #[arg(long = "config", global = true, value_name = "KEY=VALUE")]
    config: Vec<String>,
    /// File of `key=value` lines read before any `--config`.
    #[arg(long = "config-file", global = true, value_name = "PATH")]
    config_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    LogOdd,
    LogEven,
    SinhOverZ,
}

#[derive(Subcommand)]
enum Command {
    /// Exact closed form of one integral. For `sinh-over-z`, `--n` is the
    /// full power N of cosh.
    ClosedForm {
        family: Family,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "latex")]
        json: bool,
        #[arg(long)]
        latex: bool,
        /// Also print the value to this many digits.
        #[arg(long)]
        prec: Option<u32>,
    },
    /// Φ₁(2n+1) or Φ₂(2n+1) over η′ or β′ at negative integers, and the
    /// same value over the positive-argument basis.
    PhiOdd {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "latex")]
        json: bool,
        #[arg(long)]
        latex: bool,
    },
    /// Run an identity or consistency suite, or `all`.
    Verify {
        suite: String,
        /// Inclusive range of the leading parameter, `a..b`.
        #[arg(long)]
        range: Option<String>,
        #[arg(long)]
        prec: Option<u32>,
        /// Print the full JSON report(s) instead of summary lines.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a closed form or an integral spec read from a JSON file.
    Eval {
        #[arg(long)]
        json_file: PathBuf,
        #[arg(long)]
        prec: Option<u32>,
        /// Also integrate numerically when the file names an integral.
        #[arg(long)]
        quad: bool,
    },
    /// Print the basic constants and C₁, C₂.
    Constants {
        #[arg(long)]
        prec: Option<u32>,
    },
    /// Check every worked closed form, the odd-argument tables and the
    /// printed decimals of C₁ and C₂.
    #[command(name = "reproduce", alias = "reproduce-paper")]
    Reproduce {
        #[arg(long)]
        json: bool,
    },
}

struct Settings {
    prec: u32,
    max_n: usize,
}

fn parse_settings(cli: &Cli) -> Result<Settings, String> {
    let mut kv = BTreeMap::new();
    if let Some(path) = &cli.config_file {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (k, v) = line.split_once('=').ok_or_else(|| format!("config line `{line}` is not key=value"))?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    for item in &cli.config {
        let (k, v) = item.split_once('=').ok_or_else(|| format!("--config `{item}` is not key=value"))?;
        kv.insert(k.trim().to_string(), v.trim().to_string());
    }
    let mut s = Settings { prec: 30, max_n: 60 };
    for (k, v) in kv {
        let bad = |what: &str| format!("config `{k}={v}`: {what}");
        match k.as_str() {
            "prec" => s.prec = v.parse().map_err(|_| bad("expected a digit count"))?,
            "max-n" => s.max_n = v.parse().map_err(|_| bad("expected an integer"))?,
            _ => return Err(bad("unknown key (known: prec, max-n)")),
        }
    }
    Ok(s)
}

fn print_form(cf: &ClosedForm, json: bool, latex: bool) {
    if json {
        println!("{}", cf.to_json());
    } else if latex {
        println!("{}", cf.to_latex());
    } else {
        println!("{cf}");
    }
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<MellinError> for Failure {
    fn from(e: MellinError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn print_report(r: &VerifyReport, json: bool) {
    if json {
        println!("{}", r.to_json());
    } else {
        println!("{} [{:.2?}]", r.summary(), r.elapsed);
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let settings = parse_settings(&cli).map_err(Failure::Usage)?;
    let prec_or = |p: Option<u32>| p.unwrap_or(settings.prec);
    match cli.command {
        Command::ClosedForm { family, q, n, json, latex, prec } => {
            let spec = match family {
                Family::LogOdd => IntegralSpec::LogOddCosh { q, n },
                Family::LogEven => IntegralSpec::LogEvenCosh { q, n },
                Family::SinhOverZ => IntegralSpec::SinhOverZ { q, big_n: n },
            };
            let cf = spec.closed_form()?;
            print_form(&cf, json, latex);
            if let Some(p) = prec {
                println!("{}", eval_closed_form(&cf, p)?);
            }
        }
        Command::PhiOdd { which, n, json, latex } => {
            let neg = phi_odd_closed_form(which, n)?;
            let pos = phi_odd_via_sinh_over_z(which, n)?;
            print_form(&neg, json, latex);
            print_form(&pos, json, latex);
        }
        Command::Verify { suite, range, prec, json } => {
            let prec = prec_or(prec);
            let range = range.map(|r| r.parse::<CellRange>()).transpose()?;
            if let Some(r) = range {
                if r.hi > settings.max_n {
                    return Err(Failure::Usage(format!(
                        "range upper end {} exceeds the cap max-n={}",
                        r.hi, settings.max_n
                    )));
                }
            }
            let families: Vec<IdentityFamily> = if suite == "all" {
                if range.is_some() {
                    return Err(Failure::Usage("`verify all` uses each suite's default range".into()));
                }
                IdentityFamily::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let mut ok = true;
            for f in families {
                let r = run_identity(f, range, prec)?;
                print_report(&r, json);
                ok &= r.all_passed();
            }
            if !ok {
                return Err(Failure::Mismatch);
            }
        }
        Command::Eval { json_file, prec, quad } => {
            let prec = prec_or(prec);
            let text = std::fs::read_to_string(&json_file)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", json_file.display())))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))?;
            if value.get("terms").is_some() {
                let cf = ClosedForm::from_json_value(&value)?;
                println!("{}", eval_closed_form(&cf, prec)?);
            } else {
                let spec: IntegralSpec = serde_json::from_value(value)
                    .map_err(|e| Failure::Usage(format!("neither a closed form nor an integral spec: {e}")))?;
                let cf = spec.closed_form()?;
                println!("{cf}");
                println!("{}", eval_closed_form(&cf, prec)?);
                if quad {
                    let r = quad_integral(&spec, prec)?;
                    println!("{} (quadrature, error estimate {:.3e})", r.value, r.error_estimate.to_f64());
                }
            }
        }
        Command::Constants { prec } => {
            let prec = prec_or(prec);
            println!("pi     {}", pi(prec)?);
            println!("ln2    {}", ln2(prec)?);
            println!("lnpi   {}", ln_pi(prec)?);
            println!("gamma  {}", euler_gamma(prec)?);
            for (name, which, cf) in [("C1", 1u8, c1_closed_form()), ("C2", 2, c2_closed_form())] {
                println!("{name}     {}  ({cf})", eval_closed_form(&cf, prec)?);
                if prec <= mellin_core::quad::MAX_QUAD_DIGITS {
                    println!("{name}     {}  (quadrature)", quad_c_constant(which, prec)?.value);
                }
            }
        }
        Command::Reproduce { json } => {
            let r = reproduce_worked_examples();
            if json {
                println!("{}", r.to_json());
            } else {
                for c in &r.cells {
                    println!("{} {}", if c.pass { "ok  " } else { "FAIL" }, c.params_text());
                }
                println!("{}", r.summary());
            }
            if !r.all_passed() {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(MISMATCH),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}
