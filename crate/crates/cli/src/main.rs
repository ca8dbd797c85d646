use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use gamma_core::combinatorics::{count_good_compositions, dominance_compare, good_compositions};
use gamma_core::rep_theory::{canonical_summand, transfer_multiplicity, KostkaTable};
use gamma_core::ring::{expand_e, psi, straighten_direct, straighten_product};
use gamma_core::verify::{self, Oracle, SuiteReport, VerifyConfig};
use gamma_core::{
    BasisKey, Composition, GammaError, Guard, Modulus, PairPartition, Partition, RingElement,
};

#[derive(Parser)]
#[command(
    name = "gamma",
    version,
    about = "Exact computations in the quotient ring Γ^(m)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Set every enumeration limit to this value.
    #[arg(long, global = true, env = "GAMMA_GUARD")]
    guard: Option<u32>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Via {
    Direct,
    Product,
}

#[derive(Subcommand)]
enum Command {
    /// Expand e_n in the basis h_λ e_{mμ}.
    ExpandE {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Straighten h_α e_β.
    Straighten {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "")]
        h: Composition,
        #[arg(long, default_value = "")]
        e: Composition,
        #[arg(long, value_enum, default_value_t = Via::Direct)]
        via: Via,
    },
    /// One coefficient of the straightened h_α e_β.
    Coeff {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "")]
        h: Composition,
        #[arg(long, default_value = "")]
        e: Composition,
        /// Basis index in the form `λ|mμ`.
        #[arg(long)]
        target: String,
    },
    /// Count rearrangements of λ with no prefix sum divisible by m.
    CountCm {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        lambda: Partition,
        /// Also print the rearrangements.
        #[arg(long)]
        list: bool,
    },
    /// The distinguished summand of M(α|β).
    Canonical {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "")]
        alpha: Composition,
        #[arg(long, default_value = "")]
        beta: Composition,
    },
    /// Compare two pairs `λ|pμ` in the dominance order.
    Dominance {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Apply the involution ψ to the straightened h_α e_β.
    Psi {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "")]
        h: Composition,
        #[arg(long, default_value = "")]
        e: Composition,
    },
    /// Multiplicity of Y(target) in M(α|β) from a table of known multiplicities.
    Multiplicity {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "")]
        alpha: Composition,
        #[arg(long, default_value = "")]
        beta: Composition,
        #[arg(long)]
        target: String,
        /// JSON table `{"p": .., "entries": [{"base": "λ|pμ", "summand": "δ|pθ", "mult": n}]}`.
        #[arg(long)]
        kostka: PathBuf,
    },
    /// Cross-check the closed forms against the oracles.
    Verify {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, default_value = "all")]
        oracle: Oracle,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Refusal(String),
    Verification(String),
}

impl From<GammaError> for Failure {
    fn from(e: GammaError) -> Self {
        match e {
            GammaError::GuardExceeded { .. } => Failure::Refusal(e.to_string()),
            GammaError::NegativeMultiplicity(_) => {
                Failure::Verification(format!("warning: the Kostka table is inconsistent: {e}"))
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl Failure {
    fn report(self) -> ExitCode {
        let (message, code) = match self {
            Failure::Usage(m) => (m, 1),
            Failure::Refusal(m) => (m, 2),
            Failure::Verification(m) => (m, 3),
        };
        if !message.is_empty() {
            eprintln!("gamma: {message}");
        }
        ExitCode::from(code)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let guard = cli.guard.map(Guard::uniform).unwrap_or_default();
    let format = cli.format;
    match cli.command {
        Command::ExpandE { m, n } => {
            guard.check_size("e_n", n)?;
            print_element(&expand_e(n, Modulus::new(m)?), format);
        }
        Command::Straighten { m, h, e, via } => {
            let a = straighten(m, &h, &e, via, &guard)?;
            print_element(&a, format);
        }
        Command::Coeff { m, h, e, target } => {
            let modulus = Modulus::new(m)?;
            let key = BasisKey::parse(&target, modulus)?;
            let c = straighten(m, &h, &e, Via::Direct, &guard)?.coefficient(&key)?;
            print_integer(&c, format);
        }
        Command::CountCm { m, lambda, list } => {
            let modulus = Modulus::new(m)?;
            let count = count_good_compositions(&lambda, modulus);
            let witnesses = if list {
                Some(good_compositions(&lambda, modulus, &guard)?)
            } else {
                None
            };
            match format {
                Format::Text => {
                    println!("{count}");
                    for w in witnesses.iter().flatten() {
                        println!("{w}");
                    }
                }
                Format::Json => {
                    let mut doc =
                        json!({"m": m, "lambda": lambda.parts(), "count": count.to_string()});
                    if let Some(ws) = witnesses {
                        doc["witnesses"] = ws.iter().map(|w| w.parts().to_vec()).collect();
                    }
                    println!("{doc}");
                }
            }
        }
        Command::Canonical { p, alpha, beta } => {
            print_pair(&canonical_summand(&alpha, &beta, p)?, format);
        }
        Command::Dominance { p, left, right } => {
            let modulus = Modulus::new(p)?;
            let relation = dominance_compare(
                &PairPartition::parse(&left, modulus)?,
                &PairPartition::parse(&right, modulus)?,
                modulus,
            )?;
            match format {
                Format::Text => println!("{relation}"),
                Format::Json => println!("{}", json!({"relation": relation.as_str()})),
            }
        }
        Command::Psi { m, h, e } => {
            let a = straighten(m, &h, &e, Via::Direct, &guard)?;
            print_element(&psi(&a), format);
        }
        Command::Multiplicity {
            p,
            alpha,
            beta,
            target,
            kostka,
        } => {
            let text = fs::read_to_string(&kostka)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", kostka.display())))?;
            let table = KostkaTable::from_json(&text)?;
            let target = PairPartition::parse(&target, Modulus::new(p)?)?;
            let mult = transfer_multiplicity(&alpha, &beta, &target, &table, p)?;
            print_integer(&mult, format);
        }
        Command::Verify {
            m,
            max_degree,
            oracle,
            seed,
        } => {
            let mut config = VerifyConfig::new(Modulus::new(m)?, max_degree);
            config.seed = seed;
            config.guard = guard;
            let reports = verify::run(&config, oracle)?;
            print_reports(&config, &reports, format);
            let failed: usize = reports.iter().map(|r| r.failures.len()).sum();
            if failed > 0 {
                return Err(Failure::Verification(String::new()));
            }
        }
    }
    Ok(())
}

fn straighten(
    m: u32,
    h: &Composition,
    e: &Composition,
    via: Via,
    guard: &Guard,
) -> Result<RingElement, Failure> {
    let modulus = Modulus::new(m)?;
    guard.check_size("h_α e_β", h.size() + e.size())?;
    Ok(match via {
        Via::Direct => straighten_direct(h, e, modulus),
        Via::Product => straighten_product(h, e, modulus),
    })
}

fn print_element(a: &RingElement, format: Format) {
    match format {
        Format::Text => println!("{a}"),
        Format::Json => println!("{}", a.to_json()),
    }
}

fn print_integer(c: &BigInt, format: Format) {
    match format {
        Format::Text => println!("{c}"),
        Format::Json => println!("{}", json!({"value": c.to_string()})),
    }
}

fn print_pair(pair: &PairPartition, format: Format) {
    match format {
        Format::Text => println!("{pair}"),
        Format::Json => println!("{}", serde_json::to_string(pair).expect("pairs serialize")),
    }
}

fn print_reports(config: &VerifyConfig, reports: &[SuiteReport], format: Format) {
    match format {
        Format::Text => {
            for r in reports {
                let status = if r.ok() { "ok" } else { "FAILED" };
                println!(
                    "{}: {}/{} passed ({status})",
                    r.oracle,
                    r.passed(),
                    r.checks
                );
                for f in &r.failures {
                    println!("  {f}");
                }
            }
        }
        Format::Json => {
            let suites: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "oracle": r.oracle.as_str(),
                        "checks": r.checks,
                        "passed": r.passed(),
                        "failures": r.failures,
                    })
                })
                .collect();
            let doc = json!({
                "m": config.modulus.get(),
                "max_degree": config.max_degree,
                "seed": config.seed,
                "ok": reports.iter().all(SuiteReport::ok),
                "suites": suites,
            });
            println!("{doc}");
        }
    }
}
