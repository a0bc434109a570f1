//! `descent3`: command-line front end for the descent3 library.
//!
//! Every verb builds one JSON payload. `--format text` renders that same
//! payload; timing and diagnostics go to stderr so stdout is byte-stable.

mod render;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use descent3::catalog::catalog;
use descent3::cohomology::{h1, h2};
use descent3::descent::{grt_check, verify_main_theorem, wgroup_properties};
use descent3::error::Error;
use descent3::extensions::{classify_middle, omega, CentralExtension};
use descent3::group::{default_order_cap, make_group_with_cap, FiniteGroup};
use descent3::series::q_central_series;
use descent3::verify::{verify_all, VerifyOptions};

#[derive(Parser, Debug)]
#[command(name = "descent3", version, about = "Group cohomology checks for finite p-groups")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Largest group order to build (default: DESCENT3_ORDER_CAP or 4096).
    #[arg(long, global = true)]
    order_cap: Option<usize>,
    /// Worker threads for parallel checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// List the catalog groups.
    Catalog {
        /// Restrict to these primes.
        #[arg(long, value_delimiter = ',')]
        p: Vec<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// H^1 and H^2 with coefficients in Z/m.
    Cohomology {
        #[arg(long)]
        group: String,
        #[arg(long, alias = "q")]
        modulus: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Descending q-central series.
    Series {
        #[arg(long)]
        group: String,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        common: Common,
    },
    /// The extensions omega_0, ..., omega_6 and their Baer sums.
    Extension {
        #[arg(value_enum)]
        action: ExtAction,
        #[arg(long)]
        p: u64,
        /// Extension name, `omega<i>` or `<i>`.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Galois relation type check.
    Grt {
        #[arg(long)]
        group: String,
        /// Defaults to `--p`.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// G^(3) against the intersection of distinguished subgroups.
    MainTheorem {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Structural predicates on W = G/G^(3).
    Wgroup {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Run the whole catalog battery.
    VerifyAll {
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3])]
        p: Vec<u64>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ExtAction {
    /// Describe a single extension.
    Omega,
    /// Baer sum of `--left` and `--right`.
    Baer,
    /// Name the middle group of `--left`.
    Classify,
}

impl Verb {
    fn common(&self) -> &Common {
        match self {
            Verb::Catalog { common, .. }
            | Verb::Cohomology { common, .. }
            | Verb::Series { common, .. }
            | Verb::Extension { common, .. }
            | Verb::Grt { common, .. }
            | Verb::MainTheorem { common, .. }
            | Verb::Wgroup { common, .. }
            | Verb::VerifyAll { common, .. } => common,
        }
    }
}

struct Outcome {
    command: Value,
    results: Value,
    verdict: &'static str,
}

fn group(spec: &str, common: &Common) -> Result<FiniteGroup, Error> {
    make_group_with_cap(spec, common.order_cap.unwrap_or_else(default_order_cap))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn omega_index(name: &str) -> Result<usize, Error> {
    let digits = name.trim().trim_start_matches("omega").trim_start_matches('_');
    digits.parse().map_err(|_| Error::Parse {
        spec: name.into(),
        reason: "expected omega<i> with 0 <= i <= 6".into(),
    })
}

fn describe(ext: &CentralExtension) -> Value {
    json!({
        "middle": classify_middle(ext.middle()).to_string(),
        "extension": to_value(&ext.to_json()),
    })
}

/// Names of the `omega_j` equivalent to `ext`.
fn equivalent_omegas(ext: &CentralExtension, p: u64) -> Vec<String> {
    (0..=6)
        .filter(|&j| omega(j, p).ok().is_some_and(|w| ext.is_equivalent(&w).unwrap_or(false)))
        .map(|j| format!("omega{j}"))
        .collect()
}

fn run(verb: &Verb) -> Result<Outcome, Error> {
    let common = verb.common();
    let cap = common.order_cap;
    Ok(match verb {
        Verb::Catalog { p, .. } => {
            let primes = if p.is_empty() { vec![2, 3] } else { p.clone() };
            let entries = catalog(&primes, cap.unwrap_or(usize::MAX));
            Outcome {
                command: json!({ "verb": "catalog", "p": primes, "order_cap": cap }),
                results: json!({ "entries": to_value(&entries) }),
                verdict: "pass",
            }
        }
        Verb::Cohomology { group: spec, modulus, .. } => {
            let g = group(spec, common)?;
            let one = h1(&g, *modulus);
            let two = h2(&g, *modulus)?;
            Outcome {
                command: json!({ "verb": "cohomology", "group": spec, "modulus": modulus }),
                results: json!({
                    "order": g.order(),
                    "h1": { "orders": one.orders(), "order": one.order().to_string() },
                    "h2": { "orders": two.invariant_factors(), "order": two.order().to_string() },
                }),
                verdict: "pass",
            }
        }
        Verb::Series { group: spec, q, .. } => {
            let g = group(spec, common)?;
            Outcome {
                command: json!({ "verb": "series", "group": spec, "q": q }),
                results: to_value(&q_central_series(&g, *q).to_json()),
                verdict: "pass",
            }
        }
        Verb::Extension { action, p, left, right, .. } => {
            let l = omega(omega_index(left)?, *p)?;
            let mut command = json!({ "verb": "extension", "p": p, "left": left });
            let results = match action {
                ExtAction::Omega | ExtAction::Classify => {
                    command["action"] = json!(if *action == ExtAction::Omega { "omega" } else { "classify" });
                    describe(&l)
                }
                ExtAction::Baer => {
                    let right = right.as_deref().ok_or_else(|| Error::Parse {
                        spec: "extension baer".into(),
                        reason: "--right is required".into(),
                    })?;
                    command["action"] = json!("baer");
                    command["right"] = json!(right);
                    let sum = l.baer_sum(&omega(omega_index(right)?, *p)?)?;
                    let mut v = describe(&sum);
                    v["equivalent_to"] = json!(equivalent_omegas(&sum, *p));
                    v
                }
            };
            Outcome {
                command,
                results,
                verdict: "pass",
            }
        }
        Verb::Grt { group: spec, q, p, .. } => {
            let q = q.or(*p).ok_or_else(|| Error::Parse {
                spec: "grt".into(),
                reason: "one of --q or --p is required".into(),
            })?;
            let g = group(spec, common)?;
            let r = grt_check(&g, q)?;
            Outcome {
                command: json!({ "verb": "grt", "group": spec, "q": q }),
                verdict: if r.holds { "pass" } else { "fail" },
                results: to_value(&r),
            }
        }
        Verb::MainTheorem { group: spec, p, .. } => {
            let g = group(spec, common)?;
            let r = verify_main_theorem(&g, *p)?;
            let verdict = match r.verdicts.outcome.as_str() {
                "pass" => "pass",
                "fail-expected" => "fail-expected",
                _ => "fail",
            };
            Outcome {
                command: json!({ "verb": "main-theorem", "group": spec, "p": p }),
                results: to_value(&r),
                verdict,
            }
        }
        Verb::Wgroup { group: spec, p, .. } => {
            let g = group(spec, common)?;
            let r = wgroup_properties(&g, *p)?;
            Outcome {
                command: json!({ "verb": "wgroup", "group": spec, "p": p }),
                verdict: if r.holds { "pass" } else { "fail" },
                results: to_value(&r),
            }
        }
        Verb::VerifyAll { p, .. } => {
            let opts = VerifyOptions {
                primes: p.clone(),
                max_order: cap.unwrap_or(243),
            };
            let r = verify_all(&opts)?;
            Outcome {
                command: json!({ "verb": "verify-all", "p": p, "order_cap": opts.max_order }),
                verdict: if r.verdict == "pass" { "pass" } else { "fail" },
                results: to_value(&r),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.verb.common().clone();
    if let Some(n) = common.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("descent3: cannot configure {n} jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let outcome = match run(&cli.verb) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("descent3: {e}");
            return ExitCode::from(2);
        }
    };
    let mut command = outcome.command;
    if let Value::Object(m) = &mut command {
        m.retain(|_, v| !v.is_null());
    }
    let mut report = Map::new();
    report.insert("schema".into(), json!(1));
    report.insert("command".into(), command);
    report.insert("results".into(), outcome.results);
    report.insert("verdict".into(), json!(outcome.verdict));
    let report = Value::Object(report);
    let body = match common.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("json") + "\n",
        Format::Text => render::text(&report),
    };
    // A closed pipe (`| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
    eprintln!("descent3: {} in {:.3}s", outcome.verdict, start.elapsed().as_secs_f64());
    match outcome.verdict {
        "pass" | "fail-expected" => ExitCode::SUCCESS,
        _ => ExitCode::from(1),
    }
}
