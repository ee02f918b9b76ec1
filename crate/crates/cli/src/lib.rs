//! Argument parsing and dispatch for the `partlab` binary.
//!
//! [`run`] writes to the given streams and returns the exit code:
//! 0 on success, 1 when a verification fails, 2 on usage or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use partlab_core::concave;
use partlab_core::identities::{self, formulas, Perturbation, VerificationReport};
use partlab_core::involution::{self, Flavor, InvolutionReport, Refinement};
use partlab_core::stats::{self, StatKey};
use partlab_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "partlab",
    version,
    about = "Exact partition statistics, q-series identities and involutions"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count partitions of n contributing to a statistic
    Count {
        stat: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
    },
    /// List the objects counted by a statistic
    Enumerate {
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
    },
    /// Check registered identities coefficient by coefficient
    Verify(VerifyArgs),
    /// Exhaustively check a sign-reversing involution
    Involution {
        flavor: String,
        #[arg(long)]
        max_weight: Option<usize>,
        /// Print every triple of this weight with its partner
        #[arg(long)]
        trace: Option<usize>,
        /// Also check the z-refined sums
        #[arg(long)]
        z_refined: bool,
    },
    /// Run the map from concave compositions to improper partitions
    Bijection {
        #[arg(value_parser = ["phi"])]
        map: String,
        #[arg(long)]
        n: usize,
        /// Check every weight from 1 to n
        #[arg(long)]
        check_inverse: bool,
        /// Print every composition with its image
        #[arg(long)]
        show: bool,
    },
    /// Print a named q-series
    Series {
        id: Option<String>,
        #[arg(long, default_value_t = 30)]
        order: usize,
        /// List the available series
        #[arg(long, conflicts_with = "id")]
        list: bool,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(required_unless_present_any = ["all", "list"], conflicts_with_all = ["all", "list"])]
    id: Option<String>,
    #[arg(long)]
    all: bool,
    /// List the registry instead of verifying
    #[arg(long, conflicts_with = "all")]
    list: bool,
    #[arg(long)]
    order: Option<usize>,
    /// Add a deliberate error to the first check at this degree
    #[arg(long)]
    perturb_degree: Option<usize>,
    /// Case to perturb under --all
    #[arg(long, requires = "all")]
    perturb_id: Option<String>,
}

/// Output collected by a command, with its exit code.
struct Outcome {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Outcome {
    fn ok(text: String, json: serde_json::Value) -> Self {
        Outcome {
            text,
            json,
            code: EXIT_OK,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<serde_json::Value, Error> {
    serde_json::to_value(v).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(stream, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(o) => {
            let res = match cli.format {
                Format::Text => write!(out, "{}", o.text),
                Format::Json => serde_json::to_string_pretty(&o.json)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}")),
            };
            match res {
                Ok(()) => o.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command) -> Result<Outcome, Error> {
    match cmd {
        Command::Count { stat, n, m } => count(&stat, n, m),
        Command::Enumerate { class, n, m } => enumerate(&class, n, m),
        Command::Verify(args) => verify(args),
        Command::Involution {
            flavor,
            max_weight,
            trace,
            z_refined,
        } => run_involution(&flavor, max_weight, trace, z_refined),
        Command::Bijection {
            n,
            check_inverse,
            show,
            ..
        } => bijection(n, check_inverse, show),
        Command::Series { id, order, list } => series(id.as_deref(), order, list),
    }
}

fn count(stat: &str, n: usize, m: Option<i64>) -> Result<Outcome, Error> {
    let key: StatKey = stat.parse()?;
    let c = stats::count(key, n, m)?;
    Ok(Outcome::ok(
        format!("{c}\n"),
        json!({ "stat": key.id(), "n": n, "m": m, "count": num(&c) }),
    ))
}

/// Big integers go into JSON as exact numbers.
fn num(c: &impl std::fmt::Display) -> serde_json::Number {
    c.to_string()
        .parse()
        .expect("integers are valid JSON numbers")
}

fn enumerate(class: &str, n: usize, m: Option<i64>) -> Result<Outcome, Error> {
    let key: StatKey = class.parse()?;
    if key == StatKey::CE {
        if m.is_some() {
            return Err(Error::UnexpectedParameter {
                key: key.id().into(),
            });
        }
        let comps = concave::enumerate_concave_even(n);
        let text: String = comps.iter().map(|c| format!("{c}\n")).collect();
        return Ok(Outcome::ok(
            text,
            json!({ "class": key.id(), "n": n, "count": comps.len(), "members": to_json(&comps)? }),
        ));
    }
    let members = stats::members(key, n, m)?;
    let mut text = String::new();
    for (p, w) in &members {
        if key.is_signed() {
            let _ = writeln!(text, "{p} {w:+}");
        } else {
            let _ = writeln!(text, "{p}");
        }
    }
    let list: Vec<_> = members
        .iter()
        .map(|(p, w)| json!({ "parts": p.parts(), "weight": w }))
        .collect();
    Ok(Outcome::ok(
        text,
        json!({ "class": key.id(), "n": n, "m": m, "count": members.len(), "members": list }),
    ))
}

fn verify(args: VerifyArgs) -> Result<Outcome, Error> {
    if args.list {
        let cases = identities::list_identities();
        let mut text = String::new();
        for c in cases {
            let _ = writeln!(
                text,
                "{:<26} {:<16} order {:<4}{}  {}",
                c.id,
                c.kind,
                c.default_order,
                if c.optional { " (optional)" } else { "" },
                c.statement
            );
        }
        return Ok(Outcome::ok(text, to_json(&cases)?));
    }
    let perturbation = args.perturb_degree.map(|degree| Perturbation {
        degree,
        delta: 1.into(),
    });
    if args.all {
        let mut orders = BTreeMap::new();
        if let Some(order) = args.order {
            for c in identities::list_identities() {
                orders.insert(c.id.to_string(), order.min(c.max_order));
            }
        }
        let target = match (&args.perturb_id, &perturbation) {
            (Some(id), Some(p)) => Some((id.as_str(), p)),
            (Some(_), None) => {
                return Err(Error::MissingParameter {
                    key: "perturb-degree".into(),
                })
            }
            (None, Some(_)) => {
                return Err(Error::MissingParameter {
                    key: "perturb-id".into(),
                })
            }
            (None, None) => None,
        };
        let reports = identities::verify_all(&orders, target)?;
        let ok = identities::all_required_verified(&reports);
        let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
        let passed = reports.iter().filter(|r| r.verified()).count();
        let _ = writeln!(text, "{passed}/{} verified", reports.len());
        return Ok(Outcome {
            text,
            json: to_json(&reports)?,
            code: if ok { EXIT_OK } else { EXIT_FAILED },
        });
    }
    let id = args.id.as_deref().expect("clap requires an id");
    let report = identities::verify_identity_with(id, args.order, perturbation.as_ref())?;
    report_outcome(&report)
}

fn report_outcome(r: &VerificationReport) -> Result<Outcome, Error> {
    Ok(Outcome {
        text: format!("{r}\n"),
        json: to_json(r)?,
        code: if r.verified() { EXIT_OK } else { EXIT_FAILED },
    })
}

fn run_involution(
    flavor: &str,
    max_weight: Option<usize>,
    trace: Option<usize>,
    z_refined: bool,
) -> Result<Outcome, Error> {
    let flavor: Flavor = flavor.parse()?;
    if let Some(w) = trace {
        if max_weight.is_some() || z_refined {
            return Err(Error::domain(
                "involution",
                "--trace cannot be combined with other checks",
            ));
        }
        let entries = involution::trace(flavor, w);
        let mut text = String::new();
        for e in entries.iter().filter(|e| e.partner.is_some()) {
            let _ = writeln!(text, "{} -> {}", e.triple, e.partner.as_ref().unwrap());
        }
        let fixed: Vec<_> = entries.iter().filter(|e| e.partner.is_none()).collect();
        let _ = writeln!(text, "fixed points: {}", fixed.len());
        for e in &fixed {
            let _ = writeln!(text, "{}", e.triple);
        }
        return Ok(Outcome::ok(
            text,
            json!({ "flavor": flavor, "weight": w, "entries": to_json(&entries)? }),
        ));
    }
    let max_weight = max_weight.ok_or(Error::MissingParameter {
        key: "max-weight".into(),
    })?;
    let mut refinements = vec![Refinement::None];
    if z_refined {
        refinements.push(Refinement::TriangleSize);
        if flavor == Flavor::Alpha {
            refinements.push(Refinement::TriangleSizePlusSmallest);
        }
    }
    let reports = refinements
        .into_iter()
        .map(|r| involution::verify_involution(flavor, max_weight, r))
        .collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    for r in &reports {
        write_involution(&mut text, r);
    }
    let passed = reports.iter().all(|r| r.passed);
    Ok(Outcome {
        text,
        json: to_json(&reports)?,
        code: if passed { EXIT_OK } else { EXIT_FAILED },
    })
}

fn write_involution(text: &mut String, r: &InvolutionReport) {
    let refinement = match r.refinement {
        Refinement::None => "unrefined",
        Refinement::TriangleSize => "z^d",
        Refinement::TriangleSizePlusSmallest => "z^(d+k)",
    };
    let _ = writeln!(
        text,
        "{} {} weights 0..={}: {}",
        r.flavor,
        refinement,
        r.max_weight,
        if r.passed { "pass" } else { "FAIL" }
    );
    for w in &r.weights {
        let _ = writeln!(
            text,
            "  w={:<3} triples {:<7} fixed {:<5} total {:<16} fixed sum {}",
            w.weight,
            w.triples,
            w.fixed_points,
            w.signed_total.to_string(),
            w.fixed_sum
        );
        if let Some(c) = &w.counterexample {
            let _ = writeln!(text, "    {c}");
        }
    }
}

fn bijection(n: usize, check_inverse: bool, show: bool) -> Result<Outcome, Error> {
    let weights: Vec<usize> = if check_inverse {
        (1..=n).collect()
    } else {
        vec![n]
    };
    let mut summaries = Vec::new();
    for &w in &weights {
        summaries.push(concave::check_phi(w)?);
    }
    let mut text = String::new();
    for s in &summaries {
        let _ = writeln!(
            text,
            "n={} compositions {} improper {} round trips {} distinct images {}: {}",
            s.n,
            s.compositions,
            s.improper_partitions,
            s.round_trips,
            s.distinct_images,
            if s.bijective {
                "bijective"
            } else {
                "NOT bijective"
            }
        );
    }
    let mut maps = Vec::new();
    if show {
        for c in concave::enumerate_concave_even(n) {
            let p = concave::phi(&c)?;
            let _ = writeln!(text, "{c} → {p}");
            maps.push(json!({ "composition": to_json(&c)?, "image": p.parts() }));
        }
    }
    let ok = summaries.iter().all(|s| s.bijective);
    let mut json = json!({ "map": "phi", "n": n, "weights": to_json(&summaries)? });
    if show {
        json["maps"] = serde_json::Value::Array(maps);
    }
    Ok(Outcome {
        text,
        json,
        code: if ok { EXIT_OK } else { EXIT_FAILED },
    })
}

fn series(id: Option<&str>, order: usize, list: bool) -> Result<Outcome, Error> {
    if list || id.is_none() {
        let text = formulas::NAMED_SERIES
            .iter()
            .map(|(id, formula)| format!("{id:<18} {formula}\n"))
            .collect();
        let json = formulas::NAMED_SERIES
            .iter()
            .map(|(id, formula)| json!({ "id": id, "formula": formula }))
            .collect();
        return Ok(Outcome::ok(text, serde_json::Value::Array(json)));
    }
    let id = id.unwrap();
    let s = formulas::named_series(id, order)?;
    Ok(Outcome::ok(
        format!("{s}\n"),
        json!({ "id": id, "series": to_json(&s)? }),
    ))
}
