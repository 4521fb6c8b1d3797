use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use weylcheb_core::analysis::{random_alpha_point, rng_for, run_suite, Suite, SuiteConfig, DEFAULT_SEED};
use weylcheb_core::chebyshev::{poly_t, poly_u, substitute_p, PolyKind};
use weylcheb_core::exp_ring::{decompose_into_c, exp_sum, multiply};
use weylcheb_core::lie::{congruence_number, DEFAULT_MAX_RANK};
use weylcheb_core::orbit_functions::{eval_s, evaluate};
use weylcheb_core::{weyl, AlphaPoint, OrbitKind, Rank, Weight};

#[derive(Parser)]
#[command(name = "weylcheb", version, about = "Weyl orbit functions and Chebyshev polynomials of A_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Seed for random points and suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct RankArg {
    /// Rank n of A_n; inferred from the weight when omitted.
    #[arg(short = 'n', long = "rank")]
    rank: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Weyl orbit of a dominant weight, with signs.
    Orbit {
        #[command(flatten)]
        rank: RankArg,
        /// Weight in ω-coordinates, comma separated.
        #[arg(short = 'l', long = "lambda", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Value of C, S or E at a point.
    Eval {
        #[command(flatten)]
        rank: RankArg,
        #[arg(short = 'k', long = "kind")]
        kind: String,
        #[arg(short = 'l', long = "lambda", allow_hyphen_values = true)]
        lambda: String,
        /// Point in α-coordinates, comma separated, or `r` for a random point.
        #[arg(short = 'x', long = "point", allow_hyphen_values = true)]
        point: String,
    },
    /// Decompose C_a · C_b into orbit sums.
    Decompose {
        #[command(flatten)]
        rank: RankArg,
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: String,
        #[arg(short = 'b', allow_hyphen_values = true)]
        b: String,
    },
    /// Polynomial T, U in the fundamental variables, or PC, PS, PE in y.
    Poly {
        #[command(flatten)]
        rank: RankArg,
        #[arg(short = 'l', long = "lambda", allow_hyphen_values = true)]
        lambda: String,
        #[arg(short = 'k', long = "kind")]
        kind: String,
        /// Emit CSV, one term per row.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(short = 's', long = "suite", default_value = "all")]
        suite: String,
        /// Highest rank tested.
        #[arg(short = 'n', long = "rank")]
        rank: Option<usize>,
        #[arg(short = 'c', long = "coord-bound", default_value_t = 3)]
        coord_bound: i64,
        /// Multiply every floating-point tolerance by this factor.
        #[arg(long, default_value_t = 1.0)]
        tolerance_scale: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, ok)) => match emit(&cli, &text) {
            Ok(()) if ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Output text and whether every check passed. Errors are precondition
/// failures (exit status 2).
fn run(cli: &Cli) -> anyhow::Result<(String, bool)> {
    match &cli.command {
        Command::Orbit { rank, lambda } => {
            let lambda = parse_weight(lambda, rank.rank)?;
            Ok((orbit(cli, &lambda)?, true))
        }
        Command::Eval { rank, kind, lambda, point } => {
            let kind: OrbitKind = kind.parse()?;
            let lambda = parse_weight(lambda, rank.rank)?;
            let (x, random) = parse_point(point, lambda.rank(), cli.seed)?;
            Ok((eval(cli, kind, &lambda, &x, random)?, true))
        }
        Command::Decompose { rank, a, b } => {
            let a = parse_weight(a, rank.rank)?;
            let b = parse_weight(b, rank.rank.or(Some(a.rank().get())))?;
            Ok((decompose(cli, &a, &b)?, true))
        }
        Command::Poly { rank, lambda, kind, csv } => {
            let kind: PolyKind = kind.parse()?;
            let lambda = parse_weight(lambda, rank.rank)?;
            Ok((poly(cli, &lambda, kind, *csv)?, true))
        }
        Command::Verify { suite, rank, coord_bound, tolerance_scale } => {
            let suite: Suite = suite.parse().map_err(|_| anyhow!("unknown suite '{suite}'"))?;
            let config = SuiteConfig {
                rank_bound: *rank,
                coord_bound: *coord_bound,
                seed: cli.seed,
                tolerance_scale: *tolerance_scale,
            };
            let report = run_suite(suite, &config)?;
            let text =
                if cli.json { format!("{}\n", serde_json::to_string_pretty(&report)?) } else { format!("{report}\n") };
            Ok((text, report.passed))
        }
    }
}

fn parse_weight(s: &str, rank: Option<usize>) -> anyhow::Result<Weight> {
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("bad weight coordinate '{t}'")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let n = rank.unwrap_or(coords.len());
    if coords.len() != n {
        bail!("weight {s} has {} coordinates but the rank is {n}", coords.len());
    }
    Ok(Weight::new(Rank::with_limit(n, DEFAULT_MAX_RANK)?, coords)?)
}

fn parse_point(s: &str, rank: Rank, seed: u64) -> anyhow::Result<(AlphaPoint, bool)> {
    if matches!(s.trim(), "r" | "random") {
        return Ok((random_alpha_point(&mut rng_for(seed, 0), rank), true));
    }
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().with_context(|| format!("bad point coordinate '{t}'")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok((AlphaPoint::new(rank, coords)?, false))
}

/// Fixed 15-significant-digit rendering; `-0` prints as `0`.
fn sig15(v: f64) -> String {
    format!("{:.14e}", v + 0.0)
}

fn number(text: &str) -> Value {
    Value::Number(text.parse().expect("formatted float is a JSON number"))
}

fn orbit(cli: &Cli, lambda: &Weight) -> anyhow::Result<String> {
    let o = weyl::orbit(lambda)?;
    if cli.json {
        let points: Vec<Value> = o
            .points()
            .iter()
            .enumerate()
            .map(|(k, p)| json!({"weight": p.weight, "sign": p.sign, "even": o.is_even_point(k)}))
            .collect();
        let v = json!({
            "rank": lambda.rank().get(),
            "lambda": lambda,
            "size": o.len(),
            "stabilizer_order": o.stabilizer_order(),
            "even_size": o.even_len(),
            "points": points,
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&v)?));
    }
    let mut out = format!(
        "{} orbit of {lambda}: {} points, stabilizer order {}, {} even points\n",
        lambda.rank(),
        o.len(),
        o.stabilizer_order(),
        o.even_len()
    );
    for (k, p) in o.points().iter().enumerate() {
        writeln!(out, "{} {}{}", p.sign, p.weight, if o.is_even_point(k) { " even" } else { "" })?;
    }
    Ok(out)
}

fn eval(cli: &Cli, kind: OrbitKind, lambda: &Weight, x: &AlphaPoint, random: bool) -> anyhow::Result<String> {
    let value = evaluate(kind, lambda, x)?;
    let on_wall = kind == OrbitKind::S && eval_s(lambda, x)?.on_wall;
    let (re, im) = (sig15(value.re), sig15(value.im));
    if cli.json {
        let mut v = json!({
            "rank": lambda.rank().get(),
            "kind": kind.to_string(),
            "lambda": lambda,
            "point": x.coords(),
            "re": number(&re),
            "im": number(&im),
        });
        if kind == OrbitKind::S {
            v["on_wall"] = json!(on_wall);
        }
        if random {
            v["seed"] = json!(cli.seed);
        }
        return Ok(format!("{}\n", serde_json::to_string_pretty(&v)?));
    }
    let point: Vec<String> = x.coords().iter().map(|c| sig15(*c)).collect();
    let mut out = format!("{kind}{lambda} at x = ({})", point.join(", "));
    if random {
        write!(out, " [random, seed {}]", cli.seed)?;
    }
    writeln!(out)?;
    writeln!(out, "re = {re}")?;
    writeln!(out, "im = {im}")?;
    if on_wall {
        writeln!(out, "S vanishes identically: lambda lies on a chamber wall")?;
    }
    Ok(out)
}

fn decompose(cli: &Cli, a: &Weight, b: &Weight) -> anyhow::Result<String> {
    for w in [a, b] {
        if !w.is_dominant() {
            bail!("weight {w} is not dominant");
        }
    }
    let product = multiply(&exp_sum(a, OrbitKind::C)?, &exp_sum(b, OrbitKind::C)?)?;
    let dec = decompose_into_c(&product)?;
    let (ca, cb) = (congruence_number(a), congruence_number(b));
    let expected = (ca + cb) % a.rank().dim();
    if cli.json {
        let mut v = dec.to_json();
        v["congruence"] = json!({
            "modulus": a.rank().dim(),
            "a": ca,
            "b": cb,
            "product": expected,
            "components_agree": dec.congruence_class() == Some(expected),
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&v)?));
    }
    let terms: Vec<String> =
        dec.terms().rev().map(|(w, m)| if *m == 1.into() { format!("C{w}") } else { format!("{m} C{w}") }).collect();
    Ok(format!(
        "C{a} * C{b} = {}\ncongruence class {expected} mod {} ({} + {}); {} weights in total\n",
        terms.join(" + "),
        a.rank().dim(),
        ca,
        cb,
        dec.total_count()
    ))
}

fn poly(cli: &Cli, lambda: &Weight, kind: PolyKind, csv: bool) -> anyhow::Result<String> {
    let (text, json, csv_text) = match kind {
        PolyKind::T | PolyKind::U => {
            let p = if kind == PolyKind::T { poly_t(lambda)? } else { poly_u(lambda)? };
            (p.to_string(), p.to_json(lambda, kind), p.to_csv())
        }
        PolyKind::PC | PolyKind::PS | PolyKind::PE => {
            let orbit_kind = match kind {
                PolyKind::PC => OrbitKind::C,
                PolyKind::PS => OrbitKind::S,
                _ => OrbitKind::E,
            };
            let p = substitute_p(lambda, orbit_kind)?;
            (p.to_string(), p.to_json(lambda, kind), p.to_csv())
        }
    };
    Ok(if csv {
        csv_text
    } else if cli.json {
        format!("{}\n", serde_json::to_string_pretty(&json)?)
    } else {
        format!("{kind}{lambda} = {text}\n")
    })
}
