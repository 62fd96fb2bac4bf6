//! `circarc`: hyperbolicity and arc-cover tools for circular-arc graphs.

mod input;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use circarc::classify::{circular_report, interval_property_by_cycles, Flag, OneMode};
use circarc::cover::{rho, rho_oracle};
use circarc::generators::{generate, FamilyName, FamilySpec, Generated};
use circarc::graph::UnitGraph;
use circarc::hyperbolicity::{delta_oracle, delta_sup, DEFAULT_GEODESIC_CAP};
use circarc::intersection::{build, is_proper, to_interval};
use circarc::transforms::{complement, line_graph};
use circarc::verify::{verify_family, verify_graph, Status, VerifyOptions};
use circarc::Error;

use input::{load, split_param, Input};

#[derive(Parser)]
#[command(name = "circarc", version, about = "Gromov hyperbolicity of circular-arc graphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Print a JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Geodesics kept per pair of grid points before the search is marked saturated.
    #[arg(long, global = true, default_value_t = DEFAULT_GEODESIC_CAP)]
    geodesic_cap: usize,
    /// Also evaluate interval properties by explicit cycle enumeration, up to this many cycles.
    #[arg(long, global = true)]
    cycle_cap: Option<usize>,
    /// Seed for random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the resulting family or graph here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum Verb {
    /// Intersection graph of an arc family.
    Build { input: String },
    /// Exact δ of a graph or of the intersection graph of a family.
    Delta { input: String },
    /// Minimum number of arcs covering the circle.
    Rho { input: String },
    /// Circular and interval properties of a family.
    Classify { input: String },
    /// Check every applicable bound and characterization.
    Verify {
        input: String,
        /// Skip the line graph.
        #[arg(long)]
        no_line: bool,
        /// Skip the complement.
        #[arg(long)]
        no_complement: bool,
    },
    /// Generate a named family or a random graph.
    Gen {
        name: FamilyName,
        /// Generator parameter, repeatable.
        #[arg(short, long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
    /// Complement graph.
    Complement { input: String },
    /// Line graph.
    Line { input: String },
    /// Brute-force δ and ρ for cross-checking small inputs.
    Oracle { input: String },
}

/// Exit status derived from the report.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Outcome {
    Ok,
    Saturated,
    Violation,
}

impl Outcome {
    fn code(self) -> u8 {
        match self {
            Outcome::Ok => 0,
            Outcome::Violation => 4,
            Outcome::Saturated => 5,
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::SizeLimit { .. } => 3,
        Error::TheoremViolation(_) => 4,
        Error::Saturated(_) => 5,
        _ => 2,
    }
}

struct Report {
    json: Value,
    text: String,
    /// Written to `--output` when given, else printed.
    artifact: Option<String>,
    outcome: Outcome,
}

impl Report {
    fn new(json: Value, text: String, outcome: Outcome) -> Self {
        Report {
            json,
            text,
            artifact: None,
            outcome,
        }
    }

    fn artifact(json: Value, text: String) -> Self {
        Report {
            json,
            text: String::new(),
            artifact: Some(text),
            outcome: Outcome::Ok,
        }
    }
}

fn to_json(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable report")
}

fn graph_json(g: &UnitGraph) -> Value {
    json!({ "n": g.n(), "m": g.m(), "edges": g.edges() })
}

fn flag_outcome(f: Flag) -> Outcome {
    if f == Flag::Inconclusive {
        Outcome::Saturated
    } else {
        Outcome::Ok
    }
}

fn run(verb: Verb, opts: &Opts) -> Result<Report, Error> {
    let load = |s: &str| load(s, opts.seed);
    Ok(match verb {
        Verb::Build { input } => {
            let inp = load(&input)?;
            let fam = inp.family("build")?;
            let model = build(fam);
            let cut = to_interval(&model).ok().map(|iv| iv.cut);
            let mut j = graph_json(&model.graph);
            j["interval"] = json!(cut.is_some());
            j["cut"] = to_json(&cut);
            j["proper"] = json!(is_proper(fam));
            Report::artifact(j, model.graph.to_string())
        }
        Verb::Delta { input } => {
            let g = load(&input)?.graph();
            let r = delta_sup(&g, opts.geodesic_cap);
            let mut text = format!("delta = {}\n", r.delta);
            if let Some(w) = &r.witness {
                let corners: Vec<String> = w.triangle.corners.iter().map(ToString::to_string).collect();
                text += &format!("witness: triangle {} side {} point {}\n", corners.join(" "), w.side, w.point);
            }
            if r.saturated {
                text += "saturated: geodesic cap reached, value is a lower bound\n";
            }
            let outcome = if r.saturated { Outcome::Saturated } else { Outcome::Ok };
            Report::new(to_json(&r), text, outcome)
        }
        Verb::Rho { input } => {
            let inp = load(&input)?;
            let r = rho(inp.family("rho")?);
            let text = format!("rho = {}\ncover: {}\n", r.rho, r.labels.join(" "));
            Report::new(to_json(&r), text, Outcome::Ok)
        }
        Verb::Classify { input } => {
            let inp = load(&input)?;
            let model = build(inp.family("classify")?);
            let r = circular_report(&model);
            let mut outcome = [r.zero_property, r.three_quarter_property, r.rho_property]
                .into_iter()
                .map(flag_outcome)
                .max()
                .unwrap_or(Outcome::Ok);
            let mut j = to_json(&r);
            let mut text = format!(
                "rho = {}\nproper = {}\ndelta in [{}, {}]\nzero property: {:?}\nthree-quarter property: {:?}\nrho property: {:?}\n",
                r.rho, r.proper, r.lower, r.upper, r.zero_property, r.three_quarter_property, r.rho_property
            );
            if let Some(c) = &r.interval {
                text += &format!("interval property {:?}, delta = {}\n", c.property, c.predicted_delta);
            }
            if let (Some(cap), Ok(iv)) = (opts.cycle_cap, to_interval(&model)) {
                match interval_property_by_cycles(&iv, OneMode::default(), cap) {
                    Ok(c) => {
                        if Some(c) != r.interval {
                            outcome = Outcome::Violation;
                            text += "cycle enumeration disagrees with the block evaluation\n";
                        }
                        j["interval_by_cycles"] = to_json(&c);
                    }
                    Err(Error::Saturated(n)) => {
                        outcome = outcome.max(Outcome::Saturated);
                        text += &format!("cycle enumeration saturated at {n} cycles\n");
                        j["interval_by_cycles"] = Value::Null;
                    }
                    Err(e) => return Err(e),
                }
            }
            Report::new(j, text, outcome)
        }
        Verb::Verify {
            input,
            no_line,
            no_complement,
        } => {
            let v = VerifyOptions {
                geodesic_cap: opts.geodesic_cap,
                line: !no_line,
                complement: !no_complement,
            };
            let r = match load(&input)? {
                Input::Family(f) => verify_family(&f, &v),
                Input::Graph(g) => verify_graph(&g, &v),
            };
            let mut text = String::new();
            for c in &r.checks {
                let tag = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Inconclusive => "inconclusive",
                };
                text += &format!("{tag:<12} {:<24} {}\n", c.name, c.detail);
            }
            let outcome = if !r.passed() {
                Outcome::Violation
            } else if r.saturated || r.checks.iter().any(|c| c.status == Status::Inconclusive) {
                Outcome::Saturated
            } else {
                Outcome::Ok
            };
            Report::new(to_json(&r), text, outcome)
        }
        Verb::Gen { name, params } => {
            let mut spec = FamilySpec::new(name);
            spec.seed = opts.seed;
            for kv in &params {
                let (k, v) = split_param(kv)?;
                spec = spec.param(k, v);
            }
            match generate(&spec)? {
                Generated::Family(f) => {
                    let text = f.to_string();
                    Report::artifact(json!({ "kind": "family", "family": to_json(&f) }), text)
                }
                Generated::Graph(g) => {
                    let text = g.to_string();
                    let mut j = graph_json(&g);
                    j["kind"] = json!("graph");
                    Report::artifact(j, text)
                }
            }
        }
        Verb::Complement { input } => {
            let c = complement(&load(&input)?.graph());
            Report::artifact(graph_json(&c), c.to_string())
        }
        Verb::Line { input } => {
            let lm = line_graph(&load(&input)?.graph())?;
            let mut j = graph_json(&lm.line);
            j["edge_index"] = json!(lm.edge_index);
            Report::artifact(j, lm.line.to_string())
        }
        Verb::Oracle { input } => {
            let inp = load(&input)?;
            let delta = delta_oracle(&inp.graph())?;
            let rho = match &inp {
                Input::Family(f) => Some(rho_oracle(f)?),
                Input::Graph(_) => None,
            };
            let mut text = format!("delta = {delta}\n");
            if let Some(r) = rho {
                text += &format!("rho = {r}\n");
            }
            let mut j = json!({ "delta": to_json(&delta) });
            if let Some(r) = rho {
                j["rho"] = json!(r);
            }
            Report::new(j, text, Outcome::Ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = cli.opts;
    match run(cli.verb, &opts) {
        Ok(mut report) => {
            if let Some(art) = report.artifact.take() {
                match &opts.output {
                    Some(path) => {
                        if let Err(e) = fs::write(path, art) {
                            eprintln!("error: {path}: {e}");
                            return ExitCode::from(2);
                        }
                        report.json["written"] = json!(path);
                        report.text = format!("wrote {path}\n");
                    }
                    None if !opts.json => report.text = art,
                    None => {}
                }
            }
            if opts.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.outcome.code())
        }
        Err(e) => {
            let code = error_code(&e);
            if opts.json {
                println!("{}", json!({ "error": e.to_string(), "exit": code }));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
