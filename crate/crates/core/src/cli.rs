//! The `coringlab` command line. Every verb writes a [`ResultEnvelope`];
//! the exit status is 0 when every check passes, 2 when some axiom fails
//! (the envelope is still written) and 1 on usage, parse or input errors.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::{json, Map, Value};

use crate::algebra::{parse_presentation, realize, AlgebraPresentation};
use crate::bar::tor_bialgebra_bounded;
use crate::comodule::{descend_comodule, induce_comodule, random_comodule};
use crate::coring::{coring_tensor, exterior_bialgebra, galois_coring, DegreeMode, GaloisExtension, Report, Status};
use crate::error::{Error, Result};
use crate::io::encode::parse_field;
use crate::io::payload::DATA;
use crate::io::{
    check_payload, from_json, read_envelope, write_atomic, AlgebraJson, BialgebraJson, ComoduleJson, CoringJson, DescentJson, EndoJson,
    ExtractedJson, Payload, ResultEnvelope, StableCoringJson, Timing, TorHopfJson,
};
use crate::stable::{shifted_subgroup_coring, stable_endomorphism_algebra};
use crate::watts::{extract_coring, ComonadSpec, ComonadSpecJson};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_BATTERY: usize = 20;
pub const DEFAULT_RING_BOUND: i64 = 8;
pub const DEFAULT_DESCENT_DIM: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "coringlab", version, about = "Exact corings, Tor Hopf algebras and comodules")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Print a table rendered from the JSON result instead of the JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for random test batteries (default 0).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// JSON file with default values for flags, keyed by flag name.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Where to write the result envelope (default: standard output).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Input envelope for `dualize` and `check`.
    #[arg(long = "in", global = true)]
    pub input: Option<PathBuf>,
    /// Global cap on every internal degree bound.
    #[arg(long, global = true, env = "CORINGLAB_MAX_DEGREE")]
    pub degree_cap: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Tor Hopf algebra of a presented ring.
    Tor {
        #[arg(long)]
        ring: Option<String>,
        /// Largest homological degree.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Largest internal degree (default: homological bound times the
        /// largest generator degree).
        #[arg(long)]
        internal_degree: Option<i64>,
        /// `hopf` (default) or `bialgebra`.
        #[arg(long)]
        check: Option<String>,
    },
    /// Graded dual of the bialgebra in `--in`.
    Dualize,
    /// Coring of a cyclic shifted subgroup of `(Z/p)^r`.
    Shifted {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        r: Option<usize>,
        /// Comma separated coordinates of the point.
        #[arg(long)]
        point: Option<String>,
    },
    /// Galois coring of an extension, optionally tensored with an exterior
    /// bialgebra.
    Galois {
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        exterior: Option<usize>,
    },
    /// Coring extracted from a comonad given as a JSON file.
    Extract {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        battery: Option<usize>,
        /// Degree bound for realizing infinite rings (default 8).
        #[arg(long)]
        max_degree: Option<i64>,
    },
    /// Stable endomorphism algebra of `⊕_{i<p} k[t]/(t^i)`.
    Endo {
        #[arg(long)]
        p: Option<u64>,
    },
    /// Re-checks the envelope in `--in`.
    Check,
    /// Galois descent of induced comodules on a seeded battery.
    Descend {
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        exterior: Option<usize>,
        #[arg(long)]
        battery: Option<usize>,
        #[arg(long)]
        max_dim: Option<usize>,
    },
}

fn usage(message: impl Into<String>) -> Error {
    Error::Unsupported(message.into())
}

/// Flag values with fallback to the configuration file.
struct Options {
    config: Map<String, Value>,
    echo: Map<String, Value>,
}

impl Options {
    fn load(path: Option<&Path>, allowed: &[&str]) -> Result<Self> {
        let config = match path {
            None => Map::new(),
            Some(p) => match serde_json::from_str::<Value>(&std::fs::read_to_string(p)?) {
                Ok(Value::Object(m)) => m,
                Ok(_) => return Err(Error::Schema { path: "/".into(), message: "configuration must be an object".into() }),
                Err(e) => return Err(Error::Schema { path: "/".into(), message: e.to_string() }),
            },
        };
        for key in config.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::Schema { path: format!("/{key}"), message: "unknown configuration key".into() });
            }
        }
        Ok(Options { config, echo: Map::new() })
    }

    fn get<T: DeserializeOwned + serde::Serialize + Clone>(&mut self, key: &str, flag: Option<T>) -> Result<Option<T>> {
        let value = match flag {
            Some(v) => Some(v),
            None => match self.config.get(key) {
                None => None,
                Some(v) => Some(
                    serde_json::from_value(v.clone()).map_err(|e| Error::Schema { path: format!("/{key}"), message: e.to_string() })?,
                ),
            },
        };
        if let Some(v) = &value {
            self.echo.insert(key.into(), serde_json::to_value(v).expect("serializable"));
        }
        Ok(value)
    }

    fn require<T: DeserializeOwned + serde::Serialize + Clone>(&mut self, key: &str, flag: Option<T>) -> Result<T> {
        self.get(key, flag)?.ok_or_else(|| usage(format!("--{key} is required")))
    }

    fn or<T: DeserializeOwned + serde::Serialize + Clone>(&mut self, key: &str, flag: Option<T>, default: T) -> Result<T> {
        Ok(self.get(key, flag)?.unwrap_or(default))
    }
}

fn capped(bound: i64, cap: Option<i64>) -> i64 {
    cap.map_or(bound, |c| bound.min(c))
}

fn max_generator_degree(pres: &AlgebraPresentation) -> i64 {
    match pres {
        AlgebraPresentation::PolynomialQuotient(m) => m.vars.iter().map(|(_, d)| *d).max().unwrap_or(1).max(1),
        _ => 1,
    }
}

fn read_payload(input: Option<&Path>) -> Result<(ResultEnvelope, Payload)> {
    let path = input.ok_or_else(|| usage("--in is required"))?;
    let env = read_envelope(path)?;
    let payload = env.payload.clone();
    Ok((env, payload))
}

/// Runs a verb and returns its payload; `check` is handled by the caller.
fn compute(cli: &Cli, opts: &mut Options) -> Result<Payload> {
    let cap = opts.get("degree-cap", cli.degree_cap)?;
    let seed = opts.or("seed", cli.seed, DEFAULT_SEED)?;
    match &cli.verb {
        Verb::Tor { ring, max_degree, internal_degree, check } => {
            let ring: String = opts.require("ring", ring.clone())?;
            let n_max: usize = opts.require("max-degree", *max_degree)?;
            let check = opts.or("check", check.clone(), "hopf".to_string())?;
            if check != "hopf" && check != "bialgebra" {
                return Err(usage(format!("--check must be hopf or bialgebra, not {check:?}")));
            }
            let pres = parse_presentation(&ring)?;
            let default = n_max.max(1) as i64 * max_generator_degree(&pres);
            let d_max = capped(opts.or("internal-degree", *internal_degree, default)?, cap);
            let a = realize(&pres, d_max)?;
            let t = tor_bialgebra_bounded(&a, n_max, d_max)?;
            Ok(Payload::Tor(TorHopfJson::encode(&t)))
        }
        Verb::Dualize => {
            let (_, payload) = read_payload(cli.input.as_deref())?;
            opts.echo.insert("in".into(), json!(cli.input.as_ref().map(|p| p.display().to_string())));
            let b = match &payload {
                Payload::Tor(t) => t.decode(DATA)?.hopf,
                Payload::Bialgebra(b) => b.decode(DATA)?,
                other => return Err(usage(format!("cannot dualize a {} payload", other.kind()))),
            };
            Ok(Payload::Bialgebra(BialgebraJson::encode(&b.dual()?)))
        }
        Verb::Shifted { p, r, point } => {
            let p: u64 = opts.require("p", *p)?;
            let r: usize = opts.require("r", *r)?;
            let text: String = opts.require("point", point.clone())?;
            let point = text
                .split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|_| usage(format!("bad coordinate {s:?} in --point"))))
                .collect::<Result<Vec<_>>>()?;
            Ok(Payload::StableCoring(Box::new(StableCoringJson::encode(&shifted_subgroup_coring(p, r, &point)?))))
        }
        Verb::Galois { field, exterior } => {
            let text: String = opts.require("field", field.clone())?;
            let g = GaloisExtension::new(&parse_field(&text, "/field")?)?;
            let c = match opts.get("exterior", *exterior)? {
                Some(n) => coring_tensor(&exterior_bialgebra(n, DegreeMode::Graded, &g.base), &g)?,
                None => galois_coring(&g),
            };
            Ok(Payload::Coring(CoringJson::encode(&c)))
        }
        Verb::Extract { spec, battery, max_degree } => {
            let path: PathBuf = opts.require("spec", spec.clone())?;
            let spec_json: ComonadSpecJson = from_json(&std::fs::read_to_string(&path)?)?;
            let battery = opts.or("battery", *battery, DEFAULT_BATTERY)?;
            let degree_bound = capped(opts.or("max-degree", *max_degree, DEFAULT_RING_BOUND)?, cap);
            let spec = ComonadSpec::from_json(&spec_json, degree_bound)?;
            let c = extract_coring(&spec)?;
            Ok(Payload::Extracted(Box::new(ExtractedJson { spec: spec_json, degree_bound, battery, seed, coring: CoringJson::encode(&c.coring) })))
        }
        Verb::Endo { p } => {
            let p: u64 = opts.require("p", *p)?;
            let e = stable_endomorphism_algebra(p)?;
            Ok(Payload::StableEndo(EndoJson { p, algebra: AlgebraJson::encode(&e.algebra) }))
        }
        Verb::Descend { field, exterior, battery, max_dim } => {
            let text = opts.or("field", field.clone(), "Q(i)".to_string())?;
            let n = opts.or("exterior", *exterior, 1)?;
            let battery = opts.or("battery", *battery, DEFAULT_BATTERY)?;
            let max_dim = opts.or("max-dim", *max_dim, DEFAULT_DESCENT_DIM)?;
            let g = GaloisExtension::new(&parse_field(&text, "/field")?)?;
            let d = exterior_bialgebra(n, DegreeMode::Graded, &g.base);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut induced = Vec::with_capacity(battery);
            let mut descended = Vec::with_capacity(battery);
            for _ in 0..battery {
                let up = induce_comodule(&random_comodule(&d, max_dim, &mut rng), &d, &g)?;
                let down = descend_comodule(&up, &d, &g)?;
                induced.push(ComoduleJson::encode(&up));
                descended.push(ComoduleJson::encode(&down));
            }
            Ok(Payload::Descent(DescentJson { extension: text, coalgebra: BialgebraJson::encode(&d), induced, descended }))
        }
        Verb::Check => unreachable!("handled by run"),
    }
}

/// Checks for a payload; a Tor payload computed with `--check bialgebra`
/// skips the antipode laws.
pub fn report_for(payload: &Payload, inputs: &Value) -> Result<Report> {
    if let (Payload::Tor(t), Some("bialgebra")) = (payload, inputs.get("check").and_then(Value::as_str)) {
        return Ok(t.decode(DATA)?.hopf.check());
    }
    check_payload(payload)
}

fn verb_name(v: &Verb) -> &'static str {
    match v {
        Verb::Tor { .. } => "tor",
        Verb::Dualize => "dualize",
        Verb::Shifted { .. } => "shifted",
        Verb::Galois { .. } => "galois",
        Verb::Extract { .. } => "extract",
        Verb::Endo { .. } => "endo",
        Verb::Check => "check",
        Verb::Descend { .. } => "descend",
    }
}

fn allowed_keys(v: &Verb) -> Vec<&'static str> {
    let mut keys = vec!["seed", "degree-cap", "pretty", "out", "in"];
    keys.extend(match v {
        Verb::Tor { .. } => &["ring", "max-degree", "internal-degree", "check"][..],
        Verb::Shifted { .. } => &["p", "r", "point"],
        Verb::Galois { .. } => &["field", "exterior"],
        Verb::Extract { .. } => &["spec", "battery", "max-degree"],
        Verb::Endo { .. } => &["p"],
        Verb::Descend { .. } => &["field", "exterior", "battery", "max-dim"],
        Verb::Dualize | Verb::Check => &[],
    });
    keys
}

/// A plain-text rendering of an envelope's JSON.
pub fn render(envelope: &Value) -> String {
    let mut out = String::new();
    let payload = &envelope["payload"];
    out.push_str(&format!("kind        {}\n", payload["kind"].as_str().unwrap_or("?")));
    out.push_str(&format!("convention  {}\n", envelope["convention"].as_str().unwrap_or("?")));
    let data = &payload["data"];
    if let Some(basis) = data["basis"].as_array().or_else(|| data["coring"]["basis"].as_array()).or_else(|| data["algebra"]["basis"].as_array()) {
        out.push_str(&format!("dimension   {}\n", basis.len()));
        if payload["kind"] == "tor" {
            let n = data["n_max"].as_u64().unwrap_or(0) as usize;
            let mut dims = vec![0; n + 1];
            for b in basis {
                if let Some(s) = b["hdeg"].as_u64() {
                    if (s as usize) <= n {
                        dims[s as usize] += 1;
                    }
                }
            }
            out.push_str(&format!("dims        {dims:?}\n"));
        }
    }
    if let Some(entries) = envelope["report"].as_array() {
        for e in entries {
            let status = if e["status"] == "pass" { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {}", e["axiom"].as_str().unwrap_or("?")));
            if let Some(w) = e["witness"].as_str() {
                out.push_str(&format!("  ({w})"));
            }
            if let Some(s) = e["skipped"].as_u64() {
                out.push_str(&format!("  [{s} skipped]"));
            }
            out.push('\n');
        }
    }
    out
}

fn emit(cli: &Cli, envelope: &ResultEnvelope) -> Result<()> {
    let value = serde_json::to_value(envelope).expect("serializable");
    let text = serde_json::to_string_pretty(&value).expect("serializable") + "\n";
    if let Some(path) = &cli.out {
        write_atomic(path, &text)?;
    }
    if cli.pretty {
        print!("{}", render(&value));
    } else if cli.out.is_none() {
        print!("{text}");
    }
    Ok(())
}

fn failures(report: &Report) -> Vec<String> {
    report
        .entries
        .iter()
        .filter(|e| e.status == Status::Fail)
        .map(|e| match &e.witness {
            Some(w) => format!("{}: {w}", e.axiom),
            None => e.axiom.clone(),
        })
        .collect()
}

fn execute(cli: &Cli) -> Result<i32> {
    let start = Instant::now();
    let mut opts = Options::load(cli.config.as_deref(), &allowed_keys(&cli.verb))?;
    let (inputs, payload, report, stale) = if let Verb::Check = cli.verb {
        let (env, payload) = read_payload(cli.input.as_deref())?;
        let report = report_for(&payload, &env.inputs)?;
        let stale = report != env.report;
        (env.inputs, payload, report, stale)
    } else {
        let payload = compute(cli, &mut opts)?;
        let mut inputs = opts.echo.clone();
        inputs.insert("verb".into(), json!(verb_name(&cli.verb)));
        let inputs = Value::Object(inputs);
        let report = report_for(&payload, &inputs)?;
        (inputs, payload, report, false)
    };
    let envelope = ResultEnvelope {
        inputs,
        convention: payload.convention(),
        payload,
        report,
        timing: Timing { seconds: start.elapsed().as_secs_f64() },
    };
    emit(cli, &envelope)?;
    let failed = failures(&envelope.report);
    for f in &failed {
        eprintln!("axiom failed: {f}");
    }
    if stale {
        eprintln!("stored report differs from the recomputed report");
    }
    Ok(if failed.is_empty() && !stale { 0 } else { 2 })
}

/// Parses `argv` (program name first) and runs the verb, returning the
/// exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
