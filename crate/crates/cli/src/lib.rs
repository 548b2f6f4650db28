//! Request/response layer behind the `prym-loci` binary.
//!
//! A [`Request`] names a command and its inputs; [`run`] dispatches it and
//! returns the full response document, and [`error_response`] builds the
//! document for a failure. Both carry the top-level `"schema"` tag.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use prym_loci::signedperm::MAX_ENUM_N;
use prym_loci::{
    build_triple_with, compute_class, count_syt_enum, count_syt_formula, degree, degree_via_syt,
    enumerate_syt, expected_dim, is_nonempty, length_d, minimal_vexillary, partition_of,
    validate_pair, BetaMode, PfaffianOptions, ShiftedShape, SignedPermutation, StrictPartition,
    TieBreak, Triple, VanishingPair,
};

pub const SCHEMA: &str = "prym-loci/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Validate,
    Triple,
    Partition,
    Vexillary,
    Class,
    Degree,
    Syt,
    Nonempty,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SytMode {
    #[default]
    Count,
    List,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    /// Rank of the signed permutation group searched by `vexillary`.
    pub n: Option<usize>,
    pub beta_mode: BetaMode,
    pub max_beta_pow: Option<u32>,
    pub max_class_index: Option<u32>,
    pub tie_break: TieBreak,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a_prime: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_prime: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<i64>,
    /// A strict partition given directly instead of a pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<u32>>,
    #[serde(default)]
    pub mode: SytMode,
    #[serde(default)]
    pub options: Options,
}

impl Request {
    pub fn new(command: Command) -> Self {
        Request {
            command,
            a_prime: None,
            b_prime: None,
            g: None,
            lambda: None,
            mode: SytMode::default(),
            options: Options::default(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] prym_loci::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse_error",
            CliError::Core(e) => e.code(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

/// Where the triple of a request comes from, after validation.
enum Source {
    Pair(VanishingPair),
    Partition(StrictPartition),
}

fn source(req: &Request) -> Result<Source, CliError> {
    match (&req.a_prime, &req.b_prime, &req.lambda) {
        (Some(a), Some(b), None) => Ok(Source::Pair(VanishingPair::new(a, b, req.g)?)),
        (None, None, Some(parts)) => Ok(Source::Partition(StrictPartition::new(parts.clone())?)),
        (None, None, None) => Err(CliError::Parse(
            "request needs a_prime and b_prime, or lambda".into(),
        )),
        (_, _, Some(_)) => Err(CliError::Parse(
            "give either a_prime/b_prime or lambda, not both".into(),
        )),
        _ => Err(CliError::Parse(
            "a_prime and b_prime must be given together".into(),
        )),
    }
}

fn genus(req: &Request) -> Result<Option<u32>, CliError> {
    req.g
        .map(|g| u32::try_from(g).map_err(|_| CliError::Parse(format!("g = {g} is out of range"))))
        .transpose()
}

fn require_genus(req: &Request) -> Result<u32, CliError> {
    genus(req)?.ok_or_else(|| CliError::Parse(format!("command {:?} needs g", req.command)))
}

/// Integers as JSON numbers when they fit in `u64`, as decimal strings otherwise.
fn int_value(x: &BigInt) -> Value {
    match u64::try_from(x) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(x.to_string()),
    }
}

fn pfaffian_options(opts: &Options) -> PfaffianOptions {
    let mut out = PfaffianOptions::default();
    if let Some(m) = opts.max_beta_pow {
        out.max_beta_pow = m;
    }
    out.max_class_index = opts.max_class_index;
    out
}

/// Dispatches a request and returns the response document.
pub fn run(req: &Request) -> Result<Value, CliError> {
    let mut doc = Map::new();
    doc.insert("schema".into(), SCHEMA.into());
    doc.insert("status".into(), "ok".into());
    doc.insert(
        "command".into(),
        serde_json::to_value(req.command).expect("plain enum"),
    );

    let g = genus(req)?;

    if req.command == Command::Validate {
        let (a, b) = match (&req.a_prime, &req.b_prime) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(CliError::Parse("validate needs a_prime and b_prime".into())),
        };
        doc.insert(
            "input".into(),
            json!({ "a_prime": a, "b_prime": b, "g": req.g }),
        );
        let report = validate_pair(a, b, req.g);
        if report.ok {
            let pair = VanishingPair::new(a, b, req.g)?;
            let triple = build_triple_with(&pair, req.options.tie_break)?;
            echo_triple(&mut doc, &triple);
        }
        doc.insert(
            "result".into(),
            serde_json::to_value(&report).expect("report serializes"),
        );
        return Ok(Value::Object(doc));
    }

    let triple = match source(req)? {
        Source::Pair(pair) => {
            doc.insert(
                "input".into(),
                json!({ "a_prime": pair.a_prime(), "b_prime": pair.b_prime(), "g": g }),
            );
            build_triple_with(&pair, req.options.tie_break)?
        }
        Source::Partition(lambda) => {
            doc.insert("input".into(), json!({ "lambda": lambda.parts(), "g": g }));
            Triple::from_partition(&lambda)
        }
    };
    echo_triple(&mut doc, &triple);
    let lambda = partition_of(&triple);

    let result = match req.command {
        Command::Validate => unreachable!("handled above"),
        Command::Triple => json!({ "p": triple.p(), "q": triple.q(), "k": triple.k() }),
        Command::Partition => json!({
            "lambda": lambda.parts(),
            "weight": lambda.weight(),
            "length": lambda.len(),
        }),
        Command::Vexillary => {
            let (n, w) = match req.options.n {
                Some(n) => (n, minimal_vexillary(&triple, n)?),
                None => smallest_vexillary(&triple)?,
            };
            json!({ "n": n, "window": w.window(), "length": length_d(&w) })
        }
        Command::Class => {
            let g = require_genus(req)?;
            let opts = pfaffian_options(&req.options);
            let class = compute_class(&triple, g, req.options.beta_mode, &opts)?;
            let mut out = serde_json::to_value(&class).expect("class serializes");
            if req.options.beta_mode != BetaMode::Zero {
                out["max_beta_pow"] = opts.max_beta_pow.into();
                out["max_class_index"] = opts.class_index_bound(&lambda).into();
            }
            out["beta_mode"] = serde_json::to_value(req.options.beta_mode).expect("plain enum");
            out
        }
        Command::Degree => {
            let g = g.unwrap_or(lambda.weight() + 1);
            let closed = degree(&triple, g)?;
            let syt = degree_via_syt(&triple)?;
            json!({
                "g": g,
                "degree": int_value(&closed),
                "degree_via_syt": int_value(&syt),
                "agree": closed == syt,
            })
        }
        Command::Syt => {
            let shape = ShiftedShape::new(lambda.clone());
            match req.mode {
                SytMode::Count => json!({
                    "enum": int_value(&count_syt_enum(&shape)?),
                    "formula": int_value(&count_syt_formula(&shape)?),
                }),
                SytMode::List => {
                    let all = enumerate_syt(&shape)?;
                    json!({ "count": all.len(), "tableaux": all })
                }
            }
        }
        Command::Nonempty => {
            let g = require_genus(req)?;
            json!({
                "g": g,
                "nonempty": is_nonempty(g, &triple),
                "expected_dim": expected_dim(g, &triple),
            })
        }
    };
    doc.insert("result".into(), result);
    Ok(Value::Object(doc))
}

/// Searches `n = max index + 1, …` up to the enumeration limit.
fn smallest_vexillary(triple: &Triple) -> Result<(usize, SignedPermutation), CliError> {
    let start = (triple.max_index() as usize + 1).max(1);
    let mut last = None;
    for n in start..=MAX_ENUM_N.max(start) {
        match minimal_vexillary(triple, n) {
            Ok(w) => return Ok((n, w)),
            Err(e @ prym_loci::Error::NoSolution { .. }) => last = Some(e),
            Err(e) => return Err(e.into()),
        }
    }
    Err(last.expect("loop runs at least once").into())
}

fn echo_triple(doc: &mut Map<String, Value>, triple: &Triple) {
    doc.insert(
        "triple".into(),
        json!({ "p": triple.p(), "q": triple.q(), "k": triple.k() }),
    );
    doc.insert("lambda".into(), json!(partition_of(triple).parts()));
}

pub fn error_response(err: &CliError) -> Value {
    json!({
        "schema": SCHEMA,
        "status": "error",
        "error": { "code": err.code(), "message": err.to_string() },
    })
}

/// Pretty JSON with a trailing newline.
pub fn render_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("values serialize");
    s.push('\n');
    s
}

/// Two-column `key  value` listing of the echoed data and result fields.
pub fn render_table(doc: &Value) -> String {
    let mut rows: Vec<(String, String)> = Vec::new();
    let compact = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    for key in ["status", "command"] {
        if let Some(v) = doc.get(key) {
            rows.push((key.to_string(), compact(v)));
        }
    }
    for section in ["input", "triple", "result", "error"] {
        if let Some(Value::Object(map)) = doc.get(section) {
            for (k, v) in map {
                rows.push((format!("{section}.{k}"), compact(v)));
            }
        }
    }
    if let Some(v) = doc.get("lambda") {
        rows.push(("lambda".into(), compact(v)));
    }
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}
