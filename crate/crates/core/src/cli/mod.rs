//! The `cxkit` command-line front end.
//!
//! Every subcommand prints deterministic text, or with `--json` a single
//! [`JsonReport`] line. Exit codes: 0 success, 1 a trace rejected by
//! `verify`, 2 malformed input, 3 size guard or search budget exceeded.

pub mod report;

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::braid::greedy_normal_form;
use crate::coxeter::{CoxeterSystem, GeneratorSubset, DEFAULT_MAX_ORDER};
use crate::error::Error;
use crate::fconj::{all_f_classes, f_conjugacy_class, reduce_to_min};
use crate::invariants::{
    component_count, dl_dimension, f_support, is_coxeter_element, is_irreducible_dl, smoothness_certificate,
    strata_count, DLTuple, SmoothnessKind,
};
use crate::reduction::{reduce_word, verify_trace, ReductionReport, ReductionResult};
use crate::twist::{parse_cycles, registry_twist_with_limit, Twist};
use crate::word::Word;

pub use report::{BatchRecord, ErrorRecord, JsonReport, RequestEcho, Timing, SCHEMA_VERSION};

/// Environment variable overriding the `|W|` size guard.
pub const MAX_W_ENV: &str = "CXKIT_MAX_W";

#[derive(Debug, Parser)]
#[command(name = "cxkit", version, about = "Twisted Coxeter group computations with verifiable reduction traces")]
pub struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock timing in the output.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    /// Type descriptor, e.g. `A3`, `2A3`, `3D4`, `B2xG2`.
    #[arg(long)]
    pub system: String,
    /// Explicit twist as a cycle list, e.g. `(1 3)(2 4)`.
    #[arg(long)]
    pub twist: Option<String>,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Payload {
    /// A word over S; as a tuple it is the tuple of its letters.
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    /// Comma-separated words, one Weyl element per factor.
    #[arg(long, allow_hyphen_values = true)]
    pub tuple: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Coxeter and Cartan matrices, roots and twist data.
    System {
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// Reduce a word to a minimal length element and print the trace.
    Reduce {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
    },
    /// List all F-conjugacy classes.
    Classes {
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// Descend from alpha(word) to a minimal length element by cyclic shifts.
    Minlen {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
    },
    /// Component-count polynomial of a word or tuple.
    Components {
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        payload: Payload,
        /// Evaluate at an integer q.
        #[arg(long)]
        q: Option<i64>,
        /// Evaluate at q = P^(E/2), given as `P:E`.
        #[arg(long)]
        q_root: Option<String>,
    },
    /// F-support, irreducibility, dimension and strata count.
    Support {
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        payload: Payload,
    },
    /// Smoothness certificate of a word or tuple.
    Smooth {
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        payload: Payload,
    },
    /// Left-greedy normal form in the positive braid monoid.
    #[command(name = "braid-nf")]
    BraidNf {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        word: String,
    },
    /// Re-check `reduce --json` reports read from a file or `-` (stdin).
    Verify {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Run one command per line of a file, emitting one JSON record per line.
    Batch { file: PathBuf },
}

/// Resource limits for one invocation.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub max_order: u64,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl Context {
    /// Reads [`MAX_W_ENV`].
    pub fn from_env() -> Result<Self, Failure> {
        match std::env::var(MAX_W_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_order| Context { max_order })
                .map_err(|_| Failure::Input(format!("{MAX_W_ENV}: not a positive integer: `{v}`"))),
            Err(_) => Ok(Context::default()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Input(String),
    Guard(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Guard(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_guard() {
            Failure::Guard(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

struct Outcome {
    request: RequestEcho,
    result: Value,
    text: String,
    exit: i32,
}

/// Entry point used by the binary: parses `argv` (including the program
/// name), runs the command and returns the exit code.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let ctx = match Context::from_env() {
        Ok(ctx) => ctx,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            return f.exit_code();
        }
    };
    run_cli(&cli, ctx, stdin, out, err)
}

/// Runs an already parsed command line.
pub fn run_cli(cli: &Cli, ctx: Context, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Command::Batch { file } = &cli.command {
        return run_batch(file, ctx, out, err);
    }
    let start = Instant::now();
    match execute(&cli.command, ctx, stdin) {
        Ok(outcome) => {
            let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let written = if cli.json {
                let report = JsonReport {
                    schema_version: SCHEMA_VERSION.to_string(),
                    request: outcome.request,
                    result: outcome.result,
                    timing: cli.timing.then_some(Timing { elapsed_ms }),
                };
                serde_json::to_string(&report)
                    .map_err(std::io::Error::other)
                    .and_then(|line| writeln!(out, "{line}"))
            } else {
                out.write_all(outcome.text.as_bytes()).and_then(|_| {
                    if cli.timing {
                        writeln!(out, "time: {elapsed_ms:.3} ms")
                    } else {
                        Ok(())
                    }
                })
            };
            match written {
                Ok(()) => outcome.exit,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}

fn run_batch(file: &PathBuf, ctx: Context, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let content = match std::fs::read_to_string(file) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read `{}`: {e}", file.display());
            return 2;
        }
    };
    for (i, raw) in content.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let record = match batch_line(line, ctx) {
            Ok(report) => BatchRecord {
                schema_version: SCHEMA_VERSION.to_string(),
                line: i + 1,
                report: Some(report),
                error: None,
            },
            Err(f) => BatchRecord {
                schema_version: SCHEMA_VERSION.to_string(),
                line: i + 1,
                report: None,
                error: Some(ErrorRecord {
                    exit_code: f.exit_code(),
                    message: f.message().to_string(),
                }),
            },
        };
        let line = serde_json::to_string(&record).expect("batch records serialize");
        if writeln!(out, "{line}").is_err() {
            return 2;
        }
    }
    0
}

fn batch_line(line: &str, ctx: Context) -> Result<JsonReport, Failure> {
    let tokens = shlex::split(line).ok_or_else(|| Failure::Input(format!("unbalanced quotes in `{line}`")))?;
    let cli = Cli::try_parse_from(std::iter::once("cxkit".to_string()).chain(tokens))
        .map_err(|e| Failure::Input(first_line(&e.to_string())))?;
    if matches!(cli.command, Command::Batch { .. } | Command::Verify { .. }) {
        return Err(Failure::Input("batch lines cannot run `batch` or `verify`".into()));
    }
    let start = Instant::now();
    let outcome = execute(&cli.command, ctx, &mut std::io::empty())?;
    Ok(JsonReport {
        schema_version: SCHEMA_VERSION.to_string(),
        request: outcome.request,
        result: outcome.result,
        timing: cli.timing.then(|| Timing {
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        }),
    })
}

fn first_line(text: &str) -> String {
    text.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string()
}

fn resolve_twist(args: &SystemArgs, ctx: Context) -> Result<Twist, Failure> {
    let tw = registry_twist_with_limit(&args.system, ctx.max_order)?;
    match &args.twist {
        None => Ok(tw),
        Some(_) if !tw.is_identity() => Err(Failure::Input(format!(
            "`{}` already carries a twist; drop --twist or use the untwisted descriptor",
            args.system
        ))),
        Some(cycles) => {
            let sigma = parse_cycles(cycles, tw.system().rank())?;
            Ok(Twist::new(tw.system_arc().clone(), sigma)?)
        }
    }
}

fn echo(command: &str, args: &SystemArgs) -> RequestEcho {
    RequestEcho {
        command: command.to_string(),
        system: Some(args.system.clone()),
        twist: args.twist.clone(),
        ..RequestEcho::default()
    }
}

fn parse_word(text: &str, sys: &CoxeterSystem) -> Result<Word, Failure> {
    Ok(Word::parse(text, sys.rank())?)
}

fn parse_tuple(text: &str, sys: &CoxeterSystem) -> Result<Vec<Word>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|part| parse_word(part, sys)).collect()
}

/// Resolves the payload to a tuple, echoing it into the request.
fn payload_tuple(payload: &Payload, sys: &CoxeterSystem, request: &mut RequestEcho) -> Result<DLTuple, Failure> {
    match (&payload.word, &payload.tuple) {
        (Some(w), _) => {
            let word = parse_word(w, sys)?;
            let t = DLTuple::from_word(sys, &word)?;
            request.word = Some(word);
            Ok(t)
        }
        (None, Some(t)) => {
            let words = parse_tuple(t, sys)?;
            let tuple = DLTuple::from_words(sys, &words)?;
            request.tuple = Some(words);
            Ok(tuple)
        }
        (None, None) => Err(Failure::Input("one of --word or --tuple is required".into())),
    }
}

fn labels(set: GeneratorSubset) -> Value {
    json!(set.iter().map(|s| s + 1).collect::<Vec<_>>())
}

fn orbit_list(orbits: &[GeneratorSubset]) -> Value {
    Value::Array(orbits.iter().map(|&b| labels(b)).collect())
}

fn show_orbits(orbits: &[GeneratorSubset]) -> String {
    let parts: Vec<String> = orbits.iter().map(|b| b.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn show_element_word(w: &Word) -> String {
    if w.is_empty() {
        "e".to_string()
    } else {
        w.to_string()
    }
}

fn execute(command: &Command, ctx: Context, stdin: &mut dyn Read) -> Result<Outcome, Failure> {
    match command {
        Command::System { sys } => cmd_system(sys, ctx),
        Command::Reduce { sys, word } => cmd_reduce(sys, word, ctx),
        Command::Classes { sys } => cmd_classes(sys, ctx),
        Command::Minlen { sys, word } => cmd_minlen(sys, word, ctx),
        Command::Components { sys, payload, q, q_root } => cmd_components(sys, payload, *q, q_root.as_deref(), ctx),
        Command::Support { sys, payload } => cmd_support(sys, payload, ctx),
        Command::Smooth { sys, payload } => cmd_smooth(sys, payload, ctx),
        Command::BraidNf { sys, word } => cmd_braid_nf(sys, word, ctx),
        Command::Verify { input } => cmd_verify(input, ctx, stdin),
        Command::Batch { .. } => Err(Failure::Input("nested batch".into())),
    }
}

fn ok(request: RequestEcho, result: Value, text: String) -> Result<Outcome, Failure> {
    Ok(Outcome {
        request,
        result,
        text,
        exit: 0,
    })
}

fn cmd_system(args: &SystemArgs, ctx: Context) -> Result<Outcome, Failure> {
    let tw = resolve_twist(args, ctx)?;
    let sys = tw.system();
    let orbits = tw.f_orbits();
    let result = json!({
        "descriptor": sys.descriptor(),
        "label": tw.label(),
        "rank": sys.rank(),
        "order": sys.order(),
        "coxeter_matrix": sys.coxeter_matrix(),
        "cartan_matrix": sys.cartan_matrix(),
        "positive_roots": sys.positive_roots(),
        "twist": {
            "cycles": tw.display_sigma(),
            "order": tw.order(),
            "orbits": orbit_list(orbits.blocks()),
            "q_constraint": tw.q_constraint(),
        },
    });
    let mut text = String::new();
    let _ = writeln!(text, "system: {} (rank {}, |W| = {})", sys.descriptor(), sys.rank(), sys.order());
    if let Some(label) = tw.label() {
        let _ = writeln!(text, "label: {label}");
    }
    let _ = writeln!(text, "coxeter matrix:");
    for row in sys.coxeter_matrix() {
        let cells: Vec<String> = row.iter().map(|m| format!("{m:>2}")).collect();
        let _ = writeln!(text, "  {}", cells.join(" "));
    }
    let _ = writeln!(text, "cartan matrix:");
    for row in sys.cartan_matrix() {
        let cells: Vec<String> = row.iter().map(|a| format!("{a:>2}")).collect();
        let _ = writeln!(text, "  {}", cells.join(" "));
    }
    let _ = writeln!(text, "positive roots ({}):", sys.positive_roots().len());
    for r in sys.positive_roots() {
        let _ = writeln!(text, "  {r:?}");
    }
    let _ = writeln!(text, "twist: {} (order {})", tw.display_sigma(), tw.order());
    let _ = writeln!(text, "F-orbits: {orbits}");
    if let Some(c) = tw.q_constraint() {
        let _ = writeln!(text, "q constraint: {c} (informational)");
    }
    ok(echo("system", args), result, text)
}

fn cmd_reduce(args: &SystemArgs, word: &str, ctx: Context) -> Result<Outcome, Failure> {
    let tw = resolve_twist(args, ctx)?;
    let w = parse_word(word, tw.system())?;
    let result = reduce_word(&tw, &w)?;
    let report = result.to_report(&tw);
    let mut text = String::new();
    let _ = writeln!(text, "input: {}", show_element_word(&w));
    let words = result.words(&tw).map_err(|v| Failure::Input(v.to_string()))?;
    for (i, (mv, after)) in result.trace.iter().zip(&words[1..]).enumerate() {
        let detail = match mv {
            crate::reduction::ReductionMove::BraidRewrite { .. } => "braid rewrite".to_string(),
            crate::reduction::ReductionMove::SquareContraction { position, .. } => {
                format!("contract square at {}", position + 1)
            }
            crate::reduction::ReductionMove::CyclicShiftLeft { generator } => {
                format!("shift left s{} -> F(s{}) = s{}", generator + 1, generator + 1, tw.image(*generator) + 1)
            }
            crate::reduction::ReductionMove::CyclicShiftRight { generator } => {
                format!("shift right F(s{}) = s{} -> s{}", generator + 1, tw.image(*generator) + 1, generator + 1)
            }
        };
        let _ = writeln!(text, "  {:>2}. {detail:<28} => {}   [{}]", i + 1, show_element_word(after), mv.tag());
    }
    let _ = writeln!(text, "final word: {}", show_element_word(&report.final_word));
    let _ = writeln!(text, "final element length: {}", report.final_length);
    let c = &report.class;
    let _ = writeln!(
        text,
        "class: size {}, min length {}, {}, representative {}, contains alpha(input): {}",
        c.size,
        c.min_length,
        if c.elliptic { "elliptic" } else { "not elliptic" },
        show_element_word(&c.representative),
        if c.contains_input { "yes" } else { "no" }
    );
    let mut request = echo("reduce", args);
    request.word = Some(w);
    let value = serde_json::to_value(&report).expect("report serializes");
    ok(request, value, text)
}

fn cmd_classes(args: &SystemArgs, ctx: Context) -> Result<Outcome, Failure> {
    let tw = resolve_twist(args, ctx)?;
    let sys = tw.system();
    let classes = all_f_classes(&tw)?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let _ = writeln!(text, "{} F-classes of {} (twist {})", classes.len(), sys.descriptor(), tw.display_sigma());
    let _ = writeln!(text, "{:>4}  {:>6}  {:>7}  {:<8}  {:<16}  minimal elements", "#", "size", "min len", "elliptic", "representative");
    for (i, c) in classes.iter().enumerate() {
        let minimal: Vec<Word> = c.minimal_elements().iter().map(|x| sys.canonical_reduced_word(x)).collect();
        let shown: Vec<String> = minimal.iter().map(show_element_word).collect();
        let _ = writeln!(
            text,
            "{:>4}  {:>6}  {:>7}  {:<8}  {:<16}  {}",
            i + 1,
            c.len(),
            c.min_length(),
            if c.is_elliptic() { "yes" } else { "no" },
            show_element_word(c.representative_word()),
            shown.join("; ")
        );
        rows.push(json!({
            "representative": c.representative_word(),
            "size": c.len(),
            "min_length": c.min_length(),
            "elliptic": c.is_elliptic(),
            "minimal_elements": minimal,
        }));
    }
    let result = json!({ "count": classes.len(), "classes": rows });
    ok(echo("classes", args), result, text)
}

fn cmd_minlen(args: &SystemArgs, word: &str, ctx: Context) -> Result<Outcome, Failure> {
    let tw = resolve_twist(args, ctx)?;
    let sys = tw.system();
    let w = parse_word(word, sys)?;
    let x = sys.element_from_word(&w)?;
    let (x0, path) = reduce_to_min(&tw, &x)?;
    let class = f_conjugacy_class(&tw, &x)?;
    let start = sys.canonical_reduced_word(&x);
    let end = sys.canonical_reduced_word(&x0);
    let steps: Vec<Value> = path
        .steps
        .iter()
        .map(|s| json!({ "generator": s.generator + 1, "result": sys.canonical_reduced_word(&s.result) }))
        .collect();
    let result = json!({
        "element": start,
        "length": sys.length(&x),
        "minimal": end,
        "minimal_length": sys.length(&x0),
        "class_min_length": class.min_length(),
        "class_size": class.len(),
        "path": steps,
    });
    let mut text = String::new();
    let _ = writeln!(text, "element: {} (length {})", show_element_word(&start), sys.length(&x));
    for s in &path.steps {
        let r = sys.canonical_reduced_word(&s.result);
        let _ = writeln!(text, "  conjugate by s{} -> {} (length {})", s.generator + 1, show_element_word(&r), r.len());
    }
    let _ = writeln!(text, "minimal: {} (length {}, class size {})", show_element_word(&end), end.len(), class.len());
    let mut request = echo("minlen", args);
    request.word = Some(w);
    ok(request, result, text)
}

fn parse_q_root(text: &str) -> Result<(u64, u32), Failure> {
    let bad = || Failure::Input(format!("--q-root expects `P:E`, got `{text}`"));
    let (p, e) = text.split_once(':').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, e.trim().parse().map_err(|_| bad())?))
}

fn cmd_components(
    args: &SystemArgs,
    payload: &Payload,
    q: Option<i64>,
    q_root: Option<&str>,
    ctx: Context,
) -> Result<Outcome, Failure> {
    let tw = resolve_twist(args, ctx)?;
    let mut request = echo("components", args);
    let tuple = payload_tuple(payload, tw.system(), &mut request)?;
    let poly = component_count(&tw, &tuple)?;
    let support = f_support(&tw, &tuple);
    let mut result = json!({
        "support": orbit_list(&support),
        "irreducible": is_irreducible_dl(&tw, &tuple),
        "polynomial": poly,
        "text": poly.to_string(),
    });
    let mut text = format!("{poly}\n");
    if let Some(q) = q {
        let v = poly.evaluate(q as i128)?;
        result["value"] = json!({ "q": q, "value": v.to_string() });
        let _ = writeln!(text, "at q = {q}: {v}");
    }
    if let Some(root) = q_root {
        let (p, e) = parse_q_root(root)?;
        let v = poly.evaluate_at_root_power(p, e)?;
        result["root_value"] = json!({
            "radicand": p,
            "half_exponent": e,
            "rational": v.rational.to_string(),
            "irrational": v.irrational.to_string(),
            "exact_integer": v.is_integer(),
        });
        let flag = if v.is_integer() { "" } else { " (irrational)" };
        let _ = writeln!(text, "at q = {p}^({e}/2): {v}{flag}");
    }
    ok(request, result, text)
}

fn cmd_support(args: &SystemArgs, payload: &Payload, ctx: Context) -> Result<Outcome, Failure> {
    let tw = resolve_twist(args, ctx)?;
    let sys = tw.system();
    let mut request = echo("support", args);
    let tuple = payload_tuple(payload, sys, &mut request)?;
    let orbits = tw.f_orbits();
    let support = f_support(&tw, &tuple);
    let irreducible = is_irreducible_dl(&tw, &tuple);
    let dimension = dl_dimension(sys, &tuple);
    let strata = strata_count(sys, &tuple)?;
    let coxeter = (tuple.len() == 1).then(|| is_coxeter_element(&tw, &tuple.elements()[0]));
    let result = json!({
        "orbits": orbit_list(orbits.blocks()),
        "support": orbit_list(&support),
        "irreducible": irreducible,
        "dimension": dimension,
        "strata": strata.to_string(),
        "coxeter_element": coxeter,
    });
    let mut text = String::new();
    let _ = writeln!(text, "F-orbits: {orbits}");
    let _ = writeln!(text, "F-support: {}", show_orbits(&support));
    let _ = writeln!(text, "irreducible: {}", if irreducible { "yes" } else { "no" });
    let _ = writeln!(text, "dimension: {dimension}");
    let _ = writeln!(text, "strata: {strata}");
    if let Some(c) = coxeter {
        let _ = writeln!(text, "coxeter element: {}", if c { "yes" } else { "no" });
    }
    ok(request, result, text)
}

fn cmd_smooth(args: &SystemArgs, payload: &Payload, ctx: Context) -> Result<Outcome, Failure> {
    let tw = resolve_twist(args, ctx)?;
    let sys = tw.system();
    let mut request = echo("smooth", args);
    let tuple = payload_tuple(payload, sys, &mut request)?;
    let verdict = smoothness_certificate(sys, &tuple)?;
    let mut text = String::new();
    let kind = match verdict.kind {
        SmoothnessKind::SmoothByDihedralLongest => "smooth (every factor is a dihedral longest element)",
        SmoothnessKind::RationallySmoothAllFactors => "rationally smooth (all factors palindromic)",
        SmoothnessKind::Unknown => "unknown (some factor is not rationally smooth)",
    };
    let _ = writeln!(text, "verdict: {kind}");
    for (i, f) in verdict.factors.iter().enumerate() {
        let mut line = format!("  factor {}: {}", i + 1, show_element_word(&f.word));
        if let Some(j) = f.dihedral_parabolic {
            let _ = write!(line, "  longest of W_{j}");
        }
        if let (Some(p), Some(pal)) = (&f.poincare, f.palindromic) {
            let _ = write!(line, "  P = {p}  {}", if pal { "palindromic" } else { "not palindromic" });
        }
        let _ = writeln!(text, "{line}");
    }
    if let Some(c) = &verdict.caveat {
        let _ = writeln!(text, "caveat: {c}");
    }
    let value = serde_json::to_value(&verdict).expect("verdict serializes");
    ok(request, value, text)
}

fn cmd_braid_nf(args: &SystemArgs, word: &str, ctx: Context) -> Result<Outcome, Failure> {
    let tw = resolve_twist(args, ctx)?;
    let sys = tw.system();
    let w = parse_word(word, sys)?;
    let nf = greedy_normal_form(sys, &w)?;
    let factors = nf.factor_words(sys);
    let shown: Vec<String> = factors.iter().map(|f| format!("[{f}]")).collect();
    let result = json!({
        "factors": factors,
        "word": nf.to_word(sys),
        "letter_count": nf.letter_count(sys),
    });
    let text = format!("{}\n", if shown.is_empty() { "[]".to_string() } else { shown.join(" ") });
    let mut request = echo("braid-nf", args);
    request.word = Some(w);
    ok(request, result, text)
}

/// Checks one `reduce` report; `Ok(Err(..))` is a rejected trace.
fn verify_report(report: &JsonReport, ctx: Context) -> Result<Result<(), String>, Failure> {
    if report.schema_version != SCHEMA_VERSION {
        return Err(Failure::Input(format!("unsupported schema_version `{}`", report.schema_version)));
    }
    if report.request.command != "reduce" {
        return Err(Failure::Input(format!("expected a `reduce` report, got `{}`", report.request.command)));
    }
    let system = report
        .request
        .system
        .clone()
        .ok_or_else(|| Failure::Input("report has no system".into()))?;
    let args = SystemArgs {
        system,
        twist: report.request.twist.clone(),
    };
    let tw = resolve_twist(&args, ctx)?;
    let body: ReductionReport =
        serde_json::from_value(report.result.clone()).map_err(|e| Failure::Input(format!("malformed reduce result: {e}")))?;
    if report.request.word.as_ref() != Some(&body.input) {
        return Ok(Err("request word and result input differ".into()));
    }
    let decoded = match ReductionResult::from_report(&tw, &body) {
        Ok(r) => r,
        Err(v) => return Ok(Err(v.to_string())),
    };
    Ok(verify_trace(&tw, &body.input, &decoded).map_err(|v| v.to_string()))
}

fn cmd_verify(input: &str, ctx: Context, stdin: &mut dyn Read) -> Result<Outcome, Failure> {
    let mut content = String::new();
    if input == "-" {
        stdin
            .read_to_string(&mut content)
            .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
    } else {
        content = std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("cannot read `{input}`: {e}")))?;
    }
    let mut verdicts = Vec::new();
    let mut text = String::new();
    let mut all_ok = true;
    for (i, item) in serde_json::Deserializer::from_str(&content).into_iter::<JsonReport>().enumerate() {
        let report = item.map_err(|e| Failure::Input(format!("report {}: {e}", i + 1)))?;
        let verdict = verify_report(&report, ctx)?;
        let word = report.request.word.clone().unwrap_or_default();
        match &verdict {
            Ok(()) => {
                let _ = writeln!(text, "ok: {} `{}`", report.request.system.as_deref().unwrap_or(""), word);
            }
            Err(reason) => {
                all_ok = false;
                let _ = writeln!(text, "rejected: {} `{}`: {reason}", report.request.system.as_deref().unwrap_or(""), word);
            }
        }
        verdicts.push(json!({
            "system": report.request.system,
            "word": word,
            "valid": verdict.is_ok(),
            "violation": verdict.err(),
        }));
    }
    if verdicts.is_empty() {
        return Err(Failure::Input("no reports to verify".into()));
    }
    let result = json!({ "valid": all_ok, "reports": verdicts });
    Ok(Outcome {
        request: RequestEcho {
            command: "verify".into(),
            input: Some(input.to_string()),
            ..RequestEcho::default()
        },
        result,
        text,
        exit: if all_ok { 0 } else { 1 },
    })
}
