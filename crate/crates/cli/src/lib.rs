//! Command implementations behind the `vreg` binary.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use vreg_core::collapse::{collapsibility_number_budgeted, is_vertex_decomposable, verify_collapse_trace};
use vreg_core::complex::independence_complex_of_graph;
use vreg_core::gallery::{verify_gallery, verify_gallery_with, ClaimStatus, Profile};
use vreg_core::graph6;
use vreg_core::homology::Field;
use vreg_core::invariants::{
    beta_number, beta_ve_number, induced_matching_budgeted, ive_number_budgeted, v_number_definition_budgeted,
    v_number_free_face_budgeted, VSearch,
};
use vreg_core::regularity::{reg_exact, reg_sandwich, RegConfig};
use vreg_core::{Clutter, Graph, SimplicialComplex};

pub const SCHEMA: u32 = 1;

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const CLAIM_FAILED: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const INDETERMINATE: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "vreg", version, about = "v-number, regularity and collapsibility of graphs and complexes")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Coefficient field: gf2, q or gf:p.
    #[arg(long, global = true, default_value = "gf2")]
    pub field: Field,
    /// Largest vertex count handled by Hochster's formula.
    #[arg(long, global = true, default_value_t = vreg_core::regularity::DEFAULT_HOCHSTER_THRESHOLD)]
    pub hochster_threshold: usize,
    /// Node budget for each search.
    #[arg(long, global = true, default_value_t = 1_000_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Exit with code 3 when any result is indeterminate.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "VREG_JOBS", value_parser = positive)]
    pub jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// By extension: .json edge list, .g6 graph6, otherwise sniffed.
    Auto,
    Graph6,
    Json,
    Facets,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Input file: graph6, JSON edge list or facet list.
    #[arg(required_unless_present = "g6", conflicts_with = "g6")]
    pub path: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every invariant with certificates.
    Invariants(InputArgs),
    /// The v-number by all applicable routes.
    Vnum(InputArgs),
    /// Regularity, exact or as a certified interval.
    Reg(InputArgs),
    /// Collapsibility number and vertex decomposability.
    Collapse(InputArgs),
    /// Verify the example gallery.
    Gallery {
        #[arg(long, default_value = "default")]
        profile: Profile,
        /// Alternative dunce-hat triangle list.
        #[arg(long)]
        dunce_data: Option<PathBuf>,
    },
    /// Tabulate v, reg and v - reg over a graph6 catalog.
    Search {
        catalog: PathBuf,
        /// Skip graphs with more vertices.
        #[arg(long)]
        max_n: Option<usize>,
    },
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

/// Errors caused by the input rather than by a failed claim.
#[derive(Debug)]
pub struct InputError(pub anyhow::Error);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputError {}

fn input_err(e: impl Into<anyhow::Error>) -> anyhow::Error {
    anyhow::Error::new(InputError(e.into()))
}

/// Exit code for an error returned by [`run`].
pub fn error_code(e: &anyhow::Error) -> i32 {
    if e.downcast_ref::<InputError>().is_some() || e.downcast_ref::<clap::Error>().is_some() {
        exit::INPUT_ERROR
    } else {
        exit::CLAIM_FAILED
    }
}

pub enum Input {
    Graph(Graph),
    Complex(SimplicialComplex),
}

pub fn read_input(args: &InputArgs) -> anyhow::Result<Input> {
    if let Some(s) = &args.g6 {
        return graph6::decode_str(s.trim()).map(Input::Graph).map_err(input_err);
    }
    let path = args.path.as_ref().expect("clap requires an input");
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(input_err)?;
    let format = match args.format {
        InputFormat::Auto => sniff(path, &text),
        f => f,
    };
    let parsed = match format {
        InputFormat::Json => Graph::from_json(&text).map(Input::Graph),
        InputFormat::Facets => SimplicialComplex::from_facet_text(&text).map(Input::Complex),
        _ => {
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            graph6::decode_str(line).map(Input::Graph)
        }
    };
    parsed
        .with_context(|| format!("parsing {}", path.display()))
        .map_err(input_err)
}

fn sniff(path: &Path, text: &str) -> InputFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => InputFormat::Json,
        Some("g6") => InputFormat::Graph6,
        _ => {
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            if first.starts_with('{') {
                InputFormat::Json
            } else if first.starts_with("n ") {
                InputFormat::Facets
            } else {
                InputFormat::Graph6
            }
        }
    }
}

fn reg_config(opts: &GlobalOpts) -> RegConfig {
    RegConfig {
        field: opts.field,
        hochster_threshold: opts.hochster_threshold,
        ..RegConfig::default()
    }
}

/// Result of one command: the text to emit and the exit code.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn json_outcome(mut value: Value, indeterminate: bool, strict: bool) -> Outcome {
    value["schema"] = json!(SCHEMA);
    value["indeterminate"] = json!(indeterminate);
    Outcome {
        text: serde_json::to_string_pretty(&value).expect("JSON serializes") + "\n",
        code: if indeterminate && strict { exit::INDETERMINATE } else { exit::PASS },
    }
}

pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.opts.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build()?;
    pool.install(|| dispatch(cli))
}

fn dispatch(cli: &Cli) -> anyhow::Result<Outcome> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Invariants(a) => Ok(match read_input(a)? {
            Input::Graph(g) => graph_invariants(&g, opts),
            Input::Complex(x) => complex_invariants(&x, opts),
        }),
        Command::Vnum(a) => Ok(vnum(read_input(a)?, opts)),
        Command::Reg(a) => reg(read_input(a)?, opts),
        Command::Collapse(a) => {
            let x = match read_input(a)? {
                Input::Graph(g) => independence_complex_of_graph(&g),
                Input::Complex(x) => x,
            };
            let (value, indeterminate) = collapse_json(&x, opts.budget);
            Ok(json_outcome(value, indeterminate, opts.strict))
        }
        Command::Gallery { profile, dunce_data } => gallery(*profile, dunce_data.as_deref(), opts.strict),
        Command::Search { catalog, max_n } => {
            let text = fs::read_to_string(catalog)
                .with_context(|| format!("reading {}", catalog.display()))
                .map_err(input_err)?;
            Ok(Outcome {
                text: search_tsv(&text, opts, *max_n)?,
                code: exit::PASS,
            })
        }
    }
}

fn search_json(s: &VSearch) -> Value {
    match s {
        VSearch::Exact(c) => json!({"value": c.value, "certificate": c}),
        VSearch::LowerBound { lower, nodes } => json!({"value": null, "lower_bound": lower, "nodes": nodes}),
    }
}

fn v_routes(g: &Graph, budget: u64) -> ([VSearch; 3], bool) {
    let routes = [
        v_number_definition_budgeted(&Clutter::from_graph(g), budget),
        v_number_free_face_budgeted(&independence_complex_of_graph(g), budget),
        ive_number_budgeted(g, budget),
    ];
    let values: Vec<Option<usize>> = routes.iter().map(VSearch::value).collect();
    let exact: Vec<usize> = values.iter().flatten().copied().collect();
    assert!(exact.windows(2).all(|w| w[0] == w[1]), "v-number routes disagree: {values:?}");
    let indeterminate = exact.is_empty();
    (routes, indeterminate)
}

fn v_json(routes: &[VSearch; 3]) -> Value {
    json!({
        "definition": search_json(&routes[0]),
        "free_face": search_json(&routes[1]),
        "ve_domination": search_json(&routes[2]),
    })
}

fn collapse_json(x: &SimplicialComplex, budget: u64) -> (Value, bool) {
    let col = collapsibility_number_budgeted(x, budget.min(u64::from(u32::MAX)));
    assert!(verify_collapse_trace(x, col.upper, &col.trace), "collapse trace failed replay");
    let vd = is_vertex_decomposable(x);
    (
        json!({
            "col": col.value,
            "col_bounds": [col.lower, col.upper],
            "collapse_trace": col.trace,
            "vertex_decomposable": vd.is_some(),
            "shedding_tree": vd,
        }),
        col.value.is_none(),
    )
}

fn graph_invariants(g: &Graph, opts: &GlobalOpts) -> Outcome {
    let (routes, mut indeterminate) = v_routes(g, opts.budget);
    let x = independence_complex_of_graph(g);
    let beta = beta_number(&x);
    let beta_ve = beta_ve_number(g);
    let im = induced_matching_budgeted(g, opts.budget);
    let sandwich = reg_sandwich(g, &reg_config(opts), &[]);
    let (col, col_indeterminate) = collapse_json(&x, opts.budget);
    indeterminate |= !im.exact || sandwich.exact().is_none() || col_indeterminate;
    let v = routes.iter().find_map(VSearch::value);
    let value = json!({
        "input": {"kind": "graph", "n": g.n(), "graph6": graph6::encode(g)},
        "v": v,
        "beta": beta.value,
        "i_ve": routes[2].value(),
        "beta_ve": beta_ve.value,
        "im": im.exact.then_some(im.certificate.size()),
        "reg": sandwich.exact(),
        "reg_bounds": [sandwich.lo, sandwich.hi],
        "col": col["col"],
        "certificates": {
            "v": v_json(&routes),
            "beta": beta,
            "beta_ve": beta_ve,
            "im": im,
            "reg": sandwich.evidence,
            "collapse": col,
        },
    });
    json_outcome(value, indeterminate, opts.strict)
}

fn complex_invariants(x: &SimplicialComplex, opts: &GlobalOpts) -> Outcome {
    let v = v_number_free_face_budgeted(x, opts.budget);
    let beta = beta_number(x);
    let reg = complex_reg(x, opts);
    let (col, col_indeterminate) = collapse_json(x, opts.budget);
    let indeterminate = v.value().is_none() || reg.is_none() || col_indeterminate;
    let value = json!({
        "input": {"kind": "complex", "n": x.ground(), "facets": x.facets().len()},
        "v": v.value(),
        "beta": beta.value,
        "reg": reg,
        "col": col["col"],
        "certificates": {"v": search_json(&v), "beta": beta, "collapse": col},
    });
    json_outcome(value, indeterminate, opts.strict)
}

/// Regularity of the Stanley–Reisner ring of `x`, when Hochster applies.
fn complex_reg(x: &SimplicialComplex, opts: &GlobalOpts) -> Option<usize> {
    let circuits = x.circuits().ok()?;
    reg_exact(&circuits, opts.field, opts.hochster_threshold).ok()
}

fn vnum(input: Input, opts: &GlobalOpts) -> Outcome {
    match input {
        Input::Graph(g) => {
            let (routes, indeterminate) = v_routes(&g, opts.budget);
            let value = json!({
                "v": routes.iter().find_map(VSearch::value),
                "lower_bound": routes.iter().map(VSearch::lower_bound).max(),
                "routes": v_json(&routes),
            });
            json_outcome(value, indeterminate, opts.strict)
        }
        Input::Complex(x) => {
            let s = v_number_free_face_budgeted(&x, opts.budget);
            let value = json!({"v": s.value(), "lower_bound": s.lower_bound(), "routes": {"free_face": search_json(&s)}});
            json_outcome(value, s.value().is_none(), opts.strict)
        }
    }
}

fn reg(input: Input, opts: &GlobalOpts) -> anyhow::Result<Outcome> {
    match input {
        Input::Graph(g) => {
            let s = reg_sandwich(&g, &reg_config(opts), &[]);
            let value = json!({"reg": s.exact(), "bounds": [s.lo, s.hi], "evidence": s.evidence});
            Ok(json_outcome(value, s.exact().is_none(), opts.strict))
        }
        Input::Complex(x) => {
            let circuits = x.circuits().map_err(input_err)?;
            let r = reg_exact(&circuits, opts.field, opts.hochster_threshold).map_err(input_err)?;
            Ok(json_outcome(json!({"reg": r}), false, opts.strict))
        }
    }
}

fn gallery(profile: Profile, dunce_data: Option<&Path>, strict: bool) -> anyhow::Result<Outcome> {
    let report = match dunce_data {
        Some(p) => {
            let text = fs::read_to_string(p)
                .with_context(|| format!("reading {}", p.display()))
                .map_err(input_err)?;
            verify_gallery_with(profile, &text)
        }
        None => verify_gallery(profile),
    };
    let code = if report.count(ClaimStatus::Fail) > 0 {
        exit::CLAIM_FAILED
    } else if strict && report.count(ClaimStatus::Indeterminate) > 0 {
        exit::INDETERMINATE
    } else {
        exit::PASS
    };
    Ok(Outcome {
        text: serde_json::to_string_pretty(&report)? + "\n",
        code,
    })
}

enum Row {
    Done { v: usize, reg: usize },
    Skipped(&'static str),
}

fn search_row(g: &Graph, opts: &GlobalOpts, max_n: Option<usize>) -> Row {
    if max_n.is_some_and(|m| g.n() > m) {
        return Row::Skipped("max-n");
    }
    if g.n() > opts.hochster_threshold {
        return Row::Skipped("hochster-threshold");
    }
    let Some(v) = v_number_definition_budgeted(&Clutter::from_graph(g), opts.budget).value() else {
        return Row::Skipped("budget");
    };
    let reg = reg_exact(&Clutter::from_graph(g), opts.field, opts.hochster_threshold).expect("size checked");
    Row::Done { v, reg }
}

/// TSV of `graph6, v, reg, v - reg`, by decreasing gap and then input
/// order; skipped graphs follow in input order.
pub fn search_tsv(catalog: &str, opts: &GlobalOpts, max_n: Option<usize>) -> anyhow::Result<String> {
    let entries = graph6::decode_catalog(catalog).map_err(input_err)?;
    let rows: Vec<Row> = entries.par_iter().map(|(_, g)| search_row(g, opts, max_n)).collect();
    let mut done: Vec<(usize, i64, String)> = Vec::new();
    let mut skipped = Vec::new();
    for (i, ((code, _), row)) in entries.iter().zip(rows).enumerate() {
        match row {
            Row::Done { v, reg } => done.push((i, v as i64 - reg as i64, format!("{code}\t{v}\t{reg}\t{}", v as i64 - reg as i64))),
            Row::Skipped(why) => skipped.push(format!("{code}\t-\t-\tskipped:{why}")),
        }
    }
    done.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    let mut out = String::from("graph6\tv\treg\tgap\n");
    for line in done.into_iter().map(|d| d.2).chain(skipped) {
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

pub fn write_output(opts: &GlobalOpts, text: &str) -> anyhow::Result<()> {
    match &opts.output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
