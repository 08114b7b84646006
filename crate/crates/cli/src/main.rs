//! `edgecrit`: edge-coloring, criticality, sieve and discharging reports.
//!
//! Exit codes: 0 success, 1 unreadable input, 2 unmet precondition,
//! 3 negative verdict (rejected, not critical, a charge bound failed),
//! 4 budget exhausted.

use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use edgecrit::coloring::{
    chromatic_index_exact, color_with_delta_plus_one, is_critical, Classification, ColoringError,
    SearchBudget,
};
use edgecrit::discharging::{apply_rules, average_degree_verdict, classify_abc, ledger_json, verify_cases};
use edgecrit::graph::{
    build_family, detect_format, emit_edge_list, emit_graph6, parse_graph, parse_graph6, FamilyVariant,
    GraphFormat,
};
use edgecrit::lemmas::{run_sieve, LemmaVerdict, SieveReport, SieveVerdict};
use edgecrit::{rational_string, Graph};

#[derive(Parser)]
#[command(name = "edgecrit", version, about = "Edge-chromatic critical graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Input file; standard input when absent or `-`.
    input: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// Search nodes for exact coloring, colorings for `lemmas --deep`.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Auto,
    Graph6,
    Edgelist,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    TwoSpokes,
    OneSpoke,
}

#[derive(Subcommand)]
enum Command {
    /// Color with at most Δ + 1 colors and check properness.
    Color(Common),
    /// Exact chromatic index.
    Chi(Common),
    /// Decide whether the graph is Δ-critical.
    Critical(Common),
    /// Evaluate every adjacency predicate.
    Lemmas {
        #[command(flatten)]
        common: Common,
        /// Also check colored structures over enumerated colorings.
        #[arg(long)]
        deep: bool,
    },
    /// Run the degree-seven discharging rules.
    Discharge(Common),
    /// Emit a member of the average-degree-six family.
    Family {
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Variant::TwoSpokes)]
        variant: Variant,
        /// `graph6` or `edgelist`; `--json` overrides.
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        #[arg(long)]
        json: bool,
    },
    /// Emit seeded random graphs in graph6, one per line.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Cap on vertex degrees.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Sieve a graph6 stream and list the survivors, in input order.
    SieveBatch {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        deep: bool,
        /// Drop class-one graphs first, using the exact solver.
        #[arg(long)]
        class_two: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn parse(message: impl ToString) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }

    fn precondition(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<ColoringError> for Failure {
    fn from(e: ColoringError) -> Self {
        let code = match e {
            ColoringError::BudgetExhausted(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Text produced by a command, plus its exit code.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("edgecrit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Color(c) => cmd_color(&c),
        Command::Chi(c) => cmd_chi(&c),
        Command::Critical(c) => cmd_critical(&c),
        Command::Lemmas { common, deep } => cmd_lemmas(&common, deep),
        Command::Discharge(c) => cmd_discharge(&c),
        Command::Family {
            delta,
            t,
            variant,
            format,
            json,
        } => cmd_family(delta, t, variant, format, json),
        Command::Random {
            n,
            p,
            max_degree,
            count,
            seed,
        } => cmd_random(n, p, max_degree, count, seed),
        Command::SieveBatch {
            common,
            deep,
            class_two,
        } => cmd_sieve_batch(&common, deep, class_two),
    }
}

fn read_input(c: &Common) -> Result<String, Failure> {
    match c.input.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(Failure::parse)?;
            Ok(s)
        }
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::parse(format!("{path}: {e}"))),
    }
}

fn load_graph(c: &Common) -> Result<Graph, Failure> {
    let text = read_input(c)?;
    let format = match c.format {
        Format::Auto if text.trim_start().starts_with('{') => Format::Json,
        Format::Auto => match detect_format(&text) {
            GraphFormat::Graph6 => Format::Graph6,
            GraphFormat::EdgeList => Format::Edgelist,
        },
        f => f,
    };
    match format {
        Format::Json => {
            let value: Value = serde_json::from_str(&text).map_err(Failure::parse)?;
            Graph::from_json(&value).map_err(Failure::parse)
        }
        Format::Graph6 => parse_graph(&text, GraphFormat::Graph6)
            .map(|p| p.graph)
            .map_err(Failure::parse),
        _ => parse_graph(&text, GraphFormat::EdgeList)
            .map(|p| p.graph)
            .map_err(Failure::parse),
    }
}

fn render(c: &Common, value: Value, text: String) -> String {
    if c.json {
        let mut s = serde_json::to_string_pretty(&value).expect("json");
        s.push('\n');
        s
    } else {
        text
    }
}

fn search_budget(c: &Common) -> SearchBudget {
    c.budget.map(SearchBudget).unwrap_or_default()
}

fn cmd_color(c: &Common) -> Result<Output, Failure> {
    let g = load_graph(c)?;
    let phi = color_with_delta_plus_one(&g);
    let proper = phi.is_proper() && phi.is_total();
    let mut value = phi.to_json();
    value["proper"] = json!(proper);
    value["colors_used"] = json!(phi.colors_used());
    let mut text = format!("k {}\nproper {proper}\n", phi.k());
    for (e, col) in g.edges().iter().zip(phi.assignment()) {
        text.push_str(&format!("{} {} {}\n", e.u, e.v, col.map_or(0, |x| x)));
    }
    Ok(Output {
        text: render(c, value, text),
        code: if proper { 0 } else { 3 },
    })
}

fn class_name(c: Classification) -> &'static str {
    match c {
        Classification::One => "one",
        Classification::Two => "two",
    }
}

fn cmd_chi(c: &Common) -> Result<Output, Failure> {
    let g = load_graph(c)?;
    let v = chromatic_index_exact(&g, search_budget(c))?;
    let value = json!({
        "chi_prime": v.chi_prime,
        "max_degree": g.max_degree(),
        "class": class_name(v.classification),
        "nodes": v.nodes,
        "coloring": v.witness.as_ref().map(|w| w.to_json()),
    });
    let text = format!(
        "chi_prime {}\nclass {}\n",
        v.chi_prime,
        class_name(v.classification)
    );
    Ok(Output::ok(render(c, value, text)))
}

fn cmd_critical(c: &Common) -> Result<Output, Failure> {
    let g = load_graph(c)?;
    let v = is_critical(&g, search_budget(c))?;
    let value = json!({ "critical": v.critical, "witness": v.witness });
    let mut text = format!("critical {}\n", v.critical);
    if let Some(w) = v.witness {
        text.push_str(&format!("witness {}\n", serde_json::to_string(&w).expect("json")));
    }
    Ok(Output {
        text: render(c, value, text),
        code: if v.critical { 0 } else { 3 },
    })
}

const DEFAULT_COLORINGS: u64 = 1_000_000;

fn sieve_text(s: &SieveReport) -> String {
    let mut text = String::new();
    for r in &s.reports {
        let verdict = match r.verdict {
            LemmaVerdict::Satisfied => "satisfied",
            LemmaVerdict::Violated => "violated",
            LemmaVerdict::NotApplicable => "not-applicable",
        };
        text.push_str(&format!("{:<34} {verdict}", r.id.name()));
        match &r.witness {
            Some(w) => text.push_str(&format!(" (clause {}: {})", w.clause, w.reason)),
            None => text.push_str(&format!(" ({})", r.note)),
        }
        text.push('\n');
    }
    if let Some(d) = &s.deep {
        let state = match (&d.report, &d.error) {
            (Some(q), _) => serde_json::to_value(q.verdict).expect("json").as_str().unwrap_or("").to_string(),
            (None, Some(e)) => format!("error: {e}"),
            _ => String::new(),
        };
        text.push_str(&format!("{:<34} {state}\n", "colored-structures"));
    }
    match &s.overall {
        SieveVerdict::Survives if s.incomplete() => text.push_str("overall survives (incomplete)\n"),
        SieveVerdict::Survives => text.push_str("overall survives\n"),
        SieveVerdict::Rejected { by } => text.push_str(&format!("overall rejected by {}\n", by.join(", "))),
    }
    text
}

fn cmd_lemmas(c: &Common, deep: bool) -> Result<Output, Failure> {
    let g = load_graph(c)?;
    let s = run_sieve(&g, deep, c.budget.unwrap_or(DEFAULT_COLORINGS));
    let value = serde_json::to_value(&s).expect("json");
    Ok(Output {
        text: render(c, value, sieve_text(&s)),
        code: s.exit_code() as u8,
    })
}

fn cmd_discharge(c: &Common) -> Result<Output, Failure> {
    let g = load_graph(c)?;
    let cls = classify_abc(&g);
    let ledger = apply_rules(&g, &cls);
    let verdict = average_degree_verdict(&g, &ledger).map_err(Failure::precondition)?;
    let cases = verify_cases(&g, &ledger);
    let all_met = cases.iter().all(|c| c.met);
    let mut value = ledger_json(&g, &ledger, &cases);
    value["average_degree"] = json!(rational_string(&verdict.average));
    value["conserved"] = json!(ledger.conserves_charge());
    value["average_at_least_six"] = json!(verdict.at_least_six);
    value["tight"] = json!(verdict.tight);
    value["all_bounds_met"] = json!(all_met);
    let mut text = String::new();
    for (v, case) in cases.iter().enumerate() {
        text.push_str(&format!(
            "{v} d={} M={} M'={} case={:?} bound {} {}\n",
            g.deg(v),
            rational_string(&ledger.initial[v]),
            rational_string(&case.charge),
            case.case,
            case.bound,
            if case.met { "met" } else { "FAILED" },
        ));
    }
    text.push_str(&format!(
        "average degree {}\nsum M' {}\n",
        rational_string(&verdict.average),
        rational_string(&verdict.total_final)
    ));
    Ok(Output {
        text: render(c, value, text),
        code: if all_met && verdict.at_least_six { 0 } else { 3 },
    })
}

fn emit(g: &Graph, format: Format, json: bool) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&g.to_json()).expect("json");
        s.push('\n');
        return s;
    }
    match format {
        Format::Edgelist => emit_edge_list(g),
        _ => format!("{}\n", emit_graph6(g)),
    }
}

fn cmd_family(delta: usize, t: usize, variant: Variant, format: Format, json: bool) -> Result<Output, Failure> {
    let variant = match variant {
        Variant::TwoSpokes => FamilyVariant::TwoSpokesPerHub,
        Variant::OneSpoke => FamilyVariant::OneSpokePerHub,
    };
    let g = build_family(delta, t, variant).map_err(Failure::precondition)?;
    Ok(Output::ok(emit(&g, format, json)))
}

fn cmd_random(n: usize, p: f64, max_degree: Option<usize>, count: usize, seed: u64) -> Result<Output, Failure> {
    if n == 0 || !(0.0..=1.0).contains(&p) {
        return Err(Failure::precondition("need n >= 1 and 0 <= p <= 1"));
    }
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = String::new();
    for _ in 0..count {
        let mut deg = vec![0usize; n];
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) && deg[a] < cap && deg[b] < cap {
                    deg[a] += 1;
                    deg[b] += 1;
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("simple by construction");
        text.push_str(&emit_graph6(&g));
        text.push('\n');
    }
    Ok(Output::ok(text))
}

/// Verdict for one corpus line.
enum BatchItem {
    Survivor(Value),
    Dropped(Value),
    Budget(String),
}

fn sieve_line(line: &str, lineno: usize, deep: bool, class_two: bool, c: &Common) -> Result<BatchItem, Failure> {
    let g = parse_graph6(line).map_err(|e| Failure::parse(format!("line {lineno}: {e}")))?;
    let mut value = json!({ "line": lineno, "graph6": line });
    if class_two {
        match chromatic_index_exact(&g, search_budget(c)) {
            Ok(v) if v.classification == Classification::One => {
                value["dropped"] = json!("class one");
                return Ok(BatchItem::Dropped(value));
            }
            Ok(_) => {}
            Err(ColoringError::BudgetExhausted(_)) => {
                return Ok(BatchItem::Budget(format!("line {lineno}: class check over budget")))
            }
            Err(e) => return Err(Failure::precondition(format!("line {lineno}: {e}"))),
        }
    }
    let s = run_sieve(&g, deep, c.budget.unwrap_or(DEFAULT_COLORINGS));
    value["overall"] = serde_json::to_value(&s.overall).expect("json");
    if deep {
        value["incomplete"] = json!(s.incomplete());
    }
    Ok(if s.survives() {
        BatchItem::Survivor(value)
    } else {
        BatchItem::Dropped(value)
    })
}

const BATCH: usize = 4096;

fn cmd_sieve_batch(c: &Common, deep: bool, class_two: bool) -> Result<Output, Failure> {
    let reader: Box<dyn BufRead> = match c.input.as_deref() {
        None | Some("-") => Box::new(io::BufReader::new(io::stdin())),
        Some(path) => Box::new(io::BufReader::new(
            fs::File::open(path).map_err(|e| Failure::parse(format!("{path}: {e}")))?,
        )),
    };
    let mut stdout = io::stdout().lock();
    let (mut seen, mut survivors, mut over_budget) = (0usize, 0usize, 0usize);
    let mut lines = reader.lines().enumerate();
    loop {
        let mut chunk = Vec::with_capacity(BATCH);
        for (i, line) in lines.by_ref() {
            let line = line.map_err(Failure::parse)?;
            let line = line.trim().to_string();
            if !line.is_empty() {
                chunk.push((i + 1, line));
            }
            if chunk.len() == BATCH {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Result<BatchItem, Failure>> = chunk
            .par_iter()
            .map(|(i, line)| sieve_line(line, *i, deep, class_two, c))
            .collect();
        for ((_, line), r) in chunk.iter().zip(results) {
            seen += 1;
            let out = match r? {
                BatchItem::Survivor(v) => {
                    survivors += 1;
                    if c.json {
                        format!("{v}\n")
                    } else {
                        format!("{line}\n")
                    }
                }
                BatchItem::Dropped(v) if c.json => format!("{v}\n"),
                BatchItem::Dropped(_) => String::new(),
                BatchItem::Budget(msg) => {
                    over_budget += 1;
                    eprintln!("edgecrit: {msg}");
                    String::new()
                }
            };
            let _ = stdout.write_all(out.as_bytes());
        }
    }
    eprintln!("edgecrit: {seen} graphs, {survivors} survivors, {over_budget} over budget");
    Ok(Output {
        text: String::new(),
        code: if over_budget > 0 { 4 } else { 0 },
    })
}
