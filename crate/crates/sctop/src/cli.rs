//! The `sctop` command line.
//!
//! Exit codes: 0 success, 1 a property violation (or a map that cannot be
//! extended), 2 a usage or parse error, 3 an exceeded enumeration cap.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sctop_core::catalog::{self, CatalogId, ClosedForm, IrrDescriptor, Johnstone, OpenForm, Point, SymbolicSpace};
use sctop_core::completion::extend;
use sctop_core::error::Error as CoreError;
use sctop_core::maps::{MapClassifier, Verdict, Witness};
use sctop_core::verify::{self, SuiteReport};
use sctop_core::{strong_completion, FinSpace, Subset, DEFAULT_CAP};

use crate::dsl::{self, describe, DslError, Elaborated, NamedSpace};
use crate::json as js;
use crate::{dot, sample};

#[derive(Parser, Debug)]
#[command(name = "sctop", version, about = "Irreducible sets, SI topology and strong completion of T0 spaces")]
pub struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Emit a machine-readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Largest carrier (or hyperspace) to enumerate subsets of.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Seed for sampled populations.
    #[arg(long, global = true, default_value_t = sample::DEFAULT_SEED)]
    seed: u64,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SpaceArg {
    /// A space description, or `@path` to read one from a file.
    #[arg(long)]
    space: String,
}

#[derive(Args, Debug)]
struct MapArg {
    /// A map description, or `@path` to read one from a file.
    #[arg(long)]
    map: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Summarize a space.
    Info(SpaceArg),
    /// Irreducible sets of a finite space, or a descriptor query on a catalog space.
    Irr {
        #[command(flatten)]
        space: SpaceArg,
        /// Only members of Irr⁺.
        #[arg(long)]
        plus: bool,
        /// `finite:P,..`, `tail:K`, `cofinite:P,..`, `whole` or `column:J`, with integer point codes.
        #[arg(long, allow_hyphen_values = true)]
        descriptor: Option<String>,
    },
    /// SI-open sets of a finite space, or an open-form query on a catalog space.
    Si {
        #[command(flatten)]
        space: SpaceArg,
        /// `empty`, `whole`, `upfrom:K`, `cofinite:P,..` or `finite:P,..`.
        #[arg(long, allow_hyphen_values = true)]
        open: Option<String>,
    },
    /// I-closure of a set, or the family of I-closed sets.
    Iclosure {
        #[command(flatten)]
        space: SpaceArg,
        /// Comma-separated element names.
        #[arg(long, allow_hyphen_values = true)]
        set: Option<String>,
    },
    /// Strong completion with its unit.
    Complete(SpaceArg),
    /// Continuity grades of a map, with witnesses.
    Checkmap(MapArg),
    /// Extension of an SI⁺-continuous map along the unit of its source.
    Extend(MapArg),
    /// Run the property suites.
    Verify {
        /// Largest space size. Up to 4 points every poset is used (up to 3 for
        /// suites over maps); sizes 5 to 8 are sampled.
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Sampled spaces per size above 4.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Largest truncation for the catalog checks.
        #[arg(long, default_value_t = 10)]
        catalog_max: usize,
    },
    /// The subspace on the first N points of a catalog space.
    Truncate {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(short = 'n', long)]
        points: usize,
    },
    /// Export a finite space as DOT or JSON.
    Export {
        #[command(flatten)]
        space: SpaceArg,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Search random finite spaces and catalog truncations for I-open sets
    /// whose intersection or union is not I-open.
    SearchDelta {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        #[arg(long, default_value_t = 10)]
        catalog_max: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Violation(String),
    Cap(String),
}

impl From<DslError> for Failure {
    fn from(e: DslError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<js::SchemaError> for Failure {
    fn from(e: js::SchemaError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::CapExceeded { .. } | CoreError::TooManyPoints { .. } => Failure::Cap(e.to_string()),
            CoreError::NotSiPlusContinuous | CoreError::NotStronglyComplete(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// A rendered report; `failed` turns a successful run into exit code 1.
struct Report {
    text: String,
    json: Value,
    failed: bool,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, failed: false }
    }
}

type Res<T> = Result<T, Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (rendered, String::new()) } else { (String::new(), rendered) };
            return Outcome { code, stdout, stderr };
        }
    };
    let common = &cli.common;
    let (code, body, stderr) = match execute(&cli.command, common) {
        Ok(r) => {
            let body = if common.json { js::to_string(&r.json) + "\n" } else { r.text };
            (i32::from(r.failed), body, String::new())
        }
        Err(Failure::Usage(m)) => (2, String::new(), format!("error: {m}\n")),
        Err(Failure::Violation(m)) => (1, String::new(), format!("violation: {m}\n")),
        Err(Failure::Cap(m)) => (3, String::new(), format!("cap exceeded: {m}\n")),
    };
    match &common.out {
        Some(path) if code != 2 || !body.is_empty() => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
        _ => Outcome { code, stdout: body, stderr },
    }
}

fn read_arg(arg: &str) -> Res<String> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn load(arg: &SpaceArg) -> Res<Elaborated> {
    Ok(dsl::load_space(&read_arg(&arg.space)?)?)
}

fn execute(cmd: &Command, c: &Common) -> Res<Report> {
    match cmd {
        Command::Info(s) => match load(s)? {
            Elaborated::Finite(x) => info_finite(&x, c.cap),
            Elaborated::Symbolic(s) => Ok(info_symbolic(s.as_ref())),
        },
        Command::Irr { space, plus, descriptor } => match (load(space)?, descriptor) {
            (Elaborated::Finite(x), None) => irr_finite(&x, *plus, c.cap),
            (Elaborated::Symbolic(s), Some(d)) => irr_symbolic(s.as_ref(), &parse_descriptor(d)?),
            (Elaborated::Finite(_), Some(_)) => Err(Failure::Usage("--descriptor applies to catalog spaces".into())),
            (Elaborated::Symbolic(_), None) => Err(Failure::Usage("catalog spaces need --descriptor".into())),
        },
        Command::Si { space, open } => match (load(space)?, open) {
            (Elaborated::Finite(x), None) => si_finite(&x, c.cap),
            (Elaborated::Symbolic(s), Some(u)) => si_symbolic(s.as_ref(), &parse_open_form(u)?),
            (Elaborated::Finite(_), Some(_)) => Err(Failure::Usage("--open applies to catalog spaces".into())),
            (Elaborated::Symbolic(_), None) => Err(Failure::Usage("catalog spaces need --open".into())),
        },
        Command::Iclosure { space, set } => iclosure(&finite_only(load(space)?, "iclosure")?, set.as_deref(), c.cap),
        Command::Complete(s) => match load(s)? {
            Elaborated::Finite(x) => complete_finite(&x, c.cap),
            Elaborated::Symbolic(s) => complete_symbolic(s.as_ref()),
        },
        Command::Checkmap(m) => checkmap(&dsl::load_map(&read_arg(&m.map)?)?, c.cap),
        Command::Extend(m) => extend_map(&dsl::load_map(&read_arg(&m.map)?)?, c.cap),
        Command::Verify { max_size, samples, catalog_max } => run_verify(*max_size, *samples, *catalog_max, c),
        Command::Truncate { space, points } => match load(space)? {
            Elaborated::Symbolic(s) => truncate(s.as_ref(), *points),
            Elaborated::Finite(_) => Err(Failure::Usage("truncate applies to catalog spaces".into())),
        },
        Command::Export { space, format } => {
            let x = finite_only(load(space)?, "export")?;
            let text = match format {
                Format::Dot => dot::to_dot(&x),
                Format::Json => js::to_string(&js::space_to_json(&x)) + "\n",
            };
            // The export is the report in both modes.
            let json = serde_json::from_str(&match format {
                Format::Dot => serde_json::to_string(&text).expect("string"),
                Format::Json => text.clone(),
            })
            .expect("valid JSON");
            Ok(Report::ok(text, json))
        }
        Command::SearchDelta { samples, max_size, catalog_max } => search_delta(*samples, *max_size, *catalog_max, c),
    }
}

fn finite_only(e: Elaborated, cmd: &str) -> Res<NamedSpace> {
    match e {
        Elaborated::Finite(x) => Ok(x),
        Elaborated::Symbolic(s) => Err(Failure::Usage(format!(
            "{cmd} needs a finite space; '{}' is a catalog space (see `truncate`)",
            s.name()
        ))),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn names(x: &NamedSpace, s: &Subset) -> String {
    format!("{{{}}}", x.set_names(s).join(", "))
}

// ---------------------------------------------------------------------------
// Finite spaces

fn info_finite(x: &NamedSpace, cap: usize) -> Res<Report> {
    let s = &x.space;
    let (sc, sober, dcpo) = (s.is_strongly_complete(cap)?, s.is_sober(cap)?, s.is_dcpo(cap)?);
    let text = format!(
        "space: {}\npoints: {}\nopen sets: {}\nstrongly complete: {}\nsober: {}\ndcpo: {}\nconnected: {}\n",
        describe(x),
        s.size(),
        s.opens().len(),
        yes(sc),
        yes(sober),
        yes(dcpo),
        yes(s.is_connected())
    );
    let json = json!({
        "kind": "finite",
        "description": describe(x),
        "space": js::space_to_json(x),
        "strongly_complete": sc,
        "sober": sober,
        "dcpo": dcpo,
        "connected": s.is_connected(),
    });
    Ok(Report::ok(text, json))
}

fn irr_finite(x: &NamedSpace, plus: bool, cap: usize) -> Res<Report> {
    let an = x.space.analyze(cap)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for f in an.irr().iter() {
        let sup = x.space.sup(f);
        if plus && sup.is_none() {
            continue;
        }
        let sup_name = sup.map(|s| x.names[s].clone());
        text.push_str(&format!("{}  sup {}\n", names(x, f), sup_name.as_deref().unwrap_or("none")));
        rows.push(json!({ "set": x.set_names(f), "sup": sup_name }));
    }
    let sc = an.unbounded_irreducible().is_none();
    text.push_str(&format!("{} sets; Irr = Irr⁺: {}\n", rows.len(), yes(sc)));
    Ok(Report::ok(text, json!({ "sets": rows, "irr_equals_irr_plus": sc })))
}

fn si_finite(x: &NamedSpace, cap: usize) -> Res<Report> {
    let an = x.space.analyze(cap)?;
    let si = an.si_opens();
    let mut text: String = si.iter().map(|u| names(x, u) + "\n").collect();
    let same = si.as_slice() == x.space.opens();
    text.push_str(&format!("{} SI-open sets; SI(X) = X: {}\n", si.len(), yes(same)));
    let sets: Vec<Vec<String>> = si.iter().map(|u| x.set_names(u)).collect();
    Ok(Report::ok(text, json!({ "si_opens": sets, "same_as_topology": same })))
}

fn parse_set(x: &NamedSpace, list: &str) -> Res<Subset> {
    let mut s = Subset::empty(x.space.size());
    for name in list.split(',').map(str::trim).filter(|n| !n.is_empty()) {
        let i = x.index(name).ok_or_else(|| Failure::Usage(format!("unknown element '{name}'")))?;
        s.insert(i);
    }
    Ok(s)
}

fn iclosure(x: &NamedSpace, set: Option<&str>, cap: usize) -> Res<Report> {
    match set {
        Some(list) => {
            let a = parse_set(x, list)?;
            let c = x.space.cl_i(&a, cap)?;
            let text = format!("cl_I{} = {}\n", names(x, &a), names(x, &c));
            Ok(Report::ok(text, json!({ "set": x.set_names(&a), "closure": x.set_names(&c) })))
        }
        None => {
            let theta = x.space.theta(cap)?;
            let mut text: String = theta.iter().map(|a| names(x, a) + "\n").collect();
            text.push_str(&format!("{} I-closed sets of {}\n", theta.len(), 1u64 << x.space.size()));
            let sets: Vec<Vec<String>> = theta.iter().map(|a| x.set_names(a)).collect();
            Ok(Report::ok(text, json!({ "i_closed": sets })))
        }
    }
}

fn complete_finite(x: &NamedSpace, cap: usize) -> Res<Report> {
    let c = strong_completion(&x.space, cap)?;
    let iso = sctop_core::homeo::is_homeomorphism(&x.space, &c.completion, c.eta.table());
    let mut text = format!(
        "completion: {} points, {} new\n",
        c.completion.size(),
        c.new_points().count()
    );
    let mut eta = Vec::new();
    for i in 0..x.space.size() {
        let label = c.label(c.eta.apply(i));
        text.push_str(&format!("  η({0}) = cl{{{0}}} = {1}\n", x.names[i], names(x, &label)));
        eta.push(json!([x.names[i], x.set_names(&label)]));
    }
    for p in c.new_points().iter() {
        text.push_str(&format!("  new point {}\n", names(x, &c.label(p))));
    }
    text.push_str(&format!("η is a homeomorphism onto the completion: {}\n", yes(iso)));
    let new_points: Vec<Vec<String>> = c.new_points().iter().map(|p| x.set_names(&c.label(p))).collect();
    let json = json!({
        "kind": "finite",
        "isomorphic_to_input": iso,
        "eta": eta,
        "new_points": new_points,
        "result": js::completion_to_json(x, &c),
    });
    Ok(Report::ok(text, json))
}

fn witness_text(w: &Witness, from: &NamedSpace, to: &NamedSpace) -> String {
    match w {
        Witness::OpenPreimage(v) => format!("the preimage of {} is not open in the matching topology", names(to, v)),
        Witness::OrderPair(a, b) => format!("{} ≤ {} but their images are not ordered", from.names[*a], from.names[*b]),
        Witness::IClosedPreimage(b) => format!("the preimage of the I-closed set {} is not I-closed", names(to, b)),
        Witness::SupNotPreserved(f) => format!("the supremum of {} is not preserved", names(from, f)),
    }
}

fn checkmap(m: &dsl::NamedMap, cap: usize) -> Res<Report> {
    let cls = MapClassifier::new(&m.from.space, &m.to.space, cap)?;
    let rep = cls.classify(m.map.table());
    let grades: [(&str, &Verdict); 6] = [
        ("continuous", &rep.continuous),
        ("monotone", &rep.monotone),
        ("I-continuous", &rep.i_continuous),
        ("SI-continuous", &rep.si_continuous),
        ("SI+-continuous", &rep.si_plus_continuous),
        ("preserves Irr+ suprema", &rep.preserves_irr_sups),
    ];
    let mut text = String::new();
    let mut obj = serde_json::Map::new();
    for (name, v) in grades {
        match v {
            Ok(()) => {
                text.push_str(&format!("{name}: yes\n"));
                obj.insert(name.to_string(), json!({ "holds": true }));
            }
            Err(w) => {
                let wt = witness_text(w, &m.from, &m.to);
                text.push_str(&format!("{name}: no ({wt})\n"));
                obj.insert(name.to_string(), json!({ "holds": false, "witness": wt }));
            }
        }
    }
    Ok(Report::ok(text, Value::Object(obj)))
}

fn extend_map(m: &dsl::NamedMap, cap: usize) -> Res<Report> {
    let c = strong_completion(&m.from.space, cap)?;
    let ext = extend(&m.map, &c, cap)?;
    let mut text = String::from("extension along η:\n");
    let mut rows = Vec::new();
    for i in 0..c.completion.size() {
        let label = names(&m.from, &c.label(i));
        let target = &m.to.names[ext.apply(i)];
        text.push_str(&format!("  {label} -> {target}\n"));
        rows.push(json!([m.from.set_names(&c.label(i)), target]));
    }
    Ok(Report::ok(text, json!({ "extension": rows })))
}

// ---------------------------------------------------------------------------
// Catalog spaces

fn point_name(s: &dyn SymbolicSpace, p: Point) -> String {
    match (s.id(), p.0) {
        (CatalogId::JohnstoneAlex | CatalogId::JohnstoneScott, _) => match Johnstone::decode(p) {
            (m, catalog::Height::Finite(n)) => format!("{m}.{n}"),
            (m, catalog::Height::Omega) => format!("{m}.w"),
        },
        (CatalogId::OmegaPlusOne, -1) => "w".into(),
        (CatalogId::NatCofiniteTop, -1) => "top".into(),
        (_, k) => k.to_string(),
    }
}

fn closed_form_text(s: &dyn SymbolicSpace, c: &ClosedForm) -> String {
    let list = |v: &[Point]| v.iter().map(|&p| point_name(s, p)).collect::<Vec<_>>().join(", ");
    match c {
        ClosedForm::Empty => "∅".into(),
        ClosedForm::Whole => "whole space".into(),
        ClosedForm::Finite(v) => format!("{{{}}}", list(v)),
        ClosedForm::PrincipalIdeals(v) => v.iter().map(|&p| format!("↓{}", point_name(s, p))).collect::<Vec<_>>().join(" ∪ "),
    }
}

fn descriptor_text(d: &IrrDescriptor) -> String {
    let codes = |v: &[Point]| v.iter().map(|p| p.0.to_string()).collect::<Vec<_>>().join(",");
    match d {
        IrrDescriptor::FiniteSet(v) => format!("finite:{}", codes(v)),
        IrrDescriptor::ChainTail(k) => format!("tail:{k}"),
        IrrDescriptor::Cofinite(v) => format!("cofinite:{}", codes(v)),
        IrrDescriptor::WholeSpace => "whole".into(),
        IrrDescriptor::Column(j) => format!("column:{j}"),
    }
}

fn open_form_text(u: &OpenForm) -> String {
    let codes = |v: &[Point]| v.iter().map(|p| p.0.to_string()).collect::<Vec<_>>().join(",");
    match u {
        OpenForm::Empty => "empty".into(),
        OpenForm::Whole => "whole".into(),
        OpenForm::UpFrom(k) => format!("upfrom:{k}"),
        OpenForm::Cofinite(v) => format!("cofinite:{}", codes(v)),
        OpenForm::Finite(v) => format!("finite:{}", codes(v)),
    }
}

fn parse_codes(s: &str) -> Res<Vec<Point>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map(Point).map_err(|_| Failure::Usage(format!("'{t}' is not a point code"))))
        .collect()
}

fn parse_number(s: &str) -> Res<u64> {
    s.trim().parse().map_err(|_| Failure::Usage(format!("'{s}' is not a natural number")))
}

fn parse_descriptor(s: &str) -> Res<IrrDescriptor> {
    let (head, rest) = s.split_once(':').unwrap_or((s, ""));
    Ok(match head {
        "finite" => IrrDescriptor::FiniteSet(parse_codes(rest)?),
        "tail" => IrrDescriptor::ChainTail(parse_number(rest)?),
        "cofinite" => IrrDescriptor::Cofinite(parse_codes(rest)?),
        "whole" => IrrDescriptor::WholeSpace,
        "column" => IrrDescriptor::Column(parse_number(rest)?),
        _ => return Err(Failure::Usage(format!("unknown descriptor '{s}'"))),
    })
}

fn parse_open_form(s: &str) -> Res<OpenForm> {
    let (head, rest) = s.split_once(':').unwrap_or((s, ""));
    Ok(match head {
        "empty" => OpenForm::Empty,
        "whole" => OpenForm::Whole,
        "upfrom" => OpenForm::UpFrom(parse_number(rest)?),
        "cofinite" => OpenForm::Cofinite(parse_codes(rest)?),
        "finite" => OpenForm::Finite(parse_codes(rest)?),
        _ => return Err(Failure::Usage(format!("unknown open form '{s}'"))),
    })
}

fn info_symbolic(s: &dyn SymbolicSpace) -> Report {
    let first: Vec<String> = (0..8).map(|i| point_name(s, s.point_at(i))).collect();
    let completion = s.strong_completion().ok().map(|c| c.summary);
    let text = format!(
        "space: {} (catalog)\nfirst points: {}\ncompletion: {}\n",
        s.name(),
        first.join(", "),
        completion.as_deref().unwrap_or("unsupported")
    );
    Report::ok(text, json!({ "kind": "catalog", "name": s.name(), "first_points": first, "completion": completion }))
}

fn irr_symbolic(s: &dyn SymbolicSpace, d: &IrrDescriptor) -> Res<Report> {
    let irr = s.is_irreducible(d)?;
    let directed = s.is_directed(d)?;
    let sup = s.sup(d)?;
    let sup_name = sup.map(|p| point_name(s, p));
    let mut text = format!(
        "{}: {}\nirreducible: {}\ndirected: {}\nsupremum: {}\n",
        s.name(),
        descriptor_text(d),
        yes(irr),
        yes(directed),
        sup_name.as_deref().unwrap_or("none")
    );
    if let (false, CatalogId::JohnstoneScott | CatalogId::JohnstoneAlex, IrrDescriptor::WholeSpace) = (directed, s.id(), d) {
        let (a, b) = Johnstone::maximal_pair();
        text.push_str(&format!("  {} and {} are maximal and distinct\n", point_name(s, a), point_name(s, b)));
    }
    Ok(Report::ok(
        text,
        json!({ "space": s.name(), "descriptor": descriptor_text(d), "irreducible": irr, "directed": directed, "sup": sup_name }),
    ))
}

fn si_symbolic(s: &dyn SymbolicSpace, u: &OpenForm) -> Res<Report> {
    let open = s.is_open(u)?;
    let si = s.is_si_open(u)?;
    let mut text = format!("{}: {}\nopen: {}\nSI-open: {}\n", s.name(), open_form_text(u), yes(open), yes(si));
    let mut witness = None;
    if s.id() == CatalogId::OmegaPlusOne {
        if let Some(d) = catalog::OmegaPlusOne.inaccessibility_witness(u) {
            text.push_str(&format!("  {} has supremum w in the set but misses it\n", descriptor_text(&d)));
            witness = Some(descriptor_text(&d));
        }
    }
    Ok(Report::ok(text, json!({ "space": s.name(), "form": open_form_text(u), "open": open, "si_open": si, "witness": witness })))
}

fn complete_symbolic(s: &dyn SymbolicSpace) -> Res<Report> {
    let c = s.strong_completion()?;
    let mut text = format!("{}\n", c.summary);
    let mut new_points = Vec::new();
    for p in &c.new_points {
        let name = point_name(c.space.as_ref(), p.point);
        text.push_str(&format!(
            "  new point {name}: stands for {}, supremum of η({})\n",
            closed_form_text(s, &p.label),
            descriptor_text(&p.generated_by)
        ));
        new_points.push(json!({
            "point": p.point.0,
            "name": name,
            "label": closed_form_text(s, &p.label),
            "generated_by": descriptor_text(&p.generated_by),
        }));
    }
    Ok(Report::ok(
        text,
        json!({ "kind": "catalog", "source": s.name(), "completion": c.space.name(), "summary": c.summary, "new_points": new_points }),
    ))
}

fn truncate(s: &dyn SymbolicSpace, n: usize) -> Res<Report> {
    let (t, pts) = catalog::truncate(s, n)?;
    let x = NamedSpace { names: pts.iter().map(|&p| point_name(s, p)).collect(), space: t };
    let codes: Vec<i64> = pts.iter().map(|p| p.0).collect();
    Ok(Report::ok(describe(&x) + "\n", json!({ "space": js::space_to_json(&x), "codes": codes })))
}

// ---------------------------------------------------------------------------
// Suites

fn hyperspace_fits(x: &FinSpace, cap: usize) -> bool {
    x.analyze(cap).map(|an| an.si_closed_sets().len() <= cap).unwrap_or(false)
}

fn run_verify(max_size: usize, samples: usize, catalog_max: usize, c: &Common) -> Res<Report> {
    let cap = c.cap;
    let exhaustive = verify::exhaustive_population(max_size.min(4));
    let pairs = verify::exhaustive_population(max_size.min(3));
    let mut rng = sample::rng(c.seed);
    let mut sampled = Vec::new();
    let mut skipped = 0;
    for n in 5..=max_size.min(8) {
        for x in sample::random_spaces(&mut rng, n, samples) {
            if hyperspace_fits(&x, cap) {
                sampled.push(x);
            } else {
                skipped += 1;
            }
        }
    }
    let mut pop = exhaustive.clone();
    pop.extend(sampled.iter().cloned());

    let reports: Vec<SuiteReport> = vec![
        verify::finite_collapse(&pop, cap)?,
        verify::irreducible_basics(&pop, cap)?,
        verify::si_topology_basics(&pop, cap)?,
        verify::i_closed_basics(&pop, cap)?,
        verify::i_closed_intersection(&pop, cap)?,
        verify::continuity_hierarchy(&pairs, cap)?,
        verify::hyperspace_order(&pop, cap)?,
        verify::universal_property(&pairs, cap, 3)?,
        verify::completion_uniqueness(&pop, cap)?,
        verify::catalog_suite(catalog_max)?,
    ];
    let passed = reports.iter().all(SuiteReport::passed);

    let mut text = format!(
        "population: {} exhaustive (≤{} points), {} pairs source (≤{} points), {} sampled, {} skipped (Γ_SI above cap {cap}), seed {}\n",
        exhaustive.len(),
        max_size.min(4),
        pairs.len(),
        max_size.min(3),
        sampled.len(),
        skipped,
        c.seed
    );
    let mut suites = Vec::new();
    for r in &reports {
        text.push_str(&format!("{:<24} {:>8} cases  {}\n", r.suite, r.cases, if r.passed() { "PASS" } else { "FAIL" }));
        let mut vs = Vec::new();
        for v in &r.violations {
            let spaces: Vec<String> = v.spaces.iter().map(|s| describe(&NamedSpace::numbered(s.clone()))).collect();
            text.push_str(&format!("  {}: {} [{}] {}\n", v.suite, v.check, spaces.join(" | "), v.witness));
            vs.push(json!({ "check": v.check, "spaces": spaces, "witness": v.witness }));
        }
        suites.push(json!({ "suite": r.suite, "cases": r.cases, "passed": r.passed(), "violations": vs }));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    text.push_str(&if passed {
        format!("all {} suites passed\n", reports.len())
    } else {
        format!("{failed} of {} suites failed\n", reports.len())
    });
    let json = json!({
        "passed": passed,
        "population": {
            "exhaustive": exhaustive.len(),
            "pairs": pairs.len(),
            "sampled": sampled.len(),
            "skipped": skipped,
            "seed": c.seed,
        },
        "suites": suites,
    });
    Ok(Report { text, json, failed: !passed })
}

fn search_delta(samples: usize, max_size: usize, catalog_max: usize, c: &Common) -> Res<Report> {
    let mut rng = sample::rng(c.seed);
    let mut found = None;
    let mut searched = 0;
    let sizes = 1..=max_size.clamp(1, c.cap.min(16));
    'outer: for k in 0..samples {
        for n in sizes.clone() {
            let x = sample::random_spaces(&mut rng, n, 1 + k % 3).pop().expect("one space");
            searched += 1;
            if let Some(w) = verify::delta_topology_witness(&x, c.cap)? {
                found = Some((NamedSpace::numbered(x), w));
                break 'outer;
            }
        }
    }
    let mut truncations = 0;
    if found.is_none() {
        'cat: for name in catalog::NAMES {
            let s = catalog::lookup(name).expect("catalog name");
            for n in 0..=catalog_max.min(c.cap) {
                let (t, pts) = catalog::truncate(s.as_ref(), n)?;
                truncations += 1;
                if let Some(w) = verify::delta_topology_witness(&t, c.cap)? {
                    let names = pts.iter().map(|&p| point_name(s.as_ref(), p)).collect();
                    found = Some((NamedSpace { names, space: t }, w));
                    break 'cat;
                }
            }
        }
    }
    let (text, json) = match &found {
        None => (
            format!(
                "searched {searched} random spaces and {truncations} catalog truncations (seed {}): no witness found\n",
                c.seed
            ),
            json!({ "witness": null, "random_spaces": searched, "truncations": truncations, "seed": c.seed }),
        ),
        Some((x, (u, v))) => (
            format!("witness in {}: I-open sets {} and {}\n", describe(x), names(x, u), names(x, v)),
            json!({ "witness": { "space": describe(x), "u": x.set_names(u), "v": x.set_names(v) }, "seed": c.seed }),
        ),
    };
    Ok(Report::ok(text, json))
}
