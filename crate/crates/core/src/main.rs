use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hecke0::affine::AffineWeyl;
use hecke0::conjugacy::CyclicShiftClass;
use hecke0::context::Context;
use hecke0::field::{fmt_q, parse_q, Q};
use hecke0::hecke::{HeckeAlgebra, HeckeElement, TermRecord, ZeroElement};
use hecke0::laurent::LaurentPoly;
use hecke0::nodeset::NodeSet;
use hecke0::parse::{parse_element, parse_nodes, parse_simple, parse_values};
use hecke0::representations::{
    char_vector, decompose, induce_q, is_rigid, is_supersingular_pair, supersingular_bound,
    supersingular_evidence, Candidate, Character, EBasisTable, FDModule, ParahoricDatum, Verdict,
};
use hecke0::verify::{catalog_candidates, Verifier, ACCEPTANCE_DATA, PHASES};
use hecke0::Error;

#[derive(Parser)]
#[command(name = "hecke0", version, about = "Affine 0-Hecke algebras: classes, cocenters and modules")]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Built-in datum name or path to a root-datum JSON file.
    #[arg(long, global = true)]
    datum: Option<String>,
    /// Length bound.
    #[arg(long = "max-len", global = true)]
    max_len: Option<u32>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true, value_enum, default_value = "zero")]
    mode: Mode,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Zero,
    Generic,
}

#[derive(Subcommand)]
enum Command {
    /// Cyclic-shift classes of minimal length elements with their standard pairs.
    Classes,
    /// Products in the Hecke algebra.
    Hecke {
        #[command(subcommand)]
        op: HeckeOp,
    },
    /// Projection to the cocenter.
    Cocenter {
        #[command(subcommand)]
        op: CocenterOp,
    },
    /// Induced modules and their characters.
    Module {
        #[command(subcommand)]
        op: ModuleOp,
    },
    /// Runs the acceptance checks.
    Verify {
        /// Only these criteria (1..=10).
        #[arg(long)]
        phase: Vec<u8>,
    },
}

#[derive(Subcommand)]
enum HeckeOp {
    /// T_a T_b ... for the given elements.
    Mul { elements: Vec<String> },
    /// T_a^n.
    Pow { element: String, n: u64 },
    /// ι(T_a).
    Iota { element: String },
    /// E_a, written in the T-basis.
    Ebasis { element: String },
}

#[derive(Subcommand)]
enum CocenterOp {
    /// Image of T_a T_b ... in the cocenter of the 0-Hecke algebra; without
    /// elements, the image of every T_w with ℓ(w) ≤ --max-len.
    Project { elements: Vec<String> },
    /// Checks that commutators with generators project to zero.
    Check,
}

#[derive(Args, Clone)]
struct ModuleSel {
    /// Finite simple roots, as `1,2` or `s1,s2`; `-` for the empty set.
    #[arg(long = "J")]
    j: Option<String>,
    /// Nodes of the affine diagram of J, as `s0,s1`.
    #[arg(long = "Gamma")]
    gamma: Option<String>,
    /// Values of the character on the generators of the stabilizer.
    #[arg(long, allow_hyphen_values = true)]
    chi: Option<String>,
}

#[derive(Subcommand)]
enum ModuleOp {
    /// Generator matrices of π_{J,Γ,χ}.
    Build {
        #[command(flatten)]
        sel: ModuleSel,
    },
    /// Traces of the selected modules (all catalog modules by default) on the classes.
    Chartable {
        #[command(flatten)]
        sel: ModuleSel,
    },
    /// Writes a virtual character in the basis of catalog modules.
    Decompose {
        /// JSON object mapping class labels to values.
        #[arg(long)]
        input: String,
    },
    /// Rigidity and supersingularity of the selected modules.
    Sstest {
        #[command(flatten)]
        sel: ModuleSel,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::UnknownDatum(_)
            | Error::InvalidDatum(_)
            | Error::NotFiniteType(_)
            | Error::ImperfectPairing(_)
            | Error::InvalidCharacter(_)
            | Error::InvalidParahoric(_)
            | Error::InfiniteOmega(_)
            | Error::Io(_)
            | Error::Json(_) => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

/// Text produced by a command and whether every check it ran passed.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(r) => match emit(&cli.cfg, &r.text) {
            Ok(()) if r.ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(Failure::Usage(m)) | Err(Failure::Verification(m)) => {
                eprintln!("error: {m}");
                ExitCode::from(2)
            }
        },
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
    }
}

fn emit(cfg: &RunConfig, text: &str) -> Outcome<()> {
    match &cfg.out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write `{p}`: {e}"))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn run(cli: &Cli) -> Outcome<Report> {
    let cfg = &cli.cfg;
    if let Command::Verify { phase } = &cli.cmd {
        return verify(cfg, phase);
    }
    let name = cfg
        .datum
        .as_deref()
        .ok_or_else(|| Failure::Usage("--datum is required".into()))?;
    let ctx = Context::load(name)?;
    match &cli.cmd {
        Command::Classes => classes(cfg, &ctx),
        Command::Hecke { op } => hecke(cfg, &ctx, op),
        Command::Cocenter { op } => cocenter(cfg, &ctx, op),
        Command::Module { op } => module(cfg, &ctx, op),
        Command::Verify { .. } => unreachable!(),
    }
}

fn format_or(cfg: &RunConfig, default: Format, allowed: &[Format]) -> Outcome<Format> {
    let f = cfg.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Usage("output format not supported by this command".into()))
    }
}

fn max_len(cfg: &RunConfig, default: u32) -> u32 {
    cfg.max_len.unwrap_or(default)
}

fn to_json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn label(g: &AffineWeyl, c: &CyclicShiftClass) -> String {
    g.display(&c.rep)
}

fn names(g: &AffineWeyl, k: NodeSet) -> String {
    format!("{{{}}}", g.node_names(k).join(","))
}

fn finite_names(j: NodeSet) -> String {
    let v: Vec<String> = j.iter().map(|i| format!("s{}", i + 1)).collect();
    format!("{{{}}}", v.join(","))
}

fn module_label(pd: &ParahoricDatum, chi: &Character) -> String {
    let v: Vec<String> = chi.values.iter().map(fmt_q).collect();
    format!(
        "J={} Gamma={} chi=[{}]",
        finite_names(pd.j),
        names(pd.system(), pd.gamma),
        v.join(",")
    )
}

fn classes(cfg: &RunConfig, ctx: &Context) -> Outcome<Report> {
    let fmt = format_or(cfg, Format::Tsv, &[Format::Tsv, Format::Json, Format::Dot])?;
    let g = ctx.group();
    let list = ctx.enumerate_classes(max_len(cfg, 4))?;
    let mut problems = Vec::new();
    let mut rows = Vec::new();
    for c in &list {
        let p = ctx.standard_pair(c)?;
        if let Err(e) = ctx.check_standard_pair(&p) {
            problems.push(format!("{}: {e}", label(g, c)));
        }
        let sys = ctx.system(p.j);
        rows.push(json!({
            "class": label(g, c),
            "length": c.length,
            "size": c.members.len(),
            "newton": AffineWeyl::format_vector(&c.newton),
            "straight": c.straight,
            "rigid": !ctx.is_non_rigid(c),
            "J": finite_names(p.j),
            "Gamma": names(&sys, p.gamma),
            "x": sys.display(&p.x),
        }));
    }
    let text = match fmt {
        Format::Json => to_json(&rows),
        Format::Dot => list.iter().map(|c| ctx.class_dot(c)).collect::<Vec<_>>().join("\n"),
        Format::Tsv => {
            let keys = ["class", "length", "size", "newton", "straight", "rigid", "J", "Gamma", "x"];
            let mut s = keys.join("\t") + "\n";
            for r in &rows {
                let cells: Vec<String> = keys
                    .iter()
                    .map(|k| match &r[k] {
                        Value::String(x) => x.clone(),
                        v => v.to_string(),
                    })
                    .collect();
                s += &(cells.join("\t") + "\n");
            }
            s
        }
    };
    for p in &problems {
        eprintln!("invalid standard pair: {p}");
    }
    Ok(Report { text, ok: problems.is_empty() })
}

fn terms_text(fmt: Format, records: Vec<TermRecord>) -> String {
    match fmt {
        Format::Json => to_json(&records),
        _ => records.iter().map(|r| format!("{}\t{}\n", r.element, r.coefficient)).collect(),
    }
}

fn hecke_in<C: hecke0::hecke::Coeff>(
    ctx: &Context,
    h: &HeckeAlgebra,
    op: &HeckeOp,
) -> Outcome<Option<HeckeElement<C>>> {
    let g = ctx.group();
    Ok(match op {
        HeckeOp::Mul { elements } => {
            let mut acc = h.one::<C>();
            for s in elements {
                acc = h.mul(&acc, &h.t(&parse_element(g, s)?));
            }
            Some(acc)
        }
        HeckeOp::Pow { element, n } => Some(h.pow(&h.t(&parse_element(g, element)?), *n)),
        HeckeOp::Iota { element } => Some(h.iota_basis(&parse_element(g, element)?)),
        HeckeOp::Ebasis { .. } => None,
    })
}

fn hecke(cfg: &RunConfig, ctx: &Context, op: &HeckeOp) -> Outcome<Report> {
    let fmt = format_or(cfg, Format::Json, &[Format::Tsv, Format::Json])?;
    let h = HeckeAlgebra::new(ctx.group_arc().clone());
    let records = match (op, cfg.mode) {
        (HeckeOp::Ebasis { element }, mode) => {
            let (generic, zero) = h.e_basis(&parse_element(ctx.group(), element)?)?;
            if mode == Mode::Zero {
                h.records(&zero)
            } else {
                h.records(&generic)
            }
        }
        (_, Mode::Zero) => h.records(&hecke_in::<i64>(ctx, &h, op)?.expect("product")),
        (_, Mode::Generic) => h.records(&hecke_in::<LaurentPoly>(ctx, &h, op)?.expect("product")),
    };
    Ok(Report::ok(terms_text(fmt, records)))
}

fn cocenter(cfg: &RunConfig, ctx: &Context, op: &CocenterOp) -> Outcome<Report> {
    let fmt = format_or(cfg, Format::Tsv, &[Format::Tsv, Format::Json])?;
    let g = ctx.group();
    match op {
        CocenterOp::Project { elements } if elements.is_empty() => {
            let mut rows = Vec::new();
            for e in g.enumerate(max_len(cfg, 3))?.into_iter().flatten() {
                for (rep, c) in ctx.project_basis(&e)?.terms() {
                    rows.push((g.display(&e), g.display(rep), c));
                }
            }
            let text = match fmt {
                Format::Json => to_json(
                    &rows
                        .iter()
                        .map(|(e, s, c)| json!({"element": e, "class": s, "coefficient": c.to_string()}))
                        .collect::<Vec<_>>(),
                ),
                _ => rows.iter().map(|(e, s, c)| format!("{e}\t{s}\t{c}\n")).collect(),
            };
            Ok(Report::ok(text))
        }
        CocenterOp::Project { elements } => {
            let h = HeckeAlgebra::new(ctx.group_arc().clone());
            let mut acc: ZeroElement = h.one();
            for s in elements {
                acc = h.mul(&acc, &h.t(&parse_element(g, s)?));
            }
            let image = ctx.project(&acc)?;
            let mut rows: Vec<(u32, String, i64)> = image
                .terms()
                .map(|(rep, c)| (g.length(rep), g.display(rep), c))
                .collect();
            rows.sort();
            let text = match fmt {
                Format::Json => to_json(
                    &rows
                        .iter()
                        .map(|(_, s, c)| json!({"class": s, "coefficient": c.to_string()}))
                        .collect::<Vec<_>>(),
                ),
                _ => rows.iter().map(|(_, s, c)| format!("{s}\t{c}\n")).collect(),
            };
            Ok(Report::ok(text))
        }
        CocenterOp::Check => {
            let l = max_len(cfg, 4);
            let r = ctx.commutator_check(l)?;
            let text = match fmt {
                Format::Json => to_json(&json!({"max_len": l, "checked": r.checked, "violations": r.violations})),
                _ => {
                    let mut s = format!("checked\t{}\nviolations\t{}\n", r.checked, r.violations.len());
                    for v in &r.violations {
                        s += &format!("violation\t{v}\n");
                    }
                    s
                }
            };
            Ok(Report { text, ok: r.violations.is_empty() })
        }
    }
}

/// The modules picked by `--J/--Gamma/--chi`: one module if `--J` is given,
/// otherwise the catalog.
fn selected(ctx: &Context, sel: &ModuleSel, classes: &[Arc<CyclicShiftClass>]) -> Outcome<Vec<Candidate>> {
    let Some(js) = &sel.j else {
        if sel.gamma.is_some() || sel.chi.is_some() {
            return Err(Failure::Usage("--Gamma and --chi need --J".into()));
        }
        return Ok(catalog_candidates(ctx, classes)?);
    };
    let j = parse_simple(ctx.datum().rank(), js)?;
    if !j.is_subset(ctx.datum().all_simple()) {
        return Err(Failure::Usage(format!("--J {js} is not a set of simple roots")));
    }
    let sys = ctx.system(j);
    let gamma = match &sel.gamma {
        Some(s) => parse_nodes(&sys, s)?,
        None => NodeSet::EMPTY,
    };
    let pd = ParahoricDatum::new(ctx, j, gamma)?;
    let chi = match &sel.chi {
        Some(s) => Character::new(&pd, parse_values(s)?)?,
        None => Character::trivial(&pd),
    };
    Ok(vec![Candidate::build(ctx, pd, chi, classes)?])
}

fn matrix_json(m: &hecke0::linalg::Matrix<Q>) -> Value {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(fmt_q).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into()
}

fn build_text(fmt: Format, m: &FDModule<Q>, label: &str) -> String {
    let g = m.group();
    let mut gens: Vec<(String, Value)> = g
        .simple()
        .iter()
        .enumerate()
        .map(|(i, s)| (s.name.clone(), matrix_json(m.simple_matrix(i))))
        .collect();
    for (k, tau) in g.omega().generators.iter().enumerate() {
        gens.push((format!("tau{} = {}", k + 1, g.display(tau)), matrix_json(m.omega_matrix(k))));
    }
    match fmt {
        Format::Json => {
            let list: Vec<Value> = gens.into_iter().map(|(n, mat)| json!({"generator": n, "matrix": mat})).collect();
            to_json(&json!({"module": label, "dim": m.dim(), "generators": list}))
        }
        _ => {
            let mut s = format!("module\t{label}\ndim\t{}\n", m.dim());
            for (n, mat) in gens {
                s += &format!("generator\t{n}\n");
                for row in mat.as_array().into_iter().flatten() {
                    let cells: Vec<&str> = row.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
                    s += &(cells.join("\t") + "\n");
                }
            }
            s
        }
    }
}

fn char_table(fmt: Format, g: &AffineWeyl, classes: &[Arc<CyclicShiftClass>], rows: &[(String, Vec<Q>)]) -> String {
    let labels: Vec<String> = classes.iter().map(|c| label(g, c)).collect();
    match fmt {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(l, v)| json!({"module": l, "values": v.iter().map(fmt_q).collect::<Vec<_>>()}))
                .collect();
            to_json(&json!({"classes": labels, "rows": rows}))
        }
        _ => {
            let mut s = format!("module\t{}\n", labels.join("\t"));
            for (l, v) in rows {
                let cells: Vec<String> = v.iter().map(fmt_q).collect();
                s += &format!("{l}\t{}\n", cells.join("\t"));
            }
            s
        }
    }
}

/// Reads `{label: value}` or a character table whose single row is the
/// virtual character.
fn read_character(path: &str, g: &AffineWeyl, classes: &[Arc<CyclicShiftClass>]) -> Outcome<Vec<Q>> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read `{path}`: {e}")))?;
    let v: Value = serde_json::from_str(&text).map_err(Error::from)?;
    let bad = |m: String| Failure::Usage(format!("{path}: {m}"));
    let value = |x: &Value| -> Outcome<Q> {
        match x {
            Value::String(s) => parse_q(s).ok_or_else(|| bad(format!("bad rational `{s}`"))),
            Value::Number(n) => n
                .as_i64()
                .map(|k| Q::from_integer(k.into()))
                .ok_or_else(|| bad(format!("non-integral number {n}"))),
            _ => Err(bad(format!("expected a rational, found {x}"))),
        }
    };
    let mut map = BTreeMap::new();
    match &v {
        Value::Object(o) if o.contains_key("classes") => {
            let labels = o["classes"].as_array().ok_or_else(|| bad("`classes` is not a list".into()))?;
            let rows = o.get("rows").and_then(Value::as_array).ok_or_else(|| bad("missing `rows`".into()))?;
            let [row] = rows.as_slice() else {
                return Err(bad(format!("expected one row, found {}", rows.len())));
            };
            let vals = row["values"].as_array().ok_or_else(|| bad("row has no `values`".into()))?;
            if vals.len() != labels.len() {
                return Err(bad("row length differs from the class list".into()));
            }
            for (l, x) in labels.iter().zip(vals) {
                let l = l.as_str().ok_or_else(|| bad("class labels must be strings".into()))?;
                map.insert(l.to_string(), value(x)?);
            }
        }
        Value::Object(o) => {
            for (l, x) in o {
                map.insert(l.clone(), value(x)?);
            }
        }
        _ => return Err(bad("expected a JSON object".into())),
    }
    let mut out = Vec::with_capacity(classes.len());
    for c in classes {
        out.push(map.remove(&label(g, c)).unwrap_or_else(|| Q::from_integer(0)));
    }
    if let Some(l) = map.keys().next() {
        return Err(bad(format!("`{l}` is not a class of length ≤ the bound")));
    }
    Ok(out)
}

fn module(cfg: &RunConfig, ctx: &Context, op: &ModuleOp) -> Outcome<Report> {
    let g = ctx.group();
    match op {
        ModuleOp::Build { sel } => {
            let fmt = format_or(cfg, Format::Tsv, &[Format::Tsv, Format::Json])?;
            if sel.j.is_none() {
                return Err(Failure::Usage("module build needs --J".into()));
            }
            let k = selected(ctx, sel, &[])?.remove(0);
            let m = induce_q(ctx, &k.pd, &k.chi)?;
            Ok(Report::ok(build_text(fmt, &m, &module_label(&k.pd, &k.chi))))
        }
        ModuleOp::Chartable { sel } => {
            let fmt = format_or(cfg, Format::Tsv, &[Format::Tsv, Format::Json])?;
            let classes = ctx.enumerate_classes(max_len(cfg, 3))?;
            let rows: Vec<(String, Vec<Q>)> = selected(ctx, sel, &classes)?
                .into_iter()
                .map(|k| (module_label(&k.pd, &k.chi), k.chars))
                .collect();
            Ok(Report::ok(char_table(fmt, g, &classes, &rows)))
        }
        ModuleOp::Decompose { input } => {
            let fmt = format_or(cfg, Format::Tsv, &[Format::Tsv, Format::Json])?;
            let classes = ctx.enumerate_classes(max_len(cfg, 3))?;
            let target = read_character(input, g, &classes)?;
            let cands = catalog_candidates(ctx, &classes)?;
            let coeffs = decompose(ctx, &target, &classes, &cands)?;
            let rows: Vec<(String, i64)> = cands
                .iter()
                .zip(coeffs)
                .filter(|(_, c)| *c != 0)
                .map(|(k, c)| (module_label(&k.pd, &k.chi), c))
                .collect();
            let text = match fmt {
                Format::Json => to_json(
                    &rows
                        .iter()
                        .map(|(l, c)| json!({"module": l, "multiplicity": c.to_string()}))
                        .collect::<Vec<_>>(),
                ),
                _ => rows.iter().map(|(l, c)| format!("{l}\t{c}\n")).collect(),
            };
            Ok(Report::ok(text))
        }
        ModuleOp::Sstest { sel } => sstest(cfg, ctx, sel),
    }
}

fn sstest(cfg: &RunConfig, ctx: &Context, sel: &ModuleSel) -> Outcome<Report> {
    let fmt = format_or(cfg, Format::Tsv, &[Format::Tsv, Format::Json])?;
    let l = max_len(cfg, 4);
    let classes = ctx.enumerate_classes(l)?;
    let all = catalog_candidates(ctx, &classes)?;
    let picked = match sel.j {
        Some(_) => selected(ctx, sel, &classes)?,
        None => catalog_candidates(ctx, &classes)?,
    };
    let nss = ctx.nss_spanning_set(l)?;
    let elements: Vec<_> = ctx.group().enumerate(l)?.into_iter().flatten().collect();
    let table = EBasisTable::new(ctx, 2);
    let f = ctx.datum().all_simple();
    let mut ok = true;
    let mut rows = Vec::new();
    for k in &picked {
        let m = induce_q(ctx, &k.pd, &k.chi)?;
        let lower = if k.pd.j == f { supersingular_bound(ctx, k.pd.gamma).unwrap_or(0) } else { 0 };
        let ev = supersingular_evidence(ctx, &m, &char_vector(&m, &classes), &classes, &nss, &all, &elements, &table, lower, l)?;
        let verdict = match ev.verdict() {
            Ok(b) => b.to_string(),
            Err(e) => {
                ok = false;
                eprintln!("{}: {e}", module_label(&k.pd, &k.chi));
                "disagree".into()
            }
        };
        let span = match ev.in_supersingular_span {
            Some(b) => b.to_string(),
            None => "unknown".into(),
        };
        let e_vanishing = match ev.e_vanishing {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Vacuous => "vacuous",
        };
        rows.push(json!({
            "module": module_label(&k.pd, &k.chi),
            "dim": m.dim(),
            "rigid": is_rigid(ctx, &classes, &k.chars),
            "expected": k.pd.j == f && is_supersingular_pair(ctx, k.pair),
            "e_vanishing": e_vanishing,
            "nss_traces_vanish": ev.nss_traces_vanish,
            "supersingular_span": span,
            "supersingular": verdict,
        }));
    }
    let text = match fmt {
        Format::Json => to_json(&rows),
        _ => {
            let keys = [
                "module",
                "dim",
                "rigid",
                "expected",
                "e_vanishing",
                "nss_traces_vanish",
                "supersingular_span",
                "supersingular",
            ];
            let mut s = keys.join("\t") + "\n";
            for r in &rows {
                let cells: Vec<String> = keys
                    .iter()
                    .map(|k| match &r[k] {
                        Value::String(x) => x.clone(),
                        v => v.to_string(),
                    })
                    .collect();
                s += &(cells.join("\t") + "\n");
            }
            s
        }
    };
    Ok(Report { text, ok })
}

fn verify(cfg: &RunConfig, phases: &[u8]) -> Outcome<Report> {
    let fmt = format_or(cfg, Format::Tsv, &[Format::Tsv, Format::Json])?;
    let data: Vec<&str> = match &cfg.datum {
        Some(d) => d.split(',').map(str::trim).filter(|s| !s.is_empty()).collect(),
        None => ACCEPTANCE_DATA.to_vec(),
    };
    for &p in phases {
        if !PHASES.iter().any(|x| x.0 == p) {
            return Err(Failure::Usage(format!("no criterion {p}")));
        }
    }
    let v = Verifier::new(&data, cfg.max_len)?;
    let reports: Vec<_> = PHASES
        .iter()
        .filter(|p| phases.is_empty() || phases.contains(&p.0))
        .map(|p| {
            let r = v.run(p.0);
            eprintln!("{:>2} {:.2}s", r.id, r.elapsed.as_secs_f64());
            r
        })
        .collect();
    let ok = reports.iter().all(|r| r.passed);
    let text = match fmt {
        Format::Json => to_json(
            &reports
                .iter()
                .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail}))
                .collect::<Vec<_>>(),
        ),
        _ => reports
            .iter()
            .map(|r| format!("{}\t{}\t{}\t{}\n", if r.passed { "PASS" } else { "FAIL" }, r.id, r.name, r.detail))
            .collect(),
    };
    Ok(Report { text, ok })
}
