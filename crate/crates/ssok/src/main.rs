use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ssok::anodyne::certificate::verify_certificate;
use ssok::anodyne::search::{search_decomposition, SearchConfig, SearchOutcome};
use ssok::anodyne::suite::identity_families;
use ssok::anodyne::{Certificate, MarkedMap, TargetClass};
use ssok::cat::corpus::corpus;
use ssok::cat::nerve::nerve_truncated;
use ssok::cat::shapes::{comparison_map, figure_simplex, shape, MapKind, ShapeKind};
use ssok::cat::slower::s_lower;
use ssok::cat::tw::{check_canonical_iso, tw_simplicial, twisted_arrow_cat};
use ssok::cat::{self as cat, FiniteCategory};
use ssok::operad::bo::bo_fiber;
use ssok::operad::coherence::{coherence_probe, coherence_sweep};
use ssok::operad::ext::{ext_category, ext_ha_category, parse_sigma, standard_atomic, strict_fiber, unary_orbits};
use ssok::operad::total::compose;
use ssok::operad::{self as operad, builtin_operad, Builtin, DiscreteOperad};
use ssok::report::SuiteReport;
use ssok::sset::build::{boundary, horn, spine, standard_simplex};
use ssok::sset::construct::{join, product};
use ssok::sset::iso::is_isomorphic;
use ssok::sset::{json as sjson, SimplicialSet};
use ssok::suite::{run_suite, Selector, SuiteConfig};

#[derive(Parser)]
#[command(name = "ssok", version, about = "Finite simplicial sets, anodyne certificates, finite categories and discrete operads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build, compare and export simplicial sets.
    Sset {
        #[command(subcommand)]
        cmd: SsetCmd,
    },
    /// Search and verify anodyne certificates.
    Anodyne {
        #[command(subcommand)]
        cmd: AnodyneCmd,
    },
    /// Finite categories, nerves and twisted arrows.
    Cat {
        #[command(subcommand)]
        cmd: CatCmd,
    },
    /// Extension categories and fibers of discrete operads.
    Operad(OperadArgs),
    /// Run acceptance checks: all, assinv, comm, ass, bo, appendix,
    /// certificates, tw, shapes, coherence or properties.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, ValueEnum, Default, PartialEq, Eq)]
enum Format {
    #[default]
    Json,
    Dot,
    Summary,
}

/// `simplex:N`, `boundary:N`, `horn:N,K`, `spine:N`, or a JSON file.
#[derive(Subcommand)]
enum SsetCmd {
    Show {
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Iso { a: String, b: String },
    Join {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Product {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    SLower {
        spec: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Twisted arrows of a simplicial set through a dimension.
    Tw {
        spec: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum AnodyneCmd {
    /// Searches a certificate for `SOURCE ⊂ TARGET` (matched by labels) or
    /// for a named comparison map `i0:K`, `i0~:K`, `i1:K`, `i2:K` at `K = Δᴷ`.
    Search {
        source: String,
        target: Option<String>,
        #[arg(long, default_value = "inner")]
        class: String,
        #[arg(long)]
        budget: Option<usize>,
        /// Write the certificate here.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Replays a certificate.
    Verify {
        #[arg(long)]
        cert: PathBuf,
    },
    /// Pushout-join identities up to a total dimension.
    SuiteAppendix {
        #[arg(long, default_value_t = 4)]
        dim_bound: usize,
    },
}

/// Categories are corpus names (`[2]`, `span`, `Z/2`, …), `ordinal:N`, or JSON files.
#[derive(Subcommand)]
enum CatCmd {
    Show {
        cat: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Tw {
        cat: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Nerve {
        cat: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    CheckTw {
        cat: String,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    Corpus,
    Import { file: PathBuf },
    /// Shape diagrams and comparison maps at `K = Δᵏ`.
    Shapes {
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum OperadAction {
    Ext,
    ExtHa,
    Fiber,
    Orbits,
    Bo,
    Coherence,
    Export,
    Classify,
    Check,
}

#[derive(Args)]
struct OperadArgs {
    #[arg(value_enum)]
    action: OperadAction,
    /// Builtin name (Comm, Ass, AssInv, Triv) or a JSON file.
    #[arg(long, default_value = "AssInv")]
    operad: String,
    /// `NAME`, `id`, or components such as `ab(1,2);a(3)`.
    #[arg(long, default_value = "id")]
    sigma: String,
    /// Second morphism for `coherence`; without it every pair is swept.
    #[arg(long)]
    then: Option<String>,
    #[arg(long, default_value_t = 4)]
    arity_bound: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(default_value = "all")]
    selector: String,
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long)]
    arity_bound: Option<usize>,
    #[arg(long)]
    dim_bound: Option<usize>,
    /// Also write the JSON lines to a file.
    #[arg(long)]
    jsonl: Option<PathBuf>,
    /// Print only the summary table.
    #[arg(long)]
    quiet: bool,
}

type Res<T> = Result<T, String>;

fn main() -> ExitCode {
    if let Ok(n) = std::env::var("SSOK_THREADS") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: SSOK_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Sset { cmd } => sset_cmd(cmd),
        Command::Anodyne { cmd } => anodyne_cmd(cmd),
        Command::Cat { cmd } => cat_cmd(cmd),
        Command::Operad(a) => operad_cmd(a),
        Command::Suite(a) => suite_cmd(a),
    };
    match out {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).unwrap());
}

fn num(s: &str) -> Res<usize> {
    s.trim().parse().map_err(|_| format!("`{s}` is not a number"))
}

fn parse_sset(spec: &str) -> Res<SimplicialSet> {
    if let Some((kind, args)) = spec.split_once(':') {
        let args: Vec<&str> = args.split(',').collect();
        let x = match (kind, args.as_slice()) {
            ("simplex", [n]) => standard_simplex(num(n)?, None),
            ("boundary", [n]) => boundary(num(n)?),
            ("horn", [n, k]) => horn(num(n)?, num(k)?).map_err(|e| e.to_string())?,
            ("spine", [n]) => spine(num(n)?),
            _ if Path::new(spec).exists() => return sjson::from_str(&read(Path::new(spec))?).map_err(|e| e.to_string()),
            _ => return Err(format!("unknown simplicial set `{spec}`")),
        };
        return Ok(x);
    }
    sjson::from_str(&read(Path::new(spec))?).map_err(|e| format!("{spec}: {e}"))
}

fn sset_summary(x: &SimplicialSet) -> Value {
    json!({ "counts": x.counts(), "marked": x.marked_labels(), "euler": ssok::properties::euler(x) })
}

fn emit_sset(x: &SimplicialSet, format: Format) {
    match format {
        Format::Json => println!("{}", sjson::to_string(x)),
        Format::Dot => print!("{}", cat::json::sset_to_dot(x)),
        Format::Summary => print_json(&sset_summary(x)),
    }
}

fn sset_cmd(cmd: SsetCmd) -> Res<bool> {
    match cmd {
        SsetCmd::Show { spec, format } => emit_sset(&parse_sset(&spec)?, format),
        SsetCmd::Iso { a, b } => {
            let iso = is_isomorphic(&parse_sset(&a)?, &parse_sset(&b)?).is_iso();
            print_json(&json!({ "a": a, "b": b, "isomorphic": iso }));
            return Ok(iso);
        }
        SsetCmd::Join { a, b, format } => emit_sset(&join(&parse_sset(&a)?, &parse_sset(&b)?).set, format),
        SsetCmd::Product { a, b, format } => emit_sset(&product(&parse_sset(&a)?, &parse_sset(&b)?).set, format),
        SsetCmd::SLower { spec, format } => emit_sset(&s_lower(&parse_sset(&spec)?).set, format),
        SsetCmd::Tw { spec, dim, format } => emit_sset(&tw_simplicial(&parse_sset(&spec)?, dim).map_err(|e| e.to_string())?.set, format),
    }
    Ok(true)
}

fn named_inclusion(spec: &str) -> Res<Option<MarkedMap>> {
    let Some((name, k)) = spec.split_once(':') else { return Ok(None) };
    let Ok(kind) = name.parse::<MapKind>() else { return Ok(None) };
    let c = comparison_map(kind, &figure_simplex(num(k)?)).map_err(|e| e.to_string())?;
    if !c.is_mono() {
        return Err(format!("{name} at Δ{k} is not a monomorphism"));
    }
    MarkedMap::new(c.source, c.target, c.map).map(Some).map_err(|e| e.to_string())
}

fn anodyne_cmd(cmd: AnodyneCmd) -> Res<bool> {
    match cmd {
        AnodyneCmd::Search { source, target, class, budget, cert } => {
            let class: TargetClass = class.parse().map_err(|e: ssok::anodyne::AnodyneError| e.to_string())?;
            let incl = match (named_inclusion(&source)?, &target) {
                (Some(m), None) => m,
                (None, Some(t)) => MarkedMap::inclusion(&parse_sset(&source)?, &parse_sset(t)?).map_err(|e| e.to_string())?,
                (Some(_), Some(_)) => return Err("a named map takes no target".into()),
                (None, None) => return Err("give SOURCE TARGET or a named map such as i1:1".into()),
            };
            let mut cfg = SearchConfig::default();
            if let Some(b) = budget {
                cfg.node_budget = b;
            }
            let out = search_decomposition(&incl, class, &cfg);
            let mut line = json!({ "class": class, "outcome": out.kind(), "nodes": out.nodes() });
            let ok = match &out {
                SearchOutcome::Found { certificate, .. } => {
                    let replay = verify_certificate(certificate);
                    line["steps"] = json!(certificate.steps.len());
                    line["census"] = json!(certificate.census());
                    line["replayed"] = json!(replay.is_ok());
                    if let Some(path) = &cert {
                        fs::write(path, certificate.to_json_string()).map_err(|e| format!("{}: {e}", path.display()))?;
                        line["cert"] = json!(path.display().to_string());
                    }
                    replay.is_ok()
                }
                SearchOutcome::Rejected { witness, .. } => {
                    line["witness"] = json!(witness);
                    false
                }
                SearchOutcome::NoneWithinBudget { reason, .. } => {
                    line["reason"] = json!(reason);
                    false
                }
                SearchOutcome::BudgetExhausted { node_budget, .. } => {
                    line["node_budget"] = json!(node_budget);
                    false
                }
            };
            print_json(&line);
            Ok(ok)
        }
        AnodyneCmd::Verify { cert } => {
            let c = Certificate::from_json_str(&read(&cert)?).map_err(|e| format!("line {} column {}: {e}", e.line(), e.column()))?;
            match verify_certificate(&c) {
                Ok(r) => {
                    print_json(&json!({ "valid": true, "class": c.class, "steps": r.steps, "census": c.census() }));
                    Ok(true)
                }
                Err(e) => {
                    print_json(&json!({ "valid": false, "class": c.class, "failure": e.to_string() }));
                    Ok(false)
                }
            }
        }
        AnodyneCmd::SuiteAppendix { dim_bound } => {
            let all = identity_families(dim_bound);
            for c in &all {
                print_json(&json!(c));
            }
            let bad = all.iter().filter(|c| !c.iso).count();
            println!("{} identities, {} failures", all.len(), bad);
            Ok(bad == 0)
        }
    }
}

fn parse_cat(spec: &str) -> Res<FiniteCategory> {
    if let Some((_, c)) = corpus().into_iter().find(|(n, _)| *n == spec) {
        return Ok(c);
    }
    if let Some(n) = spec.strip_prefix("ordinal:") {
        return Ok(cat::ordinal(num(n)?));
    }
    cat::json::from_str(&read(Path::new(spec))?).map_err(|e| format!("{spec}: {e}"))
}

fn emit_cat(c: &FiniteCategory, format: Format) {
    match format {
        Format::Json => println!("{}", cat::json::to_string(c)),
        Format::Dot => print!("{}", cat::json::to_dot(c)),
        Format::Summary => print_json(&json!({
            "objects": c.num_objects(),
            "morphisms": c.num_morphisms(),
            "pi0": c.pi0().len(),
            "groupoid": c.is_groupoid(),
            "hom_profile": c.hom_profile(),
        })),
    }
}

fn cat_cmd(cmd: CatCmd) -> Res<bool> {
    match cmd {
        CatCmd::Show { cat, format } => emit_cat(&parse_cat(&cat)?, format),
        CatCmd::Tw { cat, format } => emit_cat(&twisted_arrow_cat(&parse_cat(&cat)?).cat, format),
        CatCmd::Nerve { cat, dim, format } => emit_sset(&nerve_truncated(&parse_cat(&cat)?, dim, true).set, format),
        CatCmd::CheckTw { cat, dim } => {
            let res = check_canonical_iso(&parse_cat(&cat)?, dim);
            print_json(&json!({ "category": cat, "dim": dim, "isomorphic": res.is_ok(), "detail": res.as_ref().err() }));
            return Ok(res.is_ok());
        }
        CatCmd::Corpus => {
            for (name, c) in corpus() {
                print_json(&json!({ "name": name, "objects": c.num_objects(), "morphisms": c.num_morphisms() }));
            }
        }
        CatCmd::Import { file } => emit_cat(&parse_cat(&file.display().to_string())?, Format::Summary),
        CatCmd::Shapes { k, shape: which, format } => {
            let kinds: Vec<ShapeKind> = match &which {
                Some(s) => vec![s.parse()?],
                None => ShapeKind::ALL.to_vec(),
            };
            for kind in kinds {
                let d = shape(kind, &figure_simplex(k));
                if format == Format::Summary || which.is_none() {
                    let c = d.counts();
                    print_json(&json!({ "shape": kind.name(), "k": k, "vertices": c.vertices, "edges": c.edges, "marked": c.marked }));
                } else {
                    emit_sset(&d.set, format);
                }
            }
        }
    }
    Ok(true)
}

fn parse_operad(spec: &str, bound: usize) -> Res<DiscreteOperad> {
    if let Ok(b) = spec.parse::<Builtin>() {
        return Ok(builtin_operad(b, bound));
    }
    if !Path::new(spec).exists() {
        return Err(format!("unknown operad `{spec}` (expected Comm, Ass, AssInv, Triv or a JSON file)"));
    }
    operad::json::from_str(&read(Path::new(spec))?).map_err(|e| format!("{spec}: {e}"))
}

fn operad_cmd(a: OperadArgs) -> Res<bool> {
    let o = parse_operad(&a.operad, a.arity_bound)?;
    let err = |e: operad::OperadError| e.to_string();
    let sigma = || parse_sigma(&o, &a.sigma).map_err(err);
    match a.action {
        OperadAction::Export => match a.format {
            Format::Dot => return Err("operads export as json only".into()),
            _ => println!("{}", operad::json::to_string(&o)),
        },
        OperadAction::Check => {
            let n = o.check_axioms(o.bound).map_err(err)?;
            print_json(&json!({ "operad": o.name, "bound": o.bound, "unital": o.is_unital(), "instances": n }));
        }
        OperadAction::Classify => {
            let s = sigma()?;
            let c = s.alpha.classify();
            print_json(&json!({
                "sigma": s.display(&o),
                "pointed_map": s.alpha.to_string(),
                "inert": c.inert,
                "active": c.active,
                "semi_inert": s.is_semi_inert(&o),
                "atomic": s.is_atomic(&o),
                "equivalence": s.is_equivalence(&o),
            }));
        }
        OperadAction::Fiber | OperadAction::Orbits => {
            let s = sigma()?;
            if s.target() != 1 {
                return Err("σ must have a single output".into());
            }
            let i = standard_atomic(&o, s.source()).map_err(err)?;
            let f = s.ops[0];
            if a.action == OperadAction::Fiber {
                let fib = strict_fiber(&o, f, &i).map_err(err)?;
                let names: Vec<&str> = fib.iter().map(|&g| o.op_name(g)).collect();
                print_json(&json!({ "sigma": s.display(&o), "size": fib.len(), "fiber": names }));
            } else {
                let orb = unary_orbits(&o, f, &i).map_err(err)?;
                print_json(&json!({ "sigma": s.display(&o), "count": orb.orbits.len(), "orbits": orb }));
            }
        }
        OperadAction::Ext | OperadAction::ExtHa => {
            let s = sigma()?;
            let e = if a.action == OperadAction::Ext { ext_category(&o, &s) } else { ext_ha_category(&o, &s) }.map_err(err)?;
            match a.format {
                Format::Summary => print_json(&json!({
                    "sigma": s.display(&o),
                    "objects": e.cat.num_objects(),
                    "morphisms": e.cat.num_morphisms(),
                    "pi0": e.cat.pi0().len(),
                    "hom_profile": e.cat.hom_profile(),
                })),
                f => emit_cat(&e.cat, f),
            }
        }
        OperadAction::Bo => {
            let s = sigma()?;
            let b = bo_fiber(&o, &s).map_err(err)?;
            match a.format {
                Format::Summary => print_json(&json!({
                    "sigma": s.display(&o),
                    "objects": b.cat.num_objects(),
                    "morphisms": b.cat.num_morphisms(),
                    "pi0": b.cat.pi0().len(),
                    "hom_profile": b.cat.hom_profile(),
                })),
                f => emit_cat(&b.cat, f),
            }
        }
        OperadAction::Coherence => {
            let verdicts = match &a.then {
                Some(g) => {
                    let (f, g) = (sigma()?, parse_sigma(&o, g).map_err(err)?);
                    compose(&o, &g, &f).map_err(err)?;
                    vec![coherence_probe(&o, &f, &g).map_err(err)?]
                }
                None => coherence_sweep(&o, o.bound.saturating_sub(1)).map_err(err)?,
            };
            for v in &verdicts {
                print_json(&json!(v));
            }
            let bad = verdicts.iter().filter(|v| !v.pushout).count();
            println!("{} pairs, {} failures", verdicts.len(), bad);
            return Ok(bad == 0);
        }
    }
    Ok(true)
}

fn suite_cmd(a: SuiteArgs) -> Res<bool> {
    let sel: Selector = a.selector.parse()?;
    let mut cfg = SuiteConfig::default();
    if let Some(b) = a.budget {
        cfg.node_budget = b;
    }
    if let Some(b) = a.arity_bound {
        cfg.arity_bound = b;
    }
    if let Some(b) = a.dim_bound {
        cfg.dim_bound = b;
    }
    let r: SuiteReport = run_suite(sel, &cfg);
    let lines = r.to_jsonl();
    if let Some(path) = &a.jsonl {
        fs::write(path, &lines).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if !a.quiet {
        print!("{lines}");
    }
    print!("{}", r.summary_table());
    Ok(r.passed())
}
