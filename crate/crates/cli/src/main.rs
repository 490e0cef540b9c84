use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use htype_core::clifford::{minimal_admissible_module, Signature};
use htype_core::htype::{build_htype, heisenberg_uniqueness_check, verify_su33_fixture, GradedNilpotentAlgebra};
use htype_core::prolong::{
    killing_report, prolong_with_progress, simplicity_certificate, ProlongError, ProlongationResult,
    DEFAULT_MAX_DEGREE,
};
use htype_core::rhe::screen_grading;
use htype_core::rootsys::{
    enumerate_two_gradings, grading_dims_by_roots, grading_dims_closed_form, Family, SimpleType,
};
use htype_core::tables::{
    complex_name, growth_label, Cell, EmitterRegistry, ReproduceOptions, ReproducerRegistry, TableDoc,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Parser)]
#[command(name = "htype", version, about = "Gradings, pseudo H-type algebras and their Tanaka prolongations")]
struct Cli {
    /// Output format: json, csv or md.
    #[arg(long, global = true, default_value = "md", value_parser = ["json", "csv", "md"])]
    format: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List |2|-gradings with their dimensions.
    Gradings(TypeSel),
    /// Screen gradings against the RHE bound.
    Screen(ScreenArgs),
    /// Print computed tables without comparing them.
    Tables(TablesArgs),
    /// Build a pseudo H-type algebra or run the fixed checks.
    Htype(HtypeArgs),
    /// Tanaka prolongation of a graded nilpotent algebra.
    Prolong(ProlongArgs),
    /// Regenerate a table and diff it against the stored one.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct TypeSel {
    /// Family letter (`C`) or full type (`E6`).
    #[arg(long = "type", value_parser = parse_type_sel)]
    ty: TypeArg,
    /// Rank or inclusive range such as `3..6`.
    #[arg(long, value_parser = parse_rank_range)]
    rank: Option<(usize, usize)>,
}

#[derive(Args)]
struct ScreenArgs {
    #[command(flatten)]
    sel: TypeSel,
    /// Keep only candidates with a centre of dimension above one.
    #[arg(long)]
    candidates: bool,
}

#[derive(Args)]
struct TablesArgs {
    /// Table ids; all when omitted.
    ids: Vec<String>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct RunArgs {
    /// Include the centre dimension 7 and 8 prolongations.
    #[arg(long)]
    long: bool,
    #[arg(long, env = "HTYPE_MAX_DEGREE", default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: i32,
}

#[derive(Args)]
struct HtypeArgs {
    /// Build n^{r,s} from its minimal admissible module.
    #[arg(long, value_parser = parse_signature, conflicts_with_all = ["su33", "heisenberg"])]
    signature: Option<Signature>,
    /// Check the su(3,3) example.
    #[arg(long)]
    su33: bool,
    /// Run the elementary-matrix isometry count on sl(n+1) for n up to this bound.
    #[arg(long, value_name = "N_MAX")]
    heisenberg: Option<usize>,
}

#[derive(Args)]
struct ProlongArgs {
    #[arg(long, value_parser = parse_signature, required_unless_present = "file", conflicts_with = "file")]
    signature: Option<Signature>,
    /// Algebra JSON file.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long, env = "HTYPE_MAX_DEGREE", default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: i32,
    /// Print level dimensions to stderr as they are found.
    #[arg(long)]
    progress: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    #[arg(value_parser = ["2", "3", "3a", "4a", "5", "8", "9"])]
    id: String,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Clone, Copy)]
enum TypeArg {
    Family(Family),
    Type(SimpleType),
}

fn parse_type_sel(s: &str) -> Result<TypeArg, String> {
    if s.len() == 1 {
        return s.parse().map(TypeArg::Family).map_err(|e| format!("{e}"));
    }
    s.parse().map(TypeArg::Type).map_err(|e| format!("{e}"))
}

fn parse_rank_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad rank {t:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => match b.strip_prefix('=') {
            Some(b) => (num(a)?, num(b)?),
            None => (num(a)?, num(b)?),
        },
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty rank range {s}"));
    }
    Ok((lo, hi))
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    let (r, t) = s.split_once(',').ok_or("expected r,s")?;
    let r = r.trim().parse().map_err(|_| format!("bad r in {s:?}"))?;
    let t = t.trim().parse().map_err(|_| format!("bad s in {s:?}"))?;
    Signature::new(r, t).map_err(|e| e.to_string())
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: msg.into(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn types_of(sel: &TypeSel) -> Result<(Vec<SimpleType>, Vec<String>), Failure> {
    let mut notes = Vec::new();
    let (family, lo, hi) = match (sel.ty, sel.rank) {
        (TypeArg::Type(t), None) => return Ok((vec![t], notes)),
        (TypeArg::Type(t), Some((lo, hi))) if lo == hi && lo == t.rank => {
            return Ok((vec![t], notes))
        }
        (TypeArg::Type(t), Some(_)) => {
            return Err(Failure::usage(format!("--rank conflicts with the rank of {t}")))
        }
        (TypeArg::Family(f), None) => (f, f.min_rank(), f.min_rank()),
        (TypeArg::Family(f), Some((lo, hi))) => (f, lo, hi),
    };
    let mut out = Vec::new();
    for n in lo..=hi {
        if family == Family::A && n == 1 {
            notes.push("A1 has a single positive root, of height one, so it cannot produce a |2|-grading.".into());
            continue;
        }
        match SimpleType::new(family, n) {
            Ok(t) => out.push(t),
            Err(e) => return Err(Failure::usage(e.to_string())),
        }
    }
    Ok((out, notes))
}

fn emit(format: &str, doc: &TableDoc) -> Result<(), Failure> {
    let reg = EmitterRegistry::default();
    let text = reg
        .get(format)
        .and_then(|e| e.emit(doc))
        .map_err(|e| Failure::usage(e.to_string()))?;
    print!("{text}");
    Ok(())
}

fn cmd_gradings(format: &str, sel: &TypeSel) -> CmdResult {
    let (types, notes) = types_of(sel)?;
    let mut doc = TableDoc::new(
        "gradings",
        "|2|-gradings",
        &["Type", "Rank", "Σ", "d1", "d2", "d1 (formula)", "d2 (formula)"],
    );
    doc.notes = notes;
    for ty in types {
        for g in enumerate_two_gradings(ty) {
            let d = grading_dims_by_roots(&g);
            let (f1, f2) = match grading_dims_closed_form(&g) {
                Ok(f) => (f.d1.to_string(), f.d2.to_string()),
                Err(_) => ("--".into(), "--".into()),
            };
            doc.push_plain([
                ty.to_string(),
                ty.rank.to_string(),
                g.sigma_label(),
                d.d1.to_string(),
                d.d2.to_string(),
                f1,
                f2,
            ]);
        }
    }
    emit(format, &doc)?;
    Ok(0)
}

fn cmd_screen(format: &str, args: &ScreenArgs) -> CmdResult {
    let (types, notes) = types_of(&args.sel)?;
    let mut doc = TableDoc::new(
        "screen",
        "RHE screen",
        &["Type", "Σ", "d1", "d2", "rho(d1)", "RHE", "4 | d1", "candidate"],
    );
    doc.notes = notes;
    let yes = |b: bool| if b { "yes" } else { "no" };
    for ty in types {
        for g in enumerate_two_gradings(ty) {
            let v = screen_grading(&g);
            if args.candidates && !(v.candidate && v.dims.d2 > 1) {
                continue;
            }
            doc.push(vec![
                Cell::plain(ty.to_string()),
                Cell::plain(g.sigma_label()),
                Cell::plain(v.dims.d1.to_string()),
                Cell::plain(v.dims.d2.to_string()),
                Cell::plain(v.rho.to_string()),
                Cell::plain(yes(v.passes_rhe)),
                Cell::plain(yes(v.passes_div4)),
                Cell::bold(yes(v.candidate), v.candidate && v.dims.d2 > 1),
            ]);
        }
    }
    emit(format, &doc)?;
    Ok(0)
}

fn options(run: &RunArgs) -> Result<ReproduceOptions, Failure> {
    if run.max_degree < 0 {
        return Err(Failure::usage("--max-degree must be non-negative"));
    }
    Ok(ReproduceOptions {
        long: run.long,
        max_degree: run.max_degree,
        progress: Some(Arc::new(|line: &str| eprintln!("{line}"))),
        ..ReproduceOptions::default()
    })
}

fn cmd_tables(format: &str, args: &TablesArgs) -> CmdResult {
    let reg = ReproducerRegistry::default();
    let opts = options(&args.run)?;
    let ids: Vec<String> = if args.ids.is_empty() {
        reg.ids().into_iter().map(String::from).collect()
    } else {
        args.ids.clone()
    };
    for id in &ids {
        let rep = reg
            .get(id)
            .ok_or_else(|| Failure::usage(format!("unknown table {id:?}; known: {}", reg.ids().join(", "))))?;
        let generated = rep.generate(&opts).map_err(|e| Failure {
            code: EXIT_MISMATCH,
            msg: e.to_string(),
        })?;
        emit(format, &generated.doc)?;
        if format == "md" {
            println!();
        }
    }
    Ok(0)
}

fn cmd_reproduce(format: &str, args: &ReproduceArgs) -> CmdResult {
    let reg = ReproducerRegistry::default();
    let opts = options(&args.run)?;
    let rep = reg.reproduce(&args.id, &opts).map_err(|e| Failure {
        code: EXIT_MISMATCH,
        msg: e.to_string(),
    })?;
    emit(format, &rep.computed)?;
    eprint!("{}", rep.summary());
    Ok(if rep.is_match() { 0 } else { EXIT_MISMATCH })
}

fn cmd_htype(format: &str, args: &HtypeArgs) -> CmdResult {
    if let Some(sig) = args.signature {
        let rep = minimal_admissible_module(sig).map_err(|e| Failure::usage(e.to_string()))?;
        let (alg, metric) = build_htype(&rep).map_err(|e| Failure {
            code: EXIT_UNSUPPORTED,
            msg: e.to_string(),
        })?;
        if format == "json" {
            let mut v = alg.to_json();
            v["metric"] = serde_json::to_value(&metric).expect("metric serializes");
            println!("{}", serde_json::to_string_pretty(&v).expect("json prints"));
        } else {
            let mut doc = TableDoc::new("htype", &format!("n^{{{},{}}}", sig.r, sig.s), &["degree", "dim"]);
            for d in alg.degrees() {
                doc.push_plain([d.to_string(), alg.dim(d).to_string()]);
            }
            doc.notes.push(format!("{} non-zero brackets", alg.nonzero_brackets().count()));
            emit(format, &doc)?;
        }
        return Ok(0);
    }
    if args.su33 {
        let report = verify_su33_fixture();
        if format == "json" {
            println!(
                "{}",
                serde_json::json!({
                    "passed": report.passed(),
                    "literal_mismatches": report.literal_mismatches.len(),
                    "relabeled_mismatches": report.relabeled_mismatches.len(),
                })
            );
        } else {
            println!("{}", report.to_string().trim_end());
        }
        return Ok(if report.passed() { 0 } else { EXIT_MISMATCH });
    }
    if let Some(n_max) = args.heisenberg {
        let report = heisenberg_uniqueness_check(n_max).map_err(|e| Failure::usage(e.to_string()))?;
        let mut doc = TableDoc::new(
            "heisenberg",
            "Kernel-complement dimensions on Σ_{i,j} of sl(n+1)",
            &["n", "(i,j)", "d1", "d2", "min", "max", "closed form", "survives"],
        );
        for r in &report.rows {
            doc.push(vec![
                Cell::plain(r.n.to_string()),
                Cell::plain(format!("({},{})", r.i, r.j)),
                Cell::plain(r.d1.to_string()),
                Cell::plain(r.d2.to_string()),
                Cell::plain(r.min_dim.to_string()),
                Cell::plain(r.max_dim.to_string()),
                Cell::plain(if r.closed_form_ok { "ok" } else { "differs" }),
                Cell::bold(if r.survives { "yes" } else { "no" }, r.survives),
            ]);
        }
        emit(format, &doc)?;
        let ok = report.closed_forms_ok() && report.survivors_are_heisenberg();
        return Ok(if ok { 0 } else { EXIT_MISMATCH });
    }
    Err(Failure::usage("htype needs one of --signature, --su33, --heisenberg"))
}

fn prolong_doc(res: &ProlongationResult) -> TableDoc {
    let mut doc = TableDoc::new("prolong", "Tanaka prolongation", &["degree", "dim"]);
    for (k, d) in res.growth_vector.iter().enumerate() {
        doc.push_plain([(res.min_degree + k as i32).to_string(), d.to_string()]);
    }
    doc.notes.push(format!("growth vector {}", growth_label(res)));
    doc.notes.push(format!(
        "Jacobi violations: {}, transitive: {}",
        res.jacobi_violations().len(),
        res.is_transitive()
    ));
    if res.terminated {
        let k = killing_report(&res.algebra);
        doc.notes.push(format!("Killing form non-degenerate: {}", k.nondegenerate));
        let cert = simplicity_certificate(res);
        doc.notes.push(format!("verdict: {}", cert.verdict));
        if let Some((ty, sigma)) = cert.identification.unique() {
            doc.notes.push(format!(
                "complex type: {} with Σ {:?}",
                complex_name(ty),
                sigma
            ));
        }
    } else {
        doc.notes.push(format!("not terminated by degree {}", res.max_degree));
    }
    doc
}

fn cmd_prolong(format: &str, args: &ProlongArgs) -> CmdResult {
    if args.max_degree < 0 {
        return Err(Failure::usage("--max-degree must be non-negative"));
    }
    let alg = match (&args.signature, &args.file) {
        (Some(sig), _) => {
            let rep = minimal_admissible_module(*sig).map_err(|e| Failure::usage(e.to_string()))?;
            build_htype(&rep)
                .map_err(|e| Failure {
                    code: EXIT_UNSUPPORTED,
                    msg: e.to_string(),
                })?
                .0
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            let v: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            GradedNilpotentAlgebra::from_json(&v).map_err(|e| Failure::usage(e.to_string()))?
        }
        (None, None) => return Err(Failure::usage("need --signature or --file")),
    };
    let show = args.progress;
    let mut progress = |p: i32, d: usize| {
        if show {
            eprintln!("dim g_{p} = {d}");
        }
    };
    let res = prolong_with_progress(&alg, args.max_degree, &mut progress).map_err(|e| {
        let code = match e {
            ProlongError::UnsupportedDepth(..)
            | ProlongError::NotNegative
            | ProlongError::NotGenerated => EXIT_UNSUPPORTED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    })?;
    if format == "json" {
        println!("{}", serde_json::to_string_pretty(&res.to_json()).expect("json prints"));
    } else {
        emit(format, &prolong_doc(&res))?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let f = cli.format.as_str();
    let out = match &cli.command {
        Command::Gradings(sel) => cmd_gradings(f, sel),
        Command::Screen(a) => cmd_screen(f, a),
        Command::Tables(a) => cmd_tables(f, a),
        Command::Htype(a) => cmd_htype(f, a),
        Command::Prolong(a) => cmd_prolong(f, a),
        Command::Reproduce(a) => cmd_reproduce(f, a),
    };
    match out {
        Ok(code) => ExitCode::from(code),
        Err(fail) => {
            eprintln!("error: {}", fail.msg);
            ExitCode::from(fail.code)
        }
    }
}
