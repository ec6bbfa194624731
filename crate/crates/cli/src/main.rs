//! Command-line front end: load knowledge base files, run fusions and
//! queries, and produce postulate and operator reports.
//!
//! Exit codes: 0 success, 1 failed assertion or internal error, 2 input or
//! parse error, 3 a size cap was hit, 4 an operator violated the fusion
//! contract.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use posslog_core::fusion::{
    adaptive_h, classical_extraction, discount, fuse_n, FusedBase, FusionError, FusionProblem,
};
use posslog_core::logic::{parse, LogicError};
use posslog_core::operators::{Operator, OperatorError, ALL_CLASSES, DEFAULT_GRID_STEP};
use posslog_core::possibilistic::{format_kb, parse_kb, KbError, PossError, PossibilisticBase};
use posslog_core::postulates::{
    random_search_bounded, table1_report, PostulateId, RandomBaseSpec,
};
use posslog_core::{config, weight};
use serde_json::json;

#[derive(Parser)]
#[command(name = "posslog", version, about = "Possibilistic knowledge base fusion")]
struct Cli {
    /// Weight comparison tolerance.
    #[arg(long, global = true)]
    eps: Option<f64>,
    /// Cap on the number of propositional variables.
    #[arg(long, global = true)]
    max_vars: Option<usize>,
    /// Cap on the number of items a fusion may emit.
    #[arg(long, global = true)]
    explosion_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fuse knowledge bases under a combination operator.
    Merge(MergeArgs),
    /// Query a knowledge base for graded entailment.
    Query(QueryArgs),
    /// Print the inconsistency degree of the union of the inputs.
    Inc(IncArgs),
    /// Check merging postulates empirically.
    Postulates(PostulatesArgs),
    /// Classify a combination operator on the evaluation grid.
    ClassifyOp(ClassifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Kb,
    Structured,
}

#[derive(Args)]
struct MergeArgs {
    /// Knowledge base files, one per source.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Combination operator name (see `classify-op --help` for builtins).
    #[arg(long, default_value = "min")]
    op: String,
    /// Grid table file defining a custom operator.
    #[arg(long, conflicts_with = "op")]
    op_table: Option<PathBuf>,
    /// Source reliability in [0, 1]; repeatable, paired with inputs in order.
    #[arg(long)]
    lambda: Vec<f64>,
    /// Print the raw fusion instead of the simplified base.
    #[arg(long)]
    raw: bool,
    /// Simplify the output base (the default; opposite of --raw).
    #[arg(long, conflicts_with = "raw")]
    normalize: bool,
    /// Mode bit override for the adaptive operator: 1 forces the
    /// disjunctive side, 0 the reinforcement side.
    #[arg(long)]
    adaptive_h: Option<u8>,
    #[arg(long, value_enum, default_value_t = Format::Kb)]
    format: Format,
}

#[derive(Args)]
struct QueryArgs {
    /// Knowledge base file.
    input: PathBuf,
    /// Formula over the base's vocabulary.
    formula: String,
    /// With a threshold: print yes/no for entailment at that degree.
    /// Without: print the entailment degree.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Kb)]
    format: Format,
}

#[derive(Args)]
struct IncArgs {
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Kb)]
    format: Format,
}

#[derive(Args)]
struct PostulatesArgs {
    /// Print the full min/max/prod matrix (the default action).
    #[arg(long)]
    table1: bool,
    /// Exit nonzero unless the matrix matches the expected pattern.
    #[arg(long)]
    assert_table1: bool,
    /// Check a single postulate (P1..P7, Arb, Maj) against --op.
    #[arg(long, conflicts_with_all = ["table1", "assert_table1"])]
    check: Option<String>,
    #[arg(long, default_value = "min")]
    op: String,
    #[arg(long, conflicts_with = "op")]
    op_table: Option<PathBuf>,
    /// Random problems per search.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Repetition bound for the arbitration and majority searches.
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Dump failure witnesses as KB files into this directory.
    #[arg(long)]
    witness_dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Kb)]
    format: Format,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, default_value = "min")]
    op: String,
    #[arg(long, conflicts_with = "op")]
    op_table: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_GRID_STEP)]
    grid_step: f64,
    #[arg(long, value_enum, default_value_t = Format::Kb)]
    format: Format,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

fn logic_code(e: &LogicError) -> u8 {
    match e {
        LogicError::Syntax { .. } | LogicError::UnknownAtom { .. } => 2,
        LogicError::CapExceeded { .. } => 3,
    }
}

fn poss_code(e: &PossError) -> u8 {
    match e {
        PossError::Logic(l) => logic_code(l),
        PossError::WeightOutOfRange { .. } | PossError::VocabularyMismatch { .. } => 2,
    }
}

fn op_code(e: &OperatorError) -> u8 {
    match e {
        OperatorError::ContractViolation { .. } | OperatorError::NaryUndefined(_) => 4,
        OperatorError::UnknownName(_)
        | OperatorError::ClassMismatch { .. }
        | OperatorError::InvalidTable(_) => 2,
    }
}

fn fusion_code(e: &FusionError) -> u8 {
    match e {
        FusionError::Logic(l) => logic_code(l),
        FusionError::Poss(p) => poss_code(p),
        FusionError::Operator(o) => op_code(o),
        FusionError::ExplosionCap { .. } => 3,
        FusionError::ArityMismatch { .. }
        | FusionError::NoBases
        | FusionError::VocabularyMismatch => 2,
    }
}

impl From<LogicError> for CliError {
    fn from(e: LogicError) -> Self {
        CliError {
            code: logic_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<PossError> for CliError {
    fn from(e: PossError) -> Self {
        CliError {
            code: poss_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<OperatorError> for CliError {
    fn from(e: OperatorError) -> Self {
        CliError {
            code: op_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<FusionError> for CliError {
    fn from(e: FusionError) -> Self {
        CliError {
            code: fusion_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<KbError> for CliError {
    fn from(e: KbError) -> Self {
        let code = match &e {
            KbError::Line { .. } => 2,
            KbError::Base(p) => poss_code(p),
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(eps) = cli.eps {
        if !(eps > 0.0 && eps < 1.0) {
            return Err(CliError::input(format!("tolerance {eps} outside (0, 1)")));
        }
        weight::set_eps(eps);
    }
    if let Some(cap) = cli.max_vars {
        if cap == 0 {
            return Err(CliError::input("variable cap must be positive"));
        }
        config::set_max_vars(cap);
    }
    if let Some(cap) = cli.explosion_cap {
        if cap == 0 {
            return Err(CliError::input("item cap must be positive"));
        }
        config::set_explosion_cap(cap);
    }
    match cli.command {
        Command::Merge(args) => cmd_merge(args),
        Command::Query(args) => cmd_query(args),
        Command::Inc(args) => cmd_inc(args),
        Command::Postulates(args) => cmd_postulates(args),
        Command::ClassifyOp(args) => cmd_classify(args),
    }
}

fn load_base(path: &Path) -> Result<PossibilisticBase, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    parse_kb(&text, None)
        .map_err(|e| CliError::input(format!("{}: {}", path.display(), CliError::from(e).message)))
}

/// Resolve `--op`/`--op-table` to an operator. `adaptive` chooses its mode
/// bit from the inputs (disjunctive exactly on full conflict) unless
/// overridden.
fn resolve_op(
    name: &str,
    table: Option<&Path>,
    bases: Option<&[PossibilisticBase]>,
    h_flag: Option<u8>,
) -> Result<Operator, CliError> {
    if let Some(path) = table {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        return Ok(Operator::from_table(&text)?);
    }
    if name == "adaptive" {
        let h = match h_flag {
            Some(h) if h <= 1 => h,
            Some(h) => {
                return Err(CliError::input(format!(
                    "adaptive mode bit must be 0 or 1, got {h}"
                )))
            }
            None => match bases {
                Some(bs) => adaptive_h(bs)?,
                None => 0,
            },
        };
        return Ok(Operator::adaptive(
            Operator::builtin("max")?,
            Operator::builtin("prod")?,
            h,
        )?);
    }
    Ok(Operator::builtin(name)?)
}

fn cmd_merge(args: MergeArgs) -> Result<ExitCode, CliError> {
    let mut bases: Vec<PossibilisticBase> = args
        .inputs
        .iter()
        .map(|p| load_base(p))
        .collect::<Result<_, _>>()?;
    if !args.lambda.is_empty() {
        if args.lambda.len() != bases.len() {
            return Err(CliError::input(format!(
                "{} reliabilities for {} inputs",
                args.lambda.len(),
                bases.len()
            )));
        }
        bases = bases
            .iter()
            .zip(&args.lambda)
            .map(|(b, &l)| discount(b, l))
            .collect::<Result<_, _>>()?;
    }
    let op = resolve_op(&args.op, args.op_table.as_deref(), Some(&bases), args.adaptive_h)?;
    let problem = FusionProblem::new(bases, op);
    let fused: FusedBase = fuse_n(&problem)?;
    let inc_union = problem.union_base()?.inconsistency_degree()?;
    let inc_fusion = fused.base.inconsistency_degree()?;
    let extraction: Vec<String> = classical_extraction(&fused.base)?
        .iter()
        .map(|f| f.to_string())
        .collect();
    let out = if args.raw {
        fused.base.clone()
    } else {
        fused.base.normalize()?
    };
    match args.format {
        Format::Kb => {
            println!("# operator: {}", problem.operator.name());
            println!("# inc(union) = {inc_union}");
            println!("# inc(fusion) = {inc_fusion}");
            println!("# extraction: {}", extraction.join(" ; "));
            print!("{}", format_kb(&out));
        }
        Format::Structured => {
            let items: Vec<serde_json::Value> = out
                .items()
                .iter()
                .enumerate()
                .map(|(i, it)| {
                    let mut v = json!({
                        "formula": it.formula.to_string(),
                        "weight": it.weight,
                    });
                    if args.raw {
                        v["provenance"] = json!(fused.provenance[i].sources);
                    }
                    v
                })
                .collect();
            let doc = json!({
                "operator": problem.operator.name(),
                "inc_union": inc_union,
                "inc_fusion": inc_fusion,
                "extraction": extraction,
                "raw": args.raw,
                "items": items,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_query(args: QueryArgs) -> Result<ExitCode, CliError> {
    let base = load_base(&args.input)?;
    let formula = parse(&args.formula, Some(base.vocabulary()))?;
    match args.alpha {
        Some(alpha) => {
            if !weight::in_unit(alpha) {
                return Err(CliError::input(format!("threshold {alpha} outside [0, 1]")));
            }
            let entailed = base.pi_entails(&formula, alpha)?;
            match args.format {
                Format::Kb => println!("{}", if entailed { "yes" } else { "no" }),
                Format::Structured => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "formula": formula.to_string(),
                        "alpha": alpha,
                        "entailed": entailed,
                    }))
                    .expect("json")
                ),
            }
        }
        None => {
            let degree = base.entailment_degree(&formula)?;
            match args.format {
                Format::Kb => println!("{degree}"),
                Format::Structured => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "formula": formula.to_string(),
                        "degree": degree,
                    }))
                    .expect("json")
                ),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_inc(args: IncArgs) -> Result<ExitCode, CliError> {
    let mut union: Option<PossibilisticBase> = None;
    for path in &args.inputs {
        let b = load_base(path)?;
        union = Some(match union {
            None => b,
            Some(u) => u.union(&b)?,
        });
    }
    let union = union.expect("clap requires at least one input");
    let inc = union.inconsistency_degree()?;
    match args.format {
        Format::Kb => println!("{inc}"),
        Format::Structured => println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "inc": inc })).expect("json")
        ),
    }
    Ok(ExitCode::SUCCESS)
}

/// Dump a failure witness. With a directory: one KB file per base plus a
/// manifest; otherwise the bases are inlined.
fn witness_value(
    problem: &FusionProblem,
    dir: Option<&Path>,
) -> Result<serde_json::Value, CliError> {
    let texts: Vec<String> = problem.bases.iter().map(format_kb).collect();
    match dir {
        Some(dir) => {
            fs::create_dir_all(dir)
                .map_err(|e| CliError::input(format!("{}: {e}", dir.display())))?;
            let mut files = Vec::new();
            for (i, text) in texts.iter().enumerate() {
                let path = dir.join(format!("witness-{}.kb", i + 1));
                fs::write(&path, text)
                    .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                files.push(path.display().to_string());
            }
            let manifest = dir.join("manifest.json");
            let doc = json!({
                "operator": problem.operator.name(),
                "bases": files,
            });
            fs::write(&manifest, serde_json::to_string_pretty(&doc).expect("json"))
                .map_err(|e| CliError::input(format!("{}: {e}", manifest.display())))?;
            Ok(json!({
                "operator": problem.operator.name(),
                "manifest": manifest.display().to_string(),
                "files": files,
            }))
        }
        None => Ok(json!({
            "operator": problem.operator.name(),
            "bases": texts,
        })),
    }
}

fn cmd_postulates(args: PostulatesArgs) -> Result<ExitCode, CliError> {
    if let Some(check) = &args.check {
        let id: PostulateId = check
            .parse()
            .map_err(|e: String| CliError::input(e))?;
        let op = resolve_op(&args.op, args.op_table.as_deref(), None, None)?;
        let spec = RandomBaseSpec {
            trials: args.trials,
            seed: args.seed,
            ..RandomBaseSpec::standard(args.seed)
        };
        let verdict =
            random_search_bounded(&spec, id, &op, args.n_max.max(2), args.n_max.max(1))?;
        let witness = match &verdict.witness {
            Some(problem) => Some(witness_value(problem, args.witness_dir.as_deref())?),
            None => None,
        };
        match args.format {
            Format::Kb => {
                println!("{id} / {}: {}", op.name(), verdict.status);
                if !verdict.condition_notes.is_empty() {
                    println!("notes: {}", verdict.condition_notes);
                }
                if let Some(w) = &witness {
                    if let Some(files) = w.get("files") {
                        println!("witness manifest: {}", w["manifest"].as_str().unwrap_or(""));
                        for f in files.as_array().into_iter().flatten() {
                            println!("witness base: {}", f.as_str().unwrap_or(""));
                        }
                    } else if let Some(bases) = w["bases"].as_array() {
                        for (i, text) in bases.iter().enumerate() {
                            println!("witness base {}:", i + 1);
                            for line in text.as_str().unwrap_or("").lines() {
                                println!("  {line}");
                            }
                        }
                    }
                }
            }
            Format::Structured => {
                let doc = json!({
                    "postulate": id.to_string(),
                    "operator": op.name(),
                    "status": verdict.status.to_string(),
                    "notes": verdict.condition_notes,
                    "trials": args.trials,
                    "seed": args.seed,
                    "witness": witness,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            }
        }
        return Ok(ExitCode::SUCCESS);
    }

    let report = table1_report(args.trials, args.seed)?;
    let matches = report.matches_expected();
    match args.format {
        Format::Kb => {
            print!("{}", report.render_text());
            println!(
                "matrix matches the expected pattern: {}",
                if matches { "yes" } else { "no" }
            );
        }
        Format::Structured => {
            let cells: Vec<serde_json::Value> = report
                .cells
                .iter()
                .map(|c| {
                    json!({
                        "operator": c.operator,
                        "postulate": c.postulate.to_string(),
                        "status": c.verdict.status.to_string(),
                        "expected_holds": c.expected.holds,
                        "condition": c.expected.condition,
                        "matches": c.matches_expected(),
                        "notes": c.verdict.condition_notes,
                    })
                })
                .collect();
            let doc = json!({
                "trials": report.trials,
                "seed": report.seed,
                "matches_expected": matches,
                "cells": cells,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    if args.assert_table1 && !matches {
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: ClassifyArgs) -> Result<ExitCode, CliError> {
    if !(args.grid_step > 0.0 && args.grid_step <= 0.5) {
        return Err(CliError::input(format!(
            "grid step {} outside (0, 0.5]",
            args.grid_step
        )));
    }
    let op = resolve_op(&args.op, args.op_table.as_deref(), None, None)?;
    let report = op.classify(args.grid_step);
    let contract_ok = report.contract_identity.holds && report.contract_monotone.holds;
    let declared_match = report.matches(op.declared_classes());
    match args.format {
        Format::Kb => {
            println!("operator: {}", report.operator);
            println!("grid step: {}", report.grid_step);
            let show = |label: &str, v: &posslog_core::operators::ClassVerdict| match v.witness {
                Some((a, b)) if !v.holds => println!("{label}: fails at ({a}, {b})"),
                _ => println!("{label}: {}", if v.holds { "holds" } else { "fails" }),
            };
            show("contract: boundary identity", &report.contract_identity);
            show("contract: monotonicity", &report.contract_monotone);
            for class in ALL_CLASSES {
                show(&class.to_string(), report.verdict(class));
            }
            println!(
                "declared classes match: {}",
                if declared_match { "yes" } else { "no" }
            );
        }
        Format::Structured => {
            let verdict_value = |v: &posslog_core::operators::ClassVerdict| {
                json!({
                    "holds": v.holds,
                    "witness": v.witness.map(|(a, b)| vec![a, b]),
                })
            };
            let classes: Vec<serde_json::Value> = ALL_CLASSES
                .into_iter()
                .map(|c| {
                    let mut v = verdict_value(report.verdict(c));
                    v["class"] = json!(c.to_string());
                    v
                })
                .collect();
            let doc = json!({
                "operator": report.operator,
                "grid_step": report.grid_step,
                "contract_identity": verdict_value(&report.contract_identity),
                "contract_monotone": verdict_value(&report.contract_monotone),
                "classes": classes,
                "declared_match": declared_match,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    if !contract_ok {
        return Ok(ExitCode::from(4));
    }
    Ok(ExitCode::SUCCESS)
}
