//! `polyame`: build, analyze and cross-check AME states on Platonic solids.
//!
//! Exit status: 0 when every check passes (findings included), 1 when a
//! reproduction check fails, 2 on bad input or configuration.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use polyame::catalog::{dump_table, CatalogState};
use polyame::code::{rs_code, LinearCodeState};
use polyame::contraction::{
    build_d1, build_d2, build_hovering, canonical_orientations, d2_code, random_orientations, reference_orientations,
    Ame52Variant, BuiltState, Orientation,
};
use polyame::entropy::{
    binomial, entropy_sweep, partitions, verify_ame, PartitionMode, PlanRow, SweepPlan, DEFAULT_BUDGET,
};
use polyame::polytope::{platonic_by_name, Solid};
use polyame::report::{reproduce, CheckId, ReproduceOptions, Status};
use polyame::statefile::{read_state, write_state, StoredState};
use polyame::Error;

/// Environment variable holding the worker thread count.
const THREADS_ENV: &str = "POLYAME_THREADS";

/// Balanced cuts checked by `code rs` before the AME check is skipped.
const CUT_CHECK_LIMIT: u128 = 5_000_000;

#[derive(Parser)]
#[command(name = "polyame", version, about = "AME states on Platonic solids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the shipped solids.
    Polytope {
        #[command(subcommand)]
        action: PolytopeCmd,
    },
    /// Inspect the catalog of small AME states.
    Ame {
        #[command(subcommand)]
        action: AmeCmd,
    },
    /// Contract a dodecahedron state and write it to a state file.
    Build(BuildArgs),
    /// Entropy sweep over a state file.
    Analyze(AnalyzeArgs),
    /// Linear code states.
    Code {
        #[command(subcommand)]
        action: CodeCmd,
    },
    /// Rebuild published artifacts and diff them against reference values.
    Reproduce(ReproduceArgs),
}

#[derive(Subcommand)]
enum PolytopeCmd {
    /// Vertices, edges and faces as JSON (1-based labels).
    Show { name: String },
}

#[derive(Subcommand)]
enum AmeCmd {
    /// Coefficient table of a catalog state (ame52, ame52-rot, ame62, ame43).
    Dump {
        name: String,
        /// Also run the AME check over every balanced cut.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    D1,
    D2,
    Hovering,
}

#[derive(Clone, Copy, ValueEnum)]
enum Encoding {
    I8,
    F64,
}

#[derive(Args)]
struct BuildArgs {
    target: Target,
    /// `canonical`, `reference`, or a JSON file with one entry per face:
    /// an offset, or `{"offset": k, "reflected": bool}`.
    #[arg(long)]
    orientations: Option<String>,
    /// Random per-face rotations and reflections from this seed.
    #[arg(long, conflicts_with = "orientations")]
    seed: Option<u64>,
    /// 1-based site of the 6-qubit cell that carries the hovering qubit.
    #[arg(long, default_value_t = 6)]
    hover_pos: usize,
    /// State file to write; a `.json` sidecar records the assignment.
    #[arg(long)]
    out: PathBuf,
    /// Amplitude encoding; by default i8 when every coefficient fits, f64
    /// otherwise.
    #[arg(long, value_enum)]
    encoding: Option<Encoding>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    state: PathBuf,
    /// JSON sweep plan: `{"rows": [{"m": 6, "modes": [{"mode": "sample", "count": 100, "seed": 7}]}]}`.
    #[arg(long, conflicts_with_all = ["m", "sample", "structured"])]
    plan: Option<PathBuf>,
    /// Block sizes to sweep (repeatable).
    #[arg(long, num_args = 1..)]
    m: Vec<usize>,
    /// Seeded samples per block size instead of exhaustive enumeration.
    #[arg(long)]
    sample: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Add the structured cuts of this solid.
    #[arg(long)]
    structured: Option<Solid>,
    /// Cap on the cuts any single mode may produce.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Label stored in the report; defaults to the sidecar id or file stem.
    #[arg(long)]
    id: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Reed-Solomon code of length p + 1 over GF(p).
    Rs {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Cap on the codewords enumerated for the minimum distance.
        #[arg(long, default_value_t = 1 << 26)]
        budget: u128,
    },
    /// Even-parity-per-pentagon code on the dodecahedron vertices.
    D2 {
        /// Distribution of rank-formula entropies over every cut of size
        /// 1 to 10.
        #[arg(long)]
        entropies: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ReproduceArgs {
    /// Checks to run: table1, table2, table3, ame52-rot, ame62, rs12-11, hovering.
    ids: Vec<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 2000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    search_budget: usize,
    #[arg(long, default_value_t = 6)]
    hover_pos: usize,
    /// Orientations for the tabulated-tensor dodecahedron state (see `build`).
    #[arg(long)]
    orientations: Option<String>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Write all results as a JSON array.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    Config(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

type CliResult = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Polytope {
            action: PolytopeCmd::Show { name },
        } => polytope_show(&name),
        Command::Ame {
            action: AmeCmd::Dump { name, verify },
        } => ame_dump(&name, verify),
        Command::Build(args) => build(&args),
        Command::Analyze(args) => analyze(&args),
        Command::Code { action } => match action {
            CodeCmd::Rs { p, report, budget } => code_rs(p, report.as_deref(), budget),
            CodeCmd::D2 { entropies, report } => code_d2(entropies, report.as_deref()),
        },
        Command::Reproduce(args) => run_reproduce(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .parse()
        .map_err(|_| format!("{THREADS_ENV} must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> CliResult {
    fs::write(path, serde_json::to_string_pretty(value).expect("serializable") + "\n")?;
    Ok(())
}

fn unix_time() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

fn polytope_show(name: &str) -> CliResult {
    print_json(&platonic_by_name(name)?.to_json());
    Ok(())
}

fn ame_dump(name: &str, verify: bool) -> CliResult {
    let state: CatalogState = name.parse()?;
    let sv = state.build();
    print!("{}", dump_table(&sv));
    if verify {
        let v = verify_ame(&sv.normalized::<f64>()?, polyame::report::AME_TOLERANCE)?;
        println!(
            "# AME over {} cuts: {} (worst deviation {:.3e} at {:?})",
            v.cuts_checked,
            v.pass,
            v.worst_deviation,
            v.witness.labels()
        );
    }
    Ok(())
}

fn parse_orientations(source: &str, faces: usize) -> std::result::Result<Vec<Orientation>, Failure> {
    match source {
        "canonical" => return Ok(canonical_orientations(faces)),
        "reference" => return Ok(reference_orientations()),
        _ => {}
    }
    let text = fs::read_to_string(source).map_err(|e| Failure::Config(format!("{source}: {e}")))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Config(format!("{source}: {e}")))?;
    let entries = value
        .as_array()
        .ok_or_else(|| Failure::Config(format!("{source}: expected a JSON array")))?;
    let out = entries
        .iter()
        .map(|e| match e {
            Value::Number(n) => n
                .as_u64()
                .map(|k| Orientation::rotation(k as usize))
                .ok_or_else(|| Failure::Config(format!("{source}: bad offset {n}"))),
            other => serde_json::from_value(other.clone()).map_err(|e| Failure::Config(format!("{source}: {e}"))),
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    if out.len() != faces {
        return Err(Failure::Config(format!("{source}: {} entries for {faces} faces", out.len())));
    }
    Ok(out)
}

fn build(args: &BuildArgs) -> CliResult {
    let orientations = match (&args.orientations, args.seed) {
        (Some(source), _) => Some(parse_orientations(source, 12)?),
        (None, Some(seed)) => Some(random_orientations(12, 5, seed)),
        (None, None) => None,
    };
    let built: BuiltState = match args.target {
        Target::D1 => build_d1(orientations.as_deref(), Ame52Variant::Table1)?,
        Target::D2 => {
            if orientations.is_some() {
                eprintln!("note: the rotation-invariant tensor ignores orientations");
            }
            build_d2()?
        }
        Target::Hovering => build_hovering(args.hover_pos, orientations.as_deref())?,
    };
    let fits_i8 = built.coefficients.amps().iter().all(|&c| i8::try_from(c).is_ok());
    let encoding = args.encoding.unwrap_or(if fits_i8 { Encoding::I8 } else { Encoding::F64 });
    let stored = match encoding {
        Encoding::I8 => StoredState::Coefficients(built.coefficients.clone()),
        Encoding::F64 => StoredState::Amplitudes(built.coefficients.normalized::<f64>()?),
    };
    write_state(&args.out, &stored)?;
    let sidecar = json!({
        "id": built.id,
        "n": built.coefficients.n(),
        "d": built.coefficients.d(),
        "support": built.coefficients.support().len(),
        "assignment": built.assignment,
        "seed": args.seed,
        "metadata": { "generated_unix": unix_time() },
    });
    write_json(&sidecar_path(&args.out), &sidecar)?;
    eprintln!(
        "wrote {} ({} sites, {} nonzero amplitudes)",
        args.out.display(),
        built.coefficients.n(),
        built.coefficients.support().len()
    );
    Ok(())
}

fn sidecar_path(state: &Path) -> PathBuf {
    let mut s = state.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn analyze(args: &AnalyzeArgs) -> CliResult {
    let stored = read_state(&args.state)?;
    let sv = stored.to_f64()?;
    let plan = match &args.plan {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            serde_json::from_str::<SweepPlan>(&text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?
        }
        None => {
            if args.m.is_empty() {
                return Err(Failure::Config("give --plan or at least one --m".into()));
            }
            let rows = args
                .m
                .iter()
                .map(|&m| {
                    let mut modes = vec![match args.sample {
                        Some(count) => PartitionMode::Sample { count, seed: args.seed },
                        None => PartitionMode::Exhaustive,
                    }];
                    if let Some(solid) = args.structured {
                        modes.push(PartitionMode::Structured { solid });
                    }
                    PlanRow { m, modes }
                })
                .collect();
            SweepPlan {
                rows,
                budget: args.budget,
            }
        }
    };
    let sidecar: Option<Value> = fs::read_to_string(sidecar_path(&args.state))
        .ok()
        .and_then(|t| serde_json::from_str(&t).ok());
    let state_id = args
        .id
        .clone()
        .or_else(|| sidecar.as_ref().and_then(|s| s["id"].as_str().map(String::from)))
        .unwrap_or_else(|| {
            args.state
                .file_stem()
                .map_or_else(|| "state".into(), |s| s.to_string_lossy().into_owned())
        });
    let mut report = entropy_sweep(&sv, &state_id, &plan, None)?;
    report.metadata = Some(json!({
        "generated_unix": unix_time(),
        "state_file": args.state.display().to_string(),
        "assignment": sidecar.map(|s| s["assignment"].clone()),
    }));
    match &args.out {
        Some(path) => write_json(path, &report)?,
        None => print_json(&report),
    }
    if let Some(path) = &args.csv {
        fs::write(path, report.to_csv())?;
    }
    for row in &report.rows {
        eprintln!("m={:2} {:>7} cuts  values {:?}", row.m, row.examined, row.values);
    }
    Ok(())
}

fn code_summary(code: &LinearCodeState, budget: u128) -> polyame::Result<Value> {
    let mut skipped = Vec::new();
    let distance = if code.codeword_count() <= budget {
        code.min_hamming_distance()?
    } else {
        skipped.push(format!("minimum distance: {} codewords exceed the budget", code.codeword_count()));
        None
    };
    let ame = if binomial(code.n(), code.n() / 2) <= CUT_CHECK_LIMIT {
        Some(code.is_ame_code()?)
    } else {
        skipped.push(format!("AME check: {} balanced cuts", binomial(code.n(), code.n() / 2)));
        None
    };
    Ok(json!({
        "p": code.p(),
        "n": code.n(),
        "k": code.k(),
        "codewords": code.codeword_count().to_string(),
        "d_H": distance,
        "singleton_bound": code.n() - code.k() + 1,
        "is_ame": ame.as_ref().map(|a| a.is_ame),
        "ame_witness": ame.as_ref().and_then(|a| a.witness.clone()),
        "cuts_checked": ame.as_ref().map(|a| a.cuts_checked),
        "generator": code.generator().to_rows(),
        "skipped": skipped,
    }))
}

fn code_rs(p: u32, report: Option<&Path>, budget: u128) -> CliResult {
    let code = rs_code(p)?;
    let summary = code_summary(&code, budget)?;
    print_json(&summary);
    if let Some(path) = report {
        write_json(path, &summary)?;
    }
    Ok(())
}

fn code_d2(with_entropies: bool, report: Option<&Path>) -> CliResult {
    let code = d2_code();
    let mut summary = code_summary(&code, 1 << 26)?;
    if with_entropies {
        let mut rows = Vec::new();
        for m in 1..=10 {
            let mut counts = std::collections::BTreeMap::<usize, usize>::new();
            for cut in partitions(code.n(), m, &PartitionMode::Exhaustive, None, usize::MAX)? {
                *counts.entry(code.code_entropy(cut.sites())?).or_default() += 1;
            }
            eprintln!("m={m:2} {counts:?}");
            rows.push(json!({ "m": m, "counts": counts }));
        }
        summary["entropies"] = json!(rows);
    }
    print_json(&summary);
    if let Some(path) = report {
        write_json(path, &summary)?;
    }
    Ok(())
}

fn run_reproduce(args: &ReproduceArgs) -> CliResult {
    let ids: Vec<CheckId> = if args.all {
        CheckId::ALL.to_vec()
    } else if args.ids.is_empty() {
        return Err(Failure::Config("name at least one check or pass --all".into()));
    } else {
        args.ids.iter().map(|s| s.parse()).collect::<polyame::Result<_>>()?
    };
    let opts = ReproduceOptions {
        samples: args.samples,
        seed: args.seed,
        search_budget: args.search_budget,
        orientations: args.orientations.as_deref().map(|s| parse_orientations(s, 12)).transpose()?,
        hover_position: args.hover_pos,
        budget: args.budget,
    };
    let mut results = Vec::new();
    for id in ids {
        let r = reproduce(id, &opts)?;
        println!("{}", r.line());
        for d in &r.diffs {
            println!(
                "    {:?} {}: expected {} observed {}{}",
                d.kind,
                d.item,
                d.expected,
                d.observed,
                d.note.as_ref().map_or(String::new(), |n| format!(" ({n})"))
            );
        }
        results.push(r);
    }
    if let Some(path) = &args.out {
        write_json(path, &results)?;
    }
    if results.iter().any(|r| r.status == Status::Fail) {
        Err(Failure::Checks)
    } else {
        Ok(())
    }
}
