//! Command-line front end: analyze, verify, bench, gradcheck, list-models.
//!
//! Every command is scriptable. Defaults can come from a flat key=value
//! config file (`--config`); explicit flags always win. `LOWFORMER_THREADS`
//! supplies the default thread label when neither flag nor file sets one.
//! Exit codes: 0 success, 1 a check or measurement failed, 2 usage error.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lowformer::bench::{
    experiment_to_csv, measure, result_to_csv, run_experiment, to_json_pretty, BenchProtocol,
    GridOverrides, RealClock, DEFAULT_WARMUP, EXPERIMENTS, LATENCY_ITERATIONS,
    THROUGHPUT_ITERATIONS,
};
use lowformer::cost::{analyze, render_text, report_to_csv, CostPolicy};
use lowformer::gradcheck::{run_check, CheckBlock, ALL_BLOCKS, TOLERANCE};
use lowformer::{golden, zoo, Error};

const THREADS_ENV: &str = "LOWFORMER_THREADS";
const DEFAULT_SEED: u64 = 7;
const DEFAULT_TOLERANCE: f64 = 0.03;

#[derive(Parser)]
#[command(
    name = "lowformer",
    version,
    about = "LowFormer backbone cost analysis, verification, and benchmarking",
    after_help = generated_help()
)]
struct Cli {
    /// Flat key=value file supplying flag defaults; flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Per-layer MAC/parameter table for one registry model
    Analyze(AnalyzeArgs),
    /// Check analyzer output against the pinned reference table
    Verify(VerifyArgs),
    /// Time a model, or regenerate one of the experiment tables
    Bench(BenchArgs),
    /// Compare block VJPs against finite differences
    Gradcheck(GradcheckArgs),
    /// Print every registry model id
    ListModels,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Registry model id (see --help for the full list)
    model: String,
    /// Input resolution; defaults to the model's native resolution
    #[arg(long)]
    res: Option<usize>,
    /// Count attention score/value matmuls in MAC totals
    #[arg(long, value_enum, value_name = "on|off")]
    policy_attn: Option<Toggle>,
    /// Emit csv or json instead of the text table
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Weight-init seed (costs are seed-independent)
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: backbones, ablations, edge, or all
    #[arg(long)]
    suite: Option<String>,
    /// Allowed fractional deviation from published figures (0.03 = 3%)
    #[arg(long)]
    tolerance: Option<f64>,
    /// Alternative reference table (JSON); defaults to the bundled one
    #[arg(long, value_name = "PATH")]
    golden: Option<PathBuf>,
    #[arg(long, value_enum, value_name = "on|off")]
    policy_attn: Option<Toggle>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct BenchArgs {
    /// Registry model id; omit when --experiment is given
    model: Option<String>,
    /// Experiment table to regenerate: grouping, mbconv_sweep, res_vs_chan, attention
    #[arg(long, value_name = "NAME")]
    experiment: Option<String>,
    /// Input resolution override for a single model
    #[arg(long)]
    res: Option<usize>,
    /// Images per forward pass [default: 1]
    #[arg(long)]
    batch: Option<usize>,
    /// Timed iterations [default: 200 at batch 1, else 100]
    #[arg(long)]
    iters: Option<usize>,
    /// Untimed warm-up iterations [default: 5]
    #[arg(long)]
    warmup: Option<usize>,
    /// Thread pinning recorded in the protocol [default: $LOWFORMER_THREADS or 1]
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Hardware label stamped into result rows [default: host]
    #[arg(long)]
    device_label: Option<String>,
    /// Channel grid override for mbconv_sweep, e.g. 16,64
    #[arg(long, value_delimiter = ',')]
    channels: Option<Vec<usize>>,
    /// Resolution grid override for mbconv_sweep / attention
    #[arg(long, value_delimiter = ',')]
    resolutions: Option<Vec<usize>>,
    /// Stack depth override for res_vs_chan / attention
    #[arg(long)]
    depth: Option<usize>,
    /// Scenario/pair selection for grouping / res_vs_chan, e.g. 1,5
    #[arg(long, value_delimiter = ',')]
    scenarios: Option<Vec<usize>>,
    /// Run experiments even with a thread count the reference protocol forbids
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, value_name = "on|off")]
    policy_attn: Option<Toggle>,
}

#[derive(Args)]
struct GradcheckArgs {
    /// Block family: lowtention, mbconv, sda, or mlp [default: all four]
    #[arg(long)]
    block: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

enum CliError {
    /// Bad invocation: unknown ids, contradictory flags, malformed config.
    Usage(String),
    /// The command ran but the result is a failure (verify/gradcheck) or the
    /// computation broke down.
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownModel { .. }
            | Error::UnknownExperiment(_)
            | Error::Unsupported(_)
            | Error::InvalidSpec(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(format!("io error: {e}"))
    }
}

fn generated_help() -> String {
    let mut s = String::from("Registry model ids:\n");
    for id in zoo::model_ids() {
        s.push_str("  ");
        s.push_str(&id);
        s.push('\n');
    }
    s.push_str(&format!("\nExperiments: {}\n", EXPERIMENTS.join(", ")));
    s.push_str(&format!("Verify suites: {}\n", golden::SUITES.join(", ")));
    s.push_str(
        "\nConfig file: one `key = value` per line, keys named after the long flags\n\
         (res, batch, iters, warmup, threads, seed, format, out, tolerance,\n\
         policy-attn, suite, golden, experiment, device-label, channels,\n\
         resolutions, depth, scenarios, force, block). Flags override the file;\n\
         LOWFORMER_THREADS supplies the default thread count.",
    );
    s
}

const CONFIG_KEYS: [&str; 20] = [
    "res",
    "batch",
    "iters",
    "warmup",
    "threads",
    "seed",
    "format",
    "out",
    "tolerance",
    "policy-attn",
    "suite",
    "golden",
    "experiment",
    "device-label",
    "channels",
    "resolutions",
    "depth",
    "scenarios",
    "force",
    "block",
];

struct FileConfig {
    map: BTreeMap<String, String>,
}

impl FileConfig {
    fn empty() -> Self {
        FileConfig { map: BTreeMap::new() }
    }

    fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("config file {}: {e}", path.display())))?;
        let mut map = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!(
                    "config file {} line {}: expected key=value, got '{line}'",
                    path.display(),
                    lineno + 1
                ))
            })?;
            let key = key.trim().to_string();
            if !CONFIG_KEYS.contains(&key.as_str()) {
                return Err(CliError::Usage(format!(
                    "config file {} line {}: unknown key '{key}'",
                    path.display(),
                    lineno + 1
                )));
            }
            map.insert(key, value.trim().to_string());
        }
        Ok(FileConfig { map })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: Display,
    {
        match self.map.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse::<T>()
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config key '{key}': {e}"))),
        }
    }

    fn get_list(&self, key: &str) -> Result<Option<Vec<usize>>, CliError> {
        match self.map.get(key) {
            None => Ok(None),
            Some(v) => v
                .split(',')
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config key '{key}': {e}"))),
        }
    }

    fn get_enum<T: ValueEnum>(&self, key: &str) -> Result<Option<T>, CliError> {
        match self.map.get(key) {
            None => Ok(None),
            Some(v) => T::from_str(v, true)
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config key '{key}': {e}"))),
        }
    }
}

fn policy_for(flag: Option<Toggle>, cfg: &FileConfig) -> Result<CostPolicy, CliError> {
    let toggle = match flag {
        Some(t) => Some(t),
        None => cfg.get_enum::<Toggle>("policy-attn")?,
    };
    let mut policy = CostPolicy::default();
    if let Some(t) = toggle {
        policy.count_attention_matmuls = t == Toggle::On;
    }
    Ok(policy)
}

fn resolve_threads(flag: Option<usize>, cfg: &FileConfig) -> Result<usize, CliError> {
    if let Some(t) = flag {
        return Ok(t);
    }
    if let Some(t) = cfg.get::<usize>("threads")? {
        return Ok(t);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|e| CliError::Usage(format!("{THREADS_ENV}='{v}': {e}"))),
        Err(_) => Ok(1),
    }
}

/// Write `text` to `--out` if given, otherwise to stdout.
fn deliver(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text)?;
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_analyze(a: AnalyzeArgs, cfg: &FileConfig) -> Result<u8, CliError> {
    let res = match a.res {
        Some(r) => Some(r),
        None => cfg.get::<usize>("res")?,
    };
    let seed = match a.seed {
        Some(s) => s,
        None => cfg.get::<u64>("seed")?.unwrap_or(DEFAULT_SEED),
    };
    let policy = policy_for(a.policy_attn, cfg)?;
    let format = match a.format {
        Some(f) => Some(f),
        None => cfg.get_enum::<OutFormat>("format")?,
    };
    let model = zoo::build(&a.model, res, seed)?;
    let report = analyze(&model, policy)?;
    let text = match format {
        None => render_text(&report),
        Some(OutFormat::Csv) => report_to_csv(&report),
        Some(OutFormat::Json) => to_json_pretty(&report)?,
    };
    deliver(&a.out, &text)?;
    Ok(0)
}

fn cmd_verify(a: VerifyArgs, cfg: &FileConfig) -> Result<u8, CliError> {
    let suite = match a.suite {
        Some(s) => s,
        None => cfg.get::<String>("suite")?.unwrap_or_else(|| "all".to_string()),
    };
    let tolerance = match a.tolerance {
        Some(t) => t,
        None => cfg.get::<f64>("tolerance")?.unwrap_or(DEFAULT_TOLERANCE),
    };
    if !(0.0..=1.0).contains(&tolerance) {
        return Err(CliError::Usage(format!(
            "tolerance {tolerance} out of range, expected a fraction in [0, 1]"
        )));
    }
    let seed = match a.seed {
        Some(s) => s,
        None => cfg.get::<u64>("seed")?.unwrap_or(DEFAULT_SEED),
    };
    let policy = policy_for(a.policy_attn, cfg)?;
    let golden_path = match a.golden {
        Some(p) => Some(p),
        None => cfg.get::<PathBuf>("golden")?,
    };
    let table = match &golden_path {
        Some(p) => golden::from_path(p)?,
        None => golden::builtin(),
    };
    let lines = golden::verify_suite(&table, &suite, tolerance, policy, seed)?;
    let mut failed = 0usize;
    for line in &lines {
        println!("{}", line.render());
        if !line.pass {
            failed += 1;
        }
    }
    println!(
        "suite '{suite}': {} checks, {failed} failed (tolerance {:.1}%)",
        lines.len(),
        tolerance * 100.0
    );
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_bench(a: BenchArgs, cfg: &FileConfig) -> Result<u8, CliError> {
    let experiment = match (&a.model, &a.experiment) {
        (Some(m), Some(_)) => {
            return Err(CliError::Usage(format!(
                "both a model id ('{m}') and --experiment were given; pick one"
            )))
        }
        (Some(_), None) => None,
        (None, Some(e)) => Some(e.clone()),
        (None, None) => cfg.get::<String>("experiment")?,
    };
    if a.model.is_none() && experiment.is_none() {
        return Err(CliError::Usage(
            "bench needs a model id or --experiment <name>; see --help for both lists".to_string(),
        ));
    }

    let batch = match a.batch {
        Some(b) => b,
        None => cfg.get::<usize>("batch")?.unwrap_or(1),
    };
    let iters = match a.iters {
        Some(i) => i,
        None => cfg.get::<usize>("iters")?.unwrap_or(if batch == 1 {
            LATENCY_ITERATIONS
        } else {
            THROUGHPUT_ITERATIONS
        }),
    };
    let warmup = match a.warmup {
        Some(w) => w,
        None => cfg.get::<usize>("warmup")?.unwrap_or(DEFAULT_WARMUP),
    };
    let threads = resolve_threads(a.threads, cfg)?;
    let seed = match a.seed {
        Some(s) => s,
        None => cfg.get::<u64>("seed")?.unwrap_or(DEFAULT_SEED),
    };
    let res = match a.res {
        Some(r) => Some(r),
        None => cfg.get::<usize>("res")?,
    };
    let device_label = match a.device_label {
        Some(d) => d,
        None => cfg.get::<String>("device-label")?.unwrap_or_else(|| "host".to_string()),
    };
    let format = match a.format {
        Some(f) => Some(f),
        None => cfg.get_enum::<OutFormat>("format")?,
    };
    let force = a.force || cfg.get::<bool>("force")?.unwrap_or(false);
    let policy = policy_for(a.policy_attn, cfg)?;

    let mut protocol = BenchProtocol {
        batch,
        iterations: iters,
        warmup,
        statistic: "median".to_string(),
        threads,
        seed,
        resolution: res.unwrap_or(224),
    };
    let mut clock = RealClock::new();

    if let Some(name) = experiment {
        // The reference tables are produced with a single pinned thread;
        // rows recorded otherwise are not comparable to them.
        if threads != 1 && !force {
            return Err(CliError::Usage(format!(
                "experiment tables assume a single pinned thread, got threads={threads}; \
                 pass --force to record them anyway"
            )));
        }
        let overrides = GridOverrides {
            channels: match a.channels {
                Some(c) => Some(c),
                None => cfg.get_list("channels")?,
            },
            resolutions: match a.resolutions {
                Some(r) => Some(r),
                None => cfg.get_list("resolutions")?,
            },
            depth: match a.depth {
                Some(d) => Some(d),
                None => cfg.get::<usize>("depth")?,
            },
            scenarios: match a.scenarios {
                Some(s) => Some(s),
                None => cfg.get_list("scenarios")?,
            },
        };
        let table = run_experiment(&name, &overrides, &protocol, &mut clock, &device_label, policy)?;
        let text = match format {
            Some(OutFormat::Json) => to_json_pretty(&table)?,
            _ => experiment_to_csv(&table),
        };
        deliver(&a.out, &text)?;
        return Ok(0);
    }

    let id = a.model.expect("checked above");
    let model = zoo::build(&id, res, seed)?;
    protocol.resolution = model.input_res;
    let report = analyze(&model, policy)?;
    let result = measure(&model, &protocol, &mut clock, &device_label)?;
    let text = match format {
        None => format!(
            "{id}  res {}  batch {batch}  iters {iters} (+{warmup} warm-up)\n\
             median latency {:.3} ms  iqr {:.3} ms  throughput {:.1} img/s\n\
             {} MACs, {} params, checksum {:016x}{}\n",
            protocol.resolution,
            result.median_latency_ms,
            result.iqr_ms,
            result.throughput_ips,
            report.total_macs,
            report.total_params,
            result.output_checksum,
            if result.timer_warning { "\nwarning: clock resolution is coarse next to the median" } else { "" }
        ),
        Some(OutFormat::Csv) => result_to_csv(&result, report.total_macs, report.total_params),
        Some(OutFormat::Json) => to_json_pretty(&result)?,
    };
    deliver(&a.out, &text)?;
    Ok(0)
}

fn cmd_gradcheck(a: GradcheckArgs, cfg: &FileConfig) -> Result<u8, CliError> {
    let block = match a.block {
        Some(b) => Some(b),
        None => cfg.get::<String>("block")?,
    };
    let seed = match a.seed {
        Some(s) => s,
        None => cfg.get::<u64>("seed")?.unwrap_or(DEFAULT_SEED),
    };
    let blocks: Vec<CheckBlock> = match block {
        Some(name) => vec![CheckBlock::parse(&name).ok_or_else(|| {
            CliError::Usage(format!(
                "unknown block '{name}', expected one of lowtention, mbconv, sda, mlp"
            ))
        })?],
        None => ALL_BLOCKS.to_vec(),
    };
    let mut failed = 0usize;
    for b in blocks {
        let report = run_check(b, seed)?;
        for case in &report.cases {
            println!("  {}  {:<28} max scaled error {:.3e}", report.block, case.label, case.max_rel_err);
        }
        let ok = report.pass();
        println!(
            "{} {}: max scaled error {:.3e} (tolerance {TOLERANCE:.0e})",
            if ok { "PASS" } else { "FAIL" },
            report.block,
            report.max_rel_err
        );
        if !ok {
            failed += 1;
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let cfg = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::empty(),
    };
    match cli.command {
        Cmd::Analyze(a) => cmd_analyze(a, &cfg),
        Cmd::Verify(a) => cmd_verify(a, &cfg),
        Cmd::Bench(a) => cmd_bench(a, &cfg),
        Cmd::Gradcheck(a) => cmd_gradcheck(a, &cfg),
        Cmd::ListModels => {
            for id in zoo::model_ids() {
                println!("{id}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
