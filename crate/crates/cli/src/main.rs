//! Command-line runner for support-recovery experiments.
//!
//! Three subcommands: `run` executes an experiment (a preset or a fully
//! flag-specified configuration) and writes recovery curves as CSV,
//! `list-presets` shows the built-in configurations, and `gen-instance`
//! dumps one generated problem as text files for inspection.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand};

use srk_core::harness::{run_experiment_with, write_csv, AlgorithmChoice, Budget};
use srk_core::problems::{
    generate, write_corruptions_text, write_matrix_text, write_signals_text, write_support_text,
    CorruptionSpec, Ensemble, InstanceSpec, SupportPlacement,
};
use srk_core::{preset, preset_names, ExperimentConfig64, Rng, SamplingScheme};

#[derive(Parser)]
#[command(
    name = "srk",
    version,
    about = "Sparse randomized Kaczmarz support-recovery experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Run an experiment and write its recovery curves to CSV.
    Run(RunArgs),
    /// List the built-in experiment presets.
    ListPresets,
    /// Generate one problem instance and dump it as text files.
    GenInstance(GenInstanceArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Built-in configuration to start from (see list-presets).
    #[arg(long)]
    preset: Option<String>,

    /// Measurement rows.
    #[arg(long)]
    m: Option<usize>,
    /// Signal dimension.
    #[arg(long)]
    n: Option<usize>,
    /// Joint support size.
    #[arg(long)]
    k: Option<usize>,
    /// Support size assumed by the solvers.
    #[arg(long = "k-hat")]
    k_hat: Option<usize>,
    /// Number of signals.
    #[arg(long)]
    j: Option<usize>,
    /// Matrix ensemble: gaussian | uniform01.
    #[arg(long)]
    ensemble: Option<String>,
    /// Joint support placement: random | contiguous.
    #[arg(long)]
    support: Option<String>,

    /// Minimum corruptions per signal.
    #[arg(long = "corrupt-count-min")]
    corrupt_count_min: Option<usize>,
    /// Maximum corruptions per signal.
    #[arg(long = "corrupt-count-max")]
    corrupt_count_max: Option<usize>,
    /// Mean of the corruption values.
    #[arg(long = "corrupt-mean")]
    corrupt_mean: Option<f64>,
    /// Standard deviation of the corruption values.
    #[arg(long = "corrupt-std")]
    corrupt_std: Option<f64>,

    /// Fixed projection budget per signal.
    #[arg(long, conflicts_with = "online")]
    budget: Option<usize>,
    /// Online schedule `p,short_lo,short_hi,long_lo,long_hi`.
    #[arg(long)]
    online: Option<String>,

    /// Solver selection: mmv | cmmv | both.
    #[arg(long)]
    algorithm: Option<String>,
    /// Monte-Carlo trials.
    #[arg(long)]
    trials: Option<usize>,
    /// Base seed; trial i uses seed + i.
    #[arg(long)]
    seed: Option<u64>,
    /// Row sampling scheme: norm | uniform.
    #[arg(long)]
    sampling: Option<String>,
    /// Seed each signal's first estimate with the running joint estimate.
    #[arg(long = "carry-joint-estimate", value_name = "BOOL")]
    carry_joint_estimate: Option<bool>,

    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    /// Cap worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Also print per-curve precision (fraction of the estimate that is
    /// correct, |S_hat ∩ S| / k_hat).
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct GenInstanceArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Number of signals.
    #[arg(long)]
    j: usize,
    /// Matrix ensemble: gaussian | uniform01.
    #[arg(long, default_value = "gaussian")]
    ensemble: String,
    /// Joint support placement: random | contiguous.
    #[arg(long, default_value = "random")]
    support: String,
    #[arg(long = "corrupt-count-min", default_value_t = 0)]
    corrupt_count_min: usize,
    #[arg(long = "corrupt-count-max", default_value_t = 0)]
    corrupt_count_max: usize,
    #[arg(long = "corrupt-mean", default_value_t = 0.0)]
    corrupt_mean: f64,
    #[arg(long = "corrupt-std", default_value_t = 0.0)]
    corrupt_std: f64,
    #[arg(long)]
    seed: u64,
    /// Directory for the dumped files (created if missing).
    #[arg(long = "out-dir")]
    out_dir: PathBuf,
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 2,
        }
    }

    fn runtime(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::ListPresets => cmd_list_presets(),
        Command::GenInstance(args) => cmd_gen_instance(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn cmd_run(args: RunArgs) -> Result<(), CliError> {
    let config = build_config(&args)?;
    config
        .validate()
        .map_err(|e| CliError::validation(e.to_string()))?;
    if let Some(threads) = args.threads {
        if threads == 0 {
            return Err(CliError::validation("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::runtime(format!("thread pool setup failed: {e}")))?;
    }

    let done = AtomicUsize::new(0);
    let trials = config.trials;
    let curves = run_experiment_with(&config, |_| {
        let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
        eprintln!("trial {finished}/{trials} done");
    })
    .map_err(|e| CliError::runtime(e.to_string()))?;
    write_csv(&curves, &args.out).map_err(|e| CliError::runtime(e.to_string()))?;

    for curve in &curves {
        let last = curve.final_point().expect("curves are never empty");
        println!(
            "{}: final recovery {:.4} +- {:.4} over {} trials ({} projections)",
            curve.label, last.mean, last.std, curve.trials, last.projections
        );
        if args.verbose {
            // The estimate always has k_hat indices and the true support
            // k, so precision is recovery rescaled by k / k_hat.
            let precision = last.mean * config.k as f64 / config.k_hat as f64;
            println!(
                "{}: final precision {:.4} (k={} of k_hat={} slots)",
                curve.label, precision, config.k, config.k_hat
            );
        }
    }
    println!("wrote {}", args.out.display());
    Ok(())
}

fn build_config(args: &RunArgs) -> Result<ExperimentConfig64, CliError> {
    let mut config = match &args.preset {
        Some(name) => preset(name).map_err(|e| CliError::validation(e.to_string()))?,
        None => {
            let missing = [
                ("--m", args.m.is_none()),
                ("--n", args.n.is_none()),
                ("--k", args.k.is_none()),
                ("--k-hat", args.k_hat.is_none()),
                ("--j", args.j.is_none()),
                ("--ensemble", args.ensemble.is_none()),
                ("--algorithm", args.algorithm.is_none()),
                (
                    "--budget or --online",
                    args.budget.is_none() && args.online.is_none(),
                ),
            ]
            .iter()
            .filter(|&&(_, absent)| absent)
            .map(|&(flag, _)| flag)
            .collect::<Vec<_>>();
            if !missing.is_empty() {
                return Err(CliError::validation(format!(
                    "without --preset, the following must be given: {}",
                    missing.join(", ")
                )));
            }
            ExperimentConfig64 {
                m: 0,
                n: 0,
                k: 0,
                k_hat: 0,
                signals: 0,
                ensemble: Ensemble::Gaussian,
                placement: SupportPlacement::UniformRandom,
                corruption: CorruptionSpec::none(),
                algorithm: AlgorithmChoice::Both,
                budget: Budget::PerSignal(1),
                trials: 40,
                seed: 42,
                sampling: SamplingScheme::NormProportional,
                carry_joint_estimate: true,
            }
        }
    };

    if let Some(m) = args.m {
        config.m = m;
    }
    if let Some(n) = args.n {
        config.n = n;
    }
    if let Some(k) = args.k {
        config.k = k;
    }
    if let Some(k_hat) = args.k_hat {
        config.k_hat = k_hat;
    }
    if let Some(j) = args.j {
        config.signals = j;
    }
    if let Some(ensemble) = &args.ensemble {
        config.ensemble = parse_ensemble(ensemble)?;
    }
    if let Some(support) = &args.support {
        config.placement = parse_placement(support)?;
    }
    if let Some(v) = args.corrupt_count_min {
        config.corruption.count_min = v;
    }
    if let Some(v) = args.corrupt_count_max {
        config.corruption.count_max = v;
    }
    if let Some(v) = args.corrupt_mean {
        config.corruption.mean = v;
    }
    if let Some(v) = args.corrupt_std {
        config.corruption.std = v;
    }
    if let Some(tau) = args.budget {
        config.budget = Budget::PerSignal(tau);
    }
    if let Some(online) = &args.online {
        config.budget = parse_online(online)?;
    }
    if let Some(algorithm) = &args.algorithm {
        config.algorithm = parse_algorithm(algorithm)?;
    }
    if let Some(trials) = args.trials {
        config.trials = trials;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(sampling) = &args.sampling {
        config.sampling = parse_sampling(sampling)?;
    }
    if let Some(carry) = args.carry_joint_estimate {
        config.carry_joint_estimate = carry;
    }
    Ok(config)
}

fn parse_ensemble(s: &str) -> Result<Ensemble, CliError> {
    s.parse().map_err(|_| {
        CliError::validation(format!(
            "--ensemble: expected gaussian or uniform01, got `{s}`"
        ))
    })
}

fn parse_placement(s: &str) -> Result<SupportPlacement, CliError> {
    match s {
        "random" => Ok(SupportPlacement::UniformRandom),
        "contiguous" => Ok(SupportPlacement::ContiguousBlock),
        other => Err(CliError::validation(format!(
            "--support: expected random or contiguous, got `{other}`"
        ))),
    }
}

fn parse_algorithm(s: &str) -> Result<AlgorithmChoice, CliError> {
    match s {
        "mmv" => Ok(AlgorithmChoice::Mmv),
        "cmmv" => Ok(AlgorithmChoice::Cmmv),
        "both" => Ok(AlgorithmChoice::Both),
        other => Err(CliError::validation(format!(
            "--algorithm: expected mmv, cmmv, or both, got `{other}`"
        ))),
    }
}

fn parse_sampling(s: &str) -> Result<SamplingScheme, CliError> {
    match s {
        "norm" => Ok(SamplingScheme::NormProportional),
        "uniform" => Ok(SamplingScheme::Uniform),
        other => Err(CliError::validation(format!(
            "--sampling: expected norm or uniform, got `{other}`"
        ))),
    }
}

fn parse_online(s: &str) -> Result<Budget, CliError> {
    let bad = || {
        CliError::validation(format!(
            "--online: expected `p,short_lo,short_hi,long_lo,long_hi`, got `{s}`"
        ))
    };
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 5 {
        return Err(bad());
    }
    let p_stall: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let nums: Vec<usize> = parts[1..]
        .iter()
        .map(|p| p.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| bad())?;
    Ok(Budget::Online {
        p_stall,
        short: (nums[0], nums[1]),
        long: (nums[2], nums[3]),
    })
}

fn cmd_list_presets() -> Result<(), CliError> {
    for name in preset_names() {
        let config = preset(name).expect("listed presets resolve");
        println!("{name}: {}", config.describe());
    }
    Ok(())
}

fn cmd_gen_instance(args: GenInstanceArgs) -> Result<(), CliError> {
    let spec = InstanceSpec {
        m: args.m,
        n: args.n,
        k: args.k,
        signals: args.j,
        ensemble: parse_ensemble(&args.ensemble)?,
        placement: parse_placement(&args.support)?,
        corruption: CorruptionSpec::ranged(
            args.corrupt_count_min,
            args.corrupt_count_max,
            args.corrupt_mean,
            args.corrupt_std,
        ),
    };
    spec.validate()
        .map_err(|e| CliError::validation(e.to_string()))?;

    let mut rng = Rng::new(args.seed);
    let instance = generate(&spec, &mut rng).map_err(|e| CliError::runtime(e.to_string()))?;

    std::fs::create_dir_all(&args.out_dir)
        .map_err(|e| CliError::runtime(format!("cannot create {}: {e}", args.out_dir.display())))?;
    let write = |r: srk_core::Result<()>| r.map_err(|e| CliError::runtime(e.to_string()));
    write(write_matrix_text(
        &instance.matrix,
        &args.out_dir.join("matrix.txt"),
    ))?;
    write(write_signals_text(
        &instance.x_true,
        &args.out_dir.join("x.txt"),
    ))?;
    write(write_signals_text(&instance.y, &args.out_dir.join("y.txt")))?;
    write(write_support_text(
        &instance.joint_support,
        &args.out_dir.join("support.txt"),
    ))?;
    write(write_corruptions_text(
        &instance.corruption_sets,
        &args.out_dir.join("corruptions.txt"),
    ))?;
    println!("wrote instance files to {}", args.out_dir.display());
    Ok(())
}
