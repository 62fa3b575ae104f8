//! `firegrid` — experiment runner: single evolutionary runs, threshold
//! sweeps, scripted baselines, brute-force oracles and replays.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 configuration error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use firegrid::*;
use rand::RngCore;

#[derive(Parser)]
#[command(name = "firegrid", version, about = "Grid firefighter experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve an enclosing barrier strategy with the generational EA.
    Enclose(EncloseArgs),
    /// Delay the fire's contact with a highway row (hill climbing or a
    /// scripted baseline).
    Highway(HighwayArgs),
    /// Run the enclosure EA over a range of budgets and tabulate the
    /// threshold behaviour.
    Sweep(SweepArgs),
    /// Re-simulate a saved genome deterministically.
    Replay(ReplayArgs),
    /// Exhaustively search tiny instances as a ground-truth oracle.
    Oracle(OracleArgs),
    /// Run the scripted reference strategies and print their outcomes.
    Baselines(BaselinesArgs),
}

#[derive(Args, Clone)]
struct CommonArgs {
    /// Budget per step, as a fraction `a/b` or a decimal.
    #[arg(long)]
    c: Option<String>,
    /// RNG seed; drawn and printed when absent.
    #[arg(long)]
    seed: Option<u64>,
    /// Credits available before the first step.
    #[arg(long)]
    initial_budget: Option<i64>,
    /// Rotation used to repair illegal protection targets.
    #[arg(long, value_enum)]
    repair_orientation: Option<OrientationArg>,
    /// Output directory for logs, genomes and frames.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Frame rendering.
    #[arg(long, value_enum, default_value = "none")]
    render: RenderArg,
    /// Capture every k-th frame when rendering.
    #[arg(long, default_value_t = 1)]
    every: u32,
    /// Cap on concurrent evaluations (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// TOML file of `key = value` defaults; explicit flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct EncloseArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Simulation horizon per evaluation.
    #[arg(long)]
    t: Option<u32>,
    /// Population size.
    #[arg(long)]
    n: Option<usize>,
    /// Per-locus mutation probability.
    #[arg(long)]
    p: Option<f64>,
    /// Parent keep ratio in (0, 1].
    #[arg(long)]
    r: Option<f64>,
    /// Generation cap.
    #[arg(long)]
    generations: Option<u32>,
    /// Stop once an enclosure with at most this many burning cells exists.
    #[arg(long)]
    target: Option<u64>,
    /// Chain start cell, as `x,y`.
    #[arg(long)]
    start: Option<String>,
    /// Skip the EA and run the scripted strategy instead.
    #[arg(long, value_enum)]
    baseline: Option<EncloseBaseline>,
}

#[derive(Args)]
struct HighwayArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Distance from the fire origin to the highway row.
    #[arg(long)]
    d: Option<i32>,
    /// Simulation horizon.
    #[arg(long)]
    tmax: Option<u32>,
    /// Genome kind for the hill climber.
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Independent hill-climb restarts.
    #[arg(long)]
    restarts: Option<usize>,
    /// Mutation steps per restart.
    #[arg(long)]
    iterations: Option<u64>,
    /// Run a scripted baseline instead of the hill climber.
    #[arg(long, value_enum)]
    baseline: Option<HighwayBaseline>,
    /// Barrier row offset for the symmetric baseline.
    #[arg(long)]
    barrier_row: Option<i32>,
    /// Diagonal start offset n for the diagonal baseline.
    #[arg(long)]
    n_start: Option<i64>,
    /// Spend leftover margin on a second barrier at the highway.
    #[arg(long)]
    recursive_tail: bool,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// First budget value of the sweep
    #[arg(long)]
    c_from: Option<String>,
    /// Last budget value of the sweep (inclusive)
    #[arg(long)]
    c_to: Option<String>,
    /// Budget increment between runs [default: 1/20]
    #[arg(long)]
    c_step: Option<String>,
    /// Simulation horizon per evaluation.
    #[arg(long)]
    t: Option<u32>,
    /// Generation cap per budget value.
    #[arg(long)]
    generations: Option<u32>,
    /// Seeds tried per budget value (first enclosure wins).
    #[arg(long)]
    seeds: Option<u64>,
}

#[derive(Args)]
struct ReplayArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Genome file to replay.
    #[arg(long)]
    genome: PathBuf,
    /// Simulation horizon.
    #[arg(long)]
    tmax: Option<u32>,
    /// Highway distance; omit for the enclosure scenario.
    #[arg(long)]
    d: Option<i32>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Simulation horizon.
    #[arg(long)]
    tmax: Option<u32>,
    /// Genome length to enumerate.
    #[arg(long)]
    seq_len: Option<usize>,
    /// Start cells, as `x,y` separated by `;`.
    #[arg(long)]
    starts: Option<String>,
}

#[derive(Args)]
struct BaselinesArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Distance from the fire origin to the highway row.
    #[arg(long)]
    d: Option<i32>,
    /// Simulation horizon.
    #[arg(long)]
    tmax: Option<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderArg {
    None,
    Ascii,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrientationArg {
    Ccw,
    Cw,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Connected,
    Coordinate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EncloseBaseline {
    OptimalC2,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HighwayBaseline {
    Symmetric,
    Diagonal,
}

enum CliError {
    Config(String),
    Io(String),
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Io(inner) => CliError::Io(inner.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enclose(args) => cmd_enclose(args),
        Command::Highway(args) => cmd_highway(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Replay(args) => cmd_replay(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Baselines(args) => cmd_baselines(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(msg)) => {
            eprintln!("I/O error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Config(msg)) => {
            eprintln!("configuration error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// TOML defaults for flags the user left unset. Flat `key = value` table;
/// explicit CLI flags always win.
struct ConfigFile {
    table: toml::Table,
}

impl ConfigFile {
    fn load(path: Option<&Path>) -> Result<ConfigFile, CliError> {
        let table = match path {
            None => toml::Table::new(),
            Some(p) => {
                let text = fs::read_to_string(p)?;
                text.parse::<toml::Table>()
                    .map_err(|e| CliError::Config(format!("{}: {e}", p.display())))?
            }
        };
        Ok(ConfigFile { table })
    }

    fn fill_str(&self, slot: &mut Option<String>, key: &str) {
        if slot.is_none() {
            if let Some(v) = self.table.get(key) {
                *slot = Some(match v {
                    toml::Value::String(s) => s.clone(),
                    other => other.to_string(),
                });
            }
        }
    }

    fn fill_int<T: TryFrom<i64>>(&self, slot: &mut Option<T>, key: &str) {
        if slot.is_none() {
            if let Some(v) = self.table.get(key).and_then(|v| v.as_integer()) {
                *slot = T::try_from(v).ok();
            }
        }
    }

    fn fill_float(&self, slot: &mut Option<f64>, key: &str) {
        if slot.is_none() {
            if let Some(v) = self.table.get(key).and_then(|v| v.as_float()) {
                *slot = Some(v);
            }
        }
    }
}

fn parse_c(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::Config(format!("cannot parse budget `{s}`: {e}")))
}

fn parse_cell(s: &str) -> Result<Cell, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    let err = || CliError::Config(format!("cannot parse cell `{s}`, expected `x,y`"));
    if parts.len() != 2 {
        return Err(err());
    }
    let x = parts[0].trim().parse().map_err(|_| err())?;
    let y = parts[1].trim().parse().map_err(|_| err())?;
    Ok(Cell::new(x, y))
}

fn required<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Config(format!("missing required value `--{flag}`")))
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    match seed {
        Some(s) => s,
        None => {
            let s = rand::thread_rng().next_u64();
            println!("seed={s}");
            s
        }
    }
}

fn init_jobs(jobs: Option<usize>) -> Result<(), CliError> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(e.to_string()))?;
    }
    Ok(())
}

fn orientation(arg: Option<OrientationArg>) -> RepairOrientation {
    match arg {
        Some(OrientationArg::Cw) => RepairOrientation::FrontCw,
        _ => RepairOrientation::FrontCcw,
    }
}

fn render_kind(arg: RenderArg) -> RenderKind {
    match arg {
        RenderArg::None => RenderKind::None,
        RenderArg::Ascii => RenderKind::Ascii,
        RenderArg::Svg => RenderKind::Svg,
    }
}

fn ensure_out(dir: &Path) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    Ok(())
}

/// Re-simulate a genome with frames on and export everything under `dir`.
fn export_run(
    dir: &Path,
    genome: &Genome,
    config: &SimConfig,
    every: u32,
    render: RenderArg,
    orient: RepairOrientation,
) -> Result<Outcome, CliError> {
    ensure_out(dir)?;
    save_genome(&dir.join("best.genome"), genome)?;
    let mut config = config.clone();
    if render != RenderArg::None {
        config.capture_every = every.max(1);
    }
    let mut decoder = genome.decoder(config.fire_origin, orient);
    let outcome = simulate(decoder.as_mut(), &config)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let highway_row = match config.scenario {
        Scenario::Highway { row } => Some(row),
        Scenario::Enclosure => None,
    };
    write_frames(&dir.join("frames"), &outcome.frames, highway_row, render_kind(render))?;
    Ok(outcome)
}

fn cmd_enclose(mut args: EncloseArgs) -> Result<(), CliError> {
    let cfg = ConfigFile::load(args.common.config.as_deref())?;
    cfg.fill_str(&mut args.common.c, "c");
    cfg.fill_int(&mut args.common.seed, "seed");
    cfg.fill_int(&mut args.common.initial_budget, "initial_budget");
    cfg.fill_int(&mut args.t, "t");
    cfg.fill_int(&mut args.n, "n");
    cfg.fill_float(&mut args.p, "p");
    cfg.fill_float(&mut args.r, "r");
    cfg.fill_int(&mut args.generations, "generations");
    cfg.fill_int(&mut args.target, "target");
    cfg.fill_str(&mut args.start, "start");
    init_jobs(args.common.jobs)?;

    let c = parse_c(&required(args.common.c.clone(), "c")?)?;
    if c <= Rational::from_integer(1) {
        return Err(CliError::Config(format!(
            "budget c = {} cannot enclose a fire; budgets of at most one cell per step are known to fail",
            format_rational(c)
        )));
    }
    let t = args.t.unwrap_or(60);

    if let Some(EncloseBaseline::OptimalC2) = args.baseline {
        let config = SimConfig::enclosure(c, t);
        let mut decoder = ScriptedStrategy::OptimalC2
            .decoder(&config)
            .map_err(|e| CliError::Config(e.to_string()))?;
        let outcome = simulate(decoder.as_mut(), &config)
            .map_err(|e| CliError::Config(e.to_string()))?;
        print_enclose_summary(&outcome, 0);
        if let Some(dir) = &args.common.out {
            let genome = Genome::Connected(optimal_c2_genome());
            export_run(dir, &genome, &config, args.common.every, args.common.render,
                orientation(args.common.repair_orientation))?;
        }
        return Ok(());
    }

    let seed = resolve_seed(args.common.seed);
    let mut params = EAParams::new(c, t, seed);
    if let Some(n) = args.n {
        params.n = n;
    }
    if let Some(p) = args.p {
        params.p = p;
    }
    if let Some(r) = args.r {
        params.r = r;
    }
    if let Some(b) = args.common.initial_budget {
        params.initial_budget = b;
    }
    if let Some(g) = args.generations {
        params.max_generations = g;
    }
    params.target_fitness = args.target;
    if let Some(s) = &args.start {
        params.start = parse_cell(s)?;
    }
    params.repair_orientation = orientation(args.common.repair_orientation);
    params.validate().map_err(CliError::Config)?;

    let res = run_ea(&params);
    let (genome, fitness) = match &res.best_enclosed {
        Some((g, f)) => (g.clone(), *f),
        None => (res.best.clone(), res.best_fitness),
    };
    println!(
        "enclosed={} time={} burned={} generations={}",
        fitness.enclosed,
        fitness.enclosure_time.map_or_else(|| "-".into(), |t| t.to_string()),
        fitness.burning_count,
        res.log.records.len()
    );

    if let Some(dir) = &args.common.out {
        ensure_out(dir)?;
        write_run_log(dir, &params, &res.log)?;
        write_summary_csv(&dir.join("summary.csv"), &res.log.records)?;
        let mut sim = SimConfig::enclosure(c, t);
        sim.initial_budget = params.initial_budget;
        export_run(dir, &Genome::Connected(genome), &sim, args.common.every,
            args.common.render, params.repair_orientation)?;
    }
    Ok(())
}

fn print_enclose_summary(outcome: &Outcome, generations: usize) {
    println!(
        "enclosed={} time={} burned={} generations={}",
        outcome.reason == StopReason::Enclosed,
        outcome.end_time,
        outcome.burning_count,
        generations
    );
}

/// run.jsonl: one params/seed echo line, then one line per generation.
fn write_run_log(dir: &Path, params: &EAParams, log: &RunLog) -> Result<(), CliError> {
    let mut lines = Vec::with_capacity(log.records.len() + 1);
    lines.push(serde_json::json!({
        "params": params,
        "seed": log.seed,
        "wall_clock_ms": log.wall_clock_ms,
        "terminal": log.terminal,
    }));
    for rec in &log.records {
        lines.push(serde_json::to_value(rec).expect("record serialization"));
    }
    write_jsonl(&dir.join("run.jsonl"), &lines)?;
    Ok(())
}

fn cmd_highway(mut args: HighwayArgs) -> Result<(), CliError> {
    let cfg = ConfigFile::load(args.common.config.as_deref())?;
    cfg.fill_str(&mut args.common.c, "c");
    cfg.fill_int(&mut args.common.seed, "seed");
    cfg.fill_int(&mut args.common.initial_budget, "initial_budget");
    cfg.fill_int(&mut args.d, "d");
    cfg.fill_int(&mut args.tmax, "tmax");
    cfg.fill_int(&mut args.restarts, "restarts");
    cfg.fill_int(&mut args.iterations, "iterations");
    init_jobs(args.common.jobs)?;

    let c = parse_c(&required(args.common.c.clone(), "c")?)?;
    let d = required(args.d, "d")?;
    let t_max = args.tmax.unwrap_or(200);
    let mut sim = SimConfig::highway(c, d, t_max);
    if let Some(b) = args.common.initial_budget {
        sim.initial_budget = b;
    }
    sim.validate().map_err(|e| CliError::Config(e.to_string()))?;

    if let Some(baseline) = args.baseline {
        let strat = match baseline {
            HighwayBaseline::Symmetric => ScriptedStrategy::SymmetricAlternating {
                barrier_row: args.barrier_row.unwrap_or(1),
            },
            HighwayBaseline::Diagonal => {
                let n = match args.n_start {
                    Some(n) => n,
                    None => min_diagonal_start(c).map_err(|e| CliError::Config(e.to_string()))?,
                };
                ScriptedStrategy::AsymmetricDiagonal { n, recursive_tail: args.recursive_tail }
            }
        };
        let mut decoder = strat.decoder(&sim).map_err(|e| CliError::Config(e.to_string()))?;
        let outcome = simulate(decoder.as_mut(), &sim)
            .map_err(|e| CliError::Config(e.to_string()))?;
        let profile = highway_fitness(&outcome, t_max);
        println!("{}", format_highway(&profile));
        if let Some(dir) = &args.common.out {
            let genome = strat.to_genome(&sim).map_err(|e| CliError::Config(e.to_string()))?;
            export_run(dir, &genome, &sim, args.common.every, args.common.render,
                orientation(args.common.repair_orientation))?;
        }
        return Ok(());
    }

    let seed = resolve_seed(args.common.seed);
    let kind = match args.kind.unwrap_or(KindArg::Coordinate) {
        KindArg::Connected => GenomeKind::Connected,
        KindArg::Coordinate => GenomeKind::Coordinate,
    };
    let mut params = HillClimbParams::new(sim.clone(), kind, seed);
    if let Some(r) = args.restarts {
        params.restarts = r;
    }
    if let Some(i) = args.iterations {
        params.max_iterations = i;
    }
    params.repair_orientation = orientation(args.common.repair_orientation);
    let res = parallel_restarts(&params);
    println!("{}", res.fitness.render());
    if let Some(dir) = &args.common.out {
        ensure_out(dir)?;
        let accepted: Vec<_> = res.logs.iter().flat_map(|l| l.acceptances.iter()).collect();
        write_jsonl(&dir.join("run.jsonl"), &accepted)?;
        export_run(dir, &res.best, &sim, args.common.every, args.common.render,
            params.repair_orientation)?;
    }
    Ok(())
}

fn cmd_sweep(mut args: SweepArgs) -> Result<(), CliError> {
    let cfg = ConfigFile::load(args.common.config.as_deref())?;
    cfg.fill_str(&mut args.c_from, "c_from");
    cfg.fill_str(&mut args.c_to, "c_to");
    cfg.fill_str(&mut args.c_step, "c_step");
    cfg.fill_int(&mut args.t, "t");
    cfg.fill_int(&mut args.generations, "generations");
    cfg.fill_int(&mut args.seeds, "seeds");
    cfg.fill_int(&mut args.common.seed, "seed");
    cfg.fill_int(&mut args.common.initial_budget, "initial_budget");
    init_jobs(args.common.jobs)?;

    let from = parse_c(&required(args.c_from.clone(), "c-from")?)?;
    let to = parse_c(&required(args.c_to.clone(), "c-to")?)?;
    let step = match &args.c_step {
        Some(s) => parse_c(s)?,
        None => Rational::new(1, 20),
    };
    if from > to {
        return Err(CliError::Config("--c-from must not exceed --c-to".into()));
    }
    if step <= Rational::from_integer(0) {
        return Err(CliError::Config("--c-step must be positive".into()));
    }
    let t = args.t.unwrap_or(80);
    let generations = args.generations.unwrap_or(10_000);
    let seeds = args.seeds.unwrap_or(2);
    let base_seed = resolve_seed(args.common.seed);

    let mut csv = String::from("c,enclosed,enclose_time,burned,generations\n");
    let mut c = from;
    while c <= to {
        let mut best: Option<EnclosureFitness> = None;
        let mut gens_used = 0usize;
        for s in 0..seeds {
            let mut params = EAParams::new(c, t, base_seed.wrapping_add(s));
            params.max_generations = generations;
            params.target_fitness = Some(u64::MAX);
            if let Some(b) = args.common.initial_budget {
                params.initial_budget = b;
            }
            let res = run_ea(&params);
            gens_used += res.log.records.len();
            if let Some((_, f)) = res.best_enclosed {
                best = match best {
                    Some(prev) if prev <= f => Some(prev),
                    _ => Some(f),
                };
                break;
            }
        }
        let (enclosed, time, burned) = match best {
            Some(f) => (
                true,
                f.enclosure_time.map_or_else(|| "-".into(), |t| t.to_string()),
                f.burning_count.to_string(),
            ),
            None => (false, "-".into(), "-".into()),
        };
        let row = format!("{},{},{},{},{}", format_rational(c), enclosed, time, burned, gens_used);
        println!("{row}");
        writeln!(csv, "{row}").unwrap();
        c += step;
    }
    if let Some(dir) = &args.common.out {
        ensure_out(dir)?;
        fs::write(dir.join("sweep.csv"), csv)?;
    }
    Ok(())
}

fn cmd_replay(mut args: ReplayArgs) -> Result<(), CliError> {
    let cfg = ConfigFile::load(args.common.config.as_deref())?;
    cfg.fill_str(&mut args.common.c, "c");
    cfg.fill_int(&mut args.tmax, "tmax");
    cfg.fill_int(&mut args.d, "d");
    cfg.fill_int(&mut args.common.initial_budget, "initial_budget");

    let c = parse_c(&required(args.common.c.clone(), "c")?)?;
    let t_max = required(args.tmax, "tmax")?;
    let genome = load_genome(&args.genome)?;
    let mut sim = match args.d {
        Some(d) => SimConfig::highway(c, d, t_max),
        None => SimConfig::enclosure(c, t_max),
    };
    if let Some(b) = args.common.initial_budget {
        sim.initial_budget = b;
    }
    sim.validate().map_err(|e| CliError::Config(e.to_string()))?;

    let orient = orientation(args.common.repair_orientation);
    let outcome = match &args.common.out {
        Some(dir) => export_run(dir, &genome, &sim, args.common.every, args.common.render, orient)?,
        None => {
            let mut decoder = genome.decoder(sim.fire_origin, orient);
            simulate(decoder.as_mut(), &sim).map_err(|e| CliError::Config(e.to_string()))?
        }
    };
    match sim.scenario {
        Scenario::Enclosure => print_enclose_summary(&outcome, 0),
        Scenario::Highway { .. } => {
            println!("{}", format_highway(&highway_fitness(&outcome, t_max)))
        }
    }
    Ok(())
}

fn cmd_oracle(mut args: OracleArgs) -> Result<(), CliError> {
    let cfg = ConfigFile::load(args.common.config.as_deref())?;
    cfg.fill_str(&mut args.common.c, "c");
    cfg.fill_int(&mut args.tmax, "tmax");
    cfg.fill_int(&mut args.seq_len, "seq_len");
    cfg.fill_str(&mut args.starts, "starts");
    init_jobs(args.common.jobs)?;

    let c = parse_c(&required(args.common.c.clone(), "c")?)?;
    let t_max = args.tmax.unwrap_or(3);
    let seq_len = args.seq_len.unwrap_or(6);
    let starts: Vec<Cell> = match &args.starts {
        None => vec![Cell::new(0, 1)],
        Some(s) => s.split(';').map(parse_cell).collect::<Result<_, _>>()?,
    };
    let result = brute_force_best(c, t_max, seq_len, &starts)
        .map_err(|e| CliError::Config(e.to_string()))?;
    println!(
        "enclosed={} time={} burned={} protected={}",
        result.fitness.enclosed,
        result.fitness.enclosure_time.map_or_else(|| "-".into(), |t| t.to_string()),
        result.fitness.burning_count,
        result.fitness.protected_count
    );
    if let Some(dir) = &args.common.out {
        ensure_out(dir)?;
        save_genome(&dir.join("best.genome"), &Genome::Connected(result.genome))?;
    }
    Ok(())
}

fn cmd_baselines(mut args: BaselinesArgs) -> Result<(), CliError> {
    let cfg = ConfigFile::load(args.common.config.as_deref())?;
    cfg.fill_str(&mut args.common.c, "c");
    cfg.fill_int(&mut args.d, "d");
    cfg.fill_int(&mut args.tmax, "tmax");

    let c = parse_c(&required(args.common.c.clone(), "c")?)?;
    let d = args.d.unwrap_or(20);
    let t_max = args.tmax.unwrap_or(500);
    let sim = SimConfig::highway(c, d, t_max);
    sim.validate().map_err(|e| CliError::Config(e.to_string()))?;

    let strategies: Vec<(String, ScriptedStrategy)> = vec![
        ("symmetric".into(), ScriptedStrategy::SymmetricAlternating { barrier_row: 1 }),
        (
            "diagonal".into(),
            ScriptedStrategy::AsymmetricDiagonal {
                n: min_diagonal_start(c).map_err(|e| CliError::Config(e.to_string()))?,
                recursive_tail: false,
            },
        ),
        (
            "diagonal+tail".into(),
            ScriptedStrategy::AsymmetricDiagonal {
                n: min_diagonal_start(c).map_err(|e| CliError::Config(e.to_string()))?,
                recursive_tail: true,
            },
        ),
    ];
    for (name, strat) in strategies {
        match strat.decoder(&sim) {
            Ok(mut decoder) => {
                let outcome = simulate(decoder.as_mut(), &sim)
                    .map_err(|e| CliError::Config(e.to_string()))?;
                let profile = highway_fitness(&outcome, t_max);
                println!("{name}: {}", format_highway(&profile));
            }
            Err(e) => println!("{name}: unavailable ({e})"),
        }
    }
    Ok(())
}
