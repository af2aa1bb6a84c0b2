//! `heavylight` command-line tool.
//!
//! Exit codes: 0 success, 2 usage or config error, 3 infeasible instance,
//! 4 I/O error.

mod config;

use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use heavylight::closed_form::{c_alpha, expected_light_step, g_heavy, g_light};
use heavylight::counting::{alpha_split, estimate_paths_sampling_in_residual, DEFAULT_COUNT_BUDGET};
use heavylight::experiments::{emit_results, run_campaign, run_hamilton_campaign};
use heavylight::{
    binary_tree, bound_report, count_hamilton_cycles, count_paths_budgeted, cycle_graph, estimate_paths_sampling, path_graph,
    preprocess_g_prime, random_cubic, read_edge_list, run_greedy, run_greedy_hamilton, sample_weights, write_edge_list, CountOracle,
    Graph, GreedyMode, RngSeed, WeightAssignment,
};

use config::{parse_config, Campaign};

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Infeasible(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<heavylight::Error> for CliError {
    fn from(e: heavylight::Error) -> Self {
        use heavylight::Error as E;
        match e {
            E::NoSuchPath { .. } | E::NoHamiltonCycle | E::OracleTooLarge(_) => CliError::Infeasible(e.to_string()),
            E::BudgetExceeded(_) => CliError::Infeasible(format!("{e}; rerun with --estimate WALKS for a sampled count")),
            E::Io { .. } => CliError::Io(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T = ()> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "heavylight", version, about = "Heavy and light greedy paths in subcubic graphs with exp(1) edge weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Tree,
    Path,
    Cycle,
    Cubic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Heavy,
    Light,
}

impl From<ModeArg> for GreedyMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Heavy => GreedyMode::Heavy,
            ModeArg::Light => GreedyMode::Light,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph as an edge list (stdout unless --out is given).
    Gen {
        kind: GenKind,
        /// Tree depth.
        #[arg(long)]
        depth: Option<u32>,
        /// Number of vertices (path, cycle, cubic).
        #[arg(long)]
        n: Option<usize>,
        /// Seed for random cubic graphs.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count paths of k vertices from a start vertex and show the alpha split.
    Count {
        file: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        k: usize,
        /// Estimate by sampling this many random walks instead of counting.
        #[arg(long, value_name = "WALKS")]
        estimate: Option<usize>,
        #[arg(long, default_value_t = 10)]
        groups: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Search-node limit for exact counting.
        #[arg(long, default_value_t = DEFAULT_COUNT_BUDGET)]
        budget: u64,
    },
    /// Run the heavy or light greedy once.
    Run {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        from: usize,
        /// Path length in vertices; ignored with --hamilton.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Weight seed, used when the file has no weights.
        #[arg(long)]
        seed: Option<u64>,
        /// Weight stream; trial i of a campaign uses stream i.
        #[arg(long, default_value_t = 0)]
        stream: u64,
        /// Build a Hamilton cycle instead (cubic graphs only).
        #[arg(long)]
        hamilton: bool,
        /// Write the step trace as JSON.
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
        /// Write the step trace as a text log.
        #[arg(long, value_name = "FILE")]
        trace_log: Option<PathBuf>,
        /// Write the graph with the weights used.
        #[arg(long, value_name = "FILE")]
        weights_out: Option<PathBuf>,
    },
    /// Run a Monte Carlo campaign from a config file.
    Experiment {
        config: PathBuf,
        /// Output directory; overrides `out` in the config.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the one-step closed forms on a grid of [0, 1/2].
    Analyze {
        #[arg(long, default_value_t = 11)]
        grid: usize,
    },
}

fn read_file(path: &FsPath) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &FsPath, contents: &str) -> CliResult {
    fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_graph(path: &FsPath) -> CliResult<(Graph, Option<WeightAssignment>)> {
    let text = read_file(path)?;
    read_edge_list(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Integers without a fractional part, everything else to six places.
fn num(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{x:.0}")
    } else {
        format!("{x:.6}")
    }
}

fn gen(kind: GenKind, depth: Option<u32>, n: Option<usize>, seed: u64, out: Option<PathBuf>) -> CliResult {
    let need_n = || n.ok_or_else(|| CliError::Usage("--n is required for this kind".into()));
    let (name, g) = match kind {
        GenKind::Tree => {
            let depth = depth.ok_or_else(|| CliError::Usage("--depth is required for trees".into()))?;
            if depth > 24 {
                return Err(CliError::Usage(format!("depth {depth} is too large")));
            }
            (format!("tree depth={depth}"), binary_tree(depth).0)
        }
        GenKind::Path => {
            let n = need_n()?;
            if n == 0 {
                return Err(CliError::Usage("path needs n >= 1".into()));
            }
            (format!("path n={n}"), path_graph(n).0)
        }
        GenKind::Cycle => {
            let n = need_n()?;
            (format!("cycle n={n}"), cycle_graph(n)?)
        }
        GenKind::Cubic => {
            let n = need_n()?;
            (format!("cubic n={n} seed={seed}"), random_cubic(n, RngSeed::new(seed))?)
        }
    };
    let text = write_edge_list(&g, None);
    let target = out.as_ref().map_or("-".into(), |p| p.display().to_string());
    let summary = format!(
        "# gen {name} out={target}\nn = {}, m = {}, max degree = {}",
        g.n(),
        g.edge_count(),
        g.max_degree()
    );
    match out {
        Some(path) => {
            write_file(&path, &text)?;
            println!("{summary}");
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(())
}

fn count(file: &FsPath, from: usize, k: usize, estimate: Option<usize>, groups: usize, seed: u64, budget: u64) -> CliResult {
    let (g, _) = load_graph(file)?;
    g.check_vertex(from)?;
    if k == 0 || k > g.n() {
        return Err(CliError::Usage(format!("k must be between 1 and {}, got {k}", g.n())));
    }
    match estimate {
        None => {
            println!("# count file={} from={from} k={k} method=exact budget={budget}", file.display());
            let f = count_paths_budgeted(&g, from, k, budget)?;
            let mut line = format!("f = {f}, log2 = {}", if f.is_zero() { "-inf".into() } else { num(f.log2()) });
            if k >= 2 && !f.is_zero() {
                let split = alpha_split(&g, from, k)?;
                let alphas: Vec<String> = split.entries.iter().map(|e| e.alpha.to_string()).collect();
                line += &format!(", alpha = [{}]", alphas.join(", "));
            }
            println!("{line}");
        }
        Some(walks) => {
            println!("# count file={} from={from} k={k} method=sampling walks={walks} groups={groups} seed={seed}", file.display());
            let est = estimate_paths_sampling(&g, from, k, walks, groups, RngSeed::new(seed))?;
            println!(
                "f ~ {:.6e}, log2 ~ {}, mean = {:.6e}, SE = {:.3e}, group means in [{:.6e}, {:.6e}]",
                est.estimate,
                if est.estimate > 0.0 { num(est.estimate.log2()) } else { "-inf".into() },
                est.mean,
                est.std_error,
                est.group_min,
                est.group_max
            );
            if k >= 2 {
                g.check_subcubic()?;
                let parts: Vec<(usize, f64)> = g
                    .neighbors(from)
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let s = RngSeed::new(seed).with_stream(i as u64 + 1);
                        estimate_paths_sampling_in_residual(&g, &[from], v, k - 1, walks, groups, s).map(|e| (v, e.mean))
                    })
                    .collect::<Result<_, _>>()?;
                let total: f64 = parts.iter().map(|p| p.1).sum();
                let alphas: Vec<String> = parts
                    .iter()
                    .map(|&(v, c)| format!("{v}: {:.4}", if total > 0.0 { c / total } else { 0.0 }))
                    .collect();
                println!("alpha ~ [{}]", alphas.join(", "));
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run(
    file: &FsPath,
    from: usize,
    k: Option<usize>,
    mode: GreedyMode,
    seed: Option<u64>,
    stream: u64,
    hamilton: bool,
    trace_json: Option<PathBuf>,
    trace_log: Option<PathBuf>,
    weights_out: Option<PathBuf>,
) -> CliResult {
    let (g, file_weights) = load_graph(file)?;
    g.check_subcubic()?;
    let (w, source) = match file_weights {
        Some(w) => {
            if seed.is_some() {
                eprintln!("warning: {} carries weights; ignoring --seed", file.display());
            }
            (w, "file".to_string())
        }
        None => {
            let seed = seed.unwrap_or(0);
            (sample_weights(&g, RngSeed::new(seed).with_stream(stream)), format!("seed={seed} stream={stream}"))
        }
    };

    let trace = if hamilton {
        println!("# run file={} from={from} mode={mode} hamilton=true weights={source}", file.display());
        let (path, trace) = run_greedy_hamilton(&g, &w, from, mode)?;
        let h = count_hamilton_cycles(&g)?;
        let cycle: Vec<String> = path.vertices().iter().chain([&from]).map(|v| v.to_string()).collect();
        println!("cycle: {}", cycle.join(" "));
        println!("cycle weight: {}", trace.cycle_weight.expect("Hamilton trace"));
        println!("path weight: {}", trace.weight);
        let log2h3 = h.log2() - 3f64.log2();
        let n = g.n() as f64;
        match mode {
            GreedyMode::Heavy => println!("bound: mean path weight >= {} (h = {h})", num(n + log2h3 / 2.0 - 1.0)),
            GreedyMode::Light => println!("bound: mean path weight <= {} (h = {h})", num(n - log2h3 / 2.0)),
        }
        println!("choice steps: {}", trace.choice_steps);
        trace
    } else {
        let k = k.ok_or_else(|| CliError::Usage("--k is required unless --hamilton is given".into()))?;
        println!("# run file={} from={from} k={k} mode={mode} hamilton=false weights={source}", file.display());
        let (path, trace) = run_greedy(&g, &w, from, k, mode, &CountOracle::Exact)?;
        println!("path: {path}");
        println!("weight: {}", trace.weight);
        let bound = preprocess_g_prime(&g, from, k)
            .and_then(|gp| count_paths_budgeted(&gp, from, k, DEFAULT_COUNT_BUDGET))
            .and_then(|f| bound_report(k, f.log2()));
        match (bound, mode) {
            (Ok(b), GreedyMode::Heavy) => println!("bound: mean weight >= {} (log2 f(G') = {})", num(b.heavy_bound), num(b.log2f)),
            (Ok(b), GreedyMode::Light) => println!("bound: mean weight <= {} (log2 f(G') = {})", num(b.light_bound), num(b.log2f)),
            (Err(e), _) => println!("bound: unavailable ({e})"),
        }
        println!("choice steps: {}", trace.choice_steps);
        trace
    };

    if let Some(p) = trace_json {
        write_file(&p, &(trace.to_json() + "\n"))?;
    }
    if let Some(p) = trace_log {
        write_file(&p, &trace.to_text_log())?;
    }
    if let Some(p) = weights_out {
        write_file(&p, &write_edge_list(&g, Some(&w)))?;
    }
    Ok(())
}

fn experiment(config_path: &FsPath, out: Option<PathBuf>) -> CliResult {
    let text = read_file(config_path)?;
    let stem = config_path.file_stem().map_or("experiment".into(), |s| s.to_string_lossy().into_owned());
    let cfg = parse_config(&text, &stem).map_err(|errs| {
        CliError::Usage(format!("{}: invalid config\n  {}", config_path.display(), errs.join("\n  ")))
    })?;
    let out = out.unwrap_or(cfg.out);
    println!("# experiment {}", config_path.display());
    for (key, value) in &cfg.resolved {
        if key != "out" {
            println!("# {key} = {value}");
        }
    }
    println!("# out = {}", out.display());

    let (verdict, files) = match &cfg.campaign {
        Campaign::Paths(c) => {
            let r = run_campaign(c)?;
            println!("n = {}, m = {}, log2 f(G') = {} ({})", r.n, r.edges, num(r.log2f), r.count_method);
            let files = emit_results(&out, &c.name, c.instance.seed(), c.mode, &r.trials, &r)?;
            (r.verdict, files)
        }
        Campaign::Hamilton {
            name,
            n,
            instance_seed,
            mode,
            trials,
            weight_seed,
        } => {
            let r = run_hamilton_campaign(*n, *instance_seed, *mode, *trials, *weight_seed)?;
            println!(
                "n = {n}, h = {}, graph attempts = {}, path rate = {:.4}, cycle rate = {:.4}",
                r.hamilton_cycles, r.attempts, r.path_rate, r.cycle_rate
            );
            let files = emit_results(&out, name, *instance_seed, *mode, &r.trials, &r)?;
            (r.verdict, files)
        }
    };
    let s = &verdict.stats;
    println!(
        "mean = {:.4}, SE = {:.4}, bound = {} ({} mean {} bound)",
        s.mean,
        s.std_error,
        num(verdict.bound),
        verdict.mode,
        if verdict.mode == GreedyMode::Heavy { ">=" } else { "<=" }
    );
    println!("{}", verdict.summary_line());
    println!("wrote {} and {}", files.csv.display(), files.json.display());
    Ok(())
}

fn analyze(grid: usize) -> CliResult {
    if grid < 2 {
        return Err(CliError::Usage(format!("--grid needs N >= 2, got {grid}")));
    }
    println!("# analyze grid={grid}");
    let rows: Vec<(f64, f64, f64, f64, f64)> = (0..grid)
        .map(|i| {
            let a = 0.5 * i as f64 / (grid - 1) as f64;
            let c = if a == 0.0 { f64::INFINITY } else { c_alpha(a)? };
            Ok((a, c, g_heavy(a)?, g_light(a)?, expected_light_step(a)?))
        })
        .collect::<Result<_, heavylight::Error>>()?;
    let min_g = rows.iter().map(|r| r.2).fold(f64::INFINITY, f64::min);
    let max_gt = rows.iter().map(|r| r.3).fold(f64::NEG_INFINITY, f64::max);
    println!("{:>8}  {:>10}  {:>10}  {:>10}  {:>10}", "alpha", "c", "g", "g~", "light step");
    for (a, c, g, gt, light) in rows {
        let mut flags = Vec::new();
        if g == min_g {
            flags.push("min g");
        }
        if gt == max_gt {
            flags.push("max g~");
        }
        let flag = if flags.is_empty() { String::new() } else { format!("  <- {}", flags.join(", ")) };
        println!("{a:>8.4}  {c:>10.6}  {g:>10.6}  {gt:>10.6}  {light:>10.6}{flag}");
    }
    Ok(())
}

fn dispatch(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen { kind, depth, n, seed, out } => gen(kind, depth, n, seed, out),
        Command::Count {
            file,
            from,
            k,
            estimate,
            groups,
            seed,
            budget,
        } => count(&file, from, k, estimate, groups, seed, budget),
        Command::Run {
            file,
            from,
            k,
            mode,
            seed,
            stream,
            hamilton,
            trace,
            trace_log,
            weights_out,
        } => run(&file, from, k, mode.into(), seed, stream, hamilton, trace, trace_log, weights_out),
        Command::Experiment { config, out } => experiment(&config, out),
        Command::Analyze { grid } => analyze(grid),
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
