use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;
use udg::oracle::gen::{generate, side_for_degree, GenSpec, Shape};
use udg::oracle::{bfs_oracle, build_explicit, dijkstra_oracle};
use udg::unweighted::unweighted_sssp_with_stats;
use udg::weighted::{weighted_sssp_traced, weighted_sssp_with_stats, TraceEvent};
use udg::PointSet;
use udg_cli::formats::{parse_points, write_points, Mode, TreeDoc};
use udg_cli::svg::render_tree_svg;
use udg_cli::verify::tree_mismatches;

#[derive(Parser)]
#[command(
    name = "udg",
    version,
    about = "Shortest path trees in unit-disk graphs, computed without building the edge set"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a seeded point set (UDG_SEED overrides --seed)
    Gen(GenArgs),
    /// Compute a shortest path tree and write it as a tree file
    Solve(SolveArgs),
    /// Solve and compare against the explicit-graph oracle; exits 1 on mismatch
    Verify(VerifyArgs),
    /// Time the solver against the explicit-graph oracle, CSV to stdout
    Bench(BenchArgs),
    /// Render a solved tree as an SVG figure
    Plot(PlotArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Unweighted,
    Weighted,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Unweighted => Mode::Unweighted,
            ModeArg::Weighted => Mode::Weighted,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ShapeArg {
    UniformSquare,
    Grid,
    Clusters,
    Collinear,
}

impl ShapeArg {
    fn name(self) -> &'static str {
        match self {
            ShapeArg::UniformSquare => "uniform-square",
            ShapeArg::Grid => "grid",
            ShapeArg::Clusters => "clusters",
            ShapeArg::Collinear => "collinear",
        }
    }
}

impl From<ShapeArg> for Shape {
    fn from(s: ShapeArg) -> Shape {
        match s {
            ShapeArg::UniformSquare => Shape::UniformSquare,
            ShapeArg::Grid => Shape::Grid,
            ShapeArg::Clusters => Shape::Clusters,
            ShapeArg::Collinear => Shape::Collinear,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    /// Number of points
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = ShapeArg::UniformSquare)]
    shape: ShapeArg,
    /// Square side length
    #[arg(long)]
    side: Option<f64>,
    /// Pick the side for this expected average degree instead
    #[arg(long, conflicts_with = "side")]
    degree: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge threshold the margin is measured against
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Minimum |squared pair distance - radius^2|; 0 disables resampling
    #[arg(long, default_value_t = 1e-9)]
    margin: f64,
    /// Output file (stdout when omitted)
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Points file
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, short, default_value_t = 0)]
    source: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Unweighted)]
    mode: ModeArg,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Output tree file (stdout when omitted)
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Log search progress to stderr
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Points file
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, short, default_value_t = 0)]
    source: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Unweighted)]
    mode: ModeArg,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchModeArg {
    Unweighted,
    Weighted,
    Both,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated instance sizes
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Expected average degree of the generated instances
    #[arg(long, default_value_t = 10.0)]
    degree: f64,
    /// Seeds per cell; timings are the median across seeds
    #[arg(long, default_value_t = 1)]
    seeds: usize,
    #[arg(long, value_enum, default_value_t = BenchModeArg::Both)]
    mode: BenchModeArg,
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    /// Base seed (UDG_SEED overrides)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output CSV file (stdout when omitted)
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PlotArgs {
    /// Points file
    #[arg(long, short)]
    input: PathBuf,
    /// Tree file produced by solve
    #[arg(long, short)]
    tree: PathBuf,
    /// Output SVG file (stdout when omitted)
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::Gen(args) => cmd_gen(args).map(|()| ExitCode::SUCCESS),
        Cmd::Solve(args) => cmd_solve(args).map(|()| ExitCode::SUCCESS),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Bench(args) => cmd_bench(args).map(|()| ExitCode::SUCCESS),
        Cmd::Plot(args) => cmd_plot(args).map(|()| ExitCode::SUCCESS),
    }
}

fn env_seed() -> Result<Option<u64>> {
    match std::env::var("UDG_SEED") {
        Ok(v) => Ok(Some(v.trim().parse().with_context(|| {
            format!("UDG_SEED must be a nonnegative integer, got {v:?}")
        })?)),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(e).context("UDG_SEED is not valid unicode"),
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_points(path: &Path) -> Result<PointSet> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_points(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    let seed = env_seed()?.unwrap_or(args.seed);
    let side = match (args.side, args.degree) {
        (Some(side), _) => side,
        (None, Some(degree)) => side_for_degree(args.n, args.radius, degree),
        (None, None) => bail!("provide --side or --degree"),
    };
    let spec = GenSpec {
        n: args.n,
        shape: args.shape.into(),
        side,
        seed,
        min_threshold_margin: args.margin,
        radius: args.radius,
    };
    let ps = generate(&spec)?;
    let header = format!(
        "# shape={} side={} seed={} radius={} margin={}\n",
        args.shape.name(),
        side,
        seed,
        args.radius,
        args.margin
    );
    write_out(args.output.as_deref(), &(header + &write_points(&ps)))
}

fn cmd_solve(args: SolveArgs) -> Result<()> {
    let ps = read_points(&args.input)?;
    let mode: Mode = args.mode.into();
    let tree = match mode {
        Mode::Unweighted => {
            let (tree, stats) = unweighted_sssp_with_stats(&ps, args.source, args.radius)?;
            if args.trace {
                for (level, members) in tree.levels().iter().enumerate() {
                    eprintln!("level {level}: {} points", members.len());
                }
                eprintln!(
                    "rounds {} queue pushes {} edge inspections {} of {} triangulation edges",
                    stats.rounds, stats.queue_pushes, stats.edge_inspections, stats.dt_edges
                );
            }
            tree
        }
        Mode::Weighted => {
            if args.trace {
                let run = weighted_sssp_traced(&ps, args.source, args.radius)?;
                for event in &run.trace {
                    match *event {
                        TraceEvent::KillBlue { blue } => eprintln!("kill blue {blue}"),
                        TraceEvent::SettleRed { blue, red, dist } => {
                            eprintln!("settle {red} via {blue} dist {dist:.16e}")
                        }
                    }
                }
                eprintln!(
                    "iterations {} settled {} killed {} pair queries {} peak candidates {}",
                    run.stats.iterations,
                    run.stats.settled,
                    run.stats.killed,
                    run.stats.bcp_ops,
                    run.stats.peak_candidates
                );
                run.tree
            } else {
                udg::weighted::weighted_sssp(&ps, args.source, args.radius)?
            }
        }
    };
    let doc = TreeDoc::from_tree(&tree, args.radius, mode);
    write_out(args.output.as_deref(), &doc.to_text())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let ps = read_points(&args.input)?;
    let mode: Mode = args.mode.into();
    let graph = build_explicit(&ps, args.radius)?;
    let (tree, oracle) = match mode {
        Mode::Unweighted => (
            udg::unweighted::unweighted_sssp(&ps, args.source, args.radius)?,
            bfs_oracle(&graph, args.source)?,
        ),
        Mode::Weighted => (
            udg::weighted::weighted_sssp(&ps, args.source, args.radius)?,
            dijkstra_oracle(&graph, args.source)?,
        ),
    };
    let bad = tree_mismatches(&ps, &tree, &oracle, mode, args.radius);
    if bad.is_empty() {
        println!(
            "OK mode={mode} n={} source={} radius={}: solver matches oracle",
            ps.len(),
            args.source,
            args.radius
        );
        Ok(ExitCode::SUCCESS)
    } else {
        for line in bad.iter().take(10) {
            println!("MISMATCH {line}");
        }
        println!(
            "FAIL mode={mode} n={} source={} radius={}: {} mismatches",
            ps.len(),
            args.source,
            args.radius,
            bad.len()
        );
        Ok(ExitCode::from(1))
    }
}

fn median_ms(mut samples: Vec<f64>) -> f64 {
    samples.sort_by(f64::total_cmp);
    let k = samples.len();
    if k % 2 == 1 {
        samples[k / 2]
    } else {
        0.5 * (samples[k / 2 - 1] + samples[k / 2])
    }
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    let base_seed = env_seed()?.unwrap_or(args.seed);
    if args.seeds == 0 {
        bail!("--seeds must be at least 1");
    }
    let modes: &[Mode] = match args.mode {
        BenchModeArg::Unweighted => &[Mode::Unweighted],
        BenchModeArg::Weighted => &[Mode::Weighted],
        BenchModeArg::Both => &[Mode::Unweighted, Mode::Weighted],
    };
    let mut csv = String::from("n,mode,build_ms,solve_ms,explicit_oracle_ms,dt_edges,bcp_ops\n");
    for &n in &args.sizes {
        for &mode in modes {
            let mut build = Vec::new();
            let mut solve = Vec::new();
            let mut oracle = Vec::new();
            let mut dt_edges = 0usize;
            let mut bcp_ops = 0u64;
            for k in 0..args.seeds {
                let spec = GenSpec {
                    n,
                    shape: Shape::UniformSquare,
                    side: side_for_degree(n, args.radius, args.degree),
                    seed: base_seed + k as u64,
                    ..GenSpec::default()
                };
                let ps = generate(&spec)?;

                let t = Instant::now();
                let dt = udg::delaunay::build_delaunay(&ps);
                build.push(t.elapsed().as_secs_f64() * 1e3);

                let t = Instant::now();
                let ops = match mode {
                    Mode::Unweighted => {
                        udg::unweighted::unweighted_sssp(&ps, 0, args.radius)?;
                        0
                    }
                    Mode::Weighted => {
                        let (_, stats) = weighted_sssp_with_stats(&ps, 0, args.radius)?;
                        stats.bcp_ops
                    }
                };
                solve.push(t.elapsed().as_secs_f64() * 1e3);

                let t = Instant::now();
                let graph = build_explicit(&ps, args.radius)?;
                match mode {
                    Mode::Unweighted => drop(bfs_oracle(&graph, 0)?),
                    Mode::Weighted => drop(dijkstra_oracle(&graph, 0)?),
                }
                oracle.push(t.elapsed().as_secs_f64() * 1e3);

                if k == 0 {
                    dt_edges = dt.edge_count();
                    bcp_ops = ops;
                }
            }
            csv.push_str(&format!(
                "{n},{mode},{:.3},{:.3},{:.3},{dt_edges},{bcp_ops}\n",
                median_ms(build),
                median_ms(solve),
                median_ms(oracle)
            ));
        }
    }
    write_out(args.output.as_deref(), &csv)
}

fn cmd_plot(args: PlotArgs) -> Result<()> {
    let ps = read_points(&args.input)?;
    let text = std::fs::read_to_string(&args.tree)
        .with_context(|| format!("reading {}", args.tree.display()))?;
    let doc = TreeDoc::parse(&text).with_context(|| format!("parsing {}", args.tree.display()))?;
    if doc.len() != ps.len() {
        bail!(
            "tree file covers {} points but the input has {}",
            doc.len(),
            ps.len()
        );
    }
    write_out(args.output.as_deref(), &render_tree_svg(&ps, &doc))
}
