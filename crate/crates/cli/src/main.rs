use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use coclust::consecutive::{cutset_to_coclustering, optimize_consecutive, solve_consecutive, CutSet};
use coclust::engine::{decide, optimize, optimize_real, optimize_real_with, Strategy, Trace};
use coclust::generators::{
    from_3coloring, from_box_cover, from_optimal_discretization, random_instance, GridMode,
};
use coclust::io::{parse_colored_points, parse_edge_list, parse_matrix, parse_point_set, write_csv, ParsedMatrix};
use coclust::sat::{build_boundary_cnf, build_full_cnf, export_dimacs, ClusterBoundary};
use coclust::{Budget, CoClustering, Error, Instance, RealInstance, SearchContext, SearchStats};

const SCHEMA: &str = "v1";

#[derive(Parser)]
#[command(name = "coclust", version, about = "Exact co-clustering under the maximum norm")]
struct Cli {
    /// Worker threads for the parallel enumerations.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Is there a (k, l)-co-clustering of cost at most c? Exit 0 if yes, 1 if no.
    Decide {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        c: f64,
        #[arg(long, default_value = "auto")]
        strategy: String,
        /// Only contiguous row and column blocks.
        #[arg(long)]
        consecutive: bool,
    },
    /// Minimum cost with a witness.
    Optimize {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[arg(long)]
        consecutive: bool,
    },
    /// Write an instance from one of the reductions, or a random matrix, as CSV.
    Generate(Generate),
    /// Write the SAT encoding of an instance in DIMACS format.
    ExportCnf {
        #[command(flatten)]
        dims: Dims,
        #[arg(long)]
        c: i64,
        #[arg(long, value_enum, default_value_t = Encoding::Full)]
        encoding: Encoding,
        /// Cluster lower bounds for the boundary encoding, rows split by `;`, e.g. `0,1;2,2`.
        #[arg(long)]
        boundary_spec: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Dims {
    /// CSV, TSV or whitespace-separated matrix.
    matrix: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Encoding {
    Full,
    Boundary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "3coloring")]
    ThreeColoring,
    Boxcover,
    Discretization,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Grid {
    Distinct,
    Range,
}

#[derive(Args)]
struct Generate {
    #[arg(value_enum)]
    kind: Kind,
    /// Edge list (3coloring), point list (boxcover) or coloured point list (discretization).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Vertex count for 3coloring; defaults to the largest endpoint.
    #[arg(long)]
    vertices: Option<usize>,
    /// Horizontal lines for discretization.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Squares for boxcover, vertical lines for discretization.
    #[arg(long, default_value_t = 1)]
    l: usize,
    #[arg(long, value_enum, default_value_t = Grid::Distinct)]
    grid: Grid,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Alphabet size for random matrices.
    #[arg(long)]
    sigma: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn context(jobs: usize) -> anyhow::Result<SearchContext> {
    Ok(SearchContext::new(Budget::from_env()?).with_jobs(jobs))
}

fn blocks(cc: &CoClustering) -> (Value, Value) {
    let one = cc.to_one_based();
    (json!(one.row_blocks), json!(one.col_blocks))
}

fn cuts_json(cuts: &CutSet) -> Value {
    let (rows, cols) = cuts.to_one_based();
    json!({ "rows": rows, "cols": cols })
}

fn number(x: f64, integral: bool) -> Value {
    if integral {
        json!(x as i64)
    } else {
        json!(x)
    }
}

fn trace_json(trace: &Trace) -> Value {
    json!({
        "route": trace.route.name(),
        "transposed": trace.transposed,
        "fallback": trace.fallback,
        "stats": trace.stats,
    })
}

/// Returns the JSON answer and whether it is feasible.
fn cmd_decide(
    dims: &Dims,
    c: f64,
    strategy: &str,
    consecutive: bool,
    ctx: &mut SearchContext,
) -> anyhow::Result<(Value, bool)> {
    let strategy: Strategy = strategy.parse()?;
    let parsed = parse_matrix(&read(&dims.matrix)?)?;
    let integral = matches!(parsed, ParsedMatrix::Int(_));
    let real = parsed.into_real();
    let (inst, _) = coclust::rescale(&RealInstance::new(real.clone(), dims.k, dims.l, c)?)?;

    let (solution, mut out) = if consecutive {
        let before = ctx.stats;
        let cuts = solve_consecutive(inst.matrix(), inst.k(), inst.l(), inst.c(), ctx)?;
        let stats = SearchStats {
            cut_sets: ctx.stats.cut_sets - before.cut_sets,
            ..SearchStats::default()
        };
        let cc = cuts
            .as_ref()
            .map(|x| cutset_to_coclustering(x, inst.matrix().rows(), inst.matrix().cols()))
            .transpose()?;
        let mut out = json!({ "route": "consecutive", "stats": stats });
        if let Some(x) = &cuts {
            out["cuts"] = cuts_json(x);
        }
        (cc, out)
    } else {
        let d = decide(&inst, strategy, ctx)?;
        let t = trace_json(&d.trace);
        (d.solution, t)
    };
    out["schema"] = json!(SCHEMA);
    out["feasible"] = json!(solution.is_some());
    match &solution {
        Some(cc) => {
            let (rows, cols) = blocks(cc);
            out["row_blocks"] = rows;
            out["col_blocks"] = cols;
            out["cost"] = number(real.cost(cc)?, integral);
        }
        None => {
            out["row_blocks"] = Value::Null;
            out["col_blocks"] = Value::Null;
            out["cost"] = Value::Null;
        }
    }
    Ok((out, solution.is_some()))
}

fn cmd_optimize(dims: &Dims, strategy: &str, consecutive: bool, ctx: &mut SearchContext) -> anyhow::Result<Value> {
    let strategy: Strategy = strategy.parse()?;
    let parsed = parse_matrix(&read(&dims.matrix)?)?;
    let (k, l) = (dims.k, dims.l);
    let mut out = match (parsed, consecutive) {
        (ParsedMatrix::Int(a), true) => {
            let (best, cuts) = optimize_consecutive(&a, k, l, ctx)?;
            let cc = cutset_to_coclustering(&cuts, a.rows(), a.cols())?;
            let (rows, cols) = blocks(&cc);
            json!({ "cost": best, "row_blocks": rows, "col_blocks": cols, "cuts": cuts_json(&cuts), "route": "consecutive" })
        }
        (ParsedMatrix::Int(a), false) => {
            let o = optimize(&a, k, l, strategy, ctx)?;
            let (rows, cols) = blocks(&o.coclustering);
            json!({
                "cost": o.cost,
                "row_blocks": rows,
                "col_blocks": cols,
                "bounds": {
                    "lower": o.bounds.lower,
                    "upper": o.bounds.upper,
                    "tight": o.bounds.is_tight(),
                    "witness_cost": o.bounds.witness_cost,
                },
                "probes": o.probes,
                "stats": o.stats,
            })
        }
        (ParsedMatrix::Real(r), consecutive) => {
            let o = if consecutive {
                optimize_real_with(&r, k, l, ctx, |inst, ctx| {
                    let (m, n) = (inst.matrix().rows(), inst.matrix().cols());
                    solve_consecutive(inst.matrix(), inst.k(), inst.l(), inst.c(), ctx)?
                        .map(|x| cutset_to_coclustering(&x, m, n))
                        .transpose()
                })?
            } else {
                optimize_real(&r, k, l, strategy, ctx)?
            };
            let (rows, cols) = blocks(&o.coclustering);
            json!({ "cost": o.cost, "row_blocks": rows, "col_blocks": cols, "probes": o.probes })
        }
    };
    out["schema"] = json!(SCHEMA);
    Ok(out)
}

fn cmd_generate(g: &Generate) -> anyhow::Result<()> {
    let input = || -> anyhow::Result<String> {
        match &g.input {
            Some(p) => read(p),
            None => bail!("--input is required for this kind"),
        }
    };
    let matrix = match g.kind {
        Kind::ThreeColoring => from_3coloring(&parse_edge_list(&input()?, g.vertices)?)?.into_parts().0,
        Kind::Boxcover => from_box_cover(&parse_point_set(&input()?)?, g.l)?.into_parts().0,
        Kind::Discretization => {
            let mode = match g.grid {
                Grid::Distinct => GridMode::DistinctCoordinates,
                Grid::Range => GridMode::IntegerRange,
            };
            from_optimal_discretization(&parse_colored_points(&input()?)?, g.k, g.l, mode)?
                .instance
                .into_parts()
                .0
        }
        Kind::Random => {
            let (Some(m), Some(n), Some(sigma)) = (g.m, g.n, g.sigma) else {
                bail!("random needs --m, --n and --sigma");
            };
            random_instance(m, n, sigma, g.seed)?
        }
    };
    emit(&write_csv(&matrix), g.out.as_deref())
}

fn cmd_export_cnf(
    dims: &Dims,
    c: i64,
    encoding: Encoding,
    spec: Option<&str>,
    out: Option<&Path>,
    ctx: &SearchContext,
) -> anyhow::Result<()> {
    let a = coclust::io::parse_int_matrix(&read(&dims.matrix)?)?;
    let inst = Instance::new(a, dims.k, dims.l, c)?;
    let cnf = match (encoding, spec) {
        (Encoding::Full, None) => build_full_cnf(&inst, ctx.budget.max_clauses)?.0,
        (Encoding::Full, Some(_)) => bail!("--boundary-spec only applies to the boundary encoding"),
        (Encoding::Boundary, Some(s)) => build_boundary_cnf(&inst, &s.parse::<ClusterBoundary>()?)?.0,
        (Encoding::Boundary, None) => bail!("the boundary encoding needs --boundary-spec"),
    };
    emit(&export_dimacs(&cnf), out)
}

fn error_kind(e: &anyhow::Error) -> &'static str {
    match e.downcast_ref::<Error>() {
        Some(Error::BudgetExhausted(_)) | Some(Error::TooLarge(_)) => "budget-exhausted",
        Some(Error::Parse { .. }) => "parse",
        Some(Error::InvalidArgument(_)) => "invalid-argument",
        Some(Error::Internal(_)) => "internal",
        None => "io",
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Decide {
            dims,
            c,
            strategy,
            consecutive,
        } => {
            let mut ctx = context(cli.jobs)?;
            let (out, feasible) = cmd_decide(dims, *c, strategy, *consecutive, &mut ctx)?;
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::from(if feasible { 0 } else { 1 }))
        }
        Command::Optimize {
            dims,
            strategy,
            consecutive,
        } => {
            let mut ctx = context(cli.jobs)?;
            let out = cmd_optimize(dims, strategy, *consecutive, &mut ctx)?;
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate(g) => {
            cmd_generate(g)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportCnf {
            dims,
            c,
            encoding,
            boundary_spec,
            out,
        } => {
            let ctx = context(cli.jobs)?;
            cmd_export_cnf(dims, *c, *encoding, boundary_spec.as_deref(), out.as_deref(), &ctx)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Help and version requests are not errors.
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let out = json!({ "schema": SCHEMA, "error": format!("{e:#}"), "kind": error_kind(&e) });
            println!("{out}");
            ExitCode::from(2)
        }
    }
}
