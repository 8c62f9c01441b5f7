//! `plaid`: render, verify and explore the plaid model from the command line.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use serde_json::json;

use plaid::analysis::polygon_stats;
use plaid::grid::{trace_polygons, Block, Region, UnitSquare};
use plaid::io::{render_svg, Layer, PolygonDocument, RenderConfig};
use plaid::param::even_parameters;
use plaid::pet::{default_epsilon, irrational_tiling, oriented_tile, special_orbit, vector_polygon};
use plaid::scalar::{parse_fraction, to_fraction_string};
use plaid::verify::{run_suite_parallel, Suite};
use plaid::{make_param, Param, Rat, Rat64, Scalar};

/// Environment variable naming the golden-file directory.
const GOLDEN_ENV: &str = "PLAID_GOLDEN_DIR";

#[derive(Parser)]
#[command(name = "plaid", version, about = "Exact plaid model engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a window of the model as SVG.
    Render(RenderArgs),
    /// Run a verification suite; one JSON line per parameter.
    Verify(VerifyArgs),
    /// Dump the special orbit of a tile center as JSON.
    Orbit(OrbitArgs),
    /// Tile a window with an offset classifying map.
    Irrational(IrrationalArgs),
    /// Polygon statistics of some blocks, or the polygon document.
    Stats(StatsArgs),
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
}

impl ParamArgs {
    fn param(&self) -> Result<Param> {
        Ok(make_param(self.p, self.q)?)
    }
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    param: ParamArgs,
    /// `x0,y0,width,height`; defaults to the first block.
    #[arg(long)]
    window: Option<String>,
    #[arg(long, default_value_t = 20)]
    scale: i64,
    /// Comma-separated layers: grid-lines, light-points, connectors, polygons,
    /// orientation-arrows.
    #[arg(long, default_value = "polygons")]
    layers: String,
    /// Adds the orientation-arrows layer.
    #[arg(long)]
    oriented: bool,
    /// `layer=color`, repeatable.
    #[arg(long = "color")]
    colors: Vec<String>,
    /// Output file; standard output if absent.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// coherence, isomorphism, bijection, hier, two-points, symmetry, mesh,
    /// pet-equivalence, first, empty-rect or particle-geometry.
    #[arg(long)]
    suite: Suite,
    /// Every even rational with `ω` up to this bound.
    #[arg(long, conflicts_with = "params")]
    max_omega: Option<i64>,
    /// Comma-separated `p/q` list.
    #[arg(long, value_delimiter = ',')]
    params: Vec<Param>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    param: ParamArgs,
    /// Tile center `x,y`, e.g. `1/2,1/2`.
    #[arg(long)]
    c: String,
    /// Include the oriented label of every visited tile.
    #[arg(long)]
    oriented: bool,
}

#[derive(Args)]
struct IrrationalArgs {
    /// `P` as an exact fraction.
    #[arg(long = "P")]
    big_p: String,
    /// `t,u1,u2`.
    #[arg(long, default_value = "0,0,0")]
    offset: String,
    /// `x0,y0,width,height`.
    #[arg(long, default_value = "0,0,100,100")]
    window: String,
    /// Minimum wall distance; defaults to 2^-40.
    #[arg(long)]
    eps: Option<String>,
    /// Seed for the suggested perturbation of a bad offset.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    param: ParamArgs,
    /// Use all fundamental blocks instead of the first.
    #[arg(long)]
    all_blocks: bool,
    /// Print the polygon document instead of statistics.
    #[arg(long)]
    document: bool,
    /// Compare the polygon document with the golden corpus.
    #[arg(long, conflicts_with = "write_golden")]
    check_golden: bool,
    /// Write the polygon document into the golden corpus.
    #[arg(long)]
    write_golden: bool,
}

fn parse_ints<const N: usize>(s: &str, what: &str) -> Result<[i64; N]> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .with_context(|| format!("bad {what} {s:?}"))?;
    v.try_into().map_err(|_| anyhow::anyhow!("{what} needs {N} comma-separated integers"))
}

fn parse_rats<const N: usize>(s: &str, what: &str) -> Result<[Rat; N]> {
    let v: Vec<Rat> = s
        .split(',')
        .map(|t| parse_fraction::<Rat>(t).with_context(|| format!("bad {what} component {t:?}")))
        .collect::<Result<_>>()?;
    v.try_into().map_err(|_| anyhow::anyhow!("{what} needs {N} comma-separated fractions"))
}

fn parse_window(s: &str) -> Result<Region> {
    let [x0, y0, w, h] = parse_ints::<4>(s, "window")?;
    if w < 1 || h < 1 {
        bail!("window must be nonempty");
    }
    Ok(Region::new(x0, y0, w, h))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => Ok(r?),
        },
    }
}

fn render(a: &RenderArgs) -> Result<ExitCode> {
    let param = a.param.param()?;
    let window = match &a.window {
        Some(w) => parse_window(w)?,
        None => Block::new(0, 0).region(&param),
    };
    let mut layers: Vec<Layer> = a
        .layers
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Layer>().map_err(anyhow::Error::msg))
        .collect::<Result<_>>()?;
    if a.oriented {
        layers.push(Layer::OrientationArrows);
    }
    let mut cfg = RenderConfig::new(window, a.scale, layers);
    for c in &a.colors {
        let (l, color) = c.split_once('=').context("--color expects layer=color")?;
        cfg.palette.insert(l.parse::<Layer>().map_err(anyhow::Error::msg)?, color.to_string());
    }
    emit(a.out.as_ref(), &render_svg(&param, &cfg)?)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(a: &VerifyArgs) -> Result<ExitCode> {
    let params = match (a.max_omega, a.params.is_empty()) {
        (Some(m), _) => even_parameters(m),
        (None, false) => a.params.clone(),
        (None, true) => bail!("give --max-omega or --params"),
    };
    let records = run_suite_parallel(a.suite, &params, a.jobs);
    let lines: String = records.iter().map(|r| r.to_json_line() + "\n").collect();
    emit(None, &lines)?;
    Ok(if records.iter().all(|r| r.ok) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn orbit(a: &OrbitArgs) -> Result<ExitCode> {
    let param = a.param.param()?;
    let [cx, cy] = parse_rats::<2>(&a.c, "center")?;
    let sq = UnitSquare::from_center(&cx, &cy).context("center must have half-integer coordinates")?;
    let orbit = special_orbit::<Rat>(&param, sq)?;
    let polygon = vector_polygon(&param, sq)?;
    let center_json = |v: &UnitSquare| {
        let (x, y) = v.center::<Rat>();
        json!([to_fraction_string(&x), to_fraction_string(&y)])
    };
    let mut doc = json!({
        "param": param.to_string(),
        "center": center_json(&sq),
        "length": orbit.len(),
        "states": orbit.states.iter().map(|z| {
            let (t, u1, u2) = z.coords();
            json!([to_fraction_string(&t), to_fraction_string(&u1), to_fraction_string(&u2)])
        }).collect::<Vec<_>>(),
        "regions": orbit.regions.iter().map(|r| r.name()).collect::<Vec<_>>(),
        "vectors": orbit.vectors,
        "polygon": polygon.as_ref().map(|p| p.vertices().iter().map(center_json).collect::<Vec<_>>()),
    });
    if a.oriented {
        let mut c = sq;
        let mut labels = Vec::new();
        for (dx, dy) in &orbit.vectors {
            labels.push(oriented_tile::<Rat64>(&param, c)?.to_string());
            c = UnitSquare::new(c.x + dx, c.y + dy);
        }
        doc["labels"] = json!(labels);
    }
    emit(None, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn irrational(a: &IrrationalArgs) -> Result<ExitCode> {
    let big_p = parse_fraction::<Rat>(&a.big_p).context("--P must be a fraction")?;
    if big_p <= Rat::int(0) || big_p >= Rat::int(1) {
        bail!("--P must lie in (0, 1)");
    }
    let [t, u1, u2] = parse_rats::<3>(&a.offset, "offset")?;
    let window = parse_window(&a.window)?;
    let eps = match &a.eps {
        Some(e) => parse_fraction::<Rat>(e).context("--eps must be a fraction")?,
        None => default_epsilon(),
    };
    let offset = (t, u1, u2);
    match irrational_tiling(&big_p, &offset, window, &eps) {
        Ok(tiling) => {
            let first: Vec<_> = tiling.mismatches.iter().take(10).map(|(s, d)| json!([s.x, s.y, d.letter().to_string()])).collect();
            let doc = json!({
                "P": to_fraction_string(&big_p),
                "window": [window.x0, window.y0, window.width, window.height],
                "coherent": tiling.is_coherent(),
                "mismatches": tiling.mismatches.len(),
                "first_mismatches": first,
                "min_gap": to_fraction_string(&tiling.min_gap),
            });
            emit(None, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
            Ok(if tiling.is_coherent() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Err(bad) => {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(a.seed);
            let mut r = || Rat::ratio(rng.gen_range(-(1i64 << 20)..(1i64 << 20)), 1 << 30);
            let suggestion = [offset.0 + r(), offset.1 + r(), offset.2 + r()];
            let s: Vec<String> = suggestion.iter().map(to_fraction_string).collect();
            eprintln!("error: bad offset: {bad}");
            eprintln!("try --offset {}", s.join(","));
            Ok(ExitCode::FAILURE)
        }
    }
}

fn golden_path(param: &Param) -> Result<PathBuf> {
    let dir = std::env::var_os(GOLDEN_ENV).with_context(|| format!("{GOLDEN_ENV} is not set"))?;
    Ok(PathBuf::from(dir).join(format!("polygons_{}_{}.json", param.p(), param.q())))
}

fn stats(a: &StatsArgs) -> Result<ExitCode> {
    let param = a.param.param()?;
    let blocks = if a.all_blocks { Block::fundamental(&param) } else { vec![Block::new(0, 0)] };
    if a.document || a.check_golden || a.write_golden {
        let mut polys = Vec::new();
        for b in &blocks {
            polys.extend(trace_polygons(&param, b.region(&param))?);
        }
        let text = PolygonDocument::new(&param, &blocks, &polys).to_json();
        if a.write_golden {
            let path = golden_path(&param)?;
            std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
        } else if a.check_golden {
            let path = golden_path(&param)?;
            let want = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            if want != text {
                eprintln!("{} differs from the computed document", path.display());
                return Ok(ExitCode::FAILURE);
            }
            eprintln!("{} matches", path.display());
        } else {
            emit(None, &text)?;
        }
        return Ok(ExitCode::SUCCESS);
    }
    let s = polygon_stats(&param, &blocks)?;
    let per_block: BTreeMap<String, usize> = s.per_block.iter().map(|(b, n)| (format!("{},{}", b.i, b.j), *n)).collect();
    let doc = json!({
        "param": param.to_string(),
        "count": s.count,
        "max_diameter": s.max_diameter,
        "max_x_diameter": s.max_x_diameter,
        "per_block": per_block,
    });
    emit(None, &(serde_json::to_string_pretty(&doc)? + "\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Render(a) => render(a),
        Command::Verify(a) => verify(a),
        Command::Orbit(a) => orbit(a),
        Command::Irrational(a) => irrational(a),
        Command::Stats(a) => stats(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
