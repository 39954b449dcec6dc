mod error;
mod format;
mod record;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gcx_core::links::{boundary_coloring_count, link_determinant, medial_diagram, PlaneGraph};
use gcx_core::mahler::{
    complexity_growth_lattices, complexity_growth_sequence, lehmer_search, mahler_multivariate, mahler_univariate,
    GrowthReport,
};
use gcx_core::periodic::{grid_graph, realize_palindromic, Sublattice};
use gcx_core::{catalog, Exec, LaurentPoly, SignedGraph};
use toml::Value;

use error::CliError;
use format::GraphFile;
use record::Record;

#[derive(Parser)]
#[command(name = "gcx", version, about = "Graph complexity, Laplacian polynomials, Mahler measures and links")]
struct Cli {
    /// Run on one thread even when built with parallel support.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Torsion and tree complexity and the Laplacian group of a finite graph.
    Complexity {
        /// Graph file; `-` or omitted reads standard input.
        file: Option<PathBuf>,
    },
    /// Laplacian polynomial of a periodic graph.
    Poly { file: Option<PathBuf> },
    /// Mahler measure of a polynomial or of a periodic graph's Laplacian polynomial.
    Mahler {
        file: Option<PathBuf>,
        /// Polynomial such as `x^10 + x^9 - x^7 + ...`; variables `x` or `x1..xd`.
        #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
        poly: Option<String>,
        /// Variable count for `--poly`.
        #[arg(long, default_value_t = 1)]
        vars: usize,
        /// Coarse grid size per axis for torus quadrature (the result uses twice this).
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Complexity growth of quotients G_r against log M(Δ_G).
    Growth {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 12)]
        rmax: usize,
        /// Grid for the Mahler target when d >= 2.
        #[arg(long, default_value_t = 128)]
        grid: usize,
        /// Write `r residual` lines to this file.
        #[arg(long)]
        emit_plot_data: Option<PathBuf>,
    },
    /// Medial link diagrams, colorings and determinants of plane graphs;
    /// closed components and boundary colorings of annular graphs.
    Links {
        file: Option<PathBuf>,
        /// Coloring dimensions mod these primes.
        #[arg(long = "p")]
        primes: Vec<u64>,
        #[arg(long)]
        determinant: bool,
        /// Export the medial diagram as PD code.
        #[arg(long)]
        medial: bool,
        /// For annular input: work with the r-fold cover in the plane.
        #[arg(long)]
        cover: Option<usize>,
    },
    /// Single-orbit periodic graph with Laplacian polynomial (x − 2 + 1/x)·f.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Small single-orbit graphs ranked by Mahler measure above 1.
    Search {
        #[arg(long, default_value_t = 6)]
        max_shift: i64,
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
        /// Report only the first K hits.
        #[arg(long)]
        top: Option<usize>,
    },
    /// Print a built-in example as a graph file.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Jensen,
    Torus,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    /// Four-orbit 1-periodic graph with Δ = 9(x − 2 + 1/x).
    WorkedPeriodic,
    /// Its 2-fold quotient: 8 vertices, κ = 9, τ = 0.
    Quotient,
    /// The worked periodic graph with an annular rotation system.
    MilnorAnnular,
    /// The quotient embedded in the plane; its medial link is Milnor's boundary link.
    MilnorPlane,
    /// Two orbits with Δ = −3x + 6 − 3/x.
    TwoOrbit,
    DoubledLine,
    Line,
    Grid2,
    Grid3,
    /// Signed triangle (trefoil medial), with rotation system.
    Triangle,
    /// One vertex with a loop (one-crossing unknot medial).
    Curl,
    /// Square C4 ((2,4) torus link medial).
    Square,
    /// 4×4 grid in the plane.
    PlaneGrid4,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let start = Instant::now();
    match run(cli.command, exec) {
        Ok(Output::Record(r)) => {
            print!("{}", r.render(start.elapsed()));
            ExitCode::SUCCESS
        }
        Ok(Output::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("gcx: {e}");
            e.exit_code()
        }
    }
}

enum Output {
    Record(Record),
    Text(String),
}

fn read_input(file: &Option<PathBuf>) -> Result<Vec<u8>, CliError> {
    match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read(p).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf).map_err(|e| CliError::Parse(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

fn load(file: &Option<PathBuf>) -> Result<(Vec<u8>, GraphFile), CliError> {
    let bytes = read_input(file)?;
    let text = std::str::from_utf8(&bytes).map_err(|_| CliError::Parse("input is not UTF-8".into()))?;
    let g = GraphFile::parse(text)?;
    Ok((bytes, g))
}

fn run(command: Command, exec: Exec) -> Result<Output, CliError> {
    match command {
        Command::Complexity { file } => complexity(&file),
        Command::Poly { file } => poly(&file),
        Command::Mahler { file, poly, vars, grid, method } => mahler(&file, poly, vars, grid, method, exec),
        Command::Growth { file, rmax, grid, emit_plot_data } => growth(&file, rmax, grid, emit_plot_data, exec),
        Command::Links { file, primes, determinant, medial, cover } => links(&file, &primes, determinant, medial, cover),
        Command::Realize { poly } => realize(&poly),
        Command::Search { max_shift, max_edges, top } => search(max_shift, max_edges, top, exec),
        Command::Example { name } => Ok(Output::Text(example(name).to_toml())),
    }
}

fn complexity(file: &Option<PathBuf>) -> Result<Output, CliError> {
    let (bytes, gf) = load(file)?;
    let g = gf.signed_graph()?;
    let grp = g.laplacian_group();
    let mut r = Record::new("complexity", &bytes);
    r.set("vertices", g.vertex_count() as i64)
        .set("edges", g.edge_count() as i64)
        .set("kappa", record::big(&g.torsion_complexity()))
        .set("tau", record::big(&g.tree_complexity()))
        .set("rank", grp.rank as i64)
        .set("invariant_factors", record::bigs(&grp.invariant_factors))
        .set("group", grp.to_string());
    Ok(Output::Record(r))
}

fn poly(file: &Option<PathBuf>) -> Result<Output, CliError> {
    let (bytes, gf) = load(file)?;
    let g = gf.periodic_graph()?;
    let delta = g.laplacian_polynomial();
    let mut r = Record::new("poly", &bytes);
    r.set("d", g.dim() as i64).set("orbits", g.orbit_count() as i64).set("delta_raw", record::poly(&delta));
    if delta.is_zero() {
        r.set("delta", record::poly(&delta));
    } else {
        r.set("delta", record::poly(&delta.canonical_unit_form()?));
    }
    let finite = g.component_orbits().iter().filter(|c| c.finite).count();
    r.set("finite_component_orbits", finite as i64);
    Ok(Output::Record(r))
}

fn mahler(
    file: &Option<PathBuf>,
    poly: Option<String>,
    vars: usize,
    grid: usize,
    method: MethodArg,
    exec: Exec,
) -> Result<Output, CliError> {
    let (bytes, f) = match poly {
        Some(s) => {
            let f = LaurentPoly::parse(vars, &s)?;
            (format!("{vars}:{s}").into_bytes(), f)
        }
        None => {
            let (bytes, gf) = load(file)?;
            (bytes, gf.periodic_graph()?.laplacian_polynomial())
        }
    };
    if f.is_zero() {
        return Err(CliError::Precondition("zero polynomial".into()));
    }
    let use_jensen = match method {
        MethodArg::Auto => f.nvars() <= 1,
        MethodArg::Jensen => true,
        MethodArg::Torus => false,
    };
    let m = if use_jensen { mahler_univariate(&f)? } else { mahler_multivariate(&f, grid, exec)? };
    let mut r = Record::new("mahler", &bytes);
    r.set("polynomial", record::poly(&f)).set("mahler", record::mahler(&m));
    Ok(Output::Record(r))
}

fn growth_table(rep: &GrowthReport) -> Value {
    let mut t = toml::Table::new();
    t.insert("index".into(), Value::Array(rep.index.iter().map(|&i| (i as i64).into()).collect()));
    t.insert("min_length".into(), record::floats(&rep.min_length));
    t.insert("kappa".into(), record::bigs(&rep.kappa));
    t.insert("normalized".into(), record::floats(&rep.normalized));
    t.insert("residuals".into(), record::floats(&rep.residuals));
    t.insert("target_log_measure".into(), rep.target.into());
    Value::Table(t)
}

fn growth(
    file: &Option<PathBuf>,
    rmax: usize,
    grid: usize,
    plot: Option<PathBuf>,
    exec: Exec,
) -> Result<Output, CliError> {
    let (bytes, gf) = load(file)?;
    let g = gf.periodic_graph()?;
    let rep = if g.dim() == 1 {
        complexity_growth_sequence(&g, rmax, exec)?
    } else {
        let lattices = (1..=rmax as i64).map(|r| Sublattice::scaled(g.dim(), r)).collect::<Result<Vec<_>, _>>()?;
        complexity_growth_lattices(&g, &lattices, grid, exec)?
    };
    if let Some(path) = plot {
        let text: String = rep.plot_data().iter().map(|(x, y)| format!("{x} {y}\n")).collect();
        std::fs::write(&path, text).map_err(|e| CliError::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    let mut r = Record::new("growth", &bytes);
    r.set("d", g.dim() as i64).set("growth", growth_table(&rep));
    Ok(Output::Record(r))
}

fn plane_outputs(r: &mut Record, g: &PlaneGraph, primes: &[u64], determinant: bool, medial: bool) -> Result<(), CliError> {
    let d = medial_diagram(g)?;
    r.set("vertices", g.graph().vertex_count() as i64)
        .set("edges", g.graph().edge_count() as i64)
        .set("faces", g.faces().len() as i64)
        .set("crossings", d.crossing_count() as i64)
        .set("arcs", d.arcs().1 as i64)
        .set("link_components", d.component_count() as i64);
    let mut dims = toml::Table::new();
    for &p in primes {
        let mut t = toml::Table::new();
        t.insert("fox".into(), (d.fox_coloring_dimension(p)? as i64).into());
        t.insert("graph".into(), (g.graph().coloring_dimension_mod_p(p)? as i64).into());
        dims.insert(p.to_string(), Value::Table(t));
    }
    if !primes.is_empty() {
        r.set("coloring_dimensions", Value::Table(dims));
    }
    if determinant {
        r.set("determinant", record::big(&link_determinant(g)?));
    }
    if medial {
        let pd: Vec<Value> = d
            .pd_code()
            .iter()
            .map(|x| Value::Array(x.iter().map(|&s| (s as i64).into()).collect()))
            .collect();
        let over: Vec<Value> = d.crossings().iter().map(|c| format!("{:?}", c.over).to_lowercase().into()).collect();
        r.set("pd_code", Value::Array(pd)).set("over_strand", Value::Array(over));
    }
    Ok(())
}

fn links(
    file: &Option<PathBuf>,
    primes: &[u64],
    determinant: bool,
    medial: bool,
    cover: Option<usize>,
) -> Result<Output, CliError> {
    let (bytes, gf) = load(file)?;
    let mut r = Record::new("links", &bytes);
    if gf.d == 0 {
        if cover.is_some() {
            return Err(CliError::Precondition("--cover needs an annular (d = 1) graph".into()));
        }
        plane_outputs(&mut r, &gf.plane_graph()?, primes, determinant, medial)?;
    } else {
        let a = gf.annular_graph()?;
        let rep = a.closed_components_check()?;
        r.set("closed_components_by_trace", rep.closed_by_trace)
            .set("closed_components_by_polynomial", rep.closed_by_polynomial)
            .set("strand_windings", Value::Array(rep.strand_windings.iter().map(|&w| w.into()).collect()))
            .set("delta", record::poly(&rep.polynomial));
        if !rep.polynomial.is_zero() {
            r.set("boundary_colorings", record::big(&boundary_coloring_count(&a.periodic_graph())?));
        }
        if let Some(k) = cover {
            let mut sub = Record::new("links", &[]);
            plane_outputs(&mut sub, &a.cover(k)?, primes, determinant, medial)?;
            r.set("cover", sub.into_outputs()).set("cover_degree", k as i64);
        }
    }
    Ok(Output::Record(r))
}

fn realize(poly: &str) -> Result<Output, CliError> {
    let f = LaurentPoly::parse(1, poly)?;
    let g = realize_palindromic(&f)?;
    let delta = g.laplacian_polynomial();
    let mut r = Record::new("realize", poly.as_bytes());
    let windings: Vec<Value> = g
        .edges()
        .iter()
        .map(|e| Value::Array(vec![e.shift[0].into(), e.sign.value().into()]))
        .collect();
    r.set("f", record::poly(&f)).set("delta", record::poly(&delta)).set("loops", Value::Array(windings));
    let graph = toml::Table::try_from(GraphFile::from_periodic(&g)).expect("graph files serialize");
    r.attach("graph", graph);
    Ok(Output::Record(r))
}

fn search(max_shift: i64, max_edges: usize, top: Option<usize>, exec: Exec) -> Result<Output, CliError> {
    let hits = lehmer_search(max_shift, max_edges, exec)?;
    let shown = top.unwrap_or(hits.len()).min(hits.len());
    let rows: Vec<Value> = hits[..shown]
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let mut t = toml::Table::new();
            t.insert("rank".into(), (i as i64 + 1).into());
            t.insert("measure".into(), h.measure.into());
            t.insert("polynomial".into(), record::poly(&h.polynomial));
            let loops: Vec<Value> = h
                .graph
                .edges()
                .iter()
                .map(|e| Value::Array(vec![e.shift[0].into(), e.sign.value().into()]))
                .collect();
            t.insert("loops".into(), Value::Array(loops));
            Value::Table(t)
        })
        .collect();
    let mut r = Record::new("search", format!("{max_shift}:{max_edges}").as_bytes());
    r.set("max_shift", max_shift).set("max_edges", max_edges as i64).set("hit_count", hits.len() as i64).set("hits", Value::Array(rows));
    Ok(Output::Record(r))
}

fn example(name: ExampleName) -> GraphFile {
    use gcx_core::links::AnnularGraph;
    let plane = |g: SignedGraph| PlaneGraph::find_embedding(&g, 10_000).expect("planar example");
    match name {
        ExampleName::WorkedPeriodic => GraphFile::from_periodic(&catalog::worked_periodic()),
        ExampleName::Quotient => GraphFile::from_signed(&catalog::worked_quotient()),
        ExampleName::MilnorAnnular => GraphFile::from_annular(&catalog::milnor_annular()),
        ExampleName::MilnorPlane => GraphFile::from_plane(&catalog::milnor_plane_graph()),
        ExampleName::TwoOrbit => GraphFile::from_periodic(&catalog::two_orbit_periodic()),
        ExampleName::DoubledLine => GraphFile::from_annular(
            &AnnularGraph::find_embedding(&catalog::doubled_line(), 100).expect("annular"),
        ),
        ExampleName::Line => {
            GraphFile::from_annular(&AnnularGraph::find_embedding(&grid_graph(1), 100).expect("annular"))
        }
        ExampleName::Grid2 => GraphFile::from_periodic(&grid_graph(2)),
        ExampleName::Grid3 => GraphFile::from_periodic(&grid_graph(3)),
        ExampleName::Triangle => {
            GraphFile::from_plane(&plane(SignedGraph::unsigned(3, &[(0, 1), (1, 2), (2, 0)]).expect("valid")))
        }
        ExampleName::Curl => GraphFile::from_plane(&plane(SignedGraph::unsigned(1, &[(0, 0)]).expect("valid"))),
        ExampleName::Square => GraphFile::from_plane(&plane(SignedGraph::cycle(4))),
        ExampleName::PlaneGrid4 => GraphFile::from_plane(&PlaneGraph::grid(4, 4).expect("grid")),
    }
}
