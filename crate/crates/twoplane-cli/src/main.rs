//! `twoplane` — work with 2-outerplanar drawings from the command line.
//!
//! Subcommands: `gen` writes built-in or random drawings as JSON documents,
//! `layers` prints the peeling depth, `forests` splits the vertices into two
//! induced forests (optionally recording a replayable trace), `outerplane`
//! extracts a large induced outerplane subgraph, `oracle` computes exact
//! optima on small inputs, `render` emits DOT or SVG, and `scan` samples
//! random instances against the 2/3 bound.
//!
//! Exit codes: 0 success, 2 unusable input or flags, 3 invalid embedding,
//! 4 drawing deeper than the algorithms accept, 5 internal invariant
//! violation, 6 over an exact-search size cap.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twoplane::gen::{self, GenSpec};
use twoplane::graph::EmbeddedGraph;
use twoplane::{forest2, layers, oracle, outerplane, VertexId};
use twoplane_cli::document::{GraphDocument, TraceDocument};
use twoplane_cli::render::{self, Classes};
use twoplane_cli::{CliError, Result};

/// Environment variable overriding every exact-search size cap.
const CAP_VAR: &str = "TWOPLANE_ORACLE_CAP";

#[derive(Parser)]
#[command(
    name = "twoplane",
    version,
    about = "Forest partitions and outerplane extraction for 2-outerplanar drawings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a built-in or random drawing as a JSON graph document.
    Gen {
        #[command(subcommand)]
        spec: SpecCmd,
        /// Output file (stdout when omitted).
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Print the layer decomposition and outerplanarity index.
    Layers {
        /// Graph document (`-` for stdin).
        input: PathBuf,
    },
    /// Split the vertices into two induced forests.
    Forests {
        /// Graph document (`-` for stdin).
        input: PathBuf,
        /// Write the recorded reduction trace as JSON.
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
        /// Replay the trace against the input as an independent check.
        #[arg(long)]
        validate: bool,
    },
    /// Extract an induced outerplane subgraph on ≥ ⌈2n/3⌉ vertices.
    Outerplane {
        /// Graph document (`-` for stdin).
        input: PathBuf,
        /// Accept any depth: extract from each consecutive layer pair.
        #[arg(long)]
        k_pairwise: bool,
    },
    /// Exact optima by exhaustive search (small drawings only).
    #[command(group = clap::ArgGroup::new("target").required(true).multiple(false))]
    Oracle {
        /// Graph document (`-` for stdin).
        input: PathBuf,
        /// Largest induced forest.
        #[arg(long, group = "target")]
        forest: bool,
        /// Vertex arboricity.
        #[arg(long, group = "target")]
        arboricity: bool,
        /// Largest induced outerplane subgraph.
        #[arg(long, group = "target")]
        outerplane: bool,
        /// Also run the matching algorithm and cross-check the results.
        #[arg(long)]
        compare: bool,
    },
    /// Render the drawing as DOT (abstract) or SVG (embedding-faithful).
    #[command(group = clap::ArgGroup::new("format").required(true).multiple(false))]
    Render {
        /// Graph document (`-` for stdin).
        input: PathBuf,
        /// One line per vertex and per undirected edge.
        #[arg(long, group = "format")]
        dot: bool,
        /// One polygon per face, barycentric layout.
        #[arg(long, group = "format")]
        svg: bool,
        /// Color vertices by algorithm output.
        #[arg(long, value_enum)]
        overlay: Option<Overlay>,
        /// Output file (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Sample random drawings and compare the exact outerplane optimum
    /// against a bound.
    Scan {
        /// Number of instances.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Largest instance size (sizes cycle up to this).
        #[arg(long, default_value_t = 14)]
        n_max: usize,
        /// Outerplanarity index of the sampled drawings.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Base seed; instance i uses seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bound numerator.
        #[arg(long, default_value_t = 2)]
        bound_num: u64,
        /// Bound denominator.
        #[arg(long, default_value_t = 3)]
        bound_den: u64,
        /// Write the first bound-violating instance here, if any.
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SpecCmd {
    /// The octahedron: the tight 2/3 example (n=6).
    Octahedron,
    /// The complete graph on four vertices.
    K4,
    /// Hexagonal boundary over an inner triangle (n=9).
    Hexagon,
    /// M octahedra in a row, joined by bridge edges (n=6m).
    Linked { m: usize },
    /// Two octahedra, one nested in the other: four layers (n=12).
    Nested,
    /// Seeded random connected drawing with outerplanarity index k.
    Random { n: usize, k: usize, seed: u64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum Overlay {
    /// Color the two forest classes.
    Forests,
    /// Color kept versus deleted vertices.
    Outerplane,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let outcome = run(cli.cmd, &mut out).and_then(|()| Ok(out.flush()?));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        // A reader that stopped listening (e.g. `| head`) is not our error.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cmd: Cmd, w: &mut impl Write) -> Result<()> {
    match cmd {
        Cmd::Gen { spec, out } => cmd_gen(&spec, out.as_deref(), w),
        Cmd::Layers { input } => cmd_layers(&load(&input)?, w),
        Cmd::Forests {
            input,
            trace,
            validate,
        } => cmd_forests(&load(&input)?, trace.as_deref(), validate, w),
        Cmd::Outerplane { input, k_pairwise } => cmd_outerplane(&load(&input)?, k_pairwise, w),
        Cmd::Oracle {
            input,
            forest,
            arboricity,
            outerplane,
            compare,
        } => {
            let target = if forest {
                Target::Forest
            } else if arboricity {
                Target::Arboricity
            } else {
                debug_assert!(outerplane);
                Target::Outerplane
            };
            cmd_oracle(&load(&input)?, target, compare, w)
        }
        Cmd::Render {
            input,
            dot,
            svg,
            overlay,
            out,
        } => {
            debug_assert!(dot ^ svg);
            cmd_render(&load(&input)?, dot, overlay, out.as_deref(), w)
        }
        Cmd::Scan {
            count,
            n_max,
            k,
            seed,
            bound_num,
            bound_den,
            out,
        } => cmd_scan(
            count,
            n_max,
            k,
            seed,
            bound_num,
            bound_den,
            out.as_deref(),
            w,
        ),
    }
}

/// Reads and embeds a graph document; `-` reads stdin.
fn load(path: &Path) -> Result<EmbeddedGraph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    GraphDocument::from_json(&text)?.to_graph()
}

fn emit(text: &str, out: Option<&Path>, w: &mut impl Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => w.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn join<I: IntoIterator<Item = VertexId>>(vs: I) -> String {
    let mut s = String::new();
    for v in vs {
        if !s.is_empty() {
            s.push(' ');
        }
        let _ = write!(s, "{v}");
    }
    s
}

/// `label: v v v`, or bare `label:` when the list is empty.
fn print_list<I: IntoIterator<Item = VertexId>>(
    label: &str,
    vs: I,
    w: &mut impl Write,
) -> Result<()> {
    let s = join(vs);
    if s.is_empty() {
        writeln!(w, "{label}:")?;
    } else {
        writeln!(w, "{label}: {s}")?;
    }
    Ok(())
}

fn cmd_gen(spec: &SpecCmd, out: Option<&Path>, w: &mut impl Write) -> Result<()> {
    let spec = match *spec {
        SpecCmd::Octahedron => GenSpec::Octahedron,
        SpecCmd::K4 => GenSpec::K4,
        SpecCmd::Hexagon => GenSpec::HexagonFixture,
        SpecCmd::Linked { m } => GenSpec::LinkedOctahedra { m },
        SpecCmd::Nested => GenSpec::NestedOctahedra,
        SpecCmd::Random { n, k, seed } => GenSpec::RandomKOuterplanar { n, k, seed },
    };
    let g = gen::generate(&spec)?;
    emit(&GraphDocument::from_graph(&g).to_json(), out, w)
}

fn cmd_layers(g: &EmbeddedGraph, w: &mut impl Write) -> Result<()> {
    let la = layers::layers(g);
    writeln!(w, "k={}", la.depth)?;
    for k in 1..=la.depth {
        print_list(&format!("L{k}"), la.set_of(k), w)?;
    }
    Ok(())
}

fn cmd_forests(
    g: &EmbeddedGraph,
    trace_out: Option<&Path>,
    validate: bool,
    w: &mut impl Write,
) -> Result<()> {
    let (p, trace) = forest2::partition_two_forests(g)?;
    writeln!(w, "n={}", g.n())?;
    print_list("f0", p.f0.iter().copied(), w)?;
    print_list("f1", p.f1.iter().copied(), w)?;
    writeln!(w, "sizes: {}/{}", p.f0.len(), p.f1.len())?;
    if let Some(path) = trace_out {
        std::fs::write(path, TraceDocument::from_trace(&trace).to_json())?;
    }
    if validate {
        forest2::replay_trace(g, &trace)?;
        writeln!(w, "replay=ok steps={}", trace.steps.len())?;
    }
    let valid = forest2::validate_partition(g, &p);
    writeln!(w, "valid={valid}")?;
    if !valid {
        return Err(twoplane::Error::InternalInvariantViolation(
            "partition failed independent validation".into(),
        )
        .into());
    }
    Ok(())
}

fn cmd_outerplane(g: &EmbeddedGraph, k_pairwise: bool, w: &mut impl Write) -> Result<()> {
    let r = if k_pairwise {
        outerplane::extract_k_pairwise(g)?
    } else {
        outerplane::extract_outerplane(g)?
    };
    let n = g.n();
    writeln!(w, "n={n}")?;
    print_list("kept", r.kept.iter().copied(), w)?;
    writeln!(
        w,
        "size={} bound={} deleted={}",
        r.kept.len(),
        (2 * n).div_ceil(3),
        r.deleted.len()
    )?;
    for phase in 1..=3u8 {
        let vs = r
            .deleted
            .iter()
            .filter(|&&(_, p)| p == phase)
            .map(|&(v, _)| v);
        print_list(&format!("phase{phase}"), vs, w)?;
    }
    if k_pairwise {
        let index = layers::outerplanarity_index(&g.induced(&r.kept)?);
        writeln!(w, "index={index}")?;
    }
    Ok(())
}

enum Target {
    Forest,
    Arboricity,
    Outerplane,
}

/// Size cap override from the environment, if set.
fn cap_override() -> Result<Option<usize>> {
    match std::env::var(CAP_VAR) {
        Ok(raw) => raw
            .parse::<usize>()
            .map(Some)
            .map_err(|_| CliError::Value(format!("{CAP_VAR}={raw} is not a size"))),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Value(format!("{CAP_VAR}: {e}"))),
    }
}

fn cmd_oracle(g: &EmbeddedGraph, target: Target, compare: bool, w: &mut impl Write) -> Result<()> {
    let cap = cap_override()?;
    match target {
        Target::Forest => {
            let wit = match cap {
                Some(c) => oracle::max_induced_forest_exact_with_cap(g, c)?,
                None => oracle::max_induced_forest_exact(g)?,
            };
            writeln!(w, "forest optimum={}", wit.len())?;
            print_list("witness", wit.iter().copied(), w)?;
            if compare {
                let (p, _) = forest2::partition_two_forests(g)?;
                let algorithm = p.f0.len().max(p.f1.len());
                cross_check("larger forest class", algorithm, wit.len(), w)?;
            }
        }
        Target::Arboricity => {
            let t = match cap {
                Some(c) => oracle::vertex_arboricity_exact_with_cap(g, c)?,
                None => oracle::vertex_arboricity_exact(g)?,
            };
            writeln!(w, "arboricity optimum={t}")?;
            if compare {
                // A successful split into two forests bounds the arboricity.
                forest2::partition_two_forests(g)?;
                let ok = t <= 2;
                writeln!(w, "algorithm=2 ok={ok}")?;
                if !ok {
                    return Err(twoplane::Error::InternalInvariantViolation(
                        "two-forest split exists but exact arboricity exceeds 2".into(),
                    )
                    .into());
                }
            }
        }
        Target::Outerplane => {
            let wit = match cap {
                Some(c) => oracle::max_induced_outerplane_exact_with_cap(g, c)?,
                None => oracle::max_induced_outerplane_exact(g)?,
            };
            writeln!(w, "outerplane optimum={}", wit.len())?;
            print_list("witness", wit.iter().copied(), w)?;
            if compare {
                let r = outerplane::extract_outerplane(g)?;
                cross_check("extracted subgraph", r.kept.len(), wit.len(), w)?;
            }
        }
    }
    Ok(())
}

fn cross_check(what: &str, algorithm: usize, optimum: usize, w: &mut impl Write) -> Result<()> {
    let ok = algorithm <= optimum;
    writeln!(w, "algorithm={algorithm} ok={ok}")?;
    if ok {
        Ok(())
    } else {
        Err(twoplane::Error::InternalInvariantViolation(format!(
            "{what} has {algorithm} vertices, exact optimum is {optimum}"
        ))
        .into())
    }
}

fn cmd_render(
    g: &EmbeddedGraph,
    dot: bool,
    overlay: Option<Overlay>,
    out: Option<&Path>,
    w: &mut impl Write,
) -> Result<()> {
    let classes: Option<Classes> = match overlay {
        None => None,
        Some(Overlay::Forests) => {
            let (p, _) = forest2::partition_two_forests(g)?;
            Some(
                p.f0.iter()
                    .map(|&v| (v, 0))
                    .chain(p.f1.iter().map(|&v| (v, 1)))
                    .collect(),
            )
        }
        Some(Overlay::Outerplane) => {
            let r = outerplane::extract_outerplane(g)?;
            Some(
                r.kept
                    .iter()
                    .map(|&v| (v, 0))
                    .chain(r.deleted.iter().map(|&(v, _)| (v, 1)))
                    .collect(),
            )
        }
    };
    let text = if dot {
        render::dot(g, classes.as_ref())
    } else {
        render::svg(g, classes.as_ref())
    };
    emit(&text, out, w)
}

#[allow(clippy::too_many_arguments)]
fn cmd_scan(
    count: usize,
    n_max: usize,
    k: usize,
    seed: u64,
    bound_num: u64,
    bound_den: u64,
    out: Option<&Path>,
    w: &mut impl Write,
) -> Result<()> {
    let cap = cap_override()?.unwrap_or(oracle::OUTERPLANE_CAP);
    let params = oracle::ScanParams {
        count,
        n_max,
        k,
        seed,
        bound_num,
        bound_den,
        cap,
    };
    let report = oracle::scan_conjecture(&params)?;
    writeln!(
        w,
        "tested={} skipped={} violations={}",
        report.tested,
        report.skipped,
        report.violations.len()
    )?;
    if let Some(mc) = &report.min_case {
        writeln!(
            w,
            "min ratio: {}/{} (k={} seed={})",
            mc.optimum, mc.n, mc.k, mc.seed
        )?;
    }
    if let Some(first) = report.violations.first() {
        writeln!(
            w,
            "violation: optimum {} of n={} under {}/{} (k={} seed={})",
            first.optimum, first.n, bound_num, bound_den, first.k, first.seed
        )?;
        if let Some(path) = out {
            let g = gen::random_k_outerplanar(first.n, first.k, first.seed)?;
            std::fs::write(path, GraphDocument::from_graph(&g).to_json())?;
            writeln!(w, "violator written to {}", path.display())?;
        }
    }
    Ok(())
}
