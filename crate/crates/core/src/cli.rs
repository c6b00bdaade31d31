//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the exit code with the captured output.
//!
//! Exit codes: 0 when the predicate holds or the command succeeded, 1 when
//! it fails (including a failed realization or a forbidden minor found),
//! 2 on usage or input errors.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::asc::{self, check_median_property, realize_as_clique_complex, SimplicialComplex};
use crate::cubes::{
    clique_polynomial, cube_polynomial, is_daisy, simplex_graph, simplex_preimage, theorem1_report,
};
use crate::error::{Error, Result};
use crate::families::{generate, generate_labelled, path, Family};
use crate::format;
use crate::graph::Graph;
use crate::limits::Limits;
use crate::median::is_median_graph;
use crate::partial_cube::LabelledPartialCube;
use crate::pcminor::{apply_spec, crossing_graph, first_forbidden_minor, has_pc_minor, MinorSpec};
use crate::theta::{all_class_data, embed, is_partial_cube};

#[derive(Parser, Debug)]
#[command(
    name = "simplexgraph",
    about = "Simplex graphs, partial cubes and clique complexes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input format.
    #[arg(long, global = true, value_enum)]
    format: Option<TextFormat>,

    /// Output format; defaults to the input format.
    #[arg(long, global = true, value_enum)]
    emit: Option<Emit>,

    #[arg(long, global = true, default_value_t = Limits::DEFAULT_IDIM)]
    cap_idim: usize,

    #[arg(long, global = true, default_value_t = Limits::DEFAULT_CLIQUES)]
    cap_cliques: usize,

    #[arg(long, global = true, default_value_t = Limits::DEFAULT_FACE_TRIPLES)]
    cap_triples: usize,

    /// Worker threads for the parallel searches.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Edges,
    Labels,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Edges,
    Labels,
    Dot,
    Complex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Predicate {
    PartialCube,
    Median,
    Daisy,
    Simplex,
    P4Free,
    Peripheral,
    DegIdim,
}

#[derive(Args, Debug)]
struct Input {
    /// Input file; standard input when omitted.
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a named graph.
    Gen { family: String, n: usize },
    /// Test a predicate; exit 0 if it holds, 1 if not.
    Check {
        #[arg(value_enum)]
        predicate: Predicate,
        #[command(flatten)]
        input: Input,
    },
    /// Evaluate the five simplex-graph conditions with witnesses.
    Theorem1 {
        #[command(flatten)]
        input: Input,
    },
    /// Label a partial cube, with `base` as the all-zero vertex.
    Embed {
        #[arg(long, default_value_t = 0)]
        base: usize,
        #[command(flatten)]
        input: Input,
    },
    /// List the Θ-classes with their W, U and F sizes.
    Theta {
        #[command(flatten)]
        input: Input,
    },
    CrossingGraph {
        #[command(flatten)]
        input: Input,
    },
    /// Cube or clique polynomial, ascending coefficients.
    Poly {
        #[arg(long, conflicts_with = "clique", required_unless_present = "clique")]
        cube: bool,
        #[arg(long)]
        clique: bool,
        #[command(flatten)]
        input: Input,
    },
    /// The simplex graph of the input.
    SimplexOf {
        #[command(flatten)]
        input: Input,
    },
    /// A graph whose simplex graph is the input; exit 1 if none exists.
    Preimage {
        #[command(flatten)]
        input: Input,
    },
    /// Search for forbidden pc-minors, or apply a spec such as `KC01`.
    Minor {
        #[arg(long, num_args = 1.., required_unless_present = "apply")]
        forbidden: Vec<PathBuf>,
        #[arg(long, conflicts_with = "forbidden")]
        apply: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    /// Abstract simplicial complexes.
    Asc {
        #[command(subcommand)]
        action: AscCommand,
    },
}

#[derive(Subcommand, Debug)]
enum AscCommand {
    /// Median property (weak: facet triples only).
    Check {
        #[arg(long)]
        weak: bool,
        #[command(flatten)]
        input: Input,
    },
    /// A graph whose clique complex is the input; exit 1 if none exists.
    Realize {
        #[command(flatten)]
        input: Input,
    },
    /// Clique complex of a graph.
    CliqueComplex {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn flag(holds: bool, stdout: String) -> Self {
        Outcome {
            code: if holds { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }
}

/// Runs the command line `args` (program name first). Standard input is
/// read only by commands that need it.
pub fn run<I, T>(args: I, stdin: &mut (dyn Read + Send)) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.max(1))
        .build()
    {
        Ok(p) => p,
        Err(e) => return usage_error(e.to_string()),
    };
    match pool.install(|| execute(&cli, stdin)) {
        Ok(out) => out,
        Err(e) => usage_error(e.to_string()),
    }
}

fn usage_error(message: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}

/// Parsed input of the graph formats.
enum GraphInput {
    Plain(Graph),
    Labelled(LabelledPartialCube),
}

impl GraphInput {
    fn graph(&self) -> &Graph {
        match self {
            GraphInput::Plain(g) => g,
            GraphInput::Labelled(c) => c.graph(),
        }
    }

    /// The given labelling, or the embedding rooted at vertex 0.
    fn cube(&self) -> Result<LabelledPartialCube> {
        match self {
            GraphInput::Plain(g) => embed(g, 0),
            GraphInput::Labelled(c) => Ok(c.clone()),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    limits: Limits,
}

impl Ctx<'_> {
    fn read_text(&self, input: &Input, stdin: &mut (dyn Read + Send)) -> Result<String> {
        match &input.input {
            Some(p) => fs::read_to_string(p)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", p.display()))),
            None => {
                let mut s = String::new();
                stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Error::InvalidParameter(format!("stdin: {e}")))?;
                Ok(s)
            }
        }
    }

    fn input_format(&self) -> TextFormat {
        self.cli.format.unwrap_or(TextFormat::Edges)
    }

    fn parse_graph(&self, text: &str) -> Result<GraphInput> {
        match self.input_format() {
            TextFormat::Edges => format::parse_edge_list(text).map(GraphInput::Plain),
            TextFormat::Labels => format::parse_labels(text).map(|r| GraphInput::Labelled(r.cube)),
            TextFormat::Complex => Err(Error::InvalidParameter(
                "this command reads a graph, not a complex".into(),
            )),
        }
    }

    fn read_graph(&self, input: &Input, stdin: &mut (dyn Read + Send)) -> Result<GraphInput> {
        let text = self.read_text(input, stdin)?;
        self.parse_graph(&text)
    }

    fn read_complex(
        &self,
        input: &Input,
        stdin: &mut (dyn Read + Send),
    ) -> Result<SimplicialComplex> {
        if self.cli.format.is_some_and(|f| f != TextFormat::Complex) {
            return Err(Error::InvalidParameter(
                "this command reads a complex".into(),
            ));
        }
        format::parse_complex(&self.read_text(input, stdin)?)
    }

    fn graph_emit(&self) -> Emit {
        self.cli.emit.unwrap_or(match self.input_format() {
            TextFormat::Labels => Emit::Labels,
            _ => Emit::Edges,
        })
    }

    /// Writes a graph; `labelled` is used for label output when present,
    /// otherwise the graph is embedded.
    fn emit_graph(&self, g: &Graph, labelled: Option<&LabelledPartialCube>) -> Result<String> {
        match self.graph_emit() {
            Emit::Edges => Ok(format::write_edge_list(g)),
            Emit::Dot => Ok(format::write_dot(
                g,
                labelled
                    .map(|c| c.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>())
                    .as_deref(),
            )),
            Emit::Labels => match labelled {
                Some(c) => Ok(format::write_labels(c)),
                None => Ok(format::write_labels(&embed(g, 0)?)),
            },
            Emit::Complex => Err(Error::InvalidParameter(
                "a graph cannot be written as a complex".into(),
            )),
        }
    }

    fn emit_cube(&self, cube: &LabelledPartialCube) -> Result<String> {
        self.emit_graph(cube.graph(), Some(cube))
    }
}

fn execute(cli: &Cli, stdin: &mut (dyn Read + Send)) -> Result<Outcome> {
    let ctx = Ctx {
        cli,
        limits: Limits {
            idim: cli.cap_idim,
            cliques: cli.cap_cliques,
            face_triples: cli.cap_triples,
        },
    };
    let limits = &ctx.limits;
    match &cli.command {
        Command::Gen { family, n } => {
            let family: Family = family.parse()?;
            let g = generate(family, *n)?;
            let labelled = match ctx.graph_emit() {
                Emit::Labels | Emit::Dot => generate_labelled(family, *n)?,
                _ => None,
            };
            Ok(Outcome::ok(ctx.emit_graph(&g, labelled.as_ref())?))
        }
        Command::Check { predicate, input } => {
            let gi = ctx.read_graph(input, stdin)?;
            let holds = check(*predicate, &gi, limits)?;
            Ok(Outcome::flag(holds, format!("{holds}\n")))
        }
        Command::Theorem1 { input } => {
            let gi = ctx.read_graph(input, stdin)?;
            let report = theorem1_report(gi.graph(), limits)?;
            Ok(Outcome::flag(report.simplex, format!("{report}\n")))
        }
        Command::Embed { base, input } => {
            let gi = ctx.read_graph(input, stdin)?;
            let g = gi.graph();
            if *base >= g.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: *base,
                    order: g.vertex_count(),
                });
            }
            let cube = embed(g, *base)?;
            let out = match cli.emit {
                None => format::write_labels(&cube),
                Some(_) => ctx.emit_cube(&cube)?,
            };
            Ok(Outcome::ok(out))
        }
        Command::Theta { input } => {
            let cube = ctx.read_graph(input, stdin)?.cube()?;
            let mut out = format!("idim {}\n", cube.idim());
            for d in all_class_data(&cube) {
                let side = match (d.peripheral0, d.peripheral1) {
                    (true, true) => "both",
                    (true, false) => "0",
                    (false, true) => "1",
                    (false, false) => "none",
                };
                let edges: Vec<String> = d.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                out.push_str(&format!(
                    "class {} F={} W0={} W1={} U0={} U1={} peripheral={} edges {}\n",
                    d.index,
                    d.edges.len(),
                    d.w0.len(),
                    d.w1.len(),
                    d.u0.len(),
                    d.u1.len(),
                    side,
                    edges.join(" ")
                ));
            }
            Ok(Outcome::ok(out))
        }
        Command::CrossingGraph { input } => {
            let cube = ctx.read_graph(input, stdin)?.cube()?;
            let g = crossing_graph(&cube);
            let out = match ctx.graph_emit() {
                Emit::Labels if cli.emit.is_none() => format::write_edge_list(&g),
                _ => ctx.emit_graph(&g, None)?,
            };
            Ok(Outcome::ok(out))
        }
        Command::Poly { cube, input, .. } => {
            let gi = ctx.read_graph(input, stdin)?;
            let p = if *cube {
                cube_polynomial(&gi.cube()?)
            } else {
                clique_polynomial(gi.graph(), limits)?
            };
            Ok(Outcome::ok(format!("{p}\n")))
        }
        Command::SimplexOf { input } => {
            let gi = ctx.read_graph(input, stdin)?;
            let s = simplex_graph(gi.graph(), limits)?;
            Ok(Outcome::ok(ctx.emit_cube(&s)?))
        }
        Command::Preimage { input } => {
            let gi = ctx.read_graph(input, stdin)?;
            match simplex_preimage(gi.graph(), limits) {
                Ok(Some(p)) => {
                    let out = match ctx.graph_emit() {
                        Emit::Labels if cli.emit.is_none() => format::write_edge_list(&p.graph),
                        _ => ctx.emit_graph(&p.graph, None)?,
                    };
                    Ok(Outcome::ok(out))
                }
                Ok(None) => Ok(not_found("not a simplex graph")),
                Err(Error::NotMedian) => Ok(not_found("not a simplex graph: not median")),
                Err(e) => Err(e),
            }
        }
        Command::Minor {
            forbidden,
            apply,
            input,
        } => {
            let cube = ctx.read_graph(input, stdin)?.cube()?;
            if let Some(spec) = apply {
                let spec: MinorSpec = spec.parse()?;
                let minor = apply_spec(&cube, &spec)?;
                return Ok(Outcome::ok(ctx.emit_cube(&minor.cube)?));
            }
            let graphs = forbidden
                .iter()
                .map(|p| {
                    let text = fs::read_to_string(p)
                        .map_err(|e| Error::InvalidParameter(format!("{}: {e}", p.display())))?;
                    Ok(ctx.parse_graph(&text)?.graph().clone())
                })
                .collect::<Result<Vec<_>>>()?;
            match first_forbidden_minor(&cube, &graphs, limits)? {
                Some((pos, spec)) => Ok(Outcome::flag(
                    false,
                    format!("minor {} spec {spec}\n", forbidden[pos].display()),
                )),
                None => Ok(Outcome::flag(true, "free\n".into())),
            }
        }
        Command::Asc { action } => match action {
            AscCommand::Check { weak, input } => {
                let cx = ctx.read_complex(input, stdin)?;
                let res = check_median_property(&cx, *weak, limits)?;
                let mut out = format!("{}\n", res.holds);
                if let Some(w) = &res.witness {
                    let show = |f: &Vec<usize>| {
                        if f.is_empty() {
                            "-".to_string()
                        } else {
                            f.iter()
                                .map(|e| (e + 1).to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        }
                    };
                    out.push_str(&format!(
                        "witness {{{}}} {{{}}} {{{}}}\n",
                        show(&w[0]),
                        show(&w[1]),
                        show(&w[2])
                    ));
                }
                Ok(Outcome::flag(res.holds, out))
            }
            AscCommand::Realize { input } => {
                let cx = ctx.read_complex(input, stdin)?;
                match realize_as_clique_complex(&cx, limits)? {
                    Some(r) => {
                        let emit = cli.emit.unwrap_or(Emit::Edges);
                        let out = match emit {
                            Emit::Edges => {
                                let mut s = String::new();
                                for (v, e) in r.elements.iter().enumerate() {
                                    s.push_str(&format!("# vertex {v} is element {}\n", e + 1));
                                }
                                let skipped = cx.ground_size() - r.elements.len();
                                if skipped > 0 {
                                    s.push_str(&format!(
                                        "# {skipped} element(s) in no face are left out\n"
                                    ));
                                }
                                s + &format::write_edge_list(&r.graph)
                            }
                            Emit::Dot => {
                                let names: Vec<String> =
                                    r.elements.iter().map(|e| (e + 1).to_string()).collect();
                                format::write_dot(&r.graph, Some(&names))
                            }
                            Emit::Complex => {
                                format::write_complex(&r.clique_complex(cx.ground_size(), limits)?)
                            }
                            Emit::Labels => format::write_labels(&embed(&r.graph, 0)?),
                        };
                        Ok(Outcome::ok(out))
                    }
                    None => Ok(not_found("not a clique complex")),
                }
            }
            AscCommand::CliqueComplex { input } => {
                let gi = ctx.read_graph(input, stdin)?;
                let cx = asc::clique_complex(gi.graph(), limits)?;
                Ok(Outcome::ok(format::write_complex(&cx)))
            }
        },
    }
}

fn not_found(message: &str) -> Outcome {
    Outcome {
        code: 1,
        stdout: String::new(),
        stderr: format!("{message}\n"),
    }
}

fn check(predicate: Predicate, gi: &GraphInput, limits: &Limits) -> Result<bool> {
    let g = gi.graph();
    if predicate == Predicate::Median {
        return Ok(is_median_graph(g));
    }
    if predicate == Predicate::Simplex {
        return match simplex_preimage(g, limits) {
            Ok(p) => Ok(p.is_some()),
            Err(Error::NotMedian) => Ok(false),
            Err(e) => Err(e),
        };
    }
    if !is_partial_cube(g) {
        return Ok(false);
    }
    let cube = gi.cube()?;
    Ok(match predicate {
        Predicate::PartialCube => true,
        Predicate::Daisy => is_daisy(&cube).is_some(),
        Predicate::P4Free => has_pc_minor(&cube, &path(4), limits)?.is_none(),
        Predicate::Peripheral => all_class_data(&cube).iter().all(|d| d.is_peripheral()),
        Predicate::DegIdim => (0..g.vertex_count()).any(|v| g.degree(v) == cube.idim()),
        Predicate::Median | Predicate::Simplex => unreachable!(),
    })
}
