//! Command-line front end for `kunneth-core`.
//!
//! Every command reads graphs from `named:` specs, JSON files or stdin and
//! writes one JSON document per line. `--pretty` switches to aligned
//! tables. Exit codes: 0 success, 1 a verification failed, 2 bad input,
//! 3 a size cap was hit.

pub mod formats;
pub mod pretty;

use std::io::Read;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kunneth_core::derham::Comparison;
use kunneth_core::homology::{betti, kunneth_check, poincare_polynomial, OrientedComplex};
use kunneth_core::product::{enhance_capped, graph_product_capped, refine_sequence, ring_product};
use kunneth_core::topology::{self, Limits, Tri};
use kunneth_core::{BigRational, Error, Graph};
use serde_json::{json, Value};

use formats::{graph_from_json, graph_to_json, parse_chain, parse_named, to_dot, write_triplets};

/// Largest graph handed to the exact chromatic search.
pub const CHROMATIC_SEARCH_VERTICES: usize = 10;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0} (raise --max-product-vertices)")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

fn core_err(e: Error) -> CliError {
    match e {
        Error::SizeCap { .. } => CliError::Cap(e.to_string()),
        other => CliError::Input(other.to_string()),
    }
}

/// Graph products, refinements and their topology.
#[derive(Parser, Debug)]
#[command(name = "kunneth", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalOpts,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Aligned tables instead of JSON lines
    #[arg(long, global = true)]
    pub pretty: bool,
    #[arg(long, global = true, default_value_t = kunneth_core::product::DEFAULT_MAX_VERTICES)]
    pub max_product_vertices: usize,
    /// Homotopy searches give "unknown" above this many vertices
    #[arg(long, global = true, default_value_t = Limits::default().max_vertices)]
    pub max_recursion_vertices: usize,
    /// Worker threads for rank computations (default: all cores)
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

/// A graph source: `named:NAME[:P1,P2,...]`, a JSON file, or `-` for stdin.
#[derive(Args, Debug, Clone)]
pub struct One {
    #[arg(default_value = "-")]
    pub graph: String,
}

#[derive(Args, Debug, Clone)]
pub struct Two {
    pub left: String,
    pub right: String,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Build a graph from a named family or by decoding a chain
    New {
        #[arg(required_unless_present = "from_chain")]
        graph: Option<String>,
        /// Chain text such as "1*a1 + 1*a2 + 1*a1.a2"
        #[arg(long, conflicts_with = "graph")]
        from_chain: Option<String>,
    },
    /// Product of two or more graphs
    Product {
        #[arg(num_args = 2.., required = true)]
        graphs: Vec<String>,
    },
    /// Refinement G x K1: one vertex per simplex
    Enhance(One),
    /// Iterated refinements
    Refine {
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Join of two graphs
    Join(Two),
    /// Join with the 0-sphere
    Suspend(One),
    /// Betti numbers b_0 .. b_d
    Betti(One),
    /// Poincare polynomial coefficients, trailing zeros dropped
    Poincare(One),
    /// Inductive dimension
    Dim {
        #[arg(default_value = "-")]
        graph: String,
        /// Also list the local dimension at every vertex
        #[arg(long)]
        local: bool,
    },
    /// Euler characteristic of a graph or of a chain
    Euler {
        #[arg(default_value = "-", conflicts_with = "chain")]
        graph: String,
        #[arg(long)]
        chain: Option<String>,
    },
    /// Vertex curvatures, or simplex curvatures with --simplex
    Curvature {
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long)]
        simplex: bool,
    },
    /// Chromatic data of a graph, or of the product of two graphs
    Chromatic {
        #[arg(num_args = 1..=2, required = true)]
        graphs: Vec<String>,
    },
    /// Contractibility: true, false or unknown
    Contractible(One),
    /// Is the graph a d-sphere (or geometric of dimension d)?
    SphereCheck {
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long)]
        dim: isize,
        /// Check that every unit sphere is a (d-1)-sphere instead
        #[arg(long)]
        geometric: bool,
    },
    /// Compare the Poincare polynomial of a product with the product of polynomials
    Kunneth(Two),
    /// Compare tensor-product cochains with cochains of the product graph
    DerhamCheck(Two),
    /// Write a graph as JSON, DOT, a chain, or its derivative as triplets
    Export {
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Degree of the derivative for the triplet format
        #[arg(long, default_value_t = 0)]
        degree: usize,
        /// Export the form Laplacian L_k instead of d_k
        #[arg(long)]
        laplacian: bool,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Triplet,
    Chain,
}

/// Result of one command: JSON (with a verification flag) or raw text.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Json { value: Value, ok: bool },
    Text(String),
}

fn ok(value: Value) -> Output {
    Output::Json { value, ok: true }
}

fn frac(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

fn tri(t: Tri) -> Value {
    Value::String(t.as_str().to_string())
}

/// Reads graphs, handing out stdin at most once.
pub struct Loader<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl<'a> Loader<'a> {
    pub fn new(stdin: &'a mut dyn Read) -> Self {
        Loader { stdin, used: false }
    }

    pub fn load(&mut self, source: &str) -> Result<Graph, CliError> {
        if source.starts_with("named:") {
            return parse_named(source);
        }
        let text = if source == "-" {
            if self.used {
                return Err(CliError::Input("stdin can only supply one graph".into()));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| CliError::Input(format!("reading stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(Path::new(source)).map_err(|e| CliError::Input(format!("{source}: {e}")))?
        };
        graph_from_json(&text)
    }
}

fn limits(opts: &GlobalOpts) -> Limits {
    Limits { max_vertices: opts.max_recursion_vertices, ..Limits::default() }
}

fn with_graph(g: &Graph, extra: Value) -> Value {
    let mut v = graph_to_json(g);
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

fn summary(g: &Graph) -> Value {
    json!({
        "f_vector": g.f_vector().0,
        "euler": g.euler_characteristic(),
        "dim": frac(&topology::inductive_dimension(g).total),
    })
}

fn simplex_json(s: &kunneth_core::Simplex) -> Value {
    json!(s.vertices())
}

pub fn execute(cmd: &Command, opts: &GlobalOpts, loader: &mut Loader) -> Result<Output, CliError> {
    let cap = opts.max_product_vertices;
    Ok(match cmd {
        Command::New { graph, from_chain } => {
            let g = match (graph, from_chain) {
                (_, Some(text)) => parse_chain(text)?.decode(),
                (Some(src), None) => loader.load(src)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            ok(graph_to_json(&g))
        }
        Command::Product { graphs } => {
            let factors = graphs.iter().map(|s| loader.load(s)).collect::<Result<Vec<_>, _>>()?;
            let labels: Vec<&[String]> = factors.iter().map(Graph::labels).collect();
            let (g, provenance) = if let [a, b] = &factors[..] {
                let p = graph_product_capped(a, b, cap).map_err(core_err)?;
                let prov: Vec<Value> = p.provenance.iter().map(|(x, y)| json!([simplex_json(x), simplex_json(y)])).collect();
                (p.graph, prov)
            } else {
                let p = ring_product(&factors, cap).map_err(core_err)?;
                let prov = p.provenance.iter().map(|v| Value::Array(v.iter().map(simplex_json).collect())).collect();
                (p.graph, prov)
            };
            let mut extra = summary(&g);
            extra["factors"] = json!(labels);
            extra["provenance"] = Value::Array(provenance);
            ok(with_graph(&g, extra))
        }
        Command::Enhance(One { graph }) => {
            let g = enhance_capped(&loader.load(graph)?, cap).map_err(core_err)?;
            ok(with_graph(&g, summary(&g)))
        }
        Command::Refine { graph, steps } => {
            let g = loader.load(graph)?;
            let r = refine_sequence(&g, *steps, cap);
            let Some(last) = r.steps.last() else {
                return Err(CliError::Cap(format!("first refinement exceeds the limit of {cap} vertices")));
            };
            let rows: Vec<Value> = r
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let mut row = summary(s);
                    row["step"] = json!(i + 1);
                    row
                })
                .collect();
            ok(with_graph(last, json!({ "steps": rows, "truncated": r.truncated })))
        }
        Command::Join(Two { left, right }) => {
            let (a, b) = (loader.load(left)?, loader.load(right)?);
            ok(graph_to_json(&a.join(&b)))
        }
        Command::Suspend(One { graph }) => ok(graph_to_json(&loader.load(graph)?.suspension())),
        Command::Betti(One { graph }) => ok(json!({ "betti": betti(&loader.load(graph)?).0 })),
        Command::Poincare(One { graph }) => {
            ok(json!({ "poincare": poincare_polynomial(&loader.load(graph)?).coefficients() }))
        }
        Command::Dim { graph, local } => {
            let r = topology::inductive_dimension(&loader.load(graph)?);
            let mut v = json!({ "dim": frac(&r.total) });
            if *local {
                v["local"] = Value::Array(r.per_vertex.iter().map(frac).collect());
            }
            ok(v)
        }
        Command::Euler { graph, chain } => match chain {
            Some(text) => ok(json!({ "euler": parse_chain(text)?.euler() })),
            None => {
                let g = loader.load(graph)?;
                ok(json!({ "euler": g.euler_characteristic(), "f_vector": g.f_vector().0 }))
            }
        },
        Command::Curvature { graph, simplex } => {
            let g = loader.load(graph)?;
            let (values, labels) = if *simplex {
                let g1 = enhance_capped(&g, cap).map_err(core_err)?;
                (topology::curvature(&g1), g1.labels().to_vec())
            } else {
                (topology::curvature(&g), g.labels().to_vec())
            };
            let total = values.iter().fold(BigRational::from_integer(0.into()), |a, b| a + b);
            ok(json!({
                "labels": labels,
                "curvature": values.iter().map(frac).collect::<Vec<_>>(),
                "total": frac(&total),
                "euler": g.euler_characteristic(),
            }))
        }
        Command::Chromatic { graphs } => chromatic(graphs, cap, loader)?,
        Command::Contractible(One { graph }) => {
            let g = loader.load(graph)?;
            ok(json!({ "contractible": tri(topology::contractible_with(&g, limits(opts))) }))
        }
        Command::SphereCheck { graph, dim, geometric } => {
            let g = loader.load(graph)?;
            if *geometric {
                ok(json!({ "geometric": tri(topology::is_geometric_with(&g, *dim, limits(opts))), "dim": dim }))
            } else {
                ok(json!({ "sphere": tri(topology::is_sphere_with(&g, *dim, limits(opts))), "dim": dim }))
            }
        }
        Command::Kunneth(Two { left, right }) => {
            let (a, b) = (loader.load(left)?, loader.load(right)?);
            graph_product_capped(&a, &b, cap).map_err(core_err)?;
            let r = kunneth_check(&a, &b);
            Output::Json { value: json!({ "lhs": r.lhs.coefficients(), "rhs": r.rhs.coefficients(), "ok": r.holds() }), ok: r.holds() }
        }
        Command::DerhamCheck(Two { left, right }) => {
            let (a, b) = (loader.load(left)?, loader.load(right)?);
            graph_product_capped(&a, &b, cap).map_err(core_err)?;
            derham_check(&a, &b)
        }
        Command::Export { graph, format, degree, laplacian } => {
            let g = loader.load(graph)?;
            match format {
                Format::Json => ok(graph_to_json(&g)),
                Format::Dot => Output::Text(to_dot(&g)),
                Format::Chain => Output::Text(format!("{}\n", kunneth_core::Chain::encode(&g, 0))),
                Format::Triplet => {
                    let c = OrientedComplex::new(&g);
                    let m = if *laplacian {
                        if *degree >= c.len() {
                            return Err(CliError::Input(format!("no {degree}-simplices; top degree is {}", c.len() as isize - 1)));
                        }
                        kunneth_core::homology::laplacian_blocks(&c).swap_remove(*degree)
                    } else {
                        if *degree + 1 >= c.len() {
                            return Err(CliError::Input(format!("no derivative d_{degree}; the complex has {} grades", c.len())));
                        }
                        c.derivative(*degree)
                    };
                    Output::Text(write_triplets(&m))
                }
            }
        }
    })
}

fn chromatic(graphs: &[String], cap: usize, loader: &mut Loader) -> Result<Output, CliError> {
    let gs = graphs.iter().map(|s| loader.load(s)).collect::<Result<Vec<_>, _>>()?;
    if let [g] = &gs[..] {
        let exact = topology::chromatic_number(g, CHROMATIC_SEARCH_VERTICES);
        let g1 = enhance_capped(g, cap).map_err(core_err)?;
        return Ok(ok(json!({
            "clique_number": g.clique_number(),
            "chromatic": exact,
            "refined_clique_number": g1.clique_number(),
            "odd_hole": topology::odd_hole(g),
        })));
    }
    let (g, h) = (&gs[0], &gs[1]);
    let p = graph_product_capped(g, h, cap).map_err(core_err)?;
    let colors = topology::dim_coloring(&p);
    let used = colors.iter().max().map_or(0, |m| m + 1);
    let proper = topology::is_proper_coloring(&p.graph, &colors);
    let predicted = topology::product_chromatic(g, h);
    let clique = p.graph.clique_number();
    let holds = proper && used == predicted && clique == predicted;
    Ok(Output::Json {
        value: json!({
            "product_chromatic": predicted,
            "clique_number": clique,
            "dim_coloring_colors": used,
            "dim_coloring_proper": proper,
            "ok": holds,
        }),
        ok: holds,
    })
}

fn derham_check(g: &Graph, h: &Graph) -> Output {
    let cmp = Comparison::new(g, h);
    let cm = cmp.chain_map_check();
    let degrees: Vec<Value> = (0..cmp.top_degree().map_or(0, |t| t + 1))
        .map(|k| {
            let r = cmp.cohomology_iso_check(k);
            json!({
                "degree": k,
                "classes": r.classes,
                "cocycles": r.cocycles,
                "rank_excess": r.rank_excess,
                "whitney_betti": r.whitney_betti,
                "derham_betti": r.derham_betti,
                "ok": r.holds(),
            })
        })
        .collect();
    let hp = cmp.harmonic_product_check();
    let iso = degrees.iter().all(|d| d["ok"] == json!(true));
    let holds = cm.holds() && iso && hp.holds();
    Output::Json {
        value: json!({
            "tensor_dims": cmp.tensor.dims(),
            "whitney_f_vector": cmp.whitney.f_vector(),
            "derham_betti": cmp.tensor.betti().0,
            "whitney_betti": betti(&cmp.product.graph).0,
            "chain_map": cm.holds(),
            "degrees": degrees,
            "harmonic_products": hp.holds(),
            "ok": holds,
        }),
        ok: holds,
    }
}

/// Exit code, stdout and stderr of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs a parsed command line.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let mut loader = Loader::new(stdin);
    match execute(&cli.command, &cli.global, &mut loader) {
        Ok(Output::Text(t)) => Outcome { code: 0, stdout: t, stderr: String::new() },
        Ok(Output::Json { value, ok }) => {
            let stdout = if cli.global.pretty { pretty::render(&value) } else { format!("{value}\n") };
            let stderr = if ok { String::new() } else { "verification failed\n".to_string() };
            Outcome { code: if ok { 0 } else { 1 }, stdout, stderr }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdin),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}
