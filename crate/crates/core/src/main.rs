use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use neutrograph::io::{self, envelope, matrix_json};
use neutrograph::matrix::{self, MatrixKind};
use neutrograph::subgraph::{self, SubgraphSpace};
use neutrograph::subset::{self, SubsetVertexGraph};
use neutrograph::transform::{self, ComplementMode};
use neutrograph::walks::{self, CircuitCensus};
use neutrograph::{BigUint, Error, Neutro, NeutroGraph, NeutroMatrix};

#[derive(Parser)]
#[command(name = "neutrograph", version, about = "Analyse strong neutrosophic graphs")]
struct Cli {
    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kind profile, graph class and connectivity profile.
    Classify { file: PathBuf },
    /// Kind complement of a graph.
    Complement {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "edge")]
        mode: ModeArg,
    },
    /// Search for a kind-preserving isomorphism onto the complement.
    Selfcomp {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "edge")]
        mode: ModeArg,
        #[arg(long, env = "NEUTROGRAPH_CAP", default_value_t = transform::DEFAULT_SELF_COMPLEMENT_CAP)]
        cap: usize,
    },
    /// List circuits and their census by class.
    Circuits {
        file: PathBuf,
        #[arg(long, env = "NEUTROGRAPH_CAP", default_value_t = walks::DEFAULT_CIRCUIT_CAP)]
        cap: usize,
    },
    /// Whether an Eulerian (unicursal) trail exists.
    Eulerian { file: PathBuf },
    /// Adjacency or incidence matrix.
    Matrix {
        file: PathBuf,
        #[arg(long)]
        incidence: bool,
    },
    /// k-th power of the adjacency matrix (walk counts).
    Power {
        file: PathBuf,
        #[arg(long, short)]
        k: u32,
    },
    /// Connectivity test by power sums or by graph search.
    Connectivity {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "y")]
        method: MethodArg,
    },
    /// Components and the block-diagonal form of a matrix.
    Components {
        file: PathBuf,
        #[arg(long)]
        incidence: bool,
    },
    /// The subgraph lattice S(G).
    Space(SpaceArgs),
    /// Subset vertex graphs.
    #[command(subcommand)]
    Subset(SubsetCommand),
    /// Graphviz DOT rendering of a graph file.
    ExportDot { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Edge,
    Vertex,
    Strong,
    /// Edge complement with every vertex made indeterminate.
    Quasi,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Y,
    Bfs,
}

#[derive(Args)]
struct SpaceArgs {
    #[arg(value_enum)]
    action: SpaceAction,
    file: PathBuf,
    #[arg(long, env = "NEUTROGRAPH_CAP", default_value_t = subgraph::DEFAULT_SPACE_CAP)]
    cap: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceAction {
    Count,
    Enumerate,
    Check,
    Hasse,
}

#[derive(Subcommand)]
enum SubsetCommand {
    /// Type I subset vertex graph of a host.
    Type1 {
        file: PathBuf,
        #[arg(long, env = "NEUTROGRAPH_CAP", default_value_t = subset::DEFAULT_TYPE_ONE_CAP)]
        cap: usize,
        /// Print DOT instead of a summary.
        #[arg(long)]
        dot: bool,
    },
    /// Labeled type II counts for a base of n vertices.
    Count {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        edges: Option<BigUint>,
    },
    /// Labeled subset vertex trees for a base of n vertices.
    Trees {
        #[arg(long)]
        n: u32,
        /// Also list every tree (small universes only).
        #[arg(long)]
        list: bool,
        #[arg(long, env = "NEUTROGRAPH_CAP", default_value_t = subset::DEFAULT_TREE_CAP)]
        cap: usize,
    },
    /// Graphs on m vertices up to isomorphism.
    EnumIso {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        edges: Option<usize>,
    },
    /// Merge two subset vertex graphs whose vertex ids are brace-sets.
    Merge {
        first: PathBuf,
        second: PathBuf,
        /// Comma-separated base vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        base: Vec<String>,
    },
}

struct Report {
    command: &'static str,
    text: String,
    json: Value,
}

fn report(command: &'static str, text: String, json: Value) -> Result<Report, Error> {
    Ok(Report { command, text, json })
}

fn load(path: &Path) -> Result<NeutroGraph, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    io::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(r) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&envelope(r.command, r.json)).expect("json"));
            } else {
                print!("{}", r.text);
                if !r.text.ends_with('\n') {
                    println!();
                }
            }
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: &Command) -> Result<Report, String> {
    let graph_of = |p: &PathBuf| load(p);
    let out = match command {
        Command::Classify { file } => classify(&graph_of(file)?),
        Command::Complement { file, mode } => complement(&graph_of(file)?, *mode),
        Command::Selfcomp { file, mode, cap } => selfcomp(&graph_of(file)?, *mode, *cap),
        Command::Circuits { file, cap } => circuits(&graph_of(file)?, *cap),
        Command::Eulerian { file } => {
            let yes = walks::has_eulerian_trail(&graph_of(file)?);
            report("eulerian", if yes { "eulerian trail exists" } else { "no eulerian trail" }.into(), json!({ "eulerian": yes }))
        }
        Command::Matrix { file, incidence } => show_matrix(&graph_of(file)?, *incidence),
        Command::Power { file, k } => power(&graph_of(file)?, *k),
        Command::Connectivity { file, method } => connectivity(&graph_of(file)?, *method),
        Command::Components { file, incidence } => components(&graph_of(file)?, *incidence),
        Command::Space(args) => space(&graph_of(&args.file)?, args.action, args.cap),
        Command::Subset(sub) => return subset_command(sub),
        Command::ExportDot { file } => {
            let g = graph_of(file)?;
            let dot = io::graph_to_dot(&g);
            report("export-dot", dot.clone(), json!({ "dot": dot }))
        }
    };
    out.map_err(|e| e.to_string())
}

fn classify(g: &NeutroGraph) -> Result<Report, Error> {
    let (vp, ep) = g.kind_profile();
    let class = g.classify();
    let profile = transform::connectivity_profile(g);
    let usual = transform::largest_usual_subgraph(g);
    let pure = transform::largest_pure_neutrosophic_subgraph(g);
    let mut text = String::new();
    writeln!(text, "class: {}", class.name()).unwrap();
    writeln!(text, "vertices: {} ({} real), edges: {} ({} real)", g.vertex_count(), g.real_vertex_count(), g.edge_count(), g.real_edge_count()).unwrap();
    writeln!(text, "profiles: vertices {vp:?}, edges {ep:?}").unwrap();
    writeln!(text, "largest usual subgraph: {}", usual.label()).unwrap();
    writeln!(text, "largest pure neutrosophic subgraph: {}", pure.label()).unwrap();
    writeln!(text, "connectivity profile: {}", profile.name()).unwrap();
    report(
        "classify",
        text,
        json!({
            "class": class.name(),
            "vertex_profile": format!("{vp:?}"),
            "edge_profile": format!("{ep:?}"),
            "vertices": g.vertex_count().to_string(),
            "real_vertices": g.real_vertex_count().to_string(),
            "edges": g.edge_count().to_string(),
            "real_edges": g.real_edge_count().to_string(),
            "largest_usual": io::render(&usual.to_graph()),
            "largest_pure": io::render(&pure.to_graph()),
            "connectivity_profile": profile.name(),
        }),
    )
}

fn complement(g: &NeutroGraph, mode: ModeArg) -> Result<Report, Error> {
    let c = match mode {
        ModeArg::Quasi => transform::quasi_vertex_strong_complement(g),
        m => transform::complement(g, complement_mode(m)),
    };
    let text = io::render(&c);
    report("complement", text.clone(), json!({ "graph": text }))
}

fn complement_mode(m: ModeArg) -> ComplementMode {
    match m {
        ModeArg::Edge => ComplementMode::EdgeKind,
        ModeArg::Vertex => ComplementMode::VertexKind,
        ModeArg::Strong | ModeArg::Quasi => ComplementMode::Strong,
    }
}

fn selfcomp(g: &NeutroGraph, mode: ModeArg, cap: usize) -> Result<Report, Error> {
    if matches!(mode, ModeArg::Quasi) {
        return Err(Error::InvalidWalk("self-complement search takes --mode edge, vertex or strong".into()));
    }
    let witness = transform::is_self_complemented(g, complement_mode(mode), cap)?;
    let mut text = String::new();
    let mapping: Vec<Value> = match &witness {
        Some(p) => {
            writeln!(text, "self-complemented").unwrap();
            p.iter()
                .enumerate()
                .map(|(v, &w)| {
                    writeln!(text, "  {} -> {}", g.id(v), g.id(w)).unwrap();
                    json!([g.id(v), g.id(w)])
                })
                .collect()
        }
        None => {
            writeln!(text, "not self-complemented").unwrap();
            Vec::new()
        }
    };
    report("selfcomp", text, json!({ "self_complemented": witness.is_some(), "witness": mapping }))
}

fn circuits(g: &NeutroGraph, cap: usize) -> Result<Report, Error> {
    let found = walks::enumerate_circuits(g, cap)?;
    let census = CircuitCensus::of(&found);
    let mut text = String::new();
    let mut listed = Vec::new();
    for c in &found {
        let ids: Vec<&str> = c.vertices.iter().map(|&v| g.id(v)).collect();
        writeln!(text, "{}  {}", ids.join(" "), c.class.name()).unwrap();
        listed.push(json!({ "vertices": ids, "class": c.class.name() }));
    }
    writeln!(
        text,
        "census: usual {}, neutrosophic {}, pure {}, strong {}, strong pure {}",
        census.usual, census.neutrosophic, census.pure, census.strong, census.strong_pure
    )
    .unwrap();
    report(
        "circuits",
        text,
        json!({
            "census": {
                "usual": census.usual.to_string(),
                "neutrosophic": census.neutrosophic.to_string(),
                "pure": census.pure.to_string(),
                "strong": census.strong.to_string(),
                "strong_pure": census.strong_pure.to_string(),
            },
            "circuits": listed,
        }),
    )
}

fn show_matrix(g: &NeutroGraph, incidence: bool) -> Result<Report, Error> {
    let m: NeutroMatrix = if incidence { matrix::incidence(g)? } else { matrix::adjacency(g) };
    report(if incidence { "matrix --incidence" } else { "matrix" }, m.to_string(), matrix_json(&m))
}

fn power(g: &NeutroGraph, k: u32) -> Result<Report, Error> {
    let m = matrix::walk_counts::<Neutro>(g, k)?;
    report("power", m.to_string(), json!({ "k": k.to_string(), "matrix": matrix_json(&m) }))
}

fn connectivity(g: &NeutroGraph, method: MethodArg) -> Result<Report, Error> {
    match method {
        MethodArg::Y => {
            let res = matrix::connectivity_by_y::<Neutro>(g);
            let verdict = if res.connected { "connected" } else { "disconnected" };
            let mut text = format!("{verdict}\n");
            let witness = res.zero_witness.map(|(i, j)| {
                writeln!(text, "zero entry of Y at ({}, {})", g.id(i), g.id(j)).unwrap();
                json!([g.id(i), g.id(j)])
            });
            text.push_str(&res.y.to_string());
            report(
                "connectivity --method y",
                text,
                json!({ "connected": res.connected, "zero_entry": witness, "y": matrix_json(&res.y) }),
            )
        }
        MethodArg::Bfs => {
            let comps = matrix::components(g);
            let connected = comps.len() <= 1;
            let text = format!("{}\n", if connected { "connected" } else { "disconnected" });
            report("connectivity --method bfs", text, json!({ "connected": connected, "components": comps }))
        }
    }
}

fn components(g: &NeutroGraph, incidence: bool) -> Result<Report, Error> {
    let comps = matrix::components(g);
    let (m, which): (NeutroMatrix, _) = if incidence {
        (matrix::incidence(g)?, MatrixKind::Incidence)
    } else {
        (matrix::adjacency(g), MatrixKind::Adjacency)
    };
    let d = matrix::block_decompose(&m, which, g)?;
    let mut text = String::new();
    for c in &comps {
        writeln!(text, "{{{}}}", c.join(",")).unwrap();
    }
    writeln!(text, "row order: {}", d.matrix.row_labels().join(" ")).unwrap();
    if incidence {
        writeln!(text, "column order: {}", d.matrix.col_labels().join(" ")).unwrap();
    }
    writeln!(text, "block sizes: {:?}", d.row_block_sizes).unwrap();
    text.push_str(&d.matrix.to_string());
    let sizes = |v: &[usize]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    report(
        "components",
        text,
        json!({
            "components": comps,
            "row_order": d.matrix.row_labels(),
            "col_order": d.matrix.col_labels(),
            "row_block_sizes": sizes(&d.row_block_sizes),
            "col_block_sizes": sizes(&d.col_block_sizes),
            "matrix": matrix_json(&d.matrix),
        }),
    )
}

fn space(g: &NeutroGraph, action: SpaceAction, cap: u64) -> Result<Report, Error> {
    if let SpaceAction::Count = action {
        let n = subgraph::count_subgraphs(g)?;
        return report("space count", format!("{n}\n"), json!({ "count": n.to_string() }));
    }
    let s = SubgraphSpace::enumerate(g, cap)?;
    match action {
        SpaceAction::Count => unreachable!(),
        SpaceAction::Enumerate => {
            let labels: Vec<String> = s.members().iter().map(|m| m.label()).collect();
            let mut text = labels.join("\n");
            text.push('\n');
            report("space enumerate", text, json!({ "count": s.cardinality().to_string(), "members": labels }))
        }
        SpaceAction::Check => {
            let r = s.check();
            let b = s.boolean_subalgebra();
            let smarandache = s.is_smarandache_lattice();
            let rows = [
                ("lattice", r.is_lattice),
                ("distributive", r.is_distributive),
                ("complemented", r.is_complemented),
                ("boolean algebra", r.is_boolean_algebra),
                ("topology", r.is_topology),
                ("smarandache lattice", smarandache),
            ];
            let mut text = format!("members: {}\n", s.cardinality());
            for (name, v) in rows {
                writeln!(text, "{name}: {v}").unwrap();
            }
            writeln!(text, "edgeless boolean subalgebra: order {} ({})", b.order, b.report.is_boolean_algebra).unwrap();
            report(
                "space check",
                text,
                json!({
                    "count": s.cardinality().to_string(),
                    "is_lattice": r.is_lattice,
                    "is_distributive": r.is_distributive,
                    "is_complemented": r.is_complemented,
                    "is_boolean_algebra": r.is_boolean_algebra,
                    "is_topology": r.is_topology,
                    "is_smarandache_lattice": smarandache,
                    "boolean_subalgebra_order": b.order.to_string(),
                }),
            )
        }
        SpaceAction::Hasse => {
            let h = s.hasse();
            let dot = io::hasse_to_dot(&h);
            report("space hasse", dot.clone(), json!({ "dot": dot, "covers": h.covers.len().to_string() }))
        }
    }
}

fn subset_command(sub: &SubsetCommand) -> Result<Report, String> {
    subset_report(sub).map_err(|e| match e {
        Failure::Load(msg) => msg,
        Failure::Domain(e) => e.to_string(),
    })
}

enum Failure {
    Load(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn subset_report(sub: &SubsetCommand) -> Result<Report, Failure> {
    let load = |p: &PathBuf| load(p).map_err(Failure::Load);
    let report = |command, text, json| Ok(Report { command, text, json });
    match sub {
        SubsetCommand::Type1 { file, cap, dot } => {
            let g = subset::build_type_one(&load(file)?, *cap)?;
            let dot_text = io::subset_to_dot(&g);
            let text = if *dot {
                dot_text.clone()
            } else {
                format!("subset vertices: {}\nedges: {}\nmax degree: {}\n", g.vertex_count(), g.edge_count(), g.max_degree())
            };
            report(
                "subset type1",
                text,
                json!({
                    "vertices": g.vertex_count().to_string(),
                    "edges": g.edge_count().to_string(),
                    "graph": io::render(&g.to_graph()),
                    "dot": dot_text,
                }),
            )
        }
        SubsetCommand::Count { n, edges } => {
            let total = subset::count_type_two(*n)?;
            let degree = subset::max_subset_degree(*n)?;
            let mut text = format!("type II graphs: {total}\nmax subset degree: {degree}\n");
            let mut payload = json!({ "n": n.to_string(), "total": total.to_string(), "max_degree": degree.to_string() });
            if let Some(r) = edges {
                let c = subset::count_type_two_with_edges(*n, r)?;
                writeln!(text, "with {r} edges: {c}").unwrap();
                payload["edges"] = json!(r.to_string());
                payload["with_edges"] = json!(c.to_string());
            }
            report("subset count", text, payload)
        }
        SubsetCommand::Trees { n, list, cap } => {
            let count = subset::count_labeled_trees(*n)?;
            let mut text = format!("labeled subset vertex trees: {count}\n");
            let mut listed = Vec::new();
            if *list {
                let base: Vec<String> = (1..=*n).map(|i| format!("v{i}")).collect();
                for t in subset::enumerate_trees(base, *cap)? {
                    let edges: Vec<String> = t.edges().iter().map(|&(a, b)| format!("{}-{}", t.label(a), t.label(b))).collect();
                    writeln!(text, "{}", edges.join(" ")).unwrap();
                    listed.push(edges);
                }
            }
            report("subset trees", text, json!({ "count": count.to_string(), "trees": listed }))
        }
        SubsetCommand::EnumIso { m, edges } => {
            let census = subset::enumerate_type_two_iso(*m, *edges)?;
            let mut text = format!("classes: {}\nlabeled graphs: {}\n", census.class_count(), census.labeled_total());
            let classes: Vec<Value> = census
                .classes
                .iter()
                .map(|c| {
                    writeln!(text, "edges {:2}  orbit {:4}  {:?}", c.edge_count, c.labeled_count, c.representative).unwrap();
                    json!({
                        "edges": c.edge_count.to_string(),
                        "labeled": c.labeled_count.to_string(),
                        "representative": c.representative,
                    })
                })
                .collect();
            report(
                "subset enum-iso",
                text,
                json!({
                    "m": m.to_string(),
                    "classes": census.class_count().to_string(),
                    "labeled": census.labeled_total().to_string(),
                    "representatives": classes,
                }),
            )
        }
        SubsetCommand::Merge { first, second, base } => {
            let a = SubsetVertexGraph::from_graph(&load(first)?, base.clone())?;
            let b = SubsetVertexGraph::from_graph(&load(second)?, base.clone())?;
            let m = subset::merge(&a, &b)?;
            let graph = io::render(&m.graph.to_graph());
            let text = format!("{graph}tree: {}\nmeshed: {}\n", m.is_tree, m.meshed);
            report("subset merge", text, json!({ "graph": graph, "is_tree": m.is_tree, "meshed": m.meshed }))
        }
    }
}
