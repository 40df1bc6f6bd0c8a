//! Command-line surface for the embedded-graph partition-function library.
//!
//! Every subcommand is pure: identical inputs produce byte-identical
//! outputs. Exit codes: 0 success, 1 domain error, 2 usage error.

mod render;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use surface_flows_core::duality;
use surface_flows_core::graph::{parse_graph, EmbeddedGraph};
use surface_flows_core::group::{build_group, CharacterTable, ClassFunction, FiniteGroup};
use surface_flows_core::partition::{
    self, CountOptions, CountResult, EdgeLabeling, FlowMethod,
};

#[derive(Parser)]
#[command(
    name = "surface-flows",
    version,
    about = "Partition functions, flow counts and coloring-flow duality for graphs embedded in orientable surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Work budget for enumeration-based methods
    #[arg(long)]
    budget: Option<u64>,
    /// Emit a JSON document instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect groups
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Trace the faces of an embedded graph and report the genus
    Faces {
        /// Graph file (JSON)
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Genus of each connected component
    Genus {
        /// Graph file (JSON)
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Geometric dual of a connected embedded graph
    Dual {
        /// Graph file (JSON)
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// DOT export for external viewers
    ExportDot { graph: PathBuf },
    /// Evaluate the partition function of a class function
    Partition {
        /// Graph file (JSON)
        graph: PathBuf,
        /// Group spec: `cyclic:<n> | dihedral:<n> | symmetric:<n> | quaternion | product:<a>,<b> | perm:<cycles>`
        #[arg(long)]
        group: String,
        /// `regular | indicator:<class> | irreducible:<i> | values:<json>`
        #[arg(long = "class-function", default_value = "regular")]
        class_function: String,
        /// brute | closed
        #[arg(long, default_value = "closed")]
        method: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Count G-flows (or nowhere-identity G-flows)
    CountFlows {
        /// Graph file (JSON)
        graph: PathBuf,
        /// Group spec: `cyclic:<n> | dihedral:<n> | symmetric:<n> | quaternion | product:<a>,<b> | perm:<cycles>`
        #[arg(long)]
        group: String,
        /// Count only flows avoiding the identity label
        #[arg(long = "nowhere-identity")]
        nowhere_identity: bool,
        /// brute | closed | formula
        #[arg(long, default_value = "formula")]
        method: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Surface-group homomorphism counts A_g(G, C)
    Frobenius {
        /// Group spec: `cyclic:<n> | dihedral:<n> | symmetric:<n> | quaternion | product:<a>,<b> | perm:<cycles>`
        #[arg(long)]
        group: String,
        /// Conjugacy class id
        #[arg(long, default_value_t = 0)]
        class: usize,
        #[arg(long, default_value_t = 1)]
        genus: u32,
        /// brute | formula
        #[arg(long, default_value = "formula")]
        method: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Labeling predicates
    Tension {
        #[command(subcommand)]
        action: TensionAction,
    },
    /// Build the canonical covering determined by a local tension
    Cover {
        /// Graph file (JSON)
        graph: PathBuf,
        /// Labelings file: `{"group": <spec>, "<edge>": <element index>}`
        #[arg(long)]
        labels: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Duality pipeline checks
    Duality {
        #[command(subcommand)]
        action: DualityAction,
    },
}

#[derive(Subcommand)]
enum GroupAction {
    /// Print elements, Cayley table, classes and the character table
    Show {
        spec: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum TensionAction {
    /// Report whether a labeling is a flow, a local tension, and a global
    /// tension
    Check {
        /// Graph file (JSON)
        graph: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum DualityAction {
    /// Run the full flow -> dual tension -> covering -> coloring pipeline
    /// over all (or sampled) nowhere-identity flows and check every
    /// assertion
    Verify {
        /// Graph file (JSON)
        graph: PathBuf,
        /// Group spec: `cyclic:<n> | dihedral:<n> | symmetric:<n> | quaternion | product:<a>,<b> | perm:<cycles>`
        #[arg(long)]
        group: String,
        /// Seed for sampling when exhaustive enumeration exceeds budget
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

type CmdResult = Result<ExitCode, String>;

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Group {
            action: GroupAction::Show { spec, json },
        } => group_show(&spec, json),
        Command::Faces { graph, json } => faces(&graph, json),
        Command::Genus { graph, json } => genus(&graph, json),
        Command::Dual { graph, json } => dual(&graph, json),
        Command::ExportDot { graph } => {
            let g = load_graph(&graph)?;
            print!("{}", g.to_dot());
            Ok(ExitCode::SUCCESS)
        }
        Command::Partition {
            graph,
            group,
            class_function,
            method,
            common,
        } => partition_cmd(&graph, &group, &class_function, &method, &common),
        Command::CountFlows {
            graph,
            group,
            nowhere_identity,
            method,
            common,
        } => count_flows_cmd(&graph, &group, nowhere_identity, &method, &common),
        Command::Frobenius {
            group,
            class,
            genus,
            method,
            common,
        } => frobenius_cmd(&group, class, genus, &method, &common),
        Command::Tension {
            action: TensionAction::Check { graph, labels, json },
        } => tension_check(&graph, &labels, json),
        Command::Cover { graph, labels, json } => cover(&graph, &labels, json),
        Command::Duality {
            action:
                DualityAction::Verify {
                    graph,
                    group,
                    seed,
                    common,
                },
        } => verify::run(&graph, &group, seed, &common),
    }
}

fn domain<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn load_graph(path: &PathBuf) -> Result<Arc<EmbeddedGraph>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_graph(&text).map(Arc::new).map_err(domain)
}

fn load_labeling(
    graph: &Arc<EmbeddedGraph>,
    path: &PathBuf,
) -> Result<EdgeLabeling, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    EdgeLabeling::parse(&text, graph.clone()).map_err(domain)
}

fn build_group_and_table(
    spec: &str,
) -> Result<(Arc<FiniteGroup>, CharacterTable), String> {
    let group = build_group(spec).map_err(domain)?;
    let table = CharacterTable::for_group(&group).map_err(domain)?;
    Ok((group, table))
}

pub(crate) fn options(common: &CommonOpts) -> CountOptions {
    let mut opts = CountOptions::default();
    if let Some(budget) = common.budget {
        opts.term_budget = budget;
        opts.subset_budget = budget;
    }
    opts
}

fn parse_class_function(
    spec: &str,
    group: &Arc<FiniteGroup>,
    table: &CharacterTable,
) -> Result<ClassFunction, String> {
    if spec == "regular" {
        return Ok(ClassFunction::regular(group.clone()));
    }
    if let Some(class) = spec.strip_prefix("indicator:") {
        let class: usize = class
            .parse()
            .map_err(|_| format!("bad class id in `{spec}`"))?;
        return ClassFunction::class_indicator(group.clone(), class).map_err(domain);
    }
    if let Some(i) = spec.strip_prefix("irreducible:") {
        let i: usize = i.parse().map_err(|_| format!("bad index in `{spec}`"))?;
        return table
            .characters()
            .get(i)
            .cloned()
            .ok_or_else(|| format!("irreducible index {i} out of range"));
    }
    if let Some(json) = spec.strip_prefix("values:") {
        let values: Vec<serde_json::Value> =
            serde_json::from_str(json).map_err(|e| format!("bad values json: {e}"))?;
        let parsed: Result<Vec<num_complex::Complex64>, String> = values
            .iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => {
                    Ok(num_complex::Complex64::new(n.as_f64().unwrap_or(f64::NAN), 0.0))
                }
                serde_json::Value::Array(pair) if pair.len() == 2 => {
                    let re = pair[0].as_f64().ok_or("non-numeric re")?;
                    let im = pair[1].as_f64().ok_or("non-numeric im")?;
                    Ok(num_complex::Complex64::new(re, im))
                }
                other => Err(format!("bad class value {other}")),
            })
            .collect();
        return ClassFunction::from_class_values(group.clone(), parsed?).map_err(domain);
    }
    Err(format!(
        "unknown class function `{spec}` (want regular | indicator:<class> | irreducible:<i> | values:<json>)"
    ))
}

fn parse_flow_method(s: &str) -> Result<FlowMethod, String> {
    match s {
        "brute" => Ok(FlowMethod::Brute),
        "closed" | "formula" => Ok(FlowMethod::Formula),
        other => Err(format!("unknown method `{other}` (want brute | closed | formula)")),
    }
}

fn group_show(spec: &str, json: bool) -> CmdResult {
    let (group, table) = build_group_and_table(spec)?;
    if json {
        println!("{}", render::pretty(&render::group_json(&group, &table)));
    } else {
        print!("{}", render::group_text(&group, &table));
    }
    Ok(ExitCode::SUCCESS)
}

fn faces(path: &PathBuf, json: bool) -> CmdResult {
    let graph = load_graph(path)?;
    let faces = graph.trace_faces();
    let genera = graph.euler_genus().map_err(domain)?;
    if json {
        let doc = serde_json::json!({
            "faces": faces.iter().map(|f| render::face_json(&graph, f)).collect::<Vec<_>>(),
            "count": faces.len(),
            "genus": genera,
        });
        println!("{}", render::pretty(&doc));
    } else if genera.len() == 1 {
        println!("faces: {}, genus: {}", faces.len(), genera[0]);
    } else {
        let list: Vec<String> = genera.iter().map(u64::to_string).collect();
        println!("faces: {}, genera: {}", faces.len(), list.join(","));
    }
    Ok(ExitCode::SUCCESS)
}

fn genus(path: &PathBuf, json: bool) -> CmdResult {
    let graph = load_graph(path)?;
    let genera = graph.euler_genus().map_err(domain)?;
    if json {
        println!("{}", render::pretty(&serde_json::json!({ "genus": genera })));
    } else {
        let list: Vec<String> = genera.iter().map(u64::to_string).collect();
        println!("genus: {}", list.join(","));
    }
    Ok(ExitCode::SUCCESS)
}

fn dual(path: &PathBuf, json: bool) -> CmdResult {
    let graph = load_graph(path)?;
    let dual = graph.dual().map_err(domain)?;
    let _ = json; // the dual is a file format either way
    println!("{}", render::pretty(&dual.to_json()));
    Ok(ExitCode::SUCCESS)
}

fn print_count(result: &CountResult, json: bool) {
    if json {
        println!("{}", render::pretty(&render::count_json(result)));
    } else {
        println!("{}", result.value);
        println!("method: {}  terms: {}", result.method.as_str(), result.terms);
    }
}

fn partition_cmd(
    path: &PathBuf,
    group_spec: &str,
    cf_spec: &str,
    method: &str,
    common: &CommonOpts,
) -> CmdResult {
    let graph = load_graph(path)?;
    let (group, table) = build_group_and_table(group_spec)?;
    let chi = parse_class_function(cf_spec, &group, &table)?;
    let opts = options(common);
    let result = match method {
        "brute" => partition::partition_brute(&graph, &group, &chi, &opts).map_err(domain)?,
        "closed" => {
            partition::partition_multiplicative(&graph, &group, &chi, &table, &opts)
                .map_err(domain)?
        }
        other => return Err(format!("unknown method `{other}` (want brute | closed)")),
    };
    print_count(&result, common.json);
    Ok(ExitCode::SUCCESS)
}

fn count_flows_cmd(
    path: &PathBuf,
    group_spec: &str,
    nowhere_identity: bool,
    method: &str,
    common: &CommonOpts,
) -> CmdResult {
    let graph = load_graph(path)?;
    let (group, table) = build_group_and_table(group_spec)?;
    let method = parse_flow_method(method)?;
    let opts = options(common);
    let result = if nowhere_identity {
        partition::count_nowhere_identity(&graph, &group, &table, method, &opts)
    } else {
        partition::count_flows(&graph, &group, &table, method, &opts)
    }
    .map_err(domain)?;
    print_count(&result, common.json);
    Ok(ExitCode::SUCCESS)
}

fn frobenius_cmd(
    group_spec: &str,
    class: usize,
    genus: u32,
    method: &str,
    common: &CommonOpts,
) -> CmdResult {
    let (group, table) = build_group_and_table(group_spec)?;
    let method = parse_flow_method(method)?;
    let opts = options(common);
    let result =
        partition::frobenius_count(&group, &table, class, genus, method, &opts).map_err(domain)?;
    print_count(&result, common.json);
    Ok(ExitCode::SUCCESS)
}

fn tension_check(path: &PathBuf, labels: &PathBuf, json: bool) -> CmdResult {
    let graph = load_graph(path)?;
    let labeling = load_labeling(&graph, labels)?;
    let flow = duality::is_flow(&labeling);
    let local = duality::is_local_tension(&labeling);
    let global = if graph.is_connected() {
        Some(duality::is_global_tension(&labeling).map_err(domain)?)
    } else {
        None
    };
    if json {
        println!(
            "{}",
            render::pretty(&serde_json::json!({
                "flow": flow,
                "local_tension": local,
                "global_tension": global,
            }))
        );
    } else {
        println!("flow: {flow}");
        println!("local-tension: {local}");
        match global {
            Some(g) => println!("global-tension: {g}"),
            None => println!("global-tension: n/a (disconnected)"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cover(path: &PathBuf, labels: &PathBuf, json: bool) -> CmdResult {
    let graph = load_graph(path)?;
    let labeling = load_labeling(&graph, labels)?;
    let covering = duality::build_covering(&labeling).map_err(domain)?;
    let _ = json;
    println!("{}", render::pretty(&covering.to_json()));
    Ok(ExitCode::SUCCESS)
}
