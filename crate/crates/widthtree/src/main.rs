//! Command-line interface for width-tree computations.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use widthtree::error::Error;
use widthtree::families::{family, FamilyName};
use widthtree::flows::{self, BoundMode};
use widthtree::invariants;
use widthtree::tangle;
use widthtree::tree::sources_sinks;
use widthtree::{enumerate, io as wio};

#[derive(Parser)]
#[command(
    name = "widthtree",
    about = "Width trees of knots and tangles: validation, invariants, flow bounds, and decomposition blueprints",
    version
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Args)]
struct InputArg {
    /// Path to a width-tree document, or - for standard input.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundModeArg {
    AugmentedCut,
    PaperFormula,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check the width-tree conditions.
    Validate(InputArg),
    /// Net extent, width, trunk, and friends.
    Invariants(InputArg),
    /// Lower bounds on net extent over positive productless labellings.
    Bound {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = BoundModeArg::Both)]
        mode: BoundModeArg,
    },
    /// Convert the labelling into a conservative flow on the augmented ditree.
    Flow(InputArg),
    /// Synthesize a positive productless labelling attaining the lower bound.
    Synthesize(InputArg),
    /// Exact maximum strong source-sink cut by brute force.
    CutOracle {
        #[command(flatten)]
        input: InputArg,
        /// Run on the augmented ditree instead of the base tree.
        #[arg(long)]
        augmented: bool,
    },
    /// Realize a trivialpod as explicit tangle data.
    Realize {
        /// Thick vertex label.
        #[arg(long)]
        thick: i64,
        /// Comma-separated thin vertex labels (may be empty).
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        thins: String,
        #[arg(long, value_parser = ["in", "out"], default_value = "out")]
        orientation: String,
    },
    /// Realize a width tree as a decomposition blueprint.
    Assemble {
        #[command(flatten)]
        input: InputArg,
        /// Apply gluing transpositions until the realized curve is a knot.
        #[arg(long)]
        knotify: bool,
    },
    /// Enumerate width trees up to equivalence.
    Enumerate {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long, allow_hyphen_values = true)]
        max_label: i64,
        /// Comma-separated predicates: positive, productless, nonnegative,
        /// boundaryless, coherent-path.
        #[arg(long, default_value = "")]
        require: String,
        /// Print each tree as a one-line document.
        #[arg(long)]
        emit: bool,
    },
    /// Emit a named example width tree.
    Family {
        name: String,
        /// Repeated key=value integer parameters.
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Graphviz output.
    Dot(InputArg),
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::SyntaxError(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::SyntaxError(format!("reading {path}: {e}")))
    }
}

fn json_line(pairs: &[(&str, serde_json::Value)]) -> String {
    let map: serde_json::Map<String, serde_json::Value> = pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect();
    serde_json::Value::Object(map).to_string()
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Validate(input) => {
            let wt = wio::parse_width_tree(&read_input(&input.input)?)?;
            let c = wt.classify();
            match cli.format {
                Format::Human => {
                    println!("valid width tree with {} vertices", wt.tree().vertex_count());
                    println!("nonnegative = {}", c.nonnegative);
                    println!("positive = {}", c.positive);
                    println!("productless = {}", c.productless);
                    println!("slim = {}", c.slim);
                }
                Format::Json => println!(
                    "{}",
                    json_line(&[
                        ("valid", true.into()),
                        ("nonnegative", c.nonnegative.into()),
                        ("positive", c.positive.into()),
                        ("productless", c.productless.into()),
                        ("slim", c.slim.into()),
                    ])
                ),
            }
        }
        Command::Invariants(input) => {
            let wt = wio::parse_width_tree(&read_input(&input.input)?)?;
            let r = invariants::report(&wt);
            let ss = sources_sinks(wt.tree());
            match cli.format {
                Format::Human => {
                    println!("net_extent = {}", r.net_extent);
                    println!("width = {}", r.width);
                    println!("trunk = {}", r.trunk);
                    match r.gabai_candidate {
                        Some(g) => println!("gabai_candidate = {g}"),
                        None => println!("gabai_candidate = (not a coherent path)"),
                    }
                    println!("mu_net_extent = {}", r.mu_net_extent);
                    println!("n2_minus = {}", ss.n2_minus);
                    println!("n2_plus = {}", ss.n2_plus);
                }
                Format::Json => println!(
                    "{}",
                    json_line(&[
                        ("net_extent", r.net_extent.into()),
                        ("width", r.width.into()),
                        ("trunk", r.trunk.into()),
                        (
                            "gabai_candidate",
                            r.gabai_candidate.map(Into::into).unwrap_or(serde_json::Value::Null),
                        ),
                        ("mu_net_extent", r.mu_net_extent.into()),
                        ("n2_minus", ss.n2_minus.into()),
                        ("n2_plus", ss.n2_plus.into()),
                    ])
                ),
            }
        }
        Command::Bound { input, mode } => {
            let tree = wio::parse_ditree(&read_input(&input.input)?)?;
            let augmented = matches!(mode, BoundModeArg::AugmentedCut | BoundModeArg::Both)
                .then(|| flows::lower_bound(&tree, BoundMode::AugmentedCut))
                .transpose()?;
            let formula = matches!(mode, BoundModeArg::PaperFormula | BoundModeArg::Both)
                .then(|| flows::lower_bound(&tree, BoundMode::PaperFormula))
                .transpose()?;
            let warn = match (augmented, formula) {
                (Some(a), Some(f)) if a != f => true,
                _ => false,
            };
            match cli.format {
                Format::Human => {
                    if let Some(a) = augmented {
                        println!("augmented-cut = {a}");
                    }
                    if let Some(f) = formula {
                        println!("paper-formula = {f}");
                    }
                    if warn {
                        println!(
                            "warning: paper-formula bound {} differs from the attainable augmented-cut bound {}",
                            formula.unwrap(),
                            augmented.unwrap()
                        );
                    }
                }
                Format::Json => println!(
                    "{}",
                    json_line(&[
                        (
                            "augmented_cut",
                            augmented.map(Into::into).unwrap_or(serde_json::Value::Null),
                        ),
                        (
                            "paper_formula",
                            formula.map(Into::into).unwrap_or(serde_json::Value::Null),
                        ),
                        ("discrepancy", warn.into()),
                    ])
                ),
            }
        }
        Command::Flow(input) => {
            let wt = wio::parse_width_tree(&read_input(&input.input)?)?;
            let flow = flows::make_flow(&wt)?;
            let host = flow.host().tree().clone();
            let flow_tree = widthtree::validate(host, flow.values().clone())?;
            match cli.format {
                Format::Human => {
                    println!("net_extent = {}", flow.net_extent());
                    print!("{}", wio::serialize_width_tree(&flow_tree));
                }
                Format::Json => print!("{}", wio::serialize_width_tree(&flow_tree)),
            }
        }
        Command::Synthesize(input) => {
            let tree = wio::parse_ditree(&read_input(&input.input)?)?;
            let (wt, cert) = flows::synthesize_equality_labelling(&tree)?;
            match cli.format {
                Format::Human => {
                    println!("bound = {}", cert.bound);
                    println!("adjustments = {}", cert.adjustments);
                    print!("{}", wio::serialize_width_tree(&wt));
                }
                Format::Json => print!("{}", wio::serialize_width_tree(&wt)),
            }
        }
        Command::CutOracle { input, augmented } => {
            let tree = wio::parse_ditree(&read_input(&input.input)?)?;
            let host = if augmented {
                flows::augment(&tree)?.tree().clone()
            } else {
                tree
            };
            let (size, cut) = flows::max_cut_bruteforce(&host)?;
            match cli.format {
                Format::Human => {
                    println!("max_cut = {size}");
                    println!("members = {}", cut.member_ids().join(" "));
                }
                Format::Json => println!(
                    "{}",
                    json_line(&[
                        ("max_cut", size.into()),
                        ("members", cut.member_ids().into()),
                    ])
                ),
            }
        }
        Command::Realize {
            thick,
            thins,
            orientation,
        } => {
            let thin_labels: Vec<i64> = if thins.is_empty() {
                Vec::new()
            } else {
                thins
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<i64>()
                            .map_err(|e| Error::BadParams(format!("thin label {s}: {e}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let orient = if orientation == "in" {
                tangle::PodOrientation::AllIn
            } else {
                tangle::PodOrientation::AllOut
            };
            let pod = tangle::Trivialpod::new(thick, thin_labels, orient)?;
            let data = tangle::realize(&pod)?;
            match cli.format {
                Format::Human => {
                    println!("bridge_arcs = {}", data.bridge_arcs());
                    println!(
                        "vertical_arcs = {}",
                        data.vertical_counts()
                            .iter()
                            .map(|c| c.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    println!(
                        "ghost_edges = {}",
                        data.ghost_edges()
                            .iter()
                            .map(|(a, b)| format!("{a}-{b}"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    println!("positive_punctures = {}", data.positive_punctures());
                }
                Format::Json => println!(
                    "{}",
                    json_line(&[
                        ("bridge_arcs", data.bridge_arcs().into()),
                        ("vertical_arcs", data.vertical_counts().to_vec().into()),
                        (
                            "ghost_edges",
                            data.ghost_edges()
                                .iter()
                                .map(|&(a, b)| serde_json::json!([a, b]))
                                .collect::<Vec<_>>()
                                .into(),
                        ),
                        ("positive_punctures", data.positive_punctures().into()),
                    ])
                ),
            }
        }
        Command::Assemble { input, knotify } => {
            let wt = wio::parse_width_tree(&read_input(&input.input)?)?;
            let mut bp = tangle::assemble(&wt)?;
            if knotify {
                bp = tangle::knotify(&bp)?;
            }
            match cli.format {
                Format::Human => {
                    println!("tangles = {}", bp.tangles().len());
                    println!("ghost_arcs = {}", bp.ghost_arc_count());
                    match tangle::count_components(&bp) {
                        Ok(c) => println!("components = {c}"),
                        Err(Error::OpenBoundary) => println!("components = (open boundary)"),
                        Err(e) => return Err(e),
                    }
                    print!("{}", wio::serialize_blueprint(&bp));
                }
                Format::Json => print!("{}", wio::serialize_blueprint(&bp)),
            }
        }
        Command::Enumerate {
            max_vertices,
            max_label,
            require,
            emit,
        } => {
            let mut spec = enumerate::EnumerationSpec::new(max_vertices, max_label);
            for p in require.split(',').filter(|p| !p.is_empty()) {
                match p {
                    "positive" => spec.require.positive = true,
                    "productless" => spec.require.productless = true,
                    "nonnegative" => spec.require.nonnegative = true,
                    "boundaryless" => spec.require.boundaryless = true,
                    "coherent-path" | "coherent_path" => spec.require.coherent_path = true,
                    other => {
                        return Err(Error::BadParams(format!("unknown predicate {other}")));
                    }
                }
            }
            if emit {
                let trees = enumerate::enumerate(&spec)?;
                for wt in &trees {
                    let doc = wio::WidthTreeDocument::from_width_tree(wt);
                    println!(
                        "{}",
                        serde_json::to_string(&doc).expect("documents are serializable")
                    );
                }
                match cli.format {
                    Format::Human => println!("count = {}", trees.len()),
                    Format::Json => println!("{}", json_line(&[("count", trees.len().into())])),
                }
            } else {
                let mut count = 0usize;
                enumerate::enumerate_with(&spec, |_| count += 1)?;
                match cli.format {
                    Format::Human => println!("count = {count}"),
                    Format::Json => println!("{}", json_line(&[("count", count.into())])),
                }
            }
        }
        Command::Family { name, params } => {
            let name = FamilyName::from_str(&name)?;
            let mut map = BTreeMap::new();
            for p in &params {
                let (k, v) = p
                    .split_once('=')
                    .ok_or_else(|| Error::BadParams(format!("expected key=value, got {p}")))?;
                let value = v
                    .parse::<i64>()
                    .map_err(|e| Error::BadParams(format!("parameter {k}: {e}")))?;
                map.insert(k.to_string(), value);
            }
            let wt = family(name, &map)?;
            print!("{}", wio::serialize_width_tree(&wt));
        }
        Command::Dot(input) => {
            let wt = wio::parse_width_tree(&read_input(&input.input)?)?;
            print!("{}", wio::export_dot(&wt));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
