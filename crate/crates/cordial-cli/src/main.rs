//! Command-line surface over the cordial library.
//!
//! Exit codes: 0 on success (including positive witnesses), 1 for negative
//! or infeasible outcomes (no witness, unbalanceable assembly, exceeded
//! budget, out-of-scope domain) with a machine-readable reason, 2 for
//! malformed inputs and arguments.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use cordial::compose::{assemble, balance_free_arcs, phi, phi_table};
use cordial::construct::construct_cordial;
use cordial::fixtures;
use cordial::hypercube::LabeledCube;
use cordial::io::{
    bits_to_hex, parse_arrangement, parse_labeled_digraph, parse_undirected_graph, to_dot,
    to_json_pretty, ArrangementDoc, ClassificationReportDoc, CubeDoc, LabeledDigraphDoc,
};
use cordial::labeling::lambda;
use cordial::search::{
    classify_cordiality, explore, find_23_orientation, find_cordial_labeling,
    friendly_labeling_count, OrientationSearchOptions, DEFAULT_ORIENTATION_BUDGET,
};
use cordial::{Error, LabeledDigraph, LambdaTriple, VertexBijection, VertexLabeling};

#[derive(Parser)]
#[command(
    name = "cordial",
    version,
    about = "(2,3)-cordial labelings of oriented hypercubes: construct, compose, check, classify"
)]
struct Cli {
    /// Emit machine-readable JSON where the command has a text form.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a cordially labeled oriented Q_n for n divisible by 3.
    Construct {
        /// Cube dimension; must be a positive multiple of 3.
        #[arg(long)]
        dim: usize,
        /// Emit the expanded vertices/arcs document instead of the compact
        /// cube form.
        #[arg(long)]
        expanded: bool,
    },
    /// Print the lambda triple of a labeled graph file ("-" reads stdin).
    Lambda { file: String },
    /// Search all friendly labelings of a digon-free digraph for a
    /// (2,3)-cordial one. Exit 0 with a witness, exit 1 with an exhaustion
    /// certificate.
    Check { file: String },
    /// Count label agreements between two labeled graphs across a bijection.
    Phi {
        file1: String,
        file2: String,
        /// Bijection name (identity, AB, AC, BC) or a JSON file holding a
        /// permutation array.
        #[arg(long, default_value = "identity")]
        bijection: String,
    },
    /// Reproduce the phi table over {Abar, A, Bbar, B, Cbar, C}.
    PhiTable,
    /// Assemble a cube arrangement; with --balance, orient the free edges
    /// and emit the finished labeled cube document.
    Assemble {
        file: String,
        #[arg(long)]
        balance: bool,
    },
    /// Classify all orientations of Q_dim (dim <= 3) up to isomorphism by
    /// cordiality.
    Classify {
        #[arg(long)]
        dim: usize,
        /// Worker count; the report is byte-identical at every setting.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Exhaustively decide (2,3)-orientability of an undirected graph file.
    Orientability {
        file: String,
        /// Keep isolated vertices instead of reducing to the subgraph
        /// induced by non-isolated vertices.
        #[arg(long)]
        keep_isolated: bool,
        /// Work budget in orientation-labeling pairs.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// The figure fixture library.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
    /// Export a labeled graph file as DOT, one edge statement per arc with
    /// its induced label.
    ExportDot { file: String },
    /// Sample random orientations of Q_dim and look for cordial labelings;
    /// deterministic for a fixed seed.
    Explore {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 32)]
        samples: u64,
        /// Random friendly labelings tried per sample when the labeling
        /// space is too large to exhaust.
        #[arg(long, default_value_t = 2000)]
        attempts: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// List every fixture name.
    List,
    /// Print one fixture (cube, arrangement, or bijection) as JSON.
    Export { name: String },
}

struct Failure {
    code: u8,
    message: String,
}

fn failure(e: Error) -> Failure {
    let kind = match &e {
        Error::Domain(_) => "domain",
        Error::Infeasible { .. } => "infeasible",
        Error::Budget(_) => "budget",
        _ => "input",
    };
    match &e {
        Error::Infeasible { best } => Failure {
            code: 1,
            message: json!({
                "error": kind,
                "message": e.to_string(),
                "best": {"alpha": best.alpha, "beta": best.beta, "gamma": best.gamma},
            })
            .to_string(),
        },
        Error::Domain(_) | Error::Budget(_) => Failure {
            code: 1,
            message: json!({"error": kind, "message": e.to_string()}).to_string(),
        },
        _ => Failure {
            code: 2,
            message: format!("error: {e}"),
        },
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| Failure {
            code: 2,
            message: format!("error: cannot read stdin: {e}"),
        })?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure {
            code: 2,
            message: format!("error: cannot read {path}: {e}"),
        })
    }
}

fn load_labeled(path: &str) -> Result<LabeledDigraph, Failure> {
    parse_labeled_digraph(&read_input(path)?).map_err(failure)
}

fn lambda_json(t: &LambdaTriple) -> serde_json::Value {
    json!({"alpha": t.alpha, "beta": t.beta, "gamma": t.gamma})
}

fn labels_json(f: &VertexLabeling) -> serde_json::Value {
    json!((0..f.len()).map(|v| f.label(v)).collect::<Vec<u8>>())
}

fn labels_string(f: &VertexLabeling) -> String {
    (0..f.len()).map(|v| char::from(b'0' + f.label(v))).collect()
}

fn resolve_bijection(spec: &str, size: usize) -> Result<VertexBijection, Failure> {
    if std::path::Path::new(spec).is_file() {
        let text = read_input(spec)?;
        let forward: Vec<usize> = serde_json::from_str(&text).map_err(|e| Failure {
            code: 2,
            message: format!("error: {spec} is not a JSON permutation array: {e}"),
        })?;
        return VertexBijection::new(forward).map_err(failure);
    }
    if spec == "identity" {
        return Ok(VertexBijection::identity(size));
    }
    fixtures::bijection(spec).ok_or_else(|| Failure {
        code: 2,
        message: format!("error: unknown bijection {spec:?}; expected identity, AB, AC, BC, or a file"),
    })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Construct { dim, expanded } => {
            let built = construct_cordial(dim).map_err(failure)?;
            if expanded {
                println!("{}", to_json_pretty(&LabeledDigraphDoc::from_labeled(&built)));
            } else {
                let cube = LabeledCube::from_labeled_digraph(&built)
                    .expect("construction outputs are oriented hypercubes");
                println!("{}", to_json_pretty(&CubeDoc::from_labeled_cube(&cube)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lambda { file } => {
            let l = load_labeled(&file)?;
            let t = l.lambda();
            if cli.json {
                println!("{}", lambda_json(&t));
            } else {
                println!("{t}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file } => {
            let l = load_labeled(&file)?;
            let outcome = find_cordial_labeling(l.graph()).map_err(failure)?;
            let total = friendly_labeling_count(l.vertex_count());
            match outcome.witness {
                Some(f) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({
                                "cordial": true,
                                "witness": labels_json(&f),
                                "examined": outcome.examined,
                                "friendly_total": total,
                            })
                        );
                    } else {
                        println!(
                            "(2,3)-cordial: witness {} (examined {} of {} friendly labelings)",
                            labels_string(&f),
                            outcome.examined,
                            total
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({
                                "cordial": false,
                                "examined": outcome.examined,
                                "friendly_total": total,
                            })
                        );
                    } else {
                        println!(
                            "not (2,3)-cordial: no friendly labeling of {} admits (2,3)-cordial",
                            outcome.examined
                        );
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Phi { file1, file2, bijection } => {
            let l1 = load_labeled(&file1)?;
            let l2 = load_labeled(&file2)?;
            let b = resolve_bijection(&bijection, l1.vertex_count())?;
            let count = phi(&l1, &l2, &b).map_err(failure)?;
            if cli.json {
                println!("{}", json!({"phi": count}));
            } else {
                println!("{count}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::PhiTable => {
            let matrix = phi_table(&fixtures::gamma_set(), &fixtures::bijection_table())
                .map_err(failure)?;
            if cli.json {
                println!("{}", json!({"names": matrix.names, "values": matrix.values}));
            } else {
                print!("{:>5}", "Phi");
                for name in &matrix.names {
                    print!("{name:>6}");
                }
                println!();
                for (name, row) in matrix.names.iter().zip(&matrix.values) {
                    print!("{name:>5}");
                    for value in row {
                        print!("{value:>6}");
                    }
                    println!();
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Assemble { file, balance } => {
            let arrangement = parse_arrangement(&read_input(&file)?).map_err(failure)?;
            let partial = assemble(&arrangement).map_err(failure)?;
            let fixed = partial.fixed_lambda();
            if balance {
                let finished = balance_free_arcs(&partial).map_err(failure)?;
                eprintln!(
                    "assembled Q_{}: {} inter-cube zeros, {} free edges, final lambda {}",
                    partial.dimension(),
                    partial.inter_slot_zero_count(),
                    partial.free_edge_count(),
                    finished.lambda()
                );
                println!("{}", to_json_pretty(&LabeledDigraphDoc::from_labeled(&finished)));
            } else if cli.json {
                println!(
                    "{}",
                    json!({
                        "dimension": partial.dimension(),
                        "fixed_arcs": partial.fixed_arcs().len(),
                        "free_edges": partial.free_edge_count(),
                        "inter_cube_zeros": partial.inter_slot_zero_count(),
                        "fixed_lambda": lambda_json(&fixed),
                    })
                );
            } else {
                println!("dimension: {}", partial.dimension());
                println!("fixed arcs: {}", partial.fixed_arcs().len());
                println!("free edges: {}", partial.free_edge_count());
                println!("inter-cube zeros: {}", partial.inter_slot_zero_count());
                println!("fixed lambda: {fixed}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { dim, jobs } => {
            let report = classify_cordiality(dim, jobs).map_err(failure)?;
            if cli.json {
                println!("{}", to_json_pretty(&ClassificationReportDoc::from_report(&report)));
            } else {
                println!("dimension: {}", report.dimension);
                println!("total orientations: {}", report.total_orientations);
                println!("isomorphism classes: {}", report.isomorphism_class_count);
                println!(
                    "non-cordial classes: {}",
                    report.non_cordial_class_representatives.len()
                );
                for rep in &report.non_cordial_class_representatives {
                    println!("  orientation {}", bits_to_hex(rep.orientation_bits()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Orientability { file, keep_isolated, budget } => {
            let graph = parse_undirected_graph(&read_input(&file)?).map_err(failure)?;
            let options = OrientationSearchOptions {
                keep_isolated,
                budget: budget.unwrap_or(DEFAULT_ORIENTATION_BUDGET),
            };
            let searched = if keep_isolated {
                graph.vertex_count()
            } else {
                graph.without_isolated_vertices().vertex_count()
            };
            match find_23_orientation(&graph, &options).map_err(failure)? {
                Some((d, f)) => {
                    if cli.json {
                        println!(
                            "{}",
                            json!({
                                "orientable": true,
                                "searched_vertices": searched,
                                "arcs": d.arcs().iter().map(|&(t, h)| [t, h]).collect::<Vec<_>>(),
                                "labeling": labels_json(&f),
                                "lambda": lambda_json(&lambda(&d, &f).expect("witness lengths match")),
                            })
                        );
                    } else {
                        println!(
                            "(2,3)-orientable on {} vertices: labeling {}, arcs {:?}",
                            searched,
                            labels_string(&f),
                            d.arcs()
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if cli.json {
                        println!("{}", json!({"orientable": false, "searched_vertices": searched}));
                    } else {
                        println!("not (2,3)-orientable (searched {searched} vertices exhaustively)");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Fixtures { action } => match action {
            FixturesAction::List => {
                println!("cubes: {}", fixtures::CUBE_NAMES.join(", "));
                println!("arrangements: {}", fixtures::ARRANGEMENT_NAMES.join(", "));
                println!("bijections: {}", fixtures::BIJECTION_NAMES.join(", "));
                Ok(ExitCode::SUCCESS)
            }
            FixturesAction::Export { name } => {
                if let Some(cube) = fixtures::cube(&name) {
                    println!("{}", to_json_pretty(&LabeledDigraphDoc::from_labeled(&cube)));
                } else if let Some(arrangement) = fixtures::arrangement(&name) {
                    println!("{}", to_json_pretty(&ArrangementDoc::from_arrangement(&arrangement)));
                } else if let Some(bijection) = fixtures::bijection(&name) {
                    println!("{}", to_json_pretty(&bijection.as_slice().to_vec()));
                } else {
                    return Err(Failure {
                        code: 2,
                        message: format!("error: no fixture named {name:?}"),
                    });
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::ExportDot { file } => {
            let l = load_labeled(&file)?;
            print!("{}", to_dot(&l, "cordial"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Explore { dim, samples, attempts, seed } => {
            let report = explore(dim, samples, attempts, seed).map_err(failure)?;
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "dimension": report.dimension,
                        "seed": report.seed,
                        "samples": report.samples,
                        "cordial": report.cordial,
                        "non_cordial": report.non_cordial,
                        "undecided": report.undecided,
                        "exhaustive": report.exhaustive,
                        "non_cordial_examples": report
                            .non_cordial_examples
                            .iter()
                            .map(|h| bits_to_hex(h.orientation_bits()))
                            .collect::<Vec<_>>(),
                    })
                );
            } else {
                println!(
                    "dimension {} seed {}: {} samples, {} cordial, {} non-cordial, {} undecided ({})",
                    report.dimension,
                    report.seed,
                    report.samples,
                    report.cordial,
                    report.non_cordial,
                    report.undecided,
                    if report.exhaustive { "exhaustive per sample" } else { "sampled labelings" },
                );
                for h in &report.non_cordial_examples {
                    println!("  non-cordial orientation {}", bits_to_hex(h.orientation_bits()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
