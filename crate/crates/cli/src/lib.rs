//! Command-line front end. [`run`] does all the work and returns the exit
//! code with captured output so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 a "no" answer (not admissible, not a cube
//! group, failed sweep), 2 usage or input errors, 3 internal consistency
//! failures.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cubegroup::decomposition::NormalForm;
use cubegroup::enumerate::SweepOptions;
use cubegroup::io::{cayley_dot, parse_decorated_graph, parse_perm_group, serialize_decorated_graph, vertex_name};
use cubegroup::trajectory::FailureKind;
use cubegroup::{
    decorated_graph_from_group, edge_partition, generate_group, is_admissible, normal_form, orbit_tree, orbits,
    presentation_relators, rho_via_formula, sign_count, sweep_with, trajectory, word_matrix, Category,
    DecoratedGraph, Error, Execution, OrbitTree, PermutationGroup,
};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "cubegroup", version, about = "Cube groups from decorated graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether a decorated graph is admissible.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate the group and list its elements.
    Group {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the Cayley graph in DOT format (`-` for stdout).
    Cayley {
        file: PathBuf,
        #[arg(long)]
        dot: PathBuf,
    },
    /// Orbits of the generators acting on themselves.
    Orbits {
        file: PathBuf,
        #[arg(long)]
        tree: bool,
        #[arg(long)]
        json: bool,
    },
    /// Product decomposition read off the orbit tree.
    Decompose { file: PathBuf },
    /// Boolean normal form of the element given by a word.
    NormalForm {
        file: PathBuf,
        /// Word in application order, e.g. "b a c".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Generator ordering; defaults to the orbit-tree ordering.
        #[arg(long)]
        ordering: Option<String>,
    },
    /// Signed permutation of the element given by a word.
    Rep {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        matrix: bool,
    },
    /// Extract a decorated graph from a permutation group file.
    FromGroup { file: PathBuf },
    /// Exhaustive verification sweep over all decorated graphs of a rank.
    Enumerate {
        #[arg(long)]
        rank: usize,
        /// Worker threads; 1 runs sequentially.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Core(Error),
    Io(String),
    /// A domain "no" already rendered to stdout.
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = Result<String, (String, Failure)>;

fn exit_code(category: Category) -> i32 {
    match category {
        Category::Domain => 1,
        Category::Input => 2,
        Category::Internal => 3,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err((stdout, failure)) => {
            let (code, stderr) = match failure {
                Failure::Core(e) => (exit_code(e.category()), format!("error[{}]: {e}\n", e.kind())),
                Failure::Io(msg) => (2, format!("error[Io]: {msg}\n")),
                Failure::Negative(msg) => (1, msg),
            };
            Outcome { code, stdout, stderr }
        }
    }
}

fn read(path: &Path) -> Result<String, (String, Failure)> {
    std::fs::read_to_string(path).map_err(|e| (String::new(), Failure::Io(format!("{}: {e}", path.display()))))
}

fn load_graph(path: &Path) -> Result<DecoratedGraph, (String, Failure)> {
    parse_decorated_graph(&read(path)?).map_err(|e| (String::new(), e.into()))
}

fn core<T>(r: cubegroup::Result<T>) -> Result<T, (String, Failure)> {
    r.map_err(|e| (String::new(), e.into()))
}

fn names(g: &DecoratedGraph, ids: &[usize]) -> Vec<String> {
    ids.iter().map(|&i| g.labels().name(i).to_string()).collect()
}

fn tree_json(g: &DecoratedGraph, t: &OrbitTree) -> Value {
    json!({
        "labels": names(g, &t.labels),
        "children": t.children.iter().map(|c| tree_json(g, c)).collect::<Vec<_>>(),
    })
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Check { file, json } => check(&load_graph(&file)?, json),
        Command::Group { file, json } => group(&load_graph(&file)?, json),
        Command::Cayley { file, dot } => {
            let grp = core(generate_group(&load_graph(&file)?))?;
            let text = cayley_dot(&grp);
            if dot.as_os_str() == "-" {
                return Ok(text);
            }
            std::fs::write(&dot, text).map_err(|e| (String::new(), Failure::Io(format!("{}: {e}", dot.display()))))?;
            Ok(format!(
                "wrote {} vertices and {} edges to {}\n",
                grp.order(),
                grp.cayley().edges().len(),
                dot.display()
            ))
        }
        Command::Orbits { file, tree, json } => {
            let g = load_graph(&file)?;
            let parts = orbits(&g);
            let t = if tree { Some(core(orbit_tree(&g))?) } else { None };
            if json {
                let mut v = json!({
                    "format_version": FORMAT_VERSION,
                    "orbits": parts.blocks.iter().map(|b| names(&g, b)).collect::<Vec<_>>(),
                });
                if let Some(t) = &t {
                    v["tree"] = tree_json(&g, t);
                }
                return Ok(format!("{v:#}\n"));
            }
            let blocks: Vec<String> = parts
                .blocks
                .iter()
                .map(|b| format!("{{{}}}", names(&g, b).join(",")))
                .collect();
            let mut out = format!("orbits: {}\n", blocks.join(" "));
            if let Some(t) = &t {
                writeln!(out, "tree: {}", t.display(&g)).unwrap();
            }
            Ok(out)
        }
        Command::Decompose { file } => {
            let g = load_graph(&file)?;
            let grp = core(generate_group(&g))?;
            let ordering = core(orbit_tree(&g))?.ordering();
            core(normal_form(&grp, &ordering))?;
            let factors: String = ordering.iter().map(|&s| format!("<{}>", g.labels().name(s))).collect();
            Ok(format!(
                "ordering: {}\nG = {factors}\n",
                g.labels().format_word(&ordering)
            ))
        }
        Command::NormalForm { file, word, ordering } => {
            let g = load_graph(&file)?;
            let grp = core(generate_group(&g))?;
            let word = core(g.labels().parse_word(&word))?;
            let ordering = match ordering {
                Some(o) => core(g.labels().parse_word(&o))?,
                None => core(orbit_tree(&g))?.ordering(),
            };
            let nf: NormalForm = core(normal_form(&grp, &ordering))?;
            let element = core(grp.element_of_word(&word))?;
            let bits = nf.bits(element);
            let factors = nf.factors(bits);
            let product = if factors.is_empty() {
                "1".to_string()
            } else {
                g.labels().format_word(&factors)
            };
            Ok(format!(
                "ordering: {}\nbits: {}\nnormal form: {product}\nvertex: {}\n",
                g.labels().format_word(&ordering),
                nf.format_bits(bits),
                vertex_name(g.labels(), grp.subset(element))
            ))
        }
        Command::Rep { file, word, matrix } => {
            let g = load_graph(&file)?;
            let word = core(g.labels().parse_word(&word))?;
            let formula = core(rho_via_formula(&g, &word))?;
            let product = core(word_matrix(&g, &word))?;
            let labels = g.labels();
            let mut out = format!("word: {}\nrho: {}\n", labels.format_word(&word), formula.format(labels));
            let counts = (0..g.rank())
                .map(|t| core(sign_count(&g, &word, t)).map(|c| format!("{}:{}", labels.name(t), c.count)))
                .collect::<Result<Vec<_>, _>>()?;
            writeln!(out, "sign counts: {}", counts.join(" ")).unwrap();
            if matrix {
                let width = labels.names().iter().map(|l| l.as_str().len()).max().unwrap_or(1);
                for (r, row) in formula.matrix().iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                    writeln!(out, "{:>width$} [{}]", labels.name(r).as_str(), cells.join(" ")).unwrap();
                }
            }
            if formula != product {
                return Err((
                    out,
                    Failure::Core(Error::HypercubeCheckFailed(
                        "sign formula disagrees with the matrix product".to_string(),
                    )),
                ));
            }
            Ok(out)
        }
        Command::FromGroup { file } => {
            let spec = core(parse_perm_group(&read(&file)?))?;
            let g = core(decorated_graph_from_group(
                &PermutationGroup { degree: spec.degree },
                &spec.generators,
                spec.labels,
            ))?;
            Ok(serialize_decorated_graph(&g))
        }
        Command::Enumerate { rank, jobs, json } => {
            let execution = match jobs {
                Some(1) => Execution::Sequential,
                Some(k) => Execution::Threads(k),
                None => Execution::Parallel,
            };
            let opts = SweepOptions {
                execution,
                ..SweepOptions::default()
            };
            let report = core(sweep_with(rank, &opts))?;
            let out = if json {
                let mut v = serde_json::to_value(&report).expect("serializable report");
                v["format_version"] = json!(FORMAT_VERSION);
                format!("{v:#}\n")
            } else {
                let mut out = format!(
                    "rank: {}\ngraphs: {}\nadmissible: {}\nverified: {}\nfailures: {}\n",
                    report.rank,
                    report.total_graphs,
                    report.admissible_count,
                    report.verified_count,
                    report.failures.len()
                );
                for f in &report.failures {
                    writeln!(out, "failure: graph #{} {}: {}", f.index, f.check, f.detail).unwrap();
                }
                out
            };
            if report.passed() {
                Ok(out)
            } else {
                Err((out, Failure::Negative("error[SweepFailed]: verification failures\n".to_string())))
            }
        }
    }
}

fn check(g: &DecoratedGraph, as_json: bool) -> CmdResult {
    let report = is_admissible(g);
    let labels = g.labels();
    let out = if as_json {
        let failures: Vec<Value> = report
            .failures
            .iter()
            .map(|f| {
                json!({
                    "seed": [labels.name(f.seed.0).as_str(), labels.name(f.seed.1).as_str()],
                    "kind": f.kind,
                    "witness": f.witness.as_ref().map(|w| w.format_with(|x| labels.name(x).to_string())),
                })
            })
            .collect();
        let v = json!({
            "format_version": FORMAT_VERSION,
            "admissible": report.admissible,
            "failures": failures,
        });
        format!("{v:#}\n")
    } else {
        let mut out = format!("admissible: {}\n", if report.admissible { "yes" } else { "no" });
        for f in &report.failures {
            let seed = format!("({}, {})", labels.name(f.seed.0), labels.name(f.seed.1));
            match f.kind {
                FailureKind::NotFourPeriodic => {
                    let t = trajectory(g, f.seed.0, f.seed.1).expect("seed from report");
                    writeln!(out, "failure: seed {seed} NotFourPeriodic: {} ...", labels.format_word(&t.terms))
                        .unwrap();
                }
                FailureKind::Holonomy => {
                    let w = f.witness.as_ref().expect("holonomy witness");
                    writeln!(
                        out,
                        "failure: seed {seed} Holonomy: {}",
                        w.format_with(|x| labels.name(x).to_string())
                    )
                    .unwrap();
                }
            }
        }
        if report.admissible {
            let parts: Vec<String> = edge_partition(g)
                .expect("admissible")
                .iter()
                .map(|e| e.display(g))
                .collect();
            let rels: Vec<String> = presentation_relators(g)
                .expect("admissible")
                .iter()
                .map(|r| r.display(g))
                .collect();
            writeln!(out, "edge partition: {}", parts.join(" ")).unwrap();
            writeln!(out, "presentation: <{} | {}>", labels.format_word(&(0..g.rank()).collect::<Vec<_>>()), rels.join(", "))
                .unwrap();
        }
        out
    };
    if report.admissible {
        Ok(out)
    } else {
        Err((out, Failure::Negative("error[NotAdmissible]: decorated graph is not admissible\n".to_string())))
    }
}

fn group(g: &DecoratedGraph, as_json: bool) -> CmdResult {
    let grp = core(generate_group(g))?;
    let labels = g.labels();
    let mut rows: Vec<(u32, String, String)> = (0..grp.order())
        .map(|id| {
            let e = grp.element(id);
            (grp.subset(id), vertex_name(labels, grp.subset(id)), labels.format_word(&e.word))
        })
        .collect();
    rows.sort();
    if as_json {
        let elements: Vec<Value> = rows
            .iter()
            .map(|(mask, name, word)| {
                let id = grp.element_of_subset(*mask);
                json!({
                    "vertex": name,
                    "word": word,
                    "perm": grp.element(id).matrix.perm().images(),
                    "signs": grp.element(id).matrix.signs(),
                })
            })
            .collect();
        let v = json!({
            "format_version": FORMAT_VERSION,
            "rank": grp.rank(),
            "order": grp.order(),
            "elements": elements,
        });
        return Ok(format!("{v:#}\n"));
    }
    let mut out = format!(
        "order: {} = 2^{}\ncayley graph: {}-cube\n",
        grp.order(),
        grp.rank(),
        grp.rank()
    );
    for (_, name, word) in rows {
        let word = if word.is_empty() { "(empty)".to_string() } else { word };
        writeln!(out, "{name:<width$} word: {word}", width = 2 * grp.rank() + 1).unwrap();
    }
    Ok(out)
}
