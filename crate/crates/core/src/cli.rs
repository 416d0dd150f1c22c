//! Command-line front end.
//!
//! Every subcommand prints a table (TSV by default, JSON with
//! `--format json`) and exits with
//! 0 on success, 1 if any checked row fails, 2 on bad input and 3 when a
//! size guard trips.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::GaussianRational;
use crate::graphs::{Fragment, GraphJson, MultiGraph, Permutation};
use crate::lab::{
    connection_matrix, enumerate_fragments, glue_identity_check, rank_bound_check, CatalogBounds,
    CriterionInstance, GraphInvariant, LinearCombo, PartitionFunction, Report,
};
use crate::models::{
    fragment_tensor_guarded, partition_function, ModelJson, VertexModel,
};
use crate::symgroup::{
    char_sum_lhs_guarded, char_sum_rhs, m_matrix_guarded, m_rank_formula, partitions_of_guarded,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "vertexlab", version, about = "Exact vertex-model and connection-matrix experiments")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,

    /// Seed for randomized instances and default models.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest m for which S_m is enumerated.
    #[arg(long, global = true, default_value_t = 5)]
    pub max_permutation_degree: usize,

    #[arg(long, global = true, default_value_t = crate::models::DEFAULT_FRONTIER_GUARD)]
    pub frontier_guard: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(clap::Args, Debug, Clone)]
pub struct CatalogArgs {
    /// Fragment arity k.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = 2)]
    pub catalog_vertices: usize,
    /// Defaults to k + 2.
    #[arg(long)]
    pub catalog_edges: Option<usize>,
}

impl CatalogArgs {
    fn bounds(&self) -> CatalogBounds {
        CatalogBounds::new(self.catalog_vertices, self.catalog_edges.unwrap_or(self.k + 2))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition function of a graph.
    Eval {
        model: PathBuf,
        graph: PathBuf,
        /// Sum over all colorings instead of contracting.
        #[arg(long)]
        brute_force: bool,
    },
    /// Boundary tensor of a fragment, one coloring per row.
    Tensor { model: PathBuf, fragment: PathBuf },
    /// Connection matrix over an enumerated catalog.
    Connmat {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        catalog: CatalogArgs,
    },
    /// Rank of the connection matrix against n^k, plus the Gram factorization.
    Rank {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        catalog: CatalogArgs,
    },
    /// Rank of M_n(d) against the partition formula.
    Mnd {
        n: usize,
        /// Comma-separated exact rationals, e.g. `0,1,-3/2`.
        #[arg(allow_hyphen_values = true)]
        dlist: String,
    },
    /// Character sums against the content polynomial, per partition.
    Charsum { n: usize },
    /// Signed pinned-edge sums.
    Criterion {
        #[arg(long)]
        model: PathBuf,
        /// Fixed graph; random graphs are drawn when absent.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Comma-separated vertices of U (with --graph).
        #[arg(long)]
        u: Option<String>,
        /// Comma-separated targets s(u) (with --graph).
        #[arg(long)]
        targets: Option<String>,
        #[arg(long, default_value_t = 50)]
        instances: usize,
        /// Defaults to n + 1.
        #[arg(long)]
        u_size: Option<usize>,
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
        #[arg(long, default_value_t = 4)]
        max_edges: usize,
    },
    /// Tensor-power gluing identity for every pair in S_m.
    Glueid {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        fragment: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Antisymmetrizer against every fragment of a catalog.
    Kernelq {
        /// Number of colors of the default random model.
        #[arg(long)]
        n: Option<usize>,
        /// Use this model instead of a seeded random one.
        #[arg(long)]
        model: Option<PathBuf>,
        /// Defaults to n + 1.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 2)]
        catalog_vertices: usize,
        /// Defaults to 2k + 2.
        #[arg(long)]
        catalog_edges: Option<usize>,
    },
    /// List an enumerated catalog.
    Catalog {
        #[command(flatten)]
        catalog: CatalogArgs,
    },
}

/// Plain rows with named columns and an optional pass/fail verdict.
#[derive(Debug, Default, Serialize)]
struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
    #[serde(skip)]
    failure: Option<String>,
}

impl Table {
    fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Table::default()
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn fail(&mut self, message: String) {
        self.failure.get_or_insert(message);
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => {
                let mut out = self.columns.join("\t");
                out.push('\n');
                for row in &self.rows {
                    out.push_str(&row.join("\t"));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let mut out = serde_json::to_string_pretty(self).expect("plain data serializes");
                out.push('\n');
                out
            }
        }
    }
}

/// What a subcommand hands back before printing.
enum Output {
    Table(Table),
    Report(Report),
}

impl Output {
    fn render(&self, format: Format) -> String {
        match (self, format) {
            (Output::Table(t), _) => t.render(format),
            (Output::Report(r), Format::Tsv) => r.to_tsv(),
            (Output::Report(r), Format::Json) => r.to_json() + "\n",
        }
    }

    fn failure(&self) -> Option<String> {
        match self {
            Output::Table(t) => t.failure.clone(),
            Output::Report(r) => r
                .first_failure()
                .map(|row| format!("{} {}: {} != {}", row.experiment, row.parameters, row.lhs, row.rhs)),
        }
    }
}

/// Parses `args` (program name first), runs, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = write!(out, "{}", output.render(cli.format));
            match output.failure() {
                Some(msg) => {
                    let _ = writeln!(err, "first failure: {msg}");
                    EXIT_FAILED
                }
                None => EXIT_OK,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_guard() {
                EXIT_GUARD
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_model(path: &Path) -> Result<VertexModel> {
    ModelJson::parse(&read(path)?)?.to_model()
}

fn load_graph(path: &Path) -> Result<MultiGraph> {
    GraphJson::parse(&read(path)?)?.to_graph()
}

fn load_fragment(path: &Path) -> Result<Fragment> {
    GraphJson::parse(&read(path)?)?.to_fragment()
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>>
where
    T::Err: Display,
{
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|e| Error::Parse(format!("{what} `{s}`: {e}")))
        })
        .collect()
}

fn check_degree(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::GuardExceeded { what, limit, actual })
    } else {
        Ok(())
    }
}

fn status(pass: bool) -> String {
    if pass { "ok" } else { "FAIL" }.to_string()
}

fn graph_summary(g: &MultiGraph) -> String {
    GraphJson::from(g).to_json()
}

fn join<T: Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn execute(cli: &Cli) -> Result<Output> {
    let max_perm = cli.max_permutation_degree;
    match &cli.command {
        Command::Eval {
            model,
            graph,
            brute_force,
        } => {
            let y = load_model(model)?;
            let g = load_graph(graph)?;
            let value = if *brute_force {
                partition_function(&y, &g)?
            } else {
                PartitionFunction::with_frontier_guard(&y, cli.frontier_guard).evaluate(&g)?
            };
            let mut t = Table::new(&["value"]);
            t.push(vec![value.to_string()]);
            Ok(Output::Table(t))
        }
        Command::Tensor { model, fragment } => {
            let y = load_model(model)?;
            let x = load_fragment(fragment)?;
            let tensor = fragment_tensor_guarded(&y, &x, cli.frontier_guard)?;
            let mut t = Table::new(&["coloring", "value"]);
            for (idx, value) in tensor.entries().iter().enumerate() {
                let colors: Vec<usize> = tensor.coloring(idx).into_iter().map(|c| c + 1).collect();
                t.push(vec![join(&colors), value.to_string()]);
            }
            Ok(Output::Table(t))
        }
        Command::Connmat { model, catalog } => {
            let y = load_model(model)?;
            let cat = enumerate_fragments(catalog.k, catalog.bounds())?;
            let f = PartitionFunction::with_frontier_guard(&y, cli.frontier_guard);
            let c = connection_matrix(&f, &cat)?;
            let mut t = Table::new(&["row", "entries"]);
            for r in 0..c.rows() {
                t.push(vec![r.to_string(), join(c.row(r))]);
            }
            Ok(Output::Table(t))
        }
        Command::Rank { model, catalog } => {
            let y = load_model(model)?;
            let cat = enumerate_fragments(catalog.k, catalog.bounds())?;
            let f = PartitionFunction::with_frontier_guard(&y, cli.frontier_guard);
            let rep = rank_bound_check(&f, &cat)?;
            let params = format!(
                "n={},k={},catalog={}",
                rep.colors, rep.arity, rep.catalog_size
            );
            let mut report = Report::new();
            report.push("rank<=n^k", params.clone(), rep.rank, &rep.bound, rep.passed());
            report.push("C=TtT", params.clone(), rep.gram_consistent, true, rep.gram_consistent);
            report.push("symmetric", params, rep.symmetric, true, rep.symmetric);
            Ok(Output::Report(report))
        }
        Command::Mnd { n, dlist } => {
            check_degree("permutation degree", max_perm, *n)?;
            let ds: Vec<GaussianRational> = parse_list(dlist, "d")?;
            let mut t = Table::new(&["d", "computed", "formula", "match"]);
            for d in &ds {
                let formula = m_rank_formula(*n, d)?;
                let computed = m_matrix_guarded(*n, d, max_perm)?.rank();
                let pass = formula == computed.into();
                if !pass {
                    t.fail(format!("d={d}: rank {computed} but formula {formula}"));
                }
                t.push(vec![d.to_string(), computed.to_string(), formula.to_string(), status(pass)]);
            }
            Ok(Output::Table(t))
        }
        Command::Charsum { n } => {
            check_degree("symmetric group degree", max_perm, *n)?;
            let mut t = Table::new(&["lambda", "character_sum", "content_product", "match"]);
            for lambda in partitions_of_guarded(*n, max_perm)? {
                let lhs = char_sum_lhs_guarded(&lambda, max_perm)?;
                let rhs = char_sum_rhs(&lambda);
                let pass = lhs == rhs;
                if !pass {
                    t.fail(format!("lambda={lambda}: {lhs} != {rhs}"));
                }
                t.push(vec![lambda.to_string(), lhs.to_string(), rhs.to_string(), status(pass)]);
            }
            Ok(Output::Table(t))
        }
        Command::Criterion {
            model,
            graph,
            u,
            targets,
            instances,
            u_size,
            max_vertices,
            max_edges,
        } => {
            let y = load_model(model)?;
            let f = PartitionFunction::with_frontier_guard(&y, cli.frontier_guard);
            let n = y.colors();
            let instances = match graph {
                Some(path) => {
                    let (Some(u), Some(targets)) = (u, targets) else {
                        return Err(Error::Parse("--graph needs --u and --targets".into()));
                    };
                    vec![CriterionInstance {
                        graph: load_graph(path)?,
                        u_set: parse_list(u, "vertex")?,
                        targets: parse_list(targets, "target")?,
                    }]
                }
                None => {
                    let size = u_size.unwrap_or(n + 1);
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    (0..*instances)
                        .map(|_| CriterionInstance::random(&mut rng, size, *max_vertices, *max_edges))
                        .collect()
                }
            };
            let mut report = Report::new();
            for inst in &instances {
                check_degree("permutation degree", max_perm, inst.u_set.len())?;
                let value = inst.evaluate(&f)?;
                let params = format!(
                    "G={};U={};s={}",
                    graph_summary(&inst.graph),
                    join(&inst.u_set),
                    join(&inst.targets)
                );
                // only |U| > n forces a zero sum
                if inst.u_set.len() > n {
                    let pass = value.is_zero();
                    report.push("criterion", params, value, 0, pass);
                } else {
                    report.push("criterion", params, value, "-", true);
                }
            }
            Ok(Output::Report(report))
        }
        Command::Glueid { model, fragment, m } => {
            check_degree("permutation degree", max_perm, *m)?;
            let y = load_model(model)?;
            let x = load_fragment(fragment)?;
            let f = PartitionFunction::with_frontier_guard(&y, cli.frontier_guard);
            let mut report = Report::new();
            for rho in Permutation::all(*m) {
                for sigma in Permutation::all(*m) {
                    let rep = glue_identity_check(&f, &x, &rho, &sigma)?;
                    let params = format!("m={m},rho={rho},sigma={sigma}");
                    report.push("glueid", params, &rep.lhs, &rep.rhs, rep.passed());
                }
            }
            Ok(Output::Report(report))
        }
        Command::Kernelq {
            n,
            model,
            k,
            catalog_vertices,
            catalog_edges,
        } => {
            let n = match (n, model) {
                (Some(n), _) => *n,
                (None, Some(path)) => load_model(path)?.colors(),
                (None, None) => return Err(Error::Parse("kernelq needs --n or --model".into())),
            };
            let k = k.unwrap_or(n + 1);
            check_degree("permutation degree", max_perm, k)?;
            let edges = catalog_edges.unwrap_or(2 * k + 2);
            let cat = enumerate_fragments(2 * k, CatalogBounds::new(*catalog_vertices, edges))?;
            let y = match model {
                Some(path) => load_model(path)?,
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    VertexModel::random(n, (2 * edges).max(1), &mut rng)?
                }
            };
            if y.colors() != n {
                return Err(Error::ShapeMismatch(format!(
                    "--n {n} but model has {} colors",
                    y.colors()
                )));
            }
            let f = PartitionFunction::with_frontier_guard(&y, cli.frontier_guard);
            let q = LinearCombo::antisymmetrizer(k);
            let mut report = Report::new();
            for (idx, h) in cat.items().iter().enumerate() {
                let value = q.glue_eval(&f, h)?;
                let params = format!("n={n},k={k},H#{idx}={}", GraphJson::from(h).to_json());
                let pass = k <= n || value.is_zero();
                report.push("kernelq", params, &value, if k > n { "0" } else { "-" }, pass);
            }
            Ok(Output::Report(report))
        }
        Command::Catalog { catalog } => {
            let cat = enumerate_fragments(catalog.k, catalog.bounds())?;
            let mut t = Table::new(&["index", "inner_vertices", "edges", "free_loops", "fragment"]);
            for (idx, x) in cat.items().iter().enumerate() {
                t.push(vec![
                    idx.to_string(),
                    x.inner_vertex_count().to_string(),
                    x.graph().edge_count().to_string(),
                    x.graph().free_loops().to_string(),
                    GraphJson::from(x).to_json(),
                ]);
            }
            Ok(Output::Table(t))
        }
    }
}
