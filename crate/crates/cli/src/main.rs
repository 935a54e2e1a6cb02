//! Command-line interface: exact values and certificates for single graphs,
//! family constructors, tree/cubic enumeration, and the verification
//! campaigns.
//!
//! Exit codes: 0 success (confirmed/consistent), 1 error, 2 counterexample.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use rainbowfree::graph::{Graph, PathPattern, Tree};
use rainbowfree::graph6::{
    from_graph6, parse_edge_list, parse_graph6_lines, to_edge_list, to_graph6,
};
use rainbowfree::harness::{self, Campaign, CampaignReport};
use rainbowfree::paths::{
    c_k_path, construct_path_coloring, cp_k_path, path_coloring_unique, PathQuery,
};
use rainbowfree::solver::{
    certificate, count_optimal_partitions, exact_c_k_with, exact_cp_k_with, SolveOptions,
    SolveResult,
};
use rainbowfree::thwarting::{theta_bruteforce, theta_tree_dp};
use rainbowfree::zoo::{build, FamilySpec};

/// Environment variable supplying the default worker count.
const JOBS_ENV: &str = "RAINBOWFREE_JOBS";

#[derive(Parser)]
#[command(
    name = "rainbowfree",
    about = "Maximum vertex colorings without rainbow paths: exact values, certificates, extremal families and exhaustive verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form path values, uniqueness, and constructed colorings.
    Paths {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Use the proper-coloring variant cp_k.
        #[arg(long)]
        proper: bool,
        /// Print the constructed optimal coloring as JSON.
        #[arg(long)]
        emit_coloring: bool,
    },
    /// P_k-thwarting number of a tree (DP) or any small graph (--oracle).
    Theta {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Use the brute-force oracle instead of the tree DP.
        #[arg(long)]
        oracle: bool,
        /// Print the witness edge set as JSON.
        #[arg(long)]
        emit_witness: bool,
    },
    /// Exact c_k / cp_k of a graph, with optional certificate output.
    Compute {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        proper: bool,
        /// Also count the optimal partitions.
        #[arg(long)]
        count_optima: bool,
        /// Write a re-checkable certificate JSON to this path.
        #[arg(long, value_name = "OUT.json")]
        certificate: Option<PathBuf>,
        /// Override the solver's order guard.
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Build a named family member and write it to a file.
    Make {
        #[arg(long, value_enum)]
        family: Family,
        /// Core graph file (corona / multi-corona).
        #[arg(long)]
        core: Option<PathBuf>,
        /// Size parameter (double-star / octopus / path / star).
        #[arg(long)]
        b: Option<usize>,
        /// Comma-separated feet counts per core vertex (multi-corona).
        #[arg(long, value_delimiter = ',')]
        feet: Option<Vec<usize>>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        format: OutputFormat,
    },
    /// Enumerate non-isomorphic trees (or cubic graphs) of one order.
    Enumerate {
        #[arg(long)]
        n: Option<usize>,
        /// Connected cubic graphs instead of trees.
        #[arg(long)]
        cubic: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Graph6)]
        format: OutputFormat,
        /// Ingest a graph6 list (one per line) instead of generating:
        /// validates, normalizes, and re-emits.
        #[arg(long)]
        from: Option<PathBuf>,
    },
    /// Run a verification campaign over enumerated instances.
    Verify {
        /// One of: min-c4, min-c5, path-formulas, uniqueness,
        /// attach-lemmas, thwart-lemmas, cubic-conjecture, all.
        campaign: String,
        /// Order cap (campaign default when omitted).
        #[arg(long)]
        n_max: Option<usize>,
        /// Restrict the pattern sizes, comma separated (where applicable).
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
        /// Worker count (0 = one per core). Defaults to $RAINBOWFREE_JOBS.
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here.
        #[arg(long, value_name = "OUT.json")]
        report: Option<PathBuf>,
    },
    /// Census of the trees attaining the cp_4 minimum at one order.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Corona,
    MultiCorona,
    DoubleStar,
    Octopus,
    Path,
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgeList,
}

fn default_jobs() -> usize {
    std::env::var(JOBS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(0)
}

/// Reads a graph file, sniffing the format: `.g6` files and single-token
/// lines parse as graph6, whitespace-separated integer pairs as edge list.
fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let looks_like_edge_list = text
        .lines()
        .map(|l| match l.find('#') {
            Some(p) => &l[..p],
            None => l,
        })
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| {
            let tokens: Vec<&str> = l.split_whitespace().collect();
            tokens.len() == 2 && tokens.iter().all(|t| t.chars().all(|c| c.is_ascii_digit()))
        });
    let is_g6_ext = path.extension().is_some_and(|e| e == "g6");
    if !is_g6_ext && looks_like_edge_list {
        let parsed = parse_edge_list(&text)?;
        if let Some(map) = &parsed.original_labels {
            eprintln!(
                "note: vertex labels re-indexed to 0..{}; original labels: {:?}",
                parsed.graph.vertex_count(),
                map
            );
        }
        Ok(parsed.graph)
    } else {
        Ok(from_graph6(text.trim())?)
    }
}

fn write_graph(g: &Graph, path: &Path, format: OutputFormat) -> Result<()> {
    let content = match format {
        OutputFormat::Graph6 => format!("{}\n", to_graph6(g)),
        OutputFormat::EdgeList => to_edge_list(g),
    };
    fs::write(path, content).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn cmd_paths(n: usize, k: usize, proper: bool, emit_coloring: bool) -> Result<ExitCode> {
    let query = PathQuery::new(n, k, proper)?;
    let value = if proper { cp_k_path(n, k) } else { c_k_path(n, k) };
    let name = if proper { "cp" } else { "c" };
    println!("{name}_{k}(P_{n}) = {value}");
    match path_coloring_unique(&query) {
        Ok(unique) => println!(
            "optimal coloring unique: {}",
            if unique { "yes" } else { "no" }
        ),
        Err(_) => println!("optimal coloring unique: n < k-1, not defined"),
    }
    if emit_coloring {
        let coloring = construct_path_coloring(&query);
        println!("{}", serde_json::to_string(&coloring)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_theta(path: &Path, k: usize, oracle: bool, emit_witness: bool) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let pattern = PathPattern::new(k)?;
    let result = if oracle {
        theta_bruteforce(&g, pattern)?
    } else {
        let tree = Tree::new(g.clone())
            .context("theta DP needs a tree; pass --oracle for general graphs")?;
        theta_tree_dp(&tree, pattern)
    };
    println!("theta_P{k} = {}", result.value);
    if emit_witness {
        println!("{}", serde_json::to_string(result.witness.edges())?);
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_compute(
    path: &Path,
    k: usize,
    proper: bool,
    count_optima: bool,
    cert_out: Option<&Path>,
    max_n: Option<usize>,
) -> Result<ExitCode> {
    let g = read_graph(path)?;
    let pattern = PathPattern::new(k)?;
    let opts = SolveOptions { max_n };
    let name = if proper { "cp" } else { "c" };
    if proper {
        match exact_cp_k_with(&g, pattern, &opts)? {
            SolveResult::Solved(s) => {
                println!("{name}_{k} = {}", s.value);
                println!("witness = {}", serde_json::to_string(&s.witness)?);
            }
            SolveResult::Undefined => println!("{name}_{k} = undefined"),
        }
    } else {
        let s = exact_c_k_with(&g, pattern, &opts)?;
        println!("{name}_{k} = {}", s.value);
        println!("witness = {}", serde_json::to_string(&s.witness)?);
    }
    if count_optima {
        match count_optimal_partitions(&g, pattern, proper) {
            Ok(count) => println!("optimal partitions = {count}"),
            Err(e) => println!("optimal partitions = n/a ({e})"),
        }
    }
    if let Some(out) = cert_out {
        let cert = certificate(&g, pattern, proper, &opts)?;
        fs::write(out, serde_json::to_string_pretty(&cert)?)
            .with_context(|| format!("writing {}", out.display()))?;
        println!("certificate written to {}", out.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_make(
    family: Family,
    core: Option<&Path>,
    b: Option<usize>,
    feet: Option<Vec<usize>>,
    out: &Path,
    format: OutputFormat,
) -> Result<ExitCode> {
    let need_core = |core: Option<&Path>| -> Result<Graph> {
        read_graph(core.context("this family needs --core FILE")?)
    };
    let need_b = |b: Option<usize>| -> Result<usize> { b.context("this family needs --b N") };
    let spec = match family {
        Family::Corona => FamilySpec::Corona {
            core: need_core(core)?,
        },
        Family::MultiCorona => FamilySpec::MultiCorona {
            core: need_core(core)?,
            feet: feet.context("multi-corona needs --feet LIST")?,
        },
        Family::DoubleStar => FamilySpec::DoubleStar { b: need_b(b)? },
        Family::Octopus => FamilySpec::Octopus { b: need_b(b)? },
        Family::Path => FamilySpec::Path { n: need_b(b)? },
        Family::Star => FamilySpec::Star { b: need_b(b)? },
    };
    let g = build(&spec)?;
    write_graph(&g, out, format)?;
    println!(
        "wrote {} ({} vertices, {} edges)",
        out.display(),
        g.vertex_count(),
        g.edge_count()
    );
    // Degenerate family members coincide with paths.
    match &spec {
        FamilySpec::DoubleStar { b: 1 } => println!("note: D_1 is the path P_4"),
        FamilySpec::Octopus { b: 1 } => println!("note: O_1 is the path P_3"),
        _ => {}
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(
    n: Option<usize>,
    cubic: bool,
    format: OutputFormat,
    from: Option<&Path>,
) -> Result<ExitCode> {
    let emit = |g: &Graph| match format {
        OutputFormat::Graph6 => println!("{}", to_graph6(g)),
        OutputFormat::EdgeList => print!("#\n{}", to_edge_list(g)),
    };
    if let Some(path) = from {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        let graphs = parse_graph6_lines(&text)?;
        for g in &graphs {
            if let Some(order) = n {
                if g.vertex_count() != order {
                    continue;
                }
            }
            if cubic {
                let ok = (0..g.vertex_count()).all(|v| g.degree(v) == 3) && g.is_connected();
                if !ok {
                    bail!("ingested graph {} is not connected cubic", to_graph6(g));
                }
            }
            emit(g);
        }
        return Ok(ExitCode::SUCCESS);
    }
    let order = n.context("--n is required unless --from is given")?;
    if cubic {
        for g in rainbowfree::enumerate::all_cubic_graphs(order)? {
            emit(&g);
        }
    } else {
        for t in rainbowfree::enumerate::all_trees(order)? {
            emit(t.graph());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_reports(reports: &[CampaignReport], out: Option<&Path>) -> Result<ExitCode> {
    for r in reports {
        print!("{}", r.render_text());
    }
    if let Some(path) = out {
        let json = if reports.len() == 1 {
            serde_json::to_string_pretty(&reports[0])?
        } else {
            serde_json::to_string_pretty(&reports)?
        };
        fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
    }
    if reports.iter().all(|r| r.ok()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(2))
    }
}

fn cmd_verify(
    campaign: &str,
    n_max: Option<usize>,
    ks: Option<Vec<usize>>,
    jobs: Option<usize>,
    report: Option<&Path>,
) -> Result<ExitCode> {
    let jobs = jobs.unwrap_or_else(default_jobs);
    let reports = if campaign == "all" {
        harness::run_all(n_max, jobs)?
    } else {
        let c: Campaign = campaign.parse()?;
        vec![harness::run(c, n_max, ks.as_deref(), jobs)?]
    };
    print_reports(&reports, report)
}

fn cmd_census(n: usize, jobs: Option<usize>) -> Result<ExitCode> {
    let jobs = jobs.unwrap_or_else(default_jobs);
    let rows = harness::cp4_minimum_census(n, jobs)?;
    let expected = n.div_ceil(2) + 1;
    println!(
        "trees of order {n} with cp_4 = {expected} (the minimum): {}",
        rows.len()
    );
    for entry in &rows {
        println!(
            "{}{}",
            entry.graph6,
            if entry.corona { "  # corona" } else { "" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Paths {
            n,
            k,
            proper,
            emit_coloring,
        } => cmd_paths(n, k, proper, emit_coloring),
        Command::Theta {
            graph,
            k,
            oracle,
            emit_witness,
        } => cmd_theta(&graph, k, oracle, emit_witness),
        Command::Compute {
            graph,
            k,
            proper,
            count_optima,
            certificate,
            max_n,
        } => cmd_compute(&graph, k, proper, count_optima, certificate.as_deref(), max_n),
        Command::Make {
            family,
            core,
            b,
            feet,
            out,
            format,
        } => cmd_make(family, core.as_deref(), b, feet, &out, format),
        Command::Enumerate {
            n,
            cubic,
            format,
            from,
        } => cmd_enumerate(n, cubic, format, from.as_deref()),
        Command::Verify {
            campaign,
            n_max,
            k,
            jobs,
            report,
        } => cmd_verify(&campaign, n_max, k, jobs, report.as_deref()),
        Command::Census { n, jobs } => cmd_census(n, jobs),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
