//! Command-line orchestrator for the detection pipeline. Each subcommand
//! reads artifact files produced by earlier stages and writes its own, so a
//! full run is a sequence of invocations over a shared artifact directory.
//!
//! Every command prints a single JSON summary line on stdout; failures print
//! `{"error": ...}` on stderr and exit nonzero. Logging goes to stderr and is
//! controlled by the `AUGURY_LOG` environment variable.

mod config;

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use augury::clustering::{Acpm, CommunityDetector, CommunitySet, Cpm};
use augury::corpus::{
    load_artifact, load_ontology, load_papers, save_artifact, LoadOptions, Ontology, PaperRecord,
};
use augury::evaluation::{
    build_similarity_matrix, match_report, precision_recall_at, precision_recall_sweep,
    write_pr_csv, JaccardMode, SimilarityMatrix,
};
use augury::evolution::{build_evolutionary, window_for_year, EvolutionaryNetwork};
use augury::gold::{build_gold_standard, GoldStandard};
use augury::networks::{build_year_network, YearTopicNetwork};
use augury::postprocess::{
    dedupe_merge, rank_active_authors, rank_relevant_papers, semantic_filter, trim_cluster,
    Cluster, ClusterSet,
};
use augury::synthetic::{generate, topic_id, PlantSpec};

use config::{Overrides, PipelineConfig};

/// Names shown per cluster in the ranked author and paper listings.
const RANKED_PER_CLUSTER: usize = 10;

#[derive(Parser)]
#[command(
    name = "augury",
    version,
    about = "Detect embryonic research topics from the dynamics of topic co-occurrence"
)]
struct Cli {
    /// TOML config file; flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(flatten)]
    overrides: Overrides,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Acpm,
    Cpm,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Acpm => "acpm",
            Algo::Cpm => "cpm",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded corpus with a planted fast-growing topic group.
    Synth {
        /// Total topics, including the planted ones.
        #[arg(long, default_value_t = 500)]
        topics: usize,
        /// Corpus years; the last one carries the debut papers.
        #[arg(long, default_value_t = 6)]
        years: usize,
        /// Topics whose pairwise collaboration grows linearly.
        #[arg(long, default_value_t = 8)]
        planted: usize,
        /// First corpus year.
        #[arg(long, default_value_t = 2000)]
        start_year: i32,
        /// Papers added per planted pair per elapsed year.
        #[arg(long, default_value_t = 2.0)]
        growth: f64,
        /// Baseline papers per planted pair.
        #[arg(long, default_value_t = 3.0)]
        background: f64,
        /// Gaussian jitter applied to planted pair counts.
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
    },
    /// Build one topic co-occurrence network per corpus year.
    BuildNetworks,
    /// Fit slope networks over the window ending at --year.
    BuildEvolutionary {
        #[arg(long)]
        year: i32,
    },
    /// Run community detection on the window ending at --year.
    Detect {
        #[arg(long)]
        year: i32,
        #[arg(long, value_enum, default_value_t = Algo::Acpm)]
        algo: Algo,
    },
    /// Trim, merge, filter, and annotate detected communities.
    Postprocess {
        #[arg(long)]
        year: i32,
        #[arg(long, value_enum, default_value_t = Algo::Acpm)]
        algo: Algo,
    },
    /// Derive debut years and ancestor lists from the corpus.
    GoldStandard {
        /// Keep only debutants the ontology knows.
        #[arg(long)]
        onto_only: bool,
        /// Earliest soft debut kept (requires --soft-to).
        #[arg(long)]
        soft_from: Option<i32>,
        /// Latest soft debut kept (requires --soft-from).
        #[arg(long)]
        soft_to: Option<i32>,
    },
    /// Score year --year clusters against next years' debutants.
    Evaluate {
        #[arg(long)]
        year: i32,
        /// Match threshold used for the printed summary and match report.
        #[arg(long, default_value_t = 0.2)]
        report_tau: f64,
    },
    /// Write the precision/recall curve for an existing similarity matrix.
    SweepReport {
        #[arg(long)]
        year: i32,
    },
}

fn main() -> ExitCode {
    init_tracing();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("{}", json!({ "error": format!("{error:#}") }));
            ExitCode::FAILURE
        }
    }
}

fn init_tracing() {
    use tracing_subscriber::EnvFilter;
    tracing_subscriber::fmt()
        .with_env_filter(
            EnvFilter::try_from_env("AUGURY_LOG").unwrap_or_else(|_| EnvFilter::new("warn")),
        )
        .with_writer(std::io::stderr)
        .init();
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let cfg = PipelineConfig::assemble(cli.config.as_deref(), &cli.overrides)?;
    cfg.validate()?;
    match cli.command {
        Command::Synth {
            topics,
            years,
            planted,
            start_year,
            growth,
            background,
            noise,
        } => synth(&cfg, topics, years, planted, start_year, growth, background, noise),
        Command::BuildNetworks => build_networks(&cfg),
        Command::BuildEvolutionary { year } => build_evolutionary_cmd(&cfg, year),
        Command::Detect { year, algo } => detect(&cfg, year, algo),
        Command::Postprocess { year, algo } => postprocess(&cfg, year, algo),
        Command::GoldStandard {
            onto_only,
            soft_from,
            soft_to,
        } => gold_standard(&cfg, onto_only, soft_from, soft_to),
        Command::Evaluate { year, report_tau } => evaluate(&cfg, year, report_tau),
        Command::SweepReport { year } => sweep_report(&cfg, year),
    }
}

fn warn_all(warnings: &[String]) {
    for warning in warnings {
        tracing::warn!("{warning}");
    }
}

fn load_corpus(cfg: &PipelineConfig) -> anyhow::Result<Vec<PaperRecord>> {
    let report = load_papers(&cfg.papers, &LoadOptions::default())
        .with_context(|| format!("loading papers from {}", cfg.papers.display()))?;
    warn_all(&report.warnings);
    Ok(report.value)
}

fn load_onto(cfg: &PipelineConfig) -> anyhow::Result<Ontology> {
    let report = load_ontology(&cfg.ontology, &LoadOptions::default())
        .with_context(|| format!("loading ontology from {}", cfg.ontology.display()))?;
    warn_all(&report.warnings);
    Ok(report.value)
}

fn artifact_path(cfg: &PipelineConfig, name: &str) -> PathBuf {
    cfg.out.join(name)
}

fn written(paths: &[PathBuf]) -> Vec<String> {
    paths.iter().map(|p| p.display().to_string()).collect()
}

/// Years for which a `network-{year}.json` artifact exists in the out dir.
fn available_network_years(out: &Path) -> anyhow::Result<BTreeSet<i32>> {
    let mut years = BTreeSet::new();
    let entries =
        fs::read_dir(out).with_context(|| format!("cannot read directory {}", out.display()))?;
    for entry in entries {
        let name = entry?.file_name();
        let Some(name) = name.to_str() else { continue };
        if let Some(year) = name
            .strip_prefix("network-")
            .and_then(|rest| rest.strip_suffix(".json"))
        {
            if let Ok(year) = year.parse() {
                years.insert(year);
            }
        }
    }
    Ok(years)
}

/// Load the co-occurrence networks covering the window that ends at `year`.
fn load_window(cfg: &PipelineConfig, year: i32) -> anyhow::Result<Vec<YearTopicNetwork>> {
    let available = available_network_years(&cfg.out)?;
    let years = window_for_year(year, cfg.window, &available)?;
    years
        .iter()
        .map(|y| {
            let path = artifact_path(cfg, &format!("network-{y}.json"));
            load_artifact::<YearTopicNetwork>(&path)
                .with_context(|| format!("loading {}", path.display()))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn synth(
    cfg: &PipelineConfig,
    topics: usize,
    years: usize,
    planted: usize,
    start_year: i32,
    growth: f64,
    background: f64,
    noise: f64,
) -> anyhow::Result<()> {
    if planted > topics {
        bail!("cannot plant {planted} topics out of {topics}");
    }
    let spec = PlantSpec {
        seed: cfg.seed,
        n_topics: topics,
        n_years: years,
        start_year,
        planted: (0..planted).map(topic_id).collect(),
        growth_rate: growth,
        background_rate: background,
        noise,
    };
    let corpus = generate(&spec)?;
    corpus.write_to(&cfg.papers, &cfg.ontology)?;
    println!(
        "{}",
        json!({
            "written": written(&[cfg.papers.clone(), cfg.ontology.clone()]),
            "papers": corpus.papers.len(),
            "debutant": corpus.debutant,
            "debut_year": corpus.debut_year,
        })
    );
    Ok(())
}

fn build_networks(cfg: &PipelineConfig) -> anyhow::Result<()> {
    let papers = load_corpus(cfg)?;
    let ontology = load_onto(cfg)?;
    let years: BTreeSet<i32> = papers.iter().map(|p| p.year).collect();
    if years.is_empty() {
        bail!("corpus {} holds no papers", cfg.papers.display());
    }
    fs::create_dir_all(&cfg.out)
        .with_context(|| format!("cannot create {}", cfg.out.display()))?;
    let echo = cfg.echo();
    let mut paths = Vec::new();
    for year in years {
        let net = build_year_network(&papers, year, &ontology);
        let path = artifact_path(cfg, &format!("network-{year}.json"));
        save_artifact(&net, &path, Some(&echo))?;
        paths.push(path);
    }
    println!("{}", json!({ "written": written(&paths) }));
    Ok(())
}

fn build_evolutionary_cmd(cfg: &PipelineConfig, year: i32) -> anyhow::Result<()> {
    let windows = load_window(cfg, year)?;
    let evonet = build_evolutionary(&windows)?;
    let path = artifact_path(cfg, &format!("evolutionary-{year}.json"));
    save_artifact(&evonet, &path, Some(&cfg.echo()))?;
    println!(
        "{}",
        json!({
            "written": written(&[path]),
            "topics": evonet.node_slope.len(),
            "links": evonet.edge_slope.len(),
        })
    );
    Ok(())
}

fn detect(cfg: &PipelineConfig, year: i32, algo: Algo) -> anyhow::Result<()> {
    let windows = load_window(cfg, year)?;
    let evonet = build_evolutionary(&windows)?;
    let communities = match algo {
        Algo::Acpm => Acpm {
            intensity_threshold: cfg.threshold,
        }
        .detect(&evonet),
        Algo::Cpm => Cpm {
            min_slope: cfg.threshold,
            k: 3,
        }
        .detect(&evonet),
    };
    let set = CommunitySet {
        year,
        algorithm: algo.name().to_string(),
        communities: communities.clone(),
    };
    let path = artifact_path(cfg, &format!("communities-{}-{year}.json", algo.name()));
    save_artifact(&set, &path, Some(&cfg.echo()))?;
    println!(
        "{}",
        json!({ "written": written(&[path]), "communities": communities.len() })
    );
    Ok(())
}

fn postprocess(cfg: &PipelineConfig, year: i32, algo: Algo) -> anyhow::Result<()> {
    let papers = load_corpus(cfg)?;
    let ontology = load_onto(cfg)?;
    let communities_path = artifact_path(cfg, &format!("communities-{}-{year}.json", algo.name()));
    let communities: CommunitySet = load_artifact(&communities_path)
        .with_context(|| format!("loading {} (run detect first)", communities_path.display()))?;
    let evonet_path = artifact_path(cfg, &format!("evolutionary-{year}.json"));
    let evonet: EvolutionaryNetwork = load_artifact(&evonet_path).with_context(|| {
        format!(
            "loading {} (run build-evolutionary first)",
            evonet_path.display()
        )
    })?;
    let clusters: Vec<Cluster> = communities
        .communities
        .iter()
        .map(|community| trim_cluster(community, &evonet, cfg.max_links))
        .collect::<Result<_, _>>()?;
    let clusters = dedupe_merge(clusters, cfg.merge_sim, cfg.max_links);
    let clusters = semantic_filter(clusters, &ontology, cfg.min_onto_frac);
    let window = (year - cfg.window as i32 + 1, year);
    let clusters: Vec<Cluster> = clusters
        .into_iter()
        .map(|mut cluster| {
            cluster.authors =
                rank_active_authors(&cluster, &papers, &ontology, window, RANKED_PER_CLUSTER);
            cluster.papers =
                rank_relevant_papers(&cluster, &papers, &ontology, window, RANKED_PER_CLUSTER);
            cluster
        })
        .collect();
    let set = ClusterSet { year, clusters };
    let path = artifact_path(cfg, &format!("clusters-{year}.json"));
    save_artifact(&set, &path, Some(&cfg.echo()))?;
    println!(
        "{}",
        json!({ "written": written(&[path]), "clusters": set.clusters.len() })
    );
    Ok(())
}

fn gold_standard(
    cfg: &PipelineConfig,
    onto_only: bool,
    soft_from: Option<i32>,
    soft_to: Option<i32>,
) -> anyhow::Result<()> {
    let bounds = match (soft_from, soft_to) {
        (Some(from), Some(to)) => Some((from, to)),
        (None, None) => None,
        _ => bail!("--soft-from and --soft-to must be given together"),
    };
    let papers = load_corpus(cfg)?;
    let ontology = load_onto(cfg)?;
    let report = build_gold_standard(&papers, &ontology, cfg.ancestors_k, bounds, onto_only)?;
    warn_all(&report.warnings);
    let gold = report.value;
    fs::create_dir_all(&cfg.out)
        .with_context(|| format!("cannot create {}", cfg.out.display()))?;
    let path = artifact_path(cfg, "gold.json");
    save_artifact(&gold, &path, Some(&cfg.echo()))?;
    println!(
        "{}",
        json!({ "written": written(&[path]), "debutants": gold.entries.len() })
    );
    Ok(())
}

fn evaluate(cfg: &PipelineConfig, year: i32, report_tau: f64) -> anyhow::Result<()> {
    if !(0.0..=1.0).contains(&report_tau) {
        bail!("report-tau must be within 0..=1, got {report_tau}");
    }
    let ontology = load_onto(cfg)?;
    let clusters_path = artifact_path(cfg, &format!("clusters-{year}.json"));
    let clusters: ClusterSet = load_artifact(&clusters_path)
        .with_context(|| format!("loading {} (run postprocess first)", clusters_path.display()))?;
    let gold_path = artifact_path(cfg, "gold.json");
    let gold: GoldStandard = load_artifact(&gold_path)
        .with_context(|| format!("loading {} (run gold-standard first)", gold_path.display()))?;
    let mode: JaccardMode = cfg.jaccard_mode.parse()?;
    let report = build_similarity_matrix(year, &clusters.clusters, &gold, &ontology, mode, cfg.sup_depth)?;
    warn_all(&report.warnings);
    let matrix = report.value;
    let (precision, recall) = precision_recall_at(&matrix, report_tau)?;
    let matches = match_report(&matrix, report_tau);
    let matrix_path = artifact_path(cfg, &format!("similarity-{year}.json"));
    save_artifact(&matrix, &matrix_path, Some(&cfg.echo()))?;
    let matches_path = artifact_path(cfg, &format!("matches-{year}.json"));
    save_artifact(&matches, &matches_path, Some(&cfg.echo()))?;
    println!(
        "{}",
        json!({
            "written": written(&[matrix_path, matches_path]),
            "threshold": report_tau,
            "precision": precision,
            "recall": recall.map_or(json!("undefined"), |r| json!(r)),
        })
    );
    Ok(())
}

fn sweep_report(cfg: &PipelineConfig, year: i32) -> anyhow::Result<()> {
    let matrix_path = artifact_path(cfg, &format!("similarity-{year}.json"));
    let matrix: SimilarityMatrix = load_artifact(&matrix_path)
        .with_context(|| format!("loading {} (run evaluate first)", matrix_path.display()))?;
    let curve = precision_recall_sweep(&matrix, cfg.sweep_step)?;
    let path = artifact_path(cfg, &format!("pr-{year}.csv"));
    write_pr_csv(&curve, &path)?;
    println!(
        "{}",
        json!({ "written": written(&[path]), "points": curve.thresholds.len() })
    );
    Ok(())
}
