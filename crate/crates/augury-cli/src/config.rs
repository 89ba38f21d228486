//! Pipeline configuration: compiled-in defaults, overlaid by an optional
//! TOML file, overlaid by command-line flags. The merged result is echoed
//! into every artifact header, so outputs carry their own provenance.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::Args;
use serde::{Deserialize, Serialize};

use augury::dynamics::MeanKind;
use augury::evaluation::JaccardMode;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PipelineConfig {
    /// Papers corpus, one JSON record per line.
    pub papers: PathBuf,
    /// Ontology triples CSV.
    pub ontology: PathBuf,
    /// Directory artifacts are written to and read from.
    pub out: PathBuf,
    /// Years per evolutionary window.
    pub window: usize,
    /// Clique intensity cutoff (detection keeps strictly greater).
    pub threshold: f64,
    /// Links kept per cluster.
    pub max_links: usize,
    /// Jaccard similarity above which clusters merge.
    pub merge_sim: f64,
    /// Minimum fraction of cluster topics the ontology must know.
    pub min_onto_frac: f64,
    /// Ancestors kept per debutant.
    pub ancestors_k: usize,
    /// Similarity enhancement: plain, sameas, sup_c, sup_d, sup_both.
    pub jaccard_mode: String,
    /// Super-area lookup depth for the sup_* modes.
    pub sup_depth: usize,
    /// Threshold grid step for precision/recall sweeps.
    pub sweep_step: f64,
    /// Mean used by collaboration indices: arithmetic or harmonic.
    pub mean: String,
    /// Seed for synthetic corpora; the pipeline itself is deterministic.
    pub seed: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            papers: "papers.jsonl".into(),
            ontology: "ontology.csv".into(),
            out: ".".into(),
            window: 5,
            threshold: 0.0,
            max_links: 15,
            merge_sim: 0.7,
            min_onto_frac: 0.3,
            ancestors_k: 25,
            jaccard_mode: "sameas".into(),
            sup_depth: 1,
            sweep_step: 0.001,
            mean: "harmonic".into(),
            seed: 0,
        }
    }
}

/// Flag-level overrides, all optional so the TOML/default value shows
/// through when a flag is absent.
#[derive(Debug, Default, Args)]
pub struct Overrides {
    /// Papers corpus (JSONL).
    #[arg(long, global = true, value_name = "FILE")]
    pub papers: Option<PathBuf>,
    /// Ontology triples CSV.
    #[arg(long, global = true, value_name = "FILE")]
    pub ontology: Option<PathBuf>,
    /// Artifact directory.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,
    /// Years per evolutionary window.
    #[arg(long, global = true)]
    pub window: Option<usize>,
    /// Clique intensity cutoff.
    #[arg(long, global = true)]
    pub threshold: Option<f64>,
    /// Links kept per cluster.
    #[arg(long, global = true)]
    pub max_links: Option<usize>,
    /// Cluster merge similarity.
    #[arg(long, global = true)]
    pub merge_sim: Option<f64>,
    /// Minimum known-topic fraction.
    #[arg(long, global = true)]
    pub min_onto_frac: Option<f64>,
    /// Ancestors kept per debutant.
    #[arg(long, global = true)]
    pub ancestors_k: Option<usize>,
    /// plain, sameas, sup_c, sup_d, or sup_both.
    #[arg(long, global = true)]
    pub jaccard_mode: Option<String>,
    /// Super-area lookup depth.
    #[arg(long, global = true)]
    pub sup_depth: Option<usize>,
    /// Sweep grid step.
    #[arg(long, global = true)]
    pub sweep_step: Option<f64>,
    /// arithmetic or harmonic.
    #[arg(long, global = true)]
    pub mean: Option<String>,
    /// Synthetic corpus seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

impl PipelineConfig {
    pub fn assemble(config_path: Option<&Path>, over: &Overrides) -> anyhow::Result<PipelineConfig> {
        let mut cfg = match config_path {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("cannot read {}", path.display()))?;
                toml::from_str(&text)
                    .with_context(|| format!("invalid config {}", path.display()))?
            }
            None => PipelineConfig::default(),
        };
        macro_rules! apply {
            ($($field:ident),* $(,)?) => {
                $(if let Some(value) = &over.$field {
                    cfg.$field = value.clone();
                })*
            };
        }
        apply!(
            papers, ontology, out, window, threshold, max_links, merge_sim, min_onto_frac,
            ancestors_k, jaccard_mode, sup_depth, sweep_step, mean, seed,
        );
        Ok(cfg)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.window < 2 {
            bail!("window must be at least 2, got {}", self.window);
        }
        if !self.threshold.is_finite() {
            bail!("threshold must be finite");
        }
        if self.max_links == 0 {
            bail!("max-links must be positive");
        }
        if !(0.0..=1.0).contains(&self.merge_sim) {
            bail!("merge-sim must be within 0..=1, got {}", self.merge_sim);
        }
        if !(0.0..=1.0).contains(&self.min_onto_frac) {
            bail!("min-onto-frac must be within 0..=1, got {}", self.min_onto_frac);
        }
        if self.ancestors_k == 0 {
            bail!("ancestors-k must be positive");
        }
        if !(self.sweep_step > 0.0 && self.sweep_step <= 1.0) {
            bail!("sweep-step must be within (0, 1], got {}", self.sweep_step);
        }
        self.jaccard_mode.parse::<JaccardMode>()?;
        self.mean.parse::<MeanKind>()?;
        Ok(())
    }

    /// The value embedded as the `config` field of artifact envelopes.
    pub fn echo(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("config serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_overrides_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("augury.toml");
        std::fs::write(&path, "window = 7\nmax_links = 4\n").unwrap();
        let over = Overrides {
            max_links: Some(9),
            ..Overrides::default()
        };
        let cfg = PipelineConfig::assemble(Some(&path), &over).unwrap();
        assert_eq!(cfg.window, 7);
        assert_eq!(cfg.max_links, 9);
        assert_eq!(cfg.merge_sim, 0.7);
    }

    #[test]
    fn unknown_config_keys_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("augury.toml");
        std::fs::write(&path, "windoww = 7\n").unwrap();
        assert!(PipelineConfig::assemble(Some(&path), &Overrides::default()).is_err());
    }

    #[test]
    fn invalid_ranges_fail_validation() {
        let mut cfg = PipelineConfig::default();
        cfg.validate().unwrap();
        cfg.merge_sim = 1.5;
        assert!(cfg.validate().is_err());
        cfg.merge_sim = 0.7;
        cfg.jaccard_mode = "fuzzy".into();
        assert!(cfg.validate().is_err());
    }
}
