//! Seeded corpora with a planted embryonic topic.
//!
//! A small clique of "planted" topics collaborates with linearly growing
//! intensity for all but the last year, surrounded by background topics
//! whose pairings stay flat. In the last year a debutant topic appears,
//! tagged together with every planted topic, so the planted clique is the
//! debutant's ancestor set by construction and a detector can be scored
//! end to end without real data.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::corpus::{write_papers_jsonl, Ontology, PaperRecord, PRED_BROADER, PRED_EQUIVALENT};
use crate::{Error, Result, TopicId};

/// Papers tagging the debutant in its debut year. Above the soft-debut
/// cutoff, so the debut registers in its first active year.
pub const DEBUT_PAPER_COUNT: u32 = 6;

/// The debutant's label, kept distinct from the `t`-prefixed topic ids.
pub const DEBUTANT: &str = "debutant";

pub fn topic_id(i: usize) -> TopicId {
    format!("t{i:04}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantSpec {
    pub seed: u64,
    /// Total topics, planted included.
    pub n_topics: usize,
    /// Corpus length; the last year belongs to the debutant.
    pub n_years: usize,
    pub start_year: i32,
    /// Must be a subset of the generated ids.
    pub planted: BTreeSet<TopicId>,
    /// Yearly increase of the per-pair collaboration count.
    pub growth_rate: f64,
    /// Base collaboration count, also the per-topic solo paper count.
    pub background_rate: f64,
    /// Uniform jitter amplitude on the per-pair counts; 0 is exact.
    pub noise: f64,
}

impl PlantSpec {
    /// Plants the first `n_planted` ids.
    pub fn first_planted(seed: u64, n_topics: usize, n_years: usize, n_planted: usize) -> PlantSpec {
        PlantSpec {
            seed,
            n_topics,
            n_years,
            start_year: 2000,
            planted: (0..n_planted).map(topic_id).collect(),
            growth_rate: 2.0,
            background_rate: 3.0,
            noise: 0.0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SyntheticCorpus {
    pub papers: Vec<PaperRecord>,
    pub ontology: Ontology,
    pub planted: BTreeSet<TopicId>,
    pub debutant: TopicId,
    pub debut_year: i32,
}

impl SyntheticCorpus {
    pub fn write_to(&self, papers_path: &Path, ontology_path: &Path) -> Result<()> {
        write_papers_jsonl(&self.papers, papers_path)?;
        write_ontology_csv(&self.ontology, ontology_path)
    }
}

fn paper(id: usize, year: i32, keywords: Vec<String>) -> PaperRecord {
    PaperRecord {
        id: format!("p{id:06}"),
        year,
        keywords,
        authors: Vec::new(),
        citations_by_year: BTreeMap::new(),
    }
}

/// Generate the corpus. Identical specs give byte-identical corpora.
pub fn generate(spec: &PlantSpec) -> Result<SyntheticCorpus> {
    if spec.n_years < 6 {
        return Err(Error::InvalidParameter(format!(
            "a planted corpus needs at least 6 years (5 observed plus the debut year), got {}",
            spec.n_years
        )));
    }
    let ids: Vec<TopicId> = (0..spec.n_topics).map(topic_id).collect();
    for topic in &spec.planted {
        if ids.binary_search(topic).is_err() {
            return Err(Error::InvalidParameter(format!(
                "planted topic {topic} is not among the {} generated ids",
                spec.n_topics
            )));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut background: Vec<&TopicId> =
        ids.iter().filter(|t| !spec.planted.contains(*t)).collect();
    background.shuffle(&mut rng);
    // Flat pairings along a shuffled cycle: connected, triangle free.
    let background_pairs: Vec<(&TopicId, &TopicId)> = match background.len() {
        0 | 1 => Vec::new(),
        2 => vec![(background[0], background[1])],
        n => (0..n).map(|i| (background[i], background[(i + 1) % n])).collect(),
    };
    let lone_background = (background.len() == 1).then(|| background[0]);

    let planted: Vec<&TopicId> = spec.planted.iter().collect();
    let mut planted_pairs = Vec::new();
    for i in 0..planted.len() {
        for j in i + 1..planted.len() {
            planted_pairs.push((planted[i], planted[j]));
        }
    }

    let solo_per_year = spec.background_rate.round().max(1.0) as u32;
    let mut papers = Vec::new();
    let mut next = 0usize;
    for j in 0..spec.n_years - 1 {
        let year = spec.start_year + j as i32;
        for (x, y) in &planted_pairs {
            let jitter = if spec.noise > 0.0 {
                rng.gen_range(-spec.noise..=spec.noise)
            } else {
                0.0
            };
            let count = (spec.background_rate + spec.growth_rate * j as f64 + jitter)
                .round()
                .max(0.0) as u32;
            for _ in 0..count {
                papers.push(paper(next, year, vec![(*x).clone(), (*y).clone()]));
                next += 1;
            }
        }
        for t in &planted {
            for _ in 0..solo_per_year {
                papers.push(paper(next, year, vec![(*t).clone()]));
                next += 1;
            }
        }
        for (a, b) in &background_pairs {
            papers.push(paper(next, year, vec![(*a).clone(), (*b).clone()]));
            next += 1;
        }
        if let Some(t) = lone_background {
            papers.push(paper(next, year, vec![t.clone()]));
            next += 1;
        }
    }

    let debut_year = spec.start_year + (spec.n_years - 1) as i32;
    let debutant: TopicId = DEBUTANT.to_string();
    for _ in 0..DEBUT_PAPER_COUNT {
        let mut keywords = vec![debutant.clone()];
        keywords.extend(spec.planted.iter().cloned());
        papers.push(paper(next, debut_year, keywords));
        next += 1;
    }

    let mut ontology = Ontology::default();
    for t in ids.iter().chain(std::iter::once(&debutant)) {
        ontology.canonical.insert(t.clone(), t.clone());
        ontology.topics.insert(t.clone());
        ontology.class_members.entry(t.clone()).or_default().insert(t.clone());
    }

    Ok(SyntheticCorpus {
        papers,
        ontology,
        planted: spec.planted.clone(),
        debutant,
        debut_year,
    })
}

/// Serialize an ontology back to the triple CSV it is loaded from.
/// Singleton classes become self-equivalences so their topics survive
/// the round trip.
pub fn write_ontology_csv(ontology: &Ontology, path: &Path) -> Result<()> {
    let mut text = String::from("subject,predicate,object\n");
    for (label, canon) in &ontology.canonical {
        text.push_str(&format!("{label},{PRED_EQUIVALENT},{canon}\n"));
    }
    for (topic, parents) in &ontology.broader {
        for parent in parents {
            text.push_str(&format!("{topic},{PRED_BROADER},{parent}\n"));
        }
    }
    fs::write(path, text).map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })
}
