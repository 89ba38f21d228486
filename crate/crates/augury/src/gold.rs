//! Ground truth for evaluation: debutant topics, their debut years, and the
//! pre-existing topics that collaborated most closely around their birth.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::corpus::{Artifact, LoadReport, Ontology, PaperRecord};
use crate::networks::canonicalize_record;
use crate::{Error, Result, TopicId};

/// Cumulative publications a topic needs for its soft debut.
pub const SOFT_DEBUT_COUNT: u32 = 5;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ancestor {
    pub topic: TopicId,
    pub distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldEntry {
    pub topic: TopicId,
    /// First year the label appears.
    pub hard_debut: i32,
    /// First year cumulative publications reach the soft-debut count.
    pub soft_debut: i32,
    /// Closest pre-existing topics, distance ascending.
    pub ancestors: Vec<Ancestor>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GoldStandard {
    pub entries: Vec<GoldEntry>,
}

impl Artifact for GoldStandard {
    const KIND: &'static str = "gold-standard";
}

impl GoldStandard {
    pub fn entry(&self, topic: &str) -> Option<&GoldEntry> {
        self.entries.iter().find(|e| e.topic == topic)
    }
}

/// Canonicalized corpus inverted for per-topic scans.
struct CorpusIndex {
    /// (year, sorted canonical topics) per record.
    records: Vec<(i32, Vec<TopicId>)>,
    /// Record indices per topic.
    postings: BTreeMap<TopicId, Vec<usize>>,
    /// Occurrence counts per topic per year.
    yearly: BTreeMap<TopicId, BTreeMap<i32, u32>>,
}

impl CorpusIndex {
    fn build(papers: &[PaperRecord], ontology: &Ontology) -> Self {
        let mut records = Vec::with_capacity(papers.len());
        let mut postings: BTreeMap<TopicId, Vec<usize>> = BTreeMap::new();
        let mut yearly: BTreeMap<TopicId, BTreeMap<i32, u32>> = BTreeMap::new();
        for (i, record) in papers.iter().enumerate() {
            let topics = canonicalize_record(record, ontology);
            for t in &topics {
                postings.entry(t.clone()).or_default().push(i);
                *yearly
                    .entry(t.clone())
                    .or_default()
                    .entry(record.year)
                    .or_insert(0) += 1;
            }
            records.push((record.year, topics));
        }
        CorpusIndex {
            records,
            postings,
            yearly,
        }
    }

    fn debuts(&self, topic: &str) -> Result<(i32, Option<i32>)> {
        let counts = self.yearly.get(topic).ok_or_else(|| Error::TopicAbsent {
            topic: topic.to_string(),
        })?;
        let hard = *counts.keys().next().expect("counted topics occur");
        let mut cumulative = 0u32;
        let mut soft = None;
        for (year, count) in counts {
            cumulative += count;
            if cumulative >= SOFT_DEBUT_COUNT {
                soft = Some(*year);
                break;
            }
        }
        Ok((hard, soft))
    }

    /// Per-year counts over `years` of the topic itself (`of`) or of its
    /// co-occurrences with another topic.
    fn vector(&self, of: &str, with: Option<&str>, years: &[i32]) -> Vec<u32> {
        let mut counts = vec![0u32; years.len()];
        let Some(posting) = self.postings.get(of) else {
            return counts;
        };
        for &i in posting {
            let (year, topics) = &self.records[i];
            let Some(slot) = years.iter().position(|y| y == year) else {
                continue;
            };
            if with.is_none_or(|other| topics.binary_search_by(|t| t.as_str().cmp(other)).is_ok())
            {
                counts[slot] += 1;
            }
        }
        counts
    }
}

/// Hard and soft debut years of a topic; the soft debut is absent when the
/// topic never accumulates enough publications.
pub fn debut_years(
    topic: &str,
    papers: &[PaperRecord],
    ontology: &Ontology,
) -> Result<(i32, Option<i32>)> {
    CorpusIndex::build(papers, ontology).debuts(topic)
}

/// Euclidean distance between a debutant's publication vector and a
/// candidate's co-occurrence vector.
pub fn ancestor_distance(p: &[u32], c: &[u32]) -> Result<f64> {
    if p.len() != c.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: c.len(),
        });
    }
    if p.iter().all(|v| *v == 0) {
        return Err(Error::InactiveDebutant);
    }
    Ok(p.iter()
        .zip(c)
        .map(|(a, b)| {
            let d = *a as f64 - *b as f64;
            d * d
        })
        .sum::<f64>()
        .sqrt())
}

fn entry_from_index(
    index: &CorpusIndex,
    topic: &str,
    k: usize,
    warnings: &mut Vec<String>,
) -> Result<GoldEntry> {
    let (hard, soft) = index.debuts(topic)?;
    let soft = soft.ok_or_else(|| Error::NoSoftDebut {
        topic: topic.to_string(),
    })?;
    let years: Vec<i32> = (soft..soft + 5).collect();
    let p = index.vector(topic, None, &years);

    let mut candidates: BTreeSet<&TopicId> = BTreeSet::new();
    if let Some(posting) = index.postings.get(topic) {
        for &i in posting {
            let (year, topics) = &index.records[i];
            if years.contains(year) {
                candidates.extend(topics.iter().filter(|t| t.as_str() != topic));
            }
        }
    }

    let mut ancestors: Vec<Ancestor> = Vec::new();
    for candidate in candidates {
        let (candidate_hard, _) = index.debuts(candidate)?;
        if candidate_hard >= hard {
            continue;
        }
        let c = index.vector(topic, Some(candidate), &years);
        ancestors.push(Ancestor {
            topic: candidate.clone(),
            distance: ancestor_distance(&p, &c)?,
        });
    }
    ancestors.sort_by(|a, b| {
        a.distance
            .total_cmp(&b.distance)
            .then_with(|| a.topic.cmp(&b.topic))
    });
    ancestors.truncate(k);
    if ancestors.is_empty() {
        warnings.push(format!("{topic}: no eligible ancestors"));
    }
    Ok(GoldEntry {
        topic: topic.to_string(),
        hard_debut: hard,
        soft_debut: soft,
        ancestors,
    })
}

/// Gold entry for one debutant: candidates are topics co-occurring with it
/// during its first five years of activity that existed before it, ranked
/// by ascending distance, at most `k` kept.
pub fn extract_ancestors(
    topic: &str,
    papers: &[PaperRecord],
    ontology: &Ontology,
    k: usize,
) -> Result<LoadReport<GoldEntry>> {
    let index = CorpusIndex::build(papers, ontology);
    let mut warnings = Vec::new();
    let value = entry_from_index(&index, topic, k, &mut warnings)?;
    Ok(LoadReport { value, warnings })
}

/// Entries for every topic with a soft debut, optionally restricted to soft
/// debuts within `soft_bounds` and to topics the ontology knows. Sorted by
/// topic for stable output.
pub fn build_gold_standard(
    papers: &[PaperRecord],
    ontology: &Ontology,
    k: usize,
    soft_bounds: Option<(i32, i32)>,
    require_ontology: bool,
) -> Result<LoadReport<GoldStandard>> {
    let index = CorpusIndex::build(papers, ontology);
    let mut warnings = Vec::new();
    let mut entries = Vec::new();
    let topics: Vec<TopicId> = index.yearly.keys().cloned().collect();
    for topic in topics {
        if require_ontology && !ontology.contains(&topic) {
            continue;
        }
        let (_, soft) = index.debuts(&topic)?;
        let Some(soft) = soft else {
            continue;
        };
        if let Some((lo, hi)) = soft_bounds {
            if soft < lo || soft > hi {
                continue;
            }
        }
        entries.push(entry_from_index(&index, &topic, k, &mut warnings)?);
    }
    Ok(LoadReport {
        value: GoldStandard { entries },
        warnings,
    })
}
