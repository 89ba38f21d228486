//! From raw communities to reportable clusters: trim to the strongest
//! links, collapse near-duplicates, filter by ontology coverage, and rank
//! the people and papers behind each cluster.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::clustering::Community;
use crate::corpus::{Artifact, Ontology, PaperRecord};
use crate::evolution::EvolutionaryNetwork;
use crate::networks::canonicalize_record;
use crate::{Error, Result, TopicId};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Link {
    pub u: TopicId,
    pub v: TopicId,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    /// Window end year of the evolutionary network this came from.
    pub year: i32,
    pub topics: BTreeSet<TopicId>,
    /// Retained links, weight-descending.
    pub links: Vec<Link>,
    pub authors: Vec<AuthorRank>,
    pub papers: Vec<PaperRank>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterSet {
    pub year: i32,
    pub clusters: Vec<Cluster>,
}

impl Artifact for ClusterSet {
    const KIND: &'static str = "cluster-set";
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuthorRank {
    pub author: String,
    /// Cluster topics the author published in during the window.
    pub num_topics: usize,
    /// Cluster links with both endpoints among the author's topics.
    pub num_links: usize,
    pub cum_weight: f64,
    /// Publications up to the cluster year, divided by max(num_topics, 1).
    pub num_publications: f64,
    pub topics: BTreeSet<TopicId>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PaperRank {
    pub paper: String,
    /// Cluster topics on the paper; at least 2 by construction.
    pub num_topics: usize,
    pub num_links: usize,
    pub cum_weight: f64,
    /// Citations its authors had accrued at publication time, divided by
    /// the author count.
    pub author_weight: f64,
    /// Citations the paper accrued up to the cluster year.
    pub num_citations: u64,
}

fn sort_links(links: &mut [Link]) {
    links.sort_by(|a, b| {
        b.weight
            .total_cmp(&a.weight)
            .then_with(|| (&a.u, &a.v).cmp(&(&b.u, &b.v)))
    });
}

/// Keep a community's `max_links` heaviest induced links (ties broken by
/// lexicographic endpoint pair); the cluster's topics are the endpoints of
/// what survived.
pub fn trim_cluster(
    community: &Community,
    evonet: &EvolutionaryNetwork,
    max_links: usize,
) -> Result<Cluster> {
    let mut links: Vec<Link> = evonet
        .edge_slope
        .iter()
        .filter(|((u, v), _)| community.topics.contains(u) && community.topics.contains(v))
        .map(|((u, v), w)| Link {
            u: u.clone(),
            v: v.clone(),
            weight: *w,
        })
        .collect();
    if links.is_empty() {
        return Err(Error::DegenerateCommunity);
    }
    sort_links(&mut links);
    links.truncate(max_links);
    let topics = links
        .iter()
        .flat_map(|l| [l.u.clone(), l.v.clone()])
        .collect();
    Ok(Cluster {
        year: evonet.year,
        topics,
        links,
        authors: Vec::new(),
        papers: Vec::new(),
    })
}

fn jaccard(a: &BTreeSet<TopicId>, b: &BTreeSet<TopicId>) -> f64 {
    let inter = a.intersection(b).count();
    let union = a.len() + b.len() - inter;
    if union == 0 {
        0.0
    } else {
        inter as f64 / union as f64
    }
}

fn merge_pair(a: &Cluster, b: &Cluster, max_links: usize) -> Cluster {
    let mut by_pair: BTreeMap<(TopicId, TopicId), f64> = BTreeMap::new();
    for link in a.links.iter().chain(&b.links) {
        by_pair.insert((link.u.clone(), link.v.clone()), link.weight);
    }
    let mut links: Vec<Link> = by_pair
        .into_iter()
        .map(|((u, v), weight)| Link { u, v, weight })
        .collect();
    sort_links(&mut links);
    links.truncate(max_links);
    Cluster {
        year: a.year,
        topics: a.topics.union(&b.topics).cloned().collect(),
        links,
        authors: Vec::new(),
        papers: Vec::new(),
    }
}

/// Collapse exact-duplicate topic sets, then greedily merge the most
/// similar pair (topic-set Jaccard strictly above `sim_threshold`) to a
/// fixpoint. Output is sorted by topic set, so the result does not depend
/// on input order.
pub fn dedupe_merge(clusters: Vec<Cluster>, sim_threshold: f64, max_links: usize) -> Vec<Cluster> {
    let mut work: Vec<Cluster> = clusters;
    work.sort_by(|a, b| a.topics.cmp(&b.topics));
    work.dedup_by(|a, b| a.topics == b.topics);
    loop {
        let mut best: Option<(f64, usize, usize)> = None;
        for i in 0..work.len() {
            for j in i + 1..work.len() {
                let sim = jaccard(&work[i].topics, &work[j].topics);
                if sim > sim_threshold
                    && best.is_none_or(|(bs, bi, bj)| {
                        sim > bs || (sim == bs && (i, j) < (bi, bj))
                    })
                {
                    best = Some((sim, i, j));
                }
            }
        }
        let Some((_, i, j)) = best else {
            return work;
        };
        let merged = merge_pair(&work[i], &work[j], max_links);
        work.remove(j);
        work.remove(i);
        work.push(merged);
        work.sort_by(|a, b| a.topics.cmp(&b.topics));
        work.dedup_by(|a, b| a.topics == b.topics);
    }
}

/// Keep clusters with at least `min_fraction` of their topics known to the
/// ontology (boundary inclusive).
pub fn semantic_filter(
    clusters: Vec<Cluster>,
    ontology: &Ontology,
    min_fraction: f64,
) -> Vec<Cluster> {
    clusters
        .into_iter()
        .filter(|cluster| {
            if cluster.topics.is_empty() {
                return min_fraction <= 0.0;
            }
            let known = cluster
                .topics
                .iter()
                .filter(|t| ontology.contains(t))
                .count();
            known as f64 / cluster.topics.len() as f64 >= min_fraction
        })
        .collect()
}

fn links_within(cluster: &Cluster, topics: &BTreeSet<TopicId>) -> (usize, f64) {
    let covered: Vec<&Link> = cluster
        .links
        .iter()
        .filter(|l| topics.contains(&l.u) && topics.contains(&l.v))
        .collect();
    let weight = covered.iter().map(|l| l.weight).sum();
    (covered.len(), weight)
}

/// Rank the authors active in the cluster's topics during `window`
/// (inclusive bounds) by topic coverage, then covered link weight.
pub fn rank_active_authors(
    cluster: &Cluster,
    papers: &[PaperRecord],
    ontology: &Ontology,
    window: (i32, i32),
    top_n: usize,
) -> Vec<AuthorRank> {
    let mut topics_of: BTreeMap<&str, BTreeSet<TopicId>> = BTreeMap::new();
    let mut publications_of: BTreeMap<&str, u64> = BTreeMap::new();
    for record in papers {
        if record.year <= cluster.year {
            for author in &record.authors {
                *publications_of.entry(author).or_insert(0) += 1;
            }
        }
        if record.year < window.0 || record.year > window.1 {
            continue;
        }
        let topics = canonicalize_record(record, ontology);
        let relevant: Vec<&TopicId> =
            topics.iter().filter(|t| cluster.topics.contains(*t)).collect();
        if relevant.is_empty() {
            continue;
        }
        for author in &record.authors {
            topics_of
                .entry(author)
                .or_default()
                .extend(relevant.iter().map(|t| (*t).clone()));
        }
    }
    let mut ranks: Vec<AuthorRank> = topics_of
        .into_iter()
        .map(|(author, topics)| {
            let (num_links, cum_weight) = links_within(cluster, &topics);
            let num_topics = topics.len();
            AuthorRank {
                author: author.to_string(),
                num_topics,
                num_links,
                cum_weight,
                num_publications: publications_of.get(author).copied().unwrap_or(0) as f64
                    / num_topics.max(1) as f64,
                topics,
            }
        })
        .collect();
    ranks.sort_by(|a, b| {
        b.num_topics
            .cmp(&a.num_topics)
            .then_with(|| b.cum_weight.total_cmp(&a.cum_weight))
            .then_with(|| a.author.cmp(&b.author))
    });
    ranks.truncate(top_n);
    ranks
}

fn citations_up_to(record: &PaperRecord, year: i32) -> u64 {
    record
        .citations_by_year
        .iter()
        .filter(|(y, _)| **y <= year)
        .map(|(_, c)| *c as u64)
        .sum()
}

/// Rank the window's papers tagged with at least two cluster topics by
/// topic coverage, then covered link weight.
pub fn rank_relevant_papers(
    cluster: &Cluster,
    papers: &[PaperRecord],
    ontology: &Ontology,
    window: (i32, i32),
    top_n: usize,
) -> Vec<PaperRank> {
    let mut author_citations: BTreeMap<(&str, i32), u64> = BTreeMap::new();
    let mut by_author: BTreeMap<&str, Vec<&PaperRecord>> = BTreeMap::new();
    for record in papers {
        for author in &record.authors {
            by_author.entry(author).or_default().push(record);
        }
    }
    let mut ranks: Vec<PaperRank> = Vec::new();
    for record in papers {
        if record.year < window.0 || record.year > window.1 {
            continue;
        }
        let topics: BTreeSet<TopicId> = canonicalize_record(record, ontology)
            .into_iter()
            .filter(|t| cluster.topics.contains(t))
            .collect();
        if topics.len() < 2 {
            continue;
        }
        let (num_links, cum_weight) = links_within(cluster, &topics);
        let author_weight = if record.authors.is_empty() {
            0.0
        } else {
            let total: u64 = record
                .authors
                .iter()
                .map(|author| {
                    *author_citations
                        .entry((author.as_str(), record.year))
                        .or_insert_with(|| {
                            by_author
                                .get(author.as_str())
                                .map(|authored| {
                                    authored
                                        .iter()
                                        .map(|p| citations_up_to(p, record.year))
                                        .sum()
                                })
                                .unwrap_or(0)
                        })
                })
                .sum();
            total as f64 / record.authors.len() as f64
        };
        ranks.push(PaperRank {
            paper: record.id.clone(),
            num_topics: topics.len(),
            num_links,
            cum_weight,
            author_weight,
            num_citations: citations_up_to(record, cluster.year),
        });
    }
    ranks.sort_by(|a, b| {
        b.num_topics
            .cmp(&a.num_topics)
            .then_with(|| b.cum_weight.total_cmp(&a.cum_weight))
            .then_with(|| a.paper.cmp(&b.paper))
    });
    ranks.truncate(top_n);
    ranks
}
