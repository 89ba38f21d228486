//! Per-year topic co-occurrence networks.
//!
//! A network for year `t` counts, over the papers published in `t`, how many
//! papers mention each topic (`publications`) and how many mention each
//! unordered topic pair (`cooccurrence`).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::corpus::{Artifact, Ontology, PaperRecord};
use crate::{Error, Result, TopicId};

/// Serialize maps keyed by unordered topic pairs as sorted
/// `[u, v, value]` triples, since JSON objects cannot key on tuples.
pub(crate) mod edge_serde {
    use super::*;
    use serde::de::DeserializeOwned;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S, V>(
        map: &BTreeMap<(TopicId, TopicId), V>,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error>
    where
        S: Serializer,
        V: Serialize,
    {
        let triples: Vec<(&TopicId, &TopicId, &V)> =
            map.iter().map(|((u, v), w)| (u, v, w)).collect();
        triples.serialize(serializer)
    }

    pub fn deserialize<'de, D, V>(
        deserializer: D,
    ) -> std::result::Result<BTreeMap<(TopicId, TopicId), V>, D::Error>
    where
        D: Deserializer<'de>,
        V: DeserializeOwned,
    {
        let triples: Vec<(TopicId, TopicId, V)> = Vec::deserialize(deserializer)?;
        Ok(triples.into_iter().map(|(u, v, w)| ((u, v), w)).collect())
    }
}

/// Order an unordered topic pair into its canonical map key.
pub fn edge_key(a: &str, b: &str) -> (TopicId, TopicId) {
    debug_assert_ne!(a, b, "self edges are not representable");
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct YearTopicNetwork {
    pub year: i32,
    /// Papers per topic in this year.
    pub publications: BTreeMap<TopicId, u32>,
    /// Papers per unordered topic pair, keys ordered `u < v`.
    #[serde(with = "edge_serde")]
    pub cooccurrence: BTreeMap<(TopicId, TopicId), u32>,
}

impl Artifact for YearTopicNetwork {
    const KIND: &'static str = "topic-network";
}

impl YearTopicNetwork {
    pub fn weight(&self, a: &str, b: &str) -> u32 {
        self.cooccurrence.get(&edge_key(a, b)).copied().unwrap_or(0)
    }

    pub fn publications_of(&self, topic: &str) -> Option<u32> {
        self.publications.get(topic).copied()
    }

    /// Topics appearing as nodes or edge endpoints.
    pub fn node_set(&self) -> BTreeSet<TopicId> {
        let mut nodes: BTreeSet<TopicId> = self.publications.keys().cloned().collect();
        for (u, v) in self.cooccurrence.keys() {
            nodes.insert(u.clone());
            nodes.insert(v.clone());
        }
        nodes
    }

    pub fn edges(&self) -> impl Iterator<Item = (&TopicId, &TopicId, u32)> {
        self.cooccurrence.iter().map(|((u, v), w)| (u, v, *w))
    }

    /// Restrict to the given topics, keeping edges with both endpoints inside.
    pub fn induced_subgraph(&self, topics: &BTreeSet<TopicId>) -> YearTopicNetwork {
        YearTopicNetwork {
            year: self.year,
            publications: self
                .publications
                .iter()
                .filter(|(t, _)| topics.contains(*t))
                .map(|(t, p)| (t.clone(), *p))
                .collect(),
            cooccurrence: self
                .cooccurrence
                .iter()
                .filter(|((u, v), _)| topics.contains(u) && topics.contains(v))
                .map(|(k, w)| (k.clone(), *w))
                .collect(),
        }
    }
}

/// Map a record's keywords onto canonical topic ids, keeping labels the
/// ontology does not know as themselves. Result is sorted and deduplicated,
/// so two equivalent keywords on one paper collapse into one topic.
pub fn canonicalize_record(record: &PaperRecord, ontology: &Ontology) -> Vec<TopicId> {
    let set: BTreeSet<TopicId> = record
        .keywords
        .iter()
        .map(|k| ontology.canonical_of(k).cloned().unwrap_or_else(|| k.clone()))
        .collect();
    set.into_iter().collect()
}

/// Build the co-occurrence network of a single year.
pub fn build_year_network(
    papers: &[PaperRecord],
    year: i32,
    ontology: &Ontology,
) -> YearTopicNetwork {
    let mut network = YearTopicNetwork {
        year,
        ..YearTopicNetwork::default()
    };
    for record in papers.iter().filter(|r| r.year == year) {
        let topics = canonicalize_record(record, ontology);
        for t in &topics {
            *network.publications.entry(t.clone()).or_insert(0) += 1;
        }
        for i in 0..topics.len() {
            for j in i + 1..topics.len() {
                *network
                    .cooccurrence
                    .entry(edge_key(&topics[i], &topics[j]))
                    .or_insert(0) += 1;
            }
        }
    }
    network
}

/// The `n` topics co-occurring most with `topic` over `year_from..=year_to`,
/// ranked by shared paper count descending, label ascending on ties.
pub fn top_cooccurring(
    papers: &[PaperRecord],
    topic: &str,
    year_from: i32,
    year_to: i32,
    n: usize,
    ontology: &Ontology,
) -> Result<Vec<TopicId>> {
    let mut counts: BTreeMap<TopicId, u32> = BTreeMap::new();
    for record in papers
        .iter()
        .filter(|r| r.year >= year_from && r.year <= year_to)
    {
        let topics = canonicalize_record(record, ontology);
        if topics.iter().any(|t| t == topic) {
            for t in topics {
                if t != topic {
                    *counts.entry(t).or_insert(0) += 1;
                }
            }
        }
    }
    if counts.is_empty() {
        return Err(Error::NoCoOccurringTopics {
            topic: topic.to_string(),
        });
    }
    let mut ranked: Vec<(TopicId, u32)> = counts.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Ok(ranked.into_iter().take(n).map(|(t, _)| t).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{load_ontology, LoadOptions};
    use std::io::Write as _;

    fn paper(id: &str, year: i32, keywords: &[&str]) -> PaperRecord {
        PaperRecord {
            id: id.into(),
            year,
            keywords: keywords.iter().map(|s| s.to_string()).collect(),
            authors: vec![],
            citations_by_year: BTreeMap::new(),
        }
    }

    fn ontology_from(csv: &str) -> Ontology {
        let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        f.write_all(csv.as_bytes()).unwrap();
        load_ontology(f.path(), &LoadOptions::default()).unwrap().value
    }

    #[test]
    fn counts_match_the_two_paper_example() {
        let papers = vec![paper("p1", 2000, &["a", "b"]), paper("p2", 2000, &["a", "b", "c"])];
        let net = build_year_network(&papers, 2000, &Ontology::default());
        assert_eq!(net.publications_of("a"), Some(2));
        assert_eq!(net.publications_of("b"), Some(2));
        assert_eq!(net.publications_of("c"), Some(1));
        assert_eq!(net.weight("a", "b"), 2);
        assert_eq!(net.weight("a", "c"), 1);
        assert_eq!(net.weight("b", "c"), 1);
    }

    #[test]
    fn equivalent_keywords_on_one_paper_collapse() {
        let onto = ontology_from(
            "subject,predicate,object\nontology matching,relatedEquivalent,ontology mapping\n",
        );
        let papers = vec![paper("p1", 2000, &["ontology matching", "ontology mapping"])];
        let net = build_year_network(&papers, 2000, &onto);
        assert_eq!(net.publications_of("ontology mapping"), Some(1));
        assert!(net.cooccurrence.is_empty());
    }

    #[test]
    fn unknown_keywords_stay_as_themselves() {
        let onto = ontology_from("subject,predicate,object\nx,relatedEquivalent,y\n");
        let topics = canonicalize_record(&paper("p", 2000, &["y", "novel thing"]), &onto);
        assert_eq!(topics, vec!["novel thing".to_string(), "x".to_string()]);
    }

    #[test]
    fn induced_subgraph_keeps_only_inner_edges() {
        let papers = vec![paper("p1", 2000, &["a", "b", "c"])];
        let net = build_year_network(&papers, 2000, &Ontology::default());
        let sub = net.induced_subgraph(&["a", "b"].into_iter().map(String::from).collect());
        assert_eq!(sub.publications.len(), 2);
        assert_eq!(sub.weight("a", "b"), 1);
        assert_eq!(sub.weight("a", "c"), 0);
    }

    #[test]
    fn top_cooccurring_breaks_count_ties_lexicographically() {
        // q co-occurs with x five times, y five times, z three times.
        let mut papers = Vec::new();
        for i in 0..5 {
            papers.push(paper(&format!("x{i}"), 2000, &["q", "x"]));
            papers.push(paper(&format!("y{i}"), 2000, &["q", "y"]));
        }
        for i in 0..3 {
            papers.push(paper(&format!("z{i}"), 2000, &["q", "z"]));
        }
        let top = top_cooccurring(&papers, "q", 2000, 2000, 2, &Ontology::default()).unwrap();
        assert_eq!(top, vec!["x".to_string(), "y".to_string()]);
    }

    #[test]
    fn top_cooccurring_errors_when_topic_is_isolated() {
        let papers = vec![paper("p1", 2000, &["q"]), paper("p2", 2000, &["a", "b"])];
        let err = top_cooccurring(&papers, "q", 2000, 2000, 5, &Ontology::default()).unwrap_err();
        assert!(matches!(err, Error::NoCoOccurringTopics { .. }));
    }

    #[test]
    fn network_round_trips_through_the_artifact_envelope() {
        let papers = vec![paper("p1", 2001, &["a", "b"])];
        let net = build_year_network(&papers, 2001, &Ontology::default());
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("net.json");
        crate::corpus::save_artifact(&net, &path, None).unwrap();
        let back: YearTopicNetwork = crate::corpus::load_artifact(&path).unwrap();
        assert_eq!(back, net);
    }
}
