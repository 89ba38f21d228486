//! Collaboration dynamics over five-year topic windows.
//!
//! A 3-clique's collaboration index for one year is a mean of its three edge
//! strengths, each the mean of the edge's two conditional co-occurrence
//! ratios. Regressing the index over a window gives the clique's pace; triad
//! censuses of the window's first and last years give a growth index.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::{Ontology, PaperRecord};
use crate::networks::{build_year_network, top_cooccurring, YearTopicNetwork};
use crate::{Error, Result, TopicId};

/// Three distinct topics, stored sorted so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Clique3 {
    members: [TopicId; 3],
}

impl Clique3 {
    pub fn new(a: &str, b: &str, c: &str) -> Result<Self> {
        let mut members = [a.to_string(), b.to_string(), c.to_string()];
        members.sort();
        if members[0] == members[1] || members[1] == members[2] {
            return Err(Error::DegenerateClique);
        }
        Ok(Clique3 { members })
    }

    pub fn members(&self) -> &[TopicId; 3] {
        &self.members
    }

    pub fn contains(&self, topic: &str) -> bool {
        self.members.iter().any(|m| m == topic)
    }

    /// The three edges, already in canonical key order.
    pub fn edge_keys(&self) -> [(TopicId, TopicId); 3] {
        let [a, b, c] = &self.members;
        [
            (a.clone(), b.clone()),
            (a.clone(), c.clone()),
            (b.clone(), c.clone()),
        ]
    }
}

impl<'de> Deserialize<'de> for Clique3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = <[TopicId; 3]>::deserialize(d)?;
        Clique3::new(&raw[0], &raw[1], &raw[2]).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Clique3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.members[0], self.members[1], self.members[2])
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeanKind {
    Arithmetic,
    /// Default: separates tight collaborations from ones carried
    /// by a single strong ratio.
    #[default]
    Harmonic,
}

impl FromStr for MeanKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "arithmetic" => Ok(MeanKind::Arithmetic),
            "harmonic" => Ok(MeanKind::Harmonic),
            other => Err(Error::InvalidParameter(format!(
                "mean must be arithmetic or harmonic, got {other}"
            ))),
        }
    }
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeanKind::Arithmetic => "arithmetic",
            MeanKind::Harmonic => "harmonic",
        })
    }
}

/// Mean of non-negative values. The harmonic mean of anything touching zero
/// is zero (limit convention), which lets absent collaborations zero out a
/// clique instead of poisoning it with a division.
pub fn mean_of(kind: MeanKind, values: &[f64]) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    match kind {
        MeanKind::Arithmetic => values.iter().sum::<f64>() / values.len() as f64,
        MeanKind::Harmonic => {
            if values.iter().any(|v| *v <= 0.0) {
                0.0
            } else {
                values.len() as f64 / values.iter().map(|v| 1.0 / v).sum::<f64>()
            }
        }
    }
}

/// Ordinary least-squares slope of `values` over `years`.
pub fn slope(values: &[f64], years: &[i32]) -> Result<f64> {
    if values.len() != years.len() {
        return Err(Error::LengthMismatch {
            left: values.len(),
            right: years.len(),
        });
    }
    if years.len() < 2 || years.windows(2).any(|p| p[1] <= p[0]) {
        return Err(Error::BadSeries);
    }
    let n = years.len() as f64;
    let x_mean = years.iter().map(|y| *y as f64).sum::<f64>() / n;
    let y_mean = values.iter().sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (x, y) in years.iter().zip(values) {
        let dx = *x as f64 - x_mean;
        num += dx * (y - y_mean);
        den += dx * dx;
    }
    Ok(num / den)
}

/// Strength of the clique's collaboration in one year: per edge, the mean of
/// w/p over both endpoints; over the clique, the mean of the three edges.
/// Missing edges weigh 0; a member without publications is an error.
pub fn collaboration_index(
    clique: &Clique3,
    net: &YearTopicNetwork,
    mean_kind: MeanKind,
) -> Result<f64> {
    let mut p = [0.0f64; 3];
    for (i, member) in clique.members().iter().enumerate() {
        match net.publications_of(member) {
            Some(count) if count > 0 => p[i] = count as f64,
            _ => {
                return Err(Error::UndefinedConditional {
                    topic: member.clone(),
                    year: net.year,
                })
            }
        }
    }
    let m = clique.members();
    let pairs = [(0usize, 1usize), (1, 2), (0, 2)];
    let strengths: Vec<f64> = pairs
        .iter()
        .map(|&(i, j)| {
            let w = net.weight(&m[i], &m[j]) as f64;
            mean_of(mean_kind, &[w / p[i], w / p[j]])
        })
        .collect();
    Ok(mean_of(mean_kind, &strengths))
}

/// Mean pace of collaboration over a window of consecutive yearly networks:
/// enumerate 3-cliques of the union topology, regress each clique's yearly
/// index (zero where a member is inactive), and average the slopes.
pub fn window_collaboration_pace(window: &[YearTopicNetwork], mean_kind: MeanKind) -> Result<f64> {
    if window.len() < 2 {
        return Err(Error::WindowTooShort {
            year: window.first().map(|n| n.year).unwrap_or(0),
            needed: 2,
        });
    }
    let years: Vec<i32> = window.iter().map(|n| n.year).collect();
    if years.windows(2).any(|p| p[1] != p[0] + 1) {
        return Err(Error::NonConsecutiveYears(years));
    }
    let mut union_edges: BTreeSet<(TopicId, TopicId)> = BTreeSet::new();
    for net in window {
        for (u, v, w) in net.edges() {
            if w > 0 {
                union_edges.insert((u.clone(), v.clone()));
            }
        }
    }
    let triangles = crate::clustering::triangles_in(&union_edges);
    if triangles.is_empty() {
        return Err(Error::NoCliques);
    }
    let mut slopes = Vec::with_capacity(triangles.len());
    for clique in &triangles {
        let series: Vec<f64> = window
            .iter()
            .map(|net| {
                let active = clique
                    .members()
                    .iter()
                    .all(|m| net.publications_of(m).is_some_and(|p| p > 0));
                if active {
                    collaboration_index(clique, net, mean_kind)
                        .expect("all members have publications")
                } else {
                    0.0
                }
            })
            .collect();
        slopes.push(slope(&series, &years)?);
    }
    Ok(slopes.iter().sum::<f64>() / slopes.len() as f64)
}

/// Select the `n` topics co-occurring most with `topic` from its debut to the
/// corpus horizon, and return the five induced yearly networks preceding the
/// debut.
pub fn select_window(
    topic: &str,
    debut_year: i32,
    n: usize,
    papers: &[PaperRecord],
    ontology: &Ontology,
) -> Result<Vec<YearTopicNetwork>> {
    let start = debut_year - 5;
    let corpus_start = papers.iter().map(|r| r.year).min();
    let horizon = papers.iter().map(|r| r.year).max().unwrap_or(debut_year);
    if let Some(corpus_start) = corpus_start {
        if start < corpus_start {
            return Err(Error::WindowBeforeCorpus {
                start,
                corpus_start,
            });
        }
    }
    let procreators = top_cooccurring(papers, topic, debut_year, horizon, n, ontology)?;
    if procreators.is_empty() {
        return Err(Error::NoCoOccurringTopics {
            topic: topic.to_string(),
        });
    }
    let set: BTreeSet<TopicId> = procreators.into_iter().collect();
    Ok((start..debut_year)
        .map(|year| build_year_network(papers, year, ontology).induced_subgraph(&set))
        .collect())
}

/// Frequencies of the four undirected triad classes: empty, one edge,
/// path of two edges, triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadCensus {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub h3: u64,
}

impl TriadCensus {
    pub fn total(&self) -> u64 {
        self.h0 + self.h1 + self.h2 + self.h3
    }
}

/// Census all node triples of the network after dropping edges with
/// w < min_weight. Counted in closed form from edge, two-path, and triangle
/// totals rather than by cubic enumeration.
pub fn triad_census(net: &YearTopicNetwork, min_weight: u32) -> TriadCensus {
    let nodes: Vec<TopicId> = net.node_set().into_iter().collect();
    let index: BTreeMap<&TopicId, usize> = nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let n = nodes.len() as u64;
    let mut adjacency: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes.len()];
    let mut m = 0u64;
    for (u, v, w) in net.edges() {
        if w >= min_weight {
            let (iu, iv) = (index[u], index[v]);
            adjacency[iu].insert(iv);
            adjacency[iv].insert(iu);
            m += 1;
        }
    }
    let mut two_paths = 0u64;
    for neighbors in &adjacency {
        let d = neighbors.len() as u64;
        if d >= 2 {
            two_paths += d * (d - 1) / 2;
        }
    }
    let mut triangles = 0u64;
    for (u, neighbors) in adjacency.iter().enumerate() {
        for &v in neighbors.iter().filter(|&&v| v > u) {
            triangles += neighbors
                .iter()
                .filter(|&&w| w > v && adjacency[v].contains(&w))
                .count() as u64;
        }
    }
    let h3 = triangles;
    let h2 = two_paths - 3 * h3;
    let h1 = m * n.saturating_sub(2) - 2 * h2 - 3 * h3;
    let h0 = n * n.saturating_sub(1) * n.saturating_sub(2) / 6 - h1 - h2 - h3;
    TriadCensus { h0, h1, h2, h3 }
}

/// Weighted sum of the four classes' percentage growths between the first
/// and last census, the class index being the weight.
pub fn growth_index(first: &TriadCensus, last: &TriadCensus) -> Result<f64> {
    let f = [first.h0, first.h1, first.h2, first.h3];
    let l = [last.h0, last.h1, last.h2, last.h3];
    let mut index = 0.0;
    for i in 0..4 {
        if f[i] == 0 {
            return Err(Error::UndefinedGrowth { class: i });
        }
        let growth = (l[i] as f64 - f[i] as f64) * 100.0 / f[i] as f64;
        index += i as f64 * growth;
    }
    Ok(index)
}

/// One study observation: a topic's window pace and growth index.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StudyRow {
    pub topic: TopicId,
    /// Either "debutant" or "control".
    pub group: String,
    pub pace: f64,
    pub growth_index: f64,
}

pub fn write_study_report(rows: &[StudyRow], path: &Path) -> Result<()> {
    let mut writer = csv::Writer::from_path(path).map_err(|e| Error::Parse {
        path: path.display().to_string(),
        line: 0,
        message: e.to_string(),
    })?;
    for row in rows {
        writer.serialize(row).map_err(|e| Error::Parse {
            path: path.display().to_string(),
            line: 0,
            message: e.to_string(),
        })?;
    }
    writer.flush().map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::networks::edge_key;
    use approx::assert_abs_diff_eq;

    pub(crate) fn net(
        year: i32,
        pubs: &[(&str, u32)],
        edges: &[(&str, &str, u32)],
    ) -> YearTopicNetwork {
        YearTopicNetwork {
            year,
            publications: pubs.iter().map(|(t, p)| (t.to_string(), *p)).collect(),
            cooccurrence: edges
                .iter()
                .map(|(u, v, w)| (edge_key(u, v), *w))
                .collect(),
        }
    }

    #[test]
    fn clique_members_are_sorted_and_distinct() {
        let c = Clique3::new("c", "a", "b").unwrap();
        assert_eq!(c.members(), &["a".to_string(), "b".into(), "c".into()]);
        assert!(matches!(Clique3::new("a", "a", "b"), Err(Error::DegenerateClique)));
    }

    #[test]
    fn harmonic_mean_zeroes_out_on_any_zero_component() {
        assert_eq!(mean_of(MeanKind::Harmonic, &[0.4, 0.0]), 0.0);
        assert_abs_diff_eq!(mean_of(MeanKind::Harmonic, &[0.4, 0.2]), 4.0 / 15.0);
        assert_abs_diff_eq!(mean_of(MeanKind::Arithmetic, &[0.4, 0.2]), 0.3);
    }

    #[test]
    fn slope_matches_hand_computed_examples() {
        let years = [0, 1, 2, 3, 4];
        assert_eq!(slope(&[1.0, 2.0, 3.0, 4.0, 5.0], &years).unwrap(), 1.0);
        assert_eq!(slope(&[0.7; 5], &years).unwrap(), 0.0);
        assert_abs_diff_eq!(
            slope(&[0.1, 0.3, 0.2, 0.5, 0.4], &years).unwrap(),
            0.08,
            epsilon = 1e-12
        );
    }

    #[test]
    fn slope_rejects_short_or_unordered_series() {
        assert!(matches!(slope(&[1.0], &[2000]), Err(Error::BadSeries)));
        assert!(matches!(
            slope(&[1.0, 2.0], &[2000, 2000]),
            Err(Error::BadSeries)
        ));
        assert!(matches!(
            slope(&[1.0, 2.0], &[2000]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn collaboration_index_matches_the_worked_example() {
        let clique = Clique3::new("a", "b", "c").unwrap();
        let network = net(
            2000,
            &[("a", 10), ("b", 20), ("c", 40)],
            &[("a", "b", 4), ("b", "c", 8), ("c", "a", 2)],
        );
        let index = collaboration_index(&clique, &network, MeanKind::Harmonic).unwrap();
        assert_abs_diff_eq!(index, 0.15, epsilon = 1e-12);
    }

    #[test]
    fn complete_mutual_overlap_scores_one() {
        let clique = Clique3::new("a", "b", "c").unwrap();
        let network = net(
            2000,
            &[("a", 3), ("b", 3), ("c", 3)],
            &[("a", "b", 3), ("b", "c", 3), ("c", "a", 3)],
        );
        for kind in [MeanKind::Harmonic, MeanKind::Arithmetic] {
            assert_eq!(collaboration_index(&clique, &network, kind).unwrap(), 1.0);
        }
    }

    #[test]
    fn missing_edge_zeroes_the_harmonic_index() {
        let clique = Clique3::new("a", "b", "c").unwrap();
        let network = net(
            2000,
            &[("a", 10), ("b", 10), ("c", 10)],
            &[("a", "b", 5), ("b", "c", 5)],
        );
        assert_eq!(
            collaboration_index(&clique, &network, MeanKind::Harmonic).unwrap(),
            0.0
        );
    }

    #[test]
    fn inactive_member_is_an_error() {
        let clique = Clique3::new("a", "b", "c").unwrap();
        let network = net(2001, &[("a", 10), ("b", 10)], &[("a", "b", 5)]);
        let err = collaboration_index(&clique, &network, MeanKind::Harmonic).unwrap_err();
        assert!(matches!(err, Error::UndefinedConditional { year: 2001, .. }));
    }

    #[test]
    fn index_is_invariant_under_member_relabeling() {
        let network = net(
            2000,
            &[("a", 10), ("b", 20), ("c", 40)],
            &[("a", "b", 4), ("b", "c", 8), ("c", "a", 2)],
        );
        let orders = [["a", "b", "c"], ["c", "a", "b"], ["b", "c", "a"]];
        let values: Vec<f64> = orders
            .iter()
            .map(|[x, y, z]| {
                let clique = Clique3::new(x, y, z).unwrap();
                collaboration_index(&clique, &network, MeanKind::Harmonic).unwrap()
            })
            .collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]));
    }

    fn triangle_window(weights: &[u32; 5], names: [&str; 3]) -> Vec<YearTopicNetwork> {
        // All publication counts 10, so every strength is w/10 exactly.
        let [a, b, c] = names;
        (0..5)
            .map(|i| {
                net(
                    2000 + i as i32,
                    &[(a, 10), (b, 10), (c, 10)],
                    &[(a, b, weights[i]), (b, c, weights[i]), (c, a, weights[i])],
                )
            })
            .collect()
    }

    #[test]
    fn single_linear_clique_paces_at_its_slope() {
        let window = triangle_window(&[1, 2, 3, 4, 5], ["a", "b", "c"]);
        let pace = window_collaboration_pace(&window, MeanKind::Harmonic).unwrap();
        assert_abs_diff_eq!(pace, 0.1, epsilon = 1e-12);
    }

    #[test]
    fn pace_averages_clique_slopes_arithmetically() {
        let first = triangle_window(&[1, 2, 3, 4, 5], ["a", "b", "c"]);
        let second = triangle_window(&[3, 6, 9, 12, 15], ["d", "e", "f"]);
        let window: Vec<YearTopicNetwork> = first
            .into_iter()
            .zip(second)
            .map(|(mut x, y)| {
                x.publications.extend(y.publications);
                x.cooccurrence.extend(y.cooccurrence);
                x
            })
            .collect();
        let pace = window_collaboration_pace(&window, MeanKind::Harmonic).unwrap();
        assert_abs_diff_eq!(pace, 0.2, epsilon = 1e-12);
    }

    #[test]
    fn constant_timelines_pace_at_zero() {
        let window = triangle_window(&[4, 4, 4, 4, 4], ["a", "b", "c"]);
        assert_eq!(
            window_collaboration_pace(&window, MeanKind::Harmonic).unwrap(),
            0.0
        );
    }

    #[test]
    fn inactive_member_years_contribute_zero() {
        let mut window = triangle_window(&[2, 2, 2, 2, 2], ["a", "b", "c"]);
        // c publishes nothing in the first two years.
        for year_net in window.iter_mut().take(2) {
            year_net.publications.remove("c");
        }
        let pace = window_collaboration_pace(&window, MeanKind::Harmonic).unwrap();
        let expected = slope(&[0.0, 0.0, 0.2, 0.2, 0.2], &[2000, 2001, 2002, 2003, 2004]).unwrap();
        assert_abs_diff_eq!(pace, expected, epsilon = 1e-12);
    }

    #[test]
    fn window_without_triangles_has_no_cliques() {
        let window: Vec<YearTopicNetwork> = (0..5)
            .map(|i| net(2000 + i, &[("a", 1), ("b", 1)], &[("a", "b", 1)]))
            .collect();
        assert!(matches!(
            window_collaboration_pace(&window, MeanKind::Harmonic),
            Err(Error::NoCliques)
        ));
    }

    #[test]
    fn non_consecutive_window_years_are_rejected() {
        let window = vec![net(2000, &[], &[]), net(2002, &[], &[])];
        assert!(matches!(
            window_collaboration_pace(&window, MeanKind::Harmonic),
            Err(Error::NonConsecutiveYears(_))
        ));
    }

    #[test]
    fn census_matches_the_two_edge_example() {
        let network = net(
            2000,
            &[("a", 1), ("b", 1), ("c", 1), ("d", 1)],
            &[("a", "b", 1), ("b", "c", 1)],
        );
        let census = triad_census(&network, 1);
        assert_eq!((census.h0, census.h1, census.h2, census.h3), (1, 2, 1, 0));
    }

    #[test]
    fn complete_k4_is_all_triangles() {
        let network = net(
            2000,
            &[("a", 1), ("b", 1), ("c", 1), ("d", 1)],
            &[
                ("a", "b", 1),
                ("a", "c", 1),
                ("a", "d", 1),
                ("b", "c", 1),
                ("b", "d", 1),
                ("c", "d", 1),
            ],
        );
        let census = triad_census(&network, 1);
        assert_eq!((census.h0, census.h1, census.h2, census.h3), (0, 0, 0, 4));
    }

    #[test]
    fn isolated_nodes_form_empty_triads() {
        let network = net(2000, &[("a", 1), ("b", 1), ("c", 1)], &[]);
        let census = triad_census(&network, 0);
        assert_eq!((census.h0, census.h1, census.h2, census.h3), (1, 0, 0, 0));
    }

    #[test]
    fn census_ignores_edges_below_min_weight() {
        let network = net(
            2000,
            &[("a", 1), ("b", 1), ("c", 1)],
            &[("a", "b", 1), ("b", "c", 3)],
        );
        let census = triad_census(&network, 2);
        assert_eq!((census.h0, census.h1, census.h2, census.h3), (0, 1, 0, 0));
    }

    #[test]
    fn growth_index_matches_the_published_table() {
        let first = TriadCensus { h0: 446, h1: 790, h2: 807, h3: 882 };
        let last = TriadCensus { h0: 68, h1: 486, h2: 849, h3: 2251 };
        let index = growth_index(&first, &last).unwrap();
        assert_abs_diff_eq!(index, 437.57, epsilon = 0.01);
    }

    #[test]
    fn growth_index_edge_cases() {
        let flat = TriadCensus { h0: 10, h1: 10, h2: 10, h3: 5 };
        assert_eq!(growth_index(&flat, &flat).unwrap(), 0.0);
        let doubled_h3 = TriadCensus { h0: 10, h1: 10, h2: 10, h3: 10 };
        assert_eq!(growth_index(&flat, &doubled_h3).unwrap(), 300.0);
        let zero_class = TriadCensus { h0: 0, h1: 1, h2: 1, h3: 1 };
        assert!(matches!(
            growth_index(&zero_class, &flat),
            Err(Error::UndefinedGrowth { class: 0 })
        ));
    }

    fn windowed_corpus() -> Vec<PaperRecord> {
        let mut papers = Vec::new();
        let mut add = |id: String, year: i32, keywords: &[&str]| {
            papers.push(PaperRecord {
                id,
                year,
                keywords: keywords.iter().map(|s| s.to_string()).collect(),
                authors: vec![],
                citations_by_year: BTreeMap::new(),
            });
        };
        // x and y co-occur with q after its debut; earlier years carry x-y links.
        for year in 1998..=2002 {
            add(format!("w{year}"), year, &["x", "y"]);
        }
        for i in 0..3 {
            add(format!("d{i}"), 2003, &["q", "x", "y"]);
        }
        papers
    }

    #[test]
    fn window_selection_covers_the_five_preceding_years() {
        let papers = windowed_corpus();
        let window = select_window("q", 2003, 20, &papers, &Ontology::default()).unwrap();
        let years: Vec<i32> = window.iter().map(|n| n.year).collect();
        assert_eq!(years, vec![1998, 1999, 2000, 2001, 2002]);
        // Induced on {x, y}: the debutant itself is not part of its window.
        assert_eq!(window[0].publications_of("x"), Some(1));
        assert!(window[0].publications_of("q").is_none());
    }

    #[test]
    fn empty_procreator_set_is_an_error() {
        let papers = windowed_corpus();
        assert!(matches!(
            select_window("q", 2003, 0, &papers, &Ontology::default()),
            Err(Error::NoCoOccurringTopics { .. })
        ));
    }

    #[test]
    fn window_reaching_before_the_corpus_is_rejected() {
        let papers = windowed_corpus();
        let err = select_window("q", 2002, 20, &papers, &Ontology::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::WindowBeforeCorpus { start: 1997, corpus_start: 1998 }
        ));
    }

    #[test]
    fn study_report_is_plain_csv() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("study.csv");
        let rows = vec![StudyRow {
            topic: "q".into(),
            group: "debutant".into(),
            pace: 0.25,
            growth_index: 437.5,
        }];
        write_study_report(&rows, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "topic,group,pace,growth_index\nq,debutant,0.25,437.5\n");
    }
}
