//! Matching detected clusters against debutant topics.
//!
//! A cluster of year t is compared with the ancestor sets of topics
//! debuting in t+1 and t+2 under a Jaccard similarity that may borrow
//! equivalent labels and super-areas from the ontology. Sweeping the match
//! threshold yields precision/recall curves.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::{Artifact, LoadReport, Ontology};
use crate::gold::GoldStandard;
use crate::postprocess::Cluster;
use crate::{Error, Result, TopicId};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JaccardMode {
    /// No enhancement at all.
    Plain,
    /// Equivalent labels of the cluster's topics count as matches.
    #[default]
    SameAs,
    /// Same-as plus super-areas of the cluster side.
    SupC,
    /// Same-as plus super-areas of the debutant side.
    SupD,
    /// Same-as plus super-areas of both sides.
    SupBoth,
}

impl FromStr for JaccardMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(JaccardMode::Plain),
            "sameas" => Ok(JaccardMode::SameAs),
            "sup_c" => Ok(JaccardMode::SupC),
            "sup_d" => Ok(JaccardMode::SupD),
            "sup_both" => Ok(JaccardMode::SupBoth),
            other => Err(Error::InvalidParameter(format!(
                "jaccard mode must be one of plain, sameas, sup_c, sup_d, sup_both; got {other}"
            ))),
        }
    }
}

impl fmt::Display for JaccardMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JaccardMode::Plain => "plain",
            JaccardMode::SameAs => "sameas",
            JaccardMode::SupC => "sup_c",
            JaccardMode::SupD => "sup_d",
            JaccardMode::SupBoth => "sup_both",
        })
    }
}

fn same_as_of(set: &BTreeSet<TopicId>, ontology: &Ontology) -> BTreeSet<TopicId> {
    set.iter().flat_map(|t| ontology.same_as(t)).collect()
}

fn super_areas_of(set: &BTreeSet<TopicId>, ontology: &Ontology, depth: usize) -> BTreeSet<TopicId> {
    set.iter().flat_map(|t| ontology.super_areas(t, depth)).collect()
}

/// Jaccard similarity of a cluster's topics against a debutant's ancestors,
/// optionally enhanced with equivalent labels (which substitute, never
/// enlarging the denominator) and super-areas (which enlarge both).
pub fn semantic_jaccard(
    cluster: &BTreeSet<TopicId>,
    ancestors: &BTreeSet<TopicId>,
    ontology: &Ontology,
    mode: JaccardMode,
    depth: usize,
) -> Result<f64> {
    if cluster.is_empty() || ancestors.is_empty() {
        return Err(Error::EmptySets);
    }
    let sa = if mode == JaccardMode::Plain {
        BTreeSet::new()
    } else {
        same_as_of(cluster, ontology)
    };
    let ec = match mode {
        JaccardMode::SupC | JaccardMode::SupBoth => super_areas_of(cluster, ontology, depth),
        _ => BTreeSet::new(),
    };
    let ed = match mode {
        JaccardMode::SupD | JaccardMode::SupBoth => super_areas_of(ancestors, ontology, depth),
        _ => BTreeSet::new(),
    };
    let mut left: BTreeSet<&TopicId> = cluster.iter().collect();
    left.extend(&sa);
    left.extend(&ec);
    let mut right: BTreeSet<&TopicId> = ancestors.iter().collect();
    right.extend(&ed);
    let numerator = left.intersection(&right).count();
    let mut denominator: BTreeSet<&TopicId> = cluster.iter().collect();
    denominator.extend(&ec);
    denominator.extend(ancestors.iter());
    denominator.extend(&ed);
    Ok(numerator as f64 / denominator.len() as f64)
}

/// Similarities of each cluster of year `year` against each topic debuting
/// in the two following years.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimilarityMatrix {
    pub year: i32,
    /// Row ids: positions of the clusters in their cluster set.
    pub clusters: Vec<usize>,
    /// Column topics, sorted.
    pub debutants: Vec<TopicId>,
    /// Row-major values in [0, 1].
    pub values: Vec<Vec<f64>>,
}

impl Artifact for SimilarityMatrix {
    const KIND: &'static str = "similarity-matrix";
}

/// Build the matrix for clusters of `year`. Gold entries without ancestors
/// cannot be compared and are skipped with a warning.
pub fn build_similarity_matrix(
    year: i32,
    clusters: &[Cluster],
    gold: &GoldStandard,
    ontology: &Ontology,
    mode: JaccardMode,
    depth: usize,
) -> Result<LoadReport<SimilarityMatrix>> {
    let mut warnings = Vec::new();
    let mut columns: Vec<(&TopicId, BTreeSet<TopicId>)> = Vec::new();
    for entry in &gold.entries {
        if entry.soft_debut != year + 1 && entry.soft_debut != year + 2 {
            continue;
        }
        if entry.ancestors.is_empty() {
            warnings.push(format!(
                "debutant {} has no ancestors and is left out of the matrix",
                entry.topic
            ));
            continue;
        }
        columns.push((
            &entry.topic,
            entry.ancestors.iter().map(|a| a.topic.clone()).collect(),
        ));
    }
    columns.sort_by(|a, b| a.0.cmp(b.0));
    let mut values = Vec::with_capacity(clusters.len());
    for cluster in clusters {
        let mut row = Vec::with_capacity(columns.len());
        for (_, ancestors) in &columns {
            row.push(semantic_jaccard(
                &cluster.topics,
                ancestors,
                ontology,
                mode,
                depth,
            )?);
        }
        values.push(row);
    }
    Ok(LoadReport {
        value: SimilarityMatrix {
            year,
            clusters: (0..clusters.len()).collect(),
            debutants: columns.into_iter().map(|(t, _)| t.clone()).collect(),
            values,
        },
        warnings,
    })
}

fn row_maxima(matrix: &SimilarityMatrix) -> Vec<f64> {
    matrix
        .values
        .iter()
        .map(|row| row.iter().copied().fold(f64::NEG_INFINITY, f64::max))
        .collect()
}

fn column_maxima(matrix: &SimilarityMatrix) -> Vec<f64> {
    (0..matrix.debutants.len())
        .map(|j| {
            matrix
                .values
                .iter()
                .map(|row| row[j])
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect()
}

/// Precision and recall at one threshold (match iff value ≥ τ). Recall is
/// `None` when there are no debutants to recall.
pub fn precision_recall_at(matrix: &SimilarityMatrix, tau: f64) -> Result<(f64, Option<f64>)> {
    if matrix.values.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let rows = row_maxima(matrix);
    let matched_clusters = rows.iter().filter(|m| **m >= tau).count();
    let precision = matched_clusters as f64 / rows.len() as f64;
    if matrix.debutants.is_empty() {
        return Ok((precision, None));
    }
    let cols = column_maxima(matrix);
    let matched_debutants = cols.iter().filter(|m| **m >= tau).count();
    Ok((precision, Some(matched_debutants as f64 / cols.len() as f64)))
}

/// Precision/recall over the threshold grid 0..=1. Recall is absent when
/// the matrix has no columns, and is reported as "undefined" rather than 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PRCurve {
    pub year: i32,
    pub thresholds: Vec<f64>,
    pub precision: Vec<f64>,
    pub recall: Option<Vec<f64>>,
}

pub fn precision_recall_sweep(matrix: &SimilarityMatrix, step: f64) -> Result<PRCurve> {
    if matrix.values.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if !(step > 0.0 && step <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "sweep step must be in (0, 1], got {step}"
        )));
    }
    let rows = row_maxima(matrix);
    let cols = column_maxima(matrix);
    let points = (1.0 / step).ceil() as usize;
    let mut thresholds = Vec::with_capacity(points + 1);
    let mut precision = Vec::with_capacity(points + 1);
    let mut recall = Vec::with_capacity(points + 1);
    for i in 0..=points {
        let tau = (i as f64 * step).min(1.0);
        thresholds.push(tau);
        precision.push(rows.iter().filter(|m| **m >= tau).count() as f64 / rows.len() as f64);
        if !cols.is_empty() {
            recall.push(cols.iter().filter(|m| **m >= tau).count() as f64 / cols.len() as f64);
        }
    }
    Ok(PRCurve {
        year: matrix.year,
        thresholds,
        precision,
        recall: if cols.is_empty() { None } else { Some(recall) },
    })
}

/// Write the curve as `threshold,precision,recall` rows; an undefined
/// recall is spelled out, never zeroed.
pub fn write_pr_csv(curve: &PRCurve, path: &Path) -> Result<()> {
    let mut text = String::from("threshold,precision,recall\n");
    for (i, tau) in curve.thresholds.iter().enumerate() {
        let recall = match &curve.recall {
            Some(r) => r[i].to_string(),
            None => "undefined".to_string(),
        };
        text.push_str(&format!("{tau},{},{recall}\n", curve.precision[i]));
    }
    std::fs::write(path, text).map_err(|cause| Error::Io {
        path: path.display().to_string(),
        cause,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchedDebutant {
    pub topic: TopicId,
    pub similarity: f64,
}

/// One cluster's matches, best first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterMatches {
    pub cluster: usize,
    pub matches: Vec<MatchedDebutant>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchReport {
    pub year: i32,
    pub threshold: f64,
    pub entries: Vec<ClusterMatches>,
}

impl Artifact for MatchReport {
    const KIND: &'static str = "match-report";
}

/// Which debutants each cluster matches at `tau`, similarity descending.
/// Clusters matching nothing keep an empty listing, so false positives
/// stay visible.
pub fn match_report(matrix: &SimilarityMatrix, tau: f64) -> MatchReport {
    let entries = matrix
        .values
        .iter()
        .zip(&matrix.clusters)
        .map(|(row, cluster)| {
            let mut matches: Vec<MatchedDebutant> = row
                .iter()
                .zip(&matrix.debutants)
                .filter(|(value, _)| **value >= tau)
                .map(|(value, topic)| MatchedDebutant {
                    topic: topic.clone(),
                    similarity: *value,
                })
                .collect();
            matches.sort_by(|a, b| {
                b.similarity
                    .total_cmp(&a.similarity)
                    .then_with(|| a.topic.cmp(&b.topic))
            });
            ClusterMatches {
                cluster: *cluster,
                matches,
            }
        })
        .collect();
    MatchReport {
        year: matrix.year,
        threshold: tau,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{load_ontology, LoadOptions};
    use crate::gold::{Ancestor, GoldEntry};
    use approx::assert_abs_diff_eq;
    use std::io::Write as _;

    fn set(items: &[&str]) -> BTreeSet<TopicId> {
        items.iter().map(|s| s.to_string()).collect()
    }

    fn ontology_from(csv: &str) -> Ontology {
        let mut f = tempfile::Builder::new().suffix(".csv").tempfile().unwrap();
        f.write_all(csv.as_bytes()).unwrap();
        load_ontology(f.path(), &LoadOptions::default()).unwrap().value
    }

    #[test]
    fn identical_sets_are_fully_similar_in_plain_mode() {
        let onto = Ontology::default();
        let x = set(&["a", "b"]);
        assert_eq!(
            semantic_jaccard(&x, &x, &onto, JaccardMode::Plain, 1).unwrap(),
            1.0
        );
    }

    #[test]
    fn disjoint_unenhanced_sets_score_zero() {
        let onto = Ontology::default();
        let sim = semantic_jaccard(&set(&["a", "b"]), &set(&["c"]), &onto, JaccardMode::SameAs, 1)
            .unwrap();
        assert_eq!(sim, 0.0);
    }

    #[test]
    fn plain_mode_is_symmetric() {
        let onto = Ontology::default();
        let (x, y) = (set(&["a", "b", "c"]), set(&["b", "c", "d"]));
        let xy = semantic_jaccard(&x, &y, &onto, JaccardMode::Plain, 1).unwrap();
        let yx = semantic_jaccard(&y, &x, &onto, JaccardMode::Plain, 1).unwrap();
        assert_eq!(xy, yx);
        assert_abs_diff_eq!(xy, 0.5);
    }

    #[test]
    fn equivalent_labels_substitute_without_widening_the_denominator() {
        // a is equivalent to a2; cluster {a,b} vs debutant {a2,c}.
        let onto =
            ontology_from("subject,predicate,object\na,relatedEquivalent,a2\n");
        let sim = semantic_jaccard(
            &set(&["a", "b"]),
            &set(&["a2", "c"]),
            &onto,
            JaccardMode::SameAs,
            1,
        )
        .unwrap();
        assert_abs_diff_eq!(sim, 0.25);
        // Plain mode sees nothing in common.
        let plain = semantic_jaccard(
            &set(&["a", "b"]),
            &set(&["a2", "c"]),
            &onto,
            JaccardMode::Plain,
            1,
        )
        .unwrap();
        assert_eq!(plain, 0.0);
    }

    #[test]
    fn cluster_side_super_areas_enter_both_sides_of_the_ratio() {
        let onto = ontology_from("subject,predicate,object\nx,broaderGeneric,p\n");
        let sim =
            semantic_jaccard(&set(&["x"]), &set(&["p"]), &onto, JaccardMode::SupC, 1).unwrap();
        // numerator {p}; denominator {x, p}.
        assert_abs_diff_eq!(sim, 0.5);
        let without =
            semantic_jaccard(&set(&["x"]), &set(&["p"]), &onto, JaccardMode::SameAs, 1).unwrap();
        assert_eq!(without, 0.0);
    }

    #[test]
    fn debutant_side_super_areas_mirror_the_cluster_side() {
        let onto = ontology_from("subject,predicate,object\nd,broaderGeneric,x\n");
        let sim =
            semantic_jaccard(&set(&["x"]), &set(&["d"]), &onto, JaccardMode::SupD, 1).unwrap();
        assert_abs_diff_eq!(sim, 0.5);
    }

    #[test]
    fn shared_super_area_never_reduces_the_numerator() {
        let onto = ontology_from(
            "subject,predicate,object\nx,broaderGeneric,s\ny,broaderGeneric,s\n",
        );
        let plain =
            semantic_jaccard(&set(&["x"]), &set(&["y"]), &onto, JaccardMode::Plain, 1).unwrap();
        let both =
            semantic_jaccard(&set(&["x"]), &set(&["y"]), &onto, JaccardMode::SupBoth, 1).unwrap();
        assert_eq!(plain, 0.0);
        // {x,s} vs {y,s}: numerator 1, denominator 3.
        assert_abs_diff_eq!(both, 1.0 / 3.0);
    }

    #[test]
    fn empty_sets_cannot_be_compared() {
        let onto = Ontology::default();
        assert!(matches!(
            semantic_jaccard(&set(&[]), &set(&["a"]), &onto, JaccardMode::Plain, 1),
            Err(Error::EmptySets)
        ));
    }

    fn entry(topic: &str, soft: i32, ancestors: &[&str]) -> GoldEntry {
        GoldEntry {
            topic: topic.into(),
            hard_debut: soft,
            soft_debut: soft,
            ancestors: ancestors
                .iter()
                .map(|a| Ancestor { topic: a.to_string(), distance: 0.0 })
                .collect(),
        }
    }

    fn bare_cluster(topics: &[&str]) -> Cluster {
        Cluster {
            year: 2004,
            topics: set(topics),
            links: vec![],
            authors: vec![],
            papers: vec![],
        }
    }

    #[test]
    fn matrix_columns_cover_the_two_following_years() {
        let gold = GoldStandard {
            entries: vec![
                entry("next", 2005, &["a"]),
                entry("after", 2006, &["b"]),
                entry("far", 2007, &["c"]),
                entry("orphan", 2005, &[]),
            ],
        };
        let clusters = vec![bare_cluster(&["a", "b"])];
        let report = build_similarity_matrix(
            2004,
            &clusters,
            &gold,
            &Ontology::default(),
            JaccardMode::Plain,
            1,
        )
        .unwrap();
        assert_eq!(report.value.debutants, vec!["after".to_string(), "next".into()]);
        assert_eq!(report.warnings.len(), 1);
        assert!(report.warnings[0].contains("orphan"));
        assert_abs_diff_eq!(report.value.values[0][0], 0.5);
        assert_abs_diff_eq!(report.value.values[0][1], 0.5);
    }

    fn matrix(values: Vec<Vec<f64>>, cols: usize) -> SimilarityMatrix {
        SimilarityMatrix {
            year: 2004,
            clusters: (0..values.len()).collect(),
            debutants: (0..cols).map(|i| format!("d{i}")).collect(),
            values,
        }
    }

    #[test]
    fn the_two_by_two_example_halves_both_measures() {
        let m = matrix(vec![vec![0.3, 0.0], vec![0.0, 0.1]], 2);
        let (p, r) = precision_recall_at(&m, 0.2).unwrap();
        assert_eq!(p, 0.5);
        assert_eq!(r, Some(0.5));
    }

    #[test]
    fn zero_threshold_matches_everything() {
        let m = matrix(vec![vec![0.3, 0.0], vec![0.0, 0.1]], 2);
        let (p, r) = precision_recall_at(&m, 0.0).unwrap();
        assert_eq!(p, 1.0);
        assert_eq!(r, Some(1.0));
    }

    #[test]
    fn no_debutants_leaves_recall_undefined() {
        let m = matrix(vec![vec![], vec![]], 0);
        let (p, r) = precision_recall_at(&m, 0.0).unwrap();
        // Row maxima are -inf: nothing can match a threshold of 0.
        assert_eq!(p, 0.0);
        assert_eq!(r, None);
        let curve = precision_recall_sweep(&m, 0.5).unwrap();
        assert!(curve.recall.is_none());
    }

    #[test]
    fn empty_matrix_is_an_error() {
        let m = matrix(vec![], 2);
        assert!(matches!(
            precision_recall_at(&m, 0.5),
            Err(Error::EmptyMatrix)
        ));
    }

    #[test]
    fn sweep_agrees_with_single_threshold_queries() {
        let m = matrix(vec![vec![0.31, 0.7], vec![0.12, 0.05], vec![0.9, 0.29]], 2);
        let curve = precision_recall_sweep(&m, 0.001).unwrap();
        assert_eq!(curve.thresholds.len(), 1001);
        assert_eq!(*curve.thresholds.last().unwrap(), 1.0);
        for (i, tau) in curve.thresholds.iter().enumerate() {
            let (p, r) = precision_recall_at(&m, *tau).unwrap();
            assert_eq!(curve.precision[i], p);
            assert_eq!(curve.recall.as_ref().unwrap()[i], r.unwrap());
        }
    }

    #[test]
    fn recall_never_increases_along_the_sweep() {
        let m = matrix(vec![vec![0.31, 0.7], vec![0.12, 0.05]], 2);
        let recall = precision_recall_sweep(&m, 0.001).unwrap().recall.unwrap();
        assert!(recall.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn pr_csv_spells_out_undefined_recall() {
        let m = matrix(vec![vec![]], 0);
        let curve = precision_recall_sweep(&m, 0.5).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pr.csv");
        write_pr_csv(&curve, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "threshold,precision,recall\n0,0,undefined\n0.5,0,undefined\n1,0,undefined\n");
    }

    #[test]
    fn match_listings_order_by_similarity() {
        let m = SimilarityMatrix {
            year: 2004,
            clusters: vec![0, 1],
            debutants: vec!["lexical resources".into(), "ontology learning".into()],
            values: vec![vec![0.393, 0.348], vec![0.1, 0.05]],
        };
        let report = match_report(&m, 0.15);
        assert_eq!(report.entries[0].matches.len(), 2);
        assert_eq!(report.entries[0].matches[0].topic, "lexical resources");
        assert_abs_diff_eq!(report.entries[0].matches[0].similarity, 0.393);
        assert_eq!(report.entries[0].matches[1].topic, "ontology learning");
        // The second cluster matches nothing but keeps its listing.
        assert!(report.entries[1].matches.is_empty());
    }

    #[test]
    fn match_report_round_trips() {
        let m = matrix(vec![vec![0.3, 0.2]], 2);
        let report = match_report(&m, 0.25);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("matches.json");
        crate::corpus::save_artifact(&report, &path, None).unwrap();
        let back: MatchReport = crate::corpus::load_artifact(&path).unwrap();
        assert_eq!(back, report);
    }
}
