//! Overlapping community detection over 3-cliques.
//!
//! Two detectors share one interface: classic clique percolation on a
//! binarized graph, and the weighted variant that filters 3-cliques by the
//! pace of collaboration, then grows communities from locally maximal
//! cliques through their order-2 ego networks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::Artifact;
use crate::dynamics::Clique3;
use crate::evolution::EvolutionaryNetwork;
use crate::networks::YearTopicNetwork;
use crate::{Error, Result, TopicId};

/// All triangles of the graph given by `edges` (keys ordered `u < v`),
/// each reported once, sorted.
pub fn triangles_in(edges: &BTreeSet<(TopicId, TopicId)>) -> Vec<Clique3> {
    let mut adjacency: BTreeMap<&TopicId, BTreeSet<&TopicId>> = BTreeMap::new();
    for (u, v) in edges {
        adjacency.entry(u).or_default().insert(v);
        adjacency.entry(v).or_default().insert(u);
    }
    let mut cliques = Vec::new();
    for (u, v) in edges {
        let (nu, nv) = (&adjacency[u], &adjacency[v]);
        // Scan the smaller neighborhood; w > v reports each triangle once.
        let (small, large) = if nu.len() <= nv.len() { (nu, nv) } else { (nv, nu) };
        for &w in small.iter() {
            if w > v && large.contains(w) {
                cliques.push(Clique3::new(u, v, w).expect("edge endpoints are distinct"));
            }
        }
    }
    cliques.sort();
    cliques
}

/// Triangles of a yearly network, ignoring edges below `min_weight`.
pub fn enumerate_triangles(net: &YearTopicNetwork, min_weight: u32) -> Vec<Clique3> {
    let edges: BTreeSet<(TopicId, TopicId)> = net
        .edges()
        .filter(|(_, _, w)| *w >= min_weight)
        .map(|(u, v, _)| (u.clone(), v.clone()))
        .collect();
    triangles_in(&edges)
}

/// Sentinel weight for cliques with a non-positive edge: below every
/// threshold, so they never survive filtering.
pub const DEAD_CLIQUE: f64 = f64::NEG_INFINITY;

/// Pace of collaboration of a clique: harmonic mean of its three edge
/// slopes when all are positive, the dead sentinel otherwise.
pub fn clique_intensity(clique: &Clique3, evonet: &EvolutionaryNetwork) -> Result<f64> {
    let mut weights = [0.0f64; 3];
    for (i, key) in clique.edge_keys().iter().enumerate() {
        let m = clique.members();
        weights[i] = evonet.edge_weight(key).ok_or_else(|| Error::NotAClique {
            a: m[0].clone(),
            b: m[1].clone(),
            c: m[2].clone(),
        })?;
    }
    if weights.iter().any(|w| *w <= 0.0) {
        return Ok(DEAD_CLIQUE);
    }
    Ok(3.0 / weights.iter().map(|w| 1.0 / w).sum::<f64>())
}

/// Graph whose vertices are weighted 3-cliques, adjacent exactly when they
/// share two topics.
#[derive(Debug, Clone, Default)]
pub struct CliqueGraph {
    pub cliques: Vec<Clique3>,
    pub weights: Vec<f64>,
    /// Sorted neighbor indices per vertex; symmetric, irreflexive.
    pub neighbors: Vec<Vec<usize>>,
}

pub fn build_clique_graph(weighted: Vec<(Clique3, f64)>) -> CliqueGraph {
    let mut cliques = Vec::with_capacity(weighted.len());
    let mut weights = Vec::with_capacity(weighted.len());
    for (c, w) in weighted {
        cliques.push(c);
        weights.push(w);
    }
    let mut by_pair: BTreeMap<(TopicId, TopicId), Vec<usize>> = BTreeMap::new();
    for (i, clique) in cliques.iter().enumerate() {
        for key in clique.edge_keys() {
            by_pair.entry(key).or_default().push(i);
        }
    }
    let mut neighbors = vec![Vec::new(); cliques.len()];
    // Distinct 3-cliques share at most one pair, so each adjacency
    // surfaces in exactly one bucket.
    for bucket in by_pair.values() {
        for (a, i) in bucket.iter().enumerate() {
            for j in &bucket[a + 1..] {
                neighbors[*i].push(*j);
                neighbors[*j].push(*i);
            }
        }
    }
    for list in &mut neighbors {
        list.sort_unstable();
        list.dedup();
    }
    CliqueGraph {
        cliques,
        weights,
        neighbors,
    }
}

/// Vertices whose weight no neighbor exceeds. On equal weights only the
/// lowest index of the tied pair qualifies, so adjacent plateaus yield one
/// deterministic representative.
pub fn find_local_maxima(cg: &CliqueGraph) -> Vec<usize> {
    (0..cg.cliques.len())
        .filter(|&i| {
            cg.neighbors[i].iter().all(|&j| {
                cg.weights[i] > cg.weights[j] || (cg.weights[i] == cg.weights[j] && i < j)
            })
        })
        .collect()
}

/// One detected community and what seeded it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Community {
    pub topics: BTreeSet<TopicId>,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Origin {
    /// Local-maximum cliques that seeded the community.
    Seeds(Vec<Clique3>),
    /// Connected-component id.
    Component(usize),
}

/// Communities of one year under one detector, as persisted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommunitySet {
    pub year: i32,
    pub algorithm: String,
    pub communities: Vec<Community>,
}

impl Artifact for CommunitySet {
    const KIND: &'static str = "community-set";
}

fn k_cliques(edges: &BTreeSet<(TopicId, TopicId)>, k: usize) -> Vec<Vec<TopicId>> {
    if k == 3 {
        return triangles_in(edges)
            .into_iter()
            .map(|c| c.members().to_vec())
            .collect();
    }
    let mut adjacency: BTreeMap<&TopicId, BTreeSet<&TopicId>> = BTreeMap::new();
    for (u, v) in edges {
        adjacency.entry(u).or_default().insert(v);
        adjacency.entry(v).or_default().insert(u);
    }
    // Grow sorted cliques by appending common neighbors past the last member.
    let mut current: Vec<Vec<&TopicId>> = adjacency.keys().map(|n| vec![*n]).collect();
    for _ in 1..k {
        let mut next = Vec::new();
        for clique in &current {
            let last = clique.last().expect("cliques are non-empty");
            for candidate in adjacency[*last].iter().filter(|c| **c > *last) {
                if clique.iter().all(|m| adjacency[*m].contains(*candidate)) {
                    let mut grown = clique.clone();
                    grown.push(candidate);
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    current
        .into_iter()
        .map(|c| c.into_iter().cloned().collect())
        .collect()
}

/// Classic clique percolation over the binarized graph: connected
/// components of the k-clique adjacency graph (sharing k−1 nodes),
/// projected back to topic sets. Nodes in no k-clique join no community.
pub fn cpm_over_edges(edges: &BTreeSet<(TopicId, TopicId)>, k: usize) -> Vec<Community> {
    let cliques = k_cliques(edges, k);
    if cliques.is_empty() {
        return Vec::new();
    }
    let mut uf: UnionFind<usize> = UnionFind::new(cliques.len());
    let mut by_subset: BTreeMap<Vec<&TopicId>, usize> = BTreeMap::new();
    for (i, clique) in cliques.iter().enumerate() {
        for skip in 0..k {
            let subset: Vec<&TopicId> = clique
                .iter()
                .enumerate()
                .filter(|(pos, _)| *pos != skip)
                .map(|(_, t)| t)
                .collect();
            match by_subset.get(&subset) {
                Some(&j) => {
                    uf.union(i, j);
                }
                None => {
                    by_subset.insert(subset, i);
                }
            }
        }
    }
    let mut components: BTreeMap<usize, BTreeSet<TopicId>> = BTreeMap::new();
    for (i, clique) in cliques.iter().enumerate() {
        components
            .entry(uf.find(i))
            .or_default()
            .extend(clique.iter().cloned());
    }
    let mut topic_sets: Vec<BTreeSet<TopicId>> = components.into_values().collect();
    topic_sets.sort();
    topic_sets
        .into_iter()
        .enumerate()
        .map(|(id, topics)| Community {
            topics,
            origin: Origin::Component(id),
        })
        .collect()
}

pub fn cpm(net: &YearTopicNetwork, edge_min_weight: u32, k: usize) -> Vec<Community> {
    let edges: BTreeSet<(TopicId, TopicId)> = net
        .edges()
        .filter(|(_, _, w)| *w >= edge_min_weight)
        .map(|(u, v, _)| (u.clone(), v.clone()))
        .collect();
    cpm_over_edges(&edges, k)
}

/// Weighted percolation: keep 3-cliques whose intensity strictly exceeds
/// the threshold, then one community per locally maximal clique, spanning
/// its order-2 ego network in the clique graph.
pub fn acpm(evonet: &EvolutionaryNetwork, intensity_threshold: f64) -> Vec<Community> {
    let edges: BTreeSet<(TopicId, TopicId)> = evonet.edge_slope.keys().cloned().collect();
    let triangles = triangles_in(&edges);
    let weighted: Vec<(Clique3, f64)> = triangles
        .into_par_iter()
        .map(|clique| {
            let intensity =
                clique_intensity(&clique, evonet).expect("triangle edges exist in the network");
            (clique, intensity)
        })
        .filter(|(_, intensity)| *intensity > intensity_threshold)
        .collect();
    let cg = build_clique_graph(weighted);
    find_local_maxima(&cg)
        .into_iter()
        .map(|seed| {
            let mut topics = BTreeSet::new();
            for vertex in ego_order2(&cg, seed) {
                topics.extend(cg.cliques[vertex].members().iter().cloned());
            }
            Community {
                topics,
                origin: Origin::Seeds(vec![cg.cliques[seed].clone()]),
            }
        })
        .collect()
}

/// The seed, its neighbors, and their neighbors.
fn ego_order2(cg: &CliqueGraph, seed: usize) -> Vec<usize> {
    let mut dist: BTreeMap<usize, u8> = [(seed, 0)].into();
    let mut queue: VecDeque<usize> = [seed].into();
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == 2 {
            continue;
        }
        for &n in &cg.neighbors[v] {
            dist.entry(n).or_insert_with(|| {
                queue.push_back(n);
                d + 1
            });
        }
    }
    dist.into_keys().collect()
}

/// Pluggable detector so alternative algorithms feed the same evaluation
/// harness.
pub trait CommunityDetector {
    fn name(&self) -> &'static str;
    fn detect(&self, evonet: &EvolutionaryNetwork) -> Vec<Community>;
}

pub struct Acpm {
    pub intensity_threshold: f64,
}

impl CommunityDetector for Acpm {
    fn name(&self) -> &'static str {
        "acpm"
    }
    fn detect(&self, evonet: &EvolutionaryNetwork) -> Vec<Community> {
        acpm(evonet, self.intensity_threshold)
    }
}

/// Baseline detector: binarize the evolutionary network by keeping edges
/// with slope strictly above the threshold, then percolate at k = 3.
pub struct Cpm {
    pub min_slope: f64,
    pub k: usize,
}

impl CommunityDetector for Cpm {
    fn name(&self) -> &'static str {
        "cpm"
    }
    fn detect(&self, evonet: &EvolutionaryNetwork) -> Vec<Community> {
        let edges: BTreeSet<(TopicId, TopicId)> = evonet
            .edge_slope
            .iter()
            .filter(|(_, slope)| **slope > self.min_slope)
            .map(|(k, _)| k.clone())
            .collect();
        cpm_over_edges(&edges, self.k)
    }
}
