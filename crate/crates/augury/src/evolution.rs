//! Evolutionary networks: five consecutive yearly networks compressed into
//! one graph whose node and edge weights are least-squares slopes.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::corpus::Artifact;
use crate::dynamics::slope;
use crate::networks::{edge_serde, YearTopicNetwork};
use crate::{Error, Result, TopicId};

/// Graph for window-end year `year`, covering the window's yearly networks.
/// Node weights are publication-count slopes, edge weights are
/// collaboration-strength slopes. Either may be negative.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EvolutionaryNetwork {
    pub year: i32,
    pub node_slope: BTreeMap<TopicId, f64>,
    #[serde(with = "edge_serde")]
    pub edge_slope: BTreeMap<(TopicId, TopicId), f64>,
}

impl Artifact for EvolutionaryNetwork {
    const KIND: &'static str = "evolutionary-network";
}

impl EvolutionaryNetwork {
    pub fn edge_weight(&self, key: &(TopicId, TopicId)) -> Option<f64> {
        self.edge_slope.get(key).copied()
    }
}

/// Strength of one year's collaboration on an edge: the harmonic mean of
/// w/p over both endpoints, 0 when the topics never co-occur that year.
pub fn edge_strength(w_uv: u32, p_u: u32, p_v: u32) -> Result<f64> {
    if w_uv == 0 {
        return Ok(0.0);
    }
    if p_u == 0 || p_v == 0 {
        return Err(Error::InconsistentCounts { w: w_uv, p_u, p_v });
    }
    Ok(2.0 * w_uv as f64 / (p_u + p_v) as f64)
}

/// Compress a window of consecutive yearly networks. Node and edge sets are
/// the plain unions over the window; a year where a node or edge is absent
/// contributes 0 to its series.
pub fn build_evolutionary(windows: &[YearTopicNetwork]) -> Result<EvolutionaryNetwork> {
    if windows.len() < 2 {
        return Err(Error::WindowTooShort {
            year: windows.first().map(|n| n.year).unwrap_or(0),
            needed: 2,
        });
    }
    let years: Vec<i32> = windows.iter().map(|n| n.year).collect();
    if years.windows(2).any(|p| p[1] != p[0] + 1) {
        return Err(Error::NonConsecutiveYears(years));
    }

    let mut nodes: BTreeSet<TopicId> = BTreeSet::new();
    let mut edges: BTreeSet<(TopicId, TopicId)> = BTreeSet::new();
    for net in windows {
        nodes.extend(net.node_set());
        edges.extend(net.cooccurrence.keys().cloned());
    }

    let node_slope = nodes
        .par_iter()
        .map(|topic| {
            let series: Vec<f64> = windows
                .iter()
                .map(|net| net.publications_of(topic).unwrap_or(0) as f64)
                .collect();
            Ok((topic.clone(), slope(&series, &years)?))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();

    let edge_slope = edges
        .par_iter()
        .map(|(u, v)| {
            let series = windows
                .iter()
                .map(|net| {
                    edge_strength(
                        net.weight(u, v),
                        net.publications_of(u).unwrap_or(0),
                        net.publications_of(v).unwrap_or(0),
                    )
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok(((u.clone(), v.clone()), slope(&series, &years)?))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .collect();

    Ok(EvolutionaryNetwork {
        year: *years.last().expect("validated non-empty"),
        node_slope,
        edge_slope,
    })
}

/// The yearly networks feeding the evolutionary graph of year `t`:
/// `t−window+1 ..= t`. The first year missing from `available` is named.
pub fn window_for_year(t: i32, window: usize, available: &BTreeSet<i32>) -> Result<Vec<i32>> {
    if window < 2 {
        return Err(Error::InvalidParameter(format!(
            "window must span at least 2 years, got {window}"
        )));
    }
    let start = t - (window as i32 - 1);
    let years: Vec<i32> = (start..=t).collect();
    for year in &years {
        if !available.contains(year) {
            return Err(Error::MissingYear { year: *year });
        }
    }
    Ok(years)
}
