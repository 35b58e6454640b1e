//! Two-way sweep-cut clustering and the multiway spectral embedding with
//! k-means, shared by the simplicial, motif and graph operators.

mod kmeans;
mod multiway;
mod sweep;

use std::collections::BTreeMap;

use crate::complex::{NodeId, SimplicialComplex};
use crate::error::{Error, Result};
use crate::operators::Method;

pub use kmeans::{kmeans, KMeans, KMEANS_MAX_ITER, KMEANS_RESTARTS, KMEANS_TOL};
pub use multiway::{multiway_cluster, spectral_embed, EmbedOptions, Embedding, MultiwayResult};
pub use sweep::{sweep_cut, sweep_ordering, sweep_profile, SweepProfile, SweepResult};

/// How a node outside the spectral problem received its label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReattachRule {
    /// Majority label among edge-graph neighbors.
    NeighborMajority,
    /// No labeled neighbor was reachable; joined the largest cluster.
    LargestCluster,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reattached {
    pub node: NodeId,
    pub label: usize,
    pub rule: ReattachRule,
}

/// Assignment of every node to a cluster label in `0..k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    labels: BTreeMap<NodeId, usize>,
    pub method: Option<Method>,
    /// Nodes that were labeled after the fact, in the order they were labeled.
    pub reattached: Vec<Reattached>,
}

impl Partition {
    /// Wraps labels that already cover `0..k` without gaps.
    pub fn new(labels: BTreeMap<NodeId, usize>) -> Result<Self> {
        let k = labels.values().max().map_or(0, |m| m + 1);
        let mut present = vec![false; k];
        for &l in labels.values() {
            present[l] = true;
        }
        if present.iter().any(|p| !p) {
            return Err(Error::InvalidClusterCount { k, n: labels.len() });
        }
        Ok(Self {
            labels,
            method: None,
            reattached: Vec::new(),
        })
    }

    /// Compacts arbitrary labels to `0..k` in order of first appearance by
    /// ascending node id.
    pub fn from_raw<L: Ord + Clone>(pairs: impl IntoIterator<Item = (NodeId, L)>) -> Self {
        let sorted: BTreeMap<NodeId, L> = pairs.into_iter().collect();
        let mut dense: BTreeMap<L, usize> = BTreeMap::new();
        let labels = sorted
            .into_iter()
            .map(|(node, raw)| {
                let next = dense.len();
                (node, *dense.entry(raw).or_insert(next))
            })
            .collect();
        Self {
            labels,
            method: None,
            reattached: Vec::new(),
        }
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = Some(method);
        self
    }

    pub fn label(&self, node: NodeId) -> Option<usize> {
        self.labels.get(&node).copied()
    }

    pub fn labels(&self) -> &BTreeMap<NodeId, usize> {
        &self.labels
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.labels.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn num_clusters(&self) -> usize {
        self.labels.values().max().map_or(0, |m| m + 1)
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.num_clusters()];
        for &l in self.labels.values() {
            sizes[l] += 1;
        }
        sizes
    }

    /// Members of one cluster, ascending.
    pub fn members(&self, label: usize) -> Vec<NodeId> {
        self.labels
            .iter()
            .filter(|(_, &l)| l == label)
            .map(|(&n, _)| n)
            .collect()
    }

    /// Applies `perm[old] = new` to every label.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        Self {
            labels: self.labels.iter().map(|(&n, &l)| (n, perm[l])).collect(),
            method: self.method,
            reattached: self.reattached.clone(),
        }
    }
}

/// Extends a partial labeling (indexed like `x.nodes()`) to every node.
///
/// Each round, every unlabeled node with labeled edge-graph neighbors takes
/// their majority label (ties to the smaller label); rounds repeat until
/// nothing changes, at most `N0` times. Nodes still unlabeled join the
/// largest cluster.
pub fn post_assign(x: &SimplicialComplex, partial: &[Option<usize>]) -> Partition {
    let n = x.nodes().len();
    assert_eq!(partial.len(), n);
    let mut labels = partial.to_vec();
    let mut reattached = Vec::new();
    let neighbors = x.neighbors();

    for _ in 0..n {
        let mut updates = Vec::new();
        for v in (0..n).filter(|&v| labels[v].is_none()) {
            let mut votes: BTreeMap<usize, usize> = BTreeMap::new();
            for &w in &neighbors[v] {
                if let Some(l) = labels[w] {
                    *votes.entry(l).or_default() += 1;
                }
            }
            if let Some(label) = majority(&votes) {
                updates.push((v, label));
            }
        }
        if updates.is_empty() {
            break;
        }
        for (v, label) in updates {
            labels[v] = Some(label);
            reattached.push(Reattached {
                node: x.nodes()[v],
                label,
                rule: ReattachRule::NeighborMajority,
            });
        }
    }

    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for l in labels.iter().flatten() {
        *sizes.entry(*l).or_default() += 1;
    }
    let largest = majority(&sizes).unwrap_or(0);
    for (slot, &node) in labels.iter_mut().zip(x.nodes()) {
        if slot.is_none() {
            *slot = Some(largest);
            reattached.push(Reattached {
                node,
                label: largest,
                rule: ReattachRule::LargestCluster,
            });
        }
    }

    Partition {
        labels: x
            .nodes()
            .iter()
            .zip(labels)
            .map(|(&id, l)| (id, l.expect("all labeled")))
            .collect(),
        method: None,
        reattached,
    }
}

/// Key with the highest count; ties go to the smaller key.
fn majority(counts: &BTreeMap<usize, usize>) -> Option<usize> {
    counts
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(&k, _)| k)
}
