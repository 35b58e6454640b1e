use std::cmp::Ordering;

use super::{post_assign, Partition};
use crate::complex::{NodeId, SimplicialComplex};
use crate::conductance::{ConductanceReport, Ratio, ZCounts};
use crate::eig;
use crate::error::{Error, Result};
use crate::operators::{Method, OperatorBundle};

/// Conductance of every prefix of a node ordering.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepProfile {
    /// `γ_1, ..., γ_n`.
    pub ordering: Vec<NodeId>,
    /// Entry `k - 1` describes the prefix `{γ_1, ..., γ_k}` for `k = 1..n-1`;
    /// `None` marks a prefix with a zero-volume side.
    pub reports: Vec<Option<ConductanceReport>>,
    /// Length of the best prefix.
    pub best_k: usize,
}

impl SweepProfile {
    pub fn phis(&self) -> Vec<Option<f64>> {
        self.reports
            .iter()
            .map(|r| r.map(|r| r.phi().to_f64()))
            .collect()
    }

    pub fn best(&self) -> ConductanceReport {
        self.reports[self.best_k - 1].expect("best prefix is feasible")
    }

    pub fn best_phi(&self) -> Ratio {
        self.best().phi()
    }

    pub fn best_set(&self) -> &[NodeId] {
        &self.ordering[..self.best_k]
    }
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub partition: Partition,
    pub profile: SweepProfile,
    /// Second smallest eigenvalue of the normalized Laplacian over all
    /// active nodes (zero when the active graph is disconnected).
    pub lambda2: f64,
    /// Connected components of the active similarity graph.
    pub components: usize,
    /// Nodes with zero degree under the method's operator.
    pub excluded: Vec<NodeId>,
}

/// Evaluates the method's conductance on every proper prefix of `ordering`.
///
/// The simplicial method uses triangle cut and volume, updated incrementally
/// through the triangles incident to each added node. Motif and graph use
/// weighted edge cut and volume on their adjacency matrices.
pub fn sweep_profile(
    x: &SimplicialComplex,
    bundle: &OperatorBundle,
    ordering: &[NodeId],
) -> Result<SweepProfile> {
    let idx: Vec<usize> = ordering
        .iter()
        .map(|&v| x.index_of(v).ok_or(Error::UnknownNodeId(v)))
        .collect::<Result<_>>()?;
    let n = idx.len();
    let mut reports = Vec::with_capacity(n.saturating_sub(1));

    match bundle.method {
        Method::Simplicial => {
            let tris = x.triangle_indices();
            let mut incident = vec![Vec::new(); x.nodes().len()];
            for (t, tri) in tris.iter().enumerate() {
                for &v in tri {
                    incident[v].push(t);
                }
            }
            let total = 3 * tris.len() as u64;
            let mut inside = vec![0u8; tris.len()];
            let mut z = ZCounts::default();
            for &v in idx.iter().take(n.saturating_sub(1)) {
                for &t in &incident[v] {
                    z.shift(inside[t], inside[t] + 1);
                    inside[t] += 1;
                }
                let vol = z.volume();
                reports.push(ConductanceReport::feasible(z.cut(), vol, total - vol));
            }
        }
        Method::Motif | Method::Graph => {
            let adj = &bundle.adjacency;
            let total: u64 = bundle.degree.iter().sum();
            let mut in_set = vec![false; x.nodes().len()];
            let (mut cut, mut vol) = (0u64, 0u64);
            for &v in idx.iter().take(n.saturating_sub(1)) {
                let to_set: u64 = adj.row(v).filter(|&(w, _)| in_set[w]).map(|(_, w)| w).sum();
                cut = cut + bundle.degree[v] - 2 * to_set;
                vol += bundle.degree[v];
                in_set[v] = true;
                reports.push(ConductanceReport::feasible(cut, vol, total - vol));
            }
        }
    }

    // Lowest conductance, then the more balanced split, then the shorter prefix.
    let best_k = reports
        .iter()
        .enumerate()
        .filter_map(|(i, r)| r.map(|r| (i + 1, r)))
        .min_by(|(ka, a), (kb, b)| {
            a.phi()
                .cmp(&b.phi())
                .then(b.min_volume().cmp(&a.min_volume()))
                .then(ka.cmp(kb))
        })
        .map(|(k, _)| k)
        .ok_or(Error::NoFeasibleCut)?;

    Ok(SweepProfile {
        ordering: ordering.to_vec(),
        reports,
        best_k,
    })
}

/// Sweep ordering of the active nodes and the spectral quantities behind it.
///
/// The largest component of the active similarity graph is ordered by the
/// entries of `D^{-1/2} v`, `v` being the Fiedler vector of its normalized
/// Laplacian (ties by node id). Remaining components follow whole, in the
/// order returned by [`OperatorBundle::components`].
pub fn sweep_ordering(
    x: &SimplicialComplex,
    bundle: &OperatorBundle,
) -> Result<(Vec<NodeId>, f64)> {
    let comps = bundle.components();
    let pos = bundle.active_position();
    let main = &comps[0];
    let sub: Vec<usize> = main.iter().map(|&i| pos[i].expect("active")).collect();
    let lap = bundle.normalized_laplacian.submatrix(&sub);
    let fiedler = eig::fiedler_vector(&lap)?;

    let lambda2 = if comps.len() == 1 {
        fiedler.value
    } else {
        eig::smallest_eigenpairs(&bundle.normalized_laplacian, 2)?.values[1]
    };

    let scaled: Vec<f64> = main
        .iter()
        .zip(&fiedler.vector)
        .map(|(&i, v)| v / (bundle.degree[i] as f64).sqrt())
        .collect();
    let mut order: Vec<usize> = (0..main.len()).collect();
    order.sort_by(|&a, &b| match scaled[a].total_cmp(&scaled[b]) {
        Ordering::Equal => main[a].cmp(&main[b]),
        o => o,
    });

    let mut ordering: Vec<NodeId> = order.into_iter().map(|a| x.nodes()[main[a]]).collect();
    for comp in &comps[1..] {
        ordering.extend(comp.iter().map(|&i| x.nodes()[i]));
    }
    Ok((ordering, lambda2))
}

/// Two-way clustering by sweeping the Fiedler ordering for the prefix of
/// least conductance. The prefix becomes cluster 0, the other active nodes
/// cluster 1, and zero-degree nodes are attached by [`post_assign`].
pub fn sweep_cut(x: &SimplicialComplex, method: Method) -> Result<SweepResult> {
    let bundle = OperatorBundle::for_complex(x, method)?;
    let components = bundle.components().len();
    let (ordering, lambda2) = sweep_ordering(x, &bundle)?;
    let profile = sweep_profile(x, &bundle, &ordering)?;

    let mut partial = vec![None; x.nodes().len()];
    for (k, &v) in profile.ordering.iter().enumerate() {
        let label = if k < profile.best_k { 0 } else { 1 };
        partial[x.index_of(v).expect("member")] = Some(label);
    }
    let partition = post_assign(x, &partial).with_method(method);

    Ok(SweepResult {
        partition,
        profile,
        lambda2,
        components,
        excluded: bundle.excluded_ids(x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conductance::{brute_force_min, phi_02, NodeSet};

    fn complex(edges: &[[NodeId; 2]], tris: &[[NodeId; 3]]) -> SimplicialComplex {
        SimplicialComplex::new([], edges.iter().copied(), tris.iter().copied(), true).unwrap()
    }

    /// Two K4 communities with every internal triangle filled and one hollow
    /// clique {4, 5, 6} across.
    fn planted_pair() -> SimplicialComplex {
        let mut tris = Vec::new();
        for base in [0, 4] {
            for t in [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]] {
                tris.push(t.map(|v| v + base));
            }
        }
        complex(&[[4, 5], [4, 6]], &tris)
    }

    #[test]
    fn planted_pair_is_recovered() {
        let x = planted_pair();
        let r = sweep_cut(&x, Method::Simplicial).unwrap();
        assert_eq!(r.components, 2);
        assert_eq!(r.profile.best_phi(), Ratio::new(0, 1));
        assert_eq!(r.partition.members(0), vec![1, 2, 3, 4]);
        assert_eq!(r.partition.members(1), vec![5, 6, 7, 8]);
        assert!(r.lambda2.abs() < 1e-10);
    }

    #[test]
    fn k3_profile() {
        let x = complex(&[], &[[1, 2, 3]]);
        let r = sweep_cut(&x, Method::Simplicial).unwrap();
        assert_eq!(r.profile.reports.len(), 2);
        assert_eq!(r.profile.best_phi(), Ratio::new(1, 1));
        assert!((r.lambda2 - 1.5).abs() < 1e-12);
    }

    #[test]
    fn incremental_profile_matches_recomputation() {
        let x = complex(
            &[[3, 6]],
            &[
                [1, 2, 3],
                [2, 3, 4],
                [3, 4, 5],
                [4, 5, 6],
                [5, 6, 7],
                [1, 3, 5],
            ],
        );
        let r = sweep_cut(&x, Method::Simplicial).unwrap();
        for (k, report) in r.profile.reports.iter().enumerate() {
            let s = NodeSet::new(&x, r.profile.ordering[..=k].iter().copied()).unwrap();
            assert_eq!(*report, phi_02(&x, &s).ok());
        }
        let best = brute_force_min(&x).unwrap();
        assert!(r.profile.best_phi() >= best.phi());
        assert!(r.profile.best_phi().to_f64() <= (2.0 * r.lambda2).sqrt() + 1e-9);
    }

    #[test]
    fn edge_profile_matches_weighted_conductance() {
        use crate::conductance::edge_conductance;
        let x = complex(&[[1, 2], [2, 3], [3, 4], [4, 1], [1, 3], [4, 5]], &[]);
        for method in [Method::Graph, Method::Motif] {
            let bundle = OperatorBundle::for_complex(&x, method).unwrap();
            let ordering: Vec<NodeId> = bundle.active.iter().map(|&i| x.nodes()[i]).collect();
            let profile = sweep_profile(&x, &bundle, &ordering).unwrap();
            for (k, report) in profile.reports.iter().enumerate() {
                let mut mask = vec![false; x.nodes().len()];
                for &v in &ordering[..=k] {
                    mask[x.index_of(v).unwrap()] = true;
                }
                assert_eq!(*report, edge_conductance(&bundle.adjacency, &mask));
            }
        }
    }

    #[test]
    fn no_triangles_is_an_empty_active_set() {
        let x = complex(&[[1, 2], [2, 3]], &[]);
        assert_eq!(
            sweep_cut(&x, Method::Simplicial).unwrap_err(),
            Error::EmptyActiveSet("simplicial")
        );
        assert!(sweep_cut(&x, Method::Graph).is_ok());
    }
}
