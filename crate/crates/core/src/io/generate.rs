//! Seeded random complexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cluster::Partition;
use crate::complex::{NodeId, SimplicialComplex};

/// `c` communities of `m` nodes each (ids `1..=c*m`, community `i` holding
/// `i*m+1..=(i+1)*m`).
///
/// Each intra-community triple is filled with probability `p_intra_tri`,
/// bringing its edges along. Each cross-community pair becomes an edge with
/// probability `p_inter_edge`; cross triangles are never filled. Draws are
/// made in lexicographic order from a ChaCha8 stream seeded with `seed`.
///
/// # Panics
///
/// If a probability lies outside `[0, 1]`.
pub fn planted_partition(
    c: usize,
    m: usize,
    p_intra_tri: f64,
    p_inter_edge: f64,
    seed: u64,
) -> (SimplicialComplex, Partition) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = (c * m) as NodeId;
    let community = |v: NodeId| (v as usize - 1) / m.max(1);

    let mut triangles = Vec::new();
    for i in 0..c {
        let lo = (i * m) as NodeId + 1;
        let hi = ((i + 1) * m) as NodeId;
        for u in lo..=hi {
            for v in u + 1..=hi {
                for w in v + 1..=hi {
                    if rng.gen_bool(p_intra_tri) {
                        triangles.push([u, v, w]);
                    }
                }
            }
        }
    }
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if community(u) != community(v) && rng.gen_bool(p_inter_edge) {
                edges.push([u, v]);
            }
        }
    }
    let x = SimplicialComplex::new(1..=n, edges, triangles, true).expect("generated ids are valid");
    let truth = Partition::from_raw((1..=n).map(|v| (v, community(v))));
    (x, truth)
}

/// Erdős–Rényi graph on `1..=n` with edge probability `p_edge`, each of whose
/// 3-cliques is filled with probability `p_fill`.
///
/// # Panics
///
/// If a probability lies outside `[0, 1]`.
pub fn random_clique_complex(n: usize, p_edge: f64, p_fill: f64, seed: u64) -> SimplicialComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n as NodeId;
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p_edge) {
                edges.push([u, v]);
            }
        }
    }
    let graph = SimplicialComplex::new(1..=n, edges, [], false).expect("generated ids are valid");
    let filled: Vec<_> = graph
        .graph_triangles()
        .into_iter()
        .filter(|_| rng.gen_bool(p_fill))
        .collect();
    graph.add_filled(&filled).expect("cliques of the graph")
}
