use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cluster::Partition;
use crate::complex::{NodeId, SimplicialComplex};
use crate::error::Result;

/// Which 3-cliques of a plain graph become filled triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FillPolicy {
    /// Every 3-clique is filled.
    All,
    /// No triangles.
    None,
    /// Every 3-clique is filled, then the listed triples are made hollow.
    List(Vec<[NodeId; 3]>),
}

impl FillPolicy {
    /// Applies the policy to the edge graph of `graph`; its own triangles are
    /// ignored.
    pub fn apply(&self, graph: &SimplicialComplex) -> Result<SimplicialComplex> {
        let base = SimplicialComplex::new(
            graph.nodes().iter().copied(),
            graph.edges().iter().copied(),
            [],
            false,
        )?;
        match self {
            FillPolicy::None => Ok(base),
            FillPolicy::All => base.add_filled(&base.graph_triangles()),
            FillPolicy::List(removals) => base
                .add_filled(&base.graph_triangles())?
                .remove_filled(removals),
        }
    }
}

#[rustfmt::skip]
const ZACHARY_EDGES: [[NodeId; 2]; 78] = [
    [1, 2], [1, 3], [1, 4], [1, 5], [1, 6], [1, 7], [1, 8], [1, 9], [1, 11], [1, 12],
    [1, 13], [1, 14], [1, 18], [1, 20], [1, 22], [1, 32], [2, 3], [2, 4], [2, 8], [2, 14],
    [2, 18], [2, 20], [2, 22], [2, 31], [3, 4], [3, 8], [3, 9], [3, 10], [3, 14], [3, 28],
    [3, 29], [3, 33], [4, 8], [4, 13], [4, 14], [5, 7], [5, 11], [6, 7], [6, 11], [6, 17],
    [7, 17], [9, 31], [9, 33], [9, 34], [10, 34], [14, 34], [15, 33], [15, 34], [16, 33], [16, 34],
    [19, 33], [19, 34], [20, 34], [21, 33], [21, 34], [23, 33], [23, 34], [24, 26], [24, 28], [24, 30],
    [24, 33], [24, 34], [25, 26], [25, 28], [25, 32], [26, 32], [27, 30], [27, 34], [28, 34], [29, 32],
    [29, 34], [30, 33], [30, 34], [31, 33], [31, 34], [32, 33], [32, 34], [33, 34],
];

/// Members who joined the officer's club after the split; all others
/// followed the instructor.
const ZACHARY_OFFICER: [NodeId; 17] = [
    10, 15, 16, 19, 21, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34,
];

/// Edges whose filled triangles are treated as hollow in the standard
/// Zachary experiment.
pub const ZACHARY_BRIDGE_EDGES: [[NodeId; 2]; 2] = [[9, 31], [9, 34]];

/// The karate club friendship graph with no filled triangles, plus the
/// two-faction labels (`Mr. Hi`, `Officer`).
pub fn zachary_graph() -> (SimplicialComplex, Partition) {
    let x = SimplicialComplex::new(1..=34, ZACHARY_EDGES, [], false)
        .expect("embedded edge list is valid");
    let truth = Partition::from_raw((1..=34).map(|v| {
        let label = if ZACHARY_OFFICER.contains(&v) {
            "Officer"
        } else {
            "Mr. Hi"
        };
        (v, label)
    }));
    (x, truth)
}

pub fn load_zachary(fill: &FillPolicy) -> Result<(SimplicialComplex, Partition)> {
    let (graph, truth) = zachary_graph();
    Ok((fill.apply(&graph)?, truth))
}

/// Filled triangles of the all-filled Zachary complex that contain a bridge
/// edge, in sorted order.
pub fn zachary_bridge_removals() -> Vec<[NodeId; 3]> {
    let (x, _) = load_zachary(&FillPolicy::All).expect("all-filled Zachary");
    let mut out: Vec<[NodeId; 3]> = ZACHARY_BRIDGE_EDGES
        .iter()
        .flat_map(|&e| x.triangles_on_edge(e))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Eight-node, two-community complex on which only the filled-triangle
/// operator separates the communities.
///
/// Community 0 is `{1, 2, 3}` and community 1 is `{4, ..., 8}`. Filled
/// triangles lie inside communities; the 3-clique `{1, 3, 4}` spans them and
/// is hollow. Seed 0 gives this instance verbatim; other seeds relabel the
/// nodes by a seeded permutation of `1..=8`.
pub fn synth_hollow_bridge(seed: u64) -> (SimplicialComplex, Partition) {
    #[rustfmt::skip]
    const EDGES: [[NodeId; 2]; 13] = [
        [1, 2], [1, 3], [1, 4], [2, 3], [2, 8], [3, 4], [4, 5],
        [4, 7], [5, 6], [5, 7], [5, 8], [6, 8], [7, 8],
    ];
    const FILLED: [[NodeId; 3]; 4] = [[1, 2, 3], [4, 5, 7], [5, 6, 8], [5, 7, 8]];

    let mut ids: Vec<NodeId> = (1..=8).collect();
    if seed != 0 {
        ids.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let map = |v: NodeId| ids[v as usize - 1];
    let x = SimplicialComplex::new(
        1..=8,
        EDGES.iter().map(|e| e.map(map)),
        FILLED.iter().map(|t| t.map(map)),
        false,
    )
    .expect("fixed instance is closed");
    let truth = Partition::from_raw((1..=8).map(|v| (map(v), usize::from(v > 3))));
    (x, truth)
}
