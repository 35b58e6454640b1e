//! Undirected simplicial complexes of order at most two.
//!
//! A complex holds nodes, edges and *filled* triangles. A 3-clique of edges
//! that is not listed among the triangles is hollow: it exists in the edge
//! graph but carries no triadic interaction.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Node label as it appears in datasets (positive integer).
pub type NodeId = u32;

/// Downward-closed collection of nodes, edges and filled triangles.
///
/// All three lists are sorted and duplicate-free. Matrices built from a
/// complex index nodes by their position in [`nodes`](Self::nodes), edges by
/// their position in [`edges`](Self::edges), and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    nodes: Vec<NodeId>,
    edges: Vec<[NodeId; 2]>,
    triangles: Vec<[NodeId; 3]>,
}

fn sorted<const K: usize>(mut s: [NodeId; K]) -> Result<[NodeId; K]> {
    s.sort_unstable();
    if let Some(&bad) = s.iter().find(|&&v| v == 0) {
        return Err(Error::InvalidNodeId(bad as u64));
    }
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DegenerateSimplex(s.to_vec()));
    }
    Ok(s)
}

fn edges_of(t: [NodeId; 3]) -> [[NodeId; 2]; 3] {
    [[t[0], t[1]], [t[0], t[2]], [t[1], t[2]]]
}

fn insert_unique<T: Ord + Copy + Into<Vec<NodeId>>>(set: &mut BTreeSet<T>, s: T) -> Result<()> {
    if set.insert(s) {
        Ok(())
    } else {
        Err(Error::DuplicateSimplex(s.into()))
    }
}

impl SimplicialComplex {
    /// Validates and canonicalizes a complex.
    ///
    /// With `auto_close`, faces missing from the input (edges of listed
    /// triangles, endpoints of listed edges) are added. Without it, a missing
    /// triangle edge is a [`Error::ClosureViolation`] and a missing edge
    /// endpoint is an [`Error::UnknownNodeId`].
    pub fn new(
        nodes: impl IntoIterator<Item = NodeId>,
        edges: impl IntoIterator<Item = [NodeId; 2]>,
        triangles: impl IntoIterator<Item = [NodeId; 3]>,
        auto_close: bool,
    ) -> Result<Self> {
        let mut node_set = BTreeSet::new();
        for v in nodes {
            let [v] = sorted([v])?;
            if !node_set.insert(v) {
                return Err(Error::DuplicateSimplex(vec![v]));
            }
        }
        let mut edge_set = BTreeSet::new();
        for e in edges {
            insert_unique(&mut edge_set, sorted(e)?)?;
        }
        let mut tri_set = BTreeSet::new();
        for t in triangles {
            insert_unique(&mut tri_set, sorted(t)?)?;
        }

        for &t in &tri_set {
            for e in edges_of(t) {
                if !edge_set.contains(&e) {
                    if !auto_close {
                        return Err(Error::ClosureViolation {
                            simplex: t.to_vec(),
                            face: e.to_vec(),
                        });
                    }
                    edge_set.insert(e);
                }
            }
        }
        for e in &edge_set {
            for &v in e {
                if !node_set.contains(&v) {
                    if !auto_close {
                        return Err(Error::UnknownNodeId(v));
                    }
                    node_set.insert(v);
                }
            }
        }

        Ok(Self {
            nodes: node_set.into_iter().collect(),
            edges: edge_set.into_iter().collect(),
            triangles: tri_set.into_iter().collect(),
        })
    }

    /// Complex with every 3-clique of the edge graph filled.
    pub fn clique_complex(
        nodes: impl IntoIterator<Item = NodeId>,
        edges: impl IntoIterator<Item = [NodeId; 2]>,
    ) -> Result<Self> {
        let graph = Self::new(nodes, edges, [], true)?;
        let triangles = graph.graph_triangles();
        Ok(Self { triangles, ..graph })
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[[NodeId; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[NodeId; 3]] {
        &self.triangles
    }

    /// `(N0, N1, N2)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.nodes.len(), self.edges.len(), self.triangles.len())
    }

    /// Dense index of a node id.
    pub fn index_of(&self, id: NodeId) -> Option<usize> {
        self.nodes.binary_search(&id).ok()
    }

    pub fn is_filled(&self, t: [NodeId; 3]) -> bool {
        match sorted(t) {
            Ok(t) => self.triangles.binary_search(&t).is_ok(),
            Err(_) => false,
        }
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.edges.binary_search(&[u.min(v), u.max(v)]).is_ok()
    }

    /// Filled triangles as triples of dense node indices.
    pub fn triangle_indices(&self) -> Vec<[usize; 3]> {
        self.triangles
            .iter()
            .map(|t| t.map(|v| self.index_of(v).expect("closed complex")))
            .collect()
    }

    /// Edges as pairs of dense node indices.
    pub fn edge_indices(&self) -> Vec<[usize; 2]> {
        self.edges
            .iter()
            .map(|e| e.map(|v| self.index_of(v).expect("closed complex")))
            .collect()
    }

    /// Edge-graph neighbors of every node, as sorted dense indices.
    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for [a, b] in self.edge_indices() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Unsigned boundary matrix `B_k` for `k` in `{1, 2}`.
    ///
    /// `B_1` is `N0 x N1` and `B_2` is `N1 x N2`; entry `(i, j)` is 1 when the
    /// i-th `(k-1)`-simplex is a face of the j-th `k`-simplex.
    pub fn boundary_matrix(&self, k: usize) -> IntMatrix {
        match k {
            1 => IntMatrix::from_triplets(
                self.nodes.len(),
                self.edges.len(),
                self.edge_indices()
                    .into_iter()
                    .enumerate()
                    .flat_map(|(j, e)| e.map(|i| (i, j, 1))),
            ),
            2 => IntMatrix::from_triplets(
                self.edges.len(),
                self.triangles.len(),
                self.triangles.iter().enumerate().flat_map(|(j, &t)| {
                    edges_of(t).map(|e| {
                        let i = self.edges.binary_search(&e).expect("closed complex");
                        (i, j, 1)
                    })
                }),
            ),
            _ => panic!("boundary matrices are defined for k = 1, 2 only (got {k})"),
        }
    }

    /// Every 3-clique of the edge graph, filled or hollow, sorted.
    pub fn graph_triangles(&self) -> Vec<[NodeId; 3]> {
        let adj = self.neighbors();
        let mut out = Vec::new();
        for [a, b] in self.edge_indices() {
            // a < b because edges and node indices share the same order.
            let (na, nb) = (&adj[a], &adj[b]);
            let (mut i, mut j) = (0, 0);
            while i < na.len() && j < nb.len() {
                match na[i].cmp(&nb[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        if na[i] > b {
                            out.push([self.nodes[a], self.nodes[b], self.nodes[na[i]]]);
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Marks filled triangles as hollow. Edges and nodes are untouched.
    pub fn remove_filled(&self, removals: &[[NodeId; 3]]) -> Result<Self> {
        let mut keep: BTreeSet<[NodeId; 3]> = self.triangles.iter().copied().collect();
        for &t in removals {
            let t = sorted(t)?;
            if !keep.remove(&t) {
                return Err(Error::NotFilled(t));
            }
        }
        Ok(Self {
            triangles: keep.into_iter().collect(),
            ..self.clone()
        })
    }

    /// Fills hollow 3-cliques. Every edge of each triple must already exist.
    pub fn add_filled(&self, additions: &[[NodeId; 3]]) -> Result<Self> {
        Self::new(
            self.nodes.iter().copied(),
            self.edges.iter().copied(),
            self.triangles
                .iter()
                .copied()
                .chain(additions.iter().copied()),
            false,
        )
    }

    /// Filled triangles that contain both endpoints of `edge`.
    pub fn triangles_on_edge(&self, edge: [NodeId; 2]) -> Vec<[NodeId; 3]> {
        self.triangles
            .iter()
            .copied()
            .filter(|t| t.contains(&edge[0]) && t.contains(&edge[1]))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> SimplicialComplex {
        SimplicialComplex::new([1, 2, 3], [[1, 2], [1, 3], [2, 3]], [[1, 2, 3]], false).unwrap()
    }

    #[test]
    fn minimal_filled_triangle() {
        assert_eq!(k3().counts(), (3, 1 + 2, 1));
    }

    #[test]
    fn missing_face_is_rejected() {
        let err = SimplicialComplex::new([1, 2, 3], [[1, 2], [1, 3]], [[1, 2, 3]], false);
        assert_eq!(
            err,
            Err(Error::ClosureViolation {
                simplex: vec![1, 2, 3],
                face: vec![2, 3]
            })
        );
    }

    #[test]
    fn auto_close_adds_faces() {
        let x = SimplicialComplex::new([], [], [[3, 1, 2]], true).unwrap();
        assert_eq!(x, k3());
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(
            SimplicialComplex::new([1, 2], [[1, 2], [2, 1]], [], false),
            Err(Error::DuplicateSimplex(vec![1, 2]))
        );
        assert_eq!(
            SimplicialComplex::new([1], [[1, 2]], [], false),
            Err(Error::UnknownNodeId(2))
        );
        assert_eq!(
            SimplicialComplex::new([1, 2], [[1, 1]], [], false),
            Err(Error::DegenerateSimplex(vec![1, 1]))
        );
        assert_eq!(
            SimplicialComplex::new([0], [], [], false),
            Err(Error::InvalidNodeId(0))
        );
    }

    #[test]
    fn boundary_shapes_for_single_triangle() {
        let x = k3();
        let b1 = x.boundary_matrix(1);
        let b2 = x.boundary_matrix(2);
        assert_eq!((b1.rows(), b1.cols()), (3, 3));
        assert!(b1.col_sums().iter().all(|&s| s == 2));
        assert_eq!(b2.to_dense(), vec![vec![1], vec![1], vec![1]]);
    }

    #[test]
    fn boundary_without_triangles_is_empty() {
        let x = SimplicialComplex::new([1, 2, 3], [[1, 2], [2, 3]], [], false).unwrap();
        let b2 = x.boundary_matrix(2);
        assert_eq!((b2.rows(), b2.cols(), b2.nnz()), (2, 0, 0));
    }

    #[test]
    fn hollow_triangle_is_a_graph_triangle_only() {
        let x = SimplicialComplex::new([5, 7, 8], [[5, 7], [7, 8], [5, 8]], [], false).unwrap();
        assert_eq!(x.graph_triangles(), vec![[5, 7, 8]]);
        assert!(x.triangles().is_empty());

        let path = SimplicialComplex::new([1, 2, 3], [[1, 2], [2, 3]], [], false).unwrap();
        assert!(path.graph_triangles().is_empty());
        assert_eq!(k3().graph_triangles(), vec![[1, 2, 3]]);
    }

    #[test]
    fn remove_and_restore() {
        let x = k3();
        let hollow = x.remove_filled(&[[2, 1, 3]]).unwrap();
        assert_eq!(hollow.counts(), (3, 3, 0));
        assert_eq!(
            x.remove_filled(&[[1, 2, 4]]),
            Err(Error::NotFilled([1, 2, 4]))
        );
        assert_eq!(hollow.add_filled(&[[1, 2, 3]]).unwrap(), x);
    }

    #[test]
    fn unsigned_boundaries_do_not_compose_to_zero() {
        let x = k3();
        let b12 = x.boundary_matrix(1).matmul(&x.boundary_matrix(2)).unwrap();
        assert_eq!(b12.to_dense(), vec![vec![2], vec![2], vec![2]]);
    }
}
