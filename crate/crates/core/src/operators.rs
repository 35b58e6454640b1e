//! Similarity operators and Laplacians for the three clustering methods.
//!
//! * simplicial: node pairs weighted by the number of shared filled triangles
//! * motif: node pairs weighted by the number of shared 3-cliques, filled or not
//! * graph: the plain 0/1 edge adjacency

use std::fmt;
use std::str::FromStr;

use crate::complex::{NodeId, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, SymMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Simplicial,
    Motif,
    Graph,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Simplicial, Method::Motif, Method::Graph];

    pub fn name(self) -> &'static str {
        match self {
            Method::Simplicial => "simplicial",
            Method::Motif => "motif",
            Method::Graph => "graph",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}` (expected simplicial, motif or graph)"))
    }
}

fn triangle_adjacency(n: usize, triangles: impl Iterator<Item = [usize; 3]>) -> IntMatrix {
    IntMatrix::from_triplets(
        n,
        n,
        triangles.flat_map(|[a, b, c]| {
            [
                (a, b, 1),
                (b, a, 1),
                (a, c, 1),
                (c, a, 1),
                (b, c, 1),
                (c, b, 1),
            ]
        }),
    )
}

/// Counts, for every node pair, the filled triangles containing both nodes.
pub fn simplicial_adjacency_direct(x: &SimplicialComplex) -> IntMatrix {
    triangle_adjacency(x.nodes().len(), x.triangle_indices().into_iter())
}

/// The same matrix computed as the off-diagonal of `B12 B12ᵀ / 4` with
/// `B12 = B1 B2`.
///
/// Each entry of `B12` is 2 when the node lies in the triangle (two of the
/// triangle's edges meet at it), so products of two incident entries are 4.
pub fn simplicial_adjacency_boundary(x: &SimplicialComplex) -> Result<IntMatrix> {
    let b12 = x.boundary_matrix(1).matmul(&x.boundary_matrix(2))?;
    let gram = b12.matmul(&b12.transpose())?;
    let mut off_diagonal = Vec::with_capacity(gram.nnz());
    for (row, col, value) in gram.iter() {
        if row == col {
            continue;
        }
        if value % 4 != 0 {
            return Err(Error::NonIntegerEntry { row, col, value });
        }
        off_diagonal.push((row, col, value / 4));
    }
    Ok(IntMatrix::from_triplets(
        gram.rows(),
        gram.cols(),
        off_diagonal,
    ))
}

/// Triangle-motif adjacency: shared 3-cliques of the edge graph, ignoring
/// whether they are filled.
pub fn motif_adjacency(x: &SimplicialComplex) -> IntMatrix {
    let cliques = x.graph_triangles();
    triangle_adjacency(
        x.nodes().len(),
        cliques
            .into_iter()
            .map(|t| t.map(|v| x.index_of(v).expect("closed complex"))),
    )
}

pub fn graph_adjacency(x: &SimplicialComplex) -> IntMatrix {
    let n = x.nodes().len();
    IntMatrix::from_triplets(
        n,
        n,
        x.edge_indices()
            .into_iter()
            .flat_map(|[a, b]| [(a, b, 1), (b, a, 1)]),
    )
}

pub fn adjacency(x: &SimplicialComplex, method: Method) -> IntMatrix {
    match method {
        Method::Simplicial => simplicial_adjacency_direct(x),
        Method::Motif => motif_adjacency(x),
        Method::Graph => graph_adjacency(x),
    }
}

/// Adjacency, degrees and Laplacians of one method on one complex.
#[derive(Clone, Debug)]
pub struct OperatorBundle {
    pub method: Method,
    pub adjacency: IntMatrix,
    pub degree: Vec<u64>,
    /// `diag(degree) - adjacency` over all nodes.
    pub laplacian: SymMatrix,
    /// Dense indices of nodes with nonzero degree, ascending.
    pub active: Vec<usize>,
    /// `D^{-1/2} L D^{-1/2}` restricted to [`active`](Self::active).
    pub normalized_laplacian: SymMatrix,
}

impl OperatorBundle {
    /// Derives degrees and Laplacians from a symmetric, zero-diagonal,
    /// nonnegative adjacency matrix.
    pub fn new(adjacency: IntMatrix, method: Method) -> Result<Self> {
        if let Some((row, col, _)) = adjacency
            .iter()
            .find(|&(r, c, v)| c >= adjacency.rows() || adjacency.get(c, r) != v)
        {
            return Err(Error::NotSymmetric { row, col });
        }
        debug_assert!((0..adjacency.rows()).all(|i| adjacency.get(i, i) == 0));
        let n = adjacency.rows();
        let degree = adjacency.row_sums();
        let active: Vec<usize> = (0..n).filter(|&i| degree[i] > 0).collect();
        if active.is_empty() {
            return Err(Error::EmptyActiveSet(method.name()));
        }

        let mut laplacian = SymMatrix::zeros(n);
        for (i, &d) in degree.iter().enumerate() {
            laplacian.set(i, i, d as f64);
        }
        for (r, c, v) in adjacency.iter() {
            if r < c {
                laplacian.set(r, c, -(v as f64));
            }
        }

        let inv_sqrt: Vec<f64> = active
            .iter()
            .map(|&i| 1.0 / (degree[i] as f64).sqrt())
            .collect();
        let normalized_laplacian = SymMatrix::from_fn(active.len(), |a, b| {
            if a == b {
                1.0
            } else {
                -(adjacency.get(active[a], active[b]) as f64) * inv_sqrt[a] * inv_sqrt[b]
            }
        });

        Ok(Self {
            method,
            adjacency,
            degree,
            laplacian,
            active,
            normalized_laplacian,
        })
    }

    pub fn for_complex(x: &SimplicialComplex, method: Method) -> Result<Self> {
        Self::new(adjacency(x, method), method)
    }

    /// Dense indices of zero-degree nodes.
    pub fn excluded(&self) -> Vec<usize> {
        (0..self.degree.len())
            .filter(|&i| self.degree[i] == 0)
            .collect()
    }

    pub fn excluded_ids(&self, x: &SimplicialComplex) -> Vec<NodeId> {
        self.excluded().into_iter().map(|i| x.nodes()[i]).collect()
    }

    /// Connected components of the active similarity graph, each a sorted
    /// list of dense node indices, largest first (ties by smallest index).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.degree.len();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for &start in &self.active {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for (w, _) in self.adjacency.row(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        comps
    }

    /// Position of each dense node index inside [`active`](Self::active).
    pub fn active_position(&self) -> Vec<Option<usize>> {
        let mut pos = vec![None; self.degree.len()];
        for (p, &i) in self.active.iter().enumerate() {
            pos[i] = Some(p);
        }
        pos
    }
}
