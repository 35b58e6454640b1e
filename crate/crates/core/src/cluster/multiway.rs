use super::{kmeans, post_assign, Partition};
use crate::complex::{NodeId, SimplicialComplex};
use crate::eig;
use crate::error::{Error, Result};
use crate::operators::{Method, OperatorBundle};

/// Variations on the spectral embedding. Both default to off, which embeds
/// each active node as its row of the `k` smallest eigenvectors of the
/// normalized Laplacian.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmbedOptions {
    /// Scale each row to unit length.
    pub row_normalize: bool,
    /// Multiply each row by `D^{-1/2}` (random-walk eigenvectors).
    pub degree_scale: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Embedding {
    /// One point per active node, in the order of `bundle.active`.
    pub points: Vec<Vec<f64>>,
    /// The `k` smallest eigenvalues.
    pub eigenvalues: Vec<f64>,
}

pub fn spectral_embed(bundle: &OperatorBundle, k: usize, opts: EmbedOptions) -> Result<Embedding> {
    let n = bundle.active.len();
    if k == 0 || k > n {
        return Err(Error::InvalidClusterCount { k, n });
    }
    let pairs = eig::smallest_eigenpairs(&bundle.normalized_laplacian, k)?;
    let points = bundle
        .active
        .iter()
        .enumerate()
        .map(|(row, &node)| {
            let mut p: Vec<f64> = pairs.vectors.iter().map(|v| v[row]).collect();
            if opts.degree_scale {
                let s = (bundle.degree[node] as f64).sqrt();
                p.iter_mut().for_each(|x| *x /= s);
            }
            if opts.row_normalize {
                let norm = p.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm > 0.0 {
                    p.iter_mut().for_each(|x| *x /= norm);
                }
            }
            p
        })
        .collect();
    Ok(Embedding {
        points,
        eigenvalues: pairs.values,
    })
}

#[derive(Clone, Debug)]
pub struct MultiwayResult {
    pub partition: Partition,
    /// The `k` smallest eigenvalues of the normalized Laplacian (empty for
    /// `k = 1`).
    pub eigenvalues: Vec<f64>,
    pub excluded: Vec<NodeId>,
}

/// k-way clustering: spectral embedding of the active nodes, seeded
/// k-means on the embedding, then [`post_assign`] for zero-degree nodes.
pub fn multiway_cluster(
    x: &SimplicialComplex,
    method: Method,
    k: usize,
    seed: u64,
    opts: EmbedOptions,
) -> Result<MultiwayResult> {
    if k == 1 {
        let partition = Partition::from_raw(x.nodes().iter().map(|&v| (v, 0))).with_method(method);
        return Ok(MultiwayResult {
            partition,
            eigenvalues: Vec::new(),
            excluded: Vec::new(),
        });
    }
    let bundle = OperatorBundle::for_complex(x, method)?;
    let embedding = spectral_embed(&bundle, k, opts)?;
    let km = kmeans(&embedding.points, k, seed)?;

    let mut partial = vec![None; x.nodes().len()];
    for (&node, &label) in bundle.active.iter().zip(&km.labels) {
        partial[node] = Some(label);
    }
    Ok(MultiwayResult {
        partition: post_assign(x, &partial).with_method(method),
        eigenvalues: embedding.eigenvalues,
        excluded: bundle.excluded_ids(x),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_embedding_leading_coordinate_is_constant() {
        let x = SimplicialComplex::new([], [], [[1, 2, 3]], true).unwrap();
        let b = OperatorBundle::for_complex(&x, Method::Simplicial).unwrap();
        let e = spectral_embed(&b, 2, EmbedOptions::default()).unwrap();
        assert_eq!(e.points.len(), 3);
        let c = 1.0 / 3f64.sqrt();
        for p in &e.points {
            assert!((p[0] - c).abs() < 1e-12);
        }
        assert!(matches!(
            spectral_embed(&b, 4, EmbedOptions::default()),
            Err(Error::InvalidClusterCount { k: 4, n: 3 })
        ));
    }

    #[test]
    fn single_cluster_is_trivial() {
        let x = SimplicialComplex::new([7], [[1, 2]], [], true).unwrap();
        let r = multiway_cluster(&x, Method::Simplicial, 1, 0, EmbedOptions::default()).unwrap();
        assert_eq!(r.partition.cluster_sizes(), vec![3]);
    }

    #[test]
    fn row_normalized_points_are_unit() {
        let x = SimplicialComplex::new([], [], [[1, 2, 3], [3, 4, 5], [1, 3, 5]], true).unwrap();
        let b = OperatorBundle::for_complex(&x, Method::Simplicial).unwrap();
        let opts = EmbedOptions {
            row_normalize: true,
            degree_scale: true,
        };
        for p in spectral_embed(&b, 3, opts).unwrap().points {
            let norm: f64 = p.iter().map(|v| v * v).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }
}
