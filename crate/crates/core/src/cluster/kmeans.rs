//! Seeded k-means++ with Lloyd refinement and best-of-n restarts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const KMEANS_RESTARTS: u64 = 20;
pub const KMEANS_MAX_ITER: usize = 300;
/// Lloyd iterations stop once no centroid moves farther than this.
pub const KMEANS_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct KMeans {
    /// Cluster of each point, renumbered by first occurrence.
    pub labels: Vec<usize>,
    pub centroids: Vec<Vec<f64>>,
    /// Within-cluster sum of squared distances.
    pub inertia: f64,
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn nearest(p: &[f64], centroids: &[Vec<f64>]) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (c, centroid) in centroids.iter().enumerate() {
        let d = sq_dist(p, centroid);
        if d < best.1 {
            best = (c, d);
        }
    }
    best
}

fn plus_plus_init(points: &[Vec<f64>], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut centroids = vec![points[rng.gen_range(0..points.len())].clone()];
    let mut dist: Vec<f64> = points.iter().map(|p| sq_dist(p, &centroids[0])).collect();
    while centroids.len() < k {
        let total: f64 = dist.iter().sum();
        let pick = if total > 0.0 {
            let mut r = rng.gen::<f64>() * total;
            let mut chosen = None;
            for (i, &d) in dist.iter().enumerate() {
                if d > 0.0 {
                    chosen = Some(i);
                    if r < d {
                        break;
                    }
                    r -= d;
                }
            }
            chosen.expect("positive total has a positive entry")
        } else {
            rng.gen_range(0..points.len())
        };
        centroids.push(points[pick].clone());
        for (d, p) in dist.iter_mut().zip(points) {
            *d = d.min(sq_dist(p, &centroids[centroids.len() - 1]));
        }
    }
    centroids
}

fn lloyd(points: &[Vec<f64>], mut centroids: Vec<Vec<f64>>) -> KMeans {
    let k = centroids.len();
    let dim = points[0].len();
    let mut labels = vec![0; points.len()];
    for _ in 0..KMEANS_MAX_ITER {
        for (l, p) in labels.iter_mut().zip(points) {
            *l = nearest(p, &centroids).0;
        }
        let mut sums = vec![vec![0.0; dim]; k];
        let mut counts = vec![0usize; k];
        for (&l, p) in labels.iter().zip(points) {
            counts[l] += 1;
            for (s, x) in sums[l].iter_mut().zip(p) {
                *s += x;
            }
        }
        // An emptied cluster takes the point farthest from its centroid.
        for c in 0..k {
            if counts[c] == 0 {
                let far = (0..points.len())
                    .max_by(|&a, &b| {
                        sq_dist(&points[a], &centroids[labels[a]])
                            .total_cmp(&sq_dist(&points[b], &centroids[labels[b]]))
                            .then(b.cmp(&a))
                    })
                    .expect("nonempty");
                let old = labels[far];
                counts[old] -= 1;
                for (s, x) in sums[old].iter_mut().zip(&points[far]) {
                    *s -= x;
                }
                labels[far] = c;
                counts[c] = 1;
                sums[c] = points[far].clone();
            }
        }
        let mut shift: f64 = 0.0;
        for c in 0..k {
            let next: Vec<f64> = sums[c].iter().map(|s| s / counts[c] as f64).collect();
            shift = shift.max(sq_dist(&next, &centroids[c]).sqrt());
            centroids[c] = next;
        }
        if shift < KMEANS_TOL {
            break;
        }
    }
    for (l, p) in labels.iter_mut().zip(points) {
        *l = nearest(p, &centroids).0;
    }
    let inertia = labels
        .iter()
        .zip(points)
        .map(|(&l, p)| sq_dist(p, &centroids[l]))
        .sum();
    KMeans {
        labels,
        centroids,
        inertia,
    }
}

fn renumber(mut result: KMeans) -> KMeans {
    let mut map = vec![usize::MAX; result.centroids.len()];
    let mut next = 0;
    for l in &result.labels {
        if map[*l] == usize::MAX {
            map[*l] = next;
            next += 1;
        }
    }
    let mut centroids = vec![Vec::new(); next];
    for (old, &new) in map.iter().enumerate() {
        if new != usize::MAX {
            centroids[new] = result.centroids[old].clone();
        }
    }
    result.labels.iter_mut().for_each(|l| *l = map[*l]);
    result.centroids = centroids;
    result
}

/// Clusters `points` into `k` groups.
///
/// Restart `r` draws from the ChaCha8 stream `r` of `seed`, so the result
/// depends only on `(points, k, seed)` regardless of thread count. The
/// restart with the lowest inertia wins, ties to the lower restart index.
pub fn kmeans(points: &[Vec<f64>], k: usize, seed: u64) -> Result<KMeans> {
    if k == 0 || k > points.len() {
        return Err(Error::InvalidClusterCount { k, n: points.len() });
    }
    let mut distinct: Vec<&Vec<f64>> = points.iter().collect();
    distinct.sort_by(|a, b| {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    distinct.dedup();
    if distinct.len() < k {
        return Err(Error::DegeneratePoints {
            distinct: distinct.len(),
            k,
        });
    }

    let best = (0..KMEANS_RESTARTS)
        .into_par_iter()
        .map(|restart| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(restart);
            (restart, lloyd(points, plus_plus_init(points, k, &mut rng)))
        })
        .reduce_with(
            |a, b| match a.1.inertia.total_cmp(&b.1.inertia).then(a.0.cmp(&b.0)) {
                std::cmp::Ordering::Greater => b,
                _ => a,
            },
        )
        .expect("at least one restart")
        .1;
    Ok(renumber(best))
}
