//! Triangle cuts, volumes and conductance.
//!
//! For a node set `S`, `z_i(S)` is the number of filled triangles with exactly
//! `i` vertices in `S`. The triangle cut is `z1 + z2`, the volume is
//! `3 z3 + 2 z2 + z1`, and the conductance is the cut divided by the smaller
//! of the two side volumes. Conductances are kept as exact integer ratios.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::complex::{NodeId, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, SymMatrix};

/// Largest complex [`brute_force_min`] will enumerate.
pub const BRUTE_FORCE_LIMIT: usize = 22;

/// Sorted set of node ids belonging to one complex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeSet(Vec<NodeId>);

impl NodeSet {
    pub fn new(x: &SimplicialComplex, ids: impl IntoIterator<Item = NodeId>) -> Result<Self> {
        let mut ids: Vec<NodeId> = ids.into_iter().collect();
        ids.sort_unstable();
        ids.dedup();
        if let Some(&bad) = ids.iter().find(|&&v| x.index_of(v).is_none()) {
            return Err(Error::UnknownNodeId(bad));
        }
        Ok(Self(ids))
    }

    pub fn from_mask(x: &SimplicialComplex, mask: &[bool]) -> Self {
        Self(
            x.nodes()
                .iter()
                .zip(mask)
                .filter(|(_, &inside)| inside)
                .map(|(&v, _)| v)
                .collect(),
        )
    }

    pub fn ids(&self) -> &[NodeId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: NodeId) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    pub fn complement(&self, x: &SimplicialComplex) -> Self {
        Self(
            x.nodes()
                .iter()
                .copied()
                .filter(|&v| !self.contains(v))
                .collect(),
        )
    }

    /// Membership flags indexed like `x.nodes()`.
    pub fn mask(&self, x: &SimplicialComplex) -> Vec<bool> {
        x.nodes().iter().map(|&v| self.contains(v)).collect()
    }

    /// Indicator vector `e_S`.
    pub fn indicator(&self, x: &SimplicialComplex) -> Vec<f64> {
        self.mask(x)
            .into_iter()
            .map(|b| if b { 1.0 } else { 0.0 })
            .collect()
    }
}

/// Nonnegative rational `num / den` with `den > 0`, ordered exactly.
#[derive(Clone, Copy, Debug)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        Self { num, den }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ZCounts {
    pub z1: u64,
    pub z2: u64,
    pub z3: u64,
}

impl ZCounts {
    pub fn cut(&self) -> u64 {
        self.z1 + self.z2
    }

    pub fn volume(&self) -> u64 {
        3 * self.z3 + 2 * self.z2 + self.z1
    }

    /// Records a triangle whose in-set vertex count moved from `from` to `to`.
    pub(crate) fn shift(&mut self, from: u8, to: u8) {
        for (count, delta) in [(from, -1i64), (to, 1)] {
            let slot = match count {
                1 => &mut self.z1,
                2 => &mut self.z2,
                3 => &mut self.z3,
                _ => continue,
            };
            *slot = (*slot as i64 + delta) as u64;
        }
    }
}

/// Cut and side volumes of one partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConductanceReport {
    pub cut: u64,
    pub vol_s: u64,
    pub vol_sbar: u64,
}

impl ConductanceReport {
    /// `None` when either side has zero volume.
    pub fn feasible(cut: u64, vol_s: u64, vol_sbar: u64) -> Option<Self> {
        (vol_s > 0 && vol_sbar > 0).then_some(Self {
            cut,
            vol_s,
            vol_sbar,
        })
    }

    pub fn min_volume(&self) -> u64 {
        self.vol_s.min(self.vol_sbar)
    }

    pub fn phi(&self) -> Ratio {
        Ratio::new(self.cut, self.min_volume())
    }
}

pub fn z_counts(x: &SimplicialComplex, s: &NodeSet) -> ZCounts {
    let mut z = ZCounts::default();
    for t in x.triangles() {
        let inside = t.iter().filter(|&&v| s.contains(v)).count() as u8;
        z.shift(0, inside);
    }
    z
}

pub fn cut_02(x: &SimplicialComplex, s: &NodeSet) -> u64 {
    z_counts(x, s).cut()
}

pub fn vol_02(x: &SimplicialComplex, s: &NodeSet) -> u64 {
    z_counts(x, s).volume()
}

/// Triangle conductance of `S`; [`Error::ZeroVolume`] when one side touches
/// no filled triangle.
pub fn phi_02(x: &SimplicialComplex, s: &NodeSet) -> Result<ConductanceReport> {
    let z = z_counts(x, s);
    let vol_s = z.volume();
    let vol_sbar = 3 * x.triangles().len() as u64 - vol_s;
    ConductanceReport::feasible(z.cut(), vol_s, vol_sbar).ok_or(Error::ZeroVolume)
}

/// Weighted edge cut and volumes of a symmetric adjacency matrix, the
/// conductance minimized by the motif and graph baselines.
pub fn edge_conductance(adjacency: &IntMatrix, mask: &[bool]) -> Option<ConductanceReport> {
    let (mut cut, mut vol_s, mut vol_sbar) = (0, 0, 0);
    for (r, c, w) in adjacency.iter() {
        if mask[r] {
            vol_s += w;
            if !mask[c] {
                cut += w;
            }
        } else {
            vol_sbar += w;
        }
    }
    ConductanceReport::feasible(cut, vol_s, vol_sbar)
}

/// `½ e_Sᵀ L e_S` for a Laplacian indexed like `x.nodes()`.
pub fn quadratic_cut(x: &SimplicialComplex, laplacian: &SymMatrix, s: &NodeSet) -> f64 {
    0.5 * laplacian.quadratic_form(&s.indicator(x))
}

/// `½ e_Sᵀ D e_S`.
pub fn quadratic_vol(x: &SimplicialComplex, degree: &[u64], s: &NodeSet) -> f64 {
    0.5 * s
        .indicator(x)
        .iter()
        .zip(degree)
        .map(|(e, &d)| e * e * d as f64)
        .sum::<f64>()
}

/// Local 3x3 form `c(σ)ᵀ M c(σ)` with `M = 3I - 11ᵀ` (diagonal 2, off-diagonal
/// -1) and `c(σ)` the membership of σ's vertices in `S`.
///
/// Evaluates to 0 when σ lies on one side and 2 when it is cut, so the sum
/// over all filled triangles is twice the triangle cut.
pub fn local_form(sigma: [NodeId; 3], s: &NodeSet) -> i64 {
    const M: [[i64; 3]; 3] = [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]];
    let c = sigma.map(|v| s.contains(v) as i64);
    (0..3)
        .map(|i| (0..3).map(|j| c[i] * M[i][j] * c[j]).sum::<i64>())
        .sum()
}

/// Optimal conductance found by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCut {
    /// The side containing the smallest node id.
    pub set: NodeSet,
    pub report: ConductanceReport,
}

impl MinCut {
    pub fn phi(&self) -> Ratio {
        self.report.phi()
    }
}

/// Minimizes triangle conductance over every proper subset (up to
/// complementation). Infeasible subsets are skipped; ties go to the
/// lexicographically smallest node set.
pub fn brute_force_min(x: &SimplicialComplex) -> Result<MinCut> {
    let n = x.nodes().len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge(n, BRUTE_FORCE_LIMIT));
    }
    if n < 2 {
        return Err(Error::NoFeasibleCut);
    }
    let tri_masks: Vec<u32> = x
        .triangle_indices()
        .iter()
        .map(|t| t.iter().fold(0u32, |m, &i| m | (1 << i)))
        .collect();
    let total = 3 * tri_masks.len() as u64;

    // Node 0 is always inside; masks over the remaining n-1 nodes, excluding
    // the full set.
    let count: u64 = (1u64 << (n - 1)) - 1;
    let evaluate = |m: u64| -> Option<(ConductanceReport, u32)> {
        let set = ((m as u32) << 1) | 1;
        let (mut cut, mut vol) = (0u64, 0u64);
        for &t in &tri_masks {
            let inside = (set & t).count_ones() as u64;
            vol += inside;
            cut += (inside == 1 || inside == 2) as u64;
        }
        ConductanceReport::feasible(cut, vol, total - vol).map(|r| (r, set))
    };
    let better = |a: (ConductanceReport, u32), b: (ConductanceReport, u32)| match a
        .0
        .phi()
        .cmp(&b.0.phi())
        .then_with(|| lex_cmp(a.1, b.1))
    {
        Ordering::Greater => b,
        _ => a,
    };

    let best = (0..count)
        .into_par_iter()
        .filter_map(evaluate)
        .reduce_with(better)
        .ok_or(Error::NoFeasibleCut)?;
    let mask: Vec<bool> = (0..n).map(|i| best.1 & (1 << i) != 0).collect();
    Ok(MinCut {
        set: NodeSet::from_mask(x, &mask),
        report: best.0,
    })
}

/// Lexicographic order of two bitmask sets viewed as ascending index lists.
fn lex_cmp(a: u32, b: u32) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let d = diff.trailing_zeros();
    let (has, other) = if a & (1 << d) != 0 { (a, b) } else { (b, a) };
    // `has` lists d where `other` lists something larger, or nothing at all.
    let ord = if other >> d != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    };
    if has == a {
        ord
    } else {
        ord.reverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(tris: &[[NodeId; 3]], extra_edges: &[[NodeId; 2]]) -> SimplicialComplex {
        SimplicialComplex::new([], extra_edges.iter().copied(), tris.iter().copied(), true).unwrap()
    }

    fn set(x: &SimplicialComplex, ids: &[NodeId]) -> NodeSet {
        NodeSet::new(x, ids.iter().copied()).unwrap()
    }

    fn k3() -> SimplicialComplex {
        complex(&[[1, 2, 3]], &[])
    }

    fn bridged() -> SimplicialComplex {
        complex(&[[1, 2, 3], [4, 5, 6]], &[[3, 4]])
    }

    #[test]
    fn z_counts_by_enumeration() {
        let x = k3();
        assert_eq!(
            z_counts(&x, &set(&x, &[1])),
            ZCounts {
                z1: 1,
                z2: 0,
                z3: 0
            }
        );
        assert_eq!(
            z_counts(&x, &set(&x, &[1, 2])),
            ZCounts {
                z1: 0,
                z2: 1,
                z3: 0
            }
        );
        let y = complex(&[[1, 2, 3], [3, 4, 5]], &[]);
        assert_eq!(
            z_counts(&y, &set(&y, &[1, 2, 3])),
            ZCounts {
                z1: 1,
                z2: 0,
                z3: 1
            }
        );
        assert_eq!(cut_02(&y, &set(&y, &[1, 2, 3])), 1);
    }

    #[test]
    fn cut_and_volume() {
        let x = k3();
        assert_eq!(cut_02(&x, &set(&x, &[1])), 1);
        assert_eq!(vol_02(&x, &set(&x, &[1])), 1);
        assert_eq!(vol_02(&x, &set(&x, &[1, 2, 3])), 3);
        let b = bridged();
        assert_eq!(cut_02(&b, &set(&b, &[1, 2, 3])), 0);
        assert_eq!(vol_02(&b, &set(&b, &[1, 2, 3, 4, 5, 6])), 6);
    }

    #[test]
    fn conductance_examples() {
        let x = k3();
        let r = phi_02(&x, &set(&x, &[1])).unwrap();
        assert_eq!((r.cut, r.vol_s, r.vol_sbar), (1, 1, 2));
        assert_eq!(r.phi(), Ratio::new(1, 1));

        let b = bridged();
        let r = phi_02(&b, &set(&b, &[1, 2, 3])).unwrap();
        assert_eq!((r.cut, r.vol_s, r.vol_sbar), (0, 3, 3));

        let y = complex(&[[1, 2, 3]], &[[3, 4]]);
        assert_eq!(phi_02(&y, &set(&y, &[4])), Err(Error::ZeroVolume));
        assert_eq!(phi_02(&x, &set(&x, &[1, 2, 3])), Err(Error::ZeroVolume));
    }

    #[test]
    fn quadratic_forms_on_k3() {
        use crate::operators::{Method, OperatorBundle};
        let x = k3();
        let b = OperatorBundle::for_complex(&x, Method::Simplicial).unwrap();
        assert_eq!(quadratic_cut(&x, &b.laplacian, &set(&x, &[1])), 1.0);
        assert_eq!(quadratic_cut(&x, &b.laplacian, &set(&x, &[1, 2, 3])), 0.0);
        assert_eq!(quadratic_cut(&x, &b.laplacian, &set(&x, &[])), 0.0);
        assert_eq!(quadratic_vol(&x, &b.degree, &set(&x, &[1, 2, 3])), 3.0);
        assert_eq!(quadratic_vol(&x, &b.degree, &set(&x, &[1])), 1.0);
        assert_eq!(quadratic_vol(&x, &b.degree, &set(&x, &[])), 0.0);
    }

    #[test]
    fn local_form_values() {
        let x = k3();
        assert_eq!(local_form([1, 2, 3], &set(&x, &[1, 2, 3])), 0);
        assert_eq!(local_form([1, 2, 3], &set(&x, &[1, 2])), 2);
        assert_eq!(local_form([1, 2, 3], &set(&x, &[3])), 2);
        assert_eq!(local_form([1, 2, 3], &set(&x, &[])), 0);
    }

    #[test]
    fn brute_force_examples() {
        let b = bridged();
        let best = brute_force_min(&b).unwrap();
        assert_eq!(best.phi(), Ratio::new(0, 1));
        assert_eq!(best.set.ids(), &[1, 2, 3]);

        let best = brute_force_min(&k3()).unwrap();
        assert_eq!(best.phi(), Ratio::new(1, 1));
        assert_eq!(best.set.ids(), &[1]);

        let big = SimplicialComplex::new(1..=30, [], [], false).unwrap();
        assert_eq!(brute_force_min(&big), Err(Error::TooLarge(30, 22)));
        let flat = SimplicialComplex::new(1..=4, [[1, 2]], [], false).unwrap();
        assert_eq!(brute_force_min(&flat), Err(Error::NoFeasibleCut));
    }

    #[test]
    fn lexicographic_mask_order() {
        let list = |m: u32| (0..32).filter(|i| m & (1 << i) != 0).collect::<Vec<_>>();
        for a in 0u32..64 {
            for b in 0u32..64 {
                assert_eq!(lex_cmp(a, b), list(a).cmp(&list(b)), "{a:b} vs {b:b}");
            }
        }
    }

    #[test]
    fn ratio_ordering_is_exact() {
        assert!(Ratio::new(1, 3) < Ratio::new(1, 2));
        assert_eq!(Ratio::new(2, 4), Ratio::new(1, 2));
        assert_eq!(Ratio::new(0, 5), Ratio::new(0, 1));
    }
}
