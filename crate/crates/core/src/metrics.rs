//! Normalized mutual information between two partitions.

use crate::cluster::Partition;
use crate::error::{Error, Result};

/// `counts[a][b]`: nodes with predicted label `a` and true label `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContingencyTable {
    pub counts: Vec<Vec<u64>>,
    pub row_sums: Vec<u64>,
    pub col_sums: Vec<u64>,
    pub total: u64,
}

pub fn contingency(pred: &Partition, truth: &Partition) -> Result<ContingencyTable> {
    if pred.len() != truth.len() || pred.nodes().ne(truth.nodes()) {
        return Err(Error::NodeSetMismatch);
    }
    let (rows, cols) = (pred.num_clusters(), truth.num_clusters());
    let mut counts = vec![vec![0u64; cols]; rows];
    for ((_, &a), (_, &b)) in pred.labels().iter().zip(truth.labels()) {
        counts[a][b] += 1;
    }
    let row_sums = counts.iter().map(|r| r.iter().sum()).collect();
    let col_sums = (0..cols)
        .map(|b| counts.iter().map(|r| r[b]).sum())
        .collect();
    Ok(ContingencyTable {
        counts,
        row_sums,
        col_sums,
        total: pred.len() as u64,
    })
}

/// Sums in ascending order so the result does not depend on label order.
fn ordered_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(f64::total_cmp);
    terms.into_iter().sum()
}

fn entropy(marginal: &[u64], n: f64) -> f64 {
    ordered_sum(
        marginal
            .iter()
            .filter(|&&c| c > 0)
            .map(|&c| {
                let p = c as f64 / n;
                -p * p.ln()
            })
            .collect(),
    )
}

/// `2 I(P; T) / (H(P) + H(T))` with natural logarithms; 0 when both
/// entropies vanish.
pub fn nmi(pred: &Partition, truth: &Partition) -> Result<f64> {
    let table = contingency(pred, truth)?;
    let n = table.total as f64;
    let h_pred = entropy(&table.row_sums, n);
    let h_truth = entropy(&table.col_sums, n);
    if h_pred + h_truth == 0.0 {
        return Ok(0.0);
    }
    let mut terms = Vec::new();
    for (a, row) in table.counts.iter().enumerate() {
        for (b, &c) in row.iter().enumerate() {
            if c > 0 {
                let c = c as f64;
                let outer = table.row_sums[a] as f64 * table.col_sums[b] as f64;
                terms.push(c / n * (c * n / outer).ln());
            }
        }
    }
    let mi = ordered_sum(terms);
    Ok((2.0 * mi / (h_pred + h_truth)).clamp(0.0, 1.0))
}
