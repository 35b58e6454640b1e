//! Dense symmetric eigensolver.
//!
//! Householder reduction to tridiagonal form followed by the implicit-shift
//! QL iteration, after the EISPACK routines `tred2` and `tql2`. The full
//! spectrum is computed; callers take the smallest pairs. The algorithm has
//! no randomized component, so identical input gives bit-identical output.

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;

/// QL sweeps allowed per eigenvalue.
pub const MAX_SWEEPS: usize = 50;

/// Second eigenvalues at or below this are treated as zero.
pub const CONNECTIVITY_THRESHOLD: f64 = 1e-10;

/// Entries with magnitude at or below this are skipped by the sign convention.
const SIGN_EPS: f64 = 1e-12;

/// Eigenvalues in ascending order with aligned orthonormal eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPairs {
    pub values: Vec<f64>,
    /// `vectors[i]` belongs to `values[i]`.
    pub vectors: Vec<Vec<f64>>,
}

impl EigenPairs {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Full eigendecomposition of a symmetric matrix.
pub fn symmetric_eigen(m: &SymMatrix) -> Result<EigenPairs> {
    let n = m.order();
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut v: Vec<f64> = (0..n).flat_map(|i| m.row(i).to_vec()).collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(n, &mut v, &mut d, &mut e);
    ql_implicit(n, &mut v, &mut d, &mut e)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]).then(a.cmp(&b)));
    let values = order.iter().map(|&j| d[j]).collect();
    let vectors = order
        .iter()
        .map(|&j| {
            let mut col: Vec<f64> = (0..n).map(|i| v[i * n + j]).collect();
            fix_sign(&mut col);
            col
        })
        .collect();
    Ok(EigenPairs { values, vectors })
}

/// The `k` smallest eigenpairs.
pub fn smallest_eigenpairs(m: &SymMatrix, k: usize) -> Result<EigenPairs> {
    if k == 0 || k > m.order() {
        return Err(Error::DimensionMismatch {
            expected: m.order(),
            got: k,
        });
    }
    let mut all = symmetric_eigen(m)?;
    all.values.truncate(k);
    all.vectors.truncate(k);
    Ok(all)
}

/// Second eigenpair of a Laplacian-like matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Fiedler {
    pub value: f64,
    /// Unit vector whose first entry above `1e-12` in magnitude is positive.
    pub vector: Vec<f64>,
}

/// Eigenvector of the second smallest eigenvalue. Fails with
/// [`Error::Disconnected`] when that eigenvalue is zero, since the
/// eigenvector is then an arbitrary mix of component indicators.
pub fn fiedler_vector(m: &SymMatrix) -> Result<Fiedler> {
    if m.order() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: m.order(),
        });
    }
    let mut pairs = smallest_eigenpairs(m, 2)?;
    let value = pairs.values[1];
    if value <= CONNECTIVITY_THRESHOLD {
        return Err(Error::Disconnected(value));
    }
    Ok(Fiedler {
        value,
        vector: pairs.vectors.swap_remove(1),
    })
}

fn fix_sign(v: &mut [f64]) {
    if let Some(first) = v.iter().find(|x| x.abs() > SIGN_EPS) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// Householder reduction of the row-major matrix in `v` to tridiagonal form.
/// On return `d` holds the diagonal, `e[1..]` the subdiagonal and `v` the
/// accumulated orthogonal transformation.
fn tridiagonalize(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64]) {
    let at = |r: usize, c: usize| r * n + c;
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
    }

    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for dk in &mut d[..i] {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for x in &mut e[..i] {
                *x = 0.0;
            }

            for j in 0..i {
                f = d[j];
                v[at(j, i)] = f;
                g = e[j] + v[at(j, j)] * f;
                for k in (j + 1)..i {
                    g += v[at(k, j)] * d[k];
                    e[k] += v[at(k, j)] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[at(k, j)] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    for i in 0..n - 1 {
        v[at(n - 1, i)] = v[at(i, i)];
        v[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[at(k, i + 1)] / h;
            }
            for j in 0..=i {
                let g: f64 = (0..=i).map(|k| v[at(k, i + 1)] * v[at(k, j)]).sum();
                for k in 0..=i {
                    v[at(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[at(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
        v[at(n - 1, j)] = 0.0;
    }
    v[at(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit-shift QL iteration on the tridiagonal form, accumulating
/// rotations into `v`. Eigenvalues are left unsorted in `d`.
fn ql_implicit(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let at = |r: usize, c: usize| r * n + c;
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }

        if m > l {
            let mut sweeps = 0;
            loop {
                sweeps += 1;
                if sweeps > MAX_SWEEPS {
                    return Err(Error::NoConvergence(l));
                }

                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for x in &mut d[l + 2..n] {
                    *x -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);

                    for k in 0..n {
                        h = v[at(k, i + 1)];
                        v[at(k, i + 1)] = s * v[at(k, i)] + c * h;
                        v[at(k, i)] = c * v[at(k, i)] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    if d.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}
