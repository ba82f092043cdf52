//! Dense symmetric numerical kernel: cyclic Jacobi eigendecomposition,
//! one-sided Jacobi singular values, numeric rank, affine dimension.

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Default relative tolerance for rank decisions, applied to the largest
/// singular value.
pub const RANK_TOL: f64 = 1e-9;

/// Absolute asymmetry allowed when constructing a [`SymmetricMatrix`],
/// scaled by max(1, max |a_ij|).
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Dense real symmetric matrix. Construction symmetrizes the input and
/// rejects matrices whose asymmetry exceeds [`SYMMETRY_TOL`].
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    inner: Matrix,
}

impl SymmetricMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !m.is_finite() {
            return Err(Error::NonFiniteEntry);
        }
        let dev = m.max_asymmetry();
        if dev > SYMMETRY_TOL * m.max_abs().max(1.0) {
            return Err(Error::NotSymmetric { max_asymmetry: dev });
        }
        let n = m.rows();
        let mut sym = m;
        for i in 0..n {
            for j in (i + 1)..n {
                let avg = 0.5 * (sym[(i, j)] + sym[(j, i)]);
                sym[(i, j)] = avg;
                sym[(j, i)] = avg;
            }
        }
        Ok(SymmetricMatrix { inner: sym })
    }

    pub fn dim(&self) -> usize {
        self.inner.rows()
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.inner
    }

    pub fn quadratic_form(&self, u: &[f64]) -> f64 {
        crate::matrix::dot(&self.inner.matvec(u), u)
    }
}

impl std::ops::Index<(usize, usize)> for SymmetricMatrix {
    type Output = f64;
    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.inner[idx]
    }
}

/// Eigendecomposition of a symmetric matrix: ascending eigenvalues and the
/// matching orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Matrix,
}

impl EigenDecomposition {
    /// k-th smallest eigenvalue, 1-based.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        self.eigenvalues[k - 1]
    }

    /// Eigenvector column for the k-th smallest eigenvalue, 1-based.
    pub fn eigenvector(&self, k: usize) -> Vec<f64> {
        self.eigenvectors.column(k - 1)
    }
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigendecomposition. Rotations follow the classic
/// Numerical Recipes scheme: pivots are zeroed exactly, small elements are
/// flushed to zero once the diagonal dominates, and the sweep loop exits
/// when the off-diagonal sum underflows to zero.
pub fn sym_eigen(m: &SymmetricMatrix) -> Result<EigenDecomposition> {
    let n = m.dim();
    let mut a = m.as_matrix().clone();
    let mut v = Matrix::identity(n);
    let mut d: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    if n <= 1 {
        return Ok(EigenDecomposition {
            eigenvalues: d,
            eigenvectors: v,
        });
    }

    let mut converged = false;
    for sweep in 0..JACOBI_MAX_SWEEPS {
        let mut sm = 0.0;
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                sm += a[(p, q)].abs();
            }
        }
        if sm == 0.0 {
            converged = true;
            break;
        }
        let tresh = if sweep < 3 {
            0.2 * sm / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let g = 100.0 * a[(p, q)].abs();
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[(p, q)] = 0.0;
                } else if a[(p, q)].abs() > tresh {
                    let mut h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        a[(p, q)] / h
                    } else {
                        let theta = 0.5 * h / a[(p, q)];
                        let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            t = -t;
                        }
                        t
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    h = t * a[(p, q)];
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[(p, q)] = 0.0;
                    let rot = |a: &mut Matrix, i: usize, j: usize, k: usize, l: usize| {
                        let g = a[(i, j)];
                        let h = a[(k, l)];
                        a[(i, j)] = g - s * (h + g * tau);
                        a[(k, l)] = h + s * (g - h * tau);
                    };
                    for j in 0..p {
                        rot(&mut a, j, p, j, q);
                    }
                    for j in (p + 1)..q {
                        rot(&mut a, p, j, j, q);
                    }
                    for j in (q + 1)..n {
                        rot(&mut a, p, j, q, j);
                    }
                    for j in 0..n {
                        rot(&mut v, j, p, j, q);
                    }
                }
            }
        }
        for p in 0..n {
            b[p] += z[p];
            d[p] = b[p];
            z[p] = 0.0;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            algorithm: "Jacobi eigendecomposition",
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    // Sort ascending, permuting eigenvector columns alongside.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let eigenvectors = Matrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Eigenvalues only, ascending.
pub fn sym_eigenvalues(m: &SymmetricMatrix) -> Result<Vec<f64>> {
    Ok(sym_eigen(m)?.eigenvalues)
}

const SVD_MAX_SWEEPS: usize = 100;

/// Singular values in descending order, via one-sided Jacobi: columns of a
/// working copy are rotated pairwise until mutually orthogonal, at which
/// point the column norms are the singular values. One-sided Jacobi keeps
/// small singular values accurate relative to the largest, which is what
/// rank decisions need.
pub fn singular_values(m: &Matrix) -> Result<Vec<f64>> {
    if !m.is_finite() {
        return Err(Error::NonFiniteEntry);
    }
    // Work on the orientation with fewer columns.
    let mut a = if m.rows() >= m.cols() {
        m.clone()
    } else {
        m.transpose()
    };
    let (rows, cols) = (a.rows(), a.cols());
    if rows == 0 || cols == 0 {
        return Ok(Vec::new());
    }

    // Columns whose norm has collapsed to round-off (relative to the
    // Frobenius norm) carry no rank information; excluding them from the
    // rotation set keeps exactly rank-deficient inputs from cycling.
    let frob2: f64 = a.data().iter().map(|x| x * x).sum();
    let negligible = frob2 * 1e-30;

    let mut converged = false;
    'sweeps: for _ in 0..SVD_MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..cols.saturating_sub(1) {
            for j in (i + 1)..cols {
                let mut alpha = 0.0;
                let mut beta = 0.0;
                let mut gamma = 0.0;
                for k in 0..rows {
                    let x = a[(k, i)];
                    let y = a[(k, j)];
                    alpha += x * x;
                    beta += y * y;
                    gamma += x * y;
                }
                if alpha <= negligible || beta <= negligible {
                    continue;
                }
                if gamma == 0.0 || gamma * gamma <= 1e-28 * alpha * beta {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..rows {
                    let x = a[(k, i)];
                    let y = a[(k, j)];
                    a[(k, i)] = c * x - s * y;
                    a[(k, j)] = s * x + c * y;
                }
            }
        }
        if !rotated {
            converged = true;
            break 'sweeps;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            algorithm: "one-sided Jacobi SVD",
            sweeps: SVD_MAX_SWEEPS,
        });
    }

    let mut sigmas: Vec<f64> = (0..cols)
        .map(|j| {
            let mut s = 0.0;
            for k in 0..rows {
                s += a[(k, j)] * a[(k, j)];
            }
            s.sqrt()
        })
        .collect();
    sigmas.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(sigmas)
}

/// Count of singular values exceeding `tol` times the largest one.
/// The zero matrix has rank 0.
pub fn numeric_rank(m: &Matrix, tol: f64) -> Result<usize> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidTolerance(tol));
    }
    let sigmas = singular_values(m)?;
    let largest = sigmas.first().copied().unwrap_or(0.0);
    if largest == 0.0 {
        return Ok(0);
    }
    Ok(sigmas.iter().filter(|&&s| s > tol * largest).count())
}

/// Affine dimension of a point set: rank of the centroid-subtracted
/// coordinate matrix at tolerance 1e-9.
pub fn affine_dimension(points: &[Vec<f64>]) -> Result<usize> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyPointList);
    }
    let d = points[0].len();
    if points.iter().any(|p| p.len() != d) {
        return Err(Error::DimensionMismatch(
            "points have differing dimensions".into(),
        ));
    }
    let mut centroid = vec![0.0; d];
    for p in points {
        for (c, x) in centroid.iter_mut().zip(p) {
            *c += x / n as f64;
        }
    }
    let centered = Matrix::from_fn(d, n, |k, i| points[i][k] - centroid[k]);
    numeric_rank(&centered, RANK_TOL)
}
