//! Numerical kernels and lead-term reduction of dual bases.

use std::fmt;

use nalgebra::DMatrix;
use num_traits::Zero;

use crate::dual::DualFunctional;
use crate::matrix::CoefficientMatrix;
use crate::monomial::Monomial;
use crate::order::LocalOrder;
use crate::scalar::{KernelScalar, Scalar, C64};

#[derive(Clone, PartialEq, Debug)]
pub enum KernelError {
    /// The matrix contains NaN or infinite entries.
    NonFiniteEntry,
    /// The singular value decomposition did not converge.
    SvdFailed,
    /// Lead-term reduction annihilated a basis vector: the tolerance is too
    /// coarse to separate rank here.
    RankDecision,
    /// A derivative of a dual element did not lie in the expected span.
    SpanResidual { residual: f64 },
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::NonFiniteEntry => write!(f, "matrix has non-finite entries"),
            KernelError::SvdFailed => write!(f, "singular value decomposition failed to converge"),
            KernelError::RankDecision => {
                write!(f, "rank decision failed: tolerance annihilated a basis vector")
            }
            KernelError::SpanResidual { residual } => {
                write!(f, "element lies outside the expected span (residual {:e})", residual)
            }
        }
    }
}

impl std::error::Error for KernelError {}

/// Kernel basis of a dense row-major complex matrix via SVD.
///
/// Returns the right singular vectors whose singular values satisfy
/// `sigma <= tol * sigma_max`; the vectors are orthonormal. A matrix with no
/// rows (or a zero matrix) has the full space as kernel.
pub fn svd_kernel(
    rows: usize,
    cols: usize,
    entries: &[C64],
    tol: f64,
) -> Result<Vec<Vec<C64>>, KernelError> {
    assert!(tol > 0.0, "tolerance must be positive");
    assert_eq!(entries.len(), rows * cols);
    if cols == 0 {
        return Ok(Vec::new());
    }
    if entries.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(KernelError::NonFiniteEntry);
    }
    let identity_kernel = || {
        (0..cols)
            .map(|j| {
                let mut v = vec![C64::zero(); cols];
                v[j] = C64::new(1.0, 0.0);
                v
            })
            .collect::<Vec<_>>()
    };
    if rows == 0 || entries.iter().all(|c| c.is_zero()) {
        return Ok(identity_kernel());
    }

    // Pad with zero rows so the decomposition yields all `cols` right
    // singular vectors even for wide matrices.
    let padded_rows = rows.max(cols);
    let mut m = DMatrix::<C64>::zeros(padded_rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = entries[i * cols + j];
        }
    }

    let svd = m.try_svd(false, true, f64::EPSILON, 0).ok_or(KernelError::SvdFailed)?;
    let v_t = svd.v_t.as_ref().expect("v_t requested");
    let sigma = &svd.singular_values;
    let sigma_max = sigma.iter().cloned().fold(0.0, f64::max);
    if sigma_max == 0.0 {
        return Ok(identity_kernel());
    }
    let cut = tol * sigma_max;
    let mut kernel = Vec::new();
    let mut small: Vec<usize> = (0..sigma.len()).filter(|&i| sigma[i] <= cut).collect();
    // fixed output order regardless of how the backend sorts singular values
    small.sort_by(|&a, &b| {
        sigma[a]
            .partial_cmp(&sigma[b])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    for i in small {
        // row i of V^H, conjugated, is column i of V
        let v: Vec<C64> = (0..cols).map(|j| v_t[(i, j)].conj()).collect();
        kernel.push(v);
    }
    Ok(kernel)
}

/// Kernel of a coefficient matrix with approximate entries.
///
/// Exact matrices dispatch to the exact elimination backend through
/// [`CoefficientMatrix::kernel`] instead.
pub fn numerical_kernel(
    matrix: &CoefficientMatrix<C64>,
    tol: f64,
) -> Result<Vec<Vec<C64>>, KernelError> {
    matrix.kernel(tol)
}

/// Minimum-residual solution of a dense complex system by SVD, with
/// singular values below `tol * sigma_max` treated as zero.
pub fn svd_least_squares(
    rows: usize,
    cols: usize,
    a: &[C64],
    b: &[C64],
    tol: f64,
) -> Result<Vec<C64>, KernelError> {
    assert_eq!(a.len(), rows * cols);
    assert_eq!(b.len(), rows);
    if cols == 0 {
        return Ok(Vec::new());
    }
    if a.iter().chain(b.iter()).any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(KernelError::NonFiniteEntry);
    }
    if rows == 0 {
        return Ok(vec![C64::zero(); cols]);
    }
    let m = DMatrix::<C64>::from_fn(rows, cols, |i, j| a[i * cols + j]);
    let rhs = nalgebra::DVector::<C64>::from_fn(rows, |i, _| b[i]);
    let svd = m.try_svd(true, true, f64::EPSILON, 0).ok_or(KernelError::SvdFailed)?;
    let sigma_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    if sigma_max == 0.0 {
        return Ok(vec![C64::zero(); cols]);
    }
    let x = svd
        .solve(&rhs, tol * sigma_max)
        .map_err(|_| KernelError::SvdFailed)?;
    Ok(x.iter().cloned().collect())
}

/// A basis of a subspace of dual functionals found at some degree.
#[derive(Clone, Debug)]
pub struct DualBasis<S> {
    pub elements: Vec<DualFunctional<S>>,
    /// The truncation degree the basis was computed at.
    pub degree: u32,
    /// The tolerance used for the rank decisions that produced it.
    pub tolerance: f64,
    /// Whether lead terms are pairwise distinct with unit lead coefficients.
    pub reduced: bool,
}

impl<S: Scalar> DualBasis<S> {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    /// The set of lead dual monomials.
    pub fn lead_set(&self, order: &LocalOrder) -> std::collections::BTreeSet<Monomial> {
        self.elements
            .iter()
            .filter_map(|p| p.lead_monomial(order).cloned())
            .collect()
    }
}

/// Reduces a set of dual functionals to a basis with pairwise distinct lead
/// monomials and unit lead coefficients, by Gaussian elimination over the
/// dual-descending column layout.
///
/// Pivots are chosen as the largest-magnitude entry in each column position;
/// entries of magnitude at most `tol` times the largest input entry are
/// treated as zero. The input is expected to be linearly independent:
/// elements that vanish entirely under that threshold make the rank decision
/// ambiguous and are reported as an error.
pub fn reduce_lead_terms<S: Scalar>(
    elements: &[DualFunctional<S>],
    degree: u32,
    order: &LocalOrder,
    tol: f64,
) -> Result<DualBasis<S>, KernelError> {
    let (basis, dropped) = rref_reduce(elements, degree, order, tol);
    if dropped > 0 {
        return Err(KernelError::RankDecision);
    }
    Ok(basis)
}

/// Like [`reduce_lead_terms`] but for inputs that are only a spanning set:
/// elements eliminated to numerical zero are silently dropped.
pub fn reduce_spanning_set<S: Scalar>(
    elements: &[DualFunctional<S>],
    degree: u32,
    order: &LocalOrder,
    tol: f64,
) -> DualBasis<S> {
    rref_reduce(elements, degree, order, tol).0
}

fn rref_reduce<S: Scalar>(
    elements: &[DualFunctional<S>],
    degree: u32,
    order: &LocalOrder,
    tol: f64,
) -> (DualBasis<S>, usize) {
    let columns = order.columns_up_to_degree(degree);
    let mut rows: Vec<Vec<S>> = elements.iter().map(|p| p.to_vector(&columns)).collect();
    let global_max = rows
        .iter()
        .flat_map(|r| r.iter())
        .map(Scalar::magnitude)
        .fold(0.0, f64::max);
    let threshold = tol * global_max;

    let nrows = rows.len();
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; nrows];
    let mut used = vec![false; nrows];
    for col in 0..columns.len() {
        // best remaining pivot for this column
        let mut best: Option<(usize, f64)> = None;
        for (r, row) in rows.iter().enumerate() {
            if used[r] {
                continue;
            }
            let mag = row[col].magnitude();
            if row[col].negligible(threshold) {
                continue;
            }
            if best.map_or(true, |(_, m)| mag > m) {
                best = Some((r, mag));
            }
        }
        let Some((pivot_row, _)) = best else { continue };
        used[pivot_row] = true;
        pivot_of_row[pivot_row] = Some(col);
        let inv = rows[pivot_row][col].clone();
        for value in rows[pivot_row].iter_mut() {
            *value = value.clone() / inv.clone();
        }
        let pivot_vec = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row {
                continue;
            }
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, p) in row.iter_mut().zip(&pivot_vec) {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
    }

    let dropped = used.iter().filter(|u| !**u).count();

    let mut ordered: Vec<(usize, usize)> = pivot_of_row
        .iter()
        .enumerate()
        .filter_map(|(r, c)| c.map(|c| (c, r)))
        .collect();
    ordered.sort();
    let pivot_cols: Vec<usize> = ordered.iter().map(|&(c, _)| c).collect();

    // Positions left of a row's pivot and at other rows' pivots are
    // structurally eliminated; zero the float residue there so lead
    // extraction is exact. Free-column data keeps full precision.
    let nvars = order.nvars();
    let mut out = Vec::with_capacity(nrows - dropped);
    for &(pivot, r) in &ordered {
        let cleaned: Vec<S> = rows[r]
            .iter()
            .enumerate()
            .map(|(j, v)| {
                if j < pivot || (j != pivot && pivot_cols.contains(&j)) {
                    S::zero()
                } else {
                    v.clone()
                }
            })
            .collect();
        out.push(DualFunctional::from_vector(nvars, &columns, &cleaned));
    }

    (DualBasis { elements: out, degree, tolerance: tol, reduced: true }, dropped)
}

/// Turns raw kernel vectors over the given columns into a reduced dual basis.
pub fn basis_from_kernel<S: KernelScalar>(
    vectors: Vec<Vec<S>>,
    columns: &[Monomial],
    degree: u32,
    order: &LocalOrder,
    tol: f64,
) -> Result<DualBasis<S>, KernelError> {
    let nvars = order.nvars();
    let elements: Vec<DualFunctional<S>> = vectors
        .into_iter()
        .map(|v| DualFunctional::from_vector(nvars, columns, &v))
        .collect();
    reduce_lead_terms(&elements, degree, order, tol)
}
