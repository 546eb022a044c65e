//! Standard-basis recovery from Sylvester duals and the bounded-degree
//! ideal membership test.

use std::fmt;

use num_traits::Zero;

use crate::gcorner::{find_gcorners, minimal_gcorners, EngineError, SearchOptions, Strategy};
use crate::kernel::{DualBasis, KernelError};
use crate::monomial::Monomial;
use crate::order::LocalOrder;
use crate::poly::Polynomial;
use crate::scalar::{KernelScalar, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub enum SBasisError {
    Engine(EngineError),
    /// The restricted kernel holds no element with the requested lead; the
    /// corner record is inconsistent with the dual basis (a tolerance
    /// failure).
    NoKernelElementWithLead { corner: Monomial },
}

impl fmt::Display for SBasisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SBasisError::Engine(e) => write!(f, "{}", e),
            SBasisError::NoKernelElementWithLead { corner } => {
                write!(f, "no kernel element with lead {}", corner)
            }
        }
    }
}

impl std::error::Error for SBasisError {}

impl From<EngineError> for SBasisError {
    fn from(e: EngineError) -> Self {
        SBasisError::Engine(e)
    }
}

impl From<KernelError> for SBasisError {
    fn from(e: KernelError) -> Self {
        SBasisError::Engine(EngineError::Kernel(e))
    }
}

/// Recovers a standard-basis element with lead monomial `corner` from the
/// Sylvester dual it was discovered in.
///
/// The coefficient matrix of the dual basis is restricted to the columns for
/// monomials below the corner (plus the corner itself, so the kernel can
/// contain an element with that exact lead); any kernel element with a
/// non-negligible corner coordinate has lead exactly `corner`, is
/// annihilated by the whole Sylvester dual, and therefore lies in the ideal.
/// Among them the result minimizes the coefficient norm after lead
/// normalization.
pub fn recover_sbasis_element<S: KernelScalar>(
    sdual: &DualBasis<S>,
    corner: &Monomial,
    order: &LocalOrder,
    tol: f64,
) -> Result<Polynomial<S>, SBasisError> {
    let mut columns = vec![corner.clone()];
    for m in order.columns_up_to_degree(sdual.degree) {
        if order.compare(&m, corner) == std::cmp::Ordering::Less {
            columns.push(m);
        }
    }

    let nrows = sdual.elements.len();
    let mut entries = Vec::with_capacity(nrows * columns.len());
    for p in &sdual.elements {
        for m in &columns {
            entries.push(p.coefficient(m));
        }
    }
    let kernel = S::kernel_basis(nrows, columns.len(), &entries, tol)?;

    let gamma: Vec<S> = kernel.iter().map(|v| v[0].clone()).collect();
    let gamma_norm_sq: f64 = gamma.iter().map(|c| c.magnitude() * c.magnitude()).sum();
    if (S::EXACT && gamma.iter().all(Zero::is_zero)) || (!S::EXACT && gamma_norm_sq.sqrt() <= tol)
    {
        return Err(SBasisError::NoKernelElementWithLead { corner: corner.clone() });
    }

    let weights: Vec<S> = if S::EXACT {
        // min-norm over an arbitrary kernel basis: solve the Gram system
        let r = kernel.len();
        let mut gram = vec![S::zero(); r * r];
        for i in 0..r {
            for l in 0..r {
                let mut acc = S::zero();
                for j in 0..columns.len() {
                    acc = acc + kernel[i][j].clone() * kernel[l][j].clone();
                }
                gram[i * r + l] = acc;
            }
        }
        let x = solve_linear(r, &gram, &gamma);
        let denom = gamma
            .iter()
            .zip(&x)
            .fold(S::zero(), |acc, (g, xi)| acc + g.clone() * xi.clone());
        x.into_iter().map(|xi| xi / denom.clone()).collect()
    } else {
        // the SVD kernel basis is orthonormal: conj(gamma) / |gamma|^2
        let denom = S::from_f64(gamma_norm_sq);
        gamma.iter().map(|g| g.conjugate() / denom.clone()).collect()
    };

    let mut values = vec![S::zero(); columns.len()];
    for (w, vec) in weights.iter().zip(&kernel) {
        if w.is_zero() {
            continue;
        }
        for (acc, v) in values.iter_mut().zip(vec) {
            *acc = acc.clone() + w.clone() * v.clone();
        }
    }
    // normalize the lead coefficient to exactly 1
    let lead = values[0].clone();
    let max_mag = values.iter().map(Scalar::magnitude).fold(0.0, f64::max);
    let drop_below = tol * max_mag.max(1.0);
    let mut poly = Polynomial::zero_poly(order.nvars());
    for (m, v) in columns.iter().zip(&values) {
        let c = v.clone() / lead.clone();
        if !c.negligible(drop_below) {
            poly.add_term(m.clone(), c);
        }
    }
    Ok(poly)
}

/// Exact dense solve of `A x = b` by Gaussian elimination with partial
/// pivoting by magnitude.
fn solve_linear<S: Scalar>(n: usize, a: &[S], b: &[S]) -> Vec<S> {
    let mut m: Vec<Vec<S>> = (0..n)
        .map(|i| {
            let mut row = a[i * n..(i + 1) * n].to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                m[i][col]
                    .magnitude()
                    .partial_cmp(&m[j][col].magnitude())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("nonempty");
        m.swap(col, pivot);
        let inv = m[col][col].clone();
        assert!(!inv.is_zero(), "singular Gram matrix");
        for v in m[col].iter_mut() {
            *v = v.clone() / inv.clone();
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col {
                continue;
            }
            let factor = row[col].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = v.clone() - factor.clone() * p.clone();
            }
        }
    }
    (0..n).map(|i| m[i][n].clone()).collect()
}

/// Runs the g-corner search and recovers one standard-basis element per
/// record (per minimal corner when `reduced` is set). The lead monomials of
/// the result generate the initial ideal.
pub fn standard_basis<S: KernelScalar>(
    gens: &[Polynomial<S>],
    tol: f64,
    strategy: Strategy,
    order: &LocalOrder,
    reduced: bool,
    options: &SearchOptions,
) -> Result<Vec<Polynomial<S>>, SBasisError> {
    let search = find_gcorners(gens, tol, strategy, order, options)?;
    let minimal = minimal_gcorners(&search.records);
    let mut out = Vec::new();
    for record in &search.records {
        if reduced && !minimal.contains(&record.corner) {
            continue;
        }
        let sdual = &search.sduals[record.found_at as usize];
        out.push(recover_sbasis_element(sdual, &record.corner, order, tol)?);
    }
    Ok(out)
}

/// Verdict of the bounded-degree membership test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Membership {
    Member,
    NonMember,
    /// Some term of the polynomial exceeds the dual's degree; the test does
    /// not apply.
    OutOfRange,
}

/// Tests membership of `f` against a Sylvester dual of matching degree:
/// `f` lies in the ideal exactly when every dual element annihilates it,
/// provided no term of `f` exceeds the dual's degree.
pub fn membership<S: Scalar>(f: &Polynomial<S>, sdual: &DualBasis<S>, tol: f64) -> Membership {
    if f.max_degree().unwrap_or(0) > sdual.degree {
        return Membership::OutOfRange;
    }
    let f_norm = f.norm();
    for p in &sdual.elements {
        let value = p.apply(f);
        let bound = tol * p.norm() * f_norm;
        let nonzero = if S::EXACT {
            !value.is_zero()
        } else {
            value.magnitude() > bound
        };
        if nonzero {
            return Membership::NonMember;
        }
    }
    Membership::Member
}
