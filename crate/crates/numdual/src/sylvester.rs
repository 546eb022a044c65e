//! Sylvester arrays and the Sylvester dual `S_0^(d)[F]`.
//!
//! The Sylvester array keeps only the generator multiples all of whose terms
//! have degree at most `d`; its kernel is the dehomogenization of the
//! degree-`d` slice of the dual of the homogenized ideal. Unlike the
//! truncated dual it depends on the generating set and is not nested in `d`.

use crate::kernel::{basis_from_kernel, DualBasis, KernelError};
use crate::matrix::{CoefficientMatrix, RowLabel};
use crate::order::LocalOrder;
use crate::poly::Polynomial;
use crate::scalar::{KernelScalar, Scalar};

/// The Sylvester array `S(F, d)`: one row per multiple `x^a * f` whose terms
/// all have degree `<= d`, i.e. `|a| + maxdeg(f) <= d`. Its rows are a
/// subset of the Macaulay array rows.
pub fn sylvester_array<S: Scalar>(
    gens: &[Polynomial<S>],
    d: u32,
    order: &LocalOrder,
) -> CoefficientMatrix<S> {
    let columns = order.columns_up_to_degree(d);
    let mut rows = Vec::new();
    for a in 0..=d {
        let mut multipliers = order.columns_of_degree(a);
        multipliers.reverse();
        for (gi, f) in gens.iter().enumerate() {
            let Some(top) = f.max_degree() else { continue };
            if a + top > d {
                continue;
            }
            for m in &multipliers {
                rows.push((
                    RowLabel { generator: gi, multiplier: m.clone() },
                    f.mul_term(m, &S::one()),
                ));
            }
        }
    }
    CoefficientMatrix::from_rows(columns, rows)
}

/// Reduced kernel basis of the Sylvester array.
pub fn sylvester_dual<S: KernelScalar>(
    gens: &[Polynomial<S>],
    d: u32,
    tol: f64,
    order: &LocalOrder,
) -> Result<DualBasis<S>, KernelError> {
    let matrix = sylvester_array(gens, d, order);
    let kernel = matrix.kernel(tol)?;
    basis_from_kernel(kernel, matrix.columns(), d, order, tol)
}

/// Extracts the truncated dual space embedded in a Sylvester dual: the
/// elements with lead degree at most `d - e`, where `e` is the maximum ecart
/// of the generators. The result equals `D_0^(d-e)[I]`.
pub fn embedded_truncated_dual<S: Scalar>(
    sdual: &DualBasis<S>,
    max_ecart: u32,
    order: &LocalOrder,
) -> DualBasis<S> {
    let cutoff = sdual.degree.saturating_sub(max_ecart);
    let elements: Vec<_> = sdual
        .elements
        .iter()
        .filter(|p| p.lead_degree(order).map_or(false, |deg| deg <= cutoff))
        .cloned()
        .collect();
    DualBasis {
        elements,
        degree: cutoff,
        tolerance: sdual.tolerance,
        reduced: sdual.reduced,
    }
}
