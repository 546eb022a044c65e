//! Truncated dual spaces via Macaulay arrays (the Dayton-Zeng construction).

use crate::kernel::{basis_from_kernel, DualBasis, KernelError};
use crate::matrix::{CoefficientMatrix, RowLabel};
use crate::order::LocalOrder;
use crate::poly::Polynomial;
use crate::scalar::{KernelScalar, Scalar};

/// The Macaulay array `M(F, d)`: one row per multiple `x^a * f` with
/// `|a| + deg in(f) <= d`, columns over all monomials of degree `<= d` in
/// dual-descending order.
///
/// Rows whose product has no term of degree `<= d` still appear; they are
/// admissible in the construction even when their visible entries vanish.
pub fn macaulay_array<S: Scalar>(
    gens: &[Polynomial<S>],
    d: u32,
    order: &LocalOrder,
) -> CoefficientMatrix<S> {
    let columns = order.columns_up_to_degree(d);
    let mut rows = Vec::new();
    for a in 0..=d {
        let mut multipliers = order.columns_of_degree(a);
        multipliers.reverse(); // ring-descending, purely cosmetic
        for (gi, f) in gens.iter().enumerate() {
            let Some(lead) = f.lead_monomial(order) else { continue };
            if a + lead.degree() > d {
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

/// Reduced basis of the truncated dual space `D_0^(d)[I]`: the kernel of the
/// Macaulay array. Lead sets are nested as `d` grows.
pub fn truncated_dual<S: KernelScalar>(
    gens: &[Polynomial<S>],
    d: u32,
    tol: f64,
    order: &LocalOrder,
) -> Result<DualBasis<S>, KernelError> {
    let matrix = macaulay_array(gens, d, order);
    let kernel = matrix.kernel(tol)?;
    basis_from_kernel(kernel, matrix.columns(), d, order, tol)
}
