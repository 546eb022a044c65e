//! Dense coefficient matrices of polynomial families.

use crate::kernel::KernelError;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::{KernelScalar, Scalar};

/// Label of a coefficient-matrix row: which generator it came from and the
/// monomial it was multiplied by.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RowLabel {
    pub generator: usize,
    pub multiplier: Monomial,
}

/// A dense row-major matrix whose columns are labelled by monomials (sorted
/// descending under the dual order) and whose rows are monomial multiples of
/// generators. Entry `(i, j)` is the coefficient of the column-`j` monomial
/// in the row-`i` polynomial.
#[derive(Clone, Debug)]
pub struct CoefficientMatrix<S> {
    nrows: usize,
    entries: Vec<S>,
    columns: Vec<Monomial>,
    labels: Vec<RowLabel>,
}

impl<S: Scalar> CoefficientMatrix<S> {
    pub fn from_rows(
        columns: Vec<Monomial>,
        rows: impl IntoIterator<Item = (RowLabel, Polynomial<S>)>,
    ) -> Self {
        let mut entries = Vec::new();
        let mut labels = Vec::new();
        let mut nrows = 0;
        for (label, poly) in rows {
            for col in &columns {
                entries.push(poly.coefficient(col));
            }
            labels.push(label);
            nrows += 1;
        }
        CoefficientMatrix { nrows, entries, columns, labels }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Monomial] {
        &self.columns
    }

    pub fn labels(&self) -> &[RowLabel] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.columns.len() + j]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    /// Basis of the right kernel, via the field's kernel backend.
    pub fn kernel(&self, tol: f64) -> Result<Vec<Vec<S>>, KernelError>
    where
        S: KernelScalar,
    {
        S::kernel_basis(self.nrows, self.ncols(), &self.entries, tol)
    }
}
