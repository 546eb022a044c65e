//! The integration method: extend a dual basis degree by degree through
//! derivative constraints.
//!
//! Plain mode reproduces the truncated dual space `D_0^(d)[I]`: candidates
//! are the integration shifts of the previous basis, constrained by
//! commutation of the derivative maps and by annihilation of the
//! generators.
//!
//! Homogeneous mode computes the degree-`d` slices of the dual of the
//! homogenized ideal — the Sylvester dual — without ever introducing the
//! extra variable. Working with dehomogenized representatives, the
//! homogenizing variable acts as one more "derivative": its derivative map
//! truncates away the top-degree terms and its integration candidate
//! extracts the constant coefficient. Every slice extends from the slice one
//! degree below alone, so the matrices grow with the dual space and not with
//! the ring.

use crate::dual::DualFunctional;
use crate::kernel::{reduce_spanning_set, DualBasis, KernelError};
use crate::monomial::Monomial;
use crate::order::LocalOrder;
use crate::poly::Polynomial;
use crate::scalar::{KernelScalar, Scalar};

/// Expresses `v` in the span of `basis` by a least-squares solve over the
/// support columns, reporting a span residual when `v` does not lie in the
/// span within tolerance.
fn expand_in_basis<S: KernelScalar>(
    v: &DualFunctional<S>,
    basis: &[DualFunctional<S>],
    support_degree: u32,
    order: &LocalOrder,
    tol: f64,
) -> Result<Vec<S>, KernelError> {
    let columns = order.columns_up_to_degree(support_degree);
    let rows = columns.len();
    let cols = basis.len();
    let mut a = Vec::with_capacity(rows * cols);
    for m in &columns {
        for b in basis {
            a.push(b.coefficient(m));
        }
    }
    let rhs = v.to_vector(&columns);
    let coords = S::solve_least_squares(rows, cols, &a, &rhs, tol)?;

    // residual check: the derivative of a dual element must lie in the span
    let mut residual_sq = 0.0f64;
    for m in &columns {
        let mut acc = -v.coefficient(m);
        for (c, b) in coords.iter().zip(basis) {
            if !c.is_zero() {
                acc = acc + c.clone() * b.coefficient(m);
            }
        }
        let mag = acc.magnitude();
        residual_sq += mag * mag;
    }
    // allow modest conditioning growth over the raw tolerance; a genuine
    // span failure leaves a residual on the order of the missing component
    let scale = v.norm().max(1.0);
    if residual_sq.sqrt() > 100.0 * tol * scale {
        return Err(KernelError::SpanResidual { residual: residual_sq.sqrt() });
    }
    Ok(coords)
}

/// State for one integration step: the basis being extended, the basis its
/// derivatives expand in, and the expansion coordinates.
pub struct IntegrationFrame<S> {
    previous: Vec<DualFunctional<S>>,
    prev_degree: u32,
    expansion: Vec<DualFunctional<S>>,
    /// `mu[op][j][m]`: coordinates of the op-th derivative of
    /// `previous[j]` in `expansion`.
    mu: Vec<Vec<Vec<S>>>,
    homogeneous: bool,
}

impl<S: KernelScalar> IntegrationFrame<S> {
    /// Frame for extending `D_0^(d-1)[I]` to degree `d`. Derivatives of the
    /// previous basis expand in the previous basis itself.
    pub fn plain(previous: &DualBasis<S>, order: &LocalOrder, tol: f64) -> Result<Self, KernelError> {
        Self::build(previous.elements.clone(), previous.degree, previous.elements.clone(), false, order, tol)
    }

    /// Frame for extending a degree-`(d-1)` homogeneous slice to degree `d`.
    /// Derivatives land in the degree-`(d-2)` slice, which must be supplied.
    pub fn homogeneous(
        previous_slice: &DualBasis<S>,
        penultimate_slice: &[DualFunctional<S>],
        order: &LocalOrder,
        tol: f64,
    ) -> Result<Self, KernelError> {
        Self::build(
            previous_slice.elements.clone(),
            previous_slice.degree,
            penultimate_slice.to_vec(),
            true,
            order,
            tol,
        )
    }

    fn build(
        previous: Vec<DualFunctional<S>>,
        prev_degree: u32,
        expansion: Vec<DualFunctional<S>>,
        homogeneous: bool,
        order: &LocalOrder,
        tol: f64,
    ) -> Result<Self, KernelError> {
        let mut frame = IntegrationFrame {
            previous,
            prev_degree,
            expansion,
            mu: Vec::new(),
            homogeneous,
        };
        let ops = frame.op_count(order);
        let mut mu = Vec::with_capacity(ops);
        for op in 0..ops {
            let mut per_basis = Vec::with_capacity(frame.previous.len());
            for beta in &frame.previous {
                let derived = frame.apply_derivative(op, beta);
                per_basis.push(expand_in_basis(&derived, &frame.expansion, prev_degree, order, tol)?);
            }
            mu.push(per_basis);
        }
        frame.mu = mu;
        Ok(frame)
    }

    fn op_count(&self, order: &LocalOrder) -> usize {
        if self.homogeneous {
            order.nvars() + 1
        } else {
            order.nvars()
        }
    }

    /// The op-th derivative map. In homogeneous mode op 0 is the
    /// homogenizing variable, acting on dehomogenized representatives as
    /// truncation below the slice degree.
    fn apply_derivative(&self, op: usize, p: &DualFunctional<S>) -> DualFunctional<S> {
        if self.homogeneous {
            if op == 0 {
                if self.prev_degree == 0 {
                    DualFunctional::zero_functional(p.nvars())
                } else {
                    p.truncate_degree(self.prev_degree - 1)
                }
            } else {
                p.derivative(op - 1)
            }
        } else {
            p.derivative(op)
        }
    }

    /// The op-th integration candidate built from a previous-basis element:
    /// the variable shift of the restriction to the leading block of
    /// variables. In homogeneous mode op 0 extracts the constant
    /// coefficient.
    fn candidate(&self, op: usize, p: &DualFunctional<S>) -> DualFunctional<S> {
        let nvars = p.nvars();
        if self.homogeneous {
            if op == 0 {
                let c = p.coefficient(&Monomial::one(nvars));
                DualFunctional::unit(nvars).scale(&c)
            } else {
                p.truncate_vars_above(op - 1).shift(op - 1)
            }
        } else {
            p.truncate_vars_above(op).shift(op)
        }
    }
}

/// One integration step: candidates from the frame, commutation and
/// annihilation constraints, kernel, merge, reduce.
///
/// In plain mode the result is `D_0^(d)[I]` (previous basis merged in); in
/// homogeneous mode it is the degree-`d` slice alone.
pub fn mourrain_extend<S: KernelScalar>(
    frame: &IntegrationFrame<S>,
    gens: &[Polynomial<S>],
    d: u32,
    tol: f64,
    order: &LocalOrder,
) -> Result<DualBasis<S>, KernelError> {
    let ops = frame.op_count(order);
    let r = frame.previous.len();
    let unknowns = ops * r;
    if unknowns == 0 {
        // nothing to extend from: the dual space is empty or stays empty
        let merged = if frame.homogeneous { Vec::new() } else { frame.previous.clone() };
        return Ok(reduce_spanning_set(&merged, d, order, tol));
    }

    let mut candidates = Vec::with_capacity(unknowns);
    for op in 0..ops {
        for beta in &frame.previous {
            candidates.push(frame.candidate(op, beta));
        }
    }

    // Slice coefficients can grow from step to step, so equilibrate: scale
    // every candidate column to unit norm and every constraint row to unit
    // magnitude. Row scaling leaves the kernel unchanged; column scaling is
    // undone when assembling the solution functionals. Candidates and rows
    // whose content sits below the noise floor of the frame are zeroed
    // rather than normalized, so float residue cannot masquerade as data.
    let cand_scale = candidates.iter().map(DualFunctional::norm).fold(0.0, f64::max);
    let noise_floor = tol * cand_scale.max(1.0);
    let mut col_factor = vec![S::one(); unknowns];
    if !S::EXACT {
        for (cand, factor) in candidates.iter_mut().zip(col_factor.iter_mut()) {
            let n = cand.norm();
            if n <= noise_floor {
                *cand = DualFunctional::zero_functional(cand.nvars());
            } else {
                *factor = S::from_f64(1.0 / n);
            }
        }
    }

    let m = frame.expansion.len();
    let mut raw_rows: Vec<Vec<S>> = Vec::new();

    // commutation: sum_j (lambda^l_j mu^i_{j,k} - lambda^i_j mu^l_{j,k}) = 0
    for i in 0..ops {
        for l in (i + 1)..ops {
            for k in 0..m {
                let mut row = vec![S::zero(); unknowns];
                for j in 0..r {
                    row[l * r + j] = row[l * r + j].clone() + frame.mu[i][j][k].clone();
                    row[i * r + j] = row[i * r + j].clone() - frame.mu[l][j][k].clone();
                }
                raw_rows.push(row);
            }
        }
    }

    // annihilation: p(f) = 0. Homogeneous slices only see generators whose
    // top degree fits inside the slice.
    for f in gens {
        if f.is_zero() {
            continue;
        }
        if frame.homogeneous && f.max_degree().unwrap_or(0) > d {
            continue;
        }
        raw_rows.push(candidates.iter().map(|c| c.apply(f)).collect());
    }

    let row_scale = raw_rows
        .iter()
        .flat_map(|r| r.iter())
        .map(Scalar::magnitude)
        .fold(0.0, f64::max);
    let row_floor = tol * row_scale.max(1.0);
    let mut entries: Vec<S> = Vec::new();
    let mut nrows = 0;
    for mut row in raw_rows {
        if S::EXACT {
            if row.iter().all(|v| v.is_zero()) {
                continue;
            }
            entries.extend(row);
            nrows += 1;
            continue;
        }
        // judge content before rescaling so noise rows drop out entirely
        let raw_magnitude = row.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        if raw_magnitude <= row_floor {
            continue;
        }
        for (v, f) in row.iter_mut().zip(&col_factor) {
            *v = v.clone() * f.clone();
        }
        let magnitude = row.iter().map(Scalar::magnitude).fold(0.0, f64::max);
        if magnitude == 0.0 {
            continue;
        }
        let inv = S::from_f64(1.0 / magnitude);
        for v in row.iter_mut() {
            *v = v.clone() * inv.clone();
        }
        entries.extend(row);
        nrows += 1;
    }

    let solutions = S::kernel_basis(nrows, unknowns, &entries, tol)?;

    let nvars = order.nvars();
    let mut new_elements = Vec::with_capacity(solutions.len());
    for lambda in &solutions {
        let mut p = DualFunctional::zero_functional(nvars);
        for ((coef, factor), cand) in lambda.iter().zip(&col_factor).zip(&candidates) {
            if coef.is_zero() {
                continue;
            }
            p = p.add(&cand.scale(&(coef.clone() * factor.clone())));
        }
        if p.is_zero() {
            continue;
        }
        if !S::EXACT {
            let scale = p.max_coefficient_magnitude();
            if scale > 0.0 {
                p = p.scale(&S::from_f64(1.0 / scale));
            }
        }
        new_elements.push(p);
    }

    let mut merged = if frame.homogeneous { Vec::new() } else { frame.previous.clone() };
    merged.extend(new_elements);
    Ok(reduce_spanning_set(&merged, d, order, tol))
}

/// Degree-0 dual: `{1}` when every generator's constant term is negligible
/// against its norm, empty otherwise (the point is not on the variety).
pub fn degree_zero_basis<S: Scalar>(
    gens: &[Polynomial<S>],
    tol: f64,
    order: &LocalOrder,
) -> DualBasis<S> {
    let nvars = order.nvars();
    let on_variety = gens.iter().filter(|f| !f.is_zero()).all(|f| {
        let c = f.coefficient(&Monomial::one(nvars));
        c.negligible(tol * f.norm().max(1.0))
    });
    let elements = if on_variety {
        vec![DualFunctional::unit(nvars)]
    } else {
        Vec::new()
    };
    DualBasis { elements, degree: 0, tolerance: tol, reduced: true }
}

/// Iterates the integration step from degree 0 up to `d`.
///
/// Plain mode returns the truncated dual `D_0^(d)[I]`, matching the Macaulay
/// construction in dimension and lead set. Homogeneous mode returns the
/// degree-`d` Sylvester dual `S_0^(d)[F]`.
pub fn mourrain_dual<S: KernelScalar>(
    gens: &[Polynomial<S>],
    d: u32,
    tol: f64,
    order: &LocalOrder,
    homogeneous: bool,
) -> Result<DualBasis<S>, KernelError> {
    let mut prev = degree_zero_basis(gens, tol, order);
    if homogeneous {
        let mut penultimate: Vec<DualFunctional<S>> = Vec::new();
        for step in 1..=d {
            let frame = IntegrationFrame::homogeneous(&prev, &penultimate, order, tol)?;
            let next = mourrain_extend(&frame, gens, step, tol, order)?;
            penultimate = std::mem::replace(&mut prev, next).elements;
        }
    } else {
        for step in 1..=d {
            let frame = IntegrationFrame::plain(&prev, order, tol)?;
            prev = mourrain_extend(&frame, gens, step, tol, order)?;
        }
    }
    Ok(prev)
}
