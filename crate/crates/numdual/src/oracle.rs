//! Exact-rational oracle: S-pairs, Mora normal form, local Buchberger,
//! exact kernels and brute-force staircase counting.
//!
//! Everything here runs over exact scalars and serves as small-instance
//! ground truth for the numerical pipeline.

use std::fmt;

use num_traits::{One, Zero};

use crate::matrix::CoefficientMatrix;
use crate::monomial::{monomials_of_degree, Monomial};
use crate::order::LocalOrder;
use crate::poly::Polynomial;
use crate::scalar::{Scalar, Q};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleError {
    /// A basis element exceeded the configured lead-degree cap.
    DegreeCapExceeded { degree: u32, cap: u32 },
    /// The Buchberger loop grew past any reasonable size for a test oracle.
    BasisSizeExceeded { size: usize },
    /// Brute-force enumeration would visit too many monomials.
    EnumerationBudget { count: u128 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::DegreeCapExceeded { degree, cap } => {
                write!(f, "standard basis element of lead degree {} exceeds cap {}", degree, cap)
            }
            OracleError::BasisSizeExceeded { size } => {
                write!(f, "standard basis computation grew to {} elements", size)
            }
            OracleError::EnumerationBudget { count } => {
                write!(f, "enumeration budget exceeded ({} monomials)", count)
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// The S-pair `(lcm/in f) f - (lcm/in g) g`, with lead terms cancelling.
pub fn spair<S: Scalar>(f: &Polynomial<S>, g: &Polynomial<S>, order: &LocalOrder) -> Polynomial<S> {
    let lf = f.lead_monomial(order).expect("spair of zero polynomial").clone();
    let lg = g.lead_monomial(order).expect("spair of zero polynomial").clone();
    let cf = f.lead_coefficient(order).unwrap().clone();
    let cg = g.lead_coefficient(order).unwrap().clone();
    let lcm = lf.lcm(&lg);
    let mf = lcm.divide(&lf).unwrap();
    let mg = lcm.divide(&lg).unwrap();
    f.mul_term(&mf, &(S::one() / cf))
        .sub(&g.mul_term(&mg, &(S::one() / cg)))
}

/// Result of a Mora reduction: `normal_form = unit * f - sum_i combination[i] * g_i`.
pub struct NormalForm<S> {
    pub normal_form: Polynomial<S>,
    pub unit: Polynomial<S>,
    pub combination: Vec<Polynomial<S>>,
}

#[derive(Clone)]
enum Provenance {
    Generator(usize),
    Intermediate { unit: Polynomial<Q>, combination: Vec<Polynomial<Q>> },
}

/// Mora's tangent cone reduction of `f` by `basis`.
///
/// The divisor is chosen with smallest ecart, ties broken by the greatest
/// lead monomial under the local order; intermediate results with larger
/// ecart than the chosen divisor join the reducer set, which is what makes
/// the loop terminate on local orders.
///
/// The returned contract is asserted on every call: the unit has a nonzero
/// constant term, `in(f) >= in(NF)`, `in(f) >= in(a_i g_i)`, and the lead of
/// the normal form is divisible by no basis lead.
pub fn mora_normal_form(f: &Polynomial<Q>, basis: &[Polynomial<Q>], order: &LocalOrder) -> NormalForm<Q> {
    let nvars = f.nvars();
    struct Reducer {
        poly: Polynomial<Q>,
        lead: Monomial,
        ecart: u32,
        provenance: Provenance,
    }
    let mut reducers: Vec<Reducer> = basis
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| Reducer {
            lead: g.lead_monomial(order).unwrap().clone(),
            ecart: g.ecart().unwrap(),
            poly: g.clone(),
            provenance: Provenance::Generator(i),
        })
        .collect();

    let mut h = f.clone();
    let mut unit = Polynomial::constant(nvars, Q::one());
    let mut combination = vec![Polynomial::zero_poly(nvars); basis.len()];

    while !h.is_zero() {
        let h_lead = h.lead_monomial(order).unwrap().clone();
        let h_ecart = h.ecart().unwrap();
        let candidate = reducers
            .iter()
            .enumerate()
            .filter(|(_, r)| r.lead.divides(&h_lead))
            .min_by(|(ia, a), (ib, b)| {
                a.ecart
                    .cmp(&b.ecart)
                    .then_with(|| order.compare(&b.lead, &a.lead))
                    .then(ia.cmp(ib))
            })
            .map(|(i, _)| i);
        let Some(gi) = candidate else { break };

        if reducers[gi].ecart > h_ecart {
            reducers.push(Reducer {
                poly: h.clone(),
                lead: h_lead.clone(),
                ecart: h_ecart,
                provenance: Provenance::Intermediate {
                    unit: unit.clone(),
                    combination: combination.clone(),
                },
            });
        }

        let g = &reducers[gi];
        let quot_mon = h_lead.divide(&g.lead).unwrap();
        let quot_coef = h.lead_coefficient(order).unwrap().clone()
            / g.poly.lead_coefficient(order).unwrap().clone();
        h = h.sub(&g.poly.mul_term(&quot_mon, &quot_coef));
        match &g.provenance {
            Provenance::Generator(i) => {
                let i = *i;
                let add = Polynomial::from_terms(nvars, [(quot_mon, quot_coef)]);
                combination[i] = combination[i].add(&add);
            }
            Provenance::Intermediate { unit: u2, combination: a2 } => {
                let u2 = u2.clone();
                let a2 = a2.clone();
                unit = unit.sub(&u2.mul_term(&quot_mon, &quot_coef));
                for (ai, a2i) in combination.iter_mut().zip(&a2) {
                    *ai = ai.sub(&a2i.mul_term(&quot_mon, &quot_coef));
                }
            }
        }
    }

    let result = NormalForm { normal_form: h, unit, combination };
    assert_normal_form_contract(f, basis, &result, order);
    result
}

fn assert_normal_form_contract(
    f: &Polynomial<Q>,
    basis: &[Polynomial<Q>],
    nf: &NormalForm<Q>,
    order: &LocalOrder,
) {
    let nvars = f.nvars();
    let unit_const = nf.unit.coefficient(&Monomial::one(nvars));
    assert!(!unit_const.is_zero(), "Mora unit must have nonzero constant term");

    // u*f - sum a_i g_i reproduces the normal form exactly
    let mut recomposed = nf.unit.mul(f);
    for (a, g) in nf.combination.iter().zip(basis) {
        recomposed = recomposed.sub(&a.mul(g));
    }
    assert_eq!(recomposed, nf.normal_form, "Mora representation identity violated");

    if let Some(f_lead) = f.lead_monomial(order) {
        if let Some(nf_lead) = nf.normal_form.lead_monomial(order) {
            assert_ne!(
                order.compare(f_lead, nf_lead),
                std::cmp::Ordering::Less,
                "in(f) >= in(NF) violated"
            );
            for g in basis {
                if let Some(gl) = g.lead_monomial(order) {
                    assert!(!gl.divides(nf_lead), "normal form lead still reducible");
                }
            }
        }
        for (a, g) in nf.combination.iter().zip(basis) {
            let prod = a.mul(g);
            if let Some(pl) = prod.lead_monomial(order) {
                assert_ne!(
                    order.compare(f_lead, pl),
                    std::cmp::Ordering::Less,
                    "in(f) >= in(a_i g_i) violated"
                );
            }
        }
    }
}

/// Configuration guards for the Buchberger loop.
#[derive(Clone, Copy, Debug)]
pub struct BuchbergerConfig {
    /// Hard cap on the lead degree of adjoined basis elements.
    pub degree_cap: u32,
    /// Hard cap on the basis size.
    pub size_cap: usize,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { degree_cap: 60, size_cap: 200 }
    }
}

/// Buchberger's algorithm with Mora normal forms: a standard basis of the
/// ideal generated by `gens` under the local order.
///
/// Elements are normalized to unit lead coefficient. Exceeding a cap is an
/// explicit error, never a silent truncation.
pub fn local_buchberger(
    gens: &[Polynomial<Q>],
    order: &LocalOrder,
    config: BuchbergerConfig,
) -> Result<Vec<Polynomial<Q>>, OracleError> {
    let mut basis: Vec<Polynomial<Q>> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let lc = g.lead_coefficient(order).unwrap().clone();
            basis.push(g.scale(&(Q::one() / lc)));
        }
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.push((i, j));
        }
    }

    while !pending.is_empty() {
        // process the pair with the smallest lcm degree first
        pending.sort_by_key(|&(i, j)| {
            let li = basis[i].lead_monomial(order).unwrap();
            let lj = basis[j].lead_monomial(order).unwrap();
            (std::cmp::Reverse(li.lcm(lj).degree()), std::cmp::Reverse(i), std::cmp::Reverse(j))
        });
        let (i, j) = pending.pop().unwrap();
        let s = spair(&basis[i], &basis[j], order);
        if s.is_zero() {
            continue;
        }
        let nf = mora_normal_form(&s, &basis, order).normal_form;
        if nf.is_zero() {
            continue;
        }
        let degree = nf.lead_monomial(order).unwrap().degree();
        if degree > config.degree_cap {
            return Err(OracleError::DegreeCapExceeded { degree, cap: config.degree_cap });
        }
        if basis.len() + 1 > config.size_cap {
            return Err(OracleError::BasisSizeExceeded { size: basis.len() + 1 });
        }
        let lc = nf.lead_coefficient(order).unwrap().clone();
        let new = nf.scale(&(Q::one() / lc));
        basis.push(new);
        let k = basis.len() - 1;
        for i in 0..k {
            pending.push((i, k));
        }
    }
    Ok(basis)
}

/// Drops basis elements whose lead monomial is divisible by the lead of
/// another element, leaving the minimal standard basis.
pub fn minimal_standard_basis(
    basis: &[Polynomial<Q>],
    order: &LocalOrder,
) -> Vec<Polynomial<Q>> {
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.lead_monomial(order).unwrap().clone())
        .collect();
    let mut keep = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let dominated = leads.iter().enumerate().any(|(j, l)| {
            j != i && l.divides(&leads[i]) && (l != &leads[i] || j < i)
        });
        if !dominated {
            keep.push(g.clone());
        }
    }
    keep
}

/// Lead monomials of a basis, deduplicated and sorted.
pub fn lead_monomials(basis: &[Polynomial<Q>], order: &LocalOrder) -> Vec<Monomial> {
    let mut leads: Vec<Monomial> = basis
        .iter()
        .filter_map(|g| g.lead_monomial(order).cloned())
        .collect();
    leads.sort();
    leads.dedup();
    leads
}

/// Kernel basis of a dense row-major exact matrix by Gaussian elimination.
pub(crate) fn exact_kernel_raw(rows: usize, cols: usize, entries: &[Q]) -> Vec<Vec<Q>> {
    assert_eq!(entries.len(), rows * cols);
    let mut m: Vec<Vec<Q>> = (0..rows)
        .map(|i| entries[i * cols..(i + 1) * cols].to_vec())
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = m[rank][col].clone();
        for v in m[rank].iter_mut() {
            *v = v.clone() / inv.clone();
        }
        let pivot_vec = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank {
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
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for &(pr, pc) in &pivots {
            v[pc] = -m[pr][free].clone();
        }
        kernel.push(v);
    }
    kernel
}

/// Exact kernel of a coefficient matrix over the rationals.
pub fn exact_kernel(matrix: &CoefficientMatrix<Q>) -> Vec<Vec<Q>> {
    exact_kernel_raw(matrix.nrows(), matrix.ncols(), matrix.entries())
}

/// Exact kernel of a raw dense row-major rational matrix.
pub fn exact_kernel_basis(rows: usize, cols: usize, entries: &[Q]) -> Vec<Vec<Q>> {
    exact_kernel_raw(rows, cols, entries)
}

/// Exact solve of `A x = b` (any solution, free variables at zero).
/// An inconsistent system reports a span residual.
pub(crate) fn exact_solve_raw(
    rows: usize,
    cols: usize,
    a: &[Q],
    b: &[Q],
) -> Result<Vec<Q>, crate::kernel::KernelError> {
    assert_eq!(a.len(), rows * cols);
    assert_eq!(b.len(), rows);
    let mut m: Vec<Vec<Q>> = (0..rows)
        .map(|i| {
            let mut row = a[i * cols..(i + 1) * cols].to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = m[rank][col].clone();
        for v in m[rank].iter_mut() {
            *v = v.clone() / inv.clone();
        }
        let pivot_vec = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank {
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
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }

    for row in m.iter().skip(rank) {
        if !row[cols].is_zero() {
            return Err(crate::kernel::KernelError::SpanResidual {
                residual: crate::scalar::Scalar::magnitude(&row[cols]),
            });
        }
    }

    let mut x = vec![Q::zero(); cols];
    for &(r, c) in &pivots {
        x[c] = m[r][cols].clone();
    }
    Ok(x)
}

/// Counts the degree-`d` monomials outside the staircase of `gcorners` by
/// direct enumeration. Independent of the inclusion-exclusion formula.
pub fn brute_hilbert(gcorners: &[Monomial], nvars: usize, d: u32) -> Result<u64, OracleError> {
    let mut count: u128 = 1;
    for k in 1..nvars as u128 {
        count = count * (d as u128 + k) / k;
    }
    if count > 5_000_000 {
        return Err(OracleError::EnumerationBudget { count });
    }
    let mut outside = 0u64;
    for m in monomials_of_degree(nvars, d) {
        if !gcorners.iter().any(|c| c.divides(&m)) {
            outside += 1;
        }
    }
    Ok(outside)
}
