//! Degree-by-degree g-corner discovery with the homogenization-based
//! stopping criterion.
//!
//! Each degree-`d` Sylvester dual reveals which monomials of degree at most
//! `d` are missing from its lead set. Missing monomials not explained by the
//! truncated cone of a previously found corner are new g-corners of the
//! homogenized ideal. The search degree grows to twice the largest discovery
//! degree, which guarantees that every g-corner is eventually found.

use std::fmt;

use crate::dual::DualFunctional;
use crate::kernel::{DualBasis, KernelError};
use crate::monomial::Monomial;
use crate::mourrain::{degree_zero_basis, mourrain_extend, IntegrationFrame};
use crate::order::LocalOrder;
use crate::poly::Polynomial;
use crate::scalar::KernelScalar;
use crate::sylvester::sylvester_dual;

/// How per-degree Sylvester duals are computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// Kernels of explicit Sylvester arrays.
    SylvesterArray,
    /// Homogeneous-mode integration from the previous slice.
    MourrainHomogeneous,
}

/// A discovered g-corner (of the homogenized ideal, dehomogenized) together
/// with the degree it was found at. The discovery degree includes the
/// homogenizing degree, so `deg(corner) <= found_at <= deg(corner) + e`
/// with `e` the maximum ecart of the generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GCornerRecord {
    pub corner: Monomial,
    pub found_at: u32,
}

/// Result of the g-corner search.
#[derive(Clone, Debug)]
pub struct GCornerSearch<S> {
    pub records: Vec<GCornerRecord>,
    /// The Sylvester dual at each visited degree (index = degree).
    pub sduals: Vec<DualBasis<S>>,
    /// The last degree visited.
    pub reached_degree: u32,
    /// Whether a degree cap cut the search short of its natural bound.
    pub truncated: bool,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    /// Hard cap on the search degree; exceeding the natural bound marks the
    /// result as truncated.
    pub max_degree: Option<u32>,
    /// Use the sharper pairwise-lcm stopping bound instead of the plain
    /// doubling rule.
    pub tighter_stop: bool,
}

#[derive(Clone, PartialEq, Debug)]
pub enum EngineError {
    /// The degree-0 dual is empty: some generator has a constant term beyond
    /// tolerance, or the unit monomial went missing during the search.
    PointNotOnVariety,
    Kernel(KernelError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::PointNotOnVariety => write!(f, "point not on variety within tolerance"),
            EngineError::Kernel(e) => write!(f, "kernel computation failed: {}", e),
        }
    }
}

impl std::error::Error for EngineError {}

impl From<KernelError> for EngineError {
    fn from(e: KernelError) -> Self {
        EngineError::Kernel(e)
    }
}

/// Runs the g-corner search until the stopping bound is reached.
///
/// Generators must already be translated to the origin. The initial bound is
/// twice the largest lead degree of the homogenized generators (their
/// maximum term degree); each new discovery at degree `d` raises the bound
/// to `2d` when that is larger.
pub fn find_gcorners<S: KernelScalar>(
    gens: &[Polynomial<S>],
    tol: f64,
    strategy: Strategy,
    order: &LocalOrder,
    options: &SearchOptions,
) -> Result<GCornerSearch<S>, EngineError> {
    let gens: Vec<Polynomial<S>> = gens.iter().filter(|f| !f.is_zero()).cloned().collect();
    if degree_zero_basis(&gens, tol, order).dim() == 0 {
        return Err(EngineError::PointNotOnVariety);
    }

    let mut d_max: u32 = 2 * gens
        .iter()
        .filter_map(Polynomial::max_degree)
        .max()
        .unwrap_or(0);
    let mut records: Vec<GCornerRecord> = Vec::new();
    let mut sduals: Vec<DualBasis<S>> = Vec::new();
    let mut truncated = false;

    // incremental state for the integration strategy
    let mut prev_slice: Option<DualBasis<S>> = None;
    let mut penultimate: Vec<DualFunctional<S>> = Vec::new();

    let mut d: u32 = 0;
    while d <= d_max {
        if let Some(cap) = options.max_degree {
            if d > cap {
                truncated = true;
                break;
            }
        }
        let sdual = match strategy {
            Strategy::SylvesterArray => sylvester_dual(&gens, d, tol, order)?,
            Strategy::MourrainHomogeneous => {
                let slice = match prev_slice.take() {
                    None => degree_zero_basis(&gens, tol, order),
                    Some(prev) => {
                        let frame = IntegrationFrame::homogeneous(&prev, &penultimate, order, tol)?;
                        let next = mourrain_extend(&frame, &gens, d, tol, order)?;
                        penultimate = prev.elements;
                        next
                    }
                };
                prev_slice = Some(slice.clone());
                slice
            }
        };

        let leads = sdual.lead_set(order);
        let mut new_records = Vec::new();
        // scan ring-descending so lower-degree corners are recorded first
        for m in order.columns_up_to_degree(d).into_iter().rev() {
            if leads.contains(&m) {
                continue;
            }
            if m.is_one() {
                return Err(EngineError::PointNotOnVariety);
            }
            if !covered_by_records(&records, &m, d) {
                new_records.push(GCornerRecord { corner: m, found_at: d });
            }
        }

        if !new_records.is_empty() {
            records.extend(new_records);
            if options.tighter_stop {
                // all corners up to the frontier are known, so the next one
                // (if any) appears by the largest pairwise lcm degree
                d_max = pairwise_lcm_bound(&records).max(d);
            } else if d_max < 2 * d {
                d_max = 2 * d;
            }
        }
        sduals.push(sdual);
        d += 1;
    }

    Ok(GCornerSearch {
        records,
        sduals,
        reached_degree: d.saturating_sub(1),
        truncated,
    })
}

/// Sharper stopping bound: the largest total degree of a pairwise lcm of
/// the homogenized corners found so far.
fn pairwise_lcm_bound(records: &[GCornerRecord]) -> u32 {
    let mut bound = 0;
    for (i, a) in records.iter().enumerate() {
        for b in &records[i..] {
            let t_deg = (a.found_at - a.corner.degree()).max(b.found_at - b.corner.degree());
            let lcm_deg = a.corner.lcm(&b.corner).degree() + t_deg;
            bound = bound.max(lcm_deg);
        }
    }
    bound
}

/// The divisibility-minimal subset of the recorded corners: the g-corners
/// of the ideal itself. Sorted by degree, then lexicographically.
pub fn minimal_gcorners(records: &[GCornerRecord]) -> Vec<Monomial> {
    let corners: Vec<&Monomial> = records.iter().map(|r| &r.corner).collect();
    let mut minimal: Vec<Monomial> = corners
        .iter()
        .filter(|c| !corners.iter().any(|other| *other != **c && other.divides(c)))
        .map(|c| (*c).clone())
        .collect();
    minimal.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| b.exponents().cmp(a.exponents()))
    });
    minimal
}

/// Whether a monomial lies in the truncated cone of some record at degree
/// `d`: a corner `c` found at degree `d_c` explains the missing multiples
/// `m` with `deg(m / c) <= d - d_c`.
pub fn covered_by_records(records: &[GCornerRecord], m: &Monomial, d: u32) -> bool {
    records.iter().any(|rec| {
        rec.corner.divides(m)
            && m.divide(&rec.corner).unwrap().degree() <= d.saturating_sub(rec.found_at)
    })
}
