//! Shared helpers for the integration suites: polynomial constructors, the
//! explicit-homogenization harness, and a seeded generator of small random
//! systems with exact oracle ground truth.

#![allow(dead_code)]

use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use numdual::dual::DualFunctional;
use numdual::kernel::{reduce_lead_terms, DualBasis};
use numdual::matrix::{CoefficientMatrix, RowLabel};
use numdual::monomial::{monomials_of_degree, Monomial};
use numdual::oracle::{lead_monomials, local_buchberger, minimal_standard_basis, BuchbergerConfig};
use numdual::order::LocalOrder;
use numdual::poly::Polynomial;
use numdual::scalar::{rational_to_c64, KernelScalar, Scalar, C64, Q};

pub fn m(exps: &[u32]) -> Monomial {
    Monomial::new(exps.to_vec())
}

pub fn qp(nvars: usize, terms: &[(&[u32], i64)]) -> Polynomial<Q> {
    Polynomial::from_terms(
        nvars,
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.to_vec()), Q::from_int(*c))),
    )
}

pub fn to_c64(p: &Polynomial<Q>) -> Polynomial<C64> {
    Polynomial::from_terms(p.nvars(), p.terms().map(|(m, c)| (m.clone(), rational_to_c64(c))))
}

/// The ideal of the running example: `<x^2 - x y^3, x^4>`.
pub fn main_example_q() -> Vec<Polynomial<Q>> {
    vec![qp(2, &[(&[2, 0], 1), (&[1, 3], -1)]), qp(2, &[(&[4, 0], 1)])]
}

pub fn main_example_c64() -> Vec<Polynomial<C64>> {
    main_example_q().iter().map(to_c64).collect()
}

/// The Macaulay-array example generators `{x - y^3, x^2}`.
pub fn mac_example_q() -> Vec<Polynomial<Q>> {
    vec![qp(2, &[(&[1, 0], 1), (&[0, 3], -1)]), qp(2, &[(&[2, 0], 1)])]
}

/// Explicit-homogenization harness: the degree-exactly-`d` dual slice of the
/// homogenized ideal, computed with the extra variable and then
/// dehomogenized. The production pipeline never takes this path; the
/// Sylvester dual must match it degree by degree.
pub fn homogenized_slice_dual<S: KernelScalar>(
    gens: &[Polynomial<S>],
    d: u32,
    tol: f64,
    order: &LocalOrder,
) -> DualBasis<S> {
    let ext = order.extended();
    let hgens: Vec<Polynomial<S>> = gens
        .iter()
        .filter_map(|g| g.homogenize().map(|(h, _)| h))
        .collect();

    // columns: extended monomials of degree exactly d, dual-descending
    let columns = ext.columns_of_degree(d);
    let mut rows = Vec::new();
    for (gi, h) in hgens.iter().enumerate() {
        let hdeg = h.max_degree().expect("nonzero");
        if hdeg > d {
            continue;
        }
        for mult in monomials_of_degree(order.nvars() + 1, d - hdeg) {
            rows.push((
                RowLabel { generator: gi, multiplier: mult.clone() },
                h.mul_term(&mult, &S::one()),
            ));
        }
    }
    let matrix = CoefficientMatrix::from_rows(columns.clone(), rows);
    let kernel = matrix.kernel(tol).expect("harness kernel");

    // dehomogenize: drop the t-exponent of every dual term
    let elements: Vec<DualFunctional<S>> = kernel
        .into_iter()
        .map(|v| {
            DualFunctional::from_terms(
                order.nvars(),
                columns
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(mon, c)| (mon.without_var(0), c)),
            )
        })
        .collect();
    reduce_lead_terms(&elements, d, order, tol).expect("harness reduction")
}

/// A random system together with its exact oracle answers.
pub struct RegressionSystem {
    pub nvars: usize,
    pub gens_q: Vec<Polynomial<Q>>,
    pub gens_c: Vec<Polynomial<C64>>,
    pub oracle_basis: Vec<Polynomial<Q>>,
    /// Lead monomials of the minimal oracle standard basis: the g-corners.
    pub oracle_corners: Vec<Monomial>,
}

fn random_poly(rng: &mut StdRng, nvars: usize) -> Polynomial<Q> {
    let nterms = rng.gen_range(1..=3);
    let mut p = Polynomial::zero_poly(nvars);
    for _ in 0..nterms {
        let degree = rng.gen_range(1..=5u32);
        let mut exps = vec![0u32; nvars];
        for _ in 0..degree {
            exps[rng.gen_range(0..nvars)] += 1;
        }
        let mut coef = 0;
        while coef == 0 {
            coef = rng.gen_range(-3..=3);
        }
        p.add_term(Monomial::new(exps), Q::from_int(coef));
    }
    p
}

/// Generates `count` small systems (n <= 3, <= 3 generators, term degrees
/// <= 5 after products, rational coefficients, origin on the variety) whose
/// oracle standard basis is small enough for fast cross-checking. The seed
/// is fixed, so the suite is reproducible.
pub fn regression_systems(count: usize) -> &'static Vec<RegressionSystem> {
    static SYSTEMS: OnceLock<Vec<RegressionSystem>> = OnceLock::new();
    let out = SYSTEMS.get_or_init(|| {
        let mut rng = StdRng::seed_from_u64(0x00d7a1);
        let mut out = Vec::new();
        while out.len() < 24 {
            let nvars = rng.gen_range(1..=3);
            let ngens = rng.gen_range(1..=3);
            let gens_q: Vec<Polynomial<Q>> = (0..ngens)
                .map(|_| random_poly(&mut rng, nvars))
                .filter(|p| !p.is_zero())
                .collect();
            if gens_q.is_empty() {
                continue;
            }
            let order = LocalOrder::antigraded_lex(nvars);
            let config = BuchbergerConfig { degree_cap: 14, size_cap: 40 };
            let Ok(basis) = local_buchberger(&gens_q, &order, config) else {
                continue;
            };
            let minimal = minimal_standard_basis(&basis, &order);
            let corners = lead_monomials(&minimal, &order);
            if corners.is_empty() || corners.len() > 5 {
                continue;
            }
            if corners.iter().any(|c| c.degree() > 5) {
                continue;
            }
            // keep the search bound small: discovery degrees are capped by
            // corner degree plus the largest generator ecart
            let max_ecart = gens_q.iter().filter_map(Polynomial::ecart).max().unwrap_or(0);
            let max_corner = corners.iter().map(Monomial::degree).max().unwrap_or(0);
            if max_corner + max_ecart > 7 {
                continue;
            }
            let gens_c = gens_q.iter().map(to_c64).collect();
            out.push(RegressionSystem { nvars, gens_q, gens_c, oracle_basis: minimal, oracle_corners: corners });
        }
        out
    });
    assert!(out.len() >= count, "not enough regression systems generated");
    out
}

/// The staircase complement: monomials of degree <= d that no corner
/// divides (the expected dual lead set by the complementarity theorem).
pub fn staircase_complement(corners: &[Monomial], d: u32, order: &LocalOrder) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = order
        .columns_up_to_degree(d)
        .into_iter()
        .filter(|m| !corners.iter().any(|c| c.divides(m)))
        .collect();
    out.sort();
    out
}

pub fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
    v.sort();
    v
}
