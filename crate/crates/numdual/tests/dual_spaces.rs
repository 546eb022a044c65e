//! Cross-checks between the three dual-space constructions and the
//! complementarity/nesting laws they must satisfy.

mod common;

use common::*;
use numdual::kernel::DualBasis;
use numdual::macaulay::{macaulay_array, truncated_dual};
use numdual::monomial::Monomial;
use numdual::mourrain::mourrain_dual;
use numdual::oracle::exact_kernel;
use numdual::order::LocalOrder;
use numdual::scalar::{Scalar, C64, Q};
use numdual::sylvester::{embedded_truncated_dual, sylvester_array, sylvester_dual};

#[test]
fn truncated_duals_are_nested() {
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        let mut previous: Option<DualBasis<Q>> = None;
        for d in 0..=5 {
            let basis = truncated_dual(&sys.gens_q, d, 1e-12, &order).unwrap();
            if let Some(prev) = previous {
                let leads = basis.lead_set(&order);
                for lead in prev.lead_set(&order) {
                    assert!(leads.contains(&lead), "nesting violated at degree {}", d);
                }
                assert!(basis.dim() >= prev.dim());
            }
            previous = Some(basis);
        }
    }
}

#[test]
fn hilbert_function_from_dimension_differences() {
    // dim D^(d) - dim D^(d-1) counts staircase-complement monomials of
    // degree d, with corners taken from the exact oracle
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        let mut prev_dim = 0usize;
        for d in 0..=5 {
            let basis = truncated_dual(&sys.gens_q, d, 1e-12, &order).unwrap();
            let outside = monomial_count_outside(&sys.oracle_corners, sys.nvars, d);
            assert_eq!(
                basis.dim() - prev_dim,
                outside,
                "Hilbert value mismatch at degree {}",
                d
            );
            prev_dim = basis.dim();
        }
    }
}

fn monomial_count_outside(corners: &[Monomial], nvars: usize, d: u32) -> usize {
    numdual::monomial::monomials_of_degree(nvars, d)
        .into_iter()
        .filter(|m| !corners.iter().any(|c| c.divides(m)))
        .count()
}

#[test]
fn complementarity_against_oracle_staircase() {
    // lead(D^(d)) is exactly the complement of the initial ideal up to d
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        for d in 0..=6 {
            let basis = truncated_dual(&sys.gens_q, d, 1e-12, &order).unwrap();
            let leads = sorted(basis.lead_set(&order).into_iter().collect());
            let expected = staircase_complement(&sys.oracle_corners, d, &order);
            assert_eq!(leads, expected, "complementarity failed at degree {}", d);
        }
    }
}

#[test]
fn mourrain_plain_equals_macaulay() {
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        for d in 0..=6 {
            let a = truncated_dual(&sys.gens_c, d, 1e-6, &order).unwrap();
            let b = mourrain_dual(&sys.gens_c, d, 1e-6, &order, false).unwrap();
            assert_eq!(a.dim(), b.dim(), "dimension mismatch at degree {}", d);
            assert_eq!(a.lead_set(&order), b.lead_set(&order), "lead sets differ at degree {}", d);
        }
    }
}

#[test]
fn mourrain_homogeneous_equals_sylvester() {
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        for d in 0..=6 {
            let a = sylvester_dual(&sys.gens_c, d, 1e-8, &order).unwrap();
            let b = mourrain_dual(&sys.gens_c, d, 1e-8, &order, true).unwrap();
            assert_eq!(a.dim(), b.dim(), "dimension mismatch at degree {}", d);
            assert_eq!(a.lead_set(&order), b.lead_set(&order), "lead sets differ at degree {}", d);
        }
    }
}

#[test]
fn homogenization_harness_matches_sylvester() {
    // psi of the degree-d slice of the homogenized dual equals the
    // Sylvester dual, computed without the extra variable
    let order2 = LocalOrder::antigraded_lex(2);
    for d in 0..=6 {
        let a = sylvester_dual(&main_example_c64(), d, 1e-10, &order2).unwrap();
        let b = homogenized_slice_dual(&main_example_c64(), d, 1e-10, &order2);
        assert_eq!(a.dim(), b.dim(), "main example dimension at degree {}", d);
        assert_eq!(a.lead_set(&order2), b.lead_set(&order2));
    }
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        for d in 0..=6 {
            let a = sylvester_dual(&sys.gens_c, d, 1e-8, &order).unwrap();
            let b = homogenized_slice_dual(&sys.gens_c, d, 1e-8, &order);
            assert_eq!(a.dim(), b.dim(), "dimension mismatch at degree {}", d);
            assert_eq!(a.lead_set(&order), b.lead_set(&order), "lead sets differ at degree {}", d);
        }
    }
}

#[test]
fn truncated_dual_sits_inside_sylvester_dual() {
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        let max_ecart = sys
            .gens_q
            .iter()
            .filter_map(numdual::poly::Polynomial::ecart)
            .max()
            .unwrap_or(0);
        for d in 0..=5 {
            let sdual = sylvester_dual(&sys.gens_q, d, 1e-12, &order).unwrap();
            let tdual = truncated_dual(&sys.gens_q, d, 1e-12, &order).unwrap();
            let sleads = sdual.lead_set(&order);
            for lead in tdual.lead_set(&order) {
                assert!(sleads.contains(&lead), "D^(d) lead missing from S^(d) at degree {}", d);
            }
            // the elements with lead degree <= d - e recover D^(d-e)
            let embedded = embedded_truncated_dual(&sdual, max_ecart, &order);
            let direct = truncated_dual(&sys.gens_q, d.saturating_sub(max_ecart), 1e-12, &order).unwrap();
            assert_eq!(embedded.dim(), direct.dim());
            assert_eq!(embedded.lead_set(&order), direct.lead_set(&order));
        }
    }
}

#[test]
fn exact_and_numerical_kernels_agree_in_dimension() {
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        for d in 0..=4 {
            let mq = macaulay_array(&sys.gens_q, d, &order);
            let exact_dim = exact_kernel(&mq).len();
            let mc = macaulay_array(&sys.gens_c, d, &order);
            let num_dim = mc.kernel(1e-8).unwrap().len();
            assert_eq!(exact_dim, num_dim, "Macaulay kernel dimension at degree {}", d);

            let sq = sylvester_array(&sys.gens_q, d, &order);
            let sc = sylvester_array(&sys.gens_c, d, &order);
            assert_eq!(exact_kernel(&sq).len(), sc.kernel(1e-8).unwrap().len());
        }
    }
}

#[test]
fn macaulay_example_exact_kernel() {
    let order = LocalOrder::antigraded_lex(2);
    let m3 = macaulay_array(&mac_example_q(), 3, &order);
    assert_eq!(exact_kernel(&m3).len(), 4);
    let s3 = sylvester_array(&mac_example_q(), 3, &order);
    assert_eq!(exact_kernel(&s3).len(), 6);
}

#[test]
fn sylvester_residuals_stay_bounded() {
    // every kernel vector annihilates its matrix within the documented bound
    for sys in regression_systems(20) {
        let order = LocalOrder::antigraded_lex(sys.nvars);
        for d in 0..=5 {
            let matrix = sylvester_array(&sys.gens_c, d, &order);
            if matrix.nrows() == 0 {
                continue;
            }
            let tol = 1e-10;
            let kernel = matrix.kernel(tol).unwrap();
            let sigma_max = operator_scale(&matrix);
            for v in &kernel {
                let norm_v: f64 = v.iter().map(|c| c.magnitude() * c.magnitude()).sum::<f64>().sqrt();
                let mut residual: f64 = 0.0;
                for i in 0..matrix.nrows() {
                    let mut acc = C64::zero();
                    for j in 0..matrix.ncols() {
                        acc += *matrix.entry(i, j) * v[j];
                    }
                    residual += acc.norm_sqr();
                }
                let residual = residual.sqrt();
                assert!(
                    residual <= 10.0 * tol * sigma_max * norm_v.max(1e-300),
                    "residual {:e} too large at degree {}",
                    residual,
                    d
                );
            }
        }
    }
}

/// A lower bound on the top singular value (Frobenius norm over the square
/// root of the rank bound); asserting the residual inequality against this
/// implies it against the true sigma_max.
fn operator_scale(m: &numdual::matrix::CoefficientMatrix<C64>) -> f64 {
    let frobenius = m
        .entries()
        .iter()
        .map(|c| c.norm_sqr())
        .sum::<f64>()
        .sqrt();
    frobenius / (m.nrows().min(m.ncols()).max(1) as f64).sqrt()
}

use num_traits::Zero;
