//! Property tests for the algebraic core: order laws, homogenization,
//! duality identities, reduction idempotence, kernel contracts and the
//! parser round trip.

mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;

use numdual::dual::DualFunctional;
use numdual::input::parse_polynomial;
use numdual::kernel::{reduce_spanning_set, svd_kernel};
use numdual::monomial::Monomial;
use numdual::oracle::exact_kernel_basis;
use numdual::order::{LocalOrder, Tiebreak};
use numdual::poly::Polynomial;
use numdual::scalar::{Scalar, C64, Q};

fn monomial_strategy(nvars: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..6, nvars).prop_map(Monomial::new)
}

fn poly_strategy(nvars: usize) -> impl Strategy<Value = Polynomial<Q>> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -5i64..=5), 0..6).prop_map(
        move |terms| {
            Polynomial::from_terms(
                nvars,
                terms
                    .into_iter()
                    .map(|(e, c)| (Monomial::new(e), Q::from_int(c))),
            )
        },
    )
}

fn dual_strategy(nvars: usize) -> impl Strategy<Value = DualFunctional<Q>> {
    prop::collection::vec((prop::collection::vec(0u32..4, nvars), -5i64..=5), 0..6).prop_map(
        move |terms| {
            DualFunctional::from_terms(
                nvars,
                terms
                    .into_iter()
                    .map(|(e, c)| (Monomial::new(e), Q::from_int(c))),
            )
        },
    )
}

fn orders() -> Vec<LocalOrder> {
    vec![
        LocalOrder::new(3, Tiebreak::Lex),
        LocalOrder::new(3, Tiebreak::RevLex),
        LocalOrder::new(3, Tiebreak::Lex).extended(),
    ]
}

proptest! {
    #[test]
    fn order_laws(a in monomial_strategy(3), b in monomial_strategy(3), c in monomial_strategy(3), m in monomial_strategy(3)) {
        for order in orders().iter().filter(|o| o.nvars() == 3) {
            // antisymmetry and totality
            prop_assert_eq!(order.compare(&a, &b), order.compare(&b, &a).reverse());
            prop_assert_eq!(order.compare(&a, &b) == Ordering::Equal, a == b);
            // transitivity
            if order.compare(&a, &b) != Ordering::Less && order.compare(&b, &c) != Ordering::Less {
                prop_assert_ne!(order.compare(&a, &c), Ordering::Less);
            }
            // multiplicativity
            prop_assert_eq!(order.compare(&a, &b), order.compare(&a.mul(&m), &b.mul(&m)));
            // anti-graded
            if a.degree() < b.degree() {
                prop_assert_eq!(order.compare(&a, &b), Ordering::Greater);
            }
            // 1 > x_i
            let one = Monomial::one(3);
            for i in 0..3 {
                prop_assert_eq!(order.compare(&one, &Monomial::var(3, i)), Ordering::Greater);
            }
            // dual order is the reverse
            prop_assert_eq!(order.compare(&a, &b), order.compare_dual(&a, &b).reverse());
        }
    }

    #[test]
    fn homogenization_round_trip(f in poly_strategy(2)) {
        if let Some((fh, ecart)) = f.homogenize() {
            prop_assert_eq!(fh.dehomogenize(), f.clone());
            // the homogenization is homogeneous and its ecart readback holds
            let degs: Vec<u32> = fh.terms().map(|(m, _)| m.degree()).collect();
            prop_assert!(degs.windows(2).all(|w| w[0] == w[1]));
            prop_assert_eq!(ecart == 0, f.max_degree() == f.min_degree());
            prop_assert_eq!(ecart, f.ecart().unwrap());
        }
    }

    #[test]
    fn derivative_is_adjoint_to_multiplication(p in dual_strategy(3), f in poly_strategy(3), i in 0usize..3) {
        let xf = f.mul_term(&Monomial::var(3, i), &Q::from_int(1));
        prop_assert_eq!(p.apply(&xf), p.derivative(i).apply(&f));
    }

    #[test]
    fn derivatives_commute(p in dual_strategy(3), i in 0usize..3, j in 0usize..3) {
        prop_assert_eq!(p.derivative(i).derivative(j), p.derivative(j).derivative(i));
    }

    #[test]
    fn reduce_preserves_dimension_and_is_idempotent(
        elements in prop::collection::vec(dual_strategy(2), 1..5)
    ) {
        let order = LocalOrder::antigraded_lex(2);
        let degree = 3 * 3;
        let basis = reduce_spanning_set(&elements, degree, &order, 1e-12);
        // distinct leads, unit lead coefficients
        let leads = basis.lead_set(&order);
        prop_assert_eq!(leads.len(), basis.dim());
        for p in &basis.elements {
            if let Some(c) = p.lead_coefficient(&order) {
                prop_assert_eq!(c.clone(), Q::from_int(1));
            }
        }
        // idempotence on lead sets and dimension
        let again = reduce_spanning_set(&basis.elements, degree, &order, 1e-12);
        prop_assert_eq!(again.dim(), basis.dim());
        prop_assert_eq!(again.lead_set(&order), leads);
    }

    #[test]
    fn parser_round_trips_printed_polynomials(f in poly_strategy(2)) {
        let order = LocalOrder::antigraded_lex(2);
        let names = vec!["x".to_string(), "y".to_string()];
        let printed = f.format(&names, &order);
        let reparsed = parse_polynomial::<Q>(&printed, &names, 1).unwrap();
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn svd_kernel_contract(rows in 1usize..5, cols in 1usize..6, seed in prop::collection::vec(-4i64..=4, 30)) {
        let entries: Vec<C64> = (0..rows * cols)
            .map(|k| C64::new(seed[k % seed.len()] as f64, 0.0))
            .collect();
        let tol = 1e-10;
        let kernel = svd_kernel(rows, cols, &entries, tol).unwrap();

        // kernel vectors are orthonormal and annihilate the matrix
        for (vi, v) in kernel.iter().enumerate() {
            let norm: f64 = v.iter().map(|c| c.norm_sqr()).sum();
            prop_assert!((norm - 1.0).abs() < 1e-8);
            for w in kernel.iter().skip(vi + 1) {
                let dot: C64 = v.iter().zip(w).map(|(a, b)| a.conj() * *b).sum();
                prop_assert!(dot.norm() < 1e-8);
            }
            let scale: f64 = entries.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt().max(1.0);
            for i in 0..rows {
                let mut acc = C64::new(0.0, 0.0);
                for j in 0..cols {
                    acc += entries[i * cols + j] * v[j];
                }
                prop_assert!(acc.norm() <= 10.0 * tol * scale);
            }
        }

        // dimension agrees with the exact kernel of the same integer matrix
        let exact_entries: Vec<Q> = (0..rows * cols)
            .map(|k| Q::from_int(seed[k % seed.len()]))
            .collect();
        let exact_dim = exact_kernel_basis(rows, cols, &exact_entries).len();
        prop_assert_eq!(kernel.len(), exact_dim);
    }
}
