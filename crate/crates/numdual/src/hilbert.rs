//! Hilbert functions, Hilbert polynomials, regularity bounds and the
//! dimension verdict, all derived from a minimal g-corner set.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::scalar::{Scalar, Q};

/// Inclusion-exclusion over corner subsets is exponential; past this many
/// corners the computation is refused.
pub const MAX_GCORNERS: usize = 20;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HilbertError {
    TooManyCorners { count: usize },
}

impl fmt::Display for HilbertError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HilbertError::TooManyCorners { count } => write!(
                f,
                "{} g-corners exceed the inclusion-exclusion limit of {}",
                count, MAX_GCORNERS
            ),
        }
    }
}

impl std::error::Error for HilbertError {}

/// Binomial coefficient `C(p, q)` with the convention that it vanishes for
/// `p < q`.
fn binomial(p: i64, q: u32) -> u64 {
    if p < q as i64 {
        return 0;
    }
    let mut num: u128 = 1;
    for k in 0..q as u128 {
        num = num * (p as u128 - k);
    }
    let mut den: u128 = 1;
    for k in 1..=q as u128 {
        den *= k;
    }
    (num / den) as u64
}

/// The Hilbert function at degree `d`: the number of degree-`d` monomials
/// outside the staircase, by inclusion-exclusion over corner subsets.
pub fn hilbert_value(gcorners: &[Monomial], nvars: usize, d: u32) -> Result<u64, HilbertError> {
    if gcorners.len() > MAX_GCORNERS {
        return Err(HilbertError::TooManyCorners { count: gcorners.len() });
    }
    let q = nvars as u32 - 1;
    let mut total: i128 = 0;
    for mask in 0u32..(1u32 << gcorners.len()) {
        let mut lcm = Monomial::one(nvars);
        for (i, c) in gcorners.iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = lcm.lcm(c);
            }
        }
        let sign: i128 = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        let p = d as i64 - lcm.degree() as i64 + nvars as i64 - 1;
        total += sign * binomial(p, q) as i128;
    }
    debug_assert!(total >= 0, "Hilbert value must be non-negative");
    Ok(total.max(0) as u64)
}

/// The Hilbert polynomial as exact rational coefficients (ascending powers
/// of the degree variable), valid for degrees at or above the tight
/// regularity bound.
fn hilbert_polynomial(gcorners: &[Monomial], nvars: usize) -> Vec<Q> {
    let q = nvars as u32 - 1;
    let mut acc = vec![Q::zero(); q as usize + 1];
    for mask in 0u32..(1u32 << gcorners.len()) {
        let mut lcm = Monomial::one(nvars);
        for (i, c) in gcorners.iter().enumerate() {
            if mask & (1 << i) != 0 {
                lcm = lcm.lcm(c);
            }
        }
        let negate = mask.count_ones() % 2 == 1;
        let shift = nvars as i64 - 1 - lcm.degree() as i64;
        let term = binomial_polynomial(q, shift);
        for (a, t) in acc.iter_mut().zip(term) {
            *a = if negate { a.clone() - t } else { a.clone() + t };
        }
    }
    while acc.last().map_or(false, Zero::is_zero) {
        acc.pop();
    }
    acc
}

/// `C(d + shift, q)` expanded as a polynomial in `d`:
/// `prod_{k=0}^{q-1} (d + shift - k) / q!`.
fn binomial_polynomial(q: u32, shift: i64) -> Vec<Q> {
    let mut coeffs = vec![Q::one()];
    for k in 0..q as i64 {
        let c = Q::from_int(shift - k);
        let mut next = vec![Q::zero(); coeffs.len() + 1];
        for (i, a) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + a.clone();
            next[i] = next[i].clone() + a.clone() * c.clone();
        }
        coeffs = next;
    }
    let mut fact = Q::one();
    for k in 1..=q as i64 {
        fact = fact * Q::from_int(k);
    }
    coeffs.into_iter().map(|c| c / fact.clone()).collect()
}

/// Evaluates rational polynomial coefficients at an integer point.
pub fn eval_polynomial(coeffs: &[Q], d: i64) -> Q {
    let x = Q::from_int(d);
    let mut acc = Q::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// Pretty-prints rational polynomial coefficients in the variable `d`.
pub fn format_polynomial(coeffs: &[Q]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        let body = if i == 0 {
            format!("{}", abs)
        } else if abs.is_one() {
            power_name(i)
        } else {
            format!("{}*{}", abs, power_name(i))
        };
        if parts.is_empty() {
            parts.push(if c.is_negative() { format!("-{}", body) } else { body });
        } else if c.is_negative() {
            parts.push(format!("- {}", body));
        } else {
            parts.push(format!("+ {}", body));
        }
    }
    parts.join(" ")
}

fn power_name(i: usize) -> String {
    if i == 1 {
        "d".to_string()
    } else {
        format!("d^{}", i)
    }
}

/// The Hilbert data derived from a minimal corner set: values up to the
/// reported regularity bound, the Hilbert polynomial, and the dimension of
/// the largest component through the point (-1 for an isolated point).
#[derive(Clone, PartialEq, Debug)]
pub struct HilbertData {
    pub gcorners: Vec<Monomial>,
    /// `H(0), ..., H(reported_bound - 1)`.
    pub values: Vec<u64>,
    /// Degree of the lcm of all corners (1 when there are none); the bound
    /// the reference sessions report.
    pub reported_bound: u32,
    /// The sharper bound `deg lcm - n + 1` (clamped at 0): the polynomial
    /// provably matches the Hilbert function from here on.
    pub tight_bound: u32,
    /// Exact rational coefficients, ascending powers.
    pub polynomial: Vec<Q>,
    /// `deg(polynomial) + 1`, or -1 when the polynomial is zero.
    pub dimension: i64,
}

pub fn hilbert_data(gcorners: &[Monomial], nvars: usize) -> Result<HilbertData, HilbertError> {
    if gcorners.len() > MAX_GCORNERS {
        return Err(HilbertError::TooManyCorners { count: gcorners.len() });
    }
    let lcm_all = gcorners
        .iter()
        .fold(Monomial::one(nvars), |acc, c| acc.lcm(c));
    let reported_bound = if gcorners.is_empty() { 1 } else { lcm_all.degree() };
    let tight_bound = (lcm_all.degree() as i64 - nvars as i64 + 1).max(0) as u32;
    let mut values = Vec::with_capacity(reported_bound as usize);
    for d in 0..reported_bound {
        values.push(hilbert_value(gcorners, nvars, d)?);
    }
    let polynomial = hilbert_polynomial(gcorners, nvars);
    let dimension = if polynomial.is_empty() {
        -1
    } else {
        polynomial.len() as i64
    };
    Ok(HilbertData {
        gcorners: gcorners.to_vec(),
        values,
        reported_bound,
        tight_bound,
        polynomial,
        dimension,
    })
}

/// Serializes rational coefficients as exact strings (`"3"`, `"-1/2"`).
pub fn polynomial_coeff_strings(coeffs: &[Q]) -> Vec<String> {
    coeffs.iter().map(|c| format!("{}", c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn cyclic4_hilbert_values() {
        let corners = vec![m(&[1, 0, 0, 0]), m(&[0, 1, 0, 0]), m(&[0, 0, 2, 0]), m(&[0, 0, 1, 1])];
        let got: Vec<u64> = (0..5)
            .map(|d| hilbert_value(&corners, 4, d).unwrap())
            .collect();
        assert_eq!(got, vec![1, 2, 1, 1, 1]);
    }

    #[test]
    fn empty_corner_set_counts_all_monomials() {
        for d in 0..6 {
            assert_eq!(hilbert_value(&[], 2, d).unwrap(), d as u64 + 1);
        }
    }

    #[test]
    fn main_example_corner_values() {
        // corners {x^2, x y^9}: H(d) = 2 for 1 <= d <= 9, then 1
        let corners = vec![m(&[2, 0]), m(&[1, 9])];
        assert_eq!(hilbert_value(&corners, 2, 0).unwrap(), 1);
        for d in 1..=9 {
            assert_eq!(hilbert_value(&corners, 2, d).unwrap(), 2, "at degree {}", d);
        }
        assert_eq!(hilbert_value(&corners, 2, 10).unwrap(), 1);
        assert_eq!(hilbert_value(&corners, 2, 15).unwrap(), 1);
    }

    #[test]
    fn embedded_curve_data() {
        let corners = vec![m(&[2, 0, 0]), m(&[1, 2, 0])];
        let data = hilbert_data(&corners, 3).unwrap();
        assert_eq!(data.reported_bound, 4);
        assert_eq!(data.values, vec![1, 3, 5, 6]);
        // polynomial d + 3
        assert_eq!(data.polynomial, vec![Q::from_int(3), Q::from_int(1)]);
        assert_eq!(data.dimension, 2);
        assert_eq!(format_polynomial(&data.polynomial), "d + 3");
        assert_eq!(data.tight_bound, 2);
    }

    #[test]
    fn cyclic4_data() {
        let corners = vec![m(&[1, 0, 0, 0]), m(&[0, 1, 0, 0]), m(&[0, 0, 2, 0]), m(&[0, 0, 1, 1])];
        let data = hilbert_data(&corners, 4).unwrap();
        assert_eq!(data.reported_bound, 5);
        assert_eq!(data.values, vec![1, 2, 1, 1, 1]);
        assert_eq!(data.polynomial, vec![Q::from_int(1)]);
        assert_eq!(data.dimension, 1);
        assert_eq!(format_polynomial(&data.polynomial), "1");
    }

    #[test]
    fn isolated_point_has_zero_polynomial() {
        let corners = vec![m(&[1, 0]), m(&[0, 1])];
        let data = hilbert_data(&corners, 2).unwrap();
        assert_eq!(data.reported_bound, 2);
        assert_eq!(data.values, vec![1, 0]);
        assert!(data.polynomial.is_empty());
        assert_eq!(data.dimension, -1);
        assert_eq!(format_polynomial(&data.polynomial), "0");
    }

    #[test]
    fn polynomial_matches_values_beyond_tight_bound() {
        let corner_sets: Vec<Vec<Monomial>> = vec![
            vec![m(&[2, 0]), m(&[1, 9])],
            vec![m(&[2, 0, 0]), m(&[1, 2, 0])],
            vec![m(&[3, 0]), m(&[0, 2])],
        ];
        for corners in corner_sets {
            let n = corners[0].nvars();
            let data = hilbert_data(&corners, n).unwrap();
            for d in data.tight_bound..=data.tight_bound + 5 {
                let direct = hilbert_value(&corners, n, d).unwrap();
                let from_poly = eval_polynomial(&data.polynomial, d as i64);
                assert_eq!(from_poly, Q::from_int(direct as i64), "degree {}", d);
            }
        }
    }

    #[test]
    fn corner_limit_enforced() {
        let corners: Vec<Monomial> = (0..21).map(|i| m(&[i + 1, 0])).collect();
        assert!(matches!(
            hilbert_value(&corners, 2, 3),
            Err(HilbertError::TooManyCorners { count: 21 })
        ));
    }
}
