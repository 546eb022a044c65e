//! Dual functionals: finite combinations of coefficient-extraction
//! functionals on the local ring.
//!
//! A term `d^a` (exponent vector `a` over the dual variables) extracts the
//! coefficient of `x^a`. Dual monomials carry the reverse of the ring order:
//! `d^a` outranks `d^b` exactly when `x^a < x^b`, so the lead term of a dual
//! functional sits at the ring-least monomial in its support.

use std::collections::BTreeMap;


use crate::monomial::Monomial;
use crate::order::LocalOrder;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Debug)]
pub struct DualFunctional<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> DualFunctional<S> {
    pub fn zero_functional(nvars: usize) -> Self {
        DualFunctional { nvars, terms: BTreeMap::new() }
    }

    /// The constant functional `1` (extracts the constant term).
    pub fn unit(nvars: usize) -> Self {
        let mut p = Self::zero_functional(nvars);
        p.add_term(Monomial::one(nvars), S::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut p = Self::zero_functional(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        assert_eq!(m.nvars(), self.nvars, "dual monomial arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero_functional(self.nvars);
        }
        DualFunctional {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Applies the functional to a polynomial: pairs equal exponents.
    pub fn apply(&self, f: &Polynomial<S>) -> S {
        assert_eq!(f.nvars(), self.nvars, "arity mismatch");
        let mut acc = S::zero();
        for (m, c) in self.terms() {
            let fc = f.coefficient(m);
            if !fc.is_zero() {
                acc = acc + c.clone() * fc;
            }
        }
        acc
    }

    /// The derivative map `d_i`: divides each term by `d_i`, dropping terms
    /// not divisible by it. Satisfies `p(x_i f) = (d_i p)(f)`.
    pub fn derivative(&self, i: usize) -> Self {
        let var = Monomial::var(self.nvars, i);
        let mut out = Self::zero_functional(self.nvars);
        for (m, c) in self.terms() {
            if let Some(q) = m.divide(&var) {
                out.add_term(q, c.clone());
            }
        }
        out
    }

    /// Multiplies every term by `d_i` (the integration shift).
    pub fn shift(&self, i: usize) -> Self {
        let var = Monomial::var(self.nvars, i);
        DualFunctional {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(&var), c.clone()))
                .collect(),
        }
    }

    /// Keeps only terms with zero exponents in all variables of index > i.
    ///
    /// This realizes the restriction `x_{i+1} = ... = x_n = 0` in the
    /// integration-method candidate formula.
    pub fn truncate_vars_above(&self, i: usize) -> Self {
        DualFunctional {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| (i + 1..self.nvars).all(|j| m.exponent(j) == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only terms of total degree at most `d`.
    pub fn truncate_degree(&self, d: u32) -> Self {
        DualFunctional {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The lead dual monomial `in_succ(p)`: greatest under the reversed
    /// order, i.e. the ring-least monomial in the support.
    pub fn lead_monomial(&self, order: &LocalOrder) -> Option<&Monomial> {
        self.terms.keys().max_by(|a, b| order.compare_dual(a, b))
    }

    pub fn lead_coefficient(&self, order: &LocalOrder) -> Option<&S> {
        self.lead_monomial(order).map(|m| &self.terms[m])
    }

    /// Degree of the lead dual monomial.
    pub fn lead_degree(&self, order: &LocalOrder) -> Option<u32> {
        self.lead_monomial(order).map(Monomial::degree)
    }

    pub fn norm(&self) -> f64 {
        self.terms
            .values()
            .map(|c| {
                let m = c.magnitude();
                m * m
            })
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_coefficient_magnitude(&self) -> f64 {
        self.terms
            .values()
            .map(Scalar::magnitude)
            .fold(0.0, f64::max)
    }

    /// Drops coefficients of magnitude at most `tol` times the largest
    /// coefficient magnitude. Exact fields are returned unchanged.
    pub fn cleanup(&self, tol: f64) -> Self {
        if S::EXACT || self.is_zero() {
            return self.clone();
        }
        let threshold = tol * self.max_coefficient_magnitude();
        DualFunctional {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.magnitude() > threshold)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient vector over the given column monomials.
    pub fn to_vector(&self, columns: &[Monomial]) -> Vec<S> {
        columns.iter().map(|m| self.coefficient(m)).collect()
    }

    pub fn from_vector(nvars: usize, columns: &[Monomial], values: &[S]) -> Self {
        assert_eq!(columns.len(), values.len());
        Self::from_terms(
            nvars,
            columns
                .iter()
                .zip(values)
                .map(|(m, v)| (m.clone(), v.clone())),
        )
    }

    /// Renders in d-variable notation, lead term first.
    pub fn format(&self, names: &[String], order: &LocalOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let dual_names: Vec<String> = names.iter().map(|n| format!("∂{}", n)).collect();
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| order.compare_dual(b, a));
        let mut out = String::new();
        for (i, m) in monos.iter().enumerate() {
            let cstr = crate::poly::format_coefficient(&self.terms[*m]);
            let is_neg = cstr.starts_with('-');
            let body = if is_neg { &cstr[1..] } else { &cstr[..] };
            if i == 0 {
                if is_neg {
                    out.push('-');
                }
            } else if is_neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if m.is_one() {
                out.push_str(body);
            } else if body == "1" {
                out.push_str(&m.format(&dual_names));
            } else {
                out.push_str(body);
                out.push('*');
                out.push_str(&m.format(&dual_names));
            }
        }
        out
    }
}
