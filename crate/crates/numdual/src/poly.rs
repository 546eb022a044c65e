//! Sparse multivariate polynomials over a pluggable scalar field.

use std::collections::BTreeMap;


use crate::monomial::Monomial;
use crate::order::LocalOrder;
use crate::scalar::Scalar;

/// A polynomial as a term map from monomials to nonzero coefficients.
///
/// Exact zeros are never stored; approximate coefficients are only dropped
/// by an explicit [`Polynomial::cleanup`] with a caller-supplied tolerance.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero_poly(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero_poly(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero_poly(nvars);
        p.add_term(Monomial::var(nvars, i), S::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut p = Self::zero_poly(nvars);
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

    /// Adds `c * m`, removing the term if the sum cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: S) {
        assert_eq!(m.nvars(), self.nvars, "monomial arity mismatch");
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

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero_poly(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero_poly(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(t, k)| (t.mul(m), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero_poly(self.nvars);
        for (m, c) in other.terms() {
            for (t, k) in self.terms() {
                out.add_term(t.mul(m), k.clone() * c.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.nvars, S::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Maximum total degree of any term; `None` for the zero polynomial.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Minimum total degree of any term; `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// The lead monomial `in_>(f)`: the order-greatest monomial present.
    pub fn lead_monomial(&self, order: &LocalOrder) -> Option<&Monomial> {
        self.terms
            .keys()
            .max_by(|a, b| order.compare(a, b))
    }

    pub fn lead_coefficient(&self, order: &LocalOrder) -> Option<&S> {
        self.lead_monomial(order).map(|m| &self.terms[m])
    }

    /// Degree spread: highest term degree minus lowest term degree.
    ///
    /// Under an anti-graded order this equals the t-degree of the lead term
    /// of the homogenization.
    pub fn ecart(&self) -> Option<u32> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    /// Euclidean norm of the coefficient vector, as f64.
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
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.magnitude() > threshold)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x_i -> x_i + b_i`, expanding exactly in the scalar field.
    pub fn translate(&self, point: &[S]) -> Self {
        assert_eq!(point.len(), self.nvars, "point arity mismatch");
        let mut out = Self::zero_poly(self.nvars);
        for (m, c) in self.terms() {
            let mut term = Self::constant(self.nvars, c.clone());
            for (i, b) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let shifted = if b.is_zero() {
                    Self::variable(self.nvars, i)
                } else {
                    let mut lin = Self::variable(self.nvars, i);
                    lin.add_term(Monomial::one(self.nvars), b.clone());
                    lin
                };
                term = term.mul(&shifted.pow(e));
            }
            out = out.add(&term);
        }
        out
    }

    /// Homogenizes with a fresh variable `t` at index 0, returning the
    /// homogenization and the ecart of `self` (the t-degree of the lead term
    /// of the result under the extended order).
    ///
    /// Returns `None` for the zero polynomial.
    pub fn homogenize(&self) -> Option<(Polynomial<S>, u32)> {
        let top = self.max_degree()?;
        let ecart = self.ecart().expect("nonzero polynomial has an ecart");
        let mut out = Polynomial::zero_poly(self.nvars + 1);
        for (m, c) in self.terms() {
            out.add_term(m.with_var(0, top - m.degree()), c.clone());
        }
        Some((out, ecart))
    }

    /// Sets the homogenizing variable (index 0) to 1, dropping it.
    pub fn dehomogenize(&self) -> Polynomial<S> {
        assert!(self.nvars >= 1, "no variable to dehomogenize");
        let mut out = Polynomial::zero_poly(self.nvars - 1);
        for (m, c) in self.terms() {
            out.add_term(m.without_var(0), c.clone());
        }
        out
    }

    /// Renders the polynomial with explicit `*` and `^`, terms in descending
    /// order under `order`.
    pub fn format(&self, names: &[String], order: &LocalOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| order.compare(b, a));
        let mut out = String::new();
        for (i, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let cstr = format_coefficient(c);
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
                out.push_str(&m.format(names));
            } else {
                out.push_str(body);
                out.push('*');
                out.push_str(&m.format(names));
            }
        }
        out
    }
}

/// Rounds to 12 significant digits for display, taming float residue
/// without hiding genuinely small values.
fn round_display(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let scale = 10f64.powi(11 - x.abs().log10().floor() as i32);
    (x * scale).round() / scale
}

/// Formats a coefficient compactly; complex values with a nonzero imaginary
/// part print both components. Components more than 12 orders of magnitude
/// below the modulus render as zero.
pub fn format_coefficient<S: Scalar>(c: &S) -> String {
    if S::EXACT {
        return format!("{}", c);
    }
    let (mut re, mut im) = c.approx_parts();
    let mag = c.magnitude();
    if re.abs() < 1e-12 * mag {
        re = 0.0;
    }
    if im.abs() < 1e-12 * mag {
        im = 0.0;
    }
    let (re, im) = (round_display(re), round_display(im));
    if im == 0.0 {
        format!("{}", re)
    } else if re == 0.0 {
        format!("{}*i", im)
    } else if im < 0.0 {
        format!("({}{}*i)", re, im)
    } else {
        format!("({}+{}*i)", re, im)
    }
}
