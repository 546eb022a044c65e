//! Exponent-vector monomials.

use std::fmt;

/// A monomial in `n` variables, stored as its exponent vector.
///
/// The derived `Ord` is a plain lexicographic order on the exponent vector
/// and is used only for canonical storage (term maps); all semantic
/// comparisons go through [`crate::order::LocalOrder`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial 1.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The single variable `x_i` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Whether `self` divides `other` componentwise.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, or `None` when `self` does not divide `other`.
    pub fn divide(&self, divisor: &Self) -> Option<Self> {
        if !divisor.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// Removes the variable at `index` (used when dehomogenizing).
    pub fn without_var(&self, index: usize) -> Self {
        let mut exps = self.exps.clone();
        exps.remove(index);
        Monomial { exps }
    }

    /// Inserts a variable with the given exponent at `index`.
    pub fn with_var(&self, index: usize, exp: u32) -> Self {
        let mut exps = self.exps.clone();
        exps.insert(index, exp);
        Monomial { exps }
    }

    /// Renders the monomial with the given variable names, e.g. `x^2*y`.
    pub fn format(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 1 {
                parts.push(names[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", names[i], e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.exps.len()).map(|i| format!("x{}", i)).collect();
        write!(f, "{}", self.format(&names))
    }
}

/// All monomials of total degree exactly `d` in `nvars` variables.
///
/// Enumeration order is lexicographic-descending on the exponent vector;
/// callers that need an order-specific arrangement sort afterwards.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill(&mut out, &mut current, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, var: usize, remaining: u32) {
    if var + 1 == current.len() {
        current[var] = remaining;
        out.push(Monomial::new(current.clone()));
        return;
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        fill(out, current, var + 1, remaining - e);
        current[var] = 0;
    }
}

/// All monomials of total degree at most `d`, grouped by ascending degree.
pub fn monomials_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for deg in 0..=d {
        out.extend(monomials_of_degree(nvars, deg));
    }
    out
}
