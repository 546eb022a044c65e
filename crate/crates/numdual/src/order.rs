//! Local monomial orders.
//!
//! A local order is a multiplicative total order on monomials with `1 > x_i`
//! for every variable. All orders here are anti-graded: a strictly smaller
//! total degree means a strictly greater monomial. The order on dual
//! monomials is the reverse of the order on ring monomials.

use std::cmp::Ordering;

use crate::monomial::{monomials_up_to_degree, Monomial};

/// Tie-break applied between monomials of equal total degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Tiebreak {
    /// Lexicographic with `x1 > x2 > ... > xn`.
    Lex,
    /// Reverse lexicographic: smaller exponent in the last differing
    /// variable wins.
    RevLex,
}

impl Tiebreak {
    fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            Tiebreak::Lex => {
                for (ea, eb) in a.exponents().iter().zip(b.exponents()) {
                    match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            Tiebreak::RevLex => {
                for (ea, eb) in a.exponents().iter().zip(b.exponents()).rev() {
                    match eb.cmp(ea) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// An anti-graded local order on monomials in `nvars` variables.
///
/// When `homog_first` is set, variable 0 is a homogenizing variable that
/// outranks the others inside a degree class: among monomials of equal total
/// degree the one with the greater exponent of variable 0 is greater. This
/// extension keeps lead terms compatible with dehomogenization and is used
/// by the homogenization test harness and the exact oracle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LocalOrder {
    nvars: usize,
    tiebreak: Tiebreak,
    homog_first: bool,
}

impl LocalOrder {
    pub fn new(nvars: usize, tiebreak: Tiebreak) -> Self {
        LocalOrder { nvars, tiebreak, homog_first: false }
    }

    /// The default order: anti-graded lexicographic.
    pub fn antigraded_lex(nvars: usize) -> Self {
        Self::new(nvars, Tiebreak::Lex)
    }

    /// The extension of `self` to one more variable `t` (at index 0) with
    /// `t > x_i` inside each degree class.
    pub fn extended(&self) -> Self {
        LocalOrder {
            nvars: self.nvars + 1,
            tiebreak: self.tiebreak,
            homog_first: true,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn tiebreak(&self) -> Tiebreak {
        self.tiebreak
    }

    /// Compares two ring monomials under the local order.
    ///
    /// `Greater` means `a > b`, i.e. `a` comes earlier in a power series
    /// expansion; lower total degree always wins.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), self.nvars, "monomial arity mismatch");
        assert_eq!(b.nvars(), self.nvars, "monomial arity mismatch");
        // anti-graded: smaller degree => greater monomial
        match a.degree().cmp(&b.degree()) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
        if self.homog_first {
            match a.exponent(0).cmp(&b.exponent(0)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        self.tiebreak.compare(a, b)
    }

    /// Compares two dual monomials under the reversed order: `da > db` here
    /// exactly when the corresponding ring monomials satisfy `a < b`.
    pub fn compare_dual(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare(b, a)
    }

    /// All monomials of degree at most `d`, sorted descending under the dual
    /// order (equivalently ascending under the ring order, least first).
    ///
    /// This is the column layout of every coefficient matrix in the crate:
    /// the lead term of a dual functional is its leftmost nonzero column.
    pub fn columns_up_to_degree(&self, d: u32) -> Vec<Monomial> {
        let mut cols = monomials_up_to_degree(self.nvars, d);
        cols.sort_by(|a, b| self.compare(a, b));
        cols
    }

    /// All monomials of degree exactly `d`, sorted like
    /// [`Self::columns_up_to_degree`].
    pub fn columns_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut cols = crate::monomial::monomials_of_degree(self.nvars, d);
        cols.sort_by(|a, b| self.compare(a, b));
        cols
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn one_is_greatest() {
        let ord = LocalOrder::antigraded_lex(2);
        assert_eq!(ord.compare(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[0, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn anti_graded_before_tiebreak() {
        let ord = LocalOrder::antigraded_lex(2);
        // deg 2 < deg 5 so x^2 > x*y^3
        assert_eq!(ord.compare(&m(&[2, 0]), &m(&[1, 3])), Ordering::Greater);
        // equal degree: lex with x > y, so x*y > y^2
        assert_eq!(ord.compare(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn dual_order_reverses() {
        let ord = LocalOrder::antigraded_lex(2);
        // y^3 < x in the ring, so dy^3 > dx among duals
        assert_eq!(ord.compare(&m(&[0, 3]), &m(&[1, 0])), Ordering::Less);
        assert_eq!(ord.compare_dual(&m(&[0, 3]), &m(&[1, 0])), Ordering::Greater);
    }

    #[test]
    fn extended_order_prefers_t() {
        let base = LocalOrder::antigraded_lex(2);
        let ext = base.extended();
        // t^2 x^2 vs x y^3 (exponents [t, x, y]): both degree 4, t-degree wins
        assert_eq!(ext.compare(&m(&[2, 2, 0]), &m(&[0, 1, 3])), Ordering::Greater);
        // lower degree still dominates
        assert_eq!(ext.compare(&m(&[0, 1, 0]), &m(&[3, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn column_layout_matches_macaulay_example() {
        // For n = 2, d = 3 the dual-descending columns are the reverse of
        // 1, dx, dy, dx^2, dx dy, dy^2, dx^3, dx^2 dy, dx dy^2, dy^3.
        let ord = LocalOrder::antigraded_lex(2);
        let cols = ord.columns_up_to_degree(3);
        assert_eq!(cols.len(), 10);
        assert_eq!(cols[0], m(&[0, 3]));
        assert_eq!(cols[1], m(&[1, 2]));
        assert_eq!(cols[9], m(&[0, 0]));
        assert_eq!(cols[8], m(&[1, 0]));
    }
}
