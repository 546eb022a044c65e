//! Scalar fields: approximate complex numbers and exact rationals.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::kernel::KernelError;

/// Approximate complex scalars.
pub type C64 = Complex<f64>;

/// Exact rational scalars.
pub type Q = BigRational;

/// A field of coefficients.
///
/// Exact fields ignore tolerances entirely: a coefficient is negligible only
/// when it is zero. Approximate fields compare magnitudes against
/// caller-supplied thresholds; there is no global tolerance anywhere.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Whether arithmetic in this field is exact.
    const EXACT: bool;

    /// Absolute value (complex modulus), approximated as f64 for rationals.
    fn magnitude(&self) -> f64;

    /// Complex conjugate; the identity for real fields.
    fn conjugate(&self) -> Self;

    fn from_int(v: i64) -> Self;

    /// Exact embedding of a double (used by the approximate code paths).
    fn from_f64(v: f64) -> Self;

    /// Parses an unsigned integer/decimal/scientific literal such as
    /// `42`, `1.25` or `.53734e-17`. Exact fields parse it exactly.
    fn from_decimal(text: &str) -> Option<Self>;

    /// The imaginary unit, when the field contains one.
    fn imaginary_unit() -> Option<Self>;

    /// (real, imaginary) parts approximated as f64, for reporting.
    fn approx_parts(&self) -> (f64, f64);

    /// Negligibility under `threshold`; exact fields test for zero.
    fn negligible(&self, threshold: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= threshold
        }
    }

    fn is_finite(&self) -> bool {
        self.magnitude().is_finite()
    }
}

impl Scalar for C64 {
    const EXACT: bool = false;

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn conjugate(&self) -> Self {
        self.conj()
    }

    fn from_int(v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }

    fn from_f64(v: f64) -> Self {
        Complex::new(v, 0.0)
    }

    fn from_decimal(text: &str) -> Option<Self> {
        text.parse::<f64>().ok().map(|re| Complex::new(re, 0.0))
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(0.0, 1.0))
    }

    fn approx_parts(&self) -> (f64, f64) {
        (self.re, self.im)
    }
}

impl Scalar for Q {
    const EXACT: bool = true;

    fn magnitude(&self) -> f64 {
        self.to_f64().map(f64::abs).unwrap_or(f64::INFINITY)
    }

    fn conjugate(&self) -> Self {
        self.clone()
    }

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_f64(v: f64) -> Self {
        BigRational::from_float(v).unwrap_or_else(Self::zero)
    }

    fn from_decimal(text: &str) -> Option<Self> {
        parse_decimal_rational(text)
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn approx_parts(&self) -> (f64, f64) {
        (self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

/// Exact conversion of a decimal/scientific literal to a rational.
fn parse_decimal_rational(text: &str) -> Option<Q> {
    let (mantissa, exp10) = match text.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = text[pos + 1..].parse().ok()?;
            (&text[..pos], exp)
        }
        None => (text, 0),
    };
    if mantissa.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(pos) => (&mantissa[..pos], &mantissa[pos + 1..]),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let digits = format!("{}{}", int_part, frac_part);
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let numer: BigInt = digits.parse().ok()?;
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        BigRational::from_integer(numer * ten.pow(shift as u64))
    } else {
        BigRational::new(numer, ten.pow((-shift) as u64))
    };
    Some(value)
}

/// Converts an exact rational to the nearest complex double.
pub fn rational_to_c64(q: &Q) -> C64 {
    Complex::new(q.to_f64().unwrap_or(f64::NAN), 0.0)
}

/// A scalar field with dense linear-algebra backends.
///
/// The approximate field computes kernels and least-squares solutions by
/// singular value decomposition with a relative rank cut; the exact field
/// uses exact Gaussian elimination and ignores the tolerance.
pub trait KernelScalar: Scalar {
    /// Basis of the right kernel of a dense row-major `rows x cols` matrix.
    fn kernel_basis(
        rows: usize,
        cols: usize,
        entries: &[Self],
        tol: f64,
    ) -> Result<Vec<Vec<Self>>, KernelError>;

    /// Minimum-residual solution of `A x = b` for a dense row-major matrix.
    fn solve_least_squares(
        rows: usize,
        cols: usize,
        a: &[Self],
        b: &[Self],
        tol: f64,
    ) -> Result<Vec<Self>, KernelError>;
}

impl KernelScalar for C64 {
    fn kernel_basis(
        rows: usize,
        cols: usize,
        entries: &[Self],
        tol: f64,
    ) -> Result<Vec<Vec<Self>>, KernelError> {
        crate::kernel::svd_kernel(rows, cols, entries, tol)
    }

    fn solve_least_squares(
        rows: usize,
        cols: usize,
        a: &[Self],
        b: &[Self],
        tol: f64,
    ) -> Result<Vec<Self>, KernelError> {
        crate::kernel::svd_least_squares(rows, cols, a, b, tol)
    }
}

impl KernelScalar for Q {
    fn kernel_basis(
        rows: usize,
        cols: usize,
        entries: &[Self],
        _tol: f64,
    ) -> Result<Vec<Vec<Self>>, KernelError> {
        Ok(crate::oracle::exact_kernel_raw(rows, cols, entries))
    }

    fn solve_least_squares(
        rows: usize,
        cols: usize,
        a: &[Self],
        b: &[Self],
        _tol: f64,
    ) -> Result<Vec<Self>, KernelError> {
        crate::oracle::exact_solve_raw(rows, cols, a, b)
    }
}
