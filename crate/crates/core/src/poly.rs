//! Integer polynomials in one variable and the power, rising and falling
//! bases, with the Stirling transition matrices between them.

use std::fmt;

use num_traits::{One, Zero};

use crate::counting::{cycle_count_row, stirling1_signed, stirling2_row};
use crate::error::{Error, Result};
use crate::exact::{int, rat_int, ExactInt, ExactRat};

pub const STIRLING_CHECK_MAX_N: usize = 30;

/// Ascending coefficients with trailing zeros trimmed; the zero polynomial
/// has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<ExactInt>,
}

impl ExactPolynomial {
    pub fn new(coeffs: Vec<ExactInt>) -> Self {
        let mut p = ExactPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        ExactPolynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        ExactPolynomial::default()
    }

    pub fn one() -> Self {
        ExactPolynomial::new(vec![ExactInt::one()])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![ExactInt::zero(); n + 1];
        coeffs[n] = ExactInt::one();
        ExactPolynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[ExactInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> ExactInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        ExactPolynomial::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn scale(&self, c: &ExactInt) -> Self {
        ExactPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![ExactInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }

    /// Multiplies by `x + c`.
    fn mul_linear(&self, c: i64) -> Self {
        let mut out = vec![ExactInt::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] += a * c;
        }
        ExactPolynomial::new(out)
    }
}

impl fmt::Display for ExactPolynomial {
    /// `c0 + c1*x + c2*x^2`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `x (x + 1) ... (x + n - 1)`.
pub fn rising_poly(n: usize) -> ExactPolynomial {
    (0..n as i64).fold(ExactPolynomial::one(), |p, i| p.mul_linear(i))
}

/// `x (x - 1) ... (x - n + 1)`.
pub fn falling_poly(n: usize) -> ExactPolynomial {
    (0..n as i64).fold(ExactPolynomial::one(), |p, i| p.mul_linear(-i))
}

/// Coefficients of the rising factorial in the power basis: the cycle
/// counts `c(n, k)`.
pub fn rising_expansion_coeffs(n: usize) -> Result<Vec<ExactInt>> {
    let row = cycle_count_row(n);
    let expanded = rising_poly(n);
    let agree = row.iter().enumerate().all(|(k, c)| &expanded.coeff(k) == c);
    if !agree {
        return Err(Error::Inconsistency(format!(
            "cycle counts of row {n} differ from the expanded rising factorial"
        )));
    }
    Ok(row)
}

/// `S(n, 0..=n)` with `x^n = sum S(n, k) (x)_k`, checked by evaluating both
/// sides at `x = 0..=n + 1`.
pub fn power_to_falling(n: usize) -> Result<Vec<ExactInt>> {
    let s = stirling2_row(n);
    for x in 0..=n as i64 + 1 {
        let xr = rat_int(x);
        let lhs = evaluate(&ExactPolynomial::monomial(n), &xr);
        let rhs: ExactRat = s
            .iter()
            .enumerate()
            .map(|(k, c)| rat_int(c.clone()) * evaluate(&falling_poly(k), &xr))
            .sum();
        if lhs != rhs {
            return Err(Error::Inconsistency(format!(
                "power-to-falling expansion of degree {n} fails at x = {x}"
            )));
        }
    }
    Ok(s)
}

/// Rebuilds a polynomial from its coordinates in the falling basis.
pub fn from_falling(coords: &[ExactInt]) -> ExactPolynomial {
    coords
        .iter()
        .enumerate()
        .fold(ExactPolynomial::zero(), |acc, (k, c)| acc.add(&falling_poly(k).scale(c)))
}

/// Coordinates of `p` in the falling basis, via `x^n = sum S(n, k) (x)_k`.
pub fn to_falling(p: &ExactPolynomial) -> Vec<ExactInt> {
    let len = p.coeffs().len();
    let mut out = vec![ExactInt::zero(); len];
    for (n, a) in p.coeffs().iter().enumerate() {
        for (k, s) in stirling2_row(n).into_iter().enumerate() {
            out[k] += a * s;
        }
    }
    out
}

fn square(n: usize, entry: impl Fn(usize, usize) -> ExactInt) -> Vec<Vec<ExactInt>> {
    (0..=n).map(|i| (0..=n).map(|j| entry(i, j)).collect()).collect()
}

fn matmul(a: &[Vec<ExactInt>], b: &[Vec<ExactInt>]) -> Vec<Vec<ExactInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `s S = Id = S s` for the `(N+1) x (N+1)` Stirling matrices.
pub fn stirling_inverse_check(n: usize) -> Result<bool> {
    if n > STIRLING_CHECK_MAX_N {
        return Err(Error::guard("Stirling matrix size", n, STIRLING_CHECK_MAX_N));
    }
    let rows2: Vec<Vec<ExactInt>> = (0..=n).map(stirling2_row).collect();
    let s1 = square(n, |i, j| stirling1_signed(i, j));
    let s2 = square(n, |i, j| rows2[i].get(j).cloned().unwrap_or_default());
    let id = square(n, |i, j| int(i32::from(i == j)));
    Ok(matmul(&s1, &s2) == id && matmul(&s2, &s1) == id)
}

/// `p(alpha)` by Horner's rule.
pub fn evaluate(p: &ExactPolynomial, alpha: &ExactRat) -> ExactRat {
    p.coeffs()
        .iter()
        .rev()
        .fold(ExactRat::zero(), |acc, c| acc * alpha + rat_int(c.clone()))
}
