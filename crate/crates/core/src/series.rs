//! Truncated formal power series with exact rational coefficients.
//!
//! A [`FormalSeries`] of order `N` carries the coefficients of `t^0..=t^N`.
//! Binary operations truncate to the smaller operand order, so every
//! retained coefficient is exact.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_rat, parse_rat, rat_int, ExactRat};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalSeries {
    coeffs: Vec<ExactRat>,
}

impl FormalSeries {
    /// Series with the given coefficients; order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<ExactRat>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("a series needs at least the constant coefficient"));
        }
        Ok(FormalSeries { coeffs })
    }

    /// Integer coefficients, zero-padded or truncated to `order`.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| rat_int(values.get(k).copied().unwrap_or(0)))
            .collect();
        FormalSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        FormalSeries {
            coeffs: vec![ExactRat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = ExactRat::one();
        s
    }

    /// The series `t`, truncated at `order`.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = ExactRat::one();
        }
        s
    }

    /// `1 + t + t^2 + ... + t^order`, the truncation of `1/(1-t)`.
    pub fn geometric(order: usize) -> Self {
        FormalSeries {
            coeffs: vec![ExactRat::one(); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    pub fn coeff_at(&self, k: usize) -> Result<&ExactRat> {
        self.coeffs.get(k).ok_or(Error::OutOfRange {
            index: k,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<ExactRat> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, ExactRat::zero());
        FormalSeries { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &other.coeffs[k])
            .collect();
        FormalSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &ExactRat) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product `c_n = sum_k a_k b_{n-k}`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![ExactRat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        FormalSeries { coeffs }
    }

    /// `n`-fold product; the zeroth power is the 1-series.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// `f(g(t))` by Horner accumulation. Requires `g(0) = 0`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::invalid(format!(
                "inner series must have zero constant term, got {}",
                format_rat(&g.coeffs[0])
            )));
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().take(order + 1).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(format_rat(c)))
                .collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| Error::Parse("series JSON must be an array of strings".into()))?;
        let coeffs = items
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => parse_rat(s),
                serde_json::Value::Number(n) => parse_rat(&n.to_string()),
                other => Err(Error::Parse(format!("bad coefficient {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }
}

impl Add for &FormalSeries {
    type Output = FormalSeries;
    fn add(self, rhs: Self) -> FormalSeries {
        FormalSeries::add(self, rhs)
    }
}

impl Mul for &FormalSeries {
    type Output = FormalSeries;
    fn mul(self, rhs: Self) -> FormalSeries {
        FormalSeries::mul(self, rhs)
    }
}

impl fmt::Display for FormalSeries {
    /// `1 + 3*t - 1/2*t^2 (order 4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = format_rat(&c.abs());
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " (order {})", self.order())
    }
}
