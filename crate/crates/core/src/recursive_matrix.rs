//! Recursive matrices: the `n`-th row generating series is the `n`-th power
//! of a fixed recursion rule `M_1(t)`, with `M_0(t) = 1`.
//!
//! Columns are truncated at a caller-chosen order. Rows are materialized on
//! demand by repeated multiplication with the rule and cached for the life
//! of the matrix. Materialization takes `&mut self`, so a matrix has a single
//! writer; share it by reference only after the needed rows exist.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{as_integer, ExactInt};
use crate::series::FormalSeries;
use crate::table::Table;

#[derive(Debug, Clone)]
pub struct RecursiveMatrix {
    name: String,
    rule: FormalSeries,
    rows: Vec<FormalSeries>,
}

impl RecursiveMatrix {
    pub fn new(name: impl Into<String>, rule: FormalSeries) -> Self {
        let order = rule.order();
        RecursiveMatrix {
            name: name.into(),
            rule,
            rows: vec![FormalSeries::one(order)],
        }
    }

    /// Rule `1 + t`: Pascal's triangle.
    pub fn binomial(order: usize) -> Self {
        Self::new("binomial", FormalSeries::from_ints(&[1, 1], order))
    }

    /// Rule `1/(1 - t)`: multiset coefficients.
    pub fn multiset(order: usize) -> Self {
        Self::new("multiset", FormalSeries::geometric(order))
    }

    /// Rule `1 + t + ... + t^p`: at most `p` balls per box.
    pub fn gentile(p: usize, order: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::invalid("Gentile parameter p must be at least 1"));
        }
        let ones = vec![1i64; p + 1];
        Ok(Self::new(
            format!("gentile(p={p})"),
            FormalSeries::from_ints(&ones, order),
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.rule.order()
    }

    pub fn rule(&self) -> &FormalSeries {
        &self.rule
    }

    /// `M_n(t)`, memoized.
    pub fn row_series(&mut self, n: usize) -> &FormalSeries {
        while self.rows.len() <= n {
            let next = self.rows.last().expect("row 0 always present").mul(&self.rule);
            self.rows.push(next);
        }
        &self.rows[n]
    }

    /// `M(n, k)`, the coefficient of `t^k` in row `n`.
    pub fn entry(&mut self, n: usize, k: usize) -> Result<ExactInt> {
        let c = self.row_series(n).coeff_at(k)?;
        as_integer(c).ok_or_else(|| {
            Error::Inconsistency(format!("non-integer entry M({n},{k}) = {c}"))
        })
    }

    /// `sum_h M(i, h) M(j, k - h)`, which equals `M(i + j, k)`.
    pub fn vandermonde_convolve(&mut self, i: usize, j: usize, k: usize) -> Result<ExactInt> {
        if k > self.order() {
            return Err(Error::OutOfRange {
                index: k,
                order: self.order(),
            });
        }
        let mut sum = ExactInt::zero();
        for h in 0..=k {
            sum += self.entry(i, h)? * self.entry(j, k - h)?;
        }
        Ok(sum)
    }

    /// Rows `0..rows`, columns `0..cols`. `cols` may not exceed `order + 1`.
    pub fn table(&mut self, rows: usize, cols: usize) -> Result<Table> {
        if cols > self.order() + 1 {
            return Err(Error::OutOfRange {
                index: cols.saturating_sub(1),
                order: self.order(),
            });
        }
        let data = (0..rows)
            .map(|n| (0..cols).map(|k| self.entry(n, k)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Table::new(self.name.clone(), data))
    }
}
