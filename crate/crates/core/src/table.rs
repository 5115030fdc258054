//! Rectangular tables of exact integers with CSV and JSON renderings.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub family: String,
    pub rows: Vec<Vec<ExactInt>>,
}

impl Table {
    pub fn new(family: impl Into<String>, rows: Vec<Vec<ExactInt>>) -> Self {
        Table {
            family: family.into(),
            rows,
        }
    }

    /// One line per row, entries for columns `0..cols`, no header.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(vec![]);
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.to_string()))
                .map_err(|e| Error::Inconsistency(e.to_string()))?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Inconsistency(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Inconsistency(e.to_string()))
    }

    /// `{"family": ..., "rows": [["1", "0", ...], ...]}` with decimal strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        json!({ "family": self.family, "rows": rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn renders() {
        let t = Table::new("demo", vec![vec![int(1), int(0)], vec![int(1), int(-12)]]);
        assert_eq!(t.to_csv().unwrap(), "1,0\n1,-12\n");
        assert_eq!(
            t.to_json(),
            json!({"family": "demo", "rows": [["1", "0"], ["1", "-12"]]})
        );
    }
}
