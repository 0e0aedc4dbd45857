//! Integer tables of `P`, `A`, `Q` and `P̃` with row index `m` and column
//! index `n`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::weyl::p_tilde;
use crate::families::{a_value, FamilyCache};
use crate::scalar::{as_integer, int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableFn {
    P,
    A,
    Q,
    Ptilde,
}

impl TableFn {
    pub fn name(self) -> &'static str {
        match self {
            TableFn::P => "P",
            TableFn::A => "A",
            TableFn::Q => "Q",
            TableFn::Ptilde => "Ptilde",
        }
    }
}

impl FromStr for TableFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" => Ok(TableFn::P),
            "A" => Ok(TableFn::A),
            "Q" => Ok(TableFn::Q),
            "Ptilde" => Ok(TableFn::Ptilde),
            _ => Err(Error::IndexOutOfRange(format!("unknown table function {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "markdown" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::IndexOutOfRange(format!("unknown table format {s:?}"))),
        }
    }
}

/// A computed table; `values[m-1][n-1]` holds the entry at `(m, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub function: TableFn,
    pub rows: u32,
    pub cols: u32,
    pub values: Vec<Vec<BigInt>>,
}

fn integral(v: crate::Rational, what: impl FnOnce() -> String) -> Result<BigInt> {
    as_integer(&v).ok_or_else(|| Error::NonIntegerValue {
        at: what(),
        value: v.to_string(),
    })
}

pub fn entry(function: TableFn, m: u32, n: u32, cache: &FamilyCache) -> Result<BigInt> {
    match function {
        TableFn::P => integral(cache.p_at(m, &int(n)), || format!("P({m},{n})")),
        TableFn::Q => integral(cache.q_at(m, &int(n)), || format!("Q({m},{n})")),
        TableFn::A => Ok(a_value(m, n)),
        TableFn::Ptilde => Ok(p_tilde(m, n)),
    }
}

pub fn compute(function: TableFn, rows: u32, cols: u32, cache: &FamilyCache) -> Result<Table> {
    if rows == 0 || cols == 0 {
        return Err(Error::IndexOutOfRange(format!("table size {rows}x{cols}")));
    }
    let values = (1..=rows)
        .map(|m| (1..=cols).map(|n| entry(function, m, n, cache)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        function,
        rows,
        cols,
        values,
    })
}

/// Serializable form of a [`Table`] with entries as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableView {
    pub function: TableFn,
    pub rows: u32,
    pub cols: u32,
    pub values: Vec<Vec<String>>,
}

impl Table {
    pub fn view(&self) -> TableView {
        TableView {
            function: self.function,
            rows: self.rows,
            cols: self.cols,
            values: self
                .values
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }

    pub fn corner(&self) -> String {
        format!("{}(m,n)", self.function.name())
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "| {} |", self.corner());
        for n in 1..=self.cols {
            let _ = write!(out, " {n} |");
        }
        out.push('\n');
        out.push_str("|---|");
        for _ in 0..self.cols {
            out.push_str("---|");
        }
        out.push('\n');
        for (i, row) in self.values.iter().enumerate() {
            let _ = write!(out, "| {} |", i + 1);
            for v in row {
                let _ = write!(out, " {v} |");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.corner();
        for n in 1..=self.cols {
            let _ = write!(out, ",{n}");
        }
        out.push('\n');
        for (i, row) in self.values.iter().enumerate() {
            let _ = write!(out, "{}", i + 1);
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let cache = FamilyCache::new();
        let t = compute(TableFn::P, 3, 2, &cache).unwrap();
        assert_eq!(t.to_markdown(), "| P(m,n) | 1 | 2 |\n|---|---|---|\n| 1 | 1 | 1 |\n| 2 | 2 | 14 |\n| 3 | -1 | 35 |\n");
        assert_eq!(t.to_csv(), "P(m,n),1,2\n1,1,1\n2,2,14\n3,-1,35\n");
        let q = compute(TableFn::Q, 3, 4, &cache).unwrap();
        assert_eq!(q.values[2][3], BigInt::from(1250));
        let pt = compute(TableFn::Ptilde, 3, 3, &cache).unwrap();
        assert_eq!(pt.values[2][1], BigInt::from(34));
        assert!(compute(TableFn::A, 0, 3, &cache).is_err());
    }

    #[test]
    fn parse_tags() {
        assert_eq!("Ptilde".parse::<TableFn>().unwrap(), TableFn::Ptilde);
        assert_eq!("csv".parse::<TableFormat>().unwrap(), TableFormat::Csv);
        assert!("R".parse::<TableFn>().is_err());
        assert!("xml".parse::<TableFormat>().is_err());
    }
}
