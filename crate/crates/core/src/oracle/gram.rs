use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};

/// A symmetric positive-definite integer Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GramMatrix {
    d: usize,
    entries: Vec<i64>,
}

/// Determinant of a square integer matrix (row-major) by fraction-free
/// Gaussian elimination.
pub(crate) fn determinant(d: usize, entries: &[i64]) -> BigInt {
    let mut m: Vec<BigInt> = entries.iter().map(|&x| BigInt::from(x)).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..d {
        if m[k * d + k].is_zero() {
            let Some(p) = (k + 1..d).find(|&i| !m[i * d + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..d {
                m.swap(k * d + j, p * d + j);
            }
            sign = -sign;
        }
        for i in k + 1..d {
            for j in k + 1..d {
                let v = (&m[i * d + j] * &m[k * d + k] - &m[i * d + k] * &m[k * d + j]) / &prev;
                m[i * d + j] = v;
            }
        }
        prev = m[k * d + k].clone();
    }
    if d == 0 {
        return BigInt::one();
    }
    sign * &m[(d - 1) * d + (d - 1)]
}

impl GramMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 || rows.iter().any(|r| r.len() != d) {
            return Err(ParseError::Gram { line: 0, msg: "matrix must be square and non-empty".into() }.into());
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        for i in 0..d {
            for j in 0..i {
                if entries[i * d + j] != entries[j * d + i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        let g = GramMatrix { d, entries };
        if !g.leading_minors().iter().all(Signed::is_positive) {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(g)
    }

    /// `Z^d`.
    pub fn identity(d: usize) -> Self {
        let rows = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        GramMatrix::new(rows).expect("identity is positive definite")
    }

    /// Cartan matrix of the E8 root system (Bourbaki labels: the chain
    /// 1–3–4–5–6–7–8 with node 2 attached to node 4).
    pub fn e8() -> Self {
        let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
        let mut rows = vec![vec![0i64; 8]; 8];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            rows[a][b] = -1;
            rows[b][a] = -1;
        }
        GramMatrix::new(rows).expect("E8 Cartan matrix is positive definite")
    }

    /// Orthogonal sum.
    pub fn direct_sum(&self, other: &GramMatrix) -> Self {
        let d = self.d + other.d;
        let mut rows = vec![vec![0i64; d]; d];
        for i in 0..self.d {
            for j in 0..self.d {
                rows[i][j] = self.get(i, j);
            }
        }
        for i in 0..other.d {
            for j in 0..other.d {
                rows[self.d + i][self.d + j] = other.get(i, j);
            }
        }
        GramMatrix::new(rows).expect("sum of positive definite forms")
    }

    /// `Uᵗ G U`.
    pub fn transform(&self, u: &[Vec<i64>]) -> Result<Self> {
        let d = self.d;
        let rows = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut acc = 0i64;
                        for a in 0..d {
                            for b in 0..d {
                                acc += u[a][i] * self.get(a, b) * u[b][j];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        GramMatrix::new(rows)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.d + j]
    }

    pub fn determinant(&self) -> BigInt {
        determinant(self.d, &self.entries)
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().is_one()
    }

    fn leading_minors(&self) -> Vec<BigInt> {
        (1..=self.d)
            .map(|k| {
                let sub: Vec<i64> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| self.get(i, j)).collect();
                determinant(k, &sub)
            })
            .collect()
    }

    /// `xᵗ G y`.
    pub fn inner(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 0..self.d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.d {
                acc += x[i] * self.get(i, j) * y[j];
            }
        }
        acc
    }

    pub fn max_diagonal(&self) -> i64 {
        (0..self.d).map(|i| self.get(i, i)).max().unwrap_or(0)
    }

    /// Parses `d` on the first line followed by `d` rows of `d` integers.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (first, header) = lines.next().ok_or(ParseError::Gram { line: 1, msg: "empty input".into() })?;
        let d: usize = header
            .parse()
            .map_err(|_| ParseError::Gram { line: first, msg: format!("expected dimension, found `{header}`") })?;
        if d == 0 {
            return Err(ParseError::Gram { line: first, msg: "dimension must be positive".into() }.into());
        }
        let mut rows = Vec::with_capacity(d);
        for _ in 0..d {
            let (no, line) = lines.next().ok_or(ParseError::Gram { line: first, msg: format!("expected {d} rows") })?;
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| ParseError::Gram { line: no, msg: e.to_string() })?;
            if row.len() != d {
                return Err(ParseError::Gram { line: no, msg: format!("expected {d} entries, found {}", row.len()) }.into());
            }
            rows.push(row);
        }
        if let Some((no, _)) = lines.next() {
            return Err(ParseError::Gram { line: no, msg: "trailing rows".into() }.into());
        }
        GramMatrix::new(rows)
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.d)?;
        for i in 0..self.d {
            let row: Vec<String> = (0..self.d).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
