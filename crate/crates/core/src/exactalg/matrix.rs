use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::{Error, Result};

/// Dense row-major matrix over ℚ(i).
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![GaussianRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GaussianRational::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Self::from_entries(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    /// Builds an integer matrix; handy in tests.
    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| GaussianRational::from_int(x)).collect())
                .collect(),
        )
    }

    /// Entry `(i, j)` computed by `f`.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> GaussianRational,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GaussianRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols)
                .filter(|&t| !self.get(i, t).is_zero())
                .map(|t| self.get(i, t) * rhs.get(t, j))
                .sum()
        }))
    }

    /// Rank over ℚ(i), by fraction-free (Bareiss) elimination: rows are scaled to
    /// Gaussian integers, and every intermediate entry is a minor of that
    /// integral matrix, so divisions are exact and nothing is ever reduced.
    pub fn rank(&self) -> usize {
        let mut work: Vec<Vec<GaussInt>> = (0..self.rows)
            .map(|i| integral_row(self.row(i)))
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        let mut prev = GaussInt::one();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = work.iter().position(|r| !r[col].is_zero()) else {
                continue;
            };
            let pivot_row = work.swap_remove(p);
            let pivot = &pivot_row[col];
            for row in work.iter_mut() {
                let factor = std::mem::take(&mut row[col]);
                for j in col + 1..self.cols {
                    if row[j].is_zero() && (factor.is_zero() || pivot_row[j].is_zero()) {
                        continue;
                    }
                    let mut v = pivot.mul(&row[j]);
                    if !factor.is_zero() && !pivot_row[j].is_zero() {
                        v = v.sub(&factor.mul(&pivot_row[j]));
                    }
                    row[j] = v.div_exact(&prev);
                }
            }
            work.retain(|r| r[col + 1..].iter().any(|x| !x.is_zero()));
            prev = pivot_row[col].clone();
            rank += 1;
            if work.is_empty() {
                break;
            }
        }
        rank
    }
}

/// Gaussian integer used inside [`ExactMatrix::rank`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn one() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt {
            re: self.re - &rhs.re,
            im: self.im - &rhs.im,
        }
    }

    /// `self / d`, which must divide exactly.
    fn div_exact(self, d: &GaussInt) -> GaussInt {
        if d.im.is_zero() {
            return GaussInt {
                re: self.re / &d.re,
                im: self.im / &d.re,
            };
        }
        let norm = &d.re * &d.re + &d.im * &d.im;
        GaussInt {
            re: (&self.re * &d.re + &self.im * &d.im) / &norm,
            im: (&self.im * &d.re - &self.re * &d.im) / &norm,
        }
    }
}

/// The row times the lcm of all its denominators.
fn integral_row(row: &[GaussianRational]) -> Vec<GaussInt> {
    let lcm = row
        .iter()
        .flat_map(|x| [x.re().denom(), x.im().denom()])
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    row.iter()
        .map(|x| GaussInt {
            re: x.re().numer() * (&lcm / x.re().denom()),
            im: x.im().numer() * (&lcm / x.im().denom()),
        })
        .collect()
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
