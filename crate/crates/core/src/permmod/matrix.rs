//! Change-of-basis matrices between the `t` and `s` bases, indexed by the
//! partitions of the box in box order.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dyck::{ce, ce_qpoly, ci, ci_qpoly, QPoly};
use crate::error::{Error, Result};
use crate::json::to_value;
use crate::partition::{box_partitions, Partition};

/// Something that can sit in a matrix and be exported.
pub trait MatrixEntry: Clone + Zero + One + PartialEq + fmt::Display + Send + Sync {
    fn to_json(&self) -> Value;
}

impl MatrixEntry for BigInt {
    fn to_json(&self) -> Value {
        to_value(self)
    }
}

/// Polynomials export as their coefficient lists, constant term first.
impl MatrixEntry for QPoly {
    fn to_json(&self) -> Value {
        Value::Array(self.coeffs().iter().map(to_value).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    pub labels: Vec<Partition>,
    /// `rows[r][c]` is the entry at row label `r`, column label `c`.
    pub rows: Vec<Vec<T>>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type PolyMatrix = Matrix<QPoly>;

impl<T: MatrixEntry> Matrix<T> {
    pub fn from_fn(
        labels: Vec<Partition>,
        entry: impl Fn(&Partition, &Partition) -> Result<T> + Sync,
    ) -> Result<Self> {
        let rows = labels
            .par_iter()
            .map(|r| {
                labels
                    .iter()
                    .map(|c| entry(r, c))
                    .collect::<Result<Vec<T>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { labels, rows })
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn entry(&self, row: &Partition, col: &Partition) -> Option<&T> {
        let r = self.labels.iter().position(|l| l == row)?;
        let c = self.labels.iter().position(|l| l == col)?;
        Some(&self.rows[r][c])
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, row)| {
            row.iter()
                .enumerate()
                .all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
        })
    }

    /// Matrix product; both sides must share labels.
    pub fn multiply(&self, other: &Matrix<T>) -> Result<Matrix<T>>
    where
        for<'a> &'a T: Mul<&'a T, Output = T>,
    {
        if self.labels != other.labels {
            return Err(Error::Internal("matrix labels differ".into()));
        }
        let n = self.size();
        let rows = (0..n)
            .into_par_iter()
            .map(|r| {
                (0..n)
                    .map(|c| {
                        (0..n).fold(T::zero(), |acc, m| {
                            acc + &self.rows[r][m] * &other.rows[m][c]
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(Matrix {
            labels: self.labels.clone(),
            rows,
        })
    }

    /// CSV with a header row of labels and the row label in the first
    /// column.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Internal(format!("csv: {e}"));
        let mut header = vec![String::new()];
        header.extend(self.labels.iter().map(|l| l.to_string()));
        w.write_record(&header).map_err(csv_err)?;
        for (label, row) in self.labels.iter().zip(&self.rows) {
            let mut record = vec![label.to_string()];
            record.extend(row.iter().map(|x| x.to_string()));
            w.write_record(&record).map_err(csv_err)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Internal(format!("csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "labels": self.labels,
            "rows": self.rows.iter().map(|row| row.iter().map(T::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

impl<T: MatrixEntry> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut cells: Vec<Vec<String>> = vec![std::iter::once(String::new())
            .chain(self.labels.iter().map(|l| l.to_string()))
            .collect()];
        for (label, row) in self.labels.iter().zip(&self.rows) {
            cells.push(
                std::iter::once(label.to_string())
                    .chain(row.iter().map(|x| x.to_string()))
                    .collect(),
            );
        }
        let widths: Vec<usize> = (0..cells[0].len())
            .map(|c| {
                cells
                    .iter()
                    .map(|r| r[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for row in cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s:>w$}"))
                .collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}

fn sign(lambda: &Partition, mu: &Partition) -> i64 {
    if (lambda.size() + mu.size()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `N_{λμ} = (-1)^{|λ|+|μ|} e(λ, μ)`: the coordinates of `s_μ m` in the
/// `t` basis, column by column.
pub fn matrix_n(f: usize, g: usize) -> Result<IntMatrix> {
    Matrix::from_fn(box_partitions(f, g), |l, m| {
        Ok(if ce(l, m) {
            BigInt::from(sign(l, m))
        } else {
            BigInt::zero()
        })
    })
}

/// `P_{λμ} = i(λ, μ)`: the coordinates of `t_μ m` in the `s` basis.
pub fn matrix_p(f: usize, g: usize) -> Result<IntMatrix> {
    Matrix::from_fn(box_partitions(f, g), |l, m| Ok(BigInt::from(ci(l, m))))
}

/// `N` with every cover-expansive tiling weighted by `q^{#tiles}`.
pub fn matrix_n_q(f: usize, g: usize) -> Result<PolyMatrix> {
    Matrix::from_fn(box_partitions(f, g), |l, m| {
        let e = ce_qpoly(l, m);
        Ok(if sign(l, m) < 0 { -e } else { e })
    })
}

/// `P` with every cover-inclusive tiling weighted by `q^{#tiles}`.
pub fn matrix_p_q(f: usize, g: usize) -> Result<PolyMatrix> {
    Matrix::from_fn(box_partitions(f, g), ci_qpoly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn single_box() {
        let n = matrix_n(1, 1).unwrap();
        let p = matrix_p(1, 1).unwrap();
        assert_eq!(n.rows, ints(&[&[1, 0], &[-1, 1]]));
        assert_eq!(p.rows, ints(&[&[1, 0], &[1, 1]]));
        assert!(n.multiply(&p).unwrap().is_identity());
        assert!(!p.is_identity());
    }

    #[test]
    fn exports() {
        let p = matrix_p(1, 1).unwrap();
        assert_eq!(p.to_csv().unwrap(), ",(),(1)\n(),1,0\n(1),1,1\n");
        assert_eq!(
            p.to_json().to_string(),
            r#"{"labels":[[],[1]],"rows":[[1,0],[1,1]]}"#
        );
        let q = matrix_p_q(1, 1).unwrap();
        assert_eq!(q.to_json()["rows"][1][0].to_string(), "[0,1]");
        assert_eq!(p.to_string(), "     ()  (1)\n ()   1    0\n(1)   1    1\n");
    }

    #[test]
    fn q_inverse_small() {
        for (f, g) in [(1, 1), (1, 2), (2, 2)] {
            let prod = matrix_n_q(f, g)
                .unwrap()
                .multiply(&matrix_p_q(f, g).unwrap())
                .unwrap();
            assert!(prod.is_identity(), "{f}x{g}");
        }
    }
}
