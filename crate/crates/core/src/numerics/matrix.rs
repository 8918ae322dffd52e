use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major matrix of `f64` values.
///
/// All stored entries are finite; constructors that accept data validate
/// this. Feature dimensions in this domain stay small (a few hundred), so no
/// sparse path is provided.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matrix2D {
    rows: usize,
    cols: usize,
    values: Vec<f64>,
}

impl Matrix2D {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, values: vec![0.0; rows * cols] }
    }

    /// Builds a matrix from row-major data, validating shape and finiteness.
    pub fn from_vec(rows: usize, cols: usize, values: Vec<f64>) -> Result<Self> {
        if values.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "expected {}x{}={} values, got {}",
                rows,
                cols,
                rows * cols,
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!("matrix entry {v}")));
        }
        Ok(Self { rows, cols, values })
    }

    /// Builds a matrix by stacking equal-length rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyInput("matrix rows".into()));
        }
        let cols = rows[0].len();
        let mut values = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row length {} differs from {}",
                    r.len(),
                    cols
                )));
            }
            values.extend_from_slice(r);
        }
        Self::from_vec(rows.len(), cols, values)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.values[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.values[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.values[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.values[r * self.cols..(r + 1) * self.cols]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Collects the given rows into a new matrix, in the order given.
    pub fn select_rows(&self, indices: &[usize]) -> Matrix2D {
        let mut out = Matrix2D::zeros(indices.len(), self.cols);
        for (i, &r) in indices.iter().enumerate() {
            out.row_mut(i).copy_from_slice(self.row(r));
        }
        out
    }

    /// `self (n x k) * other^T (k x m)` where `other` is stored `m x k`.
    ///
    /// This is the natural orientation for a dense layer whose weight matrix
    /// stores one row per output unit.
    pub fn mul_transpose(&self, other: &Matrix2D) -> Result<Matrix2D> {
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "mul_transpose: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix2D::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            let a = self.row(i);
            for j in 0..other.rows {
                let b = other.row(j);
                let mut acc = 0.0;
                for k in 0..self.cols {
                    acc += a[k] * b[k];
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

/// Euclidean norm of a slice.
pub fn l2_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Dot product of two equal-length slices.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Squared Euclidean distance between two equal-length slices.
pub fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_rejects_bad_shape() {
        assert!(Matrix2D::from_vec(2, 2, vec![1.0, 2.0, 3.0]).is_err());
    }

    #[test]
    fn from_vec_rejects_non_finite() {
        assert!(Matrix2D::from_vec(1, 2, vec![1.0, f64::NAN]).is_err());
        assert!(Matrix2D::from_vec(1, 2, vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn mul_transpose_matches_hand_computation() {
        // a = [[1,2],[3,4]], w = [[1,0],[1,1]] (rows are output units)
        let a = Matrix2D::from_vec(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let w = Matrix2D::from_vec(2, 2, vec![1.0, 0.0, 1.0, 1.0]).unwrap();
        let p = a.mul_transpose(&w).unwrap();
        assert_eq!(p.values(), &[1.0, 3.0, 3.0, 7.0]);
    }

    #[test]
    fn select_rows_keeps_order() {
        let m = Matrix2D::from_vec(3, 1, vec![10.0, 20.0, 30.0]).unwrap();
        let s = m.select_rows(&[2, 0]);
        assert_eq!(s.values(), &[30.0, 10.0]);
    }
}
