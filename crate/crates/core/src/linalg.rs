//! Small dense matrices over any coefficient ring.

use crate::num::{Field, Ring};
use std::ops::{Index, IndexMut};

#[derive(Clone, Debug, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// One row per line, columns right-aligned; a precision applies to every entry.
impl<T: std::fmt::Display> std::fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<String> = self
            .data
            .iter()
            .map(|v| match f.precision() {
                Some(p) => format!("{v:.p$}"),
                None => v.to_string(),
            })
            .collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(0);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{:>width$}", cells[i * self.cols + j])).collect();
            writeln!(f, "[{}]", row.join("  "))?;
        }
        Ok(())
    }
}

impl<T: Ring> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out: Mat<T> = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + other[(i, j)].clone())
    }

    pub fn sub(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() - other[(i, j)].clone())
    }

    pub fn scale(&self, s: &T) -> Mat<T> {
        self.map(|x| x.clone() * s.clone())
    }

    /// `self·other - other·self`.
    pub fn commutator(&self, other: &Mat<T>) -> Mat<T> {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    /// Cofactor expansion; only used for the small matrices in this crate.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.minor_det(0, &idx)
    }

    fn minor_det(&self, row: usize, cols: &[usize]) -> T {
        if cols.is_empty() {
            return T::one();
        }
        let mut acc = T::zero();
        for (pos, &c) in cols.iter().enumerate() {
            let entry = &self[(row, c)];
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = entry.clone() * self.minor_det(row + 1, &rest);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Transposed cofactor matrix: `A·adj(A) = det(A)·I`.
    pub fn adjugate(&self) -> Mat<T> {
        let n = self.rows;
        Mat::from_fn(n, n, |i, j| {
            // cofactor C_{ji}
            let sub = Mat::from_fn(n - 1, n - 1, |a, b| {
                let r = if a < j { a } else { a + 1 };
                let c = if b < i { b } else { b + 1 };
                self[(r, c)].clone()
            });
            let d = sub.det();
            if (i + j) % 2 == 0 {
                d
            } else {
                -d
            }
        })
    }
}

impl<T: Field> Mat<T> {
    /// Gaussian elimination with partial pivoting on the leading values.
    /// Returns `None` when a pivot column has no nonzero leading entry.
    pub fn solve(&self, rhs: &Mat<T>) -> Option<Mat<T>> {
        assert_eq!(self.rows, self.cols, "solve needs a square system");
        assert_eq!(self.rows, rhs.rows);
        let n = self.rows;
        let m = rhs.cols;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for col in 0..n {
            let pivot = (col..n).max_by(|&x, &y| {
                a[(x, col)]
                    .magnitude()
                    .partial_cmp(&a[(y, col)].magnitude())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })?;
            if a[(pivot, col)].magnitude() == 0.0 {
                return None;
            }
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                }
                for j in 0..m {
                    b.data.swap(pivot * m + j, col * m + j);
                }
            }
            let p = a[(col, col)].clone();
            for row in col + 1..n {
                let factor = a[(row, col)].clone() / p.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    a[(row, j)] = a[(row, j)].clone() - factor.clone() * a[(col, j)].clone();
                }
                for j in 0..m {
                    b[(row, j)] = b[(row, j)].clone() - factor.clone() * b[(col, j)].clone();
                }
            }
        }
        let mut x: Mat<T> = Mat::zeros(n, m);
        for j in 0..m {
            for i in (0..n).rev() {
                let mut acc = b[(i, j)].clone();
                for k in i + 1..n {
                    acc = acc - a[(i, k)].clone() * x[(k, j)].clone();
                }
                x[(i, j)] = acc / a[(i, i)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat<T>> {
        self.solve(&Mat::identity(self.rows))
    }

    /// Least-squares solution of `self·x = rhs` through the normal equations.
    pub fn least_squares(&self, rhs: &Mat<T>) -> Option<Mat<T>> {
        let at = self.transpose();
        at.mul(self).solve(&at.mul(rhs))
    }

    /// Largest absolute column sum of the leading values.
    pub fn norm1(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].magnitude()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Largest leading magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(Field::magnitude).fold(0.0, f64::max)
    }
}
