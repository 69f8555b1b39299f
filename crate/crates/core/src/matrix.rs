//! Dense matrices over Q(i) with exact elimination.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::{Rational, C};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![C::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = C::one();
        }
        m
    }

    pub fn diag(values: &[C]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (k, v) in values.iter().enumerate() {
            m[(k, k)] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[C] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<C>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(C::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!("{:?} times {:?}", self.shape(), rhs.shape())));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[C]) -> Vec<C> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row echelon form and pivot columns.
    fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= &v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<C> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("determinant of {:?}", self.shape())));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(C::one());
        }
        let mut m = self.clone();
        let mut sign = C::one();
        let mut prev = C::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(C::zero());
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&m[(i, j)] * &m[(k, k)]) - &(&m[(i, k)] * &m[(k, j)]);
                    m[(i, j)] = v.checked_div(&prev)?;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(&sign * &m[(n - 1, n - 1)])
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("inverse of {:?}", self.shape())));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if let Some(c) = (0..n).find(|&c| pivots.get(c) != Some(&c)) {
            return Err(Error::SingularMatrix { column: c });
        }
        Ok(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Solves `self · X = rhs` for a matrix of full column rank; overdetermined
    /// systems must be consistent exactly.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if rhs.rows != self.rows {
            return Err(Error::Dimension(format!("solve {:?} with rhs {:?}", self.shape(), rhs.shape())));
        }
        let n = self.cols;
        let (r, pivots) = self.hstack(rhs).rref();
        if let Some(c) = (0..n).find(|&c| pivots.get(c) != Some(&c)) {
            return Err(Error::SingularMatrix { column: c });
        }
        if pivots.len() > n {
            return Err(Error::Inconsistent(format!("right-hand side column {} is not in the range", pivots[n] - n)));
        }
        Ok(Self::from_fn(n, rhs.cols, |i, j| r[(i, n + j)].clone()))
    }

    pub fn solve_vec(&self, rhs: &[C]) -> Result<Vec<C>> {
        let b = Self::from_fn(rhs.len(), 1, |i, _| rhs[i].clone());
        let x = self.solve(&b)?;
        Ok((0..x.rows).map(|i| x[(i, 0)].clone()).collect())
    }

    pub fn map(&self, f: impl Fn(&C) -> C) -> Self {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn rational_rows(&self) -> Option<Vec<Vec<Rational>>> {
        (0..self.rows).map(|i| self.row(i).iter().map(C::to_real).collect()).collect()
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = C;
    fn index(&self, (i, j): (usize, usize)) -> &C {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of {}x{}", self.rows, self.cols);
        &mut self.data[i * self.cols + j]
    }
}

fn zip_with(a: &ExactMatrix, b: &ExactMatrix, f: impl Fn(&C, &C) -> C) -> ExactMatrix {
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    ExactMatrix { rows: a.rows, cols: a.cols, data: a.data.iter().zip(&b.data).map(|(x, y)| f(x, y)).collect() }
}

impl Add<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul<&ExactMatrix> for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix product shapes")
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.map(|x| -x)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(C::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows).map(|i| self.row(i).iter().map(C::to_string).collect()).collect();
        let mut st = ser.serialize_struct("ExactMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| C::from_int(v)).collect()).collect())
    }

    #[test]
    fn inverse_of_diagonal() {
        let d = m(&[&[2, 0], &[0, 3]]);
        let inv = d.inverse().unwrap();
        assert_eq!(inv, ExactMatrix::diag(&[C::frac(1, 2), C::frac(1, 3)]));
        assert!(ExactMatrix::identity(3).inverse().unwrap().is_identity());
    }

    #[test]
    fn singular_reports_column() {
        let s = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse().unwrap_err(), Error::SingularMatrix { column: 1 });
        assert_eq!(s.determinant().unwrap(), C::zero());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn bareiss_determinant() {
        let a = m(&[&[0, 2, 1], &[3, -1, 4], &[5, 6, -2]]);
        // cofactor expansion along the first row
        let direct = -2 * (3 * -2 - 4 * 5) + (3 * 6 - -5);
        assert_eq!(a.determinant().unwrap(), C::from_int(direct));
    }

    #[test]
    fn overdetermined_solve() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let x = a.solve_vec(&[C::from_int(2), C::from_int(3), C::from_int(5)]).unwrap();
        assert_eq!(x, vec![C::from_int(2), C::from_int(3)]);
        assert!(matches!(
            a.solve_vec(&[C::from_int(2), C::from_int(3), C::from_int(6)]),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn json_entries_are_strings() {
        let a = ExactMatrix::from_rows(vec![vec![C::frac(1, 2), C::i()]]);
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"rows":1,"cols":2,"entries":[["1/2","i"]]}"#);
    }
}
