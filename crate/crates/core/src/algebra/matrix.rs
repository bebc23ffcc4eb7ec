//! Small dense matrices over any [`Ring`].

use std::fmt;

use super::{AlgebraError, RatFunc, Ring, Scalar};

#[derive(Clone, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Mat<T> {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat<T> {
        let mut m = Mat::zeros(n, n);
        for k in 0..n {
            m.set(k, k, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Mat<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Option<U>) -> Option<Mat<U>> {
        let data = self.data.iter().map(f).collect::<Option<Vec<U>>>()?;
        Some(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Mat<T> {
        let mut t = Mat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &T) -> Mat<T> {
        self.map(|x| s.times(x))
    }

    pub fn try_mul(&self, o: &Mat<T>) -> Result<Mat<T>, AlgebraError> {
        if self.cols != o.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for c in 0..o.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    let b = o.get(k, c);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.plus(&a.times(b));
                    }
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &Mat<T>) -> Mat<T> {
        self.try_mul(o).expect("matrix dimension mismatch")
    }

    fn zip(&self, o: &Mat<T>, f: impl Fn(&T, &T) -> T) -> Result<Mat<T>, AlgebraError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} and {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let data = self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, o: &Mat<T>) -> Mat<T> {
        self.zip(o, |a, b| a.plus(b)).expect("matrix dimension mismatch")
    }

    pub fn sub(&self, o: &Mat<T>) -> Mat<T> {
        self.zip(o, |a, b| a.minus(b)).expect("matrix dimension mismatch")
    }

    pub fn neg(&self) -> Mat<T> {
        self.map(Ring::negate)
    }

    /// `AB − BA`.
    pub fn commutator(&self, o: &Mat<T>) -> Result<Mat<T>, AlgebraError> {
        if !self.is_square() || !o.is_square() || self.rows != o.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "commutator of {}x{} and {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        self.mul(o).zip(&o.mul(self), |a, b| a.minus(b))
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(T::zero(), |acc, k| acc.plus(self.get(k, k)))
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Mat<T> {
        let mut rows = Vec::with_capacity(self.rows - 1);
        for r in (0..self.rows).filter(|&r| r != skip_r) {
            rows.push(
                (0..self.cols)
                    .filter(|&c| c != skip_c)
                    .map(|c| self.get(r, c).clone())
                    .collect(),
            );
        }
        Mat::from_rows(rows)
    }

    /// Determinant by cofactor expansion; meant for the 2×2 and 3×3 cases.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        match self.rows {
            0 => T::one(),
            1 => self.get(0, 0).clone(),
            2 => self.get(0, 0).times(self.get(1, 1)).minus(&self.get(0, 1).times(self.get(1, 0))),
            n => {
                let mut acc = T::zero();
                for c in 0..n {
                    let a = self.get(0, c);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.times(&self.minor(0, c).det());
                    acc = if c % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
                }
                acc
            }
        }
    }

    /// Transposed cofactor matrix, so that `M · adj(M) = det(M) · I`.
    pub fn adjugate(&self) -> Mat<T> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 1 {
            return Mat::identity(1);
        }
        let mut adj = Mat::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                let m = self.minor(r, c).det();
                adj.set(c, r, if (r + c) % 2 == 0 { m } else { m.negate() });
            }
        }
        adj
    }

    pub fn same_as(&self, o: &Mat<T>) -> bool {
        self.rows == o.rows
            && self.cols == o.cols
            && self.data.iter().zip(&o.data).all(|(a, b)| a.same_as(b))
    }
}

impl<T: Ring> PartialEq for Mat<T> {
    fn eq(&self, o: &Mat<T>) -> bool {
        self.same_as(o)
    }
}

impl Mat<Scalar> {
    pub fn from_ints(rows: &[&[i64]]) -> Mat<Scalar> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&n| Scalar::int(n)).collect()).collect())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat<Scalar>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                let a = m.get(p, c).clone();
                let b = m.get(row, c).clone();
                m.set(p, c, b);
                m.set(row, c, a);
            }
            let inv = m.get(row, col).inv().expect("nonzero pivot");
            for c in 0..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in 0..m.cols {
                    let v = m.get(r, c) - &(&f * m.get(row, c));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<Mat<Scalar>> {
        let d = self.det().inv()?;
        Some(self.adjugate().scale(&d))
    }
}

impl Mat<RatFunc> {
    pub fn inverse(&self) -> Option<Mat<RatFunc>> {
        let d = self.det().inv()?;
        Some(self.adjugate().scale(&d))
    }

    /// Entry-wise evaluation; `None` if some denominator vanishes.
    pub fn eval(&self, z: &Scalar, w: &Scalar) -> Option<Mat<Scalar>> {
        self.try_map(|f| f.eval(z, w))
    }

    pub fn substitute(&self, images: &[RatFunc; 2]) -> Mat<RatFunc> {
        self.map(|f| f.substitute(images))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
