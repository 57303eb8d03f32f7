use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;

pub type ExactScalar = BigRational;

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ExactScalar::one();
        }
        m
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> ExactScalar,
    ) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        ExactMatrix { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        Ok(Self::from_fn(rows.len(), cols, |i, j| {
            ExactScalar::from_integer(BigInt::from(rows[i][j]))
        }))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ExactScalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[ExactScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.data.iter().enumerate().all(|(k, x)| {
                if k / self.cols == k % self.cols {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let slot = &mut out.data[i * rhs.cols + j];
                        *slot += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self^k` by binary exponentiation; `k = 0` gives the identity.
    pub fn pow(&self, mut k: u64) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Dimension(format!(
                "power of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.matmul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.matmul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact determinant: each row is scaled to integers, then fraction-free
    /// Bareiss elimination runs over `BigInt`.
    pub fn det_bareiss(&self) -> Result<ExactScalar, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut ints = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = self.row(i);
            let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            ints.extend(row.iter().map(|x| x.numer() * (&lcm / x.denom())));
            scale *= lcm;
        }
        Ok(ExactScalar::new(bareiss_det(n, ints), scale))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.data
            .iter()
            .map(|x| x.to_f64().expect("finite rational"))
            .collect()
    }

    /// Integer matrix `scale * self`, where `scale` is the least common
    /// denominator of all entries.
    pub fn clear_denominators(&self) -> (BigInt, Vec<BigInt>) {
        let scale = self
            .data
            .iter()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints = self
            .data
            .iter()
            .map(|x| x.numer() * (&scale / x.denom()))
            .collect();
        (scale, ints)
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: Self) -> ExactMatrix {
        self.matmul(rhs)
            .expect("dimension mismatch in matrix product")
    }
}

/// Fraction-free determinant of a row-major `n x n` integer matrix.
pub(crate) fn bareiss_det(n: usize, mut m: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            let Some(pivot) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                m.swap(k * n + j, pivot * n + j);
            }
            negate = !negate;
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            let factor = m[i * n + k].clone();
            for j in k + 1..n {
                let value = &m[i * n + j] * &pivot - &factor * &m[k * n + j];
                m[i * n + j] = value / &prev;
            }
            m[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = m[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Renders an exact scalar as `p/q` with `q >= 1`, including `q = 1`.
pub fn fraction_string(x: &ExactScalar) -> String {
    debug_assert!(x.denom().is_positive());
    format!("{}/{}", x.numer(), x.denom())
}
