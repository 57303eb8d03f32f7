//! Determinants of polynomial matrices by evaluation and interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::bareiss_det;
use super::poly::{IntPolynomial, RatPolynomial};
use super::LinalgError;

/// Square matrix with integer-polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> IntPolynomial) -> Self {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        PolyMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i * self.n + j]
    }

    /// Largest entry degree (0 when every entry is constant or zero).
    pub fn max_entry_degree(&self) -> usize {
        self.entries
            .iter()
            .filter_map(IntPolynomial::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &BigInt) -> Vec<BigInt> {
        self.entries.iter().map(|p| p.eval(x)).collect()
    }
}

/// Symmetric evaluation points `-r..=r` covering at least `count` points.
pub fn symmetric_points(count: usize) -> Vec<i64> {
    let r = (count / 2) as i64;
    (-r..=r).collect()
}

/// Determinant of an `n x n` matrix whose entries have degree at most 2.
///
/// The result has degree at most `2n`; it is recovered from integer Bareiss
/// determinants at the `2n + 1` points `-n..=n`.
pub fn charpoly_interpolated(m: &PolyMatrix) -> Result<IntPolynomial, LinalgError> {
    if m.max_entry_degree() > 2 {
        return Err(LinalgError::Dimension(format!(
            "entries must have degree at most 2, found {}",
            m.max_entry_degree()
        )));
    }
    det_interpolated_at(m, &symmetric_points(2 * m.size() + 1))
}

/// Determinant of a polynomial matrix from its values at `points`.
///
/// Needs more distinct points than `n * max_entry_degree`.
pub fn det_interpolated_at(m: &PolyMatrix, points: &[i64]) -> Result<IntPolynomial, LinalgError> {
    let bound = m.size() * m.max_entry_degree();
    let mut sorted = points.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != points.len() || points.len() <= bound {
        return Err(LinalgError::Dimension(format!(
            "need at least {} distinct evaluation points, got {}",
            bound + 1,
            sorted.len()
        )));
    }
    let xs: Vec<BigInt> = points.iter().map(|&x| BigInt::from(x)).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|x| bareiss_det(m.size(), m.eval(x)))
        .collect();
    let poly = newton_interpolate(&xs, &ys);
    poly.to_integer().ok_or(LinalgError::NonIntegerCoefficient)
}

/// The unique polynomial of degree `< xs.len()` through the given points.
pub fn newton_interpolate(xs: &[BigInt], ys: &[BigInt]) -> RatPolynomial {
    assert_eq!(xs.len(), ys.len());
    let k = xs.len();
    let mut table: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..k {
        for i in (level..k).rev() {
            let num = &table[i] - &table[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            table[i] = num / den;
        }
    }
    let mut poly = RatPolynomial::zero();
    for i in (0..k).rev() {
        let root = RatPolynomial::new(vec![
            BigRational::from_integer(-xs[i].clone()),
            BigRational::from_integer(1.into()),
        ]);
        poly = &(&poly * &root) + &RatPolynomial::constant(table[i].clone());
    }
    if poly.coeffs().iter().all(Zero::is_zero) {
        RatPolynomial::zero()
    } else {
        poly
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    /// `det((x^2 + 1) d I - 2x A)` for a 0/1 adjacency matrix `a` and constant degree `d`.
    fn grover_form(a: &[Vec<i64>], degree: &[i64]) -> PolyMatrix {
        PolyMatrix::from_fn(a.len(), |i, j| {
            if i == j {
                p(&[degree[i], 0, degree[i]])
            } else {
                p(&[0, -2 * a[i][j]])
            }
        })
    }

    #[test]
    fn p2_grover_determinant() {
        // (x^2 + 1)^2 - 4x^2 = x^4 - 2x^2 + 1
        let m = grover_form(&[vec![0, 1], vec![1, 0]], &[1, 1]);
        assert_eq!(charpoly_interpolated(&m).unwrap(), p(&[1, 0, -2, 0, 1]));
    }

    #[test]
    fn c3_grover_determinant() {
        // Adjacency eigenvalues 2, -1, -1: product of 2(x^2 + 1) - 2x * lambda.
        let a = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
        let m = grover_form(&a, &[2, 2, 2]);
        let expected = &p(&[8]) * &(&p(&[-1, 1]).pow(2) * &p(&[1, 1, 1]).pow(2));
        assert_eq!(charpoly_interpolated(&m).unwrap(), expected);
    }

    #[test]
    fn one_by_one() {
        let m = PolyMatrix::from_fn(1, |_, _| p(&[1, 0, 1]));
        assert_eq!(charpoly_interpolated(&m).unwrap(), p(&[1, 0, 1]));
    }

    #[test]
    fn independent_of_evaluation_points() {
        let a = vec![
            vec![0, 1, 1, 1],
            vec![1, 0, 1, 0],
            vec![1, 1, 0, 0],
            vec![1, 0, 0, 0],
        ];
        let m = grover_form(&a, &[3, 2, 2, 1]);
        let first = det_interpolated_at(&m, &(-4..=4).collect::<Vec<_>>()).unwrap();
        let second = det_interpolated_at(&m, &(10..19).collect::<Vec<_>>()).unwrap();
        assert_eq!(first, second);
        assert_eq!(first, charpoly_interpolated(&m).unwrap());
    }

    #[test]
    fn rejects_too_few_points_and_high_degree() {
        let m = PolyMatrix::from_fn(2, |_, _| p(&[0, 0, 1]));
        assert!(det_interpolated_at(&m, &[0, 1, 2, 3]).is_err());
        assert!(det_interpolated_at(&m, &[0, 1, 1, 2, 3]).is_err());
        let cubic = PolyMatrix::from_fn(1, |_, _| p(&[0, 0, 0, 1]));
        assert!(charpoly_interpolated(&cubic).is_err());
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let target = p(&[3, -1, 0, 2]);
        let xs: Vec<BigInt> = (-2..=1).map(BigInt::from).collect();
        let ys: Vec<BigInt> = xs.iter().map(|x| target.eval(x)).collect();
        assert_eq!(newton_interpolate(&xs, &ys).to_integer().unwrap(), target);
    }
}
