//! Cyclotomic polynomials and the candidate eigenvalue orders they recognize.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use super::poly::IntPolynomial;

/// Euler's totient by trial-division factorization.
pub fn totient(mut d: u64) -> u64 {
    assert!(d >= 1, "totient is defined for d >= 1");
    let mut result = d;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            while d.is_multiple_of(p) {
                d /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if d > 1 {
        result -= result / d;
    }
    result
}

pub fn divisors(d: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= d {
        if d.is_multiple_of(i) {
            small.push(i);
            if i * i != d {
                large.push(d / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn memo() -> &'static RwLock<HashMap<u64, Arc<IntPolynomial>>> {
    static TABLE: OnceLock<RwLock<HashMap<u64, Arc<IntPolynomial>>>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// The `d`-th cyclotomic polynomial, obtained by dividing `x^d - 1` by every
/// `Phi_e` with `e | d`, `e < d`. Results are memoized process-wide.
pub fn cyclotomic(d: u64) -> Arc<IntPolynomial> {
    assert!(d >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(p) = memo().read().expect("cyclotomic memo poisoned").get(&d) {
        return Arc::clone(p);
    }
    let mut acc = &IntPolynomial::monomial(BigInt::one(), d as usize) - &IntPolynomial::one();
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        let (q, exact) = acc.divide_exact(&cyclotomic(e));
        assert!(exact, "Phi_{e} must divide x^{d} - 1");
        acc = q;
    }
    let p = Arc::new(acc);
    memo()
        .write()
        .expect("cyclotomic memo poisoned")
        .entry(d)
        .or_insert(p)
        .clone()
}

/// Every `d` with `phi(d) <= degree_bound`, increasing. Since
/// `phi(d) >= sqrt(d / 2)`, scanning `d <= 2 * bound^2` is complete.
pub fn totient_candidates(degree_bound: u64) -> Vec<u64> {
    assert!(degree_bound >= 1);
    (1..=2 * degree_bound * degree_bound)
        .filter(|&d| totient(d) <= degree_bound)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), p(&[-1, 1]));
        assert_eq!(*cyclotomic(2), p(&[1, 1]));
        assert_eq!(*cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(*cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        assert!(cyclotomic(105).coeffs().contains(&BigInt::from(-2)));
    }

    #[test]
    fn products_over_divisors() {
        for n in 1..=30u64 {
            let product = divisors(n)
                .into_iter()
                .fold(IntPolynomial::one(), |acc, d| &acc * &cyclotomic(d));
            let expected =
                &IntPolynomial::monomial(BigInt::one(), n as usize) - &IntPolynomial::one();
            assert_eq!(product, expected, "n = {n}");
        }
    }

    #[test]
    fn monic_with_totient_degree() {
        for d in 1..=200u64 {
            let phi = cyclotomic(d);
            assert!(phi.is_monic());
            assert_eq!(phi.degree(), Some(totient(d) as usize), "d = {d}");
        }
    }

    #[test]
    fn candidate_lists() {
        assert_eq!(totient_candidates(1), vec![1, 2]);
        assert_eq!(totient_candidates(2), vec![1, 2, 3, 4, 6]);
        assert_eq!(totient_candidates(4), vec![1, 2, 3, 4, 5, 6, 8, 10, 12]);
    }

    #[test]
    fn candidates_are_complete_against_wide_scan() {
        for bound in 1..=12u64 {
            let wide: Vec<u64> = (1..=20 * bound * bound)
                .filter(|&d| totient(d) <= bound)
                .collect();
            assert_eq!(totient_candidates(bound), wide);
        }
    }

    #[test]
    fn totient_values() {
        let phis: Vec<u64> = (1..=12).map(totient).collect();
        assert_eq!(phis, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
