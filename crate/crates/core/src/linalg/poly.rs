//! Dense univariate polynomials, coefficients stored lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficient ring for [`Polynomial`].
pub trait Coefficient:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Sub<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
{
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRational>;

impl<C: Coefficient> Polynomial<C> {
    /// Builds a polynomial from coefficients `c0, c1, ...`; trailing zeros are dropped.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![C::zero(), C::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Divides by a monic polynomial. Returns `(quotient, true)` when the
    /// division is exact, and `(self, false)` otherwise.
    pub fn divide_exact(&self, divisor: &Self) -> (Self, bool) {
        assert!(divisor.is_monic(), "divisor must be monic");
        match self.div_rem_monic(divisor) {
            (q, r) if r.is_zero() => (q, true),
            _ => (self.clone(), false),
        }
    }

    /// Long division by a monic divisor. Only ring operations are used, so
    /// integer inputs yield integer quotient and remainder.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree().expect("monic divisor is nonzero");
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let factor = rem[k + dd].clone();
            if factor.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - &(factor.clone() * d);
            }
            quot[k] = factor;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl IntPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content, keeping a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|c| c < &BigInt::zero()) {
            g = -g;
        }
        self.map(|c| c / &g)
    }
}

impl RatPolynomial {
    /// Divides by the leading coefficient.
    pub fn to_monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
        }
    }

    /// The integer polynomial, if every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Polynomial::new(out)
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn normalization_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(
            p(&[-1, 0, 1]).divide_exact(&p(&[-1, 1])),
            (p(&[1, 1]), true)
        );
        let (_, ok) = p(&[1, 0, 1]).divide_exact(&p(&[-1, 1]));
        assert!(!ok);
        assert_eq!(
            p(&[1, 0, -2, 0, 1]).divide_exact(&p(&[-1, 0, 1])),
            (p(&[-1, 0, 1]), true)
        );
    }

    #[test]
    fn failed_division_leaves_input() {
        let a = p(&[3, 0, 1]);
        assert_eq!(a.divide_exact(&p(&[1, 1])), (a.clone(), false));
    }

    #[test]
    fn lower_degree_dividend() {
        let (q, r) = p(&[5]).div_rem_monic(&p(&[1, 1]));
        assert!(q.is_zero());
        assert_eq!(r, p(&[5]));
        assert_eq!(
            IntPolynomial::zero().divide_exact(&p(&[1, 1])),
            (IntPolynomial::zero(), true)
        );
    }

    #[test]
    fn content_and_primitive_part() {
        let a = p(&[-4, 6, -2]);
        assert_eq!(a.content(), BigInt::from(2));
        assert_eq!(a.primitive_part(), p(&[2, -3, 1]));
    }

    #[test]
    fn pow_and_eval() {
        let a = p(&[-1, 0, 1]).pow(2);
        assert_eq!(a, p(&[1, 0, -2, 0, 1]));
        assert_eq!(a.eval(&BigInt::from(2)), BigInt::from(9));
    }

    #[test]
    fn rational_monic() {
        let a = p(&[2, 4, 8]).to_rational().to_monic();
        assert!(a.is_monic());
        assert_eq!(a.coeff(0), BigRational::new(1.into(), 4.into()));
        assert_eq!(p(&[1, 2]).to_rational().to_integer(), Some(p(&[1, 2])));
        assert_eq!(a.to_integer(), None);
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-20i64..20, 0..7).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn product_divides_back(a in small_poly(), tail in prop::collection::vec(-5i64..5, 0..4)) {
            let mut b = tail;
            b.push(1);
            let b = p(&b);
            let (q, ok) = (&a * &b).divide_exact(&b);
            prop_assert!(ok);
            prop_assert_eq!(q, a);
        }

        #[test]
        fn division_identity(a in small_poly(), tail in prop::collection::vec(-5i64..5, 0..4)) {
            let mut b = tail;
            b.push(1);
            let b = p(&b);
            let (q, r) = a.div_rem_monic(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
