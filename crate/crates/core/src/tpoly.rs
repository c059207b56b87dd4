//! Polynomials in `t` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A polynomial `c_0 + c_1 t + ... + c_d t^d` over the rationals.
///
/// Trailing zero coefficients are never stored, so the zero polynomial has an
/// empty coefficient vector and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly {
    coeffs: Vec<Rational>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `t^k`.
    pub fn t_pow(k: usize) -> Self {
        Self::monomial(rat(1), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(it: I) -> Self {
        Self::from_coeffs(it.into_iter().map(rat).collect())
    }

    /// Builds a polynomial from nonnegative counts indexed by degree.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(
            counts
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// True when the nonzero coefficients read the same from both ends.
    pub fn is_palindromic(&self) -> bool {
        match (self.valuation(), self.degree()) {
            (Some(lo), Some(hi)) => (0..=(hi - lo)).all(|j| self.coeffs[lo + j] == self.coeffs[hi - j]),
            _ => true,
        }
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        TPoly::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(out)
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        *self = &*self + rhs;
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl Sub for TPoly {
    type Output = TPoly;
    fn sub(self, rhs: TPoly) -> TPoly {
        &self - &rhs
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

fn superscript(mut k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut out = Vec::new();
    while k > 0 {
        out.push(DIGITS[k % 10]);
        k /= 10;
    }
    out.iter().rev().collect()
}

fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

/// Renders as `3t+3t²`, `1-t`, `(1/2)t`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t{}", superscript(k)),
            };
            if k == 0 || !mag.is_one() {
                write!(f, "{}", fmt_rational(&mag))?;
            }
            write!(f, "{var}")?;
        }
        Ok(())
    }
}

/// `[k]_t = 1 + t + ... + t^(k-1)`; `[0]_t` is zero.
pub fn t_bracket(k: usize) -> TPoly {
    TPoly::from_ints(std::iter::repeat_n(1, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_trailing_zeros() {
        let p = TPoly::from_ints([1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(TPoly::from_ints([0, 0]), TPoly::zero());
    }

    #[test]
    fn arithmetic() {
        let a = TPoly::from_ints([1, 1]);
        let b = TPoly::from_ints([1, -1]);
        assert_eq!(&a * &b, TPoly::from_ints([1, 0, -1]));
        assert_eq!(&a + &b, TPoly::from_ints([2]));
        assert_eq!(&a - &a, TPoly::zero());
        assert_eq!(a.eval(&rat(2)), rat(3));
    }

    #[test]
    fn brackets() {
        assert_eq!(t_bracket(1), TPoly::one());
        assert_eq!(t_bracket(2), TPoly::from_ints([1, 1]));
        assert_eq!(t_bracket(4), TPoly::from_ints([1, 1, 1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(TPoly::from_ints([0, 3, 3]).to_string(), "3t+3t²");
        assert_eq!(TPoly::from_ints([1, -1]).to_string(), "1-t");
        assert_eq!(TPoly::one().to_string(), "1");
        let half = TPoly::monomial(Rational::new(1.into(), 2.into()), 1);
        assert_eq!(half.to_string(), "(1/2)t");
    }

    #[test]
    fn palindromes() {
        assert!(TPoly::from_ints([0, 3, 3]).is_palindromic());
        assert!(TPoly::from_ints([0, 1, 4, 1]).is_palindromic());
        assert!(!TPoly::from_ints([1, 2]).is_palindromic());
    }
}
