//! Exact integer polynomials in `q` and in `q, t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `q`; index `i` holds the coefficient of `q^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(power: usize, coeff: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `[n]_q = 1 + q + ... + q^(n-1)`.
    pub fn q_integer(n: usize) -> Self {
        Self::from_coeffs(vec![BigInt::one(); n])
    }

    /// Exact quotient; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::Precondition("division by the zero polynomial".into()));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok(QPolynomial::zero());
        };
        if nd < dd {
            return Err(Error::InexactDivision);
        }
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::InexactDivision);
            }
            let c = top / lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(QPolynomial::from_coeffs(quot))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        self.normalize();
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, coeff: &BigInt, vars: &str) -> fmt::Result {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if vars.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{vars}")
    } else {
        write!(f, "{mag}*{vars}")
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &power("q", i))?;
            first = false;
        }
        Ok(())
    }
}

/// Gaussian binomial coefficient `[n choose k]_q`.
pub fn qbinom(n: usize, k: usize) -> QPolynomial {
    if k > n {
        return QPolynomial::zero();
    }
    // row[j] holds [m choose j]_q while m runs up to n
    let mut row = vec![QPolynomial::one()];
    for m in 1..=n {
        let mut next = vec![QPolynomial::one(); m + 1];
        for j in 1..m {
            let shifted = &QPolynomial::monomial(j, BigInt::one()) * &row[j];
            next[j] = &row[j - 1] + &shifted;
        }
        row = next;
    }
    row.swap_remove(k)
}

/// Sparse polynomial in `q` and `t`; key `(i, j)` is `q^i t^j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QTPolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl QTPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, q: u32, t: u32, coeff: BigInt) {
        let entry = self.terms.entry((q, t)).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(q, t));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigInt> {
        &self.terms
    }

    pub fn coeff(&self, q: u32, t: u32) -> BigInt {
        self.terms.get(&(q, t)).cloned().unwrap_or_default()
    }

    /// Exchanges the roles of `q` and `t`.
    pub fn swapped(&self) -> QTPolynomial {
        QTPolynomial {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swapped()
    }

    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * q.pow(i) * t.pow(j))
            .sum()
    }
}

impl AddAssign<&QTPolynomial> for QTPolynomial {
    fn add_assign(&mut self, rhs: &QTPolynomial) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

impl fmt::Display for QTPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            let mut vars = power("q", i as usize);
            let tp = power("t", j as usize);
            if !vars.is_empty() && !tp.is_empty() {
                vars.push('*');
            }
            vars.push_str(&tp);
            write_term(f, n == 0, c, &vars)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_binomials() {
        assert_eq!(qbinom(4, 2), QPolynomial::from_i64(&[1, 1, 2, 1, 1]));
        assert_eq!(qbinom(5, 0), QPolynomial::one());
        assert_eq!(qbinom(5, 5), QPolynomial::one());
        assert!(qbinom(2, 3).is_zero());
        assert_eq!(qbinom(10, 4).eval(&BigInt::one()), BigInt::from(210));
    }

    #[test]
    fn exact_division() {
        let f = qbinom(5, 2).div_exact(&QPolynomial::q_integer(5)).unwrap();
        assert_eq!(f, QPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(f.to_string(), "1 + q^2");
        assert_eq!(qbinom(6, 2).div_exact(&QPolynomial::q_integer(6)), Err(Error::InexactDivision));
    }

    #[test]
    fn arithmetic() {
        let a = QPolynomial::from_i64(&[1, 1]);
        let b = QPolynomial::from_i64(&[1, -1]);
        assert_eq!(&a * &b, QPolynomial::from_i64(&[1, 0, -1]));
        assert_eq!((&a + &b).degree(), Some(0));
        assert_eq!(QPolynomial::zero().degree(), None);
        assert_eq!(QPolynomial::from_i64(&[0, -2, 1]).to_string(), "-2*q + q^2");
    }

    #[test]
    fn qt_swap() {
        let mut p = QTPolynomial::zero();
        p.add_term(2, 0, BigInt::one());
        p.add_term(0, 2, BigInt::one());
        p.add_term(1, 1, BigInt::from(3));
        assert!(p.is_symmetric());
        p.add_term(1, 0, BigInt::one());
        assert!(!p.is_symmetric());
        assert_eq!(p.eval(&BigInt::one(), &BigInt::one()), BigInt::from(6));
        p.add_term(1, 0, BigInt::from(-1));
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.to_string(), "t^2 + 3*q*t + q^2");
    }
}
