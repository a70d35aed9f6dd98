use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::index::ExponentVector;
use crate::scalar::Scalar;

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept in graded lexicographic order and zero coefficients are
/// never stored.
#[derive(Clone, PartialEq)]
pub struct SparsePolynomial<R> {
    nvars: usize,
    terms: BTreeMap<ExponentVector, R>,
}

impl<R: Scalar> SparsePolynomial<R> {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(ExponentVector::zeros(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, R::one())
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut e = ExponentVector::zeros(nvars);
        e.0[var] = 1;
        Self::from_terms(nvars, [(e, R::one())])
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, R)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c * x^e`, dropping the term if it cancels.
    pub fn add_term(&mut self, e: ExponentVector, c: R) {
        assert_eq!(e.len(), self.nvars, "monomial has the wrong number of variables");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &R)> {
        self.terms.iter()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(|e| e.total_degree())
    }

    /// Coefficient of `x^e`, zero when absent.
    pub fn coefficient(&self, e: &ExponentVector) -> R {
        self.terms.get(e).cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, point: &[R]) -> R {
        assert_eq!(point.len(), self.nvars);
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    term = term * x.pow(k);
                }
            }
            acc = acc + term;
        }
        acc
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())),
        )
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Maps every coefficient into another scalar type.
    pub fn map_coefficients<S: Scalar>(&self, f: impl Fn(&R) -> S) -> SparsePolynomial<S> {
        SparsePolynomial::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }
}

impl<R: Scalar> Add for &SparsePolynomial<R> {
    type Output = SparsePolynomial<R>;
    fn add(self, rhs: Self) -> SparsePolynomial<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<R: Scalar> Sub for &SparsePolynomial<R> {
    type Output = SparsePolynomial<R>;
    fn sub(self, rhs: Self) -> SparsePolynomial<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<R: Scalar> Neg for &SparsePolynomial<R> {
    type Output = SparsePolynomial<R>;
    fn neg(self) -> SparsePolynomial<R> {
        self.scale(&-R::one())
    }
}

impl<R: Scalar> Mul for &SparsePolynomial<R> {
    type Output = SparsePolynomial<R>;
    fn mul(self, rhs: Self) -> SparsePolynomial<R> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = SparsePolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.add(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Scalar> fmt::Debug for SparsePolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (var, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{var}")?,
                    _ => write!(f, "*x{var}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = SparsePolynomial<BigInt>;

    fn x(var: usize) -> P {
        P::variable(2, var)
    }

    #[test]
    fn binomial_square() {
        let d = &x(0) - &x(1);
        let sq = &d * &d;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coefficient(&ExponentVector(vec![1, 1])), BigInt::from(-2));
        assert_eq!(sq.total_degree(), Some(2));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        assert_eq!(p.total_degree(), None);
    }

    #[test]
    fn evaluation_matches_product() {
        let a = &x(0) + &P::constant(2, BigInt::from(3));
        let b = &x(1) - &x(0);
        let prod = &a * &b;
        let pt = [BigInt::from(2), BigInt::from(-5)];
        assert_eq!(prod.eval(&pt), a.eval(&pt) * b.eval(&pt));
        assert_eq!((&a).pow(3).eval(&pt), BigInt::from(125));
    }
}
