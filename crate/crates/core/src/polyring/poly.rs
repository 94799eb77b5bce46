use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use crate::field::Coefficient;

/// Polynomial in a fixed number of variables; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePolynomial<C> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> SparsePolynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, nvars: usize) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Self::term(C::one(), Monomial::var(i, nvars))
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Degree of the leading term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Common degree of all terms. The zero polynomial has none.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())),
        )
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "operands live in different rings");
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Formal partial derivative with respect to `X_i`.
    pub fn partial_derivative(&self, i: usize) -> Self {
        assert!(i < self.nvars, "variable index out of range");
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if let Some(q) = m.div_var(i) {
                out.add_term(q, c.clone() * C::from_i64(e as i64));
            }
        }
        out
    }

    /// `sum_i X_i * dp/dX_i`.
    pub fn euler_operator(&self) -> Self {
        (0..self.nvars).fold(Self::zero(self.nvars), |acc, i| {
            acc + self.partial_derivative(i).mul_monomial(&Monomial::var(i, self.nvars))
        })
    }
}

impl<C: Coefficient> Add for SparsePolynomial<C> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Coefficient> Neg for SparsePolynomial<C> {
    type Output = Self;
    fn neg(self) -> Self {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Coefficient> Sub for SparsePolynomial<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Coefficient> Mul for &SparsePolynomial<C> {
    type Output = SparsePolynomial<C>;
    fn mul(self, rhs: Self) -> SparsePolynomial<C> {
        self.multiply(rhs)
    }
}
