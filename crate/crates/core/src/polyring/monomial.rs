use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Exponent vector of a monomial in `n + 1` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self * X_i`.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// `self / X_i` when `X_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some(Monomial(e))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, e)| format!("X{i}^{e}"))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// `C(n, k)` with `C(n, k) = 0` outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

fn fill(nvars: usize, m: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if prefix.len() + 1 == nvars {
        prefix.push(m);
        out.push(Monomial(prefix.clone()));
        prefix.pop();
        return;
    }
    for e in (0..=m).rev() {
        prefix.push(e);
        fill(nvars, m - e, prefix, out);
        prefix.pop();
    }
}

/// All monomials of degree `m` in `X_0..X_n`, largest first. Empty for `m < 0`.
pub fn monomial_basis(n: usize, m: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if m < 0 {
        return out;
    }
    fill(n + 1, m as u32, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

/// A degree-`m` monomial basis with a reverse index.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub n: usize,
    pub degree: i64,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, degree: i64) -> Self {
        let monomials = monomial_basis(n, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis {
            n,
            degree,
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn get(&self, k: usize) -> &Monomial {
        &self.monomials[k]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_small() {
        let b = monomial_basis(1, 2);
        let want: Vec<Monomial> = [[2, 0], [1, 1], [0, 2]]
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect();
        assert_eq!(b, want);
        assert_eq!(monomial_basis(2, 0), vec![Monomial::one(3)]);
        assert!(monomial_basis(3, -1).is_empty());
    }

    #[test]
    fn basis_counts_match_binomials() {
        assert_eq!(monomial_basis(4, 4).len(), 70);
        for n in 0..5 {
            for m in 0..7 {
                assert_eq!(monomial_basis(n, m).len() as u128, binomial(n as i64 + m, n as i64));
            }
        }
    }

    #[test]
    fn basis_is_strictly_descending() {
        let b = monomial_basis(3, 4);
        assert!(b.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
