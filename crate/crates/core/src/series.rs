//! Truncated multivariate power series whose coefficients are linear
//! combinations, with exact linear substitution of variables and products
//! through an arbitrary bilinear map on coefficients.

use std::collections::{BTreeMap, HashMap};

use crate::commring::CommPoly;
use crate::lincomb::LinComb;
use crate::rational::Rational;

/// `Σ_α c_α s^α` over `num_vars` commuting variables, keeping only exponent
/// vectors of total degree at most `max_degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<K: Ord> {
    num_vars: usize,
    max_degree: usize,
    terms: BTreeMap<Vec<u32>, LinComb<K>>,
}

fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl<K: Ord + Clone> TruncatedSeries<K> {
    pub fn zero(num_vars: usize, max_degree: usize) -> Self {
        Self {
            num_vars,
            max_degree,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series with the given value.
    pub fn constant(num_vars: usize, max_degree: usize, c: LinComb<K>) -> Self {
        let mut s = Self::zero(num_vars, max_degree);
        s.add_term(vec![0; num_vars], &Rational::one(), &c);
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Adds `r · c · s^e`; terms beyond the truncation are dropped.
    pub fn add_term(&mut self, e: Vec<u32>, r: &Rational, c: &LinComb<K>) {
        assert_eq!(e.len(), self.num_vars, "exponent vector length");
        if degree(&e) > self.max_degree || r.is_zero() || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.scale(r));
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_scaled(r, c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, e: &[u32]) -> LinComb<K> {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &LinComb<K>)> {
        self.terms.iter()
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

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.num_vars, other.num_vars, "series in different variables");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = Self::zero(self.num_vars, self.max_degree.min(other.max_degree));
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(e.clone(), &Rational::one(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.num_vars, self.max_degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), r, c);
        }
        out
    }

    /// Lowers the truncation order.
    pub fn truncate(&self, max_degree: usize) -> Self {
        let mut out = Self::zero(self.num_vars, max_degree.min(self.max_degree));
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &Rational::one(), c);
        }
        out
    }

    /// The terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        let mut out = Self::zero(self.num_vars, self.max_degree);
        for (e, c) in self.terms.iter().filter(|(e, _)| degree(e) == d) {
            out.add_term(e.clone(), &Rational::one(), c);
        }
        out
    }

    /// Applies a linear map to every coefficient.
    pub fn map_coeffs<L: Ord + Clone, F: FnMut(&LinComb<K>) -> LinComb<L>>(&self, mut f: F) -> TruncatedSeries<L> {
        let mut out = TruncatedSeries::zero(self.num_vars, self.max_degree);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &Rational::one(), &f(c));
        }
        out
    }

    /// `Σ_{α,β} f(a_α, b_β) s^{α+β}` truncated at the smaller order.
    pub fn product<L, M, F>(&self, other: &TruncatedSeries<L>, mut f: F) -> TruncatedSeries<M>
    where
        L: Ord + Clone,
        M: Ord + Clone,
        F: FnMut(&LinComb<K>, &LinComb<L>) -> LinComb<M>,
    {
        assert_eq!(self.num_vars, other.num_vars, "series in different variables");
        let max_degree = self.max_degree.min(other.max_degree);
        let mut out = TruncatedSeries::zero(self.num_vars, max_degree);
        for (ea, ca) in &self.terms {
            let da = degree(ea);
            for (eb, cb) in &other.terms {
                if da + degree(eb) > max_degree {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, &Rational::one(), &f(ca, cb));
            }
        }
        out
    }

    /// Substitutes `s_i ↦ images[i]`, homogeneous linear forms in
    /// `images[0].num_vars()` new variables. Degrees are preserved, so the
    /// truncation order is kept.
    pub fn substitute(&self, images: &[CommPoly]) -> Self {
        assert_eq!(images.len(), self.num_vars, "one image per variable");
        let new_vars = images.first().map_or(0, CommPoly::num_vars);
        let mut sub = LinearSubstitution::new(images);
        let mut out = Self::zero(new_vars, self.max_degree);
        for (e, c) in &self.terms {
            for (mono, r) in sub.expand(e).terms().iter() {
                out.add_term(mono.exponents().to_vec(), r, c);
            }
        }
        out
    }

    /// Substitutes `s_j ↦ s'_{targets[j]}` into `new_vars` variables, where
    /// `targets` is injective.
    pub fn rename_vars(&self, targets: &[usize], new_vars: usize) -> Self {
        assert_eq!(targets.len(), self.num_vars, "one target per variable");
        let mut out = Self::zero(new_vars, self.max_degree);
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; new_vars];
            for (j, &x) in e.iter().enumerate() {
                ne[targets[j]] += x;
            }
            out.add_term(ne, &Rational::one(), c);
        }
        out
    }
}

/// Expands monomials under a fixed linear substitution, caching powers of the
/// images.
pub struct LinearSubstitution<'a> {
    images: &'a [CommPoly],
    powers: HashMap<(usize, u32), CommPoly>,
}

impl<'a> LinearSubstitution<'a> {
    pub fn new(images: &'a [CommPoly]) -> Self {
        Self {
            images,
            powers: HashMap::new(),
        }
    }

    fn power(&mut self, i: usize, e: u32) -> CommPoly {
        if e == 0 {
            let n = self.images[i].num_vars();
            return CommPoly::constant(n, Rational::one());
        }
        if let Some(p) = self.powers.get(&(i, e)) {
            return p.clone();
        }
        let p = self.power(i, e - 1).mul(&self.images[i]).expect("images share a ring");
        self.powers.insert((i, e), p.clone());
        p
    }

    /// The image of `s^e`.
    pub fn expand(&mut self, e: &[u32]) -> CommPoly {
        let n = self.images.first().map_or(0, CommPoly::num_vars);
        let mut acc = CommPoly::constant(n, Rational::one());
        for (i, &x) in e.iter().enumerate() {
            if x > 0 {
                acc = acc.mul(&self.power(i, x)).expect("images share a ring");
            }
        }
        acc
    }
}

/// The linear form `Σ c_j x_j` in `num_vars` variables, from `(j, c_j)` with
/// `j` 0-based.
pub fn linear_form(num_vars: usize, coeffs: &[(usize, i64)]) -> CommPoly {
    let mut p = CommPoly::zero(num_vars);
    for &(j, c) in coeffs {
        p = p.add(&CommPoly::var(num_vars, j + 1).scale(&Rational::from_int(c))).unwrap();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = TruncatedSeries<u32>;

    fn c(k: u32) -> LinComb<u32> {
        LinComb::basis(k)
    }

    #[test]
    fn truncation_drops_high_terms() {
        let mut s = S::zero(2, 2);
        s.add_term(vec![1, 2], &Rational::one(), &c(0));
        assert!(s.is_zero());
        s.add_term(vec![1, 1], &Rational::one(), &c(0));
        assert_eq!(s.len(), 1);
        s.add_term(vec![1, 1], &-Rational::one(), &c(0));
        assert!(s.is_zero());
    }

    #[test]
    fn substitution_expands_binomially() {
        // s^2 with s = a + b gives a^2 + 2ab + b^2.
        let mut s = S::zero(1, 4);
        s.add_term(vec![2], &Rational::one(), &c(7));
        let out = s.substitute(&[linear_form(2, &[(0, 1), (1, 1)])]);
        assert_eq!(out.coeff(&[1, 1]), c(7).scale(&Rational::from_int(2)));
        assert_eq!(out.coeff(&[2, 0]), c(7));
        assert_eq!(out.len(), 3);
    }

    #[test]
    fn product_of_geometric_series() {
        // (Σ t^n)(Σ t^n) has coefficient n+1 at t^n.
        let mut g = S::zero(1, 5);
        for n in 0..=5 {
            g.add_term(vec![n], &Rational::one(), &c(0));
        }
        let p = g.product(&g, |a, b| {
            let mut out = LinComb::zero();
            for (_, x) in a.iter() {
                for (_, y) in b.iter() {
                    out.add_term(0u32, x * y);
                }
            }
            out
        });
        for n in 0..=5u32 {
            assert_eq!(p.coeff(&[n]).coeff(&0), Rational::from_int(n as i64 + 1));
        }
    }

    #[test]
    fn rename_moves_exponents() {
        let mut s = S::zero(2, 3);
        s.add_term(vec![2, 1], &Rational::one(), &c(1));
        let r = s.rename_vars(&[2, 0], 3);
        assert_eq!(r.coeff(&[1, 0, 2]), c(1));
    }
}
