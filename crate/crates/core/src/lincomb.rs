//! Finitely supported linear combinations over an ordered basis, and their
//! tensor squares.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::rational::Rational;

/// `(depth, weight)`.
pub type Bidegree = (usize, usize);

/// A basis element of a bigraded vector space.
pub trait Basis: Ord + Clone + fmt::Debug {
    fn bidegree(&self) -> Bidegree;
}

/// A finite rational combination of basis elements. No zero coefficients are
/// ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Rational::one())
    }

    pub fn term(k: K, c: Rational) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(it: I) -> Self {
        let mut s = Self::zero();
        for (k, c) in it {
            s.add_term(k, c);
        }
        s
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &LinComb<K>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn coeff(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_default()
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, Rational)> {
        self.terms.into_iter()
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L: Ord + Clone, F: FnMut(&K) -> LinComb<L>>(&self, mut f: F) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Keeps only the terms satisfying `pred`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut pred: F) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Canonical pairing: basis elements are orthonormal.
    pub fn pairing(&self, other: &LinComb<K>) -> Rational {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(k, v)| large.terms.get(k).map(|w| v * w))
            .sum()
    }
}

impl<K: Basis> LinComb<K> {
    /// The homogeneous component of the given bidegree.
    pub fn component(&self, b: Bidegree) -> Self {
        self.filter(|k| k.bidegree() == b)
    }

    /// The bidegree shared by all terms, or `None` for zero or mixed input.
    pub fn homogeneous_bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(Basis::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-Rational::one())
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: LinComb<K>) -> LinComb<K> {
        &self + &rhs
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: LinComb<K>) -> LinComb<K> {
        &self - &rhs
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag.is_one() {
                write!(f, "{k}")?;
            } else {
                write!(f, "{mag:?} {k}")?;
            }
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// An element of `A ⊗ B` written in the basis of pure tensors.
pub type Tensor<K, L = K> = LinComb<(K, L)>;

impl<K: Ord + Clone, L: Ord + Clone> LinComb<(K, L)> {
    pub fn pure(a: &LinComb<K>, b: &LinComb<L>) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                out.add_term((ka.clone(), kb.clone()), ca * cb);
            }
        }
        out
    }

    /// Applies `f ⊗ g`.
    pub fn map_both<K2, L2, F, G>(&self, mut f: F, mut g: G) -> Tensor<K2, L2>
    where
        K2: Ord + Clone,
        L2: Ord + Clone,
        F: FnMut(&K) -> LinComb<K2>,
        G: FnMut(&L) -> LinComb<L2>,
    {
        let mut out = Tensor::zero();
        for ((a, b), c) in self.iter() {
            let fa = f(a);
            let gb = g(b);
            out.add_scaled(c, &Tensor::pure(&fa, &gb));
        }
        out
    }
}

impl<K: Ord + Clone> LinComb<(K, K)> {
    /// The flip `a ⊗ b ↦ b ⊗ a`.
    pub fn swap(&self) -> Self {
        Self::from_terms(self.iter().map(|((a, b), c)| ((b.clone(), a.clone()), c.clone())))
    }

    /// `(id - τ)(self)`.
    pub fn antisymmetrize(&self) -> Self {
        self - &self.swap()
    }

    /// `a ∧ b = a ⊗ b - b ⊗ a`.
    pub fn wedge(a: &LinComb<K>, b: &LinComb<K>) -> Self {
        &Self::pure(a, b) - &Self::pure(b, a)
    }
}

impl<A: Basis, B: Basis> Basis for (A, B) {
    fn bidegree(&self) -> Bidegree {
        let (x, y) = (self.0.bidegree(), self.1.bidegree());
        (x.0 + y.0, x.1 + y.1)
    }
}

/// An ordered basis of one homogeneous block, with reverse lookup.
#[derive(Clone, Debug)]
pub struct BlockBasis<K: Ord> {
    elements: Vec<K>,
    index: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> BlockBasis<K> {
    pub fn new(elements: Vec<K>) -> Self {
        let index = elements.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Self { elements, index }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &K {
        &self.elements[i]
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    /// Coordinates of `v`; `None` if `v` has terms outside this block.
    pub fn coords(&self, v: &LinComb<K>) -> Option<crate::linalg::SparseVec> {
        let mut entries = Vec::with_capacity(v.len());
        for (k, c) in v.iter() {
            entries.push((self.index_of(k)?, c.clone()));
        }
        Some(crate::linalg::SparseVec::from_entries(entries))
    }

    pub fn element_of(&self, v: &crate::linalg::SparseVec) -> LinComb<K> {
        LinComb::from_terms(v.iter().map(|(i, c)| (self.elements[i].clone(), c.clone())))
    }
}
