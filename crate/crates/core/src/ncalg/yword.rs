use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lincomb::{Basis, Bidegree, LinComb};
use crate::rational::Rational;

use super::word::{Letter, Word};
use super::NcPoly;

/// A monomial `y_{n_1} ... y_{n_m}` in the free algebra on `y_1, y_2, ...`.
///
/// Depth is `m`, weight is `n_1 + ... + n_m`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YWord(pub Vec<u32>);

pub type YPoly = LinComb<YWord>;

impl YWord {
    pub fn new(indices: Vec<u32>) -> Self {
        assert!(indices.iter().all(|&n| n >= 1), "y-indices start at 1");
        YWord(indices)
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&n| n as usize).sum()
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for YWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight(), self.depth(), &self.0).cmp(&(other.weight(), other.depth(), &other.0))
    }
}

impl PartialOrd for YWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Basis for YWord {
    fn bidegree(&self) -> Bidegree {
        (self.depth(), self.weight())
    }
}

impl fmt::Display for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "y{n}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for YWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `π(x^{n_1-1} z ... x^{n_m-1} z) = y_{n_1} ... y_{n_m}`; words ending in `x`
/// go to zero.
pub fn project_word(w: &Word) -> Option<YWord> {
    if w.last() == Some(Letter::X) {
        return None;
    }
    let blocks = w.x_blocks();
    Some(YWord(blocks[..blocks.len() - 1].iter().map(|&e| e as u32 + 1).collect()))
}

pub fn project_pi(p: &NcPoly) -> YPoly {
    let mut out = YPoly::zero();
    for (w, c) in p.iter() {
        if let Some(y) = project_word(w) {
            out.add_term(y, c.clone());
        }
    }
    out
}

/// The section of `π` sending `y_{n_1} ... y_{n_m}` to `x^{n_1-1} z ... x^{n_m-1} z`.
pub fn section_word(y: &YWord) -> Word {
    let mut w = Word::EMPTY;
    for &n in &y.0 {
        w = w.concat(&Word::x_power(n as usize - 1)).push(Letter::Z);
    }
    w
}

pub fn section_i(p: &YPoly) -> NcPoly {
    NcPoly::from_terms(p.iter().map(|(y, c)| (section_word(y), c.clone())))
}

/// Multiset of interleavings of two sequences.
pub(crate) fn interleavings<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    fn rec<T: Clone>(a: &[T], b: &[T], cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if a.is_empty() || b.is_empty() {
            let mut v = cur.clone();
            v.extend_from_slice(a);
            v.extend_from_slice(b);
            out.push(v);
            return;
        }
        cur.push(a[0].clone());
        rec(&a[1..], b, cur, out);
        cur.pop();
        cur.push(b[0].clone());
        rec(a, &b[1..], cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(a, b, &mut Vec::new(), &mut out);
    out
}

pub fn y_shuffle_words(a: &YWord, b: &YWord) -> YPoly {
    YPoly::from_terms(
        interleavings(&a.0, &b.0)
            .into_iter()
            .map(|v| (YWord(v), Rational::one())),
    )
}

/// The shuffle product on `K<Y>`.
pub fn y_shuffle(a: &YPoly, b: &YPoly) -> YPoly {
    let mut out = YPoly::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_scaled(&(cu * cv), &y_shuffle_words(u, v));
        }
    }
    out
}

/// `Δ_Y` on a monomial: each `y_n` is primitive, so this sums over all ways of
/// splitting the letters into two complementary subsequences.
pub fn y_coproduct_word(y: &YWord) -> LinComb<(YWord, YWord)> {
    let n = y.depth();
    assert!(n < 64);
    let mut out = LinComb::zero();
    for mask in 0u64..(1u64 << n) {
        let mut l = Vec::new();
        let mut r = Vec::new();
        for (i, &v) in y.0.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                l.push(v);
            } else {
                r.push(v);
            }
        }
        out.add_term((YWord(l), YWord(r)), Rational::one());
    }
    out
}

pub fn y_coproduct(p: &YPoly) -> LinComb<(YWord, YWord)> {
    let mut out = LinComb::zero();
    for (y, c) in p.iter() {
        out.add_scaled(c, &y_coproduct_word(y));
    }
    out
}

/// All `y`-words of the given depth and weight, in increasing order.
pub fn ywords_of_bidegree(m: usize, k: usize) -> Vec<YWord> {
    crate::combinat::compositions(k, m)
        .into_iter()
        .map(|c| YWord(c.into_iter().map(|n| n as u32).collect()))
        .collect()
}
