//! Products and coproducts on `K<x,z>`.

use crate::lincomb::LinComb;
use crate::rational::Rational;

use super::word::Word;
use super::{NcPoly, Tensor2};

/// Concatenation product.
pub fn concat(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_term(u.concat(v), cu * cv);
        }
    }
    out
}

/// Iterates over the `len`-bit masks with exactly `ones` bits set.
fn masks(len: usize, ones: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << len;
    let mut next = if ones == 0 { Some(0u64) } else { Some((1u64 << ones) - 1) };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit && !(cur == 0 && len == 0) {
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur)
    })
}

/// Shuffle of two words: the sum of all interleavings, with multiplicity.
pub fn shuffle_words(u: &Word, v: &Word) -> NcPoly {
    let (p, q) = (u.len(), v.len());
    let n = p + q;
    let mut out = NcPoly::zero();
    for mask in masks(n, p) {
        let (mut i, mut j) = (0, 0);
        let mut w = Word::EMPTY;
        for pos in 0..n {
            if (mask >> pos) & 1 == 1 {
                w = w.push(u.letter(i));
                i += 1;
            } else {
                w = w.push(v.letter(j));
                j += 1;
            }
        }
        out.add_term(w, Rational::one());
    }
    out
}

pub fn shuffle(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            out.add_scaled(&(cu * cv), &shuffle_words(u, v));
        }
    }
    out
}

/// The coproduct for which `x` and `z` are primitive. The coefficient of
/// `u ⊗ v` counts the ways of splitting `w` into complementary subsequences
/// `u` and `v`.
pub fn coproduct_sh_word(w: &Word) -> Tensor2 {
    let n = w.len();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut out = Tensor2::zero();
    for mask in 0..=full {
        out.add_term((w.select(mask), w.select(full & !mask)), Rational::one());
    }
    out
}

pub fn coproduct_sh(p: &NcPoly) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (w, c) in p.iter() {
        out.add_scaled(c, &coproduct_sh_word(w));
    }
    out
}

/// Deconcatenation, the coproduct dual to the shuffle product.
pub fn coproduct_dec_word(w: &Word) -> Tensor2 {
    Tensor2::from_terms((0..=w.len()).map(|i| ((w.prefix(i), w.suffix_from(i)), Rational::one())))
}

pub fn coproduct_dec(p: &NcPoly) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (w, c) in p.iter() {
        out.add_scaled(c, &coproduct_dec_word(w));
    }
    out
}

/// The canonical pairing, with words orthonormal.
pub fn pairing(a: &NcPoly, b: &NcPoly) -> Rational {
    a.pairing(b)
}

/// The induced pairing on tensor squares.
pub fn pairing2(a: &Tensor2, b: &Tensor2) -> Rational {
    a.pairing(b)
}

/// Multiplication `m(a ⊗ b) = ab` extended linearly.
pub fn multiply_tensor(t: &Tensor2) -> NcPoly {
    let mut out = NcPoly::zero();
    for ((a, b), c) in t.iter() {
        out.add_term(a.concat(b), c.clone());
    }
    out
}

/// A homogeneous polynomial as a formal sum of words.
pub fn monomial(w: Word) -> NcPoly {
    LinComb::basis(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> NcPoly {
        monomial(w(s))
    }

    #[test]
    fn mask_enumeration() {
        assert_eq!(masks(0, 0).count(), 1);
        assert_eq!(masks(4, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(masks(4, 2).count(), 6);
        assert_eq!(masks(3, 3).collect::<Vec<_>>(), vec![7]);
    }

    #[test]
    fn shuffle_small_cases() {
        let s = shuffle(&p("x"), &p("z"));
        assert_eq!(s, &p("xz") + &p("zx"));
        let s = shuffle(&p("x"), &p("x"));
        assert_eq!(s.coeff(&w("xx")), Rational::from_int(2));
        let s = shuffle(&p("xz"), &p("x"));
        assert_eq!(s.coeff(&w("xxz")), Rational::from_int(2));
        assert_eq!(s.coeff(&w("xzx")), Rational::one());
        assert_eq!(shuffle(&p(""), &p("xz")), p("xz"));
    }

    #[test]
    fn coproduct_of_letters_is_primitive() {
        let d = coproduct_sh(&p("x"));
        assert_eq!(d, Tensor2::from_terms([((w("x"), w("")), Rational::one()), ((w(""), w("x")), Rational::one())]));
    }

    #[test]
    fn deconcatenation() {
        let d = coproduct_dec(&p("xz"));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&(w("x"), w("z"))), Rational::one());
    }
}
