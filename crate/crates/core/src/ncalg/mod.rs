//! The free algebra `K<x,z>`: words, the shuffle Hopf structure, the Ihara
//! bracket and its dual, and the projection onto `K<Y>`.

mod ihara;
mod ops;
mod word;
mod yword;

use crate::lincomb::{LinComb, Tensor};

pub use ihara::{co_d, co_d_word, co_ihara, co_ihara_word, d_op, d_op_word, derivation_dw, ihara_bracket, split_word, Side};
pub use ops::{
    concat, coproduct_dec, coproduct_dec_word, coproduct_sh, coproduct_sh_word, monomial, multiply_tensor, pairing,
    pairing2, shuffle, shuffle_words,
};
pub use word::{word_basis, words_of_bidegree, words_of_weight, Letter, Word, MAX_WORD_LEN};
pub use yword::{
    project_pi, project_word, section_i, section_word, y_coproduct, y_coproduct_word, y_shuffle, y_shuffle_words,
    ywords_of_bidegree, YPoly, YWord,
};

pub(crate) use yword::interleavings;

/// An element of `K<x,z>`.
pub type NcPoly = LinComb<Word>;

/// An element of `K<x,z> ⊗ K<x,z>`.
pub type Tensor2 = Tensor<Word>;

/// One `{word, coeff}` entry of the JSON form of an [`NcPoly`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct NcTerm {
    pub word: Word,
    pub coeff: crate::rational::Rational,
}

/// One `{left, right, coeff}` entry of the JSON form of a [`Tensor2`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TensorTerm {
    pub left: Word,
    pub right: Word,
    pub coeff: crate::rational::Rational,
}

pub fn poly_to_json(p: &NcPoly) -> Vec<NcTerm> {
    p.iter()
        .map(|(w, c)| NcTerm {
            word: *w,
            coeff: c.clone(),
        })
        .collect()
}

pub fn poly_from_json(terms: &[NcTerm]) -> NcPoly {
    NcPoly::from_terms(terms.iter().map(|t| (t.word, t.coeff.clone())))
}

pub fn tensor_to_json(t: &Tensor2) -> Vec<TensorTerm> {
    t.iter()
        .map(|((l, r), c)| TensorTerm {
            left: *l,
            right: *r,
            coeff: c.clone(),
        })
        .collect()
}

pub fn tensor_from_json(terms: &[TensorTerm]) -> Tensor2 {
    Tensor2::from_terms(terms.iter().map(|t| ((t.left, t.right), t.coeff.clone())))
}

/// Whether the letter sequence is strictly smaller than each of its proper
/// suffixes.
pub fn is_lyndon<T: Ord>(s: &[T]) -> bool {
    !s.is_empty() && (1..s.len()).all(|i| s < &s[i..])
}

pub fn is_lyndon_word(w: &Word) -> bool {
    is_lyndon(&w.letters().collect::<Vec<_>>())
}
